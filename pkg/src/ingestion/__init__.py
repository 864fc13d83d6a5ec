import logging
from pathlib import Path
from typing import Any, Dict, Union

from ..config import settings
from .base import IngestionSource
from .json import JSONIngestion
from .yaml import YAMLIngestion

logger = logging.getLogger("tverberg.ingestion")


def source_for(path: Union[str, Path]) -> IngestionSource:
    """Pick the reader from the file extension."""
    suffix = Path(path).suffix.lower()
    if suffix not in settings.allowed_file_extensions:
        allowed = ", ".join(settings.allowed_file_extensions)
        raise ValueError(f"Unsupported file type {suffix or '(none)'!r}, use one of {allowed}")
    if suffix == ".json":
        return JSONIngestion()
    return YAMLIngestion()


def read_document(path: Union[str, Path]) -> Dict[str, Any]:
    if not Path(path).exists():
        raise ValueError(f"File not found: {path}")
    source = source_for(path)
    document = source.parse(path)
    logger.debug("Document read", extra={"path": str(path), "source_type": source.source_type})
    return document
