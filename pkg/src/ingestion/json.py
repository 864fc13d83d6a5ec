"""
JSON document ingestion with position-annotated errors.
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

from .base import IngestionSource


class JSONIngestion(IngestionSource):
    """Reads documents from JSON files or inline JSON text."""

    @property
    def source_type(self) -> str:
        return "json"

    def parse(self, source: Union[str, Path]) -> Dict[str, Any]:
        try:
            with open(source, 'r', encoding='utf-8') as f:
                text = f.read()
        except FileNotFoundError:
            raise ValueError(f"JSON file not found: {source}")
        except OSError as e:
            raise ValueError(f"Failed to read JSON file: {e}")
        return self.loads(text, str(source))

    def loads(self, text: str, origin: str = "<inline>") -> Dict[str, Any]:
        """
        Raises:
            ValueError: malformed JSON (with line, column and character
                position) or a non-object document
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(
                f"Invalid JSON in {origin} at line {e.lineno} column {e.colno} "
                f"(position {e.pos}): {e.msg}"
            )
        if not isinstance(data, dict):
            raise ValueError(f"{origin} must contain a JSON object at the root level")
        return data
