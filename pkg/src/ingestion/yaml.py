"""
YAML document ingestion.
"""
import yaml
from pathlib import Path
from typing import Any, Dict, Union

from .base import IngestionSource


class YAMLIngestion(IngestionSource):
    """Reads documents from YAML files."""

    @property
    def source_type(self) -> str:
        return "yaml"

    def parse(self, source: Union[str, Path]) -> Dict[str, Any]:
        """
        Parse a YAML file.

        Raises:
            ValueError: If the file cannot be read or YAML is invalid
        """
        try:
            with open(source, 'r', encoding='utf-8') as f:
                text = f.read()
        except FileNotFoundError:
            raise ValueError(f"YAML file not found: {source}")
        except OSError as e:
            raise ValueError(f"Failed to read YAML file: {e}")
        return self.loads(text, str(source))

    def loads(self, text: str, origin: str = "<inline>") -> Dict[str, Any]:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            if mark is not None:
                raise ValueError(
                    f"Invalid YAML in {origin} at line {mark.line + 1} column {mark.column + 1}: "
                    f"{getattr(e, 'problem', e)}"
                )
            raise ValueError(f"Invalid YAML in {origin}: {e}")

        if not isinstance(data, dict):
            raise ValueError(f"{origin} must contain a mapping at the root level")
        return data
