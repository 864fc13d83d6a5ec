"""
Abstract base class for document sources.
Configurations, witnesses and constraint sets are read through the same
interface whatever the file format.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict


class IngestionSource(ABC):
    """
    Base class for document sources (JSON, YAML).

    ``parse`` returns the raw mapping; validation into domain models is
    done by the caller.
    """

    @abstractmethod
    def parse(self, source: Any) -> Dict[str, Any]:
        """
        Parse the input source and return the raw document.

        Raises:
            ValueError: If the file cannot be read or is not a mapping
        """

    @abstractmethod
    def loads(self, text: str, origin: str = "<inline>") -> Dict[str, Any]:
        """Parse document text, e.g. an inline --constraints argument."""

    @property
    @abstractmethod
    def source_type(self) -> str:
        """Source type identifier for logging (e.g. "json", "yaml")."""
