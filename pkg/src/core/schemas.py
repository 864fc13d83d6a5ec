"""
Document schemas for files written and read by the CLI.
Separate from domain models so the on-disk format can be versioned.
Every document carries the "schema" tag.
"""
import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from .errors import TverbergInputError
from .model import Configuration, Witness
from .validation import VerificationReport


def _schema_tag() -> str:
    return settings.schema_version


class VerificationCheckResult(BaseModel):
    """Result of a single verification check."""
    check_name: str = Field(..., description="Name of the verification check")
    passed: bool = Field(..., description="Whether the check passed")
    message: str = Field(..., description="Human-readable result message")


class VerificationDocument(BaseModel):
    """Output of the verify command."""
    model_config = ConfigDict(populate_by_name=True)

    schema_tag: str = Field(default_factory=_schema_tag, alias="schema")
    status: Literal["passed", "failed"] = Field(..., description="Overall verification status")
    total_checks: int
    passed_checks: int
    failed_checks: int
    checks: List[VerificationCheckResult]

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationDocument":
        failed = len(report.failures)
        return cls(
            status="passed" if report.passed else "failed",
            total_checks=len(report.checks),
            passed_checks=len(report.checks) - failed,
            failed_checks=failed,
            checks=[
                VerificationCheckResult(check_name=c.check_name, passed=c.passed, message=c.message)
                for c in report.checks
            ],
        )


class UnavoidabilityDocument(BaseModel):
    """Output of the unavoidable command."""
    model_config = ConfigDict(populate_by_name=True)

    schema_tag: str = Field(default_factory=_schema_tag, alias="schema")
    complex: str
    N: int
    r: int
    mode: str
    unavoidable: bool
    counterexample: Optional[List[List[int]]] = None
    families_checked: int


def check_schema(data: Dict[str, Any]) -> Dict[str, Any]:
    """
    Drop the schema tag after checking it; a missing tag is accepted.

    Raises:
        TverbergInputError: unknown schema tag or a non-object document
    """
    if not isinstance(data, dict):
        raise TverbergInputError("Document must be a JSON/YAML object")
    data = dict(data)
    tag = data.pop("schema", None)
    if tag is not None and tag != settings.schema_version:
        raise TverbergInputError(
            f"Unsupported schema {tag!r}, expected {settings.schema_version!r}"
        )
    return data


def to_document(model: BaseModel) -> Dict[str, Any]:
    """JSON-ready dict with the schema tag first and no null fields."""
    data = model.model_dump(mode="json", by_alias=True, exclude_none=True)
    data.pop("schema", None)
    return {"schema": settings.schema_version, **data}


def dumps(document: Dict[str, Any]) -> str:
    """Deterministic text form of a document."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def load_configuration(data: Dict[str, Any]) -> Configuration:
    return Configuration.model_validate(check_schema(data))


def load_witness(data: Dict[str, Any]) -> Witness:
    """Accept a bare witness document or a search outcome holding one."""
    data = check_schema(data)
    if "status" in data:
        if data.get("witness") is None:
            raise TverbergInputError(f"Search outcome with status {data['status']!r} has no witness")
        data = data["witness"]
    return Witness.model_validate(data)
