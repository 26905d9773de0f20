"""Compliance checking against the ECODOM passive-cooling standard."""

__version__ = "0.1.0"

from .ingest import ParseError, parse_building, serialize_building  # noqa: E402
from .model import BuildingModel, validate_model  # noqa: E402
from .rules import Finding, RuleId, Severity, check_all  # noqa: E402

__all__ = [
    "BuildingModel",
    "Finding",
    "ParseError",
    "RuleId",
    "Severity",
    "check_all",
    "parse_building",
    "serialize_building",
    "validate_model",
]
