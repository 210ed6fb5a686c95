"""Law registry, instance fuzzing and the verification runner."""

from .fuzz import FuzzConfig, Instance, fuzz, make_instance
from .registry import EXPECTED_FAMILIES, REGISTRY, LawSpec, by_id, family, select
from .runner import Report, Verdict, check_law, deserialize, recheck, run_all, run_law, serialize

__all__ = [
    "EXPECTED_FAMILIES",
    "FuzzConfig",
    "Instance",
    "LawSpec",
    "REGISTRY",
    "Report",
    "Verdict",
    "by_id",
    "check_law",
    "deserialize",
    "family",
    "fuzz",
    "make_instance",
    "recheck",
    "run_all",
    "run_law",
    "select",
    "serialize",
]
