"""Presheaves and copresheaves on finite categories, their complements,
comprehension of endoprofunctors, Kan extensions, and a law checker."""

from .action import LeftAction, RightAction
from .catover import OverCat
from .config import SizeLimits, limits, set_limits
from .errors import ActegoryError, ParseError, SizeLimitExceeded, ValidationError
from .fincat import FinCat, FinSet, FunctorMap, validate_category
from .nat import NatTransform, SetFunctor
from .profunctor import EndoProfunctor
from .textio import Workspace, dumps, load, loads

__version__ = "0.1.0"

__all__ = [
    "ActegoryError",
    "EndoProfunctor",
    "FinCat",
    "FinSet",
    "FunctorMap",
    "LeftAction",
    "NatTransform",
    "OverCat",
    "ParseError",
    "RightAction",
    "SetFunctor",
    "SizeLimitExceeded",
    "SizeLimits",
    "ValidationError",
    "Workspace",
    "dumps",
    "limits",
    "load",
    "loads",
    "set_limits",
    "validate_category",
]
