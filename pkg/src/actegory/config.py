"""Size bounds for inputs, derived constructions and searches."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace

ENV_VAR = "ACTEGORY_SIZE_LIMIT"


@dataclass(frozen=True)
class SizeLimits:
    """Hard bounds; exceeding any of them raises SizeLimitExceeded.

    ``max_objects``/``max_arrows``/``max_fiber`` bound user-supplied values
    (parsed files, fuzzed instances).  Internally derived values such as
    ``X^op x X`` or function sets are bounded by the ``derived_*`` fields,
    and every backtracking search by ``max_search`` visited nodes.
    """

    max_objects: int = 8
    max_arrows: int = 40
    max_fiber: int = 6
    derived_arrows: int = 6000
    derived_fiber: int = 4096
    max_search: int = 400_000
    max_results: int = 20_000


DEFAULT = SizeLimits()
_current = DEFAULT


def _from_env() -> SizeLimits:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return DEFAULT
    raw = raw.strip()
    if raw.startswith("{"):
        return replace(DEFAULT, **json.loads(raw))
    # "objects,arrows,fiber" shorthand
    parts = [int(p) for p in raw.split(",") if p.strip()]
    names = ["max_objects", "max_arrows", "max_fiber"]
    return replace(DEFAULT, **dict(zip(names, parts)))


def limits() -> SizeLimits:
    return _current


def set_limits(new: SizeLimits | None = None, **changes) -> SizeLimits:
    """Replace the active limits, returning the previous value."""
    global _current
    old = _current
    base = new if new is not None else _current
    _current = replace(base, **changes) if changes else base
    return old


_current = _from_env()
