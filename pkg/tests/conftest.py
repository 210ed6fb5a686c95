import random

import pytest

from actegory import textio
from actegory.cli import fixture_paths
from actegory.library import standard_library
from actegory.lawsuite.fuzz import random_action, random_profunctor


@pytest.fixture(scope="session")
def lib():
    return standard_library()


@pytest.fixture(scope="session")
def ws():
    w = textio.Workspace()
    for p in fixture_paths():
        w.load(p)
    return w


@pytest.fixture
def rng():
    return random.Random(1234)


def random_pairs(lib, rng, n=6, fiber=2):
    """A few (X, A, M) triples over the small library categories."""
    out = []
    for name in ("2", "Iso", "PP", "C2", "V", "Span"):
        X = lib[name]
        for _ in range(n):
            out.append((X, random_action(rng, X, "left", fiber), random_action(rng, X, "right", fiber)))
    return out


def random_profunctors(lib, rng, n=5, fiber=2):
    return [random_profunctor(rng, lib[k], fiber) for k in ("2", "Iso", "PP", "C2", "Span") for _ in range(n)]
