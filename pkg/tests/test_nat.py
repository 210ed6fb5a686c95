from actegory import action as ac
from actegory.nat import (
    NatTransform,
    brute_force_nat_count,
    count_nats,
    enumerate_nats,
    find_natural_iso,
    identity_nat,
    is_natural,
    iter_nats,
)

from conftest import random_pairs


def test_enumeration_matches_brute_force(lib, rng):
    pairs = random_pairs(lib, rng, n=3)
    for (X, A, M), (Y, B, N) in zip(pairs, pairs[1:]):
        if X is not Y:
            continue
        assert count_nats(A, B) == brute_force_nat_count(A, B)
        assert count_nats(M, N) == brute_force_nat_count(M, N)


def test_every_enumerated_nat_is_natural(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        for t in enumerate_nats(M, M):
            assert is_natural(M, M, t.components)


def test_iso_search_agrees_with_filtering(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        isos = list(iter_nats(A, A, iso=True))
        assert len(isos) == sum(1 for t in enumerate_nats(A, A) if t.is_iso())
        assert find_natural_iso(A, A) is not None


def test_identity_and_inverse(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=1):
        i = identity_nat(M)
        assert i.is_iso() and i.inverse() == i
        assert i.then(i) == i


def test_no_iso_between_different_sizes(lib):
    X = lib["2"]
    assert find_natural_iso(ac.terminal_left(X), ac.constant_left(X, ["p", "q"])) is None
    assert isinstance(identity_nat(ac.terminal_left(X)), NatTransform)
