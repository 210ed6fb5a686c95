import pytest

from actegory import action as ac
from actegory.fincat import functors, point, to_terminal
from actegory.lawsuite.oracles import mixed_tensor_classes, partition_of
from actegory.nat import brute_force_nat_count, count_nats, find_natural_iso

from conftest import random_pairs


# oracles: terminal base, where every construction is a plain set operation


def test_complement_on_terminal_base_is_function_set(lib):
    one = lib["1"]
    A = ac.constant_left(one, ["a1", "a2"])
    M = ac.constant_right(one, ["m1", "m2", "m3"])
    assert len(ac.complement(A, M)("*")) == 9
    assert len(ac.oodot(A, M)("*")) == 6
    assert len(ac.mixed_tensor(A, M)) == 6


def test_count_nats_matches_brute_force(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=3):
        B = ac.complement_r(M, A)
        assert count_nats(A, B) == brute_force_nat_count(A, B)
        assert count_nats(M, M) == brute_force_nat_count(M, M)


def test_mixed_tensor_matches_oracle(lib, rng):
    for X, A, M in random_pairs(lib, rng):
        assert partition_of(ac.mixed_tensor(A, M)) == set(mixed_tensor_classes(A, M))


def test_exists_and_forall_to_the_point_are_colimit_and_limit(ws):
    A = ws["A"]
    bang = to_terminal(A.base)
    # elements p ~ r and q: two components; one compatible family (r, p)
    assert len(ac.exists(bang, A)("*")) == 2
    assert len(ac.forall(bang, A)("*")) == 1


# laws on random inputs


def test_yoneda_counts(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        for x in X.objects:
            assert count_nats(ac.representable_left(X, x), A) == len(A(x))
            assert count_nats(ac.representable_right(X, x), M) == len(M(x))


def test_complement_trinity_counts(lib, rng):
    pairs = random_pairs(lib, rng, n=2)
    for (X, A, M), (_, _, N) in zip(pairs, pairs[1:]):
        if X is not N.base:
            continue
        one = count_nats(N, ac.complement(A, M))
        assert one == count_nats(ac.oodot(A, N), M) == count_nats(A, ac.triangleright(N, M))


def test_substitution_adjunctions(lib, rng):
    X, Y = lib["2"], lib["Iso"]
    for f in functors(X, Y):
        for _ in range(3):
            from actegory.lawsuite.fuzz import random_action

            A = random_action(rng, X, "left", 2)
            B = random_action(rng, Y, "left", 2)
            assert count_nats(ac.exists(f, A), B) == count_nats(A, ac.substitute(f, B))
            assert count_nats(ac.substitute(f, B), A) == count_nats(B, ac.forall(f, A))


def test_exists_unit_lands_in_the_image(lib):
    X = lib["2"]
    f = point(X, "b")
    E = ac.exists(f, ac.terminal_left(f.domain))
    e = ac.exists_unit(E, f, f.domain.objects[0], ac.STAR)
    assert e in E("b")


def test_copower_and_power_sizes(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        for x in X.objects:
            assert len(ac.copower(["v", "w"], A)(x)) == 2 * len(A(x))
            assert len(ac.power(["v", "w"], M)(x)) == len(M(x)) ** 2


def test_swap_on_groupoid(lib, rng):
    from actegory.lawsuite.fuzz import random_action

    X = lib["C3"]
    M = random_action(rng, X, "right", 3)
    S = ac.swap(M)
    assert S.variance == "left"
    assert ac.swap(S) == M or find_natural_iso(ac.swap(S), M) is not None


def test_base_mismatch(lib):
    from actegory.errors import BaseMismatch

    A = ac.terminal_left(lib["2"])
    M = ac.terminal_right(lib["Iso"])
    with pytest.raises(BaseMismatch):
        ac.complement(A, M)
