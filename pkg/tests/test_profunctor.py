from actegory import action as ac
from actegory import catover as co
from actegory import profunctor as pro
from actegory.lawsuite.oracles import coend_classes, partition_of, strong_coend_classes
from actegory.nat import count_nats, find_natural_iso

from conftest import random_pairs, random_profunctors


# oracles first


def test_coend_matches_coequalizer_oracle(lib, rng):
    for H in random_profunctors(lib, rng):
        assert partition_of(pro.coend(H)) == set(coend_classes(H))


def test_strong_coend_matches_component_oracle(lib, rng):
    for H in random_profunctors(lib, rng):
        sc = pro.strong_coend(H)
        origin = pro.comprehend(H).total.origin
        mine = {frozenset(origin[o] for o in sc.payload[lab]) for lab in sc.elements}
        assert mine == set(strong_coend_classes(H))


def test_hom_profunctor_values(lib):
    for X in lib.values():
        H = pro.hom_profunctor(X)
        for x in X.objects:
            for y in X.objects:
                assert len(H.at(x, y)) == len(X.hom(x, y))


# ends, coends and comprehension


def test_end_of_function_profunctor_counts_nats(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        assert len(pro.end(pro.hom_arrow(M, M))) == count_nats(M, M)
        assert len(pro.end(pro.hom_arrow_left(A, A))) == count_nats(A, A)


def test_end_two_ways(lib, rng):
    for H in random_profunctors(lib, rng):
        assert len(pro.end(H)) == len(pro.end_as_nats(H))


def test_coend_of_outer_product_is_mixed_tensor(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        H = pro.outer_product(A, M)
        n = len(ac.mixed_tensor(A, M))
        assert len(pro.coend(H)) == len(pro.strong_coend(H)) == n


def test_strong_coend_is_a_quotient_of_the_coend(lib, rng):
    for H in random_profunctors(lib, rng):
        assert len(pro.strong_coend(H)) <= len(pro.coend(H))


def test_diamond_of_identity_is_hom(lib):
    for X in lib.values():
        D = pro.diamond(co.identity_over(X))
        assert find_natural_iso(D, pro.hom_profunctor(X)) is not None


def test_comprehension_objects_are_diagonal_elements(lib, rng):
    for H in random_profunctors(lib, rng):
        p = pro.comprehend(H)
        X = H.X
        assert len(p.total.objects) == sum(len(H.at(x, x)) for x in X.objects)
        assert len(pro.end(H)) == len(co.sections(p))
        assert len(pro.strong_coend(H)) == len(co.components(p))


def test_strong_dinaturals_two_ways(lib, rng):
    Hs = random_profunctors(lib, rng, n=2, fiber=2)
    for H, K in zip(Hs, Hs[1:]):
        if H.X is not K.X:
            continue
        strong = pro.strong_dinaturals(H, K)
        assert len(strong) == len(pro.strong_dinaturals_direct(H, K))
        assert len(strong) <= len(pro.dinaturals(H, K))


def test_dinaturals_out_of_outer_product_are_strong(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=1):
        H = pro.outer_product(A, M)
        K = pro.hom_profunctor(X)
        assert len(pro.dinaturals(H, K)) == len(pro.strong_dinaturals(H, K))


def test_sides_commute(lib, rng):
    for H in random_profunctors(lib, rng):
        H.check_sides_commute()
