from actegory import action as ac
from actegory import catover as co
from actegory.fincat import functors, point, to_terminal
from actegory.nat import find_natural_iso

from conftest import random_pairs


def test_elements_have_one_object_per_element(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        assert len(co.elements_left(A).total.objects) == A.total_size()
        assert len(co.elements_right(M).total.objects) == M.total_size()


def test_elements_are_discrete_fibrations(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        assert co.is_discrete_fibration(co.elements_left(A))
        assert co.is_discrete_opfibration(co.elements_right(M))


def test_reflection_of_a_discrete_fibration_is_itself(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        p = co.elements_left(A)
        assert find_natural_iso(co.diamond_left(p), A) is not None
        assert find_natural_iso(co.square_left(p), A) is not None


def test_slice_is_arrows_into_the_object(lib):
    X = lib["Sq"]
    for x in X.objects:
        S = co.slice(X, x)
        assert len(S.total.objects) == sum(len(X.hom(z, x)) for z in X.objects)
        assert len(co.coslice(X, x).total.objects) == sum(len(X.hom(x, z)) for z in X.objects)


def test_sections_and_components(lib):
    for X in lib.values():
        assert len(co.sections(co.identity_over(X))) == 1
    assert len(co.components(lib["D2"])) == 2
    assert len(co.components(lib["Sq"])) == 1


def test_over_hom_counts_sections(lib, rng):
    # maps over X from id_X into the elements of A are the sections of A
    from actegory.nat import count_nats

    for X, A, M in random_pairs(lib, rng, n=2):
        p = co.elements_left(A)
        assert co.count_over(co.identity_over(X), p) == count_nats(ac.terminal_left(X), A)


def test_pullback_along_a_point_is_the_fiber(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=1):
        for x in X.objects:
            q = co.pullback(point(X, x), co.elements_right(M))
            assert len(q.total.objects) == len(M(x))


def test_fibered_product_is_product_of_fibers(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=1):
        f = co.fibered_product(co.elements_left(A), co.elements_right(M))
        assert len(f.total.objects) == sum(len(A(x)) * len(M(x)) for x in X.objects)


def test_as_over_keeps_the_functor(lib):
    for f in functors(lib["2"], lib["Iso"]):
        assert co.as_over(f).projection is f
    assert len(co.as_over(to_terminal(lib["Sq"])).base.objects) == 1
