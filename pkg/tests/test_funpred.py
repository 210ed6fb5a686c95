import pytest

from actegory import action as ac
from actegory import funpred as fp
from actegory.fincat import full_subcategory, functors, identity_functor, point, to_terminal
from actegory.nat import find_natural_iso


# known answers


def test_limits_of_the_identity_diagram(lib):
    X = lib["2"]
    assert fp.conical_limit(identity_functor(X)).value == "a"
    assert fp.conical_colimit(identity_functor(X)).value == "b"
    assert not fp.conical_colimit(identity_functor(lib["D2"]))


def test_fully_faithful_examples(lib):
    S, inc = full_subcategory(lib["Sq"], ["a", "b", "d"])
    assert fp.is_fully_faithful(inc).holds
    assert not fp.is_fully_faithful(to_terminal(lib["2"])).holds
    assert not fp.is_fully_faithful(to_terminal(lib["C2"])).holds


def test_final_and_initial_points(lib):
    X = lib["2"]
    top, bottom = point(X, "b"), point(X, "a")
    assert fp.is_final(top).holds and not fp.is_final(bottom).holds
    assert fp.is_initial(bottom).holds and not fp.is_initial(top).holds


def test_identity_has_every_property(lib):
    for name in ("2", "Iso", "PP", "C3", "Sq"):
        i = identity_functor(lib[name])
        for r in (
            fp.is_fully_faithful(i),
            fp.is_absolutely_dense(i),
            fp.is_left_dense(i),
            fp.is_right_dense(i),
            fp.is_final(i),
            fp.is_initial(i),
            fp.is_left_adjunctible(i),
            fp.is_right_adjunctible(i),
        ):
            assert r.holds and r.agree, (name, r.name, r.disagreements)


def test_collapsing_the_arrow_is_adjunctible_both_ways(lib):
    f = to_terminal(lib["2"])
    assert fp.is_left_adjunctible(f).holds and fp.is_right_adjunctible(f).holds
    assert fp.is_absolutely_dense(f).holds


def test_collapse_is_absolutely_dense_iff_connected(lib):
    for name, connected in (("C2", True), ("Sq", True), ("D2", False), ("PP", True)):
        r = fp.is_absolutely_dense(to_terminal(lib[name]))
        assert r.holds == connected and r.agree, name


def test_adjoint_pair_by_units(lib):
    X = lib["2"]
    bang = to_terminal(X)
    assert fp.check_adjoint_pair(point(X, "a"), bang).holds  # a -| !
    assert fp.check_adjoint_pair(bang, point(X, "b")).holds  # ! -| b
    assert not fp.check_adjoint_pair(point(X, "b"), bang).holds


# characterizations agree on every functor between small shapes


@pytest.mark.parametrize("src,dst", [("2", "Iso"), ("Iso", "2"), ("PP", "2"), ("2", "V"), ("C2", "C2"), ("Span", "2")])
def test_characterizations_agree(lib, src, dst):
    for f in functors(lib[src], lib[dst]):
        for check in (fp.is_fully_faithful, fp.is_left_dense, fp.is_right_dense, fp.is_final, fp.is_initial):
            r = check(f)
            assert r.agree, (check.__name__, f, r.disagreements)


# Kan extensions


def test_kan_along_identity_is_the_functor(lib):
    X = lib["Sq"]
    g = identity_functor(X)
    for kan in (fp.kan_left, fp.kan_right):
        ext = kan(identity_functor(X), g)
        assert ext.exists and ext.functor == g


def test_kan_pointwise_matches_comma(lib):
    X, Y = lib["2"], lib["Iso"]
    for f in functors(X, Y):
        for g in functors(X, lib["2"]):
            left = fp.kan_left(f, g)
            comma = fp.kan_left_by_comma(f, g)
            if left.exists:
                assert all(comma[y].exists and comma[y].value == left.functor(y) for y in Y.objects)


def test_weighted_colimit_of_representable_weight(lib):
    # colimits weighted by y(x) evaluate the diagram at x
    X = lib["Span"]
    f = identity_functor(X)
    for x in X.objects:
        assert fp.weighted_colimit(ac.representable_left(X, x), f).value == x
        assert fp.weighted_limit(ac.representable_right(X, x), f).value == x


def test_partial_object_reports_absence(lib):
    r = fp.conical_limit(identity_functor(lib["D2"]))
    assert not r.exists and r.reason
    assert find_natural_iso(ac.terminal_left(lib["2"]), ac.terminal_left(lib["2"])) is not None
