from math import comb

import pytest

from actegory.errors import AssociativityViolation, IdentityViolation, MissingComposite, ValidationError
from actegory.fincat import (
    FinCat,
    full_subcategory,
    functors,
    identity_functor,
    nat_isos_between_functors,
    opposite,
    product,
    twisted,
    validate_category,
)
from actegory.library import chain, cyclic, finsets, walking_arrow


# oracles: closed-form counts


@pytest.mark.parametrize("n,m", [(1, 3), (2, 2), (3, 3), (2, 4)])
def test_functors_between_chains_are_monotone_maps(n, m):
    assert len(list(functors(chain(n), chain(m)))) == comb(n + m - 1, n)


@pytest.mark.parametrize("n,m,expected", [(2, 2, 2), (3, 3, 3), (2, 3, 1), (3, 2, 1), (4, 2, 2)])
def test_functors_between_cyclic_groups_are_homomorphisms(n, m, expected):
    assert len(list(functors(cyclic(n), cyclic(m)))) == expected


def test_finsets_has_every_function():
    S = finsets(2)
    # 0^0 + 0^1 + 0^2 + 1^0 + 1^1 + 1^2 + 2^0 + 2^1 + 2^2
    assert len(S.arrows) == sum(m**n for n in range(3) for m in range(3))


def test_twisted_is_op_times_x(lib):
    for X in lib.values():
        T = twisted(X)
        assert len(T.objects) == len(X.objects) ** 2
        assert len(T.arrows) == len(X.arrows) ** 2


def test_product_sizes(lib):
    X, Y = lib["2"], lib["C3"]
    P = product(X, Y)
    assert len(P.objects) == 2 and len(P.arrows) == 3 * 3


# structure


def test_opposite_is_an_involution(lib):
    for X in lib.values():
        Xo = opposite(X)
        assert opposite(Xo) is X
        for f, (s, t) in X.arrows.items():
            assert Xo.arrows[f] == (t, s)


def test_identity_functor_and_subcategory(lib):
    X = lib["Sq"]
    assert identity_functor(X).validate() is not None
    S, inc = full_subcategory(X, ["a", "d"])
    assert set(S.objects) == {"a", "d"}
    assert len(S.hom("a", "d")) == 1


def test_groupoid_and_preorder_flags(lib):
    assert lib["Iso"].is_groupoid() and lib["C3"].is_groupoid()
    assert not lib["2"].is_groupoid()
    assert lib["V"].is_preorder() and not lib["PP"].is_preorder()


def test_natural_isos_between_functors(lib):
    Iso = lib["Iso"]
    one = lib["1"]
    fa, fb = [f for f in functors(one, Iso)]
    assert list(nat_isos_between_functors(fa, fb))


# validation


def test_non_associative_table_names_the_triple():
    raw = {
        "name": "B",
        "objects": ["a"],
        "arrows": [("f", "a", "a"), ("g", "a", "a")],
        "composition": {("f", "f"): "g", ("g", "g"): "f", ("f", "g"): "f", ("g", "f"): "g"},
    }
    with pytest.raises(AssociativityViolation, match=r"f"):
        validate_category(raw)


def test_missing_composite_is_rejected():
    raw = {"objects": ["a", "b", "c"], "arrows": [("f", "a", "b"), ("g", "b", "c")]}
    with pytest.raises(MissingComposite):
        validate_category(raw)


def test_bad_identity_is_rejected():
    raw = {"objects": ["a"], "arrows": [("f", "a", "a")], "composition": {("f", "f"): "f"}}
    assert validate_category(raw)  # an idempotent is fine
    raw = {"objects": ["a", "b"], "arrows": [("f", "a", "b")], "composition": {("f", "id_a"): "id_a"}}
    with pytest.raises(ValidationError):
        validate_category(raw)


def test_structural_equality_ignores_names():
    a, b = walking_arrow(), walking_arrow()
    assert a == b and isinstance(a, FinCat)
