import pytest

from actegory import twovalued as tv
from actegory.errors import ValidationError


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29)])
def test_number_of_topologies(n, count):
    assert len(tv.all_topologies(n)) == count


@pytest.mark.parametrize("n,labelled,classes", [(0, 1, 1), (1, 1, 1), (2, 3, 2), (3, 19, 5), (4, 219, 16)])
def test_number_of_posets(n, labelled, classes):
    assert len(tv.all_posets(n)) == labelled
    assert len(tv.all_posets(n, up_to_iso=True)) == classes


def test_closure_and_interior_are_dual():
    for X in tv.all_topologies(3):
        for S in tv.subsets(X.points):
            assert X.closure(S) == X.whole - X.interior(X.whole - S)
            assert X.interior(S) <= S <= X.closure(S)


def test_specialization_order_recovers_the_poset():
    for P in tv.all_posets(3):
        assert tv.FinitePoset(P.elements, P.to_space().specialization()).le == P.le


def test_galois_table_on_a_chain():
    P = tv.FinitePoset(["0", "1"], [("0", "1")])
    rows = tv.galois_table(P)
    assert rows and all(a == b for *_, a, b in rows)


def test_suite_on_the_sierpinski_space():
    S = tv.FiniteSpace(["o", "c"], [[], ["o"], ["o", "c"]])
    report = tv.law_suite_2(S)
    assert tv.suite_passes(report)
    assert {"comp11", "comp25", "comp27", "exy"} <= set(report)


def test_suite_reports_counts():
    P = tv.all_posets(2)[1]
    report = tv.law_suite_2(P)
    assert all(t > 0 and p <= t for p, t in report.values())
    assert "tv" in report


def test_cross_model_agrees_with_set_valued_engine():
    for P in tv.all_posets(3, up_to_iso=True):
        assert tv.cross_model_check(P)


def test_invalid_inputs():
    with pytest.raises(ValidationError):
        tv.FiniteSpace(["a", "b"], [[], ["a"], ["b"]])
    with pytest.raises(ValidationError):
        tv.FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])
