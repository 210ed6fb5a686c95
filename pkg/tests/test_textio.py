import pytest

from actegory import action as ac
from actegory import profunctor as pro
from actegory import textio
from actegory.cli import fixture_paths
from actegory.errors import NameClash, ParseError, UnknownName, ValidationError

from conftest import random_pairs, random_profunctors


def roundtrip(values):
    text = textio.dumps(values)
    back = textio.loads(text)
    for n, v in values.items():
        assert textio.same_value(v, back[n]), n
    return text


def test_bundled_fixtures_round_trip():
    paths = fixture_paths()
    assert len(paths) >= 4
    ws = textio.Workspace()
    for p in paths:
        ws.load(p)
    text = textio.dumps(dict(ws.values))
    again = textio.loads(text)
    assert list(again) == list(ws)
    for n in ws:
        assert textio.same_value(ws[n], again[n]), n
    # printing is a fixed point after one pass
    assert textio.dumps(dict(again.values)) == text


def test_library_round_trip(lib):
    roundtrip(dict(lib))


def test_random_values_round_trip(lib, rng):
    for X, A, M in random_pairs(lib, rng, n=2):
        roundtrip({"X": X, "A": A, "M": M})
    for H in random_profunctors(lib, rng, n=2):
        roundtrip({"X": H.X, "H": H})


def test_derived_values_round_trip(ws):
    A, M = ws["A"], ws["M"]
    roundtrip({"Arr": ws["Arr"], "c": ac.complement(A, M), "o": pro.outer_product(A, M)})


def test_comments_and_blank_lines():
    ws = textio.loads("# top\n\ncategory K   # trailing\n  objects x y  \nend\nset S: a b # two\n")
    assert list(ws["K"].objects) == ["x", "y"]
    assert len(ws["S"]) == 2


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as e:
        textio.loads("category K\n  objects a\n  arrow f a -> a\nend\n")
    assert e.value.line == 3 and e.value.column > 0


def test_identities_may_not_be_declared():
    with pytest.raises(ParseError, match="id_a"):
        textio.loads("category K\n  objects a\n  arrow id_a: a -> a\nend\n")


def test_non_associative_table_is_a_validation_error():
    text = (
        "category B\n  objects a\n  arrow f: a -> a\n  arrow g: a -> a\n"
        "  compose f f = g\n  compose g g = f\n  compose f g = f\n  compose g f = g\nend\n"
    )
    with pytest.raises(ValidationError, match=r"\(f \. f\) \. f"):
        textio.loads(text)


def test_name_clash_and_unknown_name():
    with pytest.raises(NameClash):
        textio.loads("set V: a\nset V: b\n")
    # inside a file an unknown reference is reported with its position
    with pytest.raises(ParseError, match="1:17: unknown name 'Nowhere'"):
        textio.loads("leftaction A on Nowhere\nend\n")
    with pytest.raises(UnknownName):
        textio.Workspace()["Nowhere"]


def test_functor_must_send_every_object():
    text = "category K\n  objects a b\nend\nfunctor F : K -> K\n  obj a -> a\nend\n"
    with pytest.raises((ParseError, ValidationError), match="b"):
        textio.loads(text)


def test_action_must_be_functorial():
    text = (
        "category K\n  objects a b\n  arrow u: a -> b\nend\n"
        "rightaction M on K\n  at a: x\n  at b:\nend\n"
    )
    with pytest.raises((ParseError, ValidationError)):
        textio.loads(text)
