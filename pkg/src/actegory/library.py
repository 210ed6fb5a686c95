"""Standard small categories used by tests, fixtures and the fuzzer."""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterable, Sequence

from .errors import ValidationError
from .fincat import FinCat, validate_category


def terminal() -> FinCat:
    return validate_category({"name": "1", "objects": ["*"]})


def discrete(objects: Sequence[str], name: str = "D") -> FinCat:
    return validate_category({"name": name, "objects": list(objects)})


def walking_arrow() -> FinCat:
    """``a --u--> b``."""
    return validate_category({"name": "2", "objects": ["a", "b"], "arrows": [("u", "a", "b")]})


def walking_iso() -> FinCat:
    return validate_category(
        {
            "name": "Iso",
            "objects": ["a", "b"],
            "arrows": [("u", "a", "b"), ("v", "b", "a")],
            "composition": {("v", "u"): "id_a", ("u", "v"): "id_b"},
        }
    )


def parallel_pair() -> FinCat:
    return validate_category(
        {"name": "PP", "objects": ["a", "b"], "arrows": [("s", "a", "b"), ("t", "a", "b")]}
    )


def commutative_square() -> FinCat:
    """``a -f-> b -h-> d`` and ``a -g-> c -k-> d`` with ``h.f = k.g = d0``."""
    return validate_category(
        {
            "name": "Sq",
            "objects": ["a", "b", "c", "d"],
            "arrows": [
                ("f", "a", "b"),
                ("g", "a", "c"),
                ("h", "b", "d"),
                ("k", "c", "d"),
                ("d0", "a", "d"),
            ],
            "composition": {("h", "f"): "d0", ("k", "g"): "d0"},
        }
    )


def poset(elements: Sequence[str], covers: Iterable[tuple[str, str]], name: str = "P") -> FinCat:
    """The poset generated by ``x <= y`` for each pair in ``covers``.

    The arrow ``x <= y`` (x != y) is named ``x.y``.
    """
    elements = list(elements)
    le = {(x, x) for x in elements}
    le |= set(covers)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in _cartesian(list(le), list(le)):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    for a, b in le:
        if a != b and (b, a) in le:
            raise ValidationError(f"covers relation has a cycle through {a} and {b}")
    return poset_from_order(elements, le, name)


def poset_from_order(elements: Sequence[str], le: set, name: str = "P") -> FinCat:
    def arrow(a, b):
        return f"id_{a}" if a == b else f"{a}.{b}"

    arrows = [(arrow(a, b), a, b) for a in elements for b in elements if a != b and (a, b) in le]
    comp = {}
    for a, b, c in _cartesian(elements, repeat=3):
        if a != b and b != c and (a, b) in le and (b, c) in le:
            comp[(arrow(b, c), arrow(a, b))] = arrow(a, c)
    return validate_category({"name": name, "objects": list(elements), "arrows": arrows, "composition": comp})


def chain(n: int, name: str | None = None) -> FinCat:
    xs = [f"c{i}" for i in range(n)]
    return poset(xs, [(xs[i], xs[i + 1]) for i in range(n - 1)], name or f"Ch{n}")


def monoid(elements: Sequence[str], mult, name: str = "M", obj: str = "*") -> FinCat:
    """One-object category; ``elements[0]`` is the unit and is renamed ``id_<obj>``.

    ``mult(g, f)`` returns the element ``g`` after ``f``.
    """
    unit = elements[0]
    ident = f"id_{obj}"

    def ren(e):
        return ident if e == unit else e

    arrows = [(e, obj, obj) for e in elements[1:]]
    comp = {}
    for g in elements[1:]:
        for f in elements[1:]:
            comp[(g, f)] = ren(mult(g, f))
    return validate_category({"name": name, "objects": [obj], "arrows": arrows, "composition": comp})


def cyclic(n: int) -> FinCat:
    """The group ``C_n`` as a one-object groupoid; ``g<k>`` is the k-th power."""
    elems = ["e"] + [f"g{k}" for k in range(1, n)]

    def mult(g, f):
        k = (int(g[1:]) + int(f[1:])) % n
        return "e" if k == 0 else f"g{k}"

    return monoid(elems, mult, name=f"C{n}")


def finsets(k: int) -> FinCat:
    """Skeletal finite sets of size at most ``k``: objects ``s0 .. sk``, every function."""
    from .fincat import CatBuilder

    b = CatBuilder(f"Set<={k}")
    for n in range(k + 1):
        b.add_object(n, f"s{n}")
    for n in range(k + 1):
        for m in range(k + 1):
            for fn in _cartesian(range(m), repeat=n):
                ident = n == m and fn == tuple(range(n))
                b.add_arrow((n, m, fn), f"s{n}", f"s{m}", f"s{n}>s{m}:{''.join(map(str, fn))}", identity=ident)
    return b.build(lambda g, f: (f[0], g[1], tuple(g[2][i] for i in f[2])))


def standard_library() -> dict[str, FinCat]:
    return {
        "1": terminal(),
        "2": walking_arrow(),
        "Iso": walking_iso(),
        "PP": parallel_pair(),
        "Sq": commutative_square(),
        "C2": cyclic(2),
        "C3": cyclic(3),
        "Ch3": chain(3),
        "V": poset(["l", "r", "t"], [("l", "t"), ("r", "t")], "V"),
        "Span": poset(["s", "l", "r"], [("s", "l"), ("s", "r")], "Span"),
        "D2": discrete(["p", "q"], "D2"),
    }
