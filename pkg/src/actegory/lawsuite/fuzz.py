"""Deterministic generation of desk-scale instances.

Every draw is driven by a ``random.Random`` seeded from a string, so a
``(seed, stream, index)`` triple always reproduces the same instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterator, Sequence

from .. import library
from ..action import from_covariant
from ..catover import OverCat
from ..errors import ActegoryError
from ..fincat import FinCat, FinSet, FunctorMap, functors, opposite, twisted, validate_category
from ..nat import SetFunctor
from ..profunctor import EndoProfunctor
from ..unionfind import UnionFind

SIZES = {
    # objects, arrows, fiber
    "s": (3, 8, 2),
    "m": (4, 12, 3),
    "l": (6, 24, 4),
}


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    max_objects: int = 3
    max_arrows: int = 8
    max_fiber: int = 2
    count: int = 100

    def __post_init__(self):
        for k in ("max_objects", "max_arrows", "max_fiber", "count"):
            if getattr(self, k) < 1:
                raise ValueError(f"FuzzConfig.{k} must be positive")

    @classmethod
    def sized(cls, size: str = "s", **kw) -> "FuzzConfig":
        if size not in SIZES:
            raise ValueError(f"unknown size {size!r}; expected one of {', '.join(SIZES)}")
        o, a, f = SIZES[size]
        return cls(max_objects=o, max_arrows=a, max_fiber=f, **kw)


# ---------------------------------------------------------------------------
# categories


def _fits(C: FinCat, cfg: FuzzConfig) -> bool:
    return len(C.objects) <= cfg.max_objects and len(C.arrows) <= cfg.max_arrows


def random_poset(rng: random.Random, n: int, name: str = "P") -> FinCat:
    xs = [f"p{i}" for i in range(n)]
    covers = [(xs[i], xs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
    return library.poset(xs, covers, name)


@lru_cache(maxsize=None)
def _monoid_tables(k: int) -> tuple:
    """Associative tables on ``0..k-1`` with unit 0, as tuples indexed by ``(g, f)``."""
    rest = range(1, k)
    cells = [(g, f) for g in rest for f in rest]
    out = []
    for vals in _cartesian(range(k), repeat=len(cells)):
        t = dict(zip(cells, vals))

        def m(g, f):
            if g == 0:
                return f
            if f == 0:
                return g
            return t[(g, f)]

        if all(m(m(a, b), c) == m(a, m(b, c)) for a in rest for b in rest for c in rest):
            out.append(tuple(sorted(t.items())))
    return tuple(out)


def random_monoid(rng: random.Random, k: int, name: str = "Mon") -> FinCat:
    tables = _monoid_tables(k)
    t = dict(rng.choice(tables)) if tables else {}
    els = ["e"] + [f"m{i}" for i in range(1, k)]

    def mult(g, f):
        gi, fi = els.index(g), els.index(f)
        if gi == 0:
            return f
        if fi == 0:
            return g
        return els[t[(gi, fi)]]

    return library.monoid(els, mult, name=name)


def random_two_object(rng: random.Random, name: str = "T") -> FinCat:
    """Objects ``a, b`` with small endomorphism monoids and arrows ``a -> b`` only."""
    for _ in range(60):
        ea = rng.randint(1, 2)
        eb = rng.randint(1, 2)
        h = rng.randint(1, 2)
        arrows = [(f"s{i}", "a", "b") for i in range(h)]
        comp = {}
        if ea == 2:
            arrows.append(("ea", "a", "a"))
            comp[("ea", "ea")] = rng.choice(["ea", "id_a"])
        if eb == 2:
            arrows.append(("eb", "b", "b"))
            comp[("eb", "eb")] = rng.choice(["eb", "id_b"])
        for i in range(h):
            if ea == 2:
                comp[(f"s{i}", "ea")] = f"s{rng.randrange(h)}"
            if eb == 2:
                comp[("eb", f"s{i}")] = f"s{rng.randrange(h)}"
        try:
            return validate_category({"name": name, "objects": ["a", "b"], "arrows": arrows, "composition": comp})
        except ActegoryError:
            continue
    return library.walking_arrow()


def retract() -> FinCat:
    """``a`` a retract of ``b``: ``r s = id_a`` and ``s r`` idempotent."""
    return validate_category({
        "name": "Ret",
        "objects": ["a", "b"],
        "arrows": [("s", "a", "b"), ("r", "b", "a"), ("e", "b", "b")],
        "composition": {("r", "s"): "id_a", ("s", "r"): "e", ("e", "e"): "e", ("e", "s"): "s", ("r", "e"): "r"},
    })


_LIB = dict(library.standard_library(), Ret=retract())
# groupoids that are neither trivial nor posets
_GROUPOIDS = ("C2", "C3", "Iso")


def random_category(rng: random.Random, cfg: FuzzConfig, kind: str | None = None) -> FinCat:
    """``kind`` is one of poset, monoid, two, library, groupoid; random if None."""
    kinds = ["poset", "monoid", "two", "library"]
    for _ in range(40):
        k = kind or rng.choice(kinds)
        if k == "poset":
            C = random_poset(rng, rng.randint(1, min(cfg.max_objects, 4)))
        elif k == "monoid":
            C = random_monoid(rng, rng.randint(2, 3))
        elif k == "two":
            C = random_two_object(rng)
        elif k == "groupoid":
            C = _LIB[rng.choice(_GROUPOIDS)]
        else:
            C = _LIB[rng.choice(sorted(_LIB))]
        if _fits(C, cfg):
            return C
    return _LIB["2"]


# ---------------------------------------------------------------------------
# actions


def _quotient(C: FinCat, fibers: dict, maps: dict, uf: UnionFind) -> tuple[dict, dict]:
    """Close ``uf`` under the action and return the quotient (covariant on ``C``)."""
    changed = True
    while changed:
        changed = False
        for f, (s, t) in C.arrows.items():
            m = maps[f]
            groups: dict = {}
            for e in fibers[s]:
                groups.setdefault(uf.find((s, e)), []).append(e)
            for g in groups.values():
                for e in g[1:]:
                    if uf.find((t, m[g[0]])) != uf.find((t, m[e])):
                        uf.union((t, m[g[0]]), (t, m[e]))
                        changed = True
    rep = {}
    for x in C.objects:
        seen = {}
        for e in fibers[x]:
            seen.setdefault(uf.find((x, e)), e)
        rep[x] = seen
    new_f = {x: list(rep[x].values()) for x in C.objects}
    new_m = {f: {e: rep[t][uf.find((t, maps[f][e]))] for e in new_f[s]} for f, (s, t) in C.arrows.items()}
    return new_f, new_m


def random_covariant(rng: random.Random, C: FinCat, max_fiber: int) -> tuple[dict, dict]:
    """A random functor ``C -> FinSet``: a sum of representables and points, then a random quotient."""
    fibers = {x: [] for x in C.objects}
    maps = {f: {} for f in C.arrows}
    pieces = rng.randint(0, 3)
    tag = 0
    for _ in range(pieces):
        tag += 1
        r = rng.random()
        if r < 0.6:
            x = rng.choice(C.objects)
            for z in C.objects:
                fibers[z] += [f"{w}~{tag}" for w in C.hom(x, z)]
            for f, (s, t) in C.arrows.items():
                for w in C.hom(x, s):
                    maps[f][f"{w}~{tag}"] = f"{C.compose(f, w)}~{tag}"
        else:
            lab = f"e{tag}"
            for z in C.objects:
                fibers[z].append(lab)
            for f in C.arrows:
                maps[f][lab] = lab
    uf = UnionFind([(x, e) for x in C.objects for e in fibers[x]])
    # random identifications, then enough merging to respect the bound
    for x in C.objects:
        fib = fibers[x]
        if len(fib) > 1 and rng.random() < 0.3:
            a, b = rng.sample(fib, 2)
            uf.union((x, a), (x, b))
    fibers, maps = _quotient(C, fibers, maps, uf)
    while any(len(v) > max_fiber for v in fibers.values()):
        x = next(x for x in C.objects if len(fibers[x]) > max_fiber)
        uf = UnionFind([(z, e) for z in C.objects for e in fibers[z]])
        a, b = rng.sample(fibers[x], 2)
        uf.union((x, a), (x, b))
        fibers, maps = _quotient(C, fibers, maps, uf)
    return fibers, maps


def _relabel(fibers: dict, maps: dict, prefix: str) -> tuple[dict, dict]:
    ren = {}
    nf = {}
    for x, fib in fibers.items():
        ren[x] = {e: f"{prefix}{i}" for i, e in enumerate(fib)}
        nf[x] = list(ren[x].values())
    return nf, ren


def random_action(rng: random.Random, X: FinCat, variance: str, max_fiber: int, *, name: str = "") -> SetFunctor:
    C = opposite(X) if variance == "left" else X
    fibers, maps = random_covariant(rng, C, max_fiber)
    nf, ren = _relabel(fibers, maps, "a" if variance == "left" else "m")
    nm = {f: {ren[s][e]: ren[t][v] for e, v in maps[f].items()} for f, (s, t) in C.arrows.items()}
    return from_covariant(variance, C, nf, nm, name=name, check=True)


def random_set(rng: random.Random, max_fiber: int, prefix: str = "v") -> FinSet:
    return FinSet([f"{prefix}{i}" for i in range(rng.randint(0, max_fiber))])


def random_profunctor(rng: random.Random, X: FinCat, max_fiber: int, *, name: str = "H") -> EndoProfunctor:
    T = twisted(X)
    fibers, maps = random_covariant(rng, T, max_fiber)
    nf, ren = _relabel(fibers, maps, "h")
    nm = {f: {ren[s][e]: ren[t][v] for e, v in maps[f].items()} for f, (s, t) in T.arrows.items()}
    return EndoProfunctor(X, nf, nm, name=name, check=True)


def random_functor(rng: random.Random, X: FinCat, Y: FinCat, *, name: str = "f") -> FunctorMap:
    fs = list(functors(X, Y, limit=120))
    f = rng.choice(fs)
    return FunctorMap(X, Y, f.object_map, f.arrow_map, name=name, check=True)


def random_over(rng: random.Random, X: FinCat, cfg: FuzzConfig, *, name: str = "p") -> OverCat:
    P = random_category(rng, cfg)
    return OverCat(random_functor(rng, P, X, name=name), name=name)


# ---------------------------------------------------------------------------
# instances

# slot -> (kind, base).  Bases: X the main category, Y the codomain of f,
# Z the codomain of g.
SLOTS = {
    "A": ("left", "X"),
    "B": ("left", "X"),
    "C": ("left", "X"),
    "M": ("right", "X"),
    "N": ("right", "X"),
    "P": ("right", "X"),
    "A2": ("left", "Y"),
    "B2": ("left", "Y"),
    "M2": ("right", "Y"),
    "N2": ("right", "Y"),
    "V": ("set", None),
    "W": ("set", None),
    "H": ("profunctor", "X"),
    "K": ("profunctor", "X"),
    "p": ("over", "X"),
    "q": ("over", "X"),
    "f": ("functor", ("X", "Y")),
    "f2": ("functor", ("X", "Y")),
    "g": ("functor", ("X", "Z")),
    "h": ("functor", ("Y", "Z")),
}


@dataclass
class Instance:
    """Named inputs of one law check.  ``X`` (and ``Y``, ``Z`` when needed) are the categories."""

    values: dict
    stream: str = ""
    index: int = 0
    tags: list = field(default_factory=list)

    def __getitem__(self, k):
        return self.values[k]

    def __contains__(self, k):
        return k in self.values

    def get(self, k, default=None):
        return self.values.get(k, default)


# first three members of every stream cover the required shapes
_COVER = ("groupoid", "poset", "two")


def coverage(C: FinCat) -> set[str]:
    out = set()
    if C.is_groupoid():
        out.add("groupoid")
    else:
        out.add("non-groupoid")
    if C.is_preorder() and all(not C.isomorphic_objects(a, b) for a in C.objects for b in C.objects if a != b):
        out.add("poset")
    return out


def make_instance(cfg: FuzzConfig, slots: Sequence[str], index: int, *, stream: str = "", category: str | None = None) -> Instance:
    rng = random.Random(f"{cfg.seed}/{stream}/{index}")
    kind = category
    if kind is None and index < len(_COVER):
        kind = _COVER[index]
    X = random_category(rng, cfg, kind)
    vals: dict = {"X": X}
    need = set(slots)
    if need & {"f", "f2", "A2", "B2", "M2", "N2", "h"}:
        vals["Y"] = random_category(rng, cfg)
    if need & {"g", "h"}:
        vals["Z"] = random_category(rng, cfg)
    fb = cfg.max_fiber
    for s in slots:
        kindname, base = SLOTS[s]
        if kindname in ("left", "right"):
            vals[s] = random_action(rng, vals[base], kindname, fb, name=s)
        elif kindname == "set":
            vals[s] = random_set(rng, fb, prefix=s.lower())
        elif kindname == "profunctor":
            vals[s] = random_profunctor(rng, vals[base], fb, name=s)
        elif kindname == "over":
            vals[s] = random_over(rng, vals[base], cfg, name=s)
        elif kindname == "functor":
            a, b = base
            vals[s] = random_functor(rng, vals[a], vals[b], name=s)
    return Instance(vals, stream, index, sorted(coverage(X)))


def fuzz(cfg: FuzzConfig, slots: Sequence[str] = ("A", "M"), *, stream: str = "", category: str | None = None) -> Iterator[Instance]:
    """``cfg.count`` instances for the given input slots."""
    for i in range(cfg.count):
        yield make_instance(cfg, slots, i, stream=stream, category=category)
