"""Deliberately broken engine operations, to show the suite notices.

Each mutant replaces one operation for the duration of a ``with`` block.
"""

from __future__ import annotations

from contextlib import contextmanager

from .. import action as ac
from .. import labels
from .. import profunctor as pro
from ..catover import OverCat
from ..fincat import CatBuilder, FunctorMap


def _bad_complement(A, M):
    # forgets the exponent: (A |> M) x = M x
    R = ac.RightAction(M.base, M.fibers, M.maps, name=f"bad({A.name}|{M.name})", check=False)
    R.origin = {x: {m: {a: m for a in A(x)} for m in M(x)} for x in M.base.objects}
    return R


def _bad_oodot(A, N):
    # the fibered product is replaced by N alone
    return ac.RightAction(N.base, N.fibers, N.maps, name=f"bad({A.name}.{N.name})", check=False)


def _bad_comprehend(H):
    # keeps the objects of i_X H but drops every non-identity arrow
    X = H.X
    b = CatBuilder(f"bad_i({H.name})")
    for x in X.objects:
        for a in H.at(x, x):
            o = b.add_object((x, a), labels.pair(x, a))
            b.add_arrow((X.identity(x), a, a), o, o, labels.pair(X.identity(x), a, a), identity=True)
    P = b.build(lambda g, f: (X.compose(g[0], f[0]), f[1], g[2]))
    p = FunctorMap(P, X, {e: P.origin[e][0] for e in P.objects}, {u: P.arrow_origin[u][0] for u in P.arrows}, name="p", check=False)
    return OverCat(p, name=b.name)


MUTANTS = {
    "complement": (ac, "complement", _bad_complement),
    "oodot": (ac, "oodot", _bad_oodot),
    "comprehend": (pro, "comprehend", _bad_comprehend),
}

# the laws expected to notice each mutant
WATCHERS = {
    "complement": ["comp2.2", "comp11", "comp27.3", "ip1.3"],
    "oodot": ["comp2.2", "comp11", "comp20.3", "frob"],
    "comprehend": ["dy", "end", "p1", "coend.strong"],
}


@contextmanager
def mutated(name: str):
    mod, attr, bad = MUTANTS[name]
    good = getattr(mod, attr)
    setattr(mod, attr, bad)
    try:
        yield
    finally:
        setattr(mod, attr, good)


def hunt(name: str, cfg=None) -> dict[str, int]:
    """Counterexamples found by the watcher laws while ``name`` is broken."""
    from .fuzz import FuzzConfig
    from .registry import by_id
    from .runner import run_law

    cfg = cfg or FuzzConfig()
    laws = by_id()
    out = {}
    with mutated(name):
        for lid in WATCHERS[name]:
            out[lid] = run_law(laws[lid], cfg).failed
    return out
