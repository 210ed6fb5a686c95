"""Categories over a base: ``Cat/X``.

Categories of elements, fibered products, slices and intervals, the
reflections and coreflections into discrete (op)fibrations, sections and
components.
"""

from __future__ import annotations

from typing import Iterator

from . import labels
from .errors import BaseMismatch, TypeMismatch
from .fincat import (
    CatBuilder,
    FinCat,
    FinSet,
    FunctorMap,
    functors,
    identity_functor,
)
from .nat import SetFunctor
from .unionfind import UnionFind


class OverCat:
    """A finite category ``total`` with a functor ``projection`` to ``base``."""

    def __init__(self, projection: FunctorMap, name: str = ""):
        self.projection = projection
        self.total = projection.domain
        self.base = projection.codomain
        self.name = name or self.total.name

    def over(self, e: str) -> str:
        return self.projection.object_map[e]

    def over_arrow(self, u: str) -> str:
        return self.projection.arrow_map[u]

    def fiber_objects(self, x: str) -> list[str]:
        return [e for e in self.total.objects if self.over(e) == x]

    def validate(self) -> "OverCat":
        self.projection.validate()
        return self

    def __repr__(self):
        return f"OverCat({self.name} over {self.base.name}; {len(self.total.objects)} objects)"


def _require_same_base(p: OverCat, q: OverCat, what: str) -> FinCat:
    if not (p.base is q.base or p.base == q.base):
        raise BaseMismatch(f"{what}: {p.name} and {q.name} live over different categories")
    return p.base


def identity_over(X: FinCat) -> OverCat:
    return OverCat(identity_functor(X), name=f"id_{X.name}")


def as_over(f: FunctorMap) -> OverCat:
    return OverCat(f, name=f.name)


# ---------------------------------------------------------------------------
# categories of elements


def elements_right(M: SetFunctor) -> OverCat:
    """``i^r M``: objects ``(x,m)``, one arrow ``(x,m) -> (y, M f m)`` per ``f``."""
    if M.variance != "right":
        raise TypeMismatch("elements_right expects a right action")
    X = M.base
    b = CatBuilder(f"iR({M.name or 'M'})")
    for x in X.objects:
        for m in M(x):
            b.add_object((x, m), labels.pair(x, m))
    for f, (x, y) in X.arrows.items():
        for m in M(x):
            b.add_arrow((f, m), b.key_obj[(x, m)], b.key_obj[(y, M.maps[f][m])], labels.pair(f, m), identity=X.is_identity(f))
    P = b.build(lambda g, f: (X.compose(g[0], f[0]), f[1]))
    p = FunctorMap(P, X, {e: P.origin[e][0] for e in P.objects}, {u: P.arrow_origin[u][0] for u in P.arrows}, name="p", check=False)
    return OverCat(p, name=b.name)


def elements_left(A: SetFunctor) -> OverCat:
    """``i^l A``: objects ``(x,a)``, one arrow ``(x, A f b) -> (y, b)`` per ``f: x -> y``."""
    if A.variance != "left":
        raise TypeMismatch("elements_left expects a left action")
    X = A.base
    b = CatBuilder(f"iL({A.name or 'A'})")
    for x in X.objects:
        for a in A(x):
            b.add_object((x, a), labels.pair(x, a))
    for f, (x, y) in X.arrows.items():
        for e in A(y):
            b.add_arrow((f, e), b.key_obj[(x, A.maps[f][e])], b.key_obj[(y, e)], labels.pair(f, e), identity=X.is_identity(f))
    P = b.build(lambda g, f: (X.compose(g[0], f[0]), g[1]))
    p = FunctorMap(P, X, {e: P.origin[e][0] for e in P.objects}, {u: P.arrow_origin[u][0] for u in P.arrows}, name="p", check=False)
    return OverCat(p, name=b.name)


def _unique_lifts(p: OverCat, *, forward: bool) -> bool:
    P, X = p.total, p.base
    for e in P.objects:
        x = p.over(e)
        arrows = X.out_arrows(x) if forward else X.in_arrows(x)
        lifts = P.out_arrows(e) if forward else P.in_arrows(e)
        count = {f: 0 for f in arrows}
        for u in lifts:
            count[p.over_arrow(u)] += 1
        if any(c != 1 for c in count.values()):
            return False
    return True


def is_discrete_fibration(p: OverCat) -> bool:
    """Every arrow into ``p e`` lifts uniquely to an arrow into ``e``."""
    return _unique_lifts(p, forward=False)


def is_discrete_opfibration(p: OverCat) -> bool:
    return _unique_lifts(p, forward=True)


def is_discrete_bifibration(p: OverCat) -> bool:
    return is_discrete_fibration(p) and is_discrete_opfibration(p)


# ---------------------------------------------------------------------------
# pullbacks, slices, intervals


def fibered_product(p: OverCat, q: OverCat, label: str | None = None) -> OverCat:
    """The pullback ``P x_X Q`` with its projection to ``X``."""
    X = _require_same_base(p, q, "fibered product")
    P, Q = p.total, q.total
    b = CatBuilder(label or f"({p.name}x{q.name})")
    for e in P.objects:
        for d in Q.objects:
            if p.over(e) == q.over(d):
                b.add_object((e, d), labels.pair(e, d))
    for u, (s, t) in P.arrows.items():
        pu = p.over_arrow(u)
        for v, (s2, t2) in Q.arrows.items():
            if q.over_arrow(v) == pu:
                ident = P.is_identity(u) and Q.is_identity(v)
                b.add_arrow((u, v), b.key_obj[(s, s2)], b.key_obj[(t, t2)], labels.pair(u, v), identity=ident)
    R = b.build(lambda g, f: (P.compose(g[0], f[0]), Q.compose(g[1], f[1])))
    proj = FunctorMap(
        R,
        X,
        {o: p.over(R.origin[o][0]) for o in R.objects},
        {w: p.over_arrow(R.arrow_origin[w][0]) for w in R.arrows},
        name="p",
        check=False,
    )
    return OverCat(proj, name=b.name)


def pullback(f: FunctorMap, p: OverCat) -> OverCat:
    """``f^{-1} p`` over the domain of ``f``."""
    if not (f.codomain is p.base or f.codomain == p.base):
        raise BaseMismatch(f"pullback along {f.name}: codomain is not the base of {p.name}")
    R = fibered_product(as_over(f), p)
    T = R.total
    proj = FunctorMap(
        T,
        f.domain,
        {o: T.origin[o][0] for o in T.objects},
        {w: T.arrow_origin[w][0] for w in T.arrows},
        name="p",
        check=False,
    )
    return OverCat(proj, name=f"{f.name}*{p.name}")


def slice(X: FinCat, x: str) -> OverCat:
    """``X/x``: objects are the arrows ``v: z -> x``."""
    X.require(x)
    b = CatBuilder(f"{X.name}/{x}")
    for z in X.objects:
        for v in X.hom(z, x):
            b.add_object(v, v)
    for w, (z, z2) in X.arrows.items():
        for v2 in X.hom(z2, x):
            v = X.compose(v2, w)
            b.add_arrow((w, v2), v, v2, labels.pair(w, v2), identity=X.is_identity(w))
    S = b.build(lambda g, f: (X.compose(g[0], f[0]), g[1]))
    proj = FunctorMap(S, X, {v: X.src(v) for v in S.objects}, {u: S.arrow_origin[u][0] for u in S.arrows}, name="p", check=False)
    return OverCat(proj, name=b.name)


def coslice(X: FinCat, x: str) -> OverCat:
    """``x\\X``: objects are the arrows ``v: x -> z``."""
    X.require(x)
    b = CatBuilder(f"{x}\\{X.name}")
    for z in X.objects:
        for v in X.hom(x, z):
            b.add_object(v, v)
    for w, (z, z2) in X.arrows.items():
        for v in X.hom(x, z):
            b.add_arrow((w, v), v, X.compose(w, v), labels.pair(w, v), identity=X.is_identity(w))
    S = b.build(lambda g, f: (X.compose(g[0], f[0]), f[1]))
    proj = FunctorMap(S, X, {v: X.tgt(v) for v in S.objects}, {u: S.arrow_origin[u][0] for u in S.arrows}, name="p", check=False)
    return OverCat(proj, name=b.name)


def interval(X: FinCat, x: str, y: str) -> OverCat:
    """Factorizations ``x -a-> z -b-> y``; an arrow ``w`` needs ``w a = a'`` and ``b' w = b``."""
    X.require(x)
    X.require(y)
    b = CatBuilder(f"[{x},{y}]")
    for z in X.objects:
        for a in X.hom(x, z):
            for c in X.hom(z, y):
                b.add_object((a, c), labels.pair(a, c))
    for w, (z, z2) in X.arrows.items():
        for a in X.hom(x, z):
            for c2 in X.hom(z2, y):
                src = b.key_obj[(a, X.compose(c2, w))]
                tgt = b.key_obj[(X.compose(w, a), c2)]
                b.add_arrow((w, a, c2), src, tgt, labels.pair(w, a, c2), identity=X.is_identity(w))
    S = b.build(lambda g, f: (X.compose(g[0], f[0]), f[1], g[2]))
    proj = FunctorMap(
        S,
        X,
        {o: X.tgt(S.origin[o][0]) for o in S.objects},
        {u: S.arrow_origin[u][0] for u in S.arrows},
        name="p",
        check=False,
    )
    return OverCat(proj, name=b.name)


# ---------------------------------------------------------------------------
# functors over X


def over_functors(q: OverCat, p: OverCat) -> Iterator[FunctorMap]:
    """Every functor ``F`` with ``p F = q``."""
    _require_same_base(q, p, "Cat/X hom")
    by_obj: dict[str, list[str]] = {}
    for e in p.total.objects:
        by_obj.setdefault(p.over(e), []).append(e)
    P = p.total

    def obj_choices(d):
        return by_obj.get(q.over(d), ())

    def arrow_choices(u, a, b):
        want = q.over_arrow(u)
        return [w for w in P.hom(a, b) if p.over_arrow(w) == want]

    return functors(q.total, P, obj_choices=obj_choices, arrow_choices=arrow_choices)


def over_hom(q: OverCat, p: OverCat) -> FinSet:
    fs = list(over_functors(q, p))
    labs = [labels.family(F.object_map) + labels.family({u: F.arrow_map[u] for u in q.total.non_identity_arrows()}) for F in fs]
    return FinSet(labs, dict(zip(labs, fs)))


def count_over(q: OverCat, p: OverCat) -> int:
    return sum(1 for _ in over_functors(q, p))


def find_over_iso(p: OverCat, q: OverCat) -> FunctorMap | None:
    """An isomorphism ``p -> q`` in ``Cat/X`` or None."""
    _require_same_base(p, q, "over-iso search")
    P, Q = p.total, q.total
    if len(P.objects) != len(Q.objects) or len(P.arrows) != len(Q.arrows):
        return None
    by_obj: dict[str, list[str]] = {}
    for e in Q.objects:
        by_obj.setdefault(q.over(e), []).append(e)

    def arrow_choices(u, a, b):
        want = p.over_arrow(u)
        return [w for w in Q.hom(a, b) if q.over_arrow(w) == want]

    return next(
        functors(P, Q, obj_choices=lambda d: by_obj.get(p.over(d), ()), arrow_choices=arrow_choices, injective=True),
        None,
    )


def sections(p: OverCat) -> FinSet:
    """``Cat/X(id_X, p)``; each section is labelled by its object family."""
    fs = list(over_functors(identity_over(p.base), p))
    labs = [labels.family(F.object_map) + labels.family({u: F.arrow_map[u] for u in p.base.non_identity_arrows()}) for F in fs]
    return FinSet(labs, dict(zip(labs, fs)))


def components(p: OverCat | FinCat) -> FinSet:
    """``pi_0`` of the total category; payload maps each class to its objects."""
    P = p.total if isinstance(p, OverCat) else p
    uf = UnionFind(P.objects)
    for s, t in P.arrows.values():
        uf.union(s, t)
    classes = uf.classes()
    labs = [labels.klass(c[0]) for c in classes]
    return FinSet(labs, dict(zip(labs, classes)))


total_components = components


# ---------------------------------------------------------------------------
# reflections and coreflections into discrete (op)fibrations


def diamond_left(p: OverCat) -> SetFunctor:
    """``<>^l p = E^l_p I``; the fiber at ``x`` is ``pi_0`` of ``x/p``."""
    from .action import exists, terminal_left

    L = exists(p.projection, terminal_left(p.total))
    L.name = f"<>L({p.name})"
    return L


def diamond_right(p: OverCat) -> SetFunctor:
    """``<>^r p = E^r_p I``; the fiber at ``y`` is ``pi_0`` of ``p/y``."""
    from .action import exists, terminal_right

    R = exists(p.projection, terminal_right(p.total))
    R.name = f"<>R({p.name})"
    return R


def _section_labels(fs, S: FinCat) -> list[str]:
    labs = [labels.family(F.object_map) for F in fs]
    if len(set(labs)) != len(labs):
        # object images do not determine the section; spell out the arrows too
        labs = [labels.family(F.object_map) + labels.family({u: F.arrow_map[u] for u in S.non_identity_arrows()}) for F in fs]
    return labs


def _fkey(object_map, arrow_map):
    return tuple(sorted(object_map.items())), tuple(sorted(arrow_map.items()))


def _square(p: OverCat, variance: str) -> SetFunctor:
    from .action import LeftAction, RightAction

    X = p.base
    shapes, secs, index = {}, {}, {}
    for x in X.objects:
        S = slice(X, x) if variance == "left" else coslice(X, x)
        shapes[x] = S.total
        fs = list(over_functors(S, p))
        labs = _section_labels(fs, S.total)
        secs[x] = dict(zip(labs, fs))
        index[x] = {_fkey(F.object_map, F.arrow_map): lab for lab, F in zip(labs, fs)}
    maps = {}
    for f, (x, y) in X.arrows.items():
        if variance == "left":
            # restrict along X/x -> X/y, v |-> f v
            src, tgt = y, x

            def move(v):
                return X.compose(f, v)
        else:
            # restrict along y\X -> x\X, v |-> v f
            src, tgt = x, y

            def move(v):
                return X.compose(v, f)
        D, T = shapes[tgt], shapes[src]
        tkey = {k: a for a, k in T.arrow_origin.items()}
        m = {}
        for lab, F in secs[src].items():
            om = {o: F.object_map[move(o)] for o in D.objects}
            am = {}
            for u in D.arrows:
                w, v = D.arrow_origin[u]
                am[u] = F.arrow_map[tkey[(w, move(v))]]
            m[lab] = index[tgt][_fkey(om, am)]
        maps[f] = m
    fibers = {x: list(secs[x]) for x in X.objects}
    cls = LeftAction if variance == "left" else RightAction
    pre = "[]L" if variance == "left" else "[]R"
    return cls(X, fibers, maps, name=f"{pre}({p.name})", origin=secs, check=False)


def square_left(p: OverCat) -> SetFunctor:
    """``[]^l p``: sections of ``p`` over the slices ``X/x``, acted on by restriction."""
    return _square(p, "left")


def square_right(p: OverCat) -> SetFunctor:
    """``[]^r p``: sections of ``p`` over the coslices ``x\\X``."""
    return _square(p, "right")


def opfib_exponential(M: SetFunctor, N: SetFunctor) -> OverCat:
    """``(i^r N)^(i^r M)`` as the comprehension of ``M =>^r N``."""
    from .profunctor import comprehend, hom_arrow

    return comprehend(hom_arrow(M, N))
