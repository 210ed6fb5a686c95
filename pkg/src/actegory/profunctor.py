"""Endoprofunctors ``X^op x X -> FinSet`` and the comprehension ``i_X``.

An endoprofunctor is stored as a right action on ``twisted(X)``.  The
arrow ``(u, v): (x', y) -> (x, y')`` of ``X^op x X`` (with ``u: x -> x'``
and ``v: y -> y'`` in ``X``) acts by ``H(u, y)`` followed by ``H(x, v)``.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterator, Mapping

from . import labels
from .action import (
    LeftAction,
    RightAction,
    exists,
    forall,
    functions,
    substitute,
)
from .catover import OverCat, components, over_functors, sections
from .config import limits
from .errors import BaseMismatch, FunctorialityViolation, SizeLimitExceeded, TypeMismatch
from .fincat import CatBuilder, FinCat, FinSet, FunctorMap, twisted, twisted_functor
from .nat import SetFunctor
from .unionfind import UnionFind


def _tw_arrow(X: FinCat, u: str, v: str) -> str:
    T = twisted(X)
    index = T._cache.get("key_arrow")
    if index is None:
        index = {k: a for a, k in T.arrow_origin.items()}
        T._cache["key_arrow"] = index
    return index[(u, v)]


def _tw_obj(x: str, y: str) -> str:
    return labels.pair(x, y)


class EndoProfunctor(SetFunctor):
    """``H(x, y)`` contravariant in ``x``, covariant in ``y``."""

    variance = "right"

    def __init__(self, X: FinCat, fibers, action=None, *, name: str = "", check: bool = True, origin=None):
        self.X = X
        super().__init__(twisted(X), fibers, action, name=name, check=check, origin=origin)

    @classmethod
    def from_action(cls, X: FinCat, R: SetFunctor, name: str = "") -> "EndoProfunctor":
        if R.variance != "right" or not (R.base is twisted(X) or R.base == twisted(X)):
            raise TypeMismatch("expected a right action on X^op x X")
        return cls(X, R.fibers, R.maps, name=name or R.name, check=False, origin=R.origin)

    @classmethod
    def from_sides(
        cls,
        X: FinCat,
        fibers: Mapping[tuple[str, str], object],
        lact: Mapping[tuple[str, str], Mapping[str, str]],
        ract: Mapping[tuple[str, str], Mapping[str, str]],
        *,
        name: str = "",
        check: bool = True,
    ) -> "EndoProfunctor":
        """Assemble from the two one-sided actions.

        ``lact[(u, y)]`` maps ``H(x', y) -> H(x, y)`` for ``u: x -> x'``;
        ``ract[(x, v)]`` maps ``H(x, y) -> H(x, y')`` for ``v: y -> y'``.
        Identity entries may be omitted.
        """
        fib = {_tw_obj(x, y): fibers[(x, y)] for x in X.objects for y in X.objects}

        def left(u, y):
            if (u, y) in lact:
                return lact[(u, y)]
            if X.is_identity(u):
                return None
            raise TypeMismatch(f"missing left action of {u} at {y}")

        def right(x, v):
            if (x, v) in ract:
                return ract[(x, v)]
            if X.is_identity(v):
                return None
            raise TypeMismatch(f"missing right action of {v} at {x}")

        maps = {}
        for u, (x, x2) in X.arrows.items():
            for v, (y, y2) in X.arrows.items():
                lm, rm = left(u, y), right(x, v)
                start = fibers[(x2, y)]
                start = start.elements if isinstance(start, FinSet) else tuple(start)
                m = {}
                for e in start:
                    e1 = lm[e] if lm is not None else e
                    m[e] = rm[e1] if rm is not None else e1
                maps[_tw_arrow(X, u, v)] = m
        H = cls(X, fib, maps, name=name, check=check)
        if check:
            H.check_sides_commute()
        return H

    # one-sided views
    def at(self, x: str, y: str) -> tuple[str, ...]:
        return self.fibers[_tw_obj(x, y)].elements

    def lact(self, u: str, y: str) -> dict[str, str]:
        """``H(u, y): H(x', y) -> H(x, y)`` for ``u: x -> x'``."""
        return self.maps[_tw_arrow(self.X, u, self.X.identity(y))]

    def ract(self, x: str, v: str) -> dict[str, str]:
        """``H(x, v): H(x, y) -> H(x, y')`` for ``v: y -> y'``."""
        return self.maps[_tw_arrow(self.X, self.X.identity(x), v)]

    def check_sides_commute(self) -> None:
        X = self.X
        for u, (x, x2) in X.arrows.items():
            for v, (y, y2) in X.arrows.items():
                lu, rv = self.lact(u, y), self.ract(x2, v)
                lu2, rv2 = self.lact(u, y2), self.ract(x, v)
                for e in self.at(x2, y):
                    if rv2[lu[e]] != lu2[rv[e]]:
                        raise FunctorialityViolation(f"{self.name}: actions of {u} and {v} do not commute")

    def __repr__(self):
        return f"EndoProfunctor({self.name or '?'} over {self.X.name})"


def _require(H, what):
    if not isinstance(H, EndoProfunctor):
        raise TypeMismatch(f"{what} expects an endoprofunctor")


def _build(X: FinCat, fiber, move, name: str, origin=None) -> EndoProfunctor:
    """``fiber(x, y)`` lists elements; ``move(u, v, e)`` is the action of ``(u, v)``."""
    T = twisted(X)
    fibers = {}
    for o in T.objects:
        x, y = T.origin[o]
        fibers[o] = fiber(x, y)
    maps = {}
    for w, (s, _) in T.arrows.items():
        u, v = T.arrow_origin[w]
        maps[w] = {e: move(u, v, e) for e in fibers[s]}
    return EndoProfunctor(X, fibers, maps, name=name, check=False, origin=origin)


# ---------------------------------------------------------------------------
# constructions


def dummy_left(A: SetFunctor) -> EndoProfunctor:
    """``d^l A (x, y) = A x``."""
    if A.variance != "left":
        raise TypeMismatch("dummy_left expects a left action")
    return _build(A.base, lambda x, y: A(x), lambda u, v, e: A.maps[u][e], f"dL({A.name})")


def dummy_right(M: SetFunctor) -> EndoProfunctor:
    """``d^r M (x, y) = M y``."""
    if M.variance != "right":
        raise TypeMismatch("dummy_right expects a right action")
    return _build(M.base, lambda x, y: M(y), lambda u, v, e: M.maps[v][e], f"dR({M.name})")


def outer_product(A: SetFunctor, M: SetFunctor) -> EndoProfunctor:
    """``(A x M)(x, y) = A x  x  M y``."""
    if A.variance != "left" or M.variance != "right":
        raise TypeMismatch("outer_product expects a left and a right action")
    A.require_same_base(M, "outer product")
    X = A.base
    org = {}

    def fiber(x, y):
        return [labels.pair(a, m) for a in A(x) for m in M(y)]

    # element -> components, shared across fibers
    for x in X.objects:
        for y in X.objects:
            org[_tw_obj(x, y)] = {labels.pair(a, m): (a, m) for a in A(x) for m in M(y)}

    def move(u, v, e):
        s = _tw_obj(X.tgt(u), X.src(v))
        a, m = org[s][e]
        return labels.pair(A.maps[u][a], M.maps[v][m])

    return _build(X, fiber, move, f"({A.name}%{M.name})", org)


def _fun_profunctor(X, dom_at, cod_at, pre, post, name):
    """Fibers ``[dom_at(x, y), cod_at(x, y)]`` acted on by pre/post composition."""
    org = {}
    fibers = {}
    for x in X.objects:
        for y in X.objects:
            fs = functions(dom_at(x, y), cod_at(x, y))
            o = _tw_obj(x, y)
            fibers[o] = [labels.func(phi) for phi in fs]
            org[o] = dict(zip(fibers[o], fs))
    T = twisted(X)
    maps = {}
    for w, (s, t) in T.arrows.items():
        u, v = T.arrow_origin[w]
        x, y2 = T.origin[t]
        dom = dom_at(x, y2)
        p, q = pre(u, v), post(u, v)
        maps[w] = {lab: labels.func((d, q[phi[p[d]]]) for d in dom) for lab, phi in org[s].items()}
    return EndoProfunctor(X, fibers, maps, name=name, check=False, origin=org)


def hom_arrow(M: SetFunctor, N: SetFunctor) -> EndoProfunctor:
    """``(M =>^r N)(x, y) = [M x, N y]``, acting by ``phi |-> N v . phi . M u``."""
    if M.variance != "right" or N.variance != "right":
        raise TypeMismatch("hom_arrow expects two right actions")
    M.require_same_base(N, "hom_arrow")
    return _fun_profunctor(
        M.base,
        lambda x, y: M(x),
        lambda x, y: N(y),
        lambda u, v: M.maps[u],
        lambda u, v: N.maps[v],
        f"({M.name}=>{N.name})",
    )


def hom_arrow_left(B: SetFunctor, A: SetFunctor) -> EndoProfunctor:
    """``(B =>^l A)(x, y) = [B y, A x]``, acting by ``psi |-> A u . psi . B v``."""
    if B.variance != "left" or A.variance != "left":
        raise TypeMismatch("hom_arrow_left expects two left actions")
    B.require_same_base(A, "hom_arrow_left")
    return _fun_profunctor(
        B.base,
        lambda x, y: B(y),
        lambda x, y: A(x),
        lambda u, v: B.maps[v],
        lambda u, v: A.maps[u],
        f"({B.name}=>l{A.name})",
    )


def hom_profunctor(X: FinCat) -> EndoProfunctor:
    """``hom_X(x, y) = X(x, y)`` acting by ``w |-> v w u``."""
    return _build(X, lambda x, y: X.hom(x, y), lambda u, v, w: X.compose(v, X.compose(w, u)), f"hom_{X.name}")


def transpose(H: EndoProfunctor) -> LeftAction:
    """``H'``: ``H`` read as a left action on ``X^op x X`` via the swap ``(x, y) |-> (y, x)``."""
    _require(H, "transpose")
    X = H.X
    T = twisted(X)
    fibers = {o: H.fibers[_tw_obj(T.origin[o][1], T.origin[o][0])] for o in T.objects}
    maps = {}
    for w in T.arrows:
        u, v = T.arrow_origin[w]
        maps[w] = H.maps[_tw_arrow(X, v, u)]
    return LeftAction(T, fibers, maps, name=f"{H.name}'", check=False)


# ---------------------------------------------------------------------------
# comprehension and its left adjoint


def comprehend(H: EndoProfunctor) -> OverCat:
    """``i_X H``: objects over ``x`` are ``H(x, x)``; one arrow ``a -> b`` over
    ``l: x -> y`` exactly when ``H(x, l) a = H(l, y) b``."""
    _require(H, "comprehend")
    X = H.X
    b = CatBuilder(f"i({H.name or 'H'})")
    for x in X.objects:
        for a in H.at(x, x):
            b.add_object((x, a), labels.pair(x, a))
    for lam, (x, y) in X.arrows.items():
        r, l = H.ract(x, lam), H.lact(lam, y)
        for a in H.at(x, x):
            for c in H.at(y, y):
                if r[a] == l[c]:
                    b.add_arrow(
                        (lam, a, c),
                        b.key_obj[(x, a)],
                        b.key_obj[(y, c)],
                        labels.pair(lam, a, c),
                        identity=X.is_identity(lam) and a == c,
                    )
    P = b.build(lambda g, f: (X.compose(g[0], f[0]), f[1], g[2]))
    p = FunctorMap(P, X, {e: P.origin[e][0] for e in P.objects}, {u: P.arrow_origin[u][0] for u in P.arrows}, name="p", check=False)
    return OverCat(p, name=b.name)


def diamond(p: OverCat) -> EndoProfunctor:
    """``<>_X p = E^r_(p^op x p) hom_P``."""
    P, X = p.total, p.base
    R = exists(twisted_functor(p.projection), hom_profunctor(P))
    return EndoProfunctor.from_action(X, R, name=f"<>({p.name})")


# ---------------------------------------------------------------------------
# ends and coends


def end(H: EndoProfunctor) -> FinSet:
    """Sections of ``i_X H``."""
    _require(H, "end")
    return sections(comprehend(H))


def end_as_nats(H: EndoProfunctor) -> FinSet:
    """``Nat(hom_X, H)``, the diagonal-Yoneda form of the end."""
    from .nat import nat_set

    _require(H, "end")
    return nat_set(hom_profunctor(H.X), H)


def coend(H: EndoProfunctor) -> FinSet:
    """Quotient of the disjoint union of ``H(x, x)`` by the dinaturality relation.

    For ``l: x -> y`` and ``e`` in ``H(y, x)``, ``H(l, x) e ~ H(y, l) e``.
    """
    _require(H, "coend")
    X = H.X
    elems = [(x, a) for x in X.objects for a in H.at(x, x)]
    uf = UnionFind(elems)
    for lam, (x, y) in X.arrows.items():
        if X.is_identity(lam):
            continue
        l, r = H.lact(lam, x), H.ract(y, lam)
        for e in H.at(y, x):
            uf.union((x, l[e]), (y, r[e]))
    classes = uf.classes()
    labs = [labels.klass(labels.pair(*c[0])) for c in classes]
    return FinSet(labs, dict(zip(labs, classes)))


def coend_as_tensor(H: EndoProfunctor) -> FinSet:
    """``H' * hom_X`` over ``X^op x X``."""
    from .action import mixed_tensor

    _require(H, "coend")
    return mixed_tensor(transpose(H), hom_profunctor(H.X))


def strong_coend(H: EndoProfunctor) -> FinSet:
    """Connected components of ``i_X H``."""
    _require(H, "strong_coend")
    return components(comprehend(H))


# ---------------------------------------------------------------------------
# dinatural transformations


def _iter_families(H: EndoProfunctor, K: EndoProfunctor, accept) -> Iterator[dict[str, dict[str, str]]]:
    """Families ``a_x: H(x,x) -> K(x,x)``; ``accept(fam, x)`` checks constraints that became decidable."""
    X = H.X
    budget = [limits().max_search]
    objs = list(X.objects)
    choices = {x: functions(H.at(x, x), K.at(x, x)) for x in objs}
    fam: dict[str, dict[str, str]] = {}

    def rec(i):
        if i == len(objs):
            yield dict(fam)
            return
        x = objs[i]
        for c in choices[x]:
            budget[0] -= 1
            if budget[0] < 0:
                raise SizeLimitExceeded("dinatural enumeration exceeded the search budget")
            fam[x] = c
            if accept(fam, x):
                yield from rec(i + 1)
            del fam[x]

    yield from rec(0)


def _placed_arrows(X: FinCat, fam, x):
    for lam, (s, t) in X.arrows.items():
        if (s == x and t in fam) or (t == x and s in fam):
            yield lam, s, t


def _family_set(fams, H) -> FinSet:
    labs = [labels.family({x: labels.func(c) for x, c in f.items()}) for f in fams]
    if len(labs) > limits().max_results:
        raise SizeLimitExceeded("too many dinatural families")
    return FinSet(labs, dict(zip(labs, fams)))


def is_dinatural(H: EndoProfunctor, K: EndoProfunctor, fam) -> bool:
    X = H.X
    for lam, (x, y) in X.arrows.items():
        if not _hexagon(H, K, fam, lam, x, y):
            return False
    return True


def _hexagon(H, K, fam, lam, x, y) -> bool:
    hl, hr = H.lact(lam, x), H.ract(y, lam)
    kr, kl = K.ract(x, lam), K.lact(lam, y)
    ax, ay = fam[x], fam[y]
    return all(kr[ax[hl[e]]] == kl[ay[hr[e]]] for e in H.at(y, x))


def _strong_square(H, K, fam, lam, x, y) -> bool:
    hr, hl = H.ract(x, lam), H.lact(lam, y)
    kr, kl = K.ract(x, lam), K.lact(lam, y)
    ax, ay = fam[x], fam[y]
    for a in H.at(x, x):
        ra = hr[a]
        for b in H.at(y, y):
            if ra == hl[b] and kr[ax[a]] != kl[ay[b]]:
                return False
    return True


def is_strongly_dinatural(H: EndoProfunctor, K: EndoProfunctor, fam) -> bool:
    X = H.X
    return all(_strong_square(H, K, fam, lam, x, y) for lam, (x, y) in X.arrows.items())


def dinaturals(H: EndoProfunctor, K: EndoProfunctor) -> FinSet:
    """Families satisfying the dinaturality hexagon."""
    _require(H, "dinaturals")
    _require(K, "dinaturals")
    if not (H.X is K.X or H.X == K.X):
        raise BaseMismatch("dinaturals between profunctors on different categories")
    X = H.X

    def accept(fam, x):
        return all(_hexagon(H, K, fam, lam, s, t) for lam, s, t in _placed_arrows(X, fam, x))

    return _family_set(list(_iter_families(H, K, accept)), H)


def strong_dinaturals_direct(H: EndoProfunctor, K: EndoProfunctor) -> FinSet:
    """Families satisfying the strong (wedge) condition, by direct search."""
    X = H.X

    def accept(fam, x):
        return all(_strong_square(H, K, fam, lam, s, t) for lam, s, t in _placed_arrows(X, fam, x))

    return _family_set(list(_iter_families(H, K, accept)), H)


def strong_dinaturals(H: EndoProfunctor, K: EndoProfunctor) -> FinSet:
    """``Cat/X(i_X H, i_X K)``, read back as families ``H(x,x) -> K(x,x)``."""
    _require(H, "strong_dinaturals")
    _require(K, "strong_dinaturals")
    if not (H.X is K.X or H.X == K.X):
        raise BaseMismatch("strong dinaturals between profunctors on different categories")
    p, q = comprehend(H), comprehend(K)
    P, Q = p.total, q.total
    fams = []
    seen = set()
    for F in over_functors(p, q):
        fam = {x: {} for x in H.X.objects}
        for e in P.objects:
            x, a = P.origin[e]
            fam[x][a] = Q.origin[F(e)][1]
        key = tuple((x, tuple(sorted(c.items()))) for x, c in fam.items())
        # i_X K has at most one arrow over each arrow of X between two objects,
        # so different functors give different families
        if key not in seen:
            seen.add(key)
            fams.append(fam)
    return _family_set(fams, H)


# ---------------------------------------------------------------------------
# change of base


def ddot_substitute(f: FunctorMap, H: EndoProfunctor) -> EndoProfunctor:
    """``f'' H (x, x') = H(f x, f x')``."""
    _require(H, "ddot_substitute")
    R = substitute(twisted_functor(f), H)
    return EndoProfunctor.from_action(f.domain, R, name=f"{f.name}''{H.name}")


def ddot_exists(f: FunctorMap, H: EndoProfunctor) -> EndoProfunctor:
    _require(H, "ddot_exists")
    R = exists(twisted_functor(f), H)
    return EndoProfunctor.from_action(f.codomain, R, name=f"E''{f.name}{H.name}")


def ddot_forall(f: FunctorMap, H: EndoProfunctor) -> EndoProfunctor:
    _require(H, "ddot_forall")
    R = forall(twisted_functor(f), H)
    return EndoProfunctor.from_action(f.codomain, R, name=f"A''{f.name}{H.name}")


def as_right_action(H: EndoProfunctor) -> RightAction:
    return RightAction(H.base, H.fibers, H.maps, name=H.name, check=False)
