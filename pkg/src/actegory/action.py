"""Left and right actions of a finite category and their operators.

A left action ``A`` on ``X`` sends ``f: x -> y`` to ``A y -> A x``; a right
action ``M`` sends it to ``M x -> M y``.  Generic constructions are written
once against the covariant presentation (see :mod:`actegory.nat`).
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterable, Mapping, Sequence

from . import labels
from .config import limits
from .errors import BaseMismatch, SizeLimitExceeded, TypeMismatch
from .fincat import (
    FinCat,
    FinSet,
    FunctorMap,
    opposite,
    opposite_functor,
)
from .nat import SetFunctor, enumerate_nats, nat_set
from .unionfind import UnionFind

STAR = "*"


class LeftAction(SetFunctor):
    """A presheaf ``X^op -> FinSet``."""

    variance = "left"


class RightAction(SetFunctor):
    """A copresheaf ``X -> FinSet``."""

    variance = "right"


def from_covariant(variance: str, C: FinCat, fibers, maps, *, name: str = "", origin=None, check: bool = False):
    """Wrap covariant data on ``C`` as an action of the given variance."""
    if variance == "left":
        return LeftAction(opposite(C), fibers, maps, name=name, origin=origin, check=check)
    return RightAction(C, fibers, maps, name=name, origin=origin, check=check)


def _same_kind(F: SetFunctor, C: FinCat, fibers, maps, name: str, origin=None):
    return from_covariant(F.variance, C, fibers, maps, name=name, origin=origin)


def _check_base(*items: SetFunctor) -> FinCat:
    X = items[0].base
    for F in items[1:]:
        if not (F.base is X or F.base == X):
            raise BaseMismatch(
                f"{items[0].name or 'first argument'} and {F.name or 'argument'} live over different categories"
            )
    return X


def _want(F, cls, what):
    if not isinstance(F, SetFunctor) or F.variance != cls.variance:
        raise TypeMismatch(f"{what} expects a {cls.__name__}, got {type(F).__name__}")


def functions(dom: Sequence[str], cod: Sequence[str]) -> list[dict[str, str]]:
    """All maps ``dom -> cod`` in lexicographic order of images."""
    n = len(cod) ** len(dom)
    if n > limits().derived_fiber:
        raise SizeLimitExceeded(f"function set of size {len(cod)}^{len(dom)} exceeds the derived fiber bound")
    return [dict(zip(dom, img)) for img in _cartesian(cod, repeat=len(dom))]


# ---------------------------------------------------------------------------
# basic actions


def constant(variance: str, X: FinCat, V: Iterable[str] | FinSet, name: str = "") -> SetFunctor:
    els = V.elements if isinstance(V, FinSet) else tuple(V)
    fibers = {x: els for x in X.objects}
    maps = {f: {e: e for e in els} for f in X.arrows}
    if variance == "left":
        return LeftAction(X, fibers, maps, name=name or "const", check=False)
    return RightAction(X, fibers, maps, name=name or "const", check=False)


def terminal_left(X: FinCat) -> LeftAction:
    return constant("left", X, [STAR], name="I")


def terminal_right(X: FinCat) -> RightAction:
    return constant("right", X, [STAR], name="I")


def constant_left(X: FinCat, V) -> LeftAction:
    return constant("left", X, V)


def constant_right(X: FinCat, V) -> RightAction:
    return constant("right", X, V)


def _rep_co(C: FinCat, x: str):
    """The covariant representable ``C(x, -)``."""
    fibers = {z: C.hom(x, z) for z in C.objects}
    maps = {f: {g: C.compose(f, g) for g in fibers[C.src(f)]} for f in C.arrows}
    return fibers, maps


def representable_left(X: FinCat, x: str) -> LeftAction:
    """``X(-, x)``; the fiber at ``z`` is the set of arrows ``z -> x``."""
    X.require(x)
    fibers, maps = _rep_co(opposite(X), x)
    return LeftAction(X, fibers, maps, name=f"y{x}", check=False)


def representable_right(X: FinCat, x: str) -> RightAction:
    """``X(x, -)``."""
    X.require(x)
    fibers, maps = _rep_co(X, x)
    return RightAction(X, fibers, maps, name=f"y^{x}", check=False)


def representable_like(F: SetFunctor, x: str) -> SetFunctor:
    return representable_left(F.base, x) if F.variance == "left" else representable_right(F.base, x)


# ---------------------------------------------------------------------------
# hom-sets, products, internal homs


def hom_left(A: LeftAction, B: LeftAction) -> FinSet:
    _check_base(A, B)
    return nat_set(A, B)


def hom_right(M: RightAction, N: RightAction) -> FinSet:
    _check_base(M, N)
    return nat_set(M, N)


def hom(F: SetFunctor, G: SetFunctor) -> FinSet:
    _check_base(F, G)
    if F.variance != G.variance:
        raise TypeMismatch("hom between actions of different variance")
    return nat_set(F, G)


def tensor(F: SetFunctor, G: SetFunctor) -> SetFunctor:
    """Pointwise cartesian product."""
    _check_base(F, G)
    if F.variance != G.variance:
        raise TypeMismatch("tensor of actions of different variance")
    C = F.co_base
    fibers, maps = {}, {}
    lim = limits().derived_fiber
    for x in C.objects:
        if len(F.fibers[x]) * len(G.fibers[x]) > lim:
            raise SizeLimitExceeded(f"tensor fiber at {x} too large")
        fibers[x] = [labels.pair(a, b) for a in F(x) for b in G(x)]
    for f, (s, _) in C.arrows.items():
        mf, mg = F.maps[f], G.maps[f]
        maps[f] = {labels.pair(a, b): labels.pair(mf[a], mg[b]) for a in F(s) for b in G(s)}
    origin = {x: {labels.pair(a, b): (a, b) for a in F(x) for b in G(x)} for x in C.objects}
    return _same_kind(F, C, fibers, maps, f"({F.name}x{G.name})", origin)


def coproduct(F: SetFunctor, G: SetFunctor) -> SetFunctor:
    _check_base(F, G)
    C = F.co_base
    fibers = {x: [labels.pair("0", a) for a in F(x)] + [labels.pair("1", b) for b in G(x)] for x in C.objects}
    maps = {}
    for f, (s, _) in C.arrows.items():
        m = {labels.pair("0", a): labels.pair("0", F.maps[f][a]) for a in F(s)}
        m.update({labels.pair("1", b): labels.pair("1", G.maps[f][b]) for b in G(s)})
        maps[f] = m
    return _same_kind(F, C, fibers, maps, f"({F.name}+{G.name})")


def _nat_key(t) -> tuple:
    return tuple((x, tuple(sorted(c.items()))) for x, c in sorted(t.components.items()))


def internal_hom(F: SetFunctor, G: SetFunctor) -> SetFunctor:
    """``[F, G] x = hom(y x * F, G)`` with ``y x`` the representable at ``x``."""
    _check_base(F, G)
    if F.variance != G.variance:
        raise TypeMismatch("internal hom of actions of different variance")
    C = F.co_base
    fibers, index, origin = {}, {}, {}
    for x in C.objects:
        R = from_covariant(F.variance, C, *_rep_co(C, x), name=f"y{x}")
        P = tensor(R, F)
        nats = enumerate_nats(P, G)
        fibers[x] = [t.label for t in nats]
        index[x] = {_nat_key(t): t.label for t in nats}
        origin[x] = {t.label: t for t in nats}
    maps = {}
    for f, (x, y) in C.arrows.items():
        m = {}
        for lab, t in origin[x].items():
            comps = {}
            for z in C.objects:
                cz = {}
                for g in C.hom(y, z):
                    g2 = C.compose(g, f)
                    for a in F(z):
                        cz[labels.pair(g, a)] = t.components[z][labels.pair(g2, a)]
                comps[z] = cz
            key = tuple((z, tuple(sorted(c.items()))) for z, c in sorted(comps.items()))
            m[lab] = index[y][key]
        maps[f] = m
    return _same_kind(F, C, fibers, maps, f"[{F.name},{G.name}]", origin)


exponential = internal_hom


# ---------------------------------------------------------------------------
# complements


def complement(A: LeftAction, M: RightAction) -> RightAction:
    """``(A |> M) x = M x ^ (A x)`` with ``phi -> M f . phi . A f``."""
    _want(A, LeftAction, "complement")
    _want(M, RightAction, "complement")
    X = _check_base(A, M)
    fibers, origin = {}, {}
    for x in X.objects:
        fs = functions(A(x), M(x))
        fibers[x] = [labels.func(phi) for phi in fs]
        origin[x] = {labels.func(phi): phi for phi in fs}
    maps = {}
    for f, (x, y) in X.arrows.items():
        Af, Mf = A.maps[f], M.maps[f]
        m = {}
        for lab, phi in origin[x].items():
            m[lab] = labels.func((b, Mf[phi[Af[b]]]) for b in A(y))
        maps[f] = m
    return RightAction(X, fibers, maps, name=f"({A.name}|{M.name})", origin=origin, check=False)


def complement_r(M: RightAction, A: LeftAction) -> LeftAction:
    """The symmetric complement: ``(M |> A) x = A x ^ (M x)``."""
    _want(M, RightAction, "complement_r")
    _want(A, LeftAction, "complement_r")
    X = _check_base(M, A)
    fibers, origin = {}, {}
    for x in X.objects:
        fs = functions(M(x), A(x))
        fibers[x] = [labels.func(psi) for psi in fs]
        origin[x] = {labels.func(psi): psi for psi in fs}
    maps = {}
    for f, (x, y) in X.arrows.items():
        Af, Mf = A.maps[f], M.maps[f]
        m = {}
        for lab, psi in origin[y].items():
            m[lab] = labels.func((n, Af[psi[Mf[n]]]) for n in M(x))
        maps[f] = m
    return LeftAction(X, fibers, maps, name=f"({M.name}|{A.name})", origin=origin, check=False)


def absolute_complement(A: LeftAction, V) -> RightAction:
    return complement(A, constant_right(A.base, V))


def absolute_complement_r(M: RightAction, V) -> LeftAction:
    return complement_r(M, constant_left(M.base, V))


def oodot(A: LeftAction, N: RightAction) -> RightAction:
    """``A (.) N``: the reflection of ``i A x_X i N`` into discrete opfibrations."""
    _want(A, LeftAction, "oodot")
    _want(N, RightAction, "oodot")
    _check_base(A, N)
    from .catover import diamond_right, elements_left, elements_right, fibered_product

    R = diamond_right(fibered_product(elements_left(A), elements_right(N)))
    R.name = f"({A.name}.{N.name})"
    return R


def oodot_r(M: RightAction, B: LeftAction) -> LeftAction:
    _want(M, RightAction, "oodot_r")
    _want(B, LeftAction, "oodot_r")
    _check_base(M, B)
    from .catover import diamond_left, elements_left, elements_right, fibered_product

    L = diamond_left(fibered_product(elements_right(M), elements_left(B)))
    L.name = f"({M.name}.{B.name})"
    return L


def triangleright(N: RightAction, M: RightAction) -> LeftAction:
    """``N |> M``: the coreflection of the exponential ``(i M)^(i N)``.

    ``L(A, N |> M) = R(N, A |> M)``.
    """
    _want(N, RightAction, "triangleright")
    _want(M, RightAction, "triangleright")
    _check_base(N, M)
    from .catover import square_left
    from .profunctor import comprehend, hom_arrow

    L = square_left(comprehend(hom_arrow(N, M)))
    L.name = f"({N.name}>{M.name})"
    return L


def triangleright_r(B: LeftAction, A: LeftAction) -> RightAction:
    """Symmetric enrichment: ``R(M, B |> A) = L(B, M |> A)``."""
    _want(B, LeftAction, "triangleright_r")
    _want(A, LeftAction, "triangleright_r")
    _check_base(B, A)
    from .catover import square_right
    from .profunctor import comprehend, hom_arrow_left

    R = square_right(comprehend(hom_arrow_left(B, A)))
    R.name = f"({B.name}>{A.name})"
    return R


# ---------------------------------------------------------------------------
# mixed tensor


def mixed_tensor(A: LeftAction, M: RightAction) -> FinSet:
    """``A * M``: classes of ``(x, a, m)`` glued along the arrows of ``X``.

    For ``u: x -> y``, ``b`` in ``A y`` and ``m`` in ``M x`` the triples
    ``(x, A u b, m)`` and ``(y, b, M u m)`` are identified.  ``payload``
    maps each class label to its members.
    """
    _want(A, LeftAction, "mixed_tensor")
    _want(M, RightAction, "mixed_tensor")
    X = _check_base(A, M)
    triples = [(x, a, m) for x in X.objects for a in A(x) for m in M(x)]
    uf = UnionFind(triples)
    for u, (x, y) in X.arrows.items():
        if X.is_identity(u):
            continue
        Au, Mu = A.maps[u], M.maps[u]
        for b in A(y):
            for m in M(x):
                uf.union((x, Au[b], m), (y, b, Mu[m]))
    classes = uf.classes()
    lab = [labels.klass(labels.pair(*c[0])) for c in classes]
    fs = FinSet(lab, dict(zip(lab, classes)))
    fs.payload["_class_of"] = {t: lab[i] for i, c in enumerate(classes) for t in c}
    return fs


def class_of(star: FinSet, x: str, a: str, m: str) -> str:
    return star.payload["_class_of"][(x, a, m)]


# ---------------------------------------------------------------------------
# powers, copowers, substitution


def copower(V, F: SetFunctor) -> SetFunctor:
    """``V . F``: pointwise ``V x F x``."""
    els = V.elements if isinstance(V, FinSet) else tuple(V)
    C = F.co_base
    fibers = {x: [labels.pair(v, a) for v in els for a in F(x)] for x in C.objects}
    maps = {f: {labels.pair(v, a): labels.pair(v, F.maps[f][a]) for v in els for a in F(s)} for f, (s, _) in C.arrows.items()}
    return _same_kind(F, C, fibers, maps, f"(V.{F.name})")


def power(V, F: SetFunctor) -> SetFunctor:
    """``[V, F]``: pointwise ``F x ^ V``."""
    els = V.elements if isinstance(V, FinSet) else tuple(V)
    C = F.co_base
    fibers, origin = {}, {}
    for x in C.objects:
        fs = functions(els, F(x))
        fibers[x] = [labels.func(p) for p in fs]
        origin[x] = {labels.func(p): p for p in fs}
    maps = {}
    for f, (s, _) in C.arrows.items():
        mf = F.maps[f]
        maps[f] = {lab: labels.func((v, mf[p[v]]) for v in els) for lab, p in origin[s].items()}
    return _same_kind(F, C, fibers, maps, f"[V,{F.name}]", origin)


def substitute(f: FunctorMap, F: SetFunctor) -> SetFunctor:
    """``f^* F``: fibers ``F(f x)``, action ``F(f u)``."""
    Y = F.base
    if not (f.codomain is Y or f.codomain == Y):
        raise BaseMismatch(f"substitution along {f.name}: codomain is not the base of {F.name}")
    X = f.domain
    fibers = {x: F.fibers[f.object_map[x]] for x in X.objects}
    maps = {u: F.maps[f.arrow_map[u]] for u in X.arrows}
    cls = LeftAction if F.variance == "left" else RightAction
    return cls(X, fibers, maps, name=f"{f.name}*{F.name}", check=False)


# ---------------------------------------------------------------------------
# quantifiers (Kan extensions of set-valued functors)


def _lan(F: FunctorMap, G: SetFunctor, fibers_of, maps_of):
    """Left Kan extension of the covariant functor (fibers_of, maps_of) on F.domain."""
    C, D = F.domain, F.codomain
    fibers, maps, origin, cls_of = {}, {}, {}, {}
    non_id = [u for u in C.arrows if not C.is_identity(u)]
    for d in D.objects:
        triples = [(c, v, m) for c in C.objects for v in D.hom(F(c), d) for m in fibers_of[c]]
        if len(triples) > limits().derived_fiber * 4:
            raise SizeLimitExceeded(f"left extension at {d} has too many generators")
        uf = UnionFind(triples)
        for u in non_id:
            c, c2 = C.arrows[u]
            Fu = F.arrow_map[u]
            Gu = maps_of[u]
            for v in D.hom(F(c2), d):
                vFu = D.compose(v, Fu)
                for m in fibers_of[c]:
                    uf.union((c, vFu, m), (c2, v, Gu[m]))
        classes = uf.classes()
        labs = [labels.klass(labels.pair(*k[0])) for k in classes]
        if len(labs) > limits().derived_fiber:
            raise SizeLimitExceeded(f"left extension fiber at {d} too large")
        fibers[d] = labs
        origin[d] = {lab: k[0] for lab, k in zip(labs, classes)}
        cls_of[d] = {t: lab for lab, k in zip(labs, classes) for t in k}
    for w, (d, d2) in D.arrows.items():
        maps[w] = {lab: cls_of[d2][(c, D.compose(w, v), m)] for lab, (c, v, m) in origin[d].items()}
    return fibers, maps, origin, cls_of


def _ran(F: FunctorMap, fibers_of, maps_of):
    """Right Kan extension: ``(Ran G) d = Nat(D(d, F-), G)``."""
    C, D = F.domain, F.codomain
    G = RightAction(C, fibers_of, maps_of, check=False)
    fibers, maps, origin, index = {}, {}, {}, {}
    for d in D.objects:
        wf = {c: D.hom(d, F(c)) for c in C.objects}
        wm = {u: {v: D.compose(F.arrow_map[u], v) for v in wf[C.src(u)]} for u in C.arrows}
        W = RightAction(C, wf, wm, check=False)
        nats = enumerate_nats(W, G)
        if len(nats) > limits().derived_fiber:
            raise SizeLimitExceeded(f"right extension fiber at {d} too large")
        fibers[d] = [t.label for t in nats]
        origin[d] = {t.label: t for t in nats}
        index[d] = {_nat_key(t): t.label for t in nats}
    for w, (d, d2) in D.arrows.items():
        m = {}
        for lab, t in origin[d].items():
            comps = {c: {v2: t.components[c][D.compose(v2, w)] for v2 in D.hom(d2, F(c))} for c in C.objects}
            key = tuple((c, tuple(sorted(x.items()))) for c, x in sorted(comps.items()))
            m[lab] = index[d2][key]
        maps[w] = m
    return fibers, maps, origin


def _co_functor(f: FunctorMap, F: SetFunctor) -> FunctorMap:
    if not (f.domain is F.base or f.domain == F.base):
        raise BaseMismatch(f"quantifier along {f.name}: domain is not the base of {F.name or 'the action'}")
    return opposite_functor(f) if F.variance == "left" else f


def exists(f: FunctorMap, F: SetFunctor) -> SetFunctor:
    """Left adjoint to substitution along ``f``."""
    cf = _co_functor(f, F)
    fibers, maps, origin, cls_of = _lan(cf, F, {x: F(x) for x in F.base.objects}, F.maps)
    E = from_covariant(F.variance, cf.codomain, fibers, maps, name=f"E{f.name}{F.name}", origin=origin)
    E.class_of = cls_of
    return E


def exists_unit(E: SetFunctor, f: FunctorMap, x: str, e: str) -> str:
    """The unit ``F -> f* E_f F`` at ``x``: the class of ``(x, id, e)`` in ``(E_f F)(f x)``."""
    y = f(x)
    return E.class_of[y][(x, f.codomain.identity(y), e)]


def forall(f: FunctorMap, F: SetFunctor) -> SetFunctor:
    """Right adjoint to substitution along ``f``."""
    cf = _co_functor(f, F)
    fibers, maps, origin = _ran(cf, {x: F(x) for x in F.base.objects}, F.maps)
    return from_covariant(F.variance, cf.codomain, fibers, maps, name=f"A{f.name}{F.name}", origin=origin)


# ---------------------------------------------------------------------------
# biactions


class BiAction:
    """An action by bijections, seen both as a left and as a right action."""

    def __init__(self, left: LeftAction, right: RightAction):
        self.left = left
        self.right = right
        self.base = left.base

    def __repr__(self):
        return f"BiAction({self.left!r})"


def is_biaction(F: SetFunctor) -> BiAction | None:
    """The biaction carried by ``F`` when every action map is bijective."""
    X = F.base
    inv = {}
    for f, m in F.maps.items():
        if len(set(m.values())) != len(m):
            return None
        s, t = F.co_base.arrows[f]
        if len(F.fibers[s]) != len(F.fibers[t]):
            return None
        inv[f] = {b: a for a, b in m.items()}
    if F.variance == "left":
        right = RightAction(X, F.fibers, inv, name=F.name + "^r", check=False)
        return BiAction(F, right)
    left = LeftAction(X, F.fibers, inv, name=F.name + "^l", check=False)
    return BiAction(left, F)


def biaction_embed(X: FinCat, V) -> BiAction:
    """The constant biaction with value ``V``."""
    return BiAction(constant_left(X, V), constant_right(X, V))


def swap(M: SetFunctor) -> SetFunctor:
    """On a groupoid, turn an action into one of the opposite variance via inverses."""
    X = M.base
    maps = {}
    for f in X.arrows:
        g = X.inverse(f)
        if g is None:
            raise TypeMismatch(f"swap requires a groupoid; {f} is not invertible")
        maps[f] = M.maps[g]
    cls = RightAction if M.variance == "left" else LeftAction
    return cls(X, M.fibers, maps, name=f"s{M.name}", check=False)
