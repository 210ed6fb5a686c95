"""Weighted (co)limits in finite categories, Kan extensions of functors,
and predicates on functors with their equivalent characterizations.

``{M, f}`` for a weight ``M`` in R X and ``f: X -> Y`` is an object ``z`` of
``Y`` with ``Y(y, z) = Nat(M, Y(y, f-))`` naturally in ``y``; dually
``A * f`` satisfies ``Y(z, y) = Nat(A, Y(f-, y))``.  Both may fail to
exist, so they come back as :class:`PartialObject` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import action as act
from . import labels
from .catover import as_over, coslice, diamond_right, identity_over, pullback, slice
from .errors import BaseMismatch, SizeLimitExceeded, TypeMismatch
from .fincat import (
    FinCat,
    FunctorMap,
    components,
    functors,
    identity_functor,
    naturally_isomorphic_functors,
    to_terminal,
)
from .nat import NatTransform, SetFunctor, enumerate_nats, find_natural_iso


@dataclass
class PartialObject:
    """An object with its universal witness, or the reason it does not exist."""

    value: str | None
    iso: NatTransform | None = None
    universal: NatTransform | None = None
    reason: str = ""
    others: list = field(default_factory=list)

    @property
    def exists(self) -> bool:
        return self.value is not None

    def __bool__(self):
        return self.exists

    def __repr__(self):
        return f"PartialObject({self.value})" if self.exists else f"PartialObject(absent: {self.reason})"


@dataclass
class PartialFunctor:
    functor: FunctorMap | None
    reason: str = ""
    failing: str | None = None
    values: dict = field(default_factory=dict)

    @property
    def exists(self) -> bool:
        return self.functor is not None

    def __bool__(self):
        return self.exists


@dataclass
class Report:
    """Outcome of a predicate: the defining check plus every characterization.

    ``checks`` maps a name to True/False, or None when a form is undefined
    on this input (a partial (co)limit that does not exist).
    """

    name: str
    holds: bool
    checks: dict[str, bool | None] = field(default_factory=dict)
    witness: object = None

    @property
    def agree(self) -> bool:
        return all(v is None or v == self.holds for v in self.checks.values())

    @property
    def disagreements(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is not None and v != self.holds]

    def __bool__(self):
        return self.holds

    def as_dict(self) -> dict:
        return {"predicate": self.name, "holds": self.holds, "agree": self.agree, "checks": dict(self.checks)}


# ---------------------------------------------------------------------------
# representing set-valued functors


def _nat_key(comps) -> tuple:
    return tuple((x, tuple(sorted(c.items()))) for x, c in sorted(comps.items()))


class _HomWeight:
    """``y |-> Nat(W, R_y)`` where ``R_y`` is ``Y(y, f-)`` or ``Y(f-, y)``.

    Built as a set-valued functor on ``Y`` (left for limits, right for
    colimits) keeping an index from component tables to labels.
    """

    def __init__(self, W: SetFunctor, f: FunctorMap, kind: str):
        Y = f.codomain
        self.W, self.f, self.kind = W, f, kind
        self.origin, self.index = {}, {}
        fibers = {}
        for y in Y.objects:
            if kind == "limit":
                R = act.substitute(f, act.representable_right(Y, y))
            else:
                R = act.substitute(f, act.representable_left(Y, y))
            nats = enumerate_nats(W, R)
            fibers[y] = [t.label for t in nats]
            self.origin[y] = {t.label: t.components for t in nats}
            self.index[y] = {_nat_key(t.components): t.label for t in nats}
        maps = {}
        for w, (y, y2) in Y.arrows.items():
            if kind == "limit":
                # left action: Nat(W, Y(y2, f-)) -> Nat(W, Y(y, f-)), precompose with w
                m = {}
                for lab, c in self.origin[y2].items():
                    new = {x: {e: Y.compose(v, w) for e, v in cx.items()} for x, cx in c.items()}
                    m[lab] = self.index[y][_nat_key(new)]
            else:
                m = {}
                for lab, c in self.origin[y].items():
                    new = {x: {e: Y.compose(w, v) for e, v in cx.items()} for x, cx in c.items()}
                    m[lab] = self.index[y2][_nat_key(new)]
            maps[w] = m
        cls = act.LeftAction if kind == "limit" else act.RightAction
        self.functor = cls(Y, fibers, maps, name=f"Nat({W.name},{f.name})", check=False)

    def label_of(self, y: str, comps) -> str:
        return self.index[y][_nat_key(comps)]


def _represent(H: _HomWeight) -> PartialObject:
    Y = H.f.codomain
    found = []
    for z in Y.objects:
        rep = act.representable_left(Y, z) if H.kind == "limit" else act.representable_right(Y, z)
        iso = find_natural_iso(rep, H.functor)
        if iso is not None:
            found.append((z, iso))
    if not found:
        what = "limit" if H.kind == "limit" else "colimit"
        return PartialObject(None, reason=f"no object of {Y.name} represents the {what} weight")
    z, iso = found[0]
    for z2, _ in found[1:]:
        if not Y.isomorphic_objects(z, z2):
            raise AssertionError(f"two non-isomorphic objects {z}, {z2} represent the same functor")
    lab = iso.components[z][Y.identity(z)]
    comps = H.origin[z][lab]
    target = act.substitute(H.f, act.representable_right(Y, z) if H.kind == "limit" else act.representable_left(Y, z))
    universal = NatTransform(H.W, target, comps, check=False)
    return PartialObject(z, iso=iso, universal=universal, others=[z2 for z2, _ in found[1:]])


def weighted_limit(M: SetFunctor, f: FunctorMap) -> PartialObject:
    """``{M, f}``."""
    if M.variance != "right":
        raise TypeMismatch("a limit weight is a right action")
    if not (M.base is f.domain or M.base == f.domain):
        raise BaseMismatch("weight and diagram live over different categories")
    return _represent(_HomWeight(M, f, "limit"))


def weighted_colimit(A: SetFunctor, f: FunctorMap) -> PartialObject:
    """``A * f``."""
    if A.variance != "left":
        raise TypeMismatch("a colimit weight is a left action")
    if not (A.base is f.domain or A.base == f.domain):
        raise BaseMismatch("weight and diagram live over different categories")
    return _represent(_HomWeight(A, f, "colimit"))


def conical_limit(f: FunctorMap) -> PartialObject:
    return weighted_limit(act.terminal_right(f.domain), f)


def conical_colimit(f: FunctorMap) -> PartialObject:
    return weighted_colimit(act.terminal_left(f.domain), f)


def same_object(Y: FinCat, a: PartialObject, b: PartialObject) -> bool:
    """Both absent, or both present and isomorphic."""
    if a.exists != b.exists:
        return False
    return not a.exists or Y.isomorphic_objects(a.value, b.value)


def preserves_limit(g: FunctorMap, M: SetFunctor, f: FunctorMap) -> bool:
    """Does ``g`` carry ``{M, f}`` to ``{M, g f}``?  Vacuous when ``{M, f}`` is absent."""
    L = weighted_limit(M, f)
    if not L.exists:
        return True
    L2 = weighted_limit(M, f.then(g))
    return L2.exists and g.codomain.isomorphic_objects(g(L.value), L2.value)


def preserves_colimit(g: FunctorMap, A: SetFunctor, f: FunctorMap) -> bool:
    C = weighted_colimit(A, f)
    if not C.exists:
        return True
    C2 = weighted_colimit(A, f.then(g))
    return C2.exists and g.codomain.isomorphic_objects(g(C.value), C2.value)


# ---------------------------------------------------------------------------
# Kan extensions of functors


def _invert(iso: NatTransform, z: str, lab: str) -> str:
    for arrow, l in iso.components[z].items():
        if l == lab:
            return arrow
    raise KeyError(lab)


def kan_right(f: FunctorMap, g: FunctorMap) -> PartialFunctor:
    """``A_f g`` with ``(A_f g) y = {Y(y, f-), g}``."""
    if not (f.domain is g.domain or f.domain == g.domain):
        raise BaseMismatch("kan_right: f and g have different domains")
    Y, Z = f.codomain, g.codomain
    vals, weights = {}, {}
    for y in Y.objects:
        My = act.substitute(f, act.representable_right(Y, y))
        Hy = _HomWeight(My, g, "limit")
        L = _represent(Hy)
        if not L.exists:
            return PartialFunctor(None, reason=f"no limit at {y}: {L.reason}", failing=y)
        vals[y], weights[y] = L, Hy
    omap = {y: vals[y].value for y in Y.objects}
    amap = {}
    for w, (y, y2) in Y.arrows.items():
        zy = omap[y]
        kappa = vals[y].universal.components
        # kappa_y restricted along Y(y2, f-) -> Y(y, f-), v |-> v w
        comps = {x: {v: kappa[x][Y.compose(v, w)] for v in Y.hom(y2, f(x))} for x in f.domain.objects}
        lab = weights[y2].label_of(zy, comps)
        amap[w] = _invert(vals[y2].iso, zy, lab)
    F = FunctorMap(Y, Z, omap, amap, name=f"Ran({g.name})", check=True)
    return PartialFunctor(F, values=vals)


def kan_left(f: FunctorMap, g: FunctorMap) -> PartialFunctor:
    """``E_f g`` with ``(E_f g) y = Y(f-, y) * g``."""
    if not (f.domain is g.domain or f.domain == g.domain):
        raise BaseMismatch("kan_left: f and g have different domains")
    Y, Z = f.codomain, g.codomain
    vals, weights = {}, {}
    for y in Y.objects:
        Ay = act.substitute(f, act.representable_left(Y, y))
        Hy = _HomWeight(Ay, g, "colimit")
        C = _represent(Hy)
        if not C.exists:
            return PartialFunctor(None, reason=f"no colimit at {y}: {C.reason}", failing=y)
        vals[y], weights[y] = C, Hy
    omap = {y: vals[y].value for y in Y.objects}
    amap = {}
    for w, (y, y2) in Y.arrows.items():
        zy2 = omap[y2]
        kappa = vals[y2].universal.components
        comps = {x: {v: kappa[x][Y.compose(w, v)] for v in Y.hom(f(x), y)} for x in f.domain.objects}
        lab = weights[y].label_of(zy2, comps)
        amap[w] = _invert(vals[y].iso, zy2, lab)
    F = FunctorMap(Y, Z, omap, amap, name=f"Lan({g.name})", check=True)
    return PartialFunctor(F, values=vals)


def comma_under(f: FunctorMap, y: str) -> FunctorMap:
    """The projection ``y/f -> X``."""
    return pullback(f, coslice(f.codomain, y)).projection


def comma_over(f: FunctorMap, y: str) -> FunctorMap:
    """The projection ``f/y -> X``."""
    return pullback(f, slice(f.codomain, y)).projection


def kan_right_by_comma(f: FunctorMap, g: FunctorMap) -> dict[str, PartialObject]:
    """Pointwise ``lim (y/f -> X -> Z)``; the comma-category oracle."""
    return {y: conical_limit(comma_under(f, y).then(g)) for y in f.codomain.objects}


def kan_left_by_comma(f: FunctorMap, g: FunctorMap) -> dict[str, PartialObject]:
    return {y: conical_colimit(comma_over(f, y).then(g)) for y in f.codomain.objects}


# ---------------------------------------------------------------------------
# probes used for "for every A" clauses


def left_probes(X: FinCat) -> list[SetFunctor]:
    """Representables, the terminal action and the cogenerators ``2^X(x,-)``."""
    two = ["0", "1"]
    out = [act.representable_left(X, x) for x in X.objects]
    out.append(act.terminal_left(X))
    out += [act.absolute_complement_r(act.representable_right(X, x), two) for x in X.objects]
    return out


def right_probes(X: FinCat) -> list[SetFunctor]:
    two = ["0", "1"]
    out = [act.representable_right(X, x) for x in X.objects]
    out.append(act.terminal_right(X))
    out += [act.absolute_complement(act.representable_left(X, x), two) for x in X.objects]
    return out


def _iso(F: SetFunctor, G: SetFunctor) -> bool:
    return find_natural_iso(F, G) is not None


def _safe(fn: Callable[[], bool | None]) -> bool | None:
    try:
        return fn()
    except SizeLimitExceeded:
        return None


def _functor_iso(f: FunctorMap, g: FunctorMap) -> bool:
    return naturally_isomorphic_functors(f, g) is not None


def _class_index(fs) -> dict:
    """Member -> class label for a quotient set whose payload lists the members."""
    if "_class_of" in fs.payload:
        return fs.payload["_class_of"]
    return {m: lab for lab in fs for m in fs.payload[lab]}


def _bijective(mapping: dict, cod: Iterable) -> bool:
    cod = set(cod)
    return len(set(mapping.values())) == len(mapping) == len(cod) and set(mapping.values()) == cod


def _end_families(H) -> list[dict[str, str]]:
    """Wedges ``(e_x)`` with ``H(x, l) e_x = H(l, y) e_y`` for every ``l: x -> y``."""
    from itertools import product as cartesian

    from .config import limits

    X = H.X
    objs = list(X.objects)
    total = 1
    for x in objs:
        total *= max(1, len(H.at(x, x)))
    if total > limits().max_search:
        raise SizeLimitExceeded(f"{total} candidate wedges exceed the search bound")
    arrows = [(l, st) for l, st in X.arrows.items() if not X.is_identity(l)]
    out = []
    for pick in cartesian(*(H.at(x, x) for x in objs)):
        fam = dict(zip(objs, pick))
        if all(H.ract(x, l)[fam[x]] == H.lact(l, y)[fam[y]] for l, (x, y) in arrows):
            out.append(fam)
    return out


def _nat_precompose(c: dict, K, H) -> dict:
    """Precomposition ``Nat(K, H) -> Nat(src c, H)`` with the component table ``c``."""
    from .nat import iter_nats

    out = {}
    for t in iter_nats(K, H):
        new = {o: {e: t.components[o][c[o][e]] for e in c[o]} for o in c}
        out[_nat_key(t.components)] = _nat_key(new)
    return out


def _hom_comparison(f: FunctorMap):
    """``hom_X -> f'' hom_Y`` on the twisted category of ``X``, as components."""
    from . import profunctor as pro

    hX = pro.hom_profunctor(f.domain)
    K = pro.ddot_substitute(f, pro.hom_profunctor(f.codomain))
    comps = {t: {u: f.arrow_map[u] for u in hX(t)} for t in hX.base.objects}
    return hX, K, comps


def _as_finset_functor(H, Z: FinCat) -> FunctorMap | None:
    """The profunctor ``H`` read as a functor into ``Set<=k``; None if a fiber is too big."""
    k = len(Z.objects) - 1
    T = H.base
    pos = {t: {e: i for i, e in enumerate(H(t))} for t in T.objects}
    if any(len(pos[t]) > k for t in T.objects):
        return None
    obj = {t: f"s{len(pos[t])}" for t in T.objects}
    arr = {}
    for a, (t, t2) in T.arrows.items():
        fn = "".join(str(pos[t2][H.maps[a][e]]) for e in H(t))
        same = obj[t] == obj[t2] and fn == "".join(map(str, range(len(pos[t]))))
        arr[a] = Z.identity(obj[t]) if same else f"{obj[t]}>{obj[t2]}:{fn}"
    return FunctorMap(T, Z, obj, arr, name=f"{H.name}#", check=True)


# ---------------------------------------------------------------------------
# fully faithful


def hom_bijective(f: FunctorMap) -> bool:
    X, Y = f.domain, f.codomain
    for x in X.objects:
        for x2 in X.objects:
            image = [f.arrow_map[a] for a in X.hom(x, x2)]
            if len(set(image)) != len(image) or len(image) != len(Y.hom(f(x), f(x2))):
                return False
    return True


def is_fully_faithful(f: FunctorMap) -> Report:
    from . import profunctor as pro

    X, Y = f.domain, f.codomain
    holds = hom_bijective(f)
    c: dict[str, bool | None] = {}
    c["repr_left"] = all(
        _iso(act.substitute(f, act.representable_left(Y, f(x))), act.representable_left(X, x)) for x in X.objects
    )
    c["repr_right"] = all(
        _iso(act.substitute(f, act.representable_right(Y, f(x))), act.representable_right(X, x)) for x in X.objects
    )
    c["unit_left"] = all(
        _iso(act.substitute(f, act.exists(f, A)), A) for A in [act.representable_left(X, x) for x in X.objects]
    )
    c["unit_right"] = all(
        _iso(act.substitute(f, act.exists(f, M)), M) for M in [act.representable_right(X, x) for x in X.objects]
    )
    c["counit_forall_left"] = _safe(lambda: all(_iso(act.substitute(f, act.forall(f, A)), A) for A in left_probes(X)))
    c["counit_forall_right"] = _safe(lambda: all(_iso(act.substitute(f, act.forall(f, M)), M) for M in right_probes(X)))
    c["ddot_hom"] = _safe(lambda: _iso(pro.ddot_substitute(f, pro.hom_profunctor(Y)), pro.hom_profunctor(X)))

    def end_transfer():
        # the canonical map between ends is precomposition with hom_X -> f'' hom_Y
        hX, K, comp = _hom_comparison(f)
        for H in (hX, K):
            pre = _nat_precompose(comp, K, H)
            if not _bijective(pre, [_nat_key(t.components) for t in enumerate_nats(hX, H)]):
                return False
        return True

    def coend_transfer():
        # [t, a, u] |-> [t, a, f u] from H' * hom_X to H' * f'' hom_Y
        hX, K, comp = _hom_comparison(f)
        probes = [hX] + [
            pro.outer_product(act.representable_left(X, a), act.representable_right(X, b))
            for a in X.objects
            for b in X.objects
        ]
        for H in probes:
            Ht = pro.transpose(H)
            src, tgt = act.mixed_tensor(Ht, hX), act.mixed_tensor(Ht, K)
            cs, ct = _class_index(src), _class_index(tgt)
            m = {}
            for (t, a, u), lab in cs.items():
                img = ct[(t, a, comp[t][u])]
                if m.setdefault(lab, img) != img:
                    return False
            if not _bijective(m, tgt):
                return False
        return True

    c["end_transfer"] = _safe(end_transfer)
    c["coend_transfer"] = _safe(coend_transfer)

    def comma_terminal():
        # the unit of pointwise Lan along f is invertible iff (x, id) is terminal in f/fx
        for x in X.objects:
            C = comma_over(f, f(x)).domain
            top = [o for o in C.objects if C.origin[o] == (x, Y.identity(f(x)))]
            if len(top) != 1 or not all(len(C.hom(o, top[0])) == 1 for o in C.objects):
                return False
        return True

    c["lan_unit"] = _safe(comma_terminal)
    return Report("fully_faithful", holds, c)


# ---------------------------------------------------------------------------
# absolutely dense


def _outer_reps(Y: FinCat) -> list:
    from . import profunctor as pro

    return [
        pro.outer_product(act.representable_left(Y, a), act.representable_right(Y, b))
        for a in Y.objects
        for b in Y.objects
    ]


def _counit_left(f: FunctorMap, A: SetFunctor) -> bool:
    return _iso(act.exists(f, act.substitute(f, A)), A)


def is_absolutely_dense(f: FunctorMap, *, samples_g: Iterable[FunctorMap] = (), internal_bound: int = 3) -> Report:
    from . import profunctor as pro

    X, Y = f.domain, f.codomain
    reps_l = [act.representable_left(Y, y) for y in Y.objects]
    reps_r = [act.representable_right(Y, y) for y in Y.objects]
    holds = all(_counit_left(f, A) for A in reps_l)
    c: dict[str, bool | None] = {}
    c["counit_right"] = all(_iso(act.exists(f, act.substitute(f, M)), M) for M in reps_r)
    c["forall_left"] = _safe(lambda: all(_iso(act.forall(f, act.substitute(f, A)), A) for A in left_probes(Y)))
    c["forall_right"] = _safe(lambda: all(_iso(act.forall(f, act.substitute(f, M)), M) for M in right_probes(Y)))
    hY = pro.hom_profunctor(Y)
    E = _safe(lambda: pro.ddot_exists(f, pro.hom_profunctor(X)))
    c["ad1_ddot_exists_hom"] = None if E is None else _iso(E, hY)

    def ends():
        # restriction (e_y) |-> (e_fx) of wedges, for the two probes that detect the counit
        for H in [hY] + ([E] if E is not None else []):
            src = [tuple(sorted(w.items())) for w in _end_families(H)]
            tgt = {tuple(sorted(w.items())) for w in _end_families(pro.ddot_substitute(f, H))}
            m = {w: tuple(sorted((x, dict(w)[f(x)]) for x in X.objects)) for w in src}
            if not _bijective(m, tgt):
                return False
        return True

    def coends():
        # [x, e] |-> [fx, e] from the coend of f'' H to the coend of H
        for H in [hY] + _outer_reps(Y):
            top, bot = pro.coend(H), pro.coend(pro.ddot_substitute(f, H))
            ct, cb = _class_index(top), _class_index(bot)
            m = {}
            for (x, e), lab in cb.items():
                img = ct[(f(x), e)]
                if m.setdefault(lab, img) != img:
                    return False
            if not _bijective(m, top):
                return False
        return True

    c["ad2_end"] = _safe(ends)
    c["ad3_coend"] = _safe(coends)

    def diamonds():
        gs = [identity_functor(Y), to_terminal(Y)] + list(samples_g)
        for g in gs:
            lhs = pro.diamond(as_over(g))
            rhs = pro.diamond(as_over(f.then(g)))
            if not _iso(lhs, rhs):
                return False
        return True

    c["ad4_diamond_g"] = _safe(diamonds)
    c["ad5_diamond_f"] = _safe(lambda: _iso(pro.diamond(as_over(f)), hY))

    def internal_coends():
        # g: Y^op x Y -> Set<=k read off probe profunctors; both (co)ends computed in Set<=k
        from .fincat import twisted_functor
        from .library import finsets

        Z = finsets(internal_bound)
        hx = pro.hom_profunctor(X)
        tf = twisted_functor(f)
        tried = False
        one_l, one_r = act.terminal_left(Y), act.terminal_right(Y)
        probes = [hY] + _outer_reps(Y)
        probes += [pro.outer_product(act.representable_left(Y, a), one_r) for a in Y.objects]
        probes += [pro.outer_product(one_l, act.representable_right(Y, b)) for b in Y.objects]
        for H in probes:
            g = _as_finset_functor(H, Z)
            if g is None:
                continue
            tried = True
            gf = tf.then(g)
            if not same_object(Z, weighted_colimit(pro.transpose(hY), g), weighted_colimit(pro.transpose(hx), gf)):
                return False
            if not same_object(Z, weighted_limit(pro.as_right_action(hY), g), weighted_limit(pro.as_right_action(hx), gf)):
                return False
        return True if tried else None

    c["ad6_internal_coend"] = _safe(internal_coends)
    return Report("absolutely_dense", holds, c)


# ---------------------------------------------------------------------------
# left and right dense


def _postcomp_bijective(f: FunctorMap, Y: FinCat, left: bool) -> bool:
    """``Y(x, y) -> Nat(f^l Y(-, x), f^l Y(-, y))`` is a bijection (or the right version)."""
    for x in Y.objects:
        for y in Y.objects:
            if left:
                Ax = act.substitute(f, act.representable_left(Y, x))
                Ay = act.substitute(f, act.representable_left(Y, y))
            else:
                Ax = act.substitute(f, act.representable_right(Y, x))
                Ay = act.substitute(f, act.representable_right(Y, y))
            nats = enumerate_nats(Ax, Ay)
            keys = {_nat_key(t.components) for t in nats}
            images = set()
            arrows = Y.hom(x, y) if left else Y.hom(y, x)
            for w in arrows:
                if left:
                    comps = {z: {v: Y.compose(w, v) for v in Ax(z)} for z in f.domain.objects}
                else:
                    comps = {z: {v: Y.compose(v, w) for v in Ax(z)} for z in f.domain.objects}
                images.add(_nat_key(comps))
            if len(images) != len(arrows) or images != keys:
                return False
    return True


def is_left_dense(f: FunctorMap) -> Report:
    X, Y = f.domain, f.codomain
    holds = _postcomp_bijective(f, Y, left=True)
    c: dict[str, bool | None] = {}
    c["forall_repr"] = _safe(
        lambda: all(
            _iso(act.forall(f, act.substitute(f, act.representable_left(Y, y))), act.representable_left(Y, y))
            for y in Y.objects
        )
    )

    def lan_self():
        K = kan_left(f, f)
        return K.exists and _functor_iso(K.functor, identity_functor(Y))

    c["lan_f_f"] = _safe(lan_self)

    def density_colimit():
        for y in Y.objects:
            C = weighted_colimit(act.substitute(f, act.representable_left(Y, y)), f)
            if not C.exists or not Y.isomorphic_objects(C.value, y):
                return False
        return True

    c["density_colimit"] = _safe(density_colimit)
    return Report("left_dense", holds, c)


def is_right_dense(f: FunctorMap) -> Report:
    X, Y = f.domain, f.codomain
    holds = _postcomp_bijective(f, Y, left=False)
    c: dict[str, bool | None] = {}
    c["forall_repr"] = _safe(
        lambda: all(
            _iso(act.forall(f, act.substitute(f, act.representable_right(Y, y))), act.representable_right(Y, y))
            for y in Y.objects
        )
    )

    def ran_self():
        K = kan_right(f, f)
        return K.exists and _functor_iso(K.functor, identity_functor(Y))

    c["ran_f_f"] = _safe(ran_self)

    def density_limit():
        for y in Y.objects:
            L = weighted_limit(act.substitute(f, act.representable_right(Y, y)), f)
            if not L.exists or not Y.isomorphic_objects(L.value, y):
                return False
        return True

    c["density_limit"] = _safe(density_limit)
    return Report("right_dense", holds, c)


# ---------------------------------------------------------------------------
# final and initial


def _connected(cat: FinCat) -> bool:
    return len(components(cat)) == 1


def is_final(f: FunctorMap, *, samples_g: Iterable[FunctorMap] = ()) -> Report:
    """``y/f`` is non-empty and connected for every ``y``."""
    X, Y = f.domain, f.codomain
    holds = all(_connected(comma_under(f, y).domain) for y in Y.objects)
    c: dict[str, bool | None] = {}
    c["exists_terminal"] = _iso(act.exists(f, act.terminal_left(X)), act.terminal_left(Y))
    bang_x, bang_y = to_terminal(X), to_terminal(Y)

    def colim_transfer():
        for M in right_probes(Y):
            lhs = act.exists(bang_x, act.substitute(f, M))
            rhs = act.exists(bang_y, M)
            if not _iso(lhs, rhs):
                return False
        return True

    def lim_transfer():
        for A in left_probes(Y):
            lhs = act.forall(bang_x, act.substitute(f, A))
            rhs = act.forall(bang_y, A)
            if not _iso(lhs, rhs):
                return False
        return True

    c["colimit_transfer"] = _safe(colim_transfer)
    c["limit_transfer"] = _safe(lim_transfer)
    c["comma_repr"] = all(
        len(act.exists(bang_x, act.substitute(f, act.representable_right(Y, y))).fibers["*"]) == 1 for y in Y.objects
    )

    def conical():
        gs = list(samples_g) or [identity_functor(Y)]
        for g in gs:
            if not same_object(g.codomain, conical_colimit(f.then(g)), conical_colimit(g)):
                return False
        return True

    # only a sample of diagrams g: reported, one-directional
    c["conical_colimit_sample"] = None if not holds else _safe(conical)
    return Report("final", holds, c)


def is_initial(f: FunctorMap, *, samples_g: Iterable[FunctorMap] = ()) -> Report:
    """``f/y`` is non-empty and connected for every ``y``."""
    X, Y = f.domain, f.codomain
    holds = all(_connected(comma_over(f, y).domain) for y in Y.objects)
    c: dict[str, bool | None] = {}
    c["exists_terminal"] = _iso(act.exists(f, act.terminal_right(X)), act.terminal_right(Y))
    bang_x, bang_y = to_terminal(X), to_terminal(Y)

    def colim_transfer():
        for A in left_probes(Y):
            if not _iso(act.exists(bang_x, act.substitute(f, A)), act.exists(bang_y, A)):
                return False
        return True

    def lim_transfer():
        for M in right_probes(Y):
            if not _iso(act.forall(bang_x, act.substitute(f, M)), act.forall(bang_y, M)):
                return False
        return True

    c["colimit_transfer"] = _safe(colim_transfer)
    c["limit_transfer"] = _safe(lim_transfer)
    c["comma_repr"] = all(
        len(act.exists(bang_x, act.substitute(f, act.representable_left(Y, y))).fibers["*"]) == 1 for y in Y.objects
    )

    def conical():
        gs = list(samples_g) or [identity_functor(Y)]
        for g in gs:
            if not same_object(g.codomain, conical_limit(f.then(g)), conical_limit(g)):
                return False
        return True

    c["conical_limit_sample"] = None if not holds else _safe(conical)
    return Report("initial", holds, c)


# ---------------------------------------------------------------------------
# adjunctible maps and adjoint pairs


def _universal_arrows(f: FunctorMap, left: bool) -> dict[str, str] | str:
    """For each ``y`` an ``x`` with ``Y(f-, y) = X(-, x)`` (left) or ``Y(y, f-) = X(x, -)``.

    Found by a direct universal-arrow scan; returns the failing ``y`` otherwise.
    """
    X, Y = f.domain, f.codomain
    table = {}
    for y in Y.objects:
        hit = None
        for x in X.objects:
            cands = Y.hom(f(x), y) if left else Y.hom(y, f(x))
            for e in cands:
                ok = True
                for x2 in X.objects:
                    src = X.hom(x2, x) if left else X.hom(x, x2)
                    tgt = Y.hom(f(x2), y) if left else Y.hom(y, f(x2))
                    img = {Y.compose(e, f.arrow_map[a]) if left else Y.compose(f.arrow_map[a], e) for a in src}
                    if len(img) != len(src) or len(img) != len(tgt):
                        ok = False
                        break
                if ok:
                    hit = x
                    break
            if hit is not None:
                break
        if hit is None:
            return y
        table[y] = hit
    return table


def _adjunctible(f: FunctorMap, left: bool) -> Report:
    X, Y = f.domain, f.codomain
    direct = _universal_arrows(f, left)
    holds = isinstance(direct, dict)
    table = {}
    ok = True
    for y in Y.objects:
        if left:
            W = act.substitute(f, act.representable_left(Y, y))
            hit = next((x for x in X.objects if _iso(W, act.representable_left(X, x))), None)
        else:
            W = act.substitute(f, act.representable_right(Y, y))
            hit = next((x for x in X.objects if _iso(W, act.representable_right(X, x))), None)
        if hit is None:
            ok = False
            table = y
            break
        table[y] = hit
    def via_kan():
        # the adjoint, if any, is the Kan extension of the identity along f
        K = (kan_left if left else kan_right)(f, identity_functor(X))
        if not K.exists:
            return False
        pair = check_adjoint_pair(f, K.functor) if left else check_adjoint_pair(K.functor, f)
        return pair.holds

    name = "left_adjunctible" if left else "right_adjunctible"
    checks = {"representability": ok, "kan_adjoint": _safe(via_kan)}
    return Report(name, holds, checks, witness=direct if holds else table if not ok else direct)


def is_left_adjunctible(f: FunctorMap) -> Report:
    """``f^l Y(-, y)`` is representable for every ``y``; the witness maps ``y`` to its representing ``x``."""
    return _adjunctible(f, True)


def is_right_adjunctible(f: FunctorMap) -> Report:
    return _adjunctible(f, False)


def check_adjoint_pair(g: FunctorMap, f: FunctorMap, samples: Sequence[SetFunctor] = ()) -> Report:
    """``g -| f`` for ``g: Y -> X`` and ``f: X -> Y``.

    The defining check searches a natural unit ``id -> f g`` whose components
    are universal arrows; the characterization compares ``E^r_g M`` with
    ``f^r M`` on representables and on ``samples``.
    """
    Y, X = g.domain, g.codomain
    if not (f.domain == X and f.codomain == Y):
        raise BaseMismatch("check_adjoint_pair expects g: Y -> X and f: X -> Y")
    fg = g.then(f)
    holds = False
    unit = None
    from .fincat import nat_isos_between_functors

    for eta in nat_isos_between_functors(identity_functor(Y), fg, isos_only=False):
        good = True
        for y in Y.objects:
            for x in X.objects:
                src = X.hom(g(y), x)
                img = {Y.compose(f.arrow_map[a], eta[y]) for a in src}
                if len(img) != len(src) or len(img) != len(Y.hom(y, f(x))):
                    good = False
                    break
            if not good:
                break
        if good:
            holds, unit = True, eta
            break
    c = {"hom_iso": _two_sided_homs_iso(g, f)}
    if samples:
        c["exists_vs_substitute"] = all(_iso(act.exists(g, M), act.substitute(f, M)) for M in samples)
    return Report("adjoint_pair", holds, c, witness=unit)


def _two_sided_homs_iso(g: FunctorMap, f: FunctorMap) -> bool:
    """``X(g-, -) = Y(-, f-)`` as functors on ``Y^op x X``."""
    from .fincat import opposite, product

    Y, X = g.domain, g.codomain
    C = product(opposite(Y), X)
    fib_p, fib_q, map_p, map_q = {}, {}, {}, {}
    for o in C.objects:
        y, x = C.origin[o]
        fib_p[o], fib_q[o] = X.hom(g(y), x), Y.hom(y, f(x))
    for w in C.arrows:
        v, u = C.arrow_origin[w]
        map_p[w] = {a: X.compose(u, X.compose(a, g.arrow_map[v])) for a in fib_p[C.src(w)]}
        map_q[w] = {b: Y.compose(f.arrow_map[u], Y.compose(b, v)) for b in fib_q[C.src(w)]}
    P = act.RightAction(C, fib_p, map_p, name="X(g-,-)", check=False)
    Q = act.RightAction(C, fib_q, map_q, name="Y(-,f-)", check=False)
    return _iso(P, Q)
