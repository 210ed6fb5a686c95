"""Canonical comparison maps: adjunction transposes and Yoneda evaluations.

Each function returns True when the map it builds is a well-defined
bijection between the two sides; a False means the construction and the
law disagree, which the iso search alone could hide.
"""

from __future__ import annotations

from .. import action as ac
from .. import catover as co
from .. import labels
from .. import profunctor as pro
from ..fincat import twisted, twisted_functor
from ..nat import enumerate_nats, is_natural, is_natural_iso


def _key(comps) -> tuple:
    return tuple((x, tuple(sorted(c.items()))) for x, c in sorted(comps.items()))


def _injective_into(images: list, expected: set | None = None) -> bool:
    s = set(images)
    if len(s) != len(images):
        return False
    return expected is None or s == expected


# ---------------------------------------------------------------------------
# complement trinity: R(N, A |> M) = R(A (.) N, M) = L(A, N > M)


def _bimorphism_key(d: dict) -> tuple:
    return tuple(sorted(d.items()))


def trinity(A, M, N) -> tuple[bool, str]:
    """Transpose every morphism of the three hom-sets to a family
    ``beta_x: A x  x  N x -> M x`` and compare the images."""
    X = A.base
    comp = ac.complement(A, M)
    dot = ac.oodot(A, N)
    tri = ac.triangleright(N, M)
    one = enumerate_nats(N, comp)
    two = enumerate_nats(dot, M)
    three = enumerate_nats(A, tri)

    def t1(t):
        out = {}
        for x in X.objects:
            for n in N(x):
                phi = comp.origin[x][t.components[x][n]]
                for a in A(x):
                    out[(x, a, n)] = phi[a]
        return _bimorphism_key(out)

    def t2(t):
        out = {}
        for x in X.objects:
            idx = dot.class_of[x]
            for a in A(x):
                for n in N(x):
                    o = labels.pair(labels.pair(x, a), labels.pair(x, n))
                    out[(x, a, n)] = t.components[x][idx[(o, X.identity(x), ac.STAR)]]
        return _bimorphism_key(out)

    harr = None
    for x in X.objects:
        if A(x):
            harr = pro.hom_arrow(N, M)
            break

    def t3(t):
        out = {}
        for x in X.objects:
            for a in A(x):
                sec = tri.origin[x][t.components[x][a]]
                obj = sec.object_map[X.identity(x)]
                y, lab = sec.codomain.origin[obj]
                phi = harr.origin[pro._tw_obj(x, x)][lab]
                for n in N(x):
                    out[(x, a, n)] = phi[n]
        return _bimorphism_key(out)

    i1, i2, i3 = [t1(t) for t in one], [t2(t) for t in two], [t3(t) for t in three]
    if not (_injective_into(i1) and _injective_into(i2) and _injective_into(i3)):
        return False, "a transpose is not injective"
    if not (set(i1) == set(i2) == set(i3)):
        return False, f"transposes disagree ({len(i1)}, {len(i2)}, {len(i3)} morphisms)"
    return True, f"{len(i1)} morphisms"


# ---------------------------------------------------------------------------
# Yoneda


def _point_exists(X, x, variance):
    from ..fincat import point, terminal_category

    one = terminal_category()
    px = point(X, x, one)
    I = ac.terminal_left(one) if variance == "left" else ac.terminal_right(one)
    E = ac.exists(px, I)
    unit = ac.exists_unit(E, px, one.objects[0], ac.STAR)
    return E, unit


def yoneda_hom(F, x) -> tuple[bool, str]:
    """``hom(E_x I, F) -> F x``, evaluation at the unit, is bijective."""
    E, unit = _point_exists(F.base, x, F.variance)
    nats = enumerate_nats(E, F)
    ims = [t.components[x][unit] for t in nats]
    ok = _injective_into(ims, set(F(x)))
    return ok, f"|hom| = {len(nats)}, |F x| = {len(F(x))}"


def yoneda_tensor(F, G, x) -> tuple[bool, str]:
    """``G x -> E_x I * G`` (or ``F * E^r_x I`` when ``G`` is left), ``g |-> [unit, g]``."""
    if G.variance == "right":
        E, unit = _point_exists(G.base, x, "left")
        star = ac.mixed_tensor(E, G)
        ims = [ac.class_of(star, x, unit, m) for m in G(x)]
    else:
        E, unit = _point_exists(G.base, x, "right")
        star = ac.mixed_tensor(G, E)
        ims = [ac.class_of(star, x, a, unit) for a in G(x)]
    return _injective_into(ims, set(star.elements)), f"|star| = {len(star)}"


def yoneda_view(A) -> ac.LeftAction:
    """``x |-> hom(y x, A)`` acted on by precomposition."""
    X = A.base
    reps = {x: ac.representable_left(X, x) for x in X.objects}
    nats = {x: enumerate_nats(reps[x], A) for x in X.objects}
    index = {x: {_key(t.components): t.label for t in nats[x]} for x in X.objects}
    origin = {x: {t.label: t for t in nats[x]} for x in X.objects}
    maps = {}
    for u, (x, x2) in X.arrows.items():
        m = {}
        for t in nats[x2]:
            comps = {z: {w: t.components[z][X.compose(u, w)] for w in X.hom(z, x)} for z in X.objects}
            m[t.label] = index[x][_key(comps)]
        maps[u] = m
    return ac.LeftAction(X, {x: [t.label for t in nats[x]] for x in X.objects}, maps, name=f"Y{A.name}", origin=origin, check=True)


def yoneda_view_iso(A) -> bool:
    Y = yoneda_view(A)
    X = A.base
    comps = {x: {lab: t.components[x][X.identity(x)] for lab, t in Y.origin[x].items()} for x in X.objects}
    return is_natural_iso(Y, A, comps)


def coyoneda_view(A) -> ac.LeftAction:
    """``x |-> A * X(x, -)``; classes are moved by ``[z, a, w] |-> [z, a, w u]``."""
    X = A.base
    stars = {x: ac.mixed_tensor(A, ac.representable_right(X, x)) for x in X.objects}
    maps = {}
    for u, (x, x2) in X.arrows.items():
        s2, s1 = stars[x2], stars[x]
        m = {}
        for lab in s2.elements:
            z, a, w = s2.payload[lab][0]
            m[lab] = ac.class_of(s1, z, a, X.compose(w, u))
        maps[u] = m
    return ac.LeftAction(X, {x: stars[x].elements for x in X.objects}, maps, name=f"Z{A.name}", origin={x: stars[x] for x in X.objects}, check=True)


def coyoneda_view_iso(A) -> bool:
    Z = coyoneda_view(A)
    X = A.base
    comps = {x: {a: ac.class_of(Z.origin[x], x, a, X.identity(x)) for a in A(x)} for x in X.objects}
    inv = {}
    for x in X.objects:
        c = comps[x]
        if len(set(c.values())) != len(c) or set(c.values()) != set(Z(x)):
            return False
        inv[x] = {v: k for k, v in c.items()}
    return is_natural(Z, A, inv)


# ---------------------------------------------------------------------------
# diagonal Yoneda and comprehension


def end_to_nats(H) -> tuple[bool, str]:
    """A section ``(a_x)`` of ``i_X H`` goes to ``w: x -> y |-> H(x, w) a_x``."""
    X = H.X
    P = pro.comprehend(H)
    secs = co.sections(P)
    hX = pro.hom_profunctor(X)
    expected = {_key(t.components) for t in enumerate_nats(hX, H)}
    ims = []
    for lab in secs.elements:
        F = secs.payload[lab]
        a = {x: P.total.origin[F.object_map[x]][1] for x in X.objects}
        comps = {}
        for x in X.objects:
            for y in X.objects:
                comps[pro._tw_obj(x, y)] = {w: H.ract(x, w)[a[x]] for w in X.hom(x, y)}
        ims.append(_key(comps))
    return _injective_into(ims, expected), f"{len(ims)} sections"


def coend_to_tensor(H) -> tuple[bool, str]:
    """``[x, e] |-> [(x, x), e, id_x]`` from the coend to ``H' * hom_X``."""
    X = H.X
    cq = pro.coend(H)
    star = pro.coend_as_tensor(H)
    m = {}
    for lab in cq.elements:
        imgs = {ac.class_of(star, pro._tw_obj(x, x), e, X.identity(x)) for x, e in cq.payload[lab]}
        if len(imgs) != 1:
            return False, f"class {lab} is not sent to one class"
        m[lab] = imgs.pop()
    return _injective_into(list(m.values()), set(star.elements)), f"{len(m)} classes"


def comprehension_transpose(p, H) -> tuple[bool, str]:
    """``Cat/X(p, i_X H) -> Nat(<>_X p, H)`` assigns ``[c, (u, v), w] |-> H(u, v)(H(x, p w) a_e)``."""
    X, P = p.base, p.total
    iH = pro.comprehend(H)
    T = twisted(P)
    tp = twisted_functor(p.projection)
    R = ac.exists(tp, pro.hom_profunctor(P))
    D = pro.EndoProfunctor.from_action(X, R)
    expected = {_key(t.components) for t in enumerate_nats(D, H)}
    ims = []
    for F in co.over_functors(p, iH):
        a = {e: iH.total.origin[F.object_map[e]][1] for e in P.objects}
        comps = {}
        for d in R.base.objects:
            cd = {}
            for lab in R(d):
                vals = set()
                for (c, v, w), cls in R.class_of[d].items():
                    if cls != lab:
                        continue
                    e, _ = T.origin[c]
                    l = p.over_arrow(w)
                    h = H.ract(p.over(e), l)[a[e]]
                    vals.add(H.maps[v][h])
                if len(vals) != 1:
                    return False, "transpose is not well defined on a class"
                cd[lab] = vals.pop()
            comps[d] = cd
        if not is_natural(D, H, comps):
            return False, "transpose is not natural"
        ims.append(_key(comps))
    return _injective_into(ims, expected), f"{len(ims)} morphisms over {X.name}"
