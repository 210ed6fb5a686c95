"""The law registry.

A law either names two expression builders whose values are compared
(natural-isomorphism search for actions, cardinality for finite sets) or a
custom check that returns ``(ok, path, detail)``.  Builders receive the
instance; engine operations are looked up through their modules at call
time so the mutation harness can swap them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .. import action as ac
from .. import catover as co
from .. import funpred as fp
from .. import profunctor as pro
from .. import twovalued as tv
from ..fincat import FinSet, FunctorMap, nat_isos_between_functors, opposite, product
from ..nat import SetFunctor, count_nats, enumerate_nats, find_natural_iso
from . import canonical as cn
from . import oracles

Outcome = tuple  # (ok: bool, path: str, detail: str)


@dataclass(frozen=True)
class LawSpec:
    id: str
    slots: tuple[str, ...]
    anchor: str
    left: Callable | None = None
    right: Callable | None = None
    check: Callable | None = None
    category: str | None = None  # force a category family (groupoid, poset)
    group: str = ""

    def __post_init__(self):
        if self.check is None and (self.left is None or self.right is None):
            raise ValueError(f"law {self.id} needs two builders or a check")


def compare(lhs, rhs) -> Outcome:
    if isinstance(lhs, SetFunctor) and isinstance(rhs, SetFunctor):
        iso = find_natural_iso(lhs, rhs)
        if iso is None:
            return False, "search", "no natural isomorphism"
        return True, "search", ""
    if isinstance(lhs, FinSet) and isinstance(rhs, FinSet):
        return len(lhs) == len(rhs), "count", f"{len(lhs)} vs {len(rhs)}"
    if isinstance(lhs, int) and isinstance(rhs, int):
        return lhs == rhs, "count", f"{lhs} vs {rhs}"
    if isinstance(lhs, bool) and isinstance(rhs, bool):
        return lhs == rhs, "exact", f"{lhs} vs {rhs}"
    raise TypeError(f"cannot compare {type(lhs).__name__} with {type(rhs).__name__}")


REGISTRY: list[LawSpec] = []


def law(id, slots, anchor, left=None, right=None, *, check=None, category=None, group=""):
    REGISTRY.append(LawSpec(id, tuple(slots), anchor, left, right, check, category, group))


def _many(*pairs) -> Callable:
    """Chain of expressions that must all agree."""

    def run(i):
        vals = [p(i) for p in pairs]
        for a, b in zip(vals, vals[1:]):
            ok, path, detail = compare(a, b)
            if not ok:
                return ok, path, detail
        return True, path, ""

    return run


def _canonical(fn) -> Callable:
    def run(i):
        ok, detail = fn(i)
        return ok, "canonical", detail

    return run


def _all(pred, detail="") -> Callable:
    def run(i):
        ok = pred(i)
        return bool(ok), "exact", detail if not ok else ""

    return run


def _IL(i):
    return ac.terminal_left(i["X"])


def _IR(i):
    return ac.terminal_right(i["X"])


def _jl(i):
    return ac.constant_left(i["X"], i["V"])


def _jr(i):
    return ac.constant_right(i["X"], i["V"])


def _sub(i, F):
    return ac.substitute(i["f"], F)


def _ex(i, F):
    return ac.exists(i["f"], F)


def _fa(i, F):
    return ac.forall(i["f"], F)


# ---------------------------------------------------------------------------
# the complemented pair on one category

G = "complement"
law("comp1.1", "A", "tensor unit", lambda i: ac.tensor(_IL(i), i["A"]), lambda i: i["A"], group=G)
law("comp1.2", "ABC", "tensor associativity",
    lambda i: ac.tensor(ac.tensor(i["A"], i["B"]), i["C"]), lambda i: ac.tensor(i["A"], ac.tensor(i["B"], i["C"])), group=G)
law("comp1.3", "M", "complement unit", lambda i: ac.complement(_IL(i), i["M"]), lambda i: i["M"], group=G)
law("comp1.4", "ABM", "complement by a tensor is iterated complement",
    lambda i: ac.complement(ac.tensor(i["A"], i["B"]), i["M"]),
    lambda i: ac.complement(i["A"], ac.complement(i["B"], i["M"])), group=G)
law("comp2.1", "ABC", "tensor-hom adjunction",
    check=_many(lambda i: ac.hom(ac.tensor(i["A"], i["B"]), i["C"]),
                lambda i: ac.hom(i["A"], ac.internal_hom(i["B"], i["C"])),
                lambda i: ac.hom(i["B"], ac.internal_hom(i["A"], i["C"]))), group=G)
law("comp2.2", "AMN", "complement has two right adjoints",
    check=_many(lambda i: ac.hom(i["N"], ac.complement(i["A"], i["M"])),
                lambda i: ac.hom(ac.oodot(i["A"], i["N"]), i["M"]),
                lambda i: ac.hom(i["A"], ac.triangleright(i["N"], i["M"]))), group=G)
law("comp5.1", "A", "internal hom unit", lambda i: ac.internal_hom(_IL(i), i["A"]), lambda i: i["A"], group=G)
law("comp5.2", "ABC", "internal hom currying",
    lambda i: ac.internal_hom(ac.tensor(i["A"], i["B"]), i["C"]),
    lambda i: ac.internal_hom(i["A"], ac.internal_hom(i["B"], i["C"])), group=G)
law("comp6.1", "M", "oodot unit", lambda i: ac.oodot(_IL(i), i["M"]), lambda i: i["M"], group=G)
law("comp6.2", "ABM", "oodot is an action",
    lambda i: ac.oodot(ac.tensor(i["A"], i["B"]), i["M"]), lambda i: ac.oodot(i["A"], ac.oodot(i["B"], i["M"])), group=G)
law("comp6.3", "AMN", "enrichment of an oodot",
    check=_many(lambda i: ac.triangleright(ac.oodot(i["A"], i["M"]), i["N"]),
                lambda i: ac.internal_hom(i["A"], ac.triangleright(i["M"], i["N"])),
                lambda i: ac.triangleright(i["M"], ac.complement(i["A"], i["N"]))), group=G)
law("comp10.1", "M", "right tensor unit", lambda i: ac.tensor(_IR(i), i["M"]), lambda i: i["M"], group=G)
law("comp10.2", "MNP", "right tensor associativity",
    lambda i: ac.tensor(ac.tensor(i["M"], i["N"]), i["P"]), lambda i: ac.tensor(i["M"], ac.tensor(i["N"], i["P"])), group=G)
law("comp10.3", "A", "symmetric complement unit", lambda i: ac.complement_r(_IR(i), i["A"]), lambda i: i["A"], group=G)
law("comp10.4", "MNA", "symmetric complement by a tensor",
    lambda i: ac.complement_r(ac.tensor(i["M"], i["N"]), i["A"]),
    lambda i: ac.complement_r(i["M"], ac.complement_r(i["N"], i["A"])), group=G)
law("comp11", "AMN", "complement trinity through the constructed transposes",
    check=_canonical(lambda i: cn.trinity(i["A"], i["M"], i["N"])), group=G)
law("comp11.r", "MAB", "symmetric complement trinity",
    check=_many(lambda i: ac.hom(i["B"], ac.complement_r(i["M"], i["A"])),
                lambda i: ac.hom(ac.oodot_r(i["M"], i["B"]), i["A"]),
                lambda i: ac.hom(i["M"], ac.triangleright_r(i["B"], i["A"]))), group=G)

# ---------------------------------------------------------------------------
# substitution and quantifiers along f: X -> Y

G = "substitution"
law("comp3.1", ["f"], "substitution preserves the unit",
    lambda i: _sub(i, ac.terminal_left(i["Y"])), lambda i: _IL(i), group=G)
law("comp3.2", ["f", "A2", "B2"], "substitution preserves tensors",
    lambda i: _sub(i, ac.tensor(i["A2"], i["B2"])), lambda i: ac.tensor(_sub(i, i["A2"]), _sub(i, i["B2"])), group=G)
law("comp3.3", ["f", "A2", "M2"], "substitution preserves complements",
    lambda i: _sub(i, ac.complement(i["A2"], i["M2"])), lambda i: ac.complement(_sub(i, i["A2"]), _sub(i, i["M2"])), group=G)
law("comp4.1", ["f", "A2", "B"], "substitution is left adjoint to forall",
    lambda i: ac.hom(_sub(i, i["A2"]), i["B"]), lambda i: ac.hom(i["A2"], _fa(i, i["B"])), group=G)
law("comp4.2", ["f", "A", "B2"], "exists is left adjoint to substitution",
    lambda i: ac.hom(_ex(i, i["A"]), i["B2"]), lambda i: ac.hom(i["A"], _sub(i, i["B2"])), group=G)
law("comp7.1", ["f", "A2", "B"], "internal hom into forall",
    lambda i: ac.internal_hom(i["A2"], _fa(i, i["B"])),
    lambda i: _fa(i, ac.internal_hom(_sub(i, i["A2"]), i["B"])), group=G)
law("comp7.2", ["f", "A2", "M"], "oodot Frobenius along exists",
    lambda i: ac.oodot(i["A2"], _ex(i, i["M"])), lambda i: _ex(i, ac.oodot(_sub(i, i["A2"]), i["M"])), group=G)
law("comp7.3", ["f", "M", "N2"], "enrichment from exists",
    lambda i: ac.triangleright(_ex(i, i["M"]), i["N2"]),
    lambda i: _fa(i, ac.triangleright(i["M"], _sub(i, i["N2"]))), group=G)
law("comp12.1", ["f"], "right substitution preserves the unit",
    lambda i: _sub(i, ac.terminal_right(i["Y"])), lambda i: _IR(i), group=G)
law("comp12.2", ["f", "M2", "N2"], "right substitution preserves tensors",
    lambda i: _sub(i, ac.tensor(i["M2"], i["N2"])), lambda i: ac.tensor(_sub(i, i["M2"]), _sub(i, i["N2"])), group=G)
law("comp12.3", ["f", "M2", "A2"], "substitution preserves symmetric complements",
    lambda i: _sub(i, ac.complement_r(i["M2"], i["A2"])),
    lambda i: ac.complement_r(_sub(i, i["M2"]), _sub(i, i["A2"])), group=G)
law("comp13.1", ["f", "M2", "N"], "right substitution is left adjoint to forall",
    lambda i: ac.hom(_sub(i, i["M2"]), i["N"]), lambda i: ac.hom(i["M2"], _fa(i, i["N"])), group=G)
law("comp13.2", ["f", "M", "N2"], "right exists is left adjoint to substitution",
    lambda i: ac.hom(_ex(i, i["M"]), i["N2"]), lambda i: ac.hom(i["M"], _sub(i, i["N2"])), group=G)

# ---------------------------------------------------------------------------
# groupoids and biactions

G = "collapse"
law("group", "AM", "on a groupoid the complement is an internal hom",
    lambda i: ac.swap(ac.complement(i["A"], i["M"])), lambda i: ac.internal_hom(i["A"], ac.swap(i["M"])),
    category="groupoid", group=G)
law("comp20.1", "VA", "biaction tensor", lambda i: ac.tensor(_jl(i), i["A"]), lambda i: ac.oodot_r(_jr(i), i["A"]), group=G)
law("comp20.2", "VM", "biaction complement",
    lambda i: ac.complement_r(i["M"], _jl(i)), lambda i: ac.triangleright(i["M"], _jr(i)), group=G)
law("comp20.3", "VM", "biaction right tensor", lambda i: ac.tensor(_jr(i), i["M"]), lambda i: ac.oodot(_jl(i), i["M"]), group=G)
law("comp20.4", "VA", "biaction symmetric complement",
    lambda i: ac.complement(i["A"], _jr(i)), lambda i: ac.triangleright_r(i["A"], _jl(i)), group=G)

# ---------------------------------------------------------------------------
# the nine laws and the inner-product laws

G = "nine"
law("comp25.1", ["f", "V", "A2"], "substitution commutes with copowers",
    lambda i: _sub(i, ac.copower(i["V"], i["A2"])), lambda i: ac.copower(i["V"], _sub(i, i["A2"])), group=G)
law("comp25.2", ["f", "A2", "B"], "forall is right adjoint to substitution",
    lambda i: ac.hom(i["A2"], _fa(i, i["B"])), lambda i: ac.hom(_sub(i, i["A2"]), i["B"]), group=G)
law("comp25.3", ["f", "V", "B"], "forall commutes with powers",
    lambda i: ac.power(i["V"], _fa(i, i["B"])), lambda i: _fa(i, ac.power(i["V"], i["B"])), group=G)
law("comp26.1", ["f", "V", "A"], "exists commutes with copowers",
    lambda i: ac.copower(i["V"], _ex(i, i["A"])), lambda i: _ex(i, ac.copower(i["V"], i["A"])), group=G)
law("comp26.2", ["f", "A", "B2"], "exists is left adjoint to substitution",
    lambda i: ac.hom(_ex(i, i["A"]), i["B2"]), lambda i: ac.hom(i["A"], _sub(i, i["B2"])), group=G)
law("comp26.3", ["f", "V", "B2"], "substitution commutes with powers",
    lambda i: _sub(i, ac.power(i["V"], i["B2"])), lambda i: ac.power(i["V"], _sub(i, i["B2"])), group=G)
law("comp27.1", ["f", "A", "M2"], "mixed tensor with an exists",
    lambda i: ac.mixed_tensor(_ex(i, i["A"]), i["M2"]), lambda i: ac.mixed_tensor(i["A"], _sub(i, i["M2"])), group=G)
law("comp27.2", ["f", "M2", "V"], "substitution preserves absolute complements",
    lambda i: _sub(i, ac.absolute_complement_r(i["M2"], i["V"])),
    lambda i: ac.absolute_complement_r(_sub(i, i["M2"]), i["V"]), group=G)
law("comp27.3", ["f", "A", "V"], "absolute complement of an exists",
    lambda i: ac.absolute_complement(_ex(i, i["A"]), i["V"]),
    lambda i: _fa(i, ac.absolute_complement(i["A"], i["V"])), group=G)

law("ip1.1", "VAB", "copowers and powers enrich hom",
    check=_many(lambda i: len(ac.hom(ac.copower(i["V"], i["A"]), i["B"])),
                lambda i: len(ac.hom(i["A"], i["B"])) ** len(i["V"]),
                lambda i: len(ac.hom(i["A"], ac.power(i["V"], i["B"])))), group=G)
law("ip1.2", "VMN", "right copowers and powers enrich hom",
    check=_many(lambda i: len(ac.hom(ac.copower(i["V"], i["M"]), i["N"])),
                lambda i: len(ac.hom(i["M"], i["N"])) ** len(i["V"]),
                lambda i: len(ac.hom(i["M"], ac.power(i["V"], i["N"])))), group=G)
law("ip1.3", "AMV", "mixed tensor against absolute complements",
    check=_many(lambda i: len(i["V"]) ** len(ac.mixed_tensor(i["A"], i["M"])),
                lambda i: len(ac.hom(i["A"], ac.absolute_complement_r(i["M"], i["V"]))),
                lambda i: len(ac.hom(i["M"], ac.absolute_complement(i["A"], i["V"])))), group=G)
law("ip2.1", ["f", "V", "A2"], "substitution preserves copowers",
    lambda i: _sub(i, ac.copower(i["V"], i["A2"])), lambda i: ac.copower(i["V"], _sub(i, i["A2"])), group=G)
law("ip2.2", ["f", "V", "A2"], "substitution preserves powers",
    lambda i: _sub(i, ac.power(i["V"], i["A2"])), lambda i: ac.power(i["V"], _sub(i, i["A2"])), group=G)
law("ip2.3", ["f", "V", "M2"], "right substitution preserves copowers",
    lambda i: _sub(i, ac.copower(i["V"], i["M2"])), lambda i: ac.copower(i["V"], _sub(i, i["M2"])), group=G)
law("ip2.4", ["f", "V", "M2"], "right substitution preserves powers",
    lambda i: _sub(i, ac.power(i["V"], i["M2"])), lambda i: ac.power(i["V"], _sub(i, i["M2"])), group=G)
law("ip3.1", ["f", "A2", "V"], "substitution preserves absolute complement",
    lambda i: _sub(i, ac.absolute_complement(i["A2"], i["V"])),
    lambda i: ac.absolute_complement(_sub(i, i["A2"]), i["V"]), group=G)
law("ip3.2", ["f", "M2", "V"], "substitution preserves symmetric absolute complement",
    lambda i: _sub(i, ac.absolute_complement_r(i["M2"], i["V"])),
    lambda i: ac.absolute_complement_r(_sub(i, i["M2"]), i["V"]), group=G)
law("ip4.1", ["f", "A2", "B"], "inner product along forall",
    lambda i: ac.hom(i["A2"], _fa(i, i["B"])), lambda i: ac.hom(_sub(i, i["A2"]), i["B"]), group=G)
law("ip4.2", ["f", "A", "B2"], "inner product along exists",
    lambda i: ac.hom(_ex(i, i["A"]), i["B2"]), lambda i: ac.hom(i["A"], _sub(i, i["B2"])), group=G)
law("ip4.3", ["f", "A", "M2"], "mixed tensor along exists",
    lambda i: ac.mixed_tensor(_ex(i, i["A"]), i["M2"]), lambda i: ac.mixed_tensor(i["A"], _sub(i, i["M2"])), group=G)
law("ip4.4", ["f", "M2", "N"], "right inner product along forall",
    lambda i: ac.hom(i["M2"], _fa(i, i["N"])), lambda i: ac.hom(_sub(i, i["M2"]), i["N"]), group=G)
law("ip4.5", ["f", "M", "N2"], "right inner product along exists",
    lambda i: ac.hom(_ex(i, i["M"]), i["N2"]), lambda i: ac.hom(i["M"], _sub(i, i["N2"])), group=G)
law("ip4.6", ["f", "A2", "M"], "mixed tensor along right exists",
    lambda i: ac.mixed_tensor(i["A2"], _ex(i, i["M"])), lambda i: ac.mixed_tensor(_sub(i, i["A2"]), i["M"]), group=G)
law("ip5.1", ["f", "V", "B"], "forall preserves powers",
    lambda i: ac.power(i["V"], _fa(i, i["B"])), lambda i: _fa(i, ac.power(i["V"], i["B"])), group=G)
law("ip5.2", ["f", "V", "A"], "exists preserves copowers",
    lambda i: ac.copower(i["V"], _ex(i, i["A"])), lambda i: _ex(i, ac.copower(i["V"], i["A"])), group=G)
law("ip5.3", ["f", "A", "V"], "exists turns into forall under absolute complement",
    lambda i: ac.absolute_complement(_ex(i, i["A"]), i["V"]),
    lambda i: _fa(i, ac.absolute_complement(i["A"], i["V"])), group=G)
law("ip5.4", ["f", "V", "N"], "right forall preserves powers",
    lambda i: ac.power(i["V"], _fa(i, i["N"])), lambda i: _fa(i, ac.power(i["V"], i["N"])), group=G)
law("ip5.5", ["f", "V", "M"], "right exists preserves copowers",
    lambda i: ac.copower(i["V"], _ex(i, i["M"])), lambda i: _ex(i, ac.copower(i["V"], i["M"])), group=G)
law("ip5.6", ["f", "M", "V"], "right exists turns into forall under absolute complement",
    lambda i: ac.absolute_complement_r(_ex(i, i["M"]), i["V"]),
    lambda i: _fa(i, ac.absolute_complement_r(i["M"], i["V"])), group=G)

# ---------------------------------------------------------------------------
# Yoneda and adequacy

G = "yoneda"


def _each_object(fn):
    def run(i):
        for x in i["X"].objects:
            ok, detail = fn(i, x)
            if not ok:
                return False, "canonical", f"at {x}: {detail}"
        return True, "canonical", ""

    return run


law("exy.1", "A", "hom out of E_x I evaluates to A x", check=_each_object(lambda i, x: cn.yoneda_hom(i["A"], x)), group=G)
law("exy.2", "M", "E_x I * M is M x", check=_each_object(lambda i, x: cn.yoneda_tensor(None, i["M"], x)), group=G)
law("exy.3", "M", "hom out of E^r_x I evaluates to M x", check=_each_object(lambda i, x: cn.yoneda_hom(i["M"], x)), group=G)
law("exy.4", "A", "A * E^r_x I is A x", check=_each_object(lambda i, x: cn.yoneda_tensor(None, i["A"], x)), group=G)


def _exy5(i):
    from ..fincat import point

    for x in i["X"].objects:
        E, _ = cn._point_exists(i["X"], x, "left")
        S = ac.substitute(point(i["X"], x), i["A"])
        lhs, rhs = len(ac.hom(E, i["A"])), len(S(S.base.objects[0]))
        if lhs != rhs:
            return False, "count", f"at {x}: {lhs} vs {rhs}"
    return True, "count", ""


law("exy.5", "A", "hom out of E_x I is substitution along x", check=_exy5, group=G)

law("ax1.1", "A", "A is recovered from its Yoneda view", check=_all(lambda i: cn.yoneda_view_iso(i["A"])), group=G)
law("ax1.2", "AB", "isomorphism is detected by Yoneda views",
    lambda i: find_natural_iso(i["A"], i["B"]) is not None,
    lambda i: find_natural_iso(cn.yoneda_view(i["A"]), cn.yoneda_view(i["B"])) is not None, group=G)
law("ax1.3", "A", "A is recovered from A * E^r_x I", check=_all(lambda i: cn.coyoneda_view_iso(i["A"])), group=G)
law("ax1.4", "AB", "isomorphism is detected by co-Yoneda views",
    lambda i: find_natural_iso(i["A"], i["B"]) is not None,
    lambda i: find_natural_iso(cn.coyoneda_view(i["A"]), cn.coyoneda_view(i["B"])) is not None, group=G)


def _rep_two_sided(f: FunctorMap, covariant_first: bool):
    """``Y(-, f-)`` on ``Y^op x X`` (or ``Y(f-, -)`` on ``X^op x Y``)."""
    X, Y = f.domain, f.codomain
    C = product(opposite(Y), X) if covariant_first else product(opposite(X), Y)
    fib, maps = {}, {}
    for o in C.objects:
        a, b = C.origin[o]
        fib[o] = Y.hom(a, f(b)) if covariant_first else Y.hom(f(a), b)
    for w in C.arrows:
        u, v = C.arrow_origin[w]
        if covariant_first:
            maps[w] = {e: Y.compose(f.arrow_map[v], Y.compose(e, u)) for e in fib[C.src(w)]}
        else:
            maps[w] = {e: Y.compose(v, Y.compose(e, f.arrow_map[u])) for e in fib[C.src(w)]}
    return ac.RightAction(C, fib, maps, name=f"Y({f.name})", check=True)


def _ax2(i):
    f, g = i["f"], i["f2"]
    alphas = list(nat_isos_between_functors(f, g, isos_only=False))
    R1, R2 = _rep_two_sided(f, True), _rep_two_sided(g, True)
    expected = {cn._key(t.components) for t in enumerate_nats(R1, R2)}
    Y = f.codomain
    ims = []
    C = R1.base
    for al in alphas:
        comps = {}
        for o in C.objects:
            y, x = C.origin[o]
            comps[o] = {e: Y.compose(al[x], e) for e in R1(o)}
        ims.append(cn._key(comps))
    ok = len(set(ims)) == len(ims) and set(ims) == expected
    return ok, "canonical", f"{len(alphas)} vs {len(expected)}"


def _ax2b(i):
    f, g = i["f"], i["f2"]
    n = sum(1 for _ in nat_isos_between_functors(f, g, isos_only=False))
    m = count_nats(_rep_two_sided(g, False), _rep_two_sided(f, False))
    return n == m, "count", f"{n} vs {m}"


law("ax2", ["f", "f2"], "transformations f -> g are those of their hom representations", check=_ax2, group=G)
law("ax2.count", ["f", "f2"], "transformations f -> g reverse on the other representation", check=_ax2b, group=G)


def _relabelled(F):
    """An isomorphic copy with fresh labels."""
    C = F.co_base
    ren = {x: {e: f"r{k}" for k, e in enumerate(F(x))} for x in C.objects}
    maps = {u: {ren[s][e]: ren[t][v] for e, v in F.maps[u].items()} for u, (s, t) in C.arrows.items()}
    return ac.from_covariant(F.variance, C, {x: list(ren[x].values()) for x in C.objects}, maps, check=True)


law("ax3.1", ["f", "A"], "isomorphic weights have isomorphic colimits",
    check=_all(lambda i: fp.same_object(i["Y"], fp.weighted_colimit(i["A"], i["f"]), fp.weighted_colimit(_relabelled(i["A"]), i["f"]))),
    group=G)
law("ax3.2", ["f", "M"], "isomorphic weights have isomorphic limits",
    check=_all(lambda i: fp.same_object(i["Y"], fp.weighted_limit(i["M"], i["f"]), fp.weighted_limit(_relabelled(i["M"]), i["f"]))),
    group=G)
law("ax3.3", "AB", "weights are told apart by representable diagrams",
    lambda i: find_natural_iso(i["A"], i["B"]) is not None,
    lambda i: all(len(ac.mixed_tensor(i["A"], ac.representable_right(i["X"], x)))
                  == len(ac.mixed_tensor(i["B"], ac.representable_right(i["X"], x))) for x in i["X"].objects)
    and find_natural_iso(cn.coyoneda_view(i["A"]), cn.coyoneda_view(i["B"])) is not None, group=G)

# conical limits


def _to1(i):
    from ..fincat import to_terminal

    return to_terminal(i["X"])


law("con.1", "M", "right exists to the point is I * M",
    lambda i: ac.exists(_to1(i), i["M"]).fiber("*"), lambda i: ac.mixed_tensor(_IL(i), i["M"]), group=G)
law("con.2", "M", "right forall to the point is hom(I, M)",
    lambda i: ac.forall(_to1(i), i["M"]).fiber("*"), lambda i: ac.hom(_IR(i), i["M"]), group=G)
law("con.3", "A", "exists to the point is A * I",
    lambda i: ac.exists(_to1(i), i["A"]).fiber("*"), lambda i: ac.mixed_tensor(i["A"], _IR(i)), group=G)
law("con.4", "A", "forall to the point is hom(I, A)",
    lambda i: ac.forall(_to1(i), i["A"]).fiber("*"), lambda i: ac.hom(_IL(i), i["A"]), group=G)

# ---------------------------------------------------------------------------
# Kan extensions of functors


def _kan_exists(i, side):
    K = fp.kan_right(i["f"], i["g"]) if side == "right" else fp.kan_left(i["f"], i["g"])
    return K.functor


def _vacuous():
    return True, "vacuous", "no Kan extension"


def _kan1(i):
    K = _kan_exists(i, "right")
    if K is None:
        return _vacuous()
    Z = i["Z"]
    ok = fp.same_object(Z, fp.weighted_limit(_sub(i, i["M2"]), i["g"]), fp.weighted_limit(i["M2"], K))
    return ok, "exact", ""


def _kan2(i):
    L = _kan_exists(i, "left")
    if L is None:
        return _vacuous()
    Z = i["Z"]
    ok = fp.same_object(Z, fp.weighted_colimit(_sub(i, i["A2"]), i["g"]), fp.weighted_colimit(i["A2"], L))
    return ok, "exact", ""


def _kan2_1(i):
    K = _kan_exists(i, "right")
    if K is None:
        return _vacuous()
    Z = i["Z"]
    for z in Z.objects:
        r = ac.representable_right(Z, z)
        if find_natural_iso(ac.substitute(K, r), _fa(i, ac.substitute(i["g"], r))) is None:
            return False, "search", f"at {z}"
    return True, "search", ""


def _kan2_2(i):
    L = _kan_exists(i, "left")
    if L is None:
        return _vacuous()
    Z = i["Z"]
    for z in Z.objects:
        r = ac.representable_left(Z, z)
        if find_natural_iso(ac.substitute(L, r), _fa(i, ac.substitute(i["g"], r))) is None:
            return False, "search", f"at {z}"
    return True, "search", ""


def _kan3(i, side):
    f, g, Y, Z = i["f"], i["g"], i["Y"], i["Z"]
    P = fp.kan_right(f, g) if side == "right" else fp.kan_left(f, g)
    oracle = fp.kan_right_by_comma(f, g) if side == "right" else fp.kan_left_by_comma(f, g)
    for y in Y.objects:
        if side == "right":
            val = fp.weighted_limit(ac.substitute(f, ac.representable_right(Y, y)), g)
        else:
            val = fp.weighted_colimit(ac.substitute(f, ac.representable_left(Y, y)), g)
        if not fp.same_object(Z, val, oracle[y]):
            return False, "exact", f"pointwise formula and comma oracle differ at {y}"
        if P.functor is not None and not (val.exists and Z.isomorphic_objects(P.functor(y), val.value)):
            return False, "exact", f"extension differs from the pointwise value at {y}"
        if P.functor is None and all(o.exists for o in oracle.values()):
            return False, "exact", "pointwise values exist but no extension was returned"
    return True, "exact", ""


G = "kan"
law("kan.1", ["f", "g", "M2"], "right Kan extension is a weighted limit adjunction", check=_kan1, group=G)
law("kan.2", ["f", "g", "A2"], "left Kan extension is a weighted colimit adjunction", check=_kan2, group=G)
law("kan2.1", ["f", "g"], "representables preserve right Kan extensions", check=_kan2_1, group=G)
law("kan2.2", ["f", "g"], "representables carry left Kan extensions to forall", check=_kan2_2, group=G)
law("kan3.1", ["f", "g"], "pointwise right Kan extension", check=lambda i: _kan3(i, "right"), group=G)
law("kan3.2", ["f", "g"], "pointwise left Kan extension", check=lambda i: _kan3(i, "left"), group=G)

# ---------------------------------------------------------------------------
# functor predicates


def _report(fn):
    def run(i):
        r = fn(i)
        if not r.agree:
            return False, "exact", f"{r.name}: {', '.join(r.disagreements)} disagree with the definition ({r.holds})"
        return True, "exact", f"{r.name} = {r.holds}"

    return run


def _functor_key(f):
    return tuple(sorted(f.object_map.items())), tuple(sorted(f.arrow_map.items()))


class _AdCache:
    """Absolute density of the functors met while checking one instance."""

    def __init__(self):
        self.seen = {}

    def __call__(self, f):
        k = (id(f.domain), id(f.codomain), _functor_key(f))
        if k not in self.seen:
            self.seen[k] = fp.is_absolutely_dense(f).holds
        return self.seen[k]


def _ad_comp(i):
    from itertools import combinations

    from ..fincat import full_subcategory, functors

    Y, Z = i["Y"], i["Z"]
    ad = _AdCache()
    hs = [i["h"]] + list(functors(Y, Z, limit=3))
    tried = 0
    for k in range(1, len(Y.objects) + 1):
        for S in combinations(Y.objects, k):
            _, f = full_subcategory(Y, S)
            if not ad(f):
                continue
            for h in hs:
                if ad(f.then(h)):
                    tried += 1
                    if not ad(h):
                        return False, "exact", f"f includes {list(S)}, h = {h.object_map}"
    return True, "exact" if tried else "vacuous", f"{tried} pairs"


def _ad_implies(i):
    from ..fincat import functors

    tried = 0
    for f in functors(i["X"], i["Y"], limit=12):
        if fp.is_absolutely_dense(f).holds:
            tried += 1
            if not (fp.is_final(f).holds and fp.is_initial(f).holds):
                return False, "exact", f"{f.object_map} is absolutely dense but not final and initial"
    return True, "exact" if tried else "vacuous", f"{tried} functors"


def _adj_implies(i):
    f = i["f"]
    if fp.is_left_adjunctible(f).holds and not fp.is_initial(f).holds:
        return False, "exact", "left adjunctible but not initial"
    if fp.is_right_adjunctible(f).holds and not fp.is_final(f).holds:
        return False, "exact", "right adjunctible but not final"
    return True, "exact", ""


def _adjoint_pair(i):
    f = i["f"]
    X, Y = f.domain, f.codomain
    from ..fincat import functors

    for g in functors(Y, X, limit=40):
        r = fp.check_adjoint_pair(g, f, [ac.representable_right(Y, y) for y in Y.objects])
        if not r.agree:
            return False, "exact", f"adjoint pair check disagrees: {r.disagreements}"
    return True, "exact", ""


G = "predicates"
law("ff", ["f"], "characterizations of full faithfulness agree", check=_report(lambda i: fp.is_fully_faithful(i["f"])), group=G)
law("ad", ["f"], "characterizations of absolute density agree", check=_report(lambda i: fp.is_absolutely_dense(i["f"])), group=G)
law("dense.left", ["f"], "characterizations of left density agree", check=_report(lambda i: fp.is_left_dense(i["f"])), group=G)
law("dense.right", ["f"], "characterizations of right density agree", check=_report(lambda i: fp.is_right_dense(i["f"])), group=G)
law("final", ["f"], "characterizations of finality agree", check=_report(lambda i: fp.is_final(i["f"])), group=G)
law("initial", ["f"], "characterizations of initiality agree", check=_report(lambda i: fp.is_initial(i["f"])), group=G)
law("adj.left", ["f"], "characterizations of left adjunctibility agree", check=_report(lambda i: fp.is_left_adjunctible(i["f"])), group=G)
law("adj.right", ["f"], "characterizations of right adjunctibility agree", check=_report(lambda i: fp.is_right_adjunctible(i["f"])), group=G)
law("adj.pair", ["f"], "adjoint pairs by unit and by hom representations", check=_adjoint_pair, group=G)
law("ad.comp", ["h"], "if f and hf are absolutely dense so is h", check=_ad_comp, group=G)
law("ad.final", ["f"], "absolutely dense functors are final and initial", check=_ad_implies, group=G)
law("adj.final", ["f"], "adjunctible functors are initial or final", check=_adj_implies, group=G)

# ---------------------------------------------------------------------------
# symmetric comprehension


def _outer(i):
    return pro.outer_product(i["A"], i["M"])


def _coend_oracle(i):
    H = i["H"]
    mine = oracles.partition_of(pro.coend(H))
    ref = set(oracles.coend_classes(H))
    return mine == ref, "exact", f"{len(mine)} vs {len(ref)} classes"


def _strong_oracle(i):
    H = i["H"]
    mine = {frozenset(c) for c in (pro.strong_coend(H).payload[lab] for lab in pro.strong_coend(H).elements)}
    P = pro.comprehend(H).total
    mine = {frozenset(P.origin[o] for o in c) for c in mine}
    ref = set(oracles.strong_coend_classes(H))
    return mine == ref, "exact", f"{len(mine)} vs {len(ref)} components"


def _mixed_oracle(i):
    A, M = i["A"], i["M"]
    mine = oracles.partition_of(ac.mixed_tensor(A, M))
    return mine == set(oracles.mixed_tensor_classes(A, M)), "exact", ""


def _exponential(i):
    M, N, q = i["M"], i["N"], i["q"]
    lhs = co.count_over(co.fibered_product(q, co.elements_right(M)), co.elements_right(N))
    rhs = co.count_over(q, pro.comprehend(pro.hom_arrow(M, N)))
    return lhs == rhs, "count", f"{lhs} vs {rhs}"


def _r1(i):
    p = i["p"]
    X = p.base
    D = pro.diamond(p)
    for x in X.objects:
        for y in X.objects:
            a = len(D.at(x, y))
            b = len(co.components(co.fibered_product(co.interval(X, x, y), p)))
            c = len(ac.mixed_tensor(ac.substitute(p.projection, ac.representable_left(X, y)),
                                    ac.substitute(p.projection, ac.representable_right(X, x))))
            if not a == b == c:
                return False, "count", f"at ({x},{y}): {a}, {b}, {c}"
    return True, "count", ""


def _tv(i):
    X = i["X"]
    P = tv.FinitePoset(X.objects, {(a, b) for a in X.objects for b in X.objects if X.hom(a, b)})
    table = tv.galois_table(P)
    ok = all(r[2] == r[3] for r in table) and tv.cross_model_check(P)
    return ok, "exact", f"{len(table)} pairs"


G = "comprehension"
law("frob", "Ap", "mixed Frobenius over X",
    lambda i: co.diamond_right(co.fibered_product(co.elements_left(i["A"]), i["p"])),
    lambda i: ac.oodot(i["A"], co.diamond_right(i["p"])), group=G)
law("p1", "pH", "comprehension transposes are bijective", check=_canonical(lambda i: cn.comprehension_transpose(i["p"], i["H"])), group=G)
law("p1.count", "pH", "diamond is left adjoint to comprehension",
    lambda i: ac.hom(pro.diamond(i["p"]), i["H"]), lambda i: co.over_hom(i["p"], pro.comprehend(i["H"])), group=G)
law("p1.hom", "", "diamond of the identity is the hom profunctor",
    lambda i: pro.diamond(co.identity_over(i["X"])), lambda i: pro.hom_profunctor(i["X"]), group=G)
law("dy", "H", "diagonal Yoneda for ends", check=_canonical(lambda i: cn.end_to_nats(i["H"])), group=G)
law("dy.coend", "H", "diagonal Yoneda for coends", check=_canonical(lambda i: cn.coend_to_tensor(i["H"])), group=G)
law("r1", "p", "values of the diamond", check=_r1, group=G)
law("end", "H", "end is the set of sections of the comprehension",
    lambda i: pro.end(i["H"]), lambda i: pro.end_as_nats(i["H"]), group=G)
law("coend.strong", "H", "strong coend is the set of components", check=_strong_oracle, group=G)
law("coend.oracle", "H", "coend matches the coequalizer oracle", check=_coend_oracle, group=G)
law("coend.mixed", "AM", "coend of an outer product",
    check=_many(lambda i: pro.coend(_outer(i)), lambda i: pro.strong_coend(_outer(i)), lambda i: ac.mixed_tensor(i["A"], i["M"])),
    group=G)
law("coend.star", "AM", "mixed tensor matches the coequalizer oracle", check=_mixed_oracle, group=G)
law("sd.exp", "MNq", "comprehension of a function profunctor is an exponential", check=_exponential, group=G)
law("sd.din", "AMK", "dinaturals out of an outer product are strong",
    lambda i: pro.dinaturals(_outer(i), i["K"]), lambda i: pro.strong_dinaturals(_outer(i), i["K"]), group=G)
law("sd.direct", "HK", "strong dinaturals by comprehension and by the square condition",
    lambda i: pro.strong_dinaturals(i["H"], i["K"]), lambda i: pro.strong_dinaturals_direct(i["H"], i["K"]), group=G)
law("tv", "", "poset comprehension Galois adjunction", check=_tv, category="poset", group=G)


def by_id() -> dict[str, LawSpec]:
    return {l.id: l for l in REGISTRY}


def select(ids: Sequence[str] | str) -> list[LawSpec]:
    """``"all"``, a list of ids, or an id prefix such as ``comp25``."""
    if ids == "all" or ids == ["all"]:
        return list(REGISTRY)
    table = by_id()
    out = []
    for k in [ids] if isinstance(ids, str) else ids:
        if k in table:
            out.append(table[k])
            continue
        hits = [l for l in REGISTRY if l.id.startswith(k + ".")]
        if not hits:
            raise KeyError(k)
        out += hits
    return out


# every id family the suite is expected to cover
EXPECTED_FAMILIES = (
    ["comp1", "comp2", "comp3", "comp4", "comp5", "comp6", "comp7", "comp10", "comp11", "comp12", "comp13"]
    + ["group", "comp20", "comp25", "comp26", "comp27", "ip1", "ip2", "ip3", "ip4", "ip5"]
    + ["exy", "ax1", "ax2", "ax3", "kan", "kan2", "kan3", "con", "dy", "r1", "ad", "ff", "p1"]
    + ["end", "coend", "sd", "frob", "tv", "final", "initial", "dense", "adj"]
)


def family(law_id: str) -> str:
    return law_id.split(".")[0]
