"""Set-valued functors, natural transformations and the search engine.

Every set-valued functor is handled through its covariant presentation:
a right action on ``X`` is covariant on ``X`` itself, a left action on
``X`` is covariant on ``X^op``.  Arrow ids coincide in both, so the same
``maps`` table serves both readings.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

from . import labels
from .config import limits
from .errors import (
    BaseMismatch,
    FunctorialityViolation,
    NaturalityViolation,
    SizeLimitExceeded,
    TypeMismatch,
    ValidationError,
)
from .fincat import FinCat, FinSet, opposite


class SetFunctor:
    """A finite-set-valued functor; subclasses fix the variance."""

    variance = "right"

    def __init__(
        self,
        base: FinCat,
        fibers: Mapping[str, Iterable[str] | FinSet],
        action: Mapping[str, Mapping[str, str]] | None = None,
        *,
        name: str = "",
        check: bool = True,
        bounded: bool = False,
        origin: Mapping[str, Mapping[str, object]] | None = None,
    ):
        self.base = base
        self.name = name
        # per-fiber structured meaning of derived labels; not part of equality
        self.origin = dict(origin) if origin else {}
        fib = {}
        for x in base.objects:
            v = fibers[x] if x in fibers else ()
            fib[x] = v if isinstance(v, FinSet) else FinSet(v)
        self.fibers = fib
        lim = limits()
        cap = lim.max_fiber if bounded else lim.derived_fiber
        for x, s in fib.items():
            if len(s) > cap:
                raise SizeLimitExceeded(f"fiber of {name or 'action'} at {x} has {len(s)} elements (limit {cap})")
        maps = {}
        action = action or {}
        for f in base.arrows:
            if base.is_identity(f) and f not in action:
                x = base.src(f)
                maps[f] = {e: e for e in fib[x].elements}
            else:
                if f not in action:
                    raise FunctorialityViolation(f"{name or 'action'}: no map given for arrow {f}")
                maps[f] = dict(action[f])
        self.maps = maps
        self._cache: dict = {}
        if check:
            self.validate()

    # covariant presentation
    @property
    def co_base(self) -> FinCat:
        return opposite(self.base) if self.variance == "left" else self.base

    def fiber(self, x: str) -> FinSet:
        return self.fibers[x]

    def __call__(self, x: str) -> tuple[str, ...]:
        return self.fibers[x].elements

    def act(self, f: str, e: str) -> str:
        return self.maps[f][e]

    def validate(self) -> "SetFunctor":
        C = self.co_base
        nm = self.name or "action"
        for f, (s, t) in C.arrows.items():
            m = self.maps[f]
            src, tgt = self.fibers[s], self.fibers[t]
            if set(m) != set(src.elements):
                raise FunctorialityViolation(f"{nm}: map of {f} is not defined on exactly the fiber at {s}")
            for a, b in m.items():
                if b not in tgt:
                    raise FunctorialityViolation(f"{nm}: map of {f} sends {a} outside the fiber at {t}")
        for x in C.objects:
            i = C.identity(x)
            if any(a != b for a, b in self.maps[i].items()):
                raise FunctorialityViolation(f"{nm}: identity {i} does not act trivially")
        for g, f in C.composable_pairs():
            h = C.compose(g, f)
            mf, mg, mh = self.maps[f], self.maps[g], self.maps[h]
            for a in self.fibers[C.src(f)].elements:
                if mh[a] != mg[mf[a]]:
                    raise FunctorialityViolation(
                        f"{nm}: action not functorial on {g} . {f} at element {a}"
                    )
        return self

    def total_size(self) -> int:
        return sum(len(s) for s in self.fibers.values())

    def elements(self) -> Iterator[tuple[str, str]]:
        for x in self.base.objects:
            for a in self.fibers[x].elements:
                yield x, a

    def same_shape(self, other: "SetFunctor") -> bool:
        return self.variance == other.variance and (self.base is other.base or self.base == other.base)

    def require_same_base(self, other: "SetFunctor", what: str = "operation") -> None:
        if not (self.base is other.base or self.base == other.base):
            raise BaseMismatch(f"{what}: {self.name or 'first'} and {other.name or 'second'} live over different categories")

    def structurally_equal(self, other: "SetFunctor") -> bool:
        return (
            type(self) is type(other)
            and self.base == other.base
            and all(self.fibers[x].elements == other.fibers[x].elements for x in self.base.objects)
            and self.maps == other.maps
        )

    def __eq__(self, other):
        if not isinstance(other, SetFunctor):
            return NotImplemented
        return (
            self.variance == other.variance
            and self.base == other.base
            and all(self.fibers[x] == other.fibers[x] for x in self.base.objects)
            and self.maps == other.maps
        )

    def __hash__(self):
        return hash((self.variance, tuple(len(self.fibers[x]) for x in self.base.objects)))

    def __repr__(self):
        sizes = ",".join(f"{x}:{len(s)}" for x, s in self.fibers.items())
        return f"{type(self).__name__}({self.name or '?'} over {self.base.name}; {sizes})"


class NatTransform:
    """A family of fiberwise maps ``source(x) -> target(x)``.

    Between two FunctorMaps the components are arrows of the codomain;
    between set-valued functors they are dicts.
    """

    def __init__(self, source, target, components: Mapping[str, object], *, check: bool = True):
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            self.validate()

    @property
    def label(self) -> str:
        out = {}
        for x, c in self.components.items():
            out[x] = c if isinstance(c, str) else labels.func(c)
        return labels.family(out)

    def __getitem__(self, x):
        return self.components[x]

    def validate(self) -> "NatTransform":
        F, G = self.source, self.target
        if isinstance(F, SetFunctor):
            if not F.same_shape(G):
                raise TypeMismatch("natural transformation between functors of different variance or base")
            check_natural(F, G, self.components)
            return self
        # components are arrows between functor images
        X, Y = F.domain, F.codomain
        for x in X.objects:
            c = self.components[x]
            if Y.arrows.get(c) != (F(x), G(x)):
                raise NaturalityViolation(f"component at {x} is not an arrow {F(x)} -> {G(x)}")
        for u, (s, t) in X.arrows.items():
            if Y.compose(G.arrow_map[u], self.components[s]) != Y.compose(self.components[t], F.arrow_map[u]):
                raise NaturalityViolation(f"naturality square fails at {u}")
        return self

    def is_iso(self) -> bool:
        F = self.source
        if isinstance(F, SetFunctor):
            return all(
                len(set(c.values())) == len(c) == len(self.target.fibers[x])
                for x, c in self.components.items()
            )
        return all(F.codomain.is_iso(c) for c in self.components.values())

    def inverse(self) -> "NatTransform":
        if not self.is_iso():
            raise NaturalityViolation("transformation is not invertible")
        if isinstance(self.source, SetFunctor):
            comps = {x: {b: a for a, b in c.items()} for x, c in self.components.items()}
        else:
            Y = self.source.codomain
            comps = {x: Y.inverse(c) for x, c in self.components.items()}
        return NatTransform(self.target, self.source, comps, check=False)

    def then(self, other: "NatTransform") -> "NatTransform":
        comps = {x: {a: other.components[x][b] for a, b in c.items()} for x, c in self.components.items()}
        return NatTransform(self.source, other.target, comps, check=False)

    def __eq__(self, other):
        return isinstance(other, NatTransform) and self.components == other.components

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return f"NatTransform({self.label})"


def check_natural(F: SetFunctor, G: SetFunctor, comps: Mapping[str, Mapping[str, str]]) -> None:
    C = F.co_base
    for x in C.objects:
        c = comps.get(x)
        if c is None or set(c) != set(F.fibers[x].elements):
            raise NaturalityViolation(f"component at {x} is not defined on the whole fiber")
        for b in c.values():
            if b not in G.fibers[x]:
                raise NaturalityViolation(f"component at {x} leaves the target fiber")
    for f, (s, t) in C.arrows.items():
        if C.is_identity(f):
            continue
        Ff, Gf, cs, ct = F.maps[f], G.maps[f], comps[s], comps[t]
        for a in F.fibers[s].elements:
            if ct[Ff[a]] != Gf[cs[a]]:
                raise NaturalityViolation(f"naturality square fails at arrow {f}, element {a}")


def is_natural(F: SetFunctor, G: SetFunctor, comps) -> bool:
    try:
        check_natural(F, G, comps)
    except NaturalityViolation:
        return False
    return True


def is_natural_iso(F: SetFunctor, G: SetFunctor, comps) -> bool:
    if not is_natural(F, G, comps):
        return False
    return all(len(set(comps[x].values())) == len(G.fibers[x]) == len(F.fibers[x]) for x in F.base.objects)


# ---------------------------------------------------------------------------
# search


def _refine(F: SetFunctor, G: SetFunctor) -> tuple[dict, dict] | None:
    """Joint colour refinement of the element graphs of F and G.

    Returns per-element colours, or None when the colour histograms differ
    on some fiber (then no isomorphism exists).
    """
    C = F.co_base
    arrows = [f for f in C.arrows if not C.is_identity(f)]
    cf = {(x, a): x for x, a in _co_elements(F)}
    cg = {(x, b): x for x, b in _co_elements(G)}
    n_prev = -1
    for _ in range(len(cf) + 1):
        pre_f: dict = {}
        pre_g: dict = {}
        for f in arrows:
            s, t = C.arrows[f]
            for a in F.fibers[s].elements:
                pre_f.setdefault((t, F.maps[f][a]), []).append((f, cf[(s, a)]))
            for b in G.fibers[s].elements:
                pre_g.setdefault((t, G.maps[f][b]), []).append((f, cg[(s, b)]))

        def sig(col, H, key, pre):
            x, a = key
            outs = tuple(col[(C.tgt(f), H.maps[f][a])] for f in C.out_arrows(x) if not C.is_identity(f))
            ins = tuple(sorted(Counter(pre.get(key, ())).items(), key=repr))
            return (col[key], outs, ins)

        sf = {k: sig(cf, F, k, pre_f) for k in cf}
        sg = {k: sig(cg, G, k, pre_g) for k in cg}
        palette = {}
        for s in list(sf.values()) + list(sg.values()):
            palette.setdefault(s, len(palette))
        cf = {k: palette[s] for k, s in sf.items()}
        cg = {k: palette[s] for k, s in sg.items()}
        if len(palette) == n_prev:
            break
        n_prev = len(palette)
    for x in C.objects:
        hf = Counter(cf[(x, a)] for a in F.fibers[x].elements)
        hg = Counter(cg[(x, b)] for b in G.fibers[x].elements)
        if hf != hg:
            return None
    return cf, cg


def _co_elements(F: SetFunctor):
    for x in F.base.objects:
        for a in F.fibers[x].elements:
            yield x, a


def _search(F: SetFunctor, G: SetFunctor, *, iso: bool, limit: int | None) -> Iterator[dict]:
    C = F.co_base
    lim = limits()
    budget = [lim.max_search]
    cand_colour = None
    buckets: dict = {}
    if iso:
        for x in C.objects:
            if len(F.fibers[x]) != len(G.fibers[x]):
                return
        ref = _refine(F, G)
        if ref is None:
            return
        cf, cg = ref
        cand_colour = (cf, cg)
        # candidates by colour, with a pointer past the prefix already in use
        for (x, b), c in cg.items():
            buckets.setdefault((x, c), []).append(b)
        where = {}
        for (x, c), lst in buckets.items():
            for k, b in enumerate(lst):
                where[(x, b)] = k
        start = {key: 0 for key in buckets}
    order = sorted(C.objects, key=lambda x: -len(C.out_arrows(x)))
    elems = [(x, a) for x in order for a in F.fibers[x].elements]
    outs = {x: [(f, C.tgt(f)) for f in C.out_arrows(x) if not C.is_identity(f)] for x in C.objects}
    assign: dict[tuple[str, str], str] = {}
    used: dict[str, set] = {x: set() for x in C.objects}
    trail: list[tuple[str, str]] = []

    def put(x, a, b) -> bool:
        cur = assign.get((x, a))
        if cur is not None:
            return cur == b
        if iso:
            if b in used[x] or cand_colour[0][(x, a)] != cand_colour[1][(x, b)]:
                return False
            used[x].add(b)
        assign[(x, a)] = b
        trail.append((x, a))
        return True

    def choose(x, a, b) -> bool:
        if not put(x, a, b):
            return False
        for f, y in outs[x]:
            if not put(y, F.maps[f][a], G.maps[f][b]):
                return False
        return True

    def undo(mark):
        while len(trail) > mark:
            x, a = trail.pop()
            b = assign.pop((x, a))
            if iso:
                used[x].discard(b)
                key = (x, cand_colour[1][(x, b)])
                start[key] = min(start[key], where[(x, b)])

    count = [0]

    def skip(i: int) -> int:
        while i < len(elems) and elems[i] in assign:
            i += 1
        return i

    # G's arrows inverted: when an image under f is already fixed, only its preimages qualify
    g_pre: dict = {}
    for x in C.objects:
        for f, y in outs[x]:
            inv = g_pre.setdefault(f, {})
            for b in G.fibers[x].elements:
                inv.setdefault(G.maps[f][b], []).append(b)

    def candidates(x, a):
        forced = None
        for f, y in outs[x]:
            c = assign.get((y, F.maps[f][a]))
            if c is not None:
                lst = g_pre[f].get(c, ())
                if forced is None or len(lst) < len(forced):
                    forced = lst
        if forced is not None:
            if not iso:
                return iter(forced)
            col = cand_colour[0][(x, a)]
            return (b for b in forced if b not in used[x] and cand_colour[1][(x, b)] == col)
        if not iso:
            return iter(G.fibers[x].elements)
        key = (x, cand_colour[0][(x, a)])
        lst = buckets[key]
        j = start[key]
        while j < len(lst) and lst[j] in used[x]:
            j += 1
        start[key] = j
        return (lst[k] for k in range(j, len(lst)) if lst[k] not in used[x])

    # depth-first with an explicit stack: fibers can hold thousands of elements
    stack: list[tuple[int, Iterator, int]] = []
    i = skip(0)
    while True:
        if i == len(elems):
            count[0] += 1
            yield dict(assign)
            if limit is not None and count[0] >= limit:
                return
        else:
            x, a = elems[i]
            stack.append((i, candidates(x, a), len(trail)))
        i = -1
        while stack:
            k, cands, mark = stack[-1]
            x, a = elems[k]
            undo(mark)
            for b in cands:
                budget[0] -= 1
                if budget[0] < 0:
                    raise SizeLimitExceeded(
                        f"natural-transformation search {F.name or '?'} -> {G.name or '?'} exceeded the search budget"
                    )
                if choose(x, a, b):
                    i = skip(k + 1)
                    break
                undo(mark)
            if i >= 0:
                break
            stack.pop()
        if i < 0:
            return


def _to_components(F: SetFunctor, flat: dict) -> dict[str, dict[str, str]]:
    return {x: {a: flat[(x, a)] for a in F.fibers[x].elements} for x in F.base.objects}


def iter_nats(F: SetFunctor, G: SetFunctor, *, iso: bool = False) -> Iterator[NatTransform]:
    if not F.same_shape(G):
        if F.variance != G.variance:
            raise TypeMismatch("functors have different variance")
        raise BaseMismatch("functors live over different categories")
    for flat in _search(F, G, iso=iso, limit=None):
        yield NatTransform(F, G, _to_components(F, flat), check=False)


def enumerate_nats(F: SetFunctor, G: SetFunctor) -> list[NatTransform]:
    """All natural transformations ``F => G`` in a deterministic order."""
    cap = limits().max_results
    out = []
    for t in iter_nats(F, G):
        out.append(t)
        if len(out) > cap:
            raise SizeLimitExceeded(f"more than {cap} natural transformations {F.name} -> {G.name}")
    return out


def count_nats(F: SetFunctor, G: SetFunctor) -> int:
    return len(enumerate_nats(F, G))


def find_natural_iso(F: SetFunctor, G: SetFunctor) -> NatTransform | None:
    """A natural isomorphism ``F => G`` or None; the search is complete."""
    if F.variance != G.variance:
        raise TypeMismatch("functors have different variance")
    if not (F.base is G.base or F.base == G.base):
        raise BaseMismatch("functors live over different categories")
    return next(iter_nats(F, G, iso=True), None)


def nat_set(F: SetFunctor, G: SetFunctor) -> FinSet:
    nats = enumerate_nats(F, G)
    return FinSet([t.label for t in nats], {t.label: t for t in nats})


def brute_force_nat_count(F: SetFunctor, G: SetFunctor) -> int:
    """Reference count of natural transformations by filtering all families.

    Exponential; meant only as an oracle on tiny inputs.
    """
    from itertools import product as cart

    xs = list(F.base.objects)
    per_object = []
    for x in xs:
        dom, cod = F.fibers[x].elements, G.fibers[x].elements
        per_object.append([dict(zip(dom, img)) for img in cart(cod, repeat=len(dom))])
    n = 0
    for choice in cart(*per_object):
        if is_natural(F, G, dict(zip(xs, choice))):
            n += 1
    return n


def identity_nat(F: SetFunctor) -> NatTransform:
    return NatTransform(F, F, {x: {a: a for a in F.fibers[x].elements} for x in F.base.objects}, check=False)


def compose_components(first: Mapping, second: Mapping) -> dict:
    return {x: {a: second[x][b] for a, b in c.items()} for x, c in first.items()}


__all__ = [
    "SetFunctor",
    "NatTransform",
    "ValidationError",
    "check_natural",
    "is_natural",
    "is_natural_iso",
    "enumerate_nats",
    "iter_nats",
    "count_nats",
    "find_natural_iso",
    "nat_set",
    "brute_force_nat_count",
    "identity_nat",
]
