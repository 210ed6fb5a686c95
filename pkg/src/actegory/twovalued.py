"""Two-valued models: finite posets and finite topological spaces.

Truth values replace sets: a left action becomes a down-set (an open set),
a right action an up-set (a closed set), ``{A, B}`` is ``A <= B`` and
``A * M`` is ``A & M != {}``.  All operators are plain set arithmetic
followed by the relevant hull or core.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, permutations, product
from typing import Callable, Iterable, Iterator, Sequence

from .errors import TypeMismatch, ValidationError

Subset = frozenset


def subsets(points: Sequence) -> list[frozenset]:
    pts = list(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(pts, k) for k in range(len(pts) + 1))]


# ---------------------------------------------------------------------------
# finite posets and spaces


class FinitePoset:
    def __init__(self, elements: Iterable, le: Iterable[tuple]):
        self.elements = tuple(elements)
        rel = set(le) | {(x, x) for x in self.elements}
        self.le = frozenset(rel)
        self.validate()

    def leq(self, x, y) -> bool:
        return (x, y) in self.le

    def validate(self) -> "FinitePoset":
        E = self.elements
        for x, y in self.le:
            if x not in E or y not in E:
                raise ValidationError(f"order mentions unknown element {x!r} or {y!r}")
            if x != y and (y, x) in self.le:
                raise ValidationError(f"order is not antisymmetric on {x!r}, {y!r}")
        for x, y in self.le:
            for z in E:
                if (y, z) in self.le and (x, z) not in self.le:
                    raise ValidationError(f"order is not transitive on {x!r} <= {y!r} <= {z!r}")
        return self

    def down(self, S: Iterable) -> frozenset:
        S = set(S)
        return frozenset(x for x in self.elements if any(self.leq(x, s) for s in S))

    def up(self, S: Iterable) -> frozenset:
        S = set(S)
        return frozenset(x for x in self.elements if any(self.leq(s, x) for s in S))

    def to_space(self) -> "FiniteSpace":
        """The Alexandrov space whose opens are the down-sets."""
        return FiniteSpace(self.elements, [S for S in subsets(self.elements) if self.down(S) == S])

    def __repr__(self):
        return f"FinitePoset({list(self.elements)})"


class FiniteSpace:
    """A topology stored by its open sets."""

    def __init__(self, points: Iterable, opens: Iterable[Iterable]):
        self.points = tuple(points)
        self.opens = frozenset(frozenset(o) for o in opens)
        self.validate()
        self.closeds = frozenset(self.whole - o for o in self.opens)

    @property
    def whole(self) -> frozenset:
        return frozenset(self.points)

    def validate(self) -> "FiniteSpace":
        if frozenset() not in self.opens or self.whole not in self.opens:
            raise ValidationError("a topology contains the empty set and the whole space")
        for a in self.opens:
            if not a <= self.whole:
                raise ValidationError("open set mentions unknown points")
            for b in self.opens:
                if a | b not in self.opens or a & b not in self.opens:
                    raise ValidationError("opens are not closed under binary unions and intersections")
        return self

    def interior(self, S) -> frozenset:
        S = frozenset(S)
        return frozenset().union(*(o for o in self.opens if o <= S))

    def open_hull(self, S) -> frozenset:
        S = frozenset(S)
        return frozenset.intersection(self.whole, *(o for o in self.opens if S <= o))

    def closure(self, S) -> frozenset:
        S = frozenset(S)
        return frozenset.intersection(self.whole, *(c for c in self.closeds if S <= c))

    def closed_core(self, S) -> frozenset:
        S = frozenset(S)
        return frozenset().union(*(c for c in self.closeds if c <= S))

    def specialization(self) -> set[tuple]:
        """``x <= y`` iff every open containing ``y`` contains ``x`` (down-sets are open)."""
        return {(x, y) for x in self.points for y in self.points if all(x in o for o in self.opens if y in o)}

    def __repr__(self):
        return f"FiniteSpace({list(self.points)}; {len(self.opens)} opens)"


def all_topologies(n: int) -> list[FiniteSpace]:
    pts = [f"p{i}" for i in range(n)]
    whole = frozenset(pts)
    middle = [S for S in subsets(pts) if S and S != whole]
    out = []
    for k in range(len(middle) + 1):
        for extra in combinations(middle, k):
            fam = {frozenset(), whole, *extra}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                out.append(FiniteSpace(pts, fam))
    return out


def all_posets(n: int, up_to_iso: bool = False) -> list[FinitePoset]:
    """Every partial order on ``n`` labelled points (one per isomorphism class if asked)."""
    pts = [f"p{i}" for i in range(n)]
    pairs = [(a, b) for a in pts for b in pts if a != b]
    out = []
    seen = set()
    for k in range(len(pairs) + 1):
        for rel in combinations(pairs, k):
            rs = set(rel)
            if any((b, a) in rs for a, b in rs):
                continue
            if any((a, c) not in rs for a, b in rs for b2, c in rs if b == b2 and a != c):
                continue
            key = frozenset(rs)
            if key in seen:
                continue
            if up_to_iso:
                seen.update(
                    frozenset((pts[perm[pts.index(a)]], pts[perm[pts.index(b)]]) for a, b in rs)
                    for perm in permutations(range(n))
                )
            else:
                seen.add(key)
            out.append(FinitePoset(pts, rs))
    return out


# ---------------------------------------------------------------------------
# the complemented pair (L, R) of a space


@dataclass(frozen=True)
class Lattices:
    L: tuple
    R: tuple
    B: tuple
    P: tuple


class TwoValuedPair:
    """``(L X, R X)`` with its operators; built from a space (or a poset via its opens)."""

    def __init__(self, X: FiniteSpace | FinitePoset):
        self.source = X
        self.space = X.to_space() if isinstance(X, FinitePoset) else X
        S = self.space
        self.whole = S.whole
        self.L = tuple(sorted(S.opens, key=_order))
        self.R = tuple(sorted(S.closeds, key=_order))
        self.B = tuple(sorted(S.opens & S.closeds, key=_order))
        self.P = tuple(sorted(subsets(S.points), key=_order))

    # membership
    def in_L(self, A) -> bool:
        return frozenset(A) in self.space.opens

    def in_R(self, M) -> bool:
        return frozenset(M) in self.space.closeds

    def _need(self, ok, what):
        if not ok:
            raise TypeMismatch(what)

    # reflections
    def hull_L(self, S) -> frozenset:
        return self.space.open_hull(S)

    def core_L(self, S) -> frozenset:
        return self.space.interior(S)

    def hull_R(self, S) -> frozenset:
        return self.space.closure(S)

    def core_R(self, S) -> frozenset:
        return self.space.closed_core(S)

    # operators
    def complement(self, A, M) -> frozenset:
        """``A |> M = (X - A) | M``."""
        self._need(self.in_L(A), "complement: first argument must be open")
        self._need(self.in_R(M), "complement: second argument must be closed")
        return (self.whole - A) | M

    def complement_r(self, M, A) -> frozenset:
        self._need(self.in_R(M), "complement_r: first argument must be closed")
        self._need(self.in_L(A), "complement_r: second argument must be open")
        return (self.whole - M) | A

    def oodot(self, A, N) -> frozenset:
        """Closure of ``A & N``."""
        return self.hull_R(frozenset(A) & frozenset(N))

    def oodot_r(self, M, B) -> frozenset:
        return self.hull_L(frozenset(M) & frozenset(B))

    def triangleright(self, N, M) -> frozenset:
        """Interior of ``(X - N) | M``."""
        return self.core_L((self.whole - N) | M)

    def triangleright_r(self, B, A) -> frozenset:
        return self.core_R((self.whole - B) | A)

    def tensor(self, A, B) -> frozenset:
        return frozenset(A) & frozenset(B)

    def internal_hom_L(self, A, B) -> frozenset:
        return self.core_L((self.whole - A) | B)

    def internal_hom_R(self, M, N) -> frozenset:
        return self.core_R((self.whole - M) | N)

    @staticmethod
    def hom(A, B) -> bool:
        return frozenset(A) <= frozenset(B)

    @staticmethod
    def star(A, M) -> bool:
        return bool(frozenset(A) & frozenset(M))

    def copower(self, v: bool, A) -> frozenset:
        return frozenset(A) if v else frozenset()

    def power(self, v: bool, A) -> frozenset:
        return frozenset(A) if v else self.whole

    def absolute_complement(self, A, v: bool) -> frozenset:
        """``A |> V``, a closed set."""
        return self.whole if v else self.whole - A

    def absolute_complement_r(self, M, v: bool) -> frozenset:
        return self.whole if v else self.whole - M

    def representable_L(self, x) -> frozenset:
        return self.hull_L({x})

    def representable_R(self, x) -> frozenset:
        return self.hull_R({x})


def _order(S):
    return (len(S), sorted(map(str, S)))


def lattices(X: FiniteSpace | FinitePoset) -> Lattices:
    """For posets (down-sets, up-sets, both, all); for spaces (opens, closeds, clopens, all)."""
    T = TwoValuedPair(X)
    return Lattices(T.L, T.R, T.B, T.P)


def complement2(X, A, M) -> frozenset:
    return TwoValuedPair(X).complement(frozenset(A), frozenset(M))


# ---------------------------------------------------------------------------
# maps and quantifiers


class Map2:
    """A continuous map ``X -> Y`` of finite spaces."""

    def __init__(self, X: TwoValuedPair, Y: TwoValuedPair, fn: dict):
        self.X, self.Y, self.fn = X, Y, dict(fn)
        for o in Y.space.opens:
            if self.preimage(o) not in X.space.opens:
                raise ValidationError("map is not continuous")

    def preimage(self, S) -> frozenset:
        return frozenset(x for x in self.X.whole if self.fn[x] in S)

    def image(self, S) -> frozenset:
        return frozenset(self.fn[x] for x in S)

    def exists_L(self, A) -> frozenset:
        return self.Y.hull_L(self.image(A))

    def exists_R(self, M) -> frozenset:
        return self.Y.hull_R(self.image(M))

    def forall_L(self, A) -> frozenset:
        return frozenset().union(*(S for S in self.Y.L if self.preimage(S) <= A))

    def forall_R(self, M) -> frozenset:
        return frozenset().union(*(S for S in self.Y.R if self.preimage(S) <= M))


def continuous_maps(X: TwoValuedPair, Y: TwoValuedPair) -> Iterator[Map2]:
    xs, ys = list(X.whole), list(Y.whole)
    for img in product(ys, repeat=len(xs)):
        fn = dict(zip(xs, img))
        if all(frozenset(x for x in xs if fn[x] in o) in X.space.opens for o in Y.space.opens):
            yield Map2(X, Y, fn)


# ---------------------------------------------------------------------------
# comprehension over a poset


def lower_sets(elements: Sequence, below: Callable) -> list[frozenset]:
    """All subsets closed downward under the preorder ``below(a, b)`` (``a`` under ``b``)."""
    els = list(elements)
    under = {x: [a for a in els if a != x and below(a, x)] for x in els}
    order = sorted(els, key=lambda x: len(under[x]))
    out: list[frozenset] = []

    def go(i, chosen):
        if i == len(order):
            out.append(frozenset(chosen))
            return
        x = order[i]
        go(i + 1, chosen)
        if all(a in chosen for a in under[x]):
            chosen.add(x)
            go(i + 1, chosen)
            chosen.discard(x)

    go(0, set())
    return out


def relations(P: FinitePoset) -> list[frozenset]:
    """Order-compatible relations: ``H(x, y)`` and ``x' <= x``, ``y <= y'`` give ``H(x', y')``."""
    pairs = [(x, y) for x in P.elements for y in P.elements]
    return lower_sets(pairs, lambda a, b: P.leq(a[0], b[0]) and P.leq(b[1], a[1]))


def poset_diamond(P: FinitePoset, S) -> frozenset:
    """``x (<> S) y`` iff some ``a`` in ``S`` has ``x <= a <= y``."""
    return frozenset(
        (x, y) for x in P.elements for y in P.elements if any(P.leq(x, a) and P.leq(a, y) for a in S)
    )


def poset_comprehension(P: FinitePoset, H) -> frozenset:
    """``i_X H = {x | H(x, x)}``."""
    H = frozenset(H)
    return frozenset(x for x in P.elements if (x, x) in H)


def galois_table(P: FinitePoset) -> list[tuple[frozenset, frozenset, bool, bool]]:
    """Every ``(S, H)`` with both sides of ``<> S <= H  iff  S <= i H``."""
    rows = []
    rels = [(H, poset_comprehension(P, H)) for H in relations(P)]
    for S in subsets(P.elements):
        d = poset_diamond(P, S)
        rows.extend((S, H, d <= H, S <= iH) for H, iH in rels)
    return rows


# ---------------------------------------------------------------------------
# the law suite over V = 2


def _laws_one(T: TwoValuedPair) -> Iterator[tuple[str, bool]]:
    X = T.whole
    L, R = T.L, T.R
    bools = (False, True)
    for A in L:
        yield "comp1", T.tensor(X, A) == A and T.complement(X, T.hull_R(A)) == T.hull_R(A)
        yield "comp5", T.internal_hom_L(X, A) == A
        yield "comp10", all(T.complement(X, M) == M for M in R)
        for M in R:
            phi = T.complement(A, M)
            yield "closure", T.in_R(phi)
            for N in R:
                lhs = T.hom(N, phi)
                mid = T.hom(T.oodot(A, N), M)
                rgt = T.hom(A, T.triangleright(N, M))
                yield "comp11", lhs == mid == rgt
                yield "comp2", lhs == mid
                yield "lands", T.in_R(T.oodot(A, N)) and T.in_L(T.triangleright(N, M))
            for B in L:
                yield "comp1.4", T.complement(T.tensor(A, B), M) == T.complement(A, T.complement(B, M))
                yield "comp11.r", T.hom(B, T.complement_r(M, A)) == T.hom(T.oodot_r(M, B), A) == T.hom(
                    M, T.triangleright_r(B, A)
                )
            yield "ip1", all(
                (T.star(A, M) <= v) == T.hom(A, T.complement_r(M, frozenset() if not v else X)) for v in bools
            )
        for x in X:
            yield "exy", T.hom(T.representable_L(x), A) == (x in A)
        for P in T.P:
            # density is preserved on open parts
            yield "intro", T.hull_R(A & P) == T.oodot(A, T.hull_R(P))
    for M in R:
        for x in X:
            yield "exy", T.star(T.representable_L(x), M) == (x in M)


def _laws_map(f: Map2) -> Iterator[tuple[str, bool]]:
    X, Y = f.X, f.Y
    bools = (False, True)
    for A in Y.L:
        for v in bools:
            yield "comp25", f.preimage(Y.copower(v, A)) == X.copower(v, f.preimage(A))
            yield "comp26", f.preimage(Y.power(v, A)) == X.power(v, f.preimage(A))
    for A in X.L:
        for B in Y.L:
            yield "comp13", X.hom(A, f.preimage(B)) == Y.hom(f.exists_L(A), B)
            yield "comp25.2", Y.hom(B, f.forall_L(A)) == X.hom(f.preimage(B), A)
        for v in bools:
            yield "comp26.1", Y.copower(v, f.exists_L(A)) == f.exists_L(X.copower(v, A))
            yield "comp25.3", Y.power(v, f.forall_L(A)) == f.forall_L(X.power(v, A))
        for M in Y.R:
            yield "comp27", Y.star(f.exists_L(A), M) == X.star(A, f.preimage(M))
    for A in Y.L:
        for M in X.R:
            yield "comp7", Y.oodot(A, f.exists_R(M)) == f.exists_R(X.oodot(f.preimage(A), M))
        for v in bools:
            yield "comp27.3", f.preimage(Y.absolute_complement(A, v)) == X.absolute_complement(f.preimage(A), v)
    for M in Y.R:
        for v in bools:
            yield "comp27.2", f.preimage(Y.absolute_complement_r(M, v)) == X.absolute_complement_r(f.preimage(M), v)
        for A in Y.L:
            yield "comp3", f.preimage(Y.complement(A, M)) == X.complement(f.preimage(A), f.preimage(M))
            yield "comp12", f.preimage(Y.tensor(A, M)) == X.tensor(f.preimage(A), f.preimage(M))


def law_suite_2(X: FiniteSpace | FinitePoset, maps: Iterable[Map2] | None = None) -> dict[str, tuple[int, int]]:
    """Evaluate the two-valued laws on ``X``; returns ``law -> (passed, total)``.

    Morphism laws run over every continuous self-map of ``X``, every map
    to the one-point space and every point inclusion, unless ``maps`` is given.
    """
    T = TwoValuedPair(X)
    tally: dict[str, list[int]] = {}

    def record(items):
        for law, ok in items:
            t = tally.setdefault(law, [0, 0])
            t[0] += bool(ok)
            t[1] += 1

    record(_laws_one(T))
    if maps is None:
        one = TwoValuedPair(FiniteSpace(["*"], [[], ["*"]]))
        maps = list(continuous_maps(T, T)) + list(continuous_maps(T, one)) + list(continuous_maps(one, T))
    for f in maps:
        record(_laws_map(f))
    if isinstance(X, FinitePoset):
        rows = galois_table(X)
        t = tally.setdefault("tv", [0, 0])
        t[0] += sum(1 for *_, a, b in rows if a == b)
        t[1] += len(rows)
    return {k: (v[0], v[1]) for k, v in sorted(tally.items())}


def suite_passes(report: dict[str, tuple[int, int]]) -> bool:
    return all(p == t for p, t in report.values())


# ---------------------------------------------------------------------------
# cross-model check


def poset_category(P: FinitePoset):
    from .library import poset_from_order

    names = [str(x) for x in P.elements]
    return poset_from_order(names, {(str(a), str(b)) for a, b in P.le}, name="P")


def subsingleton_left(X, S):
    """The left action on the poset category with one point over each element of the down-set ``S``."""
    from .action import LeftAction

    fibers = {x: (["*"] if x in S else []) for x in X.objects}
    maps = {f: ({"*": "*"} if X.tgt(f) in S else {}) for f in X.arrows}
    return LeftAction(X, fibers, maps, check=True)


def subsingleton_right(X, S):
    from .action import RightAction

    fibers = {x: (["*"] if x in S else []) for x in X.objects}
    maps = {f: ({"*": "*"} if X.src(f) in S else {}) for f in X.arrows}
    return RightAction(X, fibers, maps, check=True)


def support(F) -> frozenset:
    return frozenset(x for x in F.base.objects if len(F.fibers[x]) > 0)


def cross_model_check(P: FinitePoset) -> bool:
    """Supports of the set-valued operators on subsingleton actions match the two-valued ones."""
    from .action import complement, oodot, triangleright

    X = poset_category(P)
    T = TwoValuedPair(P)
    for A in T.L:
        a = subsingleton_left(X, {str(x) for x in A})
        for M in T.R:
            m = subsingleton_right(X, {str(x) for x in M})
            if support(complement(a, m)) != frozenset(str(x) for x in T.complement(A, M)):
                return False
            if support(oodot(a, m)) != frozenset(str(x) for x in T.oodot(A, M)):
                return False
            for N in T.R:
                n = subsingleton_right(X, {str(x) for x in N})
                if support(triangleright(n, m)) != frozenset(str(x) for x in T.triangleright(N, M)):
                    return False
    return True
