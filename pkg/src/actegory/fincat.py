"""Fully tabulated finite categories and functors between them."""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from . import labels
from .config import limits
from .errors import (
    AssociativityViolation,
    DanglingArrow,
    FunctorialityViolation,
    IdentityViolation,
    MissingComposite,
    SizeLimitExceeded,
    UnknownObject,
    ValidationError,
)


class FinSet:
    """An ordered finite set of string labels.

    ``payload`` optionally maps each label to the structured value it
    encodes (a natural transformation, a section, ...).  It takes no part in
    equality.
    """

    __slots__ = ("elements", "payload", "_index")

    def __init__(self, elements: Iterable[str], payload: Mapping[str, object] | None = None):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValidationError(f"duplicate labels in finite set: {self.elements}")
        self.payload = dict(payload) if payload else {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self._index

    def index(self, e: str) -> int:
        return self._index[e]

    def __eq__(self, other):
        if not isinstance(other, FinSet):
            return NotImplemented
        return set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash(frozenset(self.elements))

    def __repr__(self):
        return f"FinSet({list(self.elements)})"


class FinCat:
    """A finite category given by its full composition table.

    ``compose(g, f)`` is ``g`` after ``f`` and requires ``tgt(f) == src(g)``.
    Object and arrow ids are strings; their order is the declaration order.
    """

    def __init__(
        self,
        objects: Sequence[str],
        arrows: Mapping[str, tuple[str, str]],
        identities: Mapping[str, str],
        composition: Mapping[tuple[str, str], str],
        *,
        name: str = "C",
        origin: Mapping[str, Hashable] | None = None,
        arrow_origin: Mapping[str, Hashable] | None = None,
    ):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = dict(arrows)
        self.identities = dict(identities)
        self._comp = dict(composition)
        self.origin = dict(origin) if origin else {}
        self.arrow_origin = dict(arrow_origin) if arrow_origin else {}
        self._id_set = frozenset(self.identities.values())
        hom: dict[tuple[str, str], list[str]] = {(x, y): [] for x in self.objects for y in self.objects}
        out: dict[str, list[str]] = {x: [] for x in self.objects}
        inc: dict[str, list[str]] = {x: [] for x in self.objects}
        for f, (s, t) in self.arrows.items():
            hom[(s, t)].append(f)
            out[s].append(f)
            inc[t].append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._out = {k: tuple(v) for k, v in out.items()}
        self._in = {k: tuple(v) for k, v in inc.items()}
        self._obj_set = frozenset(self.objects)
        self._key = None
        self._hash = None
        self._cache: dict = {}

    # -- basic structure -------------------------------------------------
    def src(self, f: str) -> str:
        return self.arrows[f][0]

    def tgt(self, f: str) -> str:
        return self.arrows[f][1]

    def identity(self, x: str) -> str:
        try:
            return self.identities[x]
        except KeyError:
            raise UnknownObject(f"{x!r} is not an object of {self.name}") from None

    def is_identity(self, f: str) -> bool:
        return f in self._id_set

    def compose(self, g: str, f: str) -> str:
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise DanglingArrow(f"{g} . {f} is not defined in {self.name}") from None

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return self._hom[(x, y)]

    def out_arrows(self, x: str) -> tuple[str, ...]:
        return self._out[x]

    def in_arrows(self, x: str) -> tuple[str, ...]:
        return self._in[x]

    def has_object(self, x: str) -> bool:
        return x in self._obj_set

    def require(self, x: str) -> str:
        if x not in self._obj_set:
            raise UnknownObject(f"{x!r} is not an object of {self.name}")
        return x

    def non_identity_arrows(self) -> list[str]:
        return [f for f in self.arrows if f not in self._id_set]

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        for f, (_, y) in self.arrows.items():
            for g in self._out[y]:
                yield g, f

    def is_iso(self, f: str) -> bool:
        return self.inverse(f) is not None

    def inverse(self, f: str) -> str | None:
        s, t = self.arrows[f]
        for g in self._hom[(t, s)]:
            if self._comp[(g, f)] == self.identities[s] and self._comp[(f, g)] == self.identities[t]:
                return g
        return None

    def is_groupoid(self) -> bool:
        return all(self.is_iso(f) for f in self.arrows)

    def is_preorder(self) -> bool:
        return all(len(v) <= 1 for v in self._hom.values())

    def isomorphic_objects(self, x: str, y: str) -> bool:
        return any(self.is_iso(f) for f in self._hom[(x, y)])

    @property
    def size(self) -> tuple[int, int]:
        return len(self.objects), len(self.arrows)

    # -- equality --------------------------------------------------------
    def structural_key(self):
        if self._key is None:
            self._key = (
                frozenset(self.objects),
                frozenset(self.arrows.items()),
                frozenset(self.identities.items()),
                frozenset(self._comp.items()),
            )
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCat):
            return NotImplemented
        if self.size != other.size:
            return False
        return self.structural_key() == other.structural_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.objects), len(self.arrows)))
        return self._hash

    def __repr__(self):
        return f"FinCat({self.name}: {len(self.objects)} objects, {len(self.arrows)} arrows)"


# ---------------------------------------------------------------------------
# validation


def check_category(cat: FinCat) -> FinCat:
    """Exhaustively re-check the category axioms of ``cat``."""
    objs = set(cat.objects)
    for f, (s, t) in cat.arrows.items():
        if s not in objs or t not in objs:
            raise DanglingArrow(f"arrow {f}: {s} -> {t} has an endpoint outside {cat.name}")
    for x in cat.objects:
        i = cat.identities.get(x)
        if i is None or cat.arrows.get(i) != (x, x):
            raise IdentityViolation(f"object {x} lacks an identity endo-arrow")
    for g, f in cat.composable_pairs():
        h = cat._comp.get((g, f))
        if h is None:
            raise MissingComposite(f"composite {g} . {f} is missing")
        if h not in cat.arrows:
            raise DanglingArrow(f"composite {g} . {f} = {h} is not an arrow")
        if cat.arrows[h] != (cat.src(f), cat.tgt(g)):
            raise DanglingArrow(
                f"composite {g} . {f} = {h} has endpoints {cat.arrows[h]}, "
                f"expected {(cat.src(f), cat.tgt(g))}"
            )
    for f, (s, t) in cat.arrows.items():
        if cat._comp[(f, cat.identities[s])] != f or cat._comp[(cat.identities[t], f)] != f:
            raise IdentityViolation(f"identities are not neutral on {f}")
    for g, f in cat.composable_pairs():
        gf = cat._comp[(g, f)]
        for h in cat.out_arrows(cat.tgt(g)):
            if cat._comp[(h, gf)] != cat._comp[(cat._comp[(h, g)], f)]:
                raise AssociativityViolation(
                    f"({h} . {g}) . {f} != {h} . ({g} . {f}) in {cat.name}"
                )
    return cat


def validate_category(raw: Mapping | FinCat, *, bounded: bool = True) -> FinCat:
    """Build a FinCat from a raw description and verify every axiom.

    ``raw`` has keys ``objects`` (list of ids), ``arrows`` (list of
    ``(id, source, target)`` for the non-identity arrows), ``composition``
    (mapping ``(g, f) -> h`` or list of ``(g, f, h)`` for composites of
    non-identity arrows) and an optional ``name``.  Identities are implicit
    and named ``id_<object>``.
    """
    if isinstance(raw, FinCat):
        return check_category(raw)
    lim = limits()
    name = raw.get("name", "C")
    objects = list(raw["objects"])
    if len(set(objects)) != len(objects):
        raise ValidationError(f"duplicate objects in {name}")
    arrows: dict[str, tuple[str, str]] = {}
    identities = {x: labels.ident(x) for x in objects}
    for x, i in identities.items():
        arrows[i] = (x, x)
    id_set = set(identities.values())
    for entry in raw.get("arrows", ()):
        f, s, t = entry
        if f in id_set:
            raise IdentityViolation(f"identity {f} may not be redefined")
        if f in arrows:
            raise ValidationError(f"duplicate arrow id {f}")
        if s not in identities or t not in identities:
            raise DanglingArrow(f"arrow {f}: {s} -> {t} mentions an unknown object")
        arrows[f] = (s, t)
    if bounded and (len(objects) > lim.max_objects or len(arrows) > lim.max_arrows):
        raise SizeLimitExceeded(
            f"{name} has {len(objects)} objects / {len(arrows)} arrows; "
            f"limits are {lim.max_objects} / {lim.max_arrows}"
        )
    table = raw.get("composition", {})
    entries = table.items() if isinstance(table, Mapping) else (((g, f), h) for g, f, h in table)
    comp: dict[tuple[str, str], str] = {}
    for (g, f), h in entries:
        for a in (g, f, h):
            if a not in arrows:
                raise DanglingArrow(f"composite {g} . {f} = {h} mentions unknown arrow {a}")
        if arrows[f][1] != arrows[g][0]:
            raise DanglingArrow(f"{g} . {f} = {h}: {f} and {g} are not composable")
        if arrows[h] != (arrows[f][0], arrows[g][1]):
            raise DanglingArrow(
                f"composite {g} . {f} = {h} has endpoints {arrows[h]}, "
                f"expected {(arrows[f][0], arrows[g][1])}"
            )
        if g in id_set and h != f or f in id_set and h != g:
            raise IdentityViolation(f"{g} . {f} = {h} contradicts identity neutrality")
        if comp.get((g, f), h) != h:
            raise ValidationError(f"conflicting entries for {g} . {f}")
        comp[(g, f)] = h
    for f, (s, t) in arrows.items():
        comp[(f, identities[s])] = f
        comp[(identities[t], f)] = f
    cat = FinCat(objects, arrows, identities, comp, name=name)
    return check_category(cat)


# ---------------------------------------------------------------------------
# builder for derived categories


class CatBuilder:
    """Assembles a derived category from hashable object/arrow keys.

    Ids are produced by label functions; identity arrows are named
    ``id_<object id>``.  The composite of two arrow keys is computed by
    ``compose_keys`` and interned through the arrow table.
    """

    def __init__(self, name: str):
        self.name = name
        self.objects: list[str] = []
        self.obj_key: dict[str, Hashable] = {}
        self.key_obj: dict[Hashable, str] = {}
        self.arrows: dict[str, tuple[str, str]] = {}
        self.arrow_key: dict[str, Hashable] = {}
        self.key_arrow: dict[Hashable, str] = {}
        self.identities: dict[str, str] = {}

    def add_object(self, key: Hashable, label: str) -> str:
        if key in self.key_obj:
            return self.key_obj[key]
        if label in self.obj_key:
            raise ValidationError(f"label clash {label!r} while building {self.name}")
        self.objects.append(label)
        self.obj_key[label] = key
        self.key_obj[key] = label
        return label

    def add_arrow(self, key: Hashable, src: str, tgt: str, label: str, identity: bool = False) -> str:
        if key in self.key_arrow:
            return self.key_arrow[key]
        if identity:
            label = labels.ident(src)
            self.identities[src] = label
        if label in self.arrows:
            raise ValidationError(f"arrow label clash {label!r} while building {self.name}")
        self.arrows[label] = (src, tgt)
        self.arrow_key[label] = key
        self.key_arrow[key] = label
        return label

    def build(self, compose_keys: Callable[[Hashable, Hashable], Hashable], *, check: bool = False) -> FinCat:
        if len(self.arrows) > limits().derived_arrows:
            raise SizeLimitExceeded(
                f"derived category {self.name} has {len(self.arrows)} arrows "
                f"(limit {limits().derived_arrows})"
            )
        out: dict[str, list[str]] = {x: [] for x in self.objects}
        for f, (s, _) in self.arrows.items():
            out[s].append(f)
        comp: dict[tuple[str, str], str] = {}
        for f, (s, t) in self.arrows.items():
            fk = self.arrow_key[f]
            for g in out[t]:
                gk = self.arrow_key[g]
                hk = compose_keys(gk, fk)
                try:
                    comp[(g, f)] = self.key_arrow[hk]
                except KeyError:
                    raise MissingComposite(
                        f"composite of {g} and {f} (key {hk!r}) is not an arrow of {self.name}"
                    ) from None
        cat = FinCat(
            self.objects,
            self.arrows,
            self.identities,
            comp,
            name=self.name,
            origin=self.obj_key,
            arrow_origin=self.arrow_key,
        )
        if check:
            check_category(cat)
        return cat


# ---------------------------------------------------------------------------
# standard constructions


def opposite(X: FinCat) -> FinCat:
    """Reverse every arrow; ids are kept, so ``opposite(opposite(X)) is X``."""
    op = X._cache.get("op")
    if op is None:
        arrows = {f: (t, s) for f, (s, t) in X.arrows.items()}
        comp = {(f, g): h for (g, f), h in X._comp.items()}
        name = X.name[:-3] if X.name.endswith("^op") else X.name + "^op"
        op = FinCat(
            X.objects,
            arrows,
            X.identities,
            comp,
            name=name,
            origin=X.origin,
            arrow_origin=X.arrow_origin,
        )
        X._cache["op"] = op
        op._cache["op"] = X
    return op


def product(X: FinCat, Y: FinCat) -> FinCat:
    """Cartesian product; objects and arrows are labelled ``(a,b)``.

    ``origin``/``arrow_origin`` of the result give the component pairs.
    """
    key = ("prod", id(Y))
    cached = X._cache.get(key)
    if cached is not None and cached[0] is Y:
        return cached[1]
    n_arrows = len(X.arrows) * len(Y.arrows)
    if n_arrows > limits().derived_arrows:
        raise SizeLimitExceeded(f"{X.name} x {Y.name} would have {n_arrows} arrows")
    b = CatBuilder(f"{X.name}x{Y.name}")
    for x in X.objects:
        for y in Y.objects:
            b.add_object((x, y), labels.pair(x, y))
    for f, (s, t) in X.arrows.items():
        for g, (s2, t2) in Y.arrows.items():
            ident = X.is_identity(f) and Y.is_identity(g)
            b.add_arrow((f, g), b.key_obj[(s, s2)], b.key_obj[(t, t2)], labels.pair(f, g), identity=ident)
    P = b.build(lambda gk, fk: (X.compose(gk[0], fk[0]), Y.compose(gk[1], fk[1])))
    X._cache[key] = (Y, P)
    return P


def twisted(X: FinCat) -> FinCat:
    """``X^op x X``, the base of endoprofunctors (cached per category)."""
    T = X._cache.get("twisted")
    if T is None:
        T = product(opposite(X), X)
        X._cache["twisted"] = T
    return T


# ---------------------------------------------------------------------------
# functors


class FunctorMap:
    """A functor between finite categories given by its object and arrow maps."""

    def __init__(
        self,
        domain: FinCat,
        codomain: FinCat,
        object_map: Mapping[str, str],
        arrow_map: Mapping[str, str] | None = None,
        *,
        name: str = "f",
        check: bool = True,
    ):
        self.domain = domain
        self.codomain = codomain
        self.name = name
        self.object_map = {x: object_map[x] for x in domain.objects}
        amap = dict(arrow_map or {})
        for x, i in domain.identities.items():
            amap.setdefault(i, codomain.identity(self.object_map[x]))
        self.arrow_map = amap
        if check:
            self.validate()

    def __call__(self, x: str) -> str:
        return self.object_map[x]

    def on_arrow(self, f: str) -> str:
        return self.arrow_map[f]

    def validate(self) -> "FunctorMap":
        X, Y = self.domain, self.codomain
        for x, y in self.object_map.items():
            if not Y.has_object(y):
                raise FunctorialityViolation(f"{self.name}: object {x} maps outside {Y.name}")
        for f, (s, t) in X.arrows.items():
            if f not in self.arrow_map:
                raise FunctorialityViolation(f"{self.name}: arrow {f} has no image")
            g = self.arrow_map[f]
            if g not in Y.arrows:
                raise FunctorialityViolation(f"{self.name}: {f} maps to unknown arrow {g}")
            if Y.arrows[g] != (self.object_map[s], self.object_map[t]):
                raise FunctorialityViolation(f"{self.name}: {f} maps to {g} with wrong endpoints")
        for x, i in X.identities.items():
            if self.arrow_map[i] != Y.identity(self.object_map[x]):
                raise FunctorialityViolation(f"{self.name}: identity of {x} not preserved")
        for g, f in X.composable_pairs():
            lhs = self.arrow_map[X.compose(g, f)]
            rhs = Y.compose(self.arrow_map[g], self.arrow_map[f])
            if lhs != rhs:
                raise FunctorialityViolation(f"{self.name}: composite {g} . {f} not preserved")
        return self

    def then(self, other: "FunctorMap") -> "FunctorMap":
        """``other`` after ``self``."""
        if other.domain is not self.codomain and other.domain != self.codomain:
            raise FunctorialityViolation("functors are not composable")
        return FunctorMap(
            self.domain,
            other.codomain,
            {x: other.object_map[y] for x, y in self.object_map.items()},
            {f: other.arrow_map[g] for f, g in self.arrow_map.items()},
            name=f"{other.name}.{self.name}",
            check=False,
        )

    def __eq__(self, other):
        if not isinstance(other, FunctorMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.object_map == other.object_map
            and self.arrow_map == other.arrow_map
        )

    def __hash__(self):
        return hash((tuple(sorted(self.object_map.items())), len(self.arrow_map)))

    def __repr__(self):
        return f"FunctorMap({self.name}: {self.domain.name} -> {self.codomain.name})"


def identity_functor(X: FinCat) -> FunctorMap:
    return FunctorMap(X, X, {x: x for x in X.objects}, {f: f for f in X.arrows}, name=f"id_{X.name}", check=False)


def opposite_functor(f: FunctorMap) -> FunctorMap:
    return FunctorMap(
        opposite(f.domain), opposite(f.codomain), f.object_map, f.arrow_map, name=f.name + "^op", check=False
    )


def product_functor(f: FunctorMap, g: FunctorMap) -> FunctorMap:
    P, Q = product(f.domain, g.domain), product(f.codomain, g.codomain)
    omap = {}
    for o in P.objects:
        a, b = P.origin[o]
        omap[o] = labels_pair_obj(Q, f.object_map[a], g.object_map[b])
    amap = {}
    qkey = {v: k for k, v in Q.arrow_origin.items()}
    for u in P.arrows:
        a, b = P.arrow_origin[u]
        amap[u] = qkey[(f.arrow_map[a], g.arrow_map[b])]
    return FunctorMap(P, Q, omap, amap, name=f"{f.name}x{g.name}", check=False)


def labels_pair_obj(Q: FinCat, a: str, b: str) -> str:
    return labels.pair(a, b)


def twisted_functor(f: FunctorMap) -> FunctorMap:
    """``f^op x f : X^op x X -> Y^op x Y``."""
    h = f.__dict__.get("_twisted")
    if h is None:
        X, Y = f.domain, f.codomain
        TX, TY = twisted(X), twisted(Y)
        ykey = {v: k for k, v in TY.arrow_origin.items()}
        omap = {o: labels.pair(f.object_map[TX.origin[o][0]], f.object_map[TX.origin[o][1]]) for o in TX.objects}
        amap = {}
        for u in TX.arrows:
            a, b = TX.arrow_origin[u]
            amap[u] = ykey[(f.arrow_map[a], f.arrow_map[b])]
        h = FunctorMap(TX, TY, omap, amap, name=f"{f.name}^opx{f.name}", check=False)
        f.__dict__["_twisted"] = h
    return h


def projection_functors(X: FinCat, Y: FinCat) -> tuple[FunctorMap, FunctorMap]:
    P = product(X, Y)
    p1 = FunctorMap(
        P, X, {o: P.origin[o][0] for o in P.objects}, {u: P.arrow_origin[u][0] for u in P.arrows}, name="pi1", check=False
    )
    p2 = FunctorMap(
        P, Y, {o: P.origin[o][1] for o in P.objects}, {u: P.arrow_origin[u][1] for u in P.arrows}, name="pi2", check=False
    )
    return p1, p2


def terminal_category() -> FinCat:
    return validate_category({"name": "1", "objects": ["*"], "arrows": [], "composition": {}})


def to_terminal(X: FinCat, one: FinCat | None = None) -> FunctorMap:
    one = one or terminal_category()
    o = one.objects[0]
    return FunctorMap(X, one, {x: o for x in X.objects}, {f: one.identity(o) for f in X.arrows}, name=f"!{X.name}", check=False)


def point(X: FinCat, x: str, one: FinCat | None = None) -> FunctorMap:
    """The functor ``1 -> X`` picking ``x``."""
    X.require(x)
    one = one or terminal_category()
    o = one.objects[0]
    return FunctorMap(one, X, {o: x}, {one.identity(o): X.identity(x)}, name=x, check=False)


def constant_functor(X: FinCat, Y: FinCat, y: str) -> FunctorMap:
    Y.require(y)
    return FunctorMap(X, Y, {x: y for x in X.objects}, {f: Y.identity(y) for f in X.arrows}, name=f"const_{y}", check=False)


def full_subcategory(X: FinCat, objs: Iterable[str], name: str | None = None) -> tuple[FinCat, FunctorMap]:
    """Full subcategory on ``objs`` with its inclusion functor."""
    keep = [x for x in X.objects if x in set(objs)]
    arrows = {f: st for f, st in X.arrows.items() if st[0] in keep and st[1] in keep}
    comp = {k: h for k, h in X._comp.items() if k[0] in arrows and k[1] in arrows}
    S = FinCat(
        keep,
        arrows,
        {x: X.identities[x] for x in keep},
        comp,
        name=name or f"{X.name}|{','.join(keep)}",
    )
    inc = FunctorMap(S, X, {x: x for x in keep}, {f: f for f in arrows}, name="incl", check=False)
    return S, inc


def functors(
    X: FinCat,
    Y: FinCat,
    *,
    limit: int | None = None,
    obj_choices: Callable[[str], Iterable[str]] | None = None,
    arrow_choices: Callable[[str, str, str], Iterable[str]] | None = None,
    injective: bool = False,
) -> Iterator[FunctorMap]:
    """Enumerate every functor ``X -> Y`` (backtracking, exhaustive).

    ``obj_choices(x)`` and ``arrow_choices(f, F src, F tgt)`` restrict the
    candidate images; ``injective`` keeps only functors injective on objects
    and arrows.
    """
    lim = limits()
    budget = [lim.max_search]
    objs = list(X.objects)
    non_id = [f for f in X.arrows if not X.is_identity(f)]
    # arrows become eligible once both endpoints are placed
    pos = {x: i for i, x in enumerate(objs)}
    after: dict[int, list[str]] = {i: [] for i in range(len(objs))}
    for f in non_id:
        s, t = X.arrows[f]
        after[max(pos[s], pos[t])].append(f)
    constraints: dict[str, list[tuple[str, str, str]]] = {f: [] for f in X.arrows}
    for g, f in X.composable_pairs():
        h = X.compose(g, f)
        for a in (g, f, h):
            constraints[a].append((g, f, h))
    omap: dict[str, str] = {}
    amap: dict[str, str] = {}
    used_objs: set = set()
    used_arrows: set = set()
    count = [0]

    def consistent(a: str) -> bool:
        for g, f, h in constraints[a]:
            if g in amap and f in amap and h in amap:
                if Y.compose(amap[g], amap[f]) != amap[h]:
                    return False
        return True

    def place_arrows(i: int, k: int) -> Iterator[None]:
        pending = after[i]
        if k == len(pending):
            yield
            return
        f = pending[k]
        s, t = X.arrows[f]
        cands = Y.hom(omap[s], omap[t]) if arrow_choices is None else arrow_choices(f, omap[s], omap[t])
        for g in cands:
            if injective and g in used_arrows:
                continue
            budget[0] -= 1
            if budget[0] < 0:
                raise SizeLimitExceeded(f"functor enumeration {X.name} -> {Y.name} exceeded search budget")
            amap[f] = g
            used_arrows.add(g)
            if consistent(f):
                yield from place_arrows(i, k + 1)
            used_arrows.discard(g)
            del amap[f]

    def rec(i: int) -> Iterator[FunctorMap]:
        if i == len(objs):
            count[0] += 1
            yield FunctorMap(X, Y, dict(omap), dict(amap), check=False)
            return
        x = objs[i]
        for y in (Y.objects if obj_choices is None else obj_choices(x)):
            if injective and y in used_objs:
                continue
            omap[x] = y
            used_objs.add(y)
            used_arrows.add(Y.identity(y))
            amap[X.identity(x)] = Y.identity(y)
            if consistent(X.identity(x)):
                for _ in place_arrows(i, 0):
                    yield from rec(i + 1)
                    if limit is not None and count[0] >= limit:
                        return
            del amap[X.identity(x)]
            used_arrows.discard(Y.identity(y))
            used_objs.discard(y)
            del omap[x]

    yield from rec(0)


def nat_isos_between_functors(f: FunctorMap, g: FunctorMap, *, isos_only: bool = True) -> Iterator[dict[str, str]]:
    """Natural transformations ``f => g`` (components are arrows of the codomain)."""
    X, Y = f.domain, f.codomain
    objs = list(X.objects)
    comp: dict[str, str] = {}
    checks: dict[str, list[str]] = {x: [] for x in objs}
    pos = {x: i for i, x in enumerate(objs)}
    for u, (s, t) in X.arrows.items():
        checks[objs[max(pos[s], pos[t])]].append(u)

    def ok(x: str) -> bool:
        for u in checks[x]:
            s, t = X.arrows[u]
            if Y.compose(g.arrow_map[u], comp[s]) != Y.compose(comp[t], f.arrow_map[u]):
                return False
        return True

    def rec(i: int):
        if i == len(objs):
            yield dict(comp)
            return
        x = objs[i]
        for c in Y.hom(f(x), g(x)):
            if isos_only and not Y.is_iso(c):
                continue
            comp[x] = c
            if ok(x):
                yield from rec(i + 1)
            del comp[x]

    yield from rec(0)


def naturally_isomorphic_functors(f: FunctorMap, g: FunctorMap) -> dict[str, str] | None:
    return next(nat_isos_between_functors(f, g), None)


def components(X: FinCat) -> list[list[str]]:
    """Connected components of ``X`` as lists of objects in declaration order."""
    parent = {x: x for x in X.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f, (s, t) in X.arrows.items():
        a, b = find(s), find(t)
        if a != b:
            parent[b] = a
    groups: dict[str, list[str]] = {}
    for x in X.objects:
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def iter_pairs(X: FinCat) -> Iterator[tuple[str, str]]:
    return iter(_cartesian(X.objects, X.objects))
