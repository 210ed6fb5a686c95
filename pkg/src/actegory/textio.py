"""Line-oriented text format for categories, functors, actions and profunctors.

::

    # comment
    category 2
      objects a b
      arrow u: a -> b
      compose g f = h          # g after f, non-identity arrows only
    end
    functor F : 1 -> 2
      obj * -> b
      arr id_* -> id_b         # optional; identities are implied
    end
    leftaction A on 2
      at a: e1 e2
      act u: e1 -> e2          # leftaction: A b -> A a for u: a -> b
    end
    rightaction M on 2
      ...
    end
    profunctor H on 2
      at (a,b): p q
      lact u @ b: p -> q       # H(u, b) for u: a -> b, from H(b, b) to H(a, b)
      ract a @ u: p -> q       # H(a, u), from H(a, a) to H(a, b)
    end
    set V: x y z

Identity arrows are implicit (``id_<obj>``) and may not be declared.
Every token is whitespace free, which matches the derived-label encoding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .action import LeftAction, RightAction
from .errors import ActegoryError, NameClash, ParseError, UnknownName, ValidationError
from .fincat import FinCat, FinSet, FunctorMap, validate_category
from .nat import SetFunctor
from .profunctor import EndoProfunctor

KINDS = ("category", "functor", "leftaction", "rightaction", "profunctor", "set")


class Workspace:
    """Named values, unique names, everything validated on entry."""

    def __init__(self):
        self.values: dict[str, object] = {}

    def add(self, name: str, value) -> None:
        if name in self.values:
            raise NameClash(f"name {name!r} is already defined")
        self.values[name] = value

    def __getitem__(self, name: str):
        try:
            return self.values[name]
        except KeyError:
            raise UnknownName(f"unknown name {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.values

    def __iter__(self):
        return iter(self.values)

    def get_category(self, name: str) -> FinCat:
        v = self[name]
        if not isinstance(v, FinCat):
            raise ValidationError(f"{name} is not a category")
        return v

    def load(self, path: str | Path) -> list[str]:
        p = Path(path)
        return self.loads(p.read_text(encoding="utf-8"), source=str(p))

    def loads(self, text: str, source: str = "<text>") -> list[str]:
        added = []
        for name, value in _parse(text, self, source):
            self.add(name, value)
            added.append(name)
        return added


# ---------------------------------------------------------------------------
# parsing


@dataclass
class _Line:
    no: int
    col: int
    tokens: list[str]
    text: str


def _lines(text: str) -> Iterator[_Line]:
    for no, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        toks = body.split()
        if toks:
            yield _Line(no, len(raw) - len(raw.lstrip()) + 1, toks, raw)


_COMMENT = re.compile(r"(^|\s)#.*$")


def _strip_comment(raw: str) -> str:
    # '#' opens a comment only at the start of a token
    return _COMMENT.sub("", raw)


class _Reader:
    def __init__(self, text: str, source: str):
        self.lines = list(_lines(text))
        self.i = 0
        self.source = source

    def error(self, msg: str, line: _Line | None = None, tok: int | None = None) -> ParseError:
        line = line or (self.lines[self.i - 1] if self.i else None)
        if line is None:
            return ParseError(msg, 0, 0, self.source)
        col = line.col
        if tok is not None and tok < len(line.tokens):
            col = _token_column(line, tok)
        return ParseError(msg, line.no, col, self.source)

    def next(self) -> _Line | None:
        if self.i >= len(self.lines):
            return None
        self.i += 1
        return self.lines[self.i - 1]

    def body(self, head: _Line) -> list[_Line]:
        out = []
        while True:
            ln = self.next()
            if ln is None:
                raise self.error("block opened here is missing 'end'", head)
            if ln.tokens == ["end"]:
                return out
            if ln.tokens[0] in KINDS:
                raise self.error(f"'{ln.tokens[0]}' inside a block; missing 'end'?", ln, 0)
            out.append(ln)


def _token_column(line: _Line, k: int) -> int:
    pos = 0
    raw = line.text
    for j, tok in enumerate(line.tokens):
        pos = raw.index(tok, pos)
        if j == k:
            return pos + 1
        pos += len(tok)
    return line.col


def _expect(r: _Reader, ln: _Line, n: int, shape: str):
    if len(ln.tokens) != n:
        raise r.error(f"expected '{shape}'", ln, min(len(ln.tokens) - 1, n - 1) if ln.tokens else None)


def _colon_name(r: _Reader, ln: _Line, k: int) -> str:
    t = ln.tokens[k]
    if not t.endswith(":") or len(t) < 2:
        raise r.error("expected '<name>:' here", ln, k)
    return t[:-1]


def _wrap(r: _Reader, ln: _Line, fn):
    try:
        return fn()
    except ParseError:
        raise
    except ActegoryError as e:
        # re-raise validation problems with the position of the block header
        e.args = (f"{r.source}:{ln.no}: {e}",)
        raise


def _parse(text: str, ws: Workspace, source: str) -> Iterator[tuple[str, object]]:
    r = _Reader(text, source)
    local: dict[str, object] = {}

    def lookup(name, ln, k):
        if name in local:
            return local[name]
        if name in ws:
            return ws[name]
        raise r.error(f"unknown name {name!r}", ln, k)

    while True:
        head = r.next()
        if head is None:
            return
        kind = head.tokens[0]
        if kind not in KINDS:
            raise r.error(f"expected one of {', '.join(KINDS)}; got {kind!r}", head, 0)
        if kind == "set":
            if len(head.tokens) < 2:
                raise r.error("expected 'set <name>: e1 e2 ...'", head)
            name = _colon_name(r, head, 1)
            value = FinSet(head.tokens[2:])
            if len(set(value.elements)) != len(value.elements):
                raise r.error(f"duplicate element in set {name}", head)
        elif kind == "category":
            _expect(r, head, 2, "category <name>")
            name = head.tokens[1]
            value = _wrap(r, head, lambda: _category(r, name, r.body(head)))
        elif kind == "functor":
            if len(head.tokens) != 6 or head.tokens[2] != ":" or head.tokens[4] != "->":
                raise r.error("expected 'functor <name> : <C> -> <D>'", head)
            name = head.tokens[1]
            C = lookup(head.tokens[3], head, 3)
            D = lookup(head.tokens[5], head, 5)
            value = _wrap(r, head, lambda: _functor(r, name, C, D, r.body(head)))
        else:
            if len(head.tokens) != 4 or head.tokens[2] != "on":
                raise r.error(f"expected '{kind} <name> on <C>'", head)
            name = head.tokens[1]
            C = lookup(head.tokens[3], head, 3)
            if not isinstance(C, FinCat):
                raise r.error(f"{head.tokens[3]} is not a category", head, 3)
            body = r.body(head)
            if kind == "profunctor":
                value = _wrap(r, head, lambda: _profunctor(r, name, C, body))
            else:
                value = _wrap(r, head, lambda: _action(r, kind, name, C, body))
        if name in local:
            raise NameClash(f"{source}:{head.no}: name {name!r} is already defined")
        local[name] = value
        yield name, value


def _category(r: _Reader, name: str, body: list[_Line]) -> FinCat:
    objects: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    comp: list[tuple[str, str, str]] = []
    for ln in body:
        t = ln.tokens
        if t[0] == "objects":
            objects += t[1:]
        elif t[0] == "arrow":
            if len(t) != 5 or t[3] != "->":
                raise r.error("expected 'arrow <f>: <src> -> <tgt>'", ln)
            f = _colon_name(r, ln, 1)
            if f.startswith("id_"):
                raise r.error(f"identity arrows are implicit; {f} may not be declared", ln, 1)
            arrows.append((f, t[2], t[4]))
        elif t[0] == "compose":
            if len(t) != 5 or t[3] != "=":
                raise r.error("expected 'compose <g> <f> = <h>'", ln)
            comp.append((t[1], t[2], t[4]))
        else:
            raise r.error(f"unknown category line {t[0]!r}", ln, 0)
    return validate_category({"name": name, "objects": objects, "arrows": arrows, "composition": comp})


def _functor(r: _Reader, name: str, C: FinCat, D: FinCat, body: list[_Line]) -> FunctorMap:
    om: dict[str, str] = {}
    am: dict[str, str] = {}
    for ln in body:
        t = ln.tokens
        if len(t) != 4 or t[2] != "->" or t[0] not in ("obj", "arr"):
            raise r.error("expected 'obj <x> -> <y>' or 'arr <f> -> <g>'", ln)
        target = om if t[0] == "obj" else am
        if t[1] in target:
            raise r.error(f"{t[1]} mapped twice", ln, 1)
        target[t[1]] = t[3]
    missing = [x for x in C.objects if x not in om]
    if missing:
        raise r.error(f"functor {name}: no image given for object {missing[0]}", body[-1] if body else None)
    bad = [k for k in om if k not in C.objects] + [k for k in am if k not in C.arrows]
    if bad:
        raise r.error(f"functor {name}: {bad[0]} is not in {C.name}")
    return FunctorMap(C, D, om, am, name=name, check=True)


def _action(r: _Reader, kind: str, name: str, C: FinCat, body: list[_Line]) -> SetFunctor:
    fibers: dict[str, list[str]] = {}
    maps: dict[str, dict[str, str]] = {}
    for ln in body:
        t = ln.tokens
        if t[0] == "at":
            x = _colon_name(r, ln, 1)
            if x not in C.objects:
                raise r.error(f"unknown object {x!r}", ln, 1)
            if x in fibers:
                raise r.error(f"fiber at {x} given twice", ln, 1)
            fibers[x] = t[2:]
        elif t[0] == "act":
            if len(t) != 5 or t[3] != "->":
                raise r.error("expected 'act <f>: <e> -> <e>'", ln)
            f = _colon_name(r, ln, 1)
            if f not in C.arrows:
                raise r.error(f"unknown arrow {f!r}", ln, 1)
            m = maps.setdefault(f, {})
            if t[2] in m:
                raise r.error(f"{f} acts twice on {t[2]}", ln, 2)
            m[t[2]] = t[4]
        else:
            raise r.error(f"unknown action line {t[0]!r}", ln, 0)
    cls = LeftAction if kind == "leftaction" else RightAction
    for x in C.objects:
        fibers.setdefault(x, [])
    for f in C.arrows:
        if C.is_identity(f) and f not in maps:
            continue
        maps.setdefault(f, {})
    return cls(C, fibers, maps, name=name, check=True, bounded=True)


def split_pair(tok: str) -> tuple[str, str]:
    """``(x,y)`` with ``x`` and ``y`` possibly nested labels."""
    if not (tok.startswith("(") and tok.endswith(")")):
        raise ValueError(tok)
    inner = tok[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        if ch in "([{<":
            depth += 1
        elif ch in ")]}>":
            depth -= 1
        elif ch == "," and depth == 0:
            return inner[:i], inner[i + 1 :]
    raise ValueError(tok)


def _profunctor(r: _Reader, name: str, C: FinCat, body: list[_Line]) -> EndoProfunctor:
    fibers: dict[tuple[str, str], list[str]] = {}
    lact: dict[tuple[str, str], dict[str, str]] = {}
    ract: dict[tuple[str, str], dict[str, str]] = {}
    for ln in body:
        t = ln.tokens
        if t[0] == "at":
            tok = _colon_name(r, ln, 1)
            try:
                x, y = split_pair(tok)
            except ValueError:
                raise r.error("expected 'at (<x>,<y>): ...'", ln, 1) from None
            if x not in C.objects or y not in C.objects:
                raise r.error(f"unknown object in {tok}", ln, 1)
            fibers[(x, y)] = t[2:]
        elif t[0] in ("lact", "ract"):
            if len(t) != 7 or t[2] != "@" or t[5] != "->" or not t[3].endswith(":"):
                raise r.error(f"expected '{t[0]} <a> @ <b>: <e> -> <e>'", ln)
            key = (t[1], t[3][:-1])
            table = lact if t[0] == "lact" else ract
            u, obj = key if t[0] == "lact" else (key[1], key[0])
            if u not in C.arrows:
                raise r.error(f"unknown arrow {u!r}", ln, 1 if t[0] == "lact" else 3)
            if obj not in C.objects:
                raise r.error(f"unknown object {obj!r}", ln, 3 if t[0] == "lact" else 1)
            table.setdefault(key, {})[t[4]] = t[6]
        else:
            raise r.error(f"unknown profunctor line {t[0]!r}", ln, 0)
    full = {}
    for x in C.objects:
        for y in C.objects:
            full[(x, y)] = fibers.get((x, y), [])
    la, ra = {}, {}
    for u in C.arrows:
        for y in C.objects:
            if (u, y) in lact:
                la[(u, y)] = lact[(u, y)]
            elif C.is_identity(u):
                la[(u, y)] = {e: e for e in full[(C.src(u), y)]}
            else:
                la[(u, y)] = {}
    for x in C.objects:
        for v in C.arrows:
            if (x, v) in ract:
                ra[(x, v)] = ract[(x, v)]
            elif C.is_identity(v):
                ra[(x, v)] = {e: e for e in full[(x, C.src(v))]}
            else:
                ra[(x, v)] = {}
    return EndoProfunctor.from_sides(C, full, la, ra, name=name)


# ---------------------------------------------------------------------------
# printing


def dumps_value(name: str, value, names: dict[int, str] | None = None) -> str:
    """Print one value; referenced categories are named through ``names`` (ids -> names)."""
    names = names or {}

    def cname(C):
        return names.get(id(C), C.name)

    if isinstance(value, FinSet):
        return f"set {name}: " + " ".join(value.elements) + "\n"
    if isinstance(value, FinCat):
        out = [f"category {name}"]
        if value.objects:
            out.append("  objects " + " ".join(value.objects))
        for f, (s, t) in value.arrows.items():
            if not value.is_identity(f):
                out.append(f"  arrow {f}: {s} -> {t}")
        for f, (s, t) in value.arrows.items():
            if value.is_identity(f):
                continue
            for g in value.out_arrows(t):
                if value.is_identity(g):
                    continue
                out.append(f"  compose {g} {f} = {value.compose(g, f)}")
        out.append("end")
        return "\n".join(out) + "\n"
    if isinstance(value, FunctorMap):
        C, D = value.domain, value.codomain
        out = [f"functor {name} : {cname(C)} -> {cname(D)}"]
        for x in C.objects:
            out.append(f"  obj {x} -> {value.object_map[x]}")
        for f in C.arrows:
            if not C.is_identity(f):
                out.append(f"  arr {f} -> {value.arrow_map[f]}")
        out.append("end")
        return "\n".join(out) + "\n"
    if isinstance(value, EndoProfunctor):
        X = value.X
        out = [f"profunctor {name} on {cname(X)}"]
        for x in X.objects:
            for y in X.objects:
                out.append(f"  at ({x},{y}): " + " ".join(value.at(x, y)).rstrip())
        for u, (a, b) in X.arrows.items():
            if X.is_identity(u):
                continue
            for y in X.objects:
                for e, e2 in value.lact(u, y).items():
                    out.append(f"  lact {u} @ {y}: {e} -> {e2}")
        for x in X.objects:
            for v in X.arrows:
                if X.is_identity(v):
                    continue
                for e, e2 in value.ract(x, v).items():
                    out.append(f"  ract {x} @ {v}: {e} -> {e2}")
        out.append("end")
        return "\n".join(_tidy(out)) + "\n"
    if isinstance(value, SetFunctor):
        X = value.base
        kind = "leftaction" if value.variance == "left" else "rightaction"
        out = [f"{kind} {name} on {cname(X)}"]
        for x in X.objects:
            out.append(f"  at {x}: " + " ".join(value(x)))
        for f in X.arrows:
            if X.is_identity(f):
                continue
            for e, e2 in value.maps[f].items():
                out.append(f"  act {f}: {e} -> {e2}")
        out.append("end")
        return "\n".join(_tidy(out)) + "\n"
    raise TypeError(f"cannot print {type(value).__name__}")


def _tidy(lines: list[str]) -> list[str]:
    return [ln.rstrip() for ln in lines]


def dependencies(value) -> list:
    if isinstance(value, FunctorMap):
        return [value.domain, value.codomain]
    if isinstance(value, EndoProfunctor):
        return [value.X]
    if isinstance(value, SetFunctor):
        return [value.base]
    return []


def dumps(values: dict[str, object], known: dict[str, FinCat] | None = None) -> str:
    """Print named values, emitting every category they refer to first.

    Categories in ``known`` are referred to by name and not printed.
    """
    names: dict[int, str] = {id(C): n for n, C in (known or {}).items()}
    taken: set[str] = set(known or ())
    chunks: list[str] = []

    def claim(base: str) -> str:
        n, k = base, 2
        while n in taken:
            n, k = f"{base}_{k}", k + 1
        taken.add(n)
        return n

    def emit_cat(C: FinCat, wanted: str | None = None):
        if id(C) in names:
            return names[id(C)]
        n = claim(wanted or C.name or "C")
        names[id(C)] = n
        chunks.append(dumps_value(n, C, names))
        return n

    for n, v in values.items():
        if isinstance(v, FinCat):
            emit_cat(v, n)
    for n, v in values.items():
        if isinstance(v, FinCat):
            continue
        for C in dependencies(v):
            emit_cat(C)
        chunks.append(dumps_value(claim(n), v, names))
    return "\n".join(chunks)


def loads(text: str, source: str = "<text>") -> Workspace:
    ws = Workspace()
    ws.loads(text, source)
    return ws


def load(path: str | Path) -> Workspace:
    ws = Workspace()
    ws.load(path)
    return ws


def same_value(a, b) -> bool:
    """Structural identity, as used by the round-trip property."""
    if type(a) is not type(b):
        if not (isinstance(a, SetFunctor) and isinstance(b, SetFunctor) and a.variance == b.variance):
            return False
    if isinstance(a, FinSet):
        return a.elements == b.elements
    if isinstance(a, FinCat):
        return a.objects == b.objects and a == b
    if isinstance(a, FunctorMap):
        return (
            same_value(a.domain, b.domain)
            and same_value(a.codomain, b.codomain)
            and a.object_map == b.object_map
            and a.arrow_map == b.arrow_map
        )
    if isinstance(a, SetFunctor):
        return (
            a.variance == b.variance
            and same_value(a.base, b.base)
            and all(a.fibers[x].elements == b.fibers[x].elements for x in a.base.objects)
            and a.maps == b.maps
        )
    return a == b
