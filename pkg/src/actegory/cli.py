"""Command line: ``actegory load | eval | check``.

Exit codes: 0 success, 1 a law failed (or a predicate came out false
under ``eval --assert``), 2 bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib import resources
from pathlib import Path

from . import action as ac
from . import catover as co
from . import funpred as fp
from . import profunctor as pro
from . import textio
from .catover import OverCat
from .errors import ActegoryError, ArityError, BaseMismatch, TypeMismatch, UnknownName
from .fincat import FinCat, FinSet, FunctorMap, identity_functor
from .nat import SetFunctor
from .profunctor import EndoProfunctor

# ---------------------------------------------------------------------------
# expressions


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def parse_expr(text: str):
    """Prefix S-expressions: ``(op arg ...)``; atoms are names."""
    toks, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        toks.append(m.group(1))
        pos = m.end()
    if not toks:
        raise ArityError("empty expression")

    def read(k):
        t = toks[k]
        if t == ")":
            raise ArityError("unexpected ')'")
        if t != "(":
            return t, k + 1
        out, k = [], k + 1
        while True:
            if k >= len(toks):
                raise ArityError("missing ')'")
            if toks[k] == ")":
                return out, k + 1
            item, k = read(k)
            out.append(item)

    tree, k = read(0)
    if k != len(toks):
        raise ArityError(f"trailing input after expression: {' '.join(toks[k:])}")
    return tree


def _kind(v) -> str:
    if isinstance(v, FinCat):
        return "category"
    if isinstance(v, OverCat):
        return "over"
    if isinstance(v, FunctorMap):
        return "functor"
    if isinstance(v, EndoProfunctor):
        return "profunctor"
    if isinstance(v, SetFunctor):
        return v.variance
    if isinstance(v, FinSet):
        return "set"
    return type(v).__name__


def _want(op, v, *kinds):
    k = _kind(v)
    if k not in kinds:
        raise TypeMismatch(f"{op}: expected {' or '.join(kinds)}, got {k}")
    return v


def _over(op, v) -> OverCat:
    if isinstance(v, FunctorMap):
        return co.as_over(v)
    if isinstance(v, FinCat):
        return co.identity_over(v)
    return _want(op, v, "over")


def _same_base(op, *vals):
    bases = [v.base for v in vals]
    if any(b is not bases[0] for b in bases):
        raise BaseMismatch(f"{op}: arguments live over different categories")


def _comp(a, b):
    _same_base("comp", a, b)
    if _kind(a) == "left":
        return ac.complement(a, _want("comp", b, "right"))
    return ac.complement_r(_want("comp", a, "right"), _want("comp", b, "left"))


def _oodot(a, b):
    _same_base("oodot", a, b)
    if _kind(a) == "left":
        return ac.oodot(a, _want("oodot", b, "right"))
    return ac.oodot_r(_want("oodot", a, "right"), _want("oodot", b, "left"))


def _tri(a, b):
    _same_base("tri", a, b)
    if _kind(a) == "right":
        return ac.triangleright(a, _want("tri", b, "right"))
    return ac.triangleright_r(_want("tri", a, "left"), _want("tri", b, "left"))


def _star(a, b):
    _same_base("star", a, b)
    if _kind(a) == "right":
        a, b = b, a
    return ac.mixed_tensor(_want("star", a, "left"), _want("star", b, "right"))


def _harrow(a, b):
    _want("harrow", a, "left", "right")
    _same_base("harrow", a, b)
    if a.variance != b.variance:
        raise TypeMismatch("harrow: both arguments must have the same variance")
    return pro.hom_arrow(a, b) if a.variance == "right" else pro.hom_arrow_left(a, b)


def _outer(a, b):
    _same_base("outer", a, b)
    if _kind(a) == "right":
        a, b = b, a
    return pro.outer_product(_want("outer", a, "left"), _want("outer", b, "right"))


def _along(op, fn):
    def run(f, F):
        _want(op, f, "functor")
        _want(op, F, "left", "right")
        return fn(f, F)

    return run


def _weighted(op, fn, variance):
    def run(W, f):
        _want(op, W, variance)
        _want(op, f, "functor")
        return fn(W, f)

    return run


def _fn(kind, fn):
    return lambda f: fn(_want(kind[0], f, *kind[1:]))


def _dense(f):
    left, right = fp.is_left_dense(f), fp.is_right_dense(f)
    return fp.Report("dense", left.holds and right.holds, {"left": left.holds, "right": right.holds}, (left, right))


def _adjunctible(f):
    left, right = fp.is_left_adjunctible(f), fp.is_right_adjunctible(f)
    return fp.Report("adjunctible", left.holds or right.holds, {"left": left.holds, "right": right.holds}, (left, right))


def _binary(op, fn, *kinds):
    def run(a, b):
        _want(op, a, *kinds)
        _want(op, b, *kinds)
        _same_base(op, a, b)
        return fn(a, b)

    return run


OPERATORS = {
    "comp": (2, _comp),
    "oodot": (2, _oodot),
    "tri": (2, _tri),
    "tensor": (2, _binary("tensor", ac.tensor, "left", "right")),
    "ihom": (2, _binary("ihom", ac.internal_hom, "left", "right")),
    "star": (2, _star),
    "sub": (2, _along("sub", ac.substitute)),
    "exists": (2, _along("exists", ac.exists)),
    "forall": (2, _along("forall", ac.forall)),
    "diamondL": (1, lambda p: co.diamond_left(_over("diamondL", p))),
    "squareL": (1, lambda p: co.square_left(_over("squareL", p))),
    "iL": (1, _fn(("iL", "left"), co.elements_left)),
    "iR": (1, _fn(("iR", "right"), co.elements_right)),
    "outer": (2, _outer),
    "harrow": (2, _harrow),
    "comprehend": (1, _fn(("comprehend", "profunctor"), pro.comprehend)),
    "diamond": (1, lambda p: pro.diamond(_over("diamond", p))),
    "end": (1, _fn(("end", "profunctor"), pro.end)),
    "coend": (1, _fn(("coend", "profunctor"), pro.coend)),
    "scoend": (1, _fn(("scoend", "profunctor"), pro.strong_coend)),
    "lim": (2, _weighted("lim", fp.weighted_limit, "right")),
    "colim": (2, _weighted("colim", fp.weighted_colimit, "left")),
    "kanL": (2, lambda f, g: fp.kan_left(_want("kanL", f, "functor"), _want("kanL", g, "functor"))),
    "kanR": (2, lambda f, g: fp.kan_right(_want("kanR", f, "functor"), _want("kanR", g, "functor"))),
    "ff": (1, _fn(("ff", "functor"), fp.is_fully_faithful)),
    "absdense": (1, _fn(("absdense", "functor"), fp.is_absolutely_dense)),
    "dense": (1, _fn(("dense", "functor"), _dense)),
    "final": (1, _fn(("final", "functor"), fp.is_final)),
    "adjunctible": (1, _fn(("adjunctible", "functor"), _adjunctible)),
    # conveniences
    "id": (1, lambda X: identity_functor(_want("id", X, "category"))),
    "hom": (1, lambda X: pro.hom_profunctor(_want("hom", X, "category"))),
}


def _atom(ws: textio.Workspace, name: str):
    if name in ws:
        return ws[name]
    # idX names the identity functor of a loaded category X
    if name.startswith("id") and name[2:] in ws and isinstance(ws[name[2:]], FinCat):
        return identity_functor(ws[name[2:]])
    raise UnknownName(f"unknown name {name!r}")


def evaluate(expr, ws: textio.Workspace):
    tree = parse_expr(expr) if isinstance(expr, str) else expr
    if isinstance(tree, str):
        return _atom(ws, tree)
    if not tree or not isinstance(tree[0], str):
        raise ArityError("an expression must start with an operator name")
    op, args = tree[0], tree[1:]
    if op not in OPERATORS:
        raise UnknownName(f"unknown operator {op!r}")
    n, fn = OPERATORS[op]
    if len(args) != n:
        raise ArityError(f"{op} takes {n} argument{'s' if n > 1 else ''}, got {len(args)}")
    return fn(*[evaluate(a, ws) for a in args])


def render(value, ws: textio.Workspace, name: str = "result") -> str:
    """A result in the file format; predicates and partial values as plain text."""
    if isinstance(value, bool):
        return "true\n" if value else "false\n"
    if isinstance(value, fp.Report):
        out = [f"{value.name}: {'true' if value.holds else 'false'}"]
        for k, v in value.checks.items():
            out.append(f"  {k}: {'n/a' if v is None else ('true' if v else 'false')}")
        if not value.agree:
            out.append("  disagreement: " + " ".join(value.disagreements))
        return "\n".join(out) + "\n"
    if isinstance(value, fp.PartialObject):
        return f"object {value.value}\n" if value.exists else f"none: {value.reason}\n"
    if isinstance(value, fp.PartialFunctor):
        if not value.exists:
            return f"none: {value.reason}\n"
        value = value.functor
    known = {n: v for n, v in ws.values.items() if isinstance(v, FinCat)}
    if isinstance(value, OverCat):
        return textio.dumps({f"{name}_total": value.total, name: value.projection}, known)
    return textio.dumps({name: value}, known)


# ---------------------------------------------------------------------------
# commands


def fixture_paths() -> list[Path]:
    root = resources.files("actegory") / "fixtures"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".act"))


def _workspace(files, fixtures: bool) -> textio.Workspace:
    ws = textio.Workspace()
    for p in (fixture_paths() if fixtures else []) + [Path(f) for f in files]:
        ws.load(p)
    return ws


def cmd_load(args) -> int:
    ws = _workspace(args.files, False)
    if args.print:
        sys.stdout.write(textio.dumps(dict(ws.values)))
        return 0
    for n, v in ws.values.items():
        print(f"{n}: {_kind(v)}")
    return 0


def cmd_eval(args) -> int:
    ws = _workspace(args.load or [], args.fixtures)
    value = evaluate(args.expr, ws)
    if args.json and isinstance(value, fp.Report):
        print(json.dumps(value.as_dict(), indent=2))
    else:
        sys.stdout.write(render(value, ws, args.name))
    if args.assert_ and isinstance(value, (bool, fp.Report, fp.PartialObject, fp.PartialFunctor)):
        return 0 if value else 1
    return 0


def cmd_check(args) -> int:
    from .lawsuite import FuzzConfig, run_all, select

    try:
        laws = select(args.laws or ["all"])
    except KeyError as e:
        print(f"actegory: unknown law id {e.args[0]!r}", file=sys.stderr)
        return 2
    try:
        cfg = FuzzConfig.sized(args.size, seed=args.seed, count=args.count)
    except ValueError as e:
        print(f"actegory: {e}", file=sys.stderr)
        return 2
    report = run_all(cfg, laws, jobs=args.jobs)
    if args.json:
        text = json.dumps(report.as_dict(timings=not args.no_timings), indent=2)
        if args.output:
            Path(args.output).write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
    if not args.json or args.output:
        for line in report.lines():
            print(line)
        failed = sum(1 for r in report.results if not r.ok)
        print(f"{len(report.results) - failed}/{len(report.results)} laws passed in {report.seconds:.1f}s")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="actegory", description="Finite actions, profunctors and their laws.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("load", help="validate files and list what they define")
    p.add_argument("files", nargs="+")
    p.add_argument("--print", action="store_true", help="print the loaded values back in the file format")
    p.set_defaults(run=cmd_load)

    p = sub.add_parser("eval", help="evaluate a prefix expression over loaded names")
    p.add_argument("expr")
    p.add_argument("-l", "--load", action="append", metavar="FILE", help="file to load (repeatable)")
    p.add_argument("--fixtures", action="store_true", help="preload the bundled fixtures")
    p.add_argument("--name", default="result", help="name given to the printed result")
    p.add_argument("--json", action="store_true", help="predicate reports as JSON")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 when a predicate is false")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", help="run laws over fuzzed instances")
    p.add_argument("laws", nargs="*", help='law ids, id prefixes, or "all" (default)')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", choices=("s", "m", "l"), default="s")
    p.add_argument("--count", type=int, default=100, help="instances per law")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="emit the machine-readable report")
    p.add_argument("--no-timings", action="store_true", help="leave timings out of the JSON report")
    p.add_argument("-o", "--output", help="write the JSON report here instead of stdout")
    p.set_defaults(run=cmd_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.run(args)
    except (ActegoryError, OSError) as e:
        print(f"actegory: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
