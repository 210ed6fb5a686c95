"""Checking laws on instances and aggregating reports."""

from __future__ import annotations

import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .. import textio
from ..catover import OverCat
from ..errors import SizeLimitExceeded
from .fuzz import SLOTS, FuzzConfig, Instance, make_instance
from .registry import REGISTRY, LawSpec, by_id, compare

SCHEMA_VERSION = 1


@dataclass
class Verdict:
    law: str
    status: str  # "witness" | "counterexample" | "skip"
    path: str = ""  # canonical, search, count, exact, vacuous
    detail: str = ""
    index: int = 0
    instance: str | None = None  # serialized inputs, kept for counterexamples

    @property
    def ok(self) -> bool:
        return self.status != "counterexample"


def serialize(inst: Instance) -> str:
    """Inputs of one instance in the text format, categories first."""
    vals = {}
    for k in ("X", "Y", "Z"):
        if k in inst.values:
            vals[k] = inst.values[k]
    for k, v in inst.values.items():
        if k in vals:
            continue
        vals[k] = v.projection if isinstance(v, OverCat) else v
    header = "# slots: " + " ".join(k for k in inst.values if k not in ("X", "Y", "Z")) + "\n"
    return header + textio.dumps(vals)


def deserialize(text: str) -> Instance:
    ws = textio.loads(text, source="<instance>")
    first = text.splitlines()[0]
    slots = first.split(":", 1)[1].split() if first.startswith("# slots:") else []
    vals = {}
    for k in ("X", "Y", "Z"):
        if k in ws:
            vals[k] = ws[k]
    for s in slots:
        v = ws[s]
        if SLOTS.get(s, ("",))[0] == "over":
            v = OverCat(v, name=s)
        vals[s] = v
    return Instance(vals)


def _evaluate(law: LawSpec, inst: Instance):
    if law.check is not None:
        return law.check(inst)
    return compare(law.left(inst), law.right(inst))


def check_law(law: LawSpec, inst: Instance, *, keep_instance: bool = True) -> Verdict:
    try:
        ok, path, detail = _evaluate(law, inst)
    except SizeLimitExceeded as e:
        return Verdict(law.id, "skip", "size", str(e), inst.index)
    except Exception as e:  # any crash is a counterexample, with its location
        tb = traceback.extract_tb(e.__traceback__)[-1]
        detail = f"{type(e).__name__}: {e} ({tb.name}:{tb.lineno})"
        ok, path = False, "error"
    if ok:
        return Verdict(law.id, "witness", path, detail, inst.index)
    text = serialize(inst) if keep_instance else None
    return Verdict(law.id, "counterexample", path, detail, inst.index, text)


def recheck(verdict: Verdict) -> Verdict:
    """Re-run a counterexample from its serialized instance alone."""
    inst = deserialize(verdict.instance)
    inst.index = verdict.index
    return check_law(by_id()[verdict.law], inst)


@dataclass
class LawResult:
    law: str
    group: str
    anchor: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    vacuous: int = 0
    paths: dict = field(default_factory=dict)
    seconds: float = 0.0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class Report:
    config: dict
    results: list[LawResult]
    seconds: float = 0.0
    notes: list = field(default_factory=lambda: [
        "naturality of the isomorphisms across instances is not checked; each instance is checked in isolation",
        "laws over all V range over finite sets of size at most max_fiber",
    ])

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def as_dict(self, *, timings: bool = True) -> dict:
        out = {
            "schema": "actegory.report",
            "version": SCHEMA_VERSION,
            "config": self.config,
            "ok": self.ok,
            "notes": list(self.notes),
            "laws": [],
        }
        for r in self.results:
            d = asdict(r)
            d["ok"] = r.ok
            d["counterexamples"] = [asdict(v) for v in r.counterexamples]
            if not timings:
                d.pop("seconds")
            out["laws"].append(d)
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            state = "PASS" if r.ok else "FAIL"
            extra = f" skip={r.skipped}" if r.skipped else ""
            out.append(f"{state} {r.law:<14} {r.passed:>4} ok{extra}  {r.seconds:6.2f}s  {r.anchor}")
            for v in r.counterexamples[:1]:
                out.append(f"     counterexample #{v.index}: {v.detail}")
        return out


def run_law(law: LawSpec, cfg: FuzzConfig, *, max_examples: int = 3) -> LawResult:
    res = LawResult(law.id, law.group, law.anchor)
    t0 = time.perf_counter()
    for k in range(cfg.count):
        inst = make_instance(cfg, law.slots, k, stream=law.id, category=law.category)
        v = check_law(law, inst, keep_instance=len(res.counterexamples) < max_examples)
        res.paths[v.path] = res.paths.get(v.path, 0) + 1
        if v.status == "witness":
            res.passed += 1
            if v.path == "vacuous":
                res.vacuous += 1
        elif v.status == "skip":
            res.skipped += 1
        else:
            res.failed += 1
            if v.instance is not None:
                res.counterexamples.append(v)
    res.paths = dict(sorted(res.paths.items()))
    res.seconds = time.perf_counter() - t0
    return res


def _job(args):
    law_id, cfg = args
    return run_law(by_id()[law_id], cfg)


def run_all(cfg: FuzzConfig | None = None, laws: list[LawSpec] | None = None, *, jobs: int = 1) -> Report:
    cfg = cfg or FuzzConfig()
    laws = list(REGISTRY) if laws is None else laws
    t0 = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_job, [(l.id, cfg) for l in laws]))
    else:
        results = [run_law(l, cfg) for l in laws]
    order = {l.id: k for k, l in enumerate(REGISTRY)}
    results.sort(key=lambda r: order.get(r.law, len(order)))
    return Report(asdict(cfg), results, time.perf_counter() - t0)
