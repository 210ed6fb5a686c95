"""The thirteen acceptance criteria, each one printed as a PASS/FAIL line.

Every law runs on at least 100 fuzzed instances at the default seed.
"""

import os

import pytest

from actegory import funpred as fp
from actegory import textio
from actegory import twovalued as tv
from actegory.cli import fixture_paths
from actegory.fincat import functors, identity_functor
from actegory.lawsuite import FuzzConfig, run_all, select
from actegory.lawsuite.mutation import MUTANTS, hunt

COUNT = 100

CRITERIA = {
    1: ("complement trinity", ["comp2", "comp11", "comp11.r"]),
    2: ("Yoneda and co-Yoneda", ["exy"]),
    3: ("nine laws", ["comp25", "comp26", "comp27", "ip1", "ip2", "ip3", "ip4", "ip5"]),
    4: ("mixed Frobenius", ["frob"]),
    5: ("comprehension adjunction", ["p1", "p1.count", "p1.hom"]),
    6: ("diagonal Yoneda and diamond values", ["dy", "dy.coend", "r1"]),
    7: ("ends and coends", ["end", "coend"]),
    8: ("strong dinaturality", ["sd"]),
    9: (
        "predicate suites",
        ["ff", "ad", "dense", "final", "initial", "adj", "ad.comp", "ad.final", "adj.final"],
    ),
    10: ("Kan extensions", ["kan", "kan2", "kan3"]),
    11: ("groupoid and biaction collapse", ["group", "comp20"]),
}


def _unique(laws):
    seen, out = set(), []
    for l in laws:
        if l.id not in seen:
            seen.add(l.id)
            out.append(l)
    return out


@pytest.fixture(scope="module")
def report():
    laws = _unique([l for _, ids in CRITERIA.values() for l in select(ids)])
    jobs = min(8, os.cpu_count() or 1)
    return run_all(FuzzConfig(count=COUNT), laws, jobs=jobs)


def _say(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\nCRITERION {str(n):>3} {'PASS' if ok else 'FAIL'}  {detail}")


def _criterion(report, n):
    name, ids = CRITERIA[n]
    wanted = {l.id for l in select(ids)}
    rows = [r for r in report.results if r.law in wanted]
    failed = [r.law for r in rows if not r.ok]
    short = [r.law for r in rows if r.passed + r.failed < COUNT]
    skipped = sum(r.skipped for r in rows)
    instances = sum(r.passed + r.failed + r.skipped for r in rows)
    vacuous = sum(r.vacuous for r in rows)
    detail = f"{name}: {len(rows)} laws, {instances} instances"
    if vacuous:
        detail += f" ({vacuous} vacuous: no extension exists or no qualifying input)"
    if skipped:
        detail += f", {skipped} size-skips"
    if failed:
        detail += f", failing {' '.join(failed)}"
    if short:
        detail += f", under {COUNT} checked instances: {' '.join(short)}"
    return rows, not failed and not short and len(rows) == len(wanted), detail


def _paths(rows, law):
    return next(r.paths for r in rows if r.law == law)


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_fuzzed_criterion(report, capsys, n):
    rows, ok, detail = _criterion(report, n)
    # canonical maps must be the path that succeeded where the law provides them
    canonical = {1: ["comp11"], 2: ["exy.1", "exy.2"], 5: ["p1"], 6: ["dy", "dy.coend"]}
    for law in canonical.get(n, []):
        if _paths(rows, law).get("canonical", 0) < COUNT:
            ok = False
            detail += f", {law} not settled by its canonical map"
    _say(capsys, n, ok, detail)
    assert ok, detail


def test_predicate_suites_are_wide_enough(capsys):
    # the defining check plus its characterizations
    from actegory.library import commutative_square

    f = identity_functor(commutative_square())
    sizes = {
        "fully faithful": (fp.is_fully_faithful(f), 6),
        "absolutely dense": (fp.is_absolutely_dense(f), 6),
        "left dense": (fp.is_left_dense(f), 4),
        "right dense": (fp.is_right_dense(f), 4),
        "final": (fp.is_final(f), 5),
        "initial": (fp.is_initial(f), 5),
    }
    short = [k for k, (r, need) in sizes.items() if len(r.checks) + 1 < need]
    _say(capsys, "9b", not short, "characterization counts " + " ".join(f"{k}={len(r.checks) + 1}" for k, (r, _) in sizes.items()))
    assert not short


def test_two_valued_models(capsys):
    spaces = [X for n in range(4) for X in tv.all_topologies(n)]
    posets = [P for n in range(5) for P in tv.all_posets(n)]
    bad = []
    for X in spaces + posets:
        rep = tv.law_suite_2(X)
        bad += [(repr(X), law) for law, (p, t) in rep.items() if p != t]
    galois = sum(len(tv.galois_table(P)) for P in posets)
    cross = all(tv.cross_model_check(P) for n in range(4) for P in tv.all_posets(n, up_to_iso=True))
    ok = not bad and cross
    _say(capsys, 12, ok, f"two-valued models: {len(spaces)} topologies, {len(posets)} posets, {galois} Galois rows"
         + (f", failures {bad[:3]}" if bad else "") + ("" if cross else ", cross-model check failed"))
    assert ok


def test_engine_integrity(capsys):
    caught = {name: sum(hunt(name).values()) for name in sorted(MUTANTS)}
    ws = textio.Workspace()
    for p in fixture_paths():
        ws.load(p)
    text = textio.dumps(dict(ws.values))
    back = textio.loads(text)
    same = list(back) == list(ws) and all(textio.same_value(ws[n], back[n]) for n in ws)
    ok = all(caught.values()) and same
    _say(capsys, 13, ok, "mutants caught " + " ".join(f"{k}={v}" for k, v in caught.items())
         + f"; {len(ws.values)} fixture values round-trip {'identically' if same else 'with differences'}")
    assert ok
