import json
import os
import subprocess
import sys

import pytest

from actegory import textio
from actegory.cli import evaluate, main, parse_expr
from actegory.errors import ArityError, BaseMismatch, UnknownName


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_expr():
    assert parse_expr("(comp A (tensor B C))") == ["comp", "A", ["tensor", "B", "C"]]
    assert parse_expr("  M ") == "M"
    for bad in ("(comp A", "comp A)", ""):
        with pytest.raises(ArityError):
            parse_expr(bad)


def test_end_of_hom_arrow_counts_nats(ws):
    from actegory.nat import count_nats

    M = ws["M"]
    assert len(evaluate("(end (harrow M M))", ws)) == count_nats(M, M) == 8


def test_diamond_of_identity_prints_hom(capsys, ws):
    from actegory.nat import find_natural_iso

    code, out, _ = run(capsys, "eval", "--fixtures", "(diamond idArr)")
    assert code == 0
    back = textio.Workspace()
    back.add("Arr", ws["Arr"])
    back.loads(out)
    assert find_natural_iso(back["result"], ws["HomArr"]) is not None


def test_complement_over_the_point(ws):
    # |A| = 2, |M| = 3 over the terminal category
    assert len(evaluate("(comp Pt Q)", ws)("*")) == 9


def test_printed_result_loads_back(capsys, ws):
    code, out, _ = run(capsys, "eval", "--fixtures", "(oodot A M)")
    assert code == 0
    back = textio.Workspace()
    back.add("Arr", ws["Arr"])
    back.loads(out)
    assert textio.same_value(back["result"], evaluate("(oodot A M)", ws))


def test_predicates_print_reports(capsys):
    code, out, _ = run(capsys, "eval", "--fixtures", "(final pick_b)")
    assert code == 0 and out.startswith("final: true")
    code, out, _ = run(capsys, "eval", "--fixtures", "--json", "--assert", "(ff collapse)")
    assert code == 1 and json.loads(out)["holds"] is False


def test_eval_errors(ws, capsys):
    with pytest.raises(UnknownName):
        evaluate("(comp A Nope)", ws)
    with pytest.raises(UnknownName):
        evaluate("(frobnicate A)", ws)
    with pytest.raises(ArityError):
        evaluate("(comp A)", ws)
    with pytest.raises(BaseMismatch):
        evaluate("(comp A Flip)", ws)
    code, _, err = run(capsys, "eval", "--fixtures", "(comp A)")
    assert code == 2 and "takes 2 arguments" in err


def test_load_lists_and_reprints(capsys, tmp_path):
    f = tmp_path / "k.act"
    f.write_text("category K\n  objects a b\n  arrow u: a -> b\nend\nset V: x y\n")
    code, out, _ = run(capsys, "load", str(f))
    assert code == 0 and out.splitlines() == ["K: category", "V: set"]
    code, out, _ = run(capsys, "load", "--print", str(f))
    assert textio.loads(out)["K"] == textio.load(f)["K"]


def test_load_reports_bad_files(capsys, tmp_path):
    f = tmp_path / "bad.act"
    f.write_text("category K\n  objects a\n  arrow f: a ->\nend\n")
    code, _, err = run(capsys, "load", str(f))
    assert code == 2 and "bad.act:3:" in err


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "dy", "--count", "10")
    assert code == 0 and out.startswith("PASS dy")
    code, _, err = run(capsys, "check", "nosuchlaw")
    assert code == 2 and "nosuchlaw" in err
    code, _, _ = run(capsys, "check", "dy", "--count", "0")
    assert code == 2


def test_check_json_report(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "comp2", "exy", "--json", "--no-timings", "--count", "5", "--seed", "7")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "actegory.report" and rep["ok"] is True
    assert rep["config"]["seed"] == 7 and rep["config"]["count"] == 5
    assert all(set(l) >= {"law", "passed", "failed", "skipped", "paths", "counterexamples"} for l in rep["laws"])
    dest = tmp_path / "r.json"
    run(capsys, "check", "comp2", "exy", "--json", "--no-timings", "--count", "5", "--seed", "7", "-o", str(dest))
    assert json.loads(dest.read_text()) == rep


def test_check_fails_under_a_mutant(capsys):
    from actegory.lawsuite.mutation import mutated

    with mutated("comprehend"):
        code, out, _ = run(capsys, "check", "dy", "--count", "20")
    assert code == 1 and "FAIL dy" in out and "counterexample" in out


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "actegory.cli", "check", "nosuchlaw"], capture_output=True, text=True)
    assert out.returncode == 2


def test_size_limit_env_is_honoured(tmp_path):
    f = tmp_path / "big.act"
    f.write_text("category K\n  objects a b c d e\nend\n")
    env = dict(os.environ, ACTEGORY_SIZE_LIMIT="3,10,2")
    out = subprocess.run([sys.executable, "-m", "actegory.cli", "load", str(f)], capture_output=True, text=True, env=env)
    assert out.returncode == 2 and "5" in out.stderr
