import io
import json

import pytest

from waba import examples_path
from waba.cli import main


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def ex(name):
    return examples_path(name)


def test_solve_example1_argument_mode():
    code, out = run("solve", ex("ex1_aba.waba"), "--semantics", "stable", "--mode", "argument")
    assert code == 0
    assert out.count("Answer:") == 1 and "arg({b}|-ca)" in out


def test_solve_cycle_exit_codes():
    code, out = run("solve", ex("ex2_waaf.waba"), "--semantics", "stable", "--semiring", "additive", "--budget", "0")
    assert (code, out) == (1, "UNSATISFIABLE\n")
    code, out = run("solve", ex("ex2_waaf.waba"), "--semantics", "stable", "--semiring", "additive", "--budget", "3")
    assert code == 0 and "in(a) in(b) extension_cost(2)" in out


def test_solve_json_and_oracle_agree():
    args = ("solve", ex("patient_waba.waba"), "--semantics", "stable", "--budget", "inf", "--format", "json")
    _, fast = run(*args)
    _, slow = run(*args, "--oracle")
    strip = lambda d: [(e["assumptions"], e["cost"]) for e in json.loads(d)["extensions"]]
    assert strip(fast) == strip(slow)
    assert json.loads(slow)["extensions"][0]["discarded"] is None


def test_dump_graph_to_file(tmp_path):
    target = tmp_path / "g.json"
    code, _ = run("solve", ex("ex3_waba.waba"), "--dump-graph", target)
    assert code == 0
    assert len(json.loads(target.read_text())["nodes"]) == 6


def test_dump_graph_to_stdout():
    code, out = run("solve", ex("ex3_waba.waba"), "--dump-graph", "--format", "json")
    first, _, rest = out.partition("\n}\n")
    assert json.loads(first + "\n}")["edges"]
    assert json.loads(rest)["count"] == 2


def test_export_and_validate():
    code, out = run("export-asp", ex("patient_waba.waba"), "--semantics", "stable", "--budget", "0")
    assert code == 0 and "weight(risk,7; refuses_meds,9)." in out
    assert run("validate", ex("patient_waba.waba")) == (0, "ok: wABA framework\n")
    assert run("validate", ex("ex2_waaf.waba")) == (0, "ok: abstract framework\n")


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.waba"
    bad.write_text("asm a\nctr a ca\nctr a cb\n")
    assert run("solve", bad)[0] == 2
    assert "line 3" in capsys.readouterr().err
    nonflat = tmp_path / "nonflat.waba"
    nonflat.write_text("asm a b\nctr a ca\nctr b cb\nrule a <- b\n")
    assert run("validate", nonflat)[0] == 2
    assert "not-flat" in capsys.readouterr().err
    assert run("solve", tmp_path / "missing.waba")[0] == 2
    assert run("solve", ex("ex1_aba.waba"), "--budget", "lots")[0] == 2
    assert run("export-asp", ex("ex1_aba.waba"), "--semantics", "preferred")[0] == 2
    assert run("solve", ex("ex2_waaf.waba"), "--mode", "assumption")[0] == 2
    assert run("solve", ex("ex1_aba.waba"), "--max-arguments", "2", "--mode", "argument")[0] == 2


def test_bad_semantics_name():
    with pytest.raises(SystemExit) as info:
        run("solve", ex("ex1_aba.waba"), "--semantics", "ideal")
    assert info.value.code == 2


def test_scale_flag(tmp_path):
    f = tmp_path / "dec.waba"
    f.write_text("asm a\nctr a c\nrule c <- d\nrule d <-\nw d 0.5\n")
    code, out = run("solve", f, "--semantics", "cf", "--budget", "5", "--scale", "10")
    assert code == 0 and "extension_cost(5)" in out


def test_python_module_entry():
    import subprocess
    import sys

    done = subprocess.run([sys.executable, "-m", "waba", "validate", str(ex("ex1_aba.waba"))], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "ok: wABA framework\n"
