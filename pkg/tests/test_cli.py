import json
import subprocess
import sys
from pathlib import Path

import pytest

from freeprod.cli import CliConfig, cli_run, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(args, capsys):
    code = main([str(a) for a in args])
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


def test_funny_of_arrows_succeeds(capsys):
    code, recs = run(["funny", DATA / "walking_arrow.catspec", DATA / "walking_arrow.catspec"], capsys)
    assert code == 0
    diag = [r for r in recs if r["kind"] == "hom" and r["src"] == ["0", "0"] and r["tgt"] == ["1", "1"]]
    assert diag and diag[0]["size"] == 2
    assert recs[-1]["kind"] == "verdict" and recs[-1]["exit"] == 0


def test_low_bound_exits_with_exhaustion(capsys):
    inv = DATA / "involution.catspec"
    code, recs = run(["funny", inv, inv, "--bound", "3"], capsys)
    assert code == 3 and recs[-1]["exhausted"]
    code, _ = run(["compare", "pushout", inv, inv, "--bound", "3"], capsys)
    assert code == 3


def test_missing_file_is_a_parse_error(capsys):
    code, recs = run(["funny", DATA / "missing.catspec"], capsys)
    assert code == 2
    assert recs[0]["kind"] == "error" and recs[0]["type"] == "parse"


def test_malformed_input_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.catspec"
    bad.write_text("obj a\ngen f: a -> nowhere\n")
    code, recs = run(["funny", bad], capsys)
    assert code == 2 and f"{bad}:2:" in recs[0]["message"]


def test_unknown_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["funny", "--bogus", str(DATA / "walking_arrow.catspec")])
    assert err.value.code == 2
    capsys.readouterr()


def test_nonpositive_bound_is_rejected(capsys):
    with pytest.raises(SystemExit) as err:
        main(["funny", str(DATA / "walking_arrow.catspec"), "--bound", "0"])
    assert err.value.code == 2
    capsys.readouterr()


def test_suite_passes(capsys):
    code, recs = run(["check", "suite", "--all", "--bound", "3"], capsys)
    assert code == 0
    assert all(r["ok"] for r in recs if r["kind"] == "check")
    assert len([r for r in recs if r["kind"] == "check"]) >= 10


def test_unknown_suite_entry(capsys):
    code, _ = run(["check", "suite", "no-such-entry"], capsys)
    assert code == 2


def test_module_tensor_size(capsys):
    code, recs = run(["alg", "tensor", "--monad", f"rmod:{DATA / 'f2.ring'}", DATA / "m.mod", DATA / "m.mod"], capsys)
    assert code == 0
    assert [r["size"] for r in recs if r["kind"] == "tensor"] == [2]
    code, recs = run(["alg", "hom", "--monad", f"rmod:{DATA / 'f2.ring'}", DATA / "n.mod", DATA / "n.mod"], capsys)
    assert code == 0 and [r["size"] for r in recs if r["kind"] == "hom"] == [16]


def test_vgraph_commands(capsys):
    a, l = DATA / "arrow.vgraph", DATA / "loop.vgraph"
    for action in ("tensor", "hom", "alpha"):
        code, recs = run(["vgraph", action, a, l], capsys)
        assert code == 0, action
    code, recs = run(["multicat", "closed", a, l], capsys)
    assert code == 0 and len([r for r in recs if r.get("name") == "closedness-bijection"]) == 8


def test_ecat_and_sesqui_commands(capsys):
    assert run(["ecat", "validate", DATA / "two_monoids_ecat.json"], capsys)[0] == 0
    code, recs = run(["ecat", "coeq", DATA / "coeq.json"], capsys)
    assert code == 0
    assert run(["sesqui", "validate", DATA / "walking_2cell.json", "--interchange"], capsys)[0] == 0


def test_options_between_inputs(capsys):
    a = DATA / "walking_arrow.catspec"
    code, recs = run(["funny", a, "--bound", "5", a], capsys)
    assert code == 0 and recs[-1]["bound"] == 5


def test_output_is_deterministic(tmp_path):
    args = ["funny", str(DATA / "involution.catspec"), str(DATA / "walking_arrow.catspec"), "--bound", "4"]
    outs = []
    for i in range(2):
        target = tmp_path / f"out{i}.jsonl"
        subprocess.run([sys.executable, "-m", "freeprod.cli", *args, "--out", str(target)], check=False)
        outs.append(target.read_bytes())
    assert outs[0] == outs[1] and outs[0]


def test_text_format():
    code, text = cli_run(CliConfig("check", "suite", ["well-pointed"], bound=2, format="text"))
    assert code == 0
    assert text.splitlines()[-1].startswith("verdict ")


def test_config_rejects_zero_bound():
    with pytest.raises(ValueError):
        CliConfig("funny", bound=0)
