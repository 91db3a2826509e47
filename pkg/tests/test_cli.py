"""Exit-code contract, JSON report shape, sweep determinism, witness replay."""

import json
import subprocess
import sys

import pytest

from bihoradam.cli import CATALOG, load_config, main, run_sweep
from bihoradam.cli import ConfigError

QUICK_CONFIG = """\
checkers = ["cor1", "cor2", "eq5", "thm2", "zhang47"]

[grid]
a = [1, 2]
b = [1, 2]
c = [1, 1]
inits = ["u", "1,1"]

[indices.thm2]
m = [2, 3]
n = [0, 2]
r = [0, 2]

[indices.zhang47]
m = [2, 3]
n = [0, 2]
r = [0, 2]

[indices.cor1]
m = [2, 3]
n = [1, 2]
r = [1, 2]

[indices.cor2]
m = [1, 3]
n = [1, 2]
r = [1, 2]
"""


def write_config(tmp_path, text=QUICK_CONFIG):
    path = tmp_path / "sweep.toml"
    path.write_text(text)
    return str(path)


# --- term / gf ---------------------------------------------------------


def test_term_prints_integer(capsys):
    assert main(["term", "-a", "1", "-b", "1", "-c", "1", "--family", "u", "-n", "10"]) == 0
    assert capsys.readouterr().out.strip() == "55"


def test_term_prints_rational(capsys):
    code = main(
        ["term", "-a", "2", "-b", "1", "-c", "1", "--w0", "1", "--w1", "1/2",
         "-n", "5", "--method", "binet"]
    )
    assert code == 0
    assert capsys.readouterr().out.strip() == "19/2"


def test_term_methods_agree(capsys):
    outputs = set()
    for method in ("naive", "binet", "fast"):
        main(["term", "-a", "1", "-b", "2", "-c", "3", "--family", "v",
              "-n", "37", "--method", method])
        outputs.add(capsys.readouterr().out.strip())
    assert len(outputs) == 1


def test_term_rejects_zero_c(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["term", "-a", "1", "-b", "1", "-c", "0", "--family", "u", "-n", "3"])
    assert exc.value.code == 2
    assert "c must be nonzero" in capsys.readouterr().err


def test_term_requires_inits_for_general_family(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["term", "-a", "1", "-b", "1", "-c", "1", "-n", "3"])
    assert exc.value.code == 2
    assert "requires --w0 and --w1" in capsys.readouterr().err


def test_gf_prints_prefix(capsys):
    assert main(["gf", "-a", "2", "-b", "1", "-c", "1", "--family", "u", "--count", "8"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines == ["0", "1", "2", "3", "8", "11", "30", "41"]


# --- verify -------------------------------------------------------------


def test_verify_negative_control_exits_one(capsys):
    code = main(
        ["verify", "zhang47", "--corrected=false", "-a", "2", "-b", "1", "-c", "1",
         "--family", "u", "-m", "2", "-n", "2", "-r", "1"]
    )
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["lhs"] == "418"
    assert payload["rhs"] == "674"
    assert payload["equal"] is False
    assert payload["control"] is True


def test_verify_corrected_variant_exits_zero(capsys):
    code = main(
        ["verify", "zhang47", "-a", "2", "-b", "1", "-c", "1",
         "--family", "u", "-m", "2", "-n", "2", "-r", "1"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["equal"] is True and payload["indices"]["corrected"] is True


def test_verify_congruence_holds_exits_zero(capsys):
    code = main(
        ["verify", "cor2", "-a", "1", "-b", "1", "-c", "1", "--family", "u",
         "-m", "2", "-n", "1", "-r", "1"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "Holds"
    assert payload["residual"] == "6"
    assert payload["modulus"] == 3


def test_verify_inapplicable_exits_zero(capsys):
    code = main(
        ["verify", "cor1", "-a", "2", "-b", "1", "-c", "1", "--w0", "1", "--w1", "1",
         "-m", "2", "-n", "1", "-r", "1"]
    )
    assert code == 0
    assert json.loads(capsys.readouterr().out)["status"] == "Inapplicable"


def test_verify_params_only_checker(capsys):
    assert main(["verify", "eq5", "-a", "2", "-b", "1", "-c", "1", "-n", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lhs"] == "5" and payload["rhs"] == "5" and payload["equal"] is True
    assert "family" not in payload


def test_verify_exponent_checker_needs_no_parameters(capsys):
    assert main(["verify", "remark2", "-m", "3", "-i", "2", "-r", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["equal"] is True
    assert "a" not in payload


def test_verify_quad_checker_serializes_components(capsys):
    assert main(["verify", "lemma3", "-a", "2", "-b", "1", "-c", "1",
                 "-m", "2", "-r", "1", "--root", "beta"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lhs"] == {"x": "224", "y": "-64", "delta": 12}
    assert payload["lhs"] == payload["rhs"]


def test_verify_unknown_checker_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuch", "-m", "2"])
    assert exc.value.code == 2


def test_verify_missing_index_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm2", "-a", "2", "-b", "1", "-c", "1", "--family", "u",
              "-m", "2", "-n", "1"])
    assert exc.value.code == 2
    assert "requires -r" in capsys.readouterr().err


def test_verify_index_floor_enforced(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm2", "-a", "2", "-b", "1", "-c", "1", "--family", "u",
              "-m", "1", "-n", "1", "-r", "0"])
    assert exc.value.code == 2
    assert "at least 2" in capsys.readouterr().err


def test_verify_degenerate_normalization_exits_two(capsys):
    code = main(
        ["verify", "thm5-s2", "-a", "1", "-b", "-2", "-c", "1", "--w0", "1", "--w1", "1",
         "-n", "1", "-m", "2", "-r", "1", "-d", "1"]
    )
    assert code == 2
    assert "v(2) = 0" in capsys.readouterr().err


# --- sweep --------------------------------------------------------------


def test_sweep_report_shape_and_exit_zero(tmp_path, capsys):
    code = main(["sweep", write_config(tmp_path)])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tool"].startswith("bihoradam ")
    assert list(report["checkers"]) == sorted(report["checkers"])
    totals = report["totals"]
    assert totals["fails"] == 0
    assert totals["checked"] == totals["ok"] + totals["inapplicable"]
    assert totals["inapplicable"] > 0
    assert report["witnesses"] == []
    z = report["checkers"]["zhang47"]
    assert z["control_checked"] == z["checked"]
    assert z["control_equal"] + z["expected_fails"] == z["control_checked"]
    assert totals["expected_fails"] == z["expected_fails"] > 0
    assert len(report["control_witnesses"]) >= 1
    for witness in report["control_witnesses"]:
        assert witness["control"] is True and witness["equal"] is False


def test_sweep_congruence_only_config_has_inapplicable_cells(tmp_path, capsys):
    path = tmp_path / "cong.toml"
    path.write_text(
        'checkers = ["cor1", "cor2", "cor3"]\n'
        "[grid]\n"
        'a = [1, 2]\nb = [1, 2]\nc = [1, 1]\ninits = ["u"]\n'
        "[indices.cor1]\nm = [1, 3]\nn = [1, 2]\nr = [1, 2]\n"
        "[indices.cor2]\nm = [1, 3]\nn = [1, 2]\nr = [1, 2]\n"
        "[indices.cor3]\nn = [1, 2]\nm = [1, 2]\nr = [1, 2]\nd = [1, 2]\n"
    )
    assert main(["sweep", str(path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["totals"]["fails"] == 0
    assert report["totals"]["inapplicable"] > 0


def test_sweep_determinism_modulo_timing(tmp_path):
    config = write_config(tmp_path)
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert main(["sweep", config, "--out", str(out_a)]) == 0
    assert main(["sweep", config, "--out", str(out_b)]) == 0
    strip = lambda p: [l for l in p.read_text().splitlines() if "elapsed_seconds" not in l]
    assert strip(out_a) == strip(out_b)


def test_sweep_parallel_run_is_identical(tmp_path, monkeypatch):
    config = write_config(tmp_path)
    out_a = tmp_path / "seq.json"
    out_b = tmp_path / "par.json"
    assert main(["sweep", config, "--out", str(out_a)]) == 0
    monkeypatch.setenv("HORADAM_THREADS", "4")
    assert main(["sweep", config, "--out", str(out_b)]) == 0
    strip = lambda p: [l for l in p.read_text().splitlines() if "elapsed_seconds" not in l]
    assert strip(out_a) == strip(out_b)


def test_sweep_rejects_bad_thread_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HORADAM_THREADS", "zero")
    with pytest.raises(SystemExit) as exc:
        main(["sweep", write_config(tmp_path)])
    assert exc.value.code == 2


def test_sweep_csv_rows(tmp_path):
    config = write_config(tmp_path)
    csv_path = tmp_path / "cells.csv"
    assert main(["sweep", config, "--out", str(tmp_path / "r.json"), "--csv", str(csv_path)]) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("checker,a,b,c,family,w0,w1,")
    report = json.loads((tmp_path / "r.json").read_text())
    expected_rows = report["totals"]["checked"] + report["checkers"]["zhang47"]["control_checked"]
    assert len(lines) - 1 == expected_rows


def test_sweep_witness_replay(tmp_path, capsys):
    main(["sweep", write_config(tmp_path), "--out", str(tmp_path / "r.json")])
    report = json.loads((tmp_path / "r.json").read_text())
    witness = report["control_witnesses"][0]
    args = ["verify", witness["checker"], "-a", str(witness["a"]), "-b", str(witness["b"]),
            "-c", str(witness["c"]), "--family", witness["family"],
            "--w0", witness["w0"], "--w1", witness["w1"], "--corrected", "false"]
    for key, value in witness["indices"].items():
        if key != "corrected":
            args += [f"-{key}", str(value)]
    code = main(args)
    replayed = json.loads(capsys.readouterr().out)
    assert code == 1
    assert replayed["lhs"] == witness["lhs"]
    assert replayed["rhs"] == witness["rhs"]


def test_sweep_config_errors(tmp_path, capsys):
    empty = tmp_path / "empty.toml"
    empty.write_text("checkers = []\n")
    assert main(["sweep", str(empty)]) == 2
    assert "config error" in capsys.readouterr().err

    unknown = tmp_path / "unknown.toml"
    unknown.write_text('checkers = ["nosuch"]\n')
    assert main(["sweep", str(unknown)]) == 2
    assert "unknown checker" in capsys.readouterr().err

    badrange = tmp_path / "badrange.toml"
    badrange.write_text('checkers = ["thm2"]\n[indices.thm2]\nm = [1, 6]\n')
    assert main(["sweep", str(badrange)]) == 2
    assert "at least 2" in capsys.readouterr().err

    badkey = tmp_path / "badkey.toml"
    badkey.write_text('checkers = ["eq5"]\n[indices.eq5]\nq = [1, 2]\n')
    assert main(["sweep", str(badkey)]) == 2
    assert "takes indices" in capsys.readouterr().err

    missing = tmp_path / "missing.toml"
    assert main(["sweep", str(missing)]) == 2

    malformed = tmp_path / "malformed.toml"
    malformed.write_text("checkers = [\n")
    assert main(["sweep", str(malformed)]) == 2


def test_load_config_applies_defaults(tmp_path):
    path = tmp_path / "min.toml"
    path.write_text('checkers = ["thm4"]\n')
    cfg = load_config(str(path))
    assert cfg.a == (1, 4) and cfg.b == (1, 4) and cfg.c == (1, 3)
    assert [init.label for init in cfg.inits] == ["u", "v", "1,1", "3,7"]
    assert cfg.ranges["thm4"] == {"n": (1, 6), "m": (1, 6), "r": (1, 6)}


def test_load_config_rejects_disabled_checker_indices(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('checkers = ["eq5"]\n[indices.thm2]\nm = [2, 3]\n')
    with pytest.raises(ConfigError, match="not enabled"):
        load_config(str(path))


def test_run_sweep_counts_are_consistent(tmp_path):
    cfg = load_config(write_config(tmp_path))
    report = run_sweep(cfg, threads=1)
    for name, stats in report["checkers"].items():
        assert stats["checked"] == stats["ok"] + stats["fails"] + stats["inapplicable"]
        assert name in CATALOG
    assert len(report["witnesses"]) == report["totals"]["fails"]


# --- version / module entry ---------------------------------------------


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("bihoradam ")


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bihoradam", "term", "-a", "1", "-b", "1", "-c", "1",
         "--family", "u", "-n", "20"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "6765"


def test_console_script_exit_code_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bihoradam", "verify", "zhang47", "--corrected=false",
         "-a", "2", "-b", "1", "-c", "1", "--family", "u", "-m", "2", "-n", "2", "-r", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["rhs"] == "674"
