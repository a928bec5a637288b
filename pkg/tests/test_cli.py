import json
import subprocess
import sys

from arithdyn.cli import main


def run_cli(args, capsys):
    rc = main(args)
    out = capsys.readouterr().out
    return rc, out


def test_snap_csv(capsys):
    rc, out = run_cli(["snap", "--map", "X^2", "--alpha", "2", "--n", "3",
                       "--format", "csv"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# jobspec:")
    header = lines[1].split(",")
    row = dict(zip(header, lines[2].split(",")))
    assert row["r"] == "4" and row["max_degree"] == "4" and row["D"] == "2"


def test_snap_json_multiset(capsys):
    rc, out = run_cli(["snap", "--map", "X^2", "--alpha", "2", "--n", "3"], capsys)
    doc = json.loads(out)
    assert doc["result"]["multiset"] == [1, 1, 2, 2, 4, 4, 4, 4]
    assert doc["artifact_version"]
    assert doc["jobspec"]["verb"] == "snap"


def test_cyclotomic_degree(capsys):
    rc, out = run_cli(["cyclotomic-degree", "--p", "2", "--b", "8"], capsys)
    assert rc == 0
    assert json.loads(out)["result"]["degree"] == 4


def test_power_lemma_oracle(capsys):
    rc, out = run_cli(["power-lemma", "--theta", "2", "--c", "1", "--oracle",
                       "--X", "9"], capsys)
    assert rc == 0
    assert json.loads(out)["result"]["max_M"] == 4


def test_sweep_r_column(capsys):
    rc, out = run_cli(["sweep", "--verb", "snap", "--map", "X^2", "--alpha", "2",
                       "--vary", "n=1:6", "--format", "csv"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    header = lines[1].split(",")
    r_idx = header.index("r")
    rs = [line.split(",")[r_idx] for line in lines[2:]]
    assert rs == ["2", "3", "4", "5", "6", "7"]


def test_sweep_delta_v(capsys):
    rc, out = run_cli(["sweep", "--verb", "delta-v", "--map", "X^2+1",
                       "--vary", "prime=2,3,5", "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    header = lines[1].split(",")
    e_idx = header.index("exact")
    assert [line.split(",")[e_idx] for line in lines[2:]] == ["4/1", "1/1", "1/1"]


def test_sweep_empty_range_header_only(capsys):
    rc, out = run_cli(["sweep", "--verb", "snap", "--map", "X^2", "--alpha", "2",
                       "--vary", "n=5:4", "--format", "csv"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# jobspec:")
    assert len(lines) <= 2  # no data rows


def test_determinism_byte_identical(capsys):
    args = ["canonical-height", "--map", "X^2+1", "--alpha", "1", "--eps", "1/1000"]
    _, out1 = run_cli(args, capsys)
    _, out2 = run_cli(args, capsys)
    assert out1 == out2
    args_csv = ["census", "--function", "square", "--height", "4", "--format", "csv"]
    _, c1 = run_cli(args_csv, capsys)
    _, c2 = run_cli(args_csv, capsys)
    assert c1 == c2


def test_exit_codes(capsys):
    assert main(["no-such-verb"]) == 1
    assert main([]) == 1
    assert main(["snap", "--map", "X^2", "--alpha", "2"]) == 1  # missing --n
    # domain error: non-monic map
    assert main(["snap", "--map", "2*X^2", "--alpha", "2", "--n", "1"]) == 2
    # resource guard: degree cap
    assert main(["iterate", "--map", "X^2", "--n", "13"]) == 3
    capsys.readouterr()


def test_census_verdicts_csv(capsys):
    rc, out = run_cli(["census", "--function", "square", "--height", "4",
                       "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    header = lines[1].split(",")
    v_idx = header.index("verdict")
    verdicts = [line.split(",")[v_idx] for line in lines[2:]]
    assert verdicts.count("candidate-rational") == 1
    assert len(verdicts) == 5


def test_factor_json(capsys):
    rc, out = run_cli(["factor", "--poly", "X^8-256"], capsys)
    doc = json.loads(out)["result"]
    assert doc["content"] == 1
    degs = sorted(len(f["coeffs"]) - 1 for f in doc["factors"])
    assert degs == [1, 1, 2, 4]


def test_height_verbs(capsys):
    rc, out = run_cli(["height", "--rational", "7/3"], capsys)
    assert json.loads(out)["result"]["exact"] == "7/1"
    rc, out = run_cli(["height", "--min-poly", "X^2-2"], capsys)
    res = json.loads(out)["result"]
    assert res["height_mult"]["mid"].startswith("1.4142135")
    rc, out = run_cli(["weil-height", "--tuple", "1/2,3"], capsys)
    assert json.loads(out)["result"]["exact"] == "6/1"


def test_boettcher_series_verb(capsys):
    rc, out = run_cli(["boettcher-series", "--map", "X^2+1", "--order", "4"], capsys)
    res = json.loads(out)["result"]
    assert res["coefficients"]["b1"] == "1/2"
    assert res["coefficients"]["b3"] == "1/8"


def test_masser_verb_with_e(capsys):
    rc, out = run_cli(["masser-t", "--AZ", "2", "--M", "1", "--H", "e", "--d", "2"], capsys)
    res = json.loads(out)["result"]
    assert 100 < float(res["T_decimal"]["mid"]) < 1000


def test_fstar_verb(capsys):
    rc, out = run_cli(["fstar", "--map", "X^2", "--alpha", "4",
                       "--tau-im", "1/24", "--order", "8"], capsys)
    assert rc == 0
    res = json.loads(out)["result"]
    assert res["value"]["mid"].startswith("0.25")
    assert res["distortion"] == "0/1"


def test_bound_shape_verb(capsys):
    rc, out = run_cli(["bound-shape", "--tag", "degree_lower", "--D", "2",
                       "--n", "8", "--eps", "1/8"], capsys)
    res = json.loads(out)["result"]
    assert res["value"]["mid"].startswith("2.0000")


def test_config_merge(tmp_path, capsys):
    cfg = tmp_path / "job.cfg"
    cfg.write_text("map=X^2\nalpha=2\nn=3\nformat=csv\n# comment\n")
    rc, out = run_cli(["snap", "--config", str(cfg)], capsys)
    assert rc == 0
    assert out.splitlines()[0].startswith("# jobspec:")
    # explicit flag wins over config
    rc, out2 = run_cli(["snap", "--config", str(cfg), "--n", "2", "--format", "json"], capsys)
    doc = json.loads(out2)
    assert doc["result"]["n"] == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    rc = main(["cover", "--R", "2", "--r", "1", "--output", str(target)])
    assert rc == 0
    doc = json.loads(target.read_text())
    assert doc["result"]["count"] <= 23
    capsys.readouterr()


def test_console_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "arithdyn.cli", "order", "--a", "2", "--n", "5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["order"] == 4
