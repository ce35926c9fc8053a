"""Command-line harness: output formats, config handling, exit codes."""

import json

from mpmath import mp, mpf

from complexcheb import lune_curve, set_precision
from complexcheb.cli import main
from complexcheb.svgplot import scatter_svg


def run(argv):
    return main(argv)


def read_csv(path):
    lines = path.read_text().strip().split("\n")
    assert lines[0].startswith("# complexcheb=")
    header = lines[1].split(",")
    rows = [ln.split(",") for ln in lines[2:]]
    return lines[0], header, rows


def test_curve_dump_matches_library(tmp_path):
    out = tmp_path / "dump.csv"
    code = run(["curve-dump", "--set", "lune", "--alpha", "1", "--samples", "8",
                "--digits", "30", "--threshold", "1e-8", "--out", str(out)])
    assert code == 0
    prov, header, rows = read_csv(out)
    assert "digits=30" in prov
    assert header == ["t", "re", "im"]
    assert len(rows) == 8
    with set_precision(30):
        circle = lune_curve(1)
        for row in rows:
            z = circle.eval(mpf(row[0]))
            assert abs(z.real - mpf(row[1])) < mpf("1e-18")
            assert abs(z.imag - mpf(row[2])) < mpf("1e-18")


def test_cheb_json_output(tmp_path, capsys):
    code = run(["cheb", "--set", "lune", "--alpha", "1", "--degree", "4",
                "--digits", "30", "--threshold", "1e-8"])
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert body["degree"] == 4
    assert body["digits"] == 30
    assert body["version"]
    assert len(body["coefficients"]) == 5
    assert body["coefficients"][-1]["re"] == "1.0"
    assert abs(float(body["widom"]) - 1) < 1e-6
    assert int(body["iterations"]) >= 1


def test_widom_table_csv(tmp_path):
    out = tmp_path / "table.csv"
    code = run(["widom-table", "--set", "lune", "--alpha", "1",
                "--degrees", "2,3", "--digits", "30", "--threshold", "1e-8",
                "--out", str(out)])
    assert code == 0
    _, header, rows = read_csv(out)
    assert header == ["degree", "widom", "rel_error"]
    assert [r[0] for r in rows] == ["2", "3"]
    assert all(abs(float(r[1]) - 1) < 1e-6 for r in rows)


def test_faber_compare_csv_and_sidecar(tmp_path):
    out = tmp_path / "sweep.csv"
    code = run(["faber-compare", "--set", "power-lemniscate", "--degree", "3",
                "--r-grid", "2,3", "--digits", "40", "--threshold", "1e-12",
                "--out", str(out)])
    assert code == 0
    _, header, rows = read_csv(out)
    assert header == ["r", "distance"]
    assert len(rows) == 2
    d2, d3 = float(rows[0][1]), float(rows[1][1])
    assert d2 > d3 > 0  # distance shrinks as the level grows
    side = json.loads((tmp_path / "sweep.json").read_text())
    assert side["family"] == "power-lemniscate"
    assert float(side["slope"]) < -3


def test_zeros_csv_and_svg(tmp_path):
    out = tmp_path / "zeros.csv"
    code = run(["zeros", "--set", "power-lemniscate", "--m", "2", "--r", "2",
                "--degree", "4", "--digits", "30", "--threshold", "1e-8",
                "--samples", "128", "--out", str(out)])
    assert code == 0
    _, header, rows = read_csv(out)
    assert header == ["re", "im", "residual"]
    assert len(rows) == 4
    svg = (tmp_path / "zeros.svg").read_text()
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 4


def test_config_file_defaults_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"set": "lune", "alpha": 1, "degree": 3,
                               "digits": 30, "threshold": "1e-8"}))
    code = run(["cheb", "--config", str(cfg), "--degree", "2"])
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert body["degree"] == 2          # explicit flag beats the config file
    assert body["digits"] == 30         # config default applied


def test_bad_config_exit_codes(tmp_path, capsys):
    cases = [
        ["cheb", "--digits", "10"],                                   # digits too low
        ["cheb", "--digits", "30", "--threshold", "1e-30"],           # threshold/digits clash
        ["cheb", "--set", "lune"],                                    # lune needs alpha
        ["widom-table", "--set", "lune", "--alpha", "1"],             # missing degrees
        ["cheb", "--set", "polygon", "--m", "2"],                     # invalid family parameter
        ["no-such-command"],
    ]
    for argv in cases:
        assert run(argv) == 3, argv
        err = capsys.readouterr().err
        assert json.loads(err.strip().split("\n")[-1])["error"] == "bad-config"


def test_unknown_config_key_rejected(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"degreee": 3}))
    assert run(["cheb", "--set", "lune", "--alpha", "1", "--config", str(cfg)]) == 3


def test_unwritable_output_is_runtime_error(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "out.csv"
    code = run(["curve-dump", "--set", "lune", "--alpha", "1", "--samples", "4",
                "--digits", "30", "--threshold", "1e-8", "--out", str(missing)])
    assert code == 2
    assert "error" in json.loads(capsys.readouterr().err)


def test_scatter_svg_is_self_contained():
    svg = scatter_svg([(0, 0), (1, 0), (1, 1)], [(0.5, 0.5)])
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert "<polygon" in svg and "<circle" in svg
    assert "http" not in svg.replace("http://www.w3.org/2000/svg", "")
    # degenerate input still yields a document
    assert "<svg" in scatter_svg([], [])
