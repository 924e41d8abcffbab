import json

import pytest

from superprolong import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--matrix", "2"],
        ["run", "--grading", "0,1,0"],
        ["run", "--p", "11"],
        ["run", "--N", "4"],
        ["run", "--p", "5", "--route", "tilde-g0"],
        ["run", "--p", "5", "--mode", "partial-prime"],
        ["run", "--max-degree", "zero"],
        ["export", "--matrix", "3", "--out", "x.txt"],
    ],
)
def test_usage_errors_before_computation(argv, capsys, monkeypatch):
    def boom(*a, **k):
        raise AssertionError("engine must not run")

    monkeypatch.setattr(cli.ag2lab, "experiment_bj", boom)
    monkeypatch.setattr(cli.ag2lab, "experiment_bj_partial", boom)
    code, _, err = run(argv, capsys)
    assert code == 2 and "usage error" in err


def test_run_bj_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(["run", "--p", "3", "--N", "1", "--mode", "full", "--route", "tilde-g0", "--out", str(out)], capsys)
    assert code == 0
    rep = json.loads(out.read_text(encoding="utf-8"))
    assert rep["total_sdim"] == "24|24"
    assert rep["sdim"]["5"] == "0|1" and rep["top_degree"] == 5
    assert rep["criterion"]["simple"] is True and rep["verdict"] == "simple"
    assert rep["lowest_weight"]["-1"] == ["w4"]
    assert "timings" not in rep
    # byte-identical on a second run
    out2 = tmp_path / "r2.json"
    run(["run", "--p", "3", "--N", "1", "--out", str(out2)], capsys)
    assert out.read_bytes() == out2.read_bytes()
    code, text, _ = run(["table", str(out)], capsys)
    assert code == 0 and "total sdim 24|24" in text and "verdict: simple" in text


def test_run_p5(capsys):
    code, text, _ = run(["run", "--p", "5", "--N", "1", "--mode", "full"], capsys)
    rep = json.loads(text)
    assert code == 0 and rep["total_sdim"] == "17|14" and rep["algebra"] == "ag(2)"


def test_run_bj_partial_with_timings(capsys):
    code, text, _ = run(["run", "--p", "3", "--N", "1", "--mode", "partial-double-prime", "--timings"], capsys)
    rep = json.loads(text)
    assert code == 0 and rep["total_sdim"] == "10|14" and rep["verdict"] == "simple"
    assert rep["even_split"]["ideal_dims"] == [3, 7]
    assert "timings" in rep


def test_export_roundtrip(tmp_path, capsys):
    path = tmp_path / "bj.sc"
    assert cli.main(["export", "--p", "3", "--mode", "partial-double-prime", "--out", str(path)]) == 0
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    assert lines[:3] == ["# p=3", "# N=1", "# algebra=bj"]
    assert sum(1 for line in lines if line.startswith("b ")) == 24
    data = cli.read_sc(text)
    sc = data["algebra"]
    assert sc.super_antisymmetry_defects() == 0
    assert cli.write_sc(data) == text
    consts = [tuple(map(int, line.split()[1:])) for line in lines if line.startswith("c ")]
    assert consts == sorted(consts) and all(i <= j for i, j, _, _ in consts)


def test_export_negative_part_is_heisenberg(tmp_path):
    path = tmp_path / "neg.sc"
    assert cli.main(["export", "--p", "3", "--out", str(path), "--part", "negative"]) == 0
    data = cli.read_sc(path.read_text(encoding="utf-8"))
    basis = data["basis"]
    assert basis[0][3] == "d/dt" and basis[0][2] == -2
    consts = data["algebra"].constants()
    assert consts and all(k == 0 for _, _, k, _ in consts)
    # every g_-1 element pairs with exactly one other
    partners = {}
    for i, j, _, _ in consts:
        partners.setdefault(i, set()).add(j)
        partners.setdefault(j, set()).add(i)
    assert sorted(len(v) for v in partners.values()) == [1] * 7


def test_read_sc_errors():
    with pytest.raises(ValueError):
        cli.read_sc("# p=3\n# N=1\nb 0 0 -2 d/dt\n")
    with pytest.raises(ValueError):
        cli.read_sc("# p=3\n# N=1\n# algebra=x\nb 1 0 -2 d/dt\n")
    with pytest.raises(ValueError):
        cli.read_sc("# p=3\n# N=1\n# algebra=x\nq\n")


def test_verify_properties(capsys):
    code, text, _ = run(["verify", "--suite", "properties"], capsys)
    assert code == 0 and "ALL PASS" in text


def test_verify_tables_n1(capsys):
    code, text, _ = run(["verify", "--suite", "paper-tables", "--N", "1"], capsys)
    assert code == 0
    assert text.count("PASS") >= 6 and text.count("WARN") == 2


def test_verify_n3_needs_slow(capsys):
    code, _, err = run(["verify", "--suite", "paper-tables", "--N", "3"], capsys)
    assert code == 2 and "--slow" in err


def test_verdict():
    assert cli.verdict(False, True) == "simple"
    assert cli.verdict(True, False) == "not simple"
    assert cli.verdict(True, None) == "simple"
    assert cli.verdict(False, None) == "undetermined"


@pytest.mark.slow
def test_verify_tables_n3_slow(capsys):
    code, text, _ = run(["verify", "--suite", "paper-tables", "--N", "3", "--slow"], capsys)
    assert "N=3 V53'" in text
    assert code == 0
