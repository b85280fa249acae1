import json

import pytest

from m5index.cli import main
from m5index.render import render_series, series_from_json
from m5index.series import NonLatticeImage, TruncatedSeries, mono


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_reduced_sl2(capsys):
    code, out, _ = run(capsys, "expand", "--theory", "A1", "--order", "4")
    assert code == 0
    assert out.strip().startswith("1+y^2*q^2+")


def test_expand_json_round_trips(capsys):
    code, out, _ = run(capsys, "expand", "--theory", "gl1", "--order", "3", "--frame", "t", "--format", "json")
    assert code == 0
    s = series_from_json(out)
    assert s.order2 == 6
    assert json.loads(out)["frame"] == "t"


def test_expand_half_integer_order(capsys):
    code, out, _ = run(capsys, "expand", "--theory", "sugra", "--order", "5/2")
    assert code == 0
    assert out.strip().endswith("O(q^(5/2))")


def test_expand_minimal_in_zw(capsys):
    code, out, _ = run(capsys, "expand", "--theory", "minimal2", "--order", "3", "--frame", "zw")
    assert code == 0
    assert "w1" in out


@pytest.mark.parametrize("argv", [
    ["expand", "--theory", "B2"],
    ["expand", "--theory", "A0"],
    ["expand", "--theory", "A1", "--order", "1/3"],
    ["verify", "nonsense"],
    ["verify", "schur", "--jobs", "0"],
    ["table", "kim", "--frame", "x"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_physical_indices_live_on_the_zw_lattice(capsys):
    for theory in ("gl1", "A1", "sugra"):
        code, out, _ = run(capsys, "expand", "--theory", theory, "--order", "3", "--frame", "zw")
        assert code == 0, theory


def test_off_lattice_series_cannot_render_in_zw():
    with pytest.raises(NonLatticeImage):
        render_series(TruncatedSeries({mono(q=1): 1}), "zw")


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "frames")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(l.startswith("CHECK ") for l in lines[:-1])
    assert lines[-1].startswith("SUITE frames PASS")


def test_verify_json_and_exit_code_on_failure(capsys):
    code, out, _ = run(capsys, "verify", "kim", "--format", "json")
    rep = json.loads(out)
    assert code == 1
    assert rep["passed"] is False
    assert {c["status"] for c in rep["checks"]} <= {"pass", "fail", "documented-discrepancy"}


def test_table_kim(capsys):
    code, out, _ = run(capsys, "table", "kim", "--order", "3")
    assert code == 0
    assert "chi~2 q^3: ours=1-chi[0,1]*y+chi[1,0]*y^2 printed=1-chi[0,1]*y+chi[1,0]*y^2 match" in out


def test_table_imamura_json(capsys):
    code, out, _ = run(capsys, "table", "imamura", "--order", "1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert any(r["printed"] == "(1)/(1-x^2)" and r["match"] for r in rows)


def test_missing_fixture_exit_code(capsys, tmp_path):
    code, _, err = run(capsys, "table", "kim", "--fixtures", str(tmp_path))
    assert code == 2
    assert "missing fixture" in err


def test_golden_check(capsys):
    code, out, _ = run(capsys, "golden")
    assert code == 0
    assert "CHANGED" not in out
