import csv
import io
import json
import subprocess
import sys

import pytest

from starlike_radius.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestRadius:
    def test_cardioid(self):
        code, out, err = invoke("radius", "--family", "t1", "--target", "cardioid")
        assert code == 0 and err == ""
        data = json.loads(out)
        assert data["closed_form"] == pytest.approx(4 / 13, abs=1e-15)
        assert abs(data["numeric"] - 4 / 13) <= 1e-8

    def test_alpha_out_of_range(self):
        code, out, err = invoke("radius", "--family", "t2", "--target", "halfplane", "--alpha", "1.5")
        assert code == 2 and out == ""
        assert "alpha must lie in [0,1)" in err
        assert len(err.strip().splitlines()) == 1

    def test_parameterised_targets(self):
        code, out, _ = invoke("radius", "--family", "t1", "--target", "halfplane", "--alpha", "0.5")
        assert code == 0 and json.loads(out)["closed_form"] == pytest.approx(0.25)
        code, out, _ = invoke("radius", "--family", "t2", "--target", "janowski", "--A", "1", "--B", "-0.5")
        assert code == 0 and json.loads(out)["closed_form"] == pytest.approx(1.5 / 4.5)

    def test_text_format(self):
        code, out, _ = invoke("radius", "--family", "t2", "--target", "sine", "--format", "text")
        assert code == 0 and "closed_form_expr: sin(1)/3" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ("radius", "--family", "t3", "--target", "cardioid"),
            ("radius", "--target", "cardioid"),
            ("radius", "--family", "t1", "--target", "lemniscate"),
            ("radius", "--family", "t1", "--target", "cardioid", "--alpha", "0.1"),
            ("radius", "--family", "t1", "--target", "janowski", "--A", "0.2", "--B", "0.5"),
            ("radius", "--family", "t1", "--target", "halfplane", "--A", "0.2"),
            ("radius", "--family", "t1", "--target", "disc", "--tol", "0"),
            ("bounds", "--family", "t1", "--r", "1.2"),
            ("verify", "--samples", "0"),
            ("table", "--format", "xml"),
            ("frobnicate",),
        ],
    )
    def test_usage_errors(self, argv):
        code, out, _ = invoke(*argv)
        assert code == 2 and out == ""


class TestOtherVerbs:
    def test_verify_example(self):
        code, out, _ = invoke("verify", "--suite", "all", "--seed", "7", "--samples", "200")
        assert code == 0
        report = json.loads(out)
        assert report["overall"] is True

    def test_verify_failure_exit_code(self):
        code, out, err = invoke("verify", "--suite", "radii", "--radius-tol", "1e-15")
        assert code == 1
        assert json.loads(out)["overall"] is False

    def test_bounds(self):
        code, out, _ = invoke("bounds", "--family", "t2", "--r", "0.3")
        data = json.loads(out)
        assert code == 0
        assert data["member_bound"] == pytest.approx(0.9, rel=1e-15)
        lo, hi = data["growth_range"]
        assert lo < 0.3 < hi

    def test_table_csv(self):
        code, out, _ = invoke("table", "--format", "csv")
        assert code == 0
        assert len(list(csv.DictReader(io.StringIO(out)))) == 20

    def test_table_json(self):
        code, out, _ = invoke("table", "--format", "json")
        rows = json.loads(out)
        assert code == 0 and len(rows) == 20

    def test_byte_identical(self):
        a = invoke("verify", "--suite", "lemmas", "--seed", "3", "--samples", "20")[1]
        b = invoke("verify", "--suite", "lemmas", "--seed", "3", "--samples", "20")[1]
        assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "starlike_radius", "radius", "--family", "t1", "--target", "halfplane", "--alpha", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert proc.stderr.strip() == "starlike-radius radius: error: alpha must lie in [0,1)"
