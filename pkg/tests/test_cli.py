import json

import pytest

from modunits.cli import main
from modunits.qseries import PuiseuxSeries


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_j_terms(self, capsys):
        code, out, _ = run(capsys, "expand", "j", "--trunc", "4")
        assert code == 0
        series = PuiseuxSeries.from_json(out)
        assert series.coefficient(-1) == 1
        assert series.coefficient(0) == 744
        assert series.coefficient(1) == 196884

    def test_eta_text(self, capsys):
        code, out, _ = run(capsys, "expand", "eta", "--trunc", "2", "--format", "text")
        assert code == 0
        assert "q^    1/24" in out

    def test_siegel_leading_exponent(self, capsys):
        code, out, _ = run(capsys, "expand", "siegel", "1/2", "1/2", "--trunc", "1")
        assert code == 0
        series = PuiseuxSeries.from_json(out)
        assert str(series.ord()) == "-1/24"

    def test_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "expand", "klein", "--trunc", "5")
        assert code == 0
        series = PuiseuxSeries.from_json(out)
        assert PuiseuxSeries.from_json(series.to_json()).same_series(series)

    def test_unknown_name_exit_2(self, capsys):
        code, _, err = run(capsys, "expand", "nonsense", "--trunc", "4")
        assert code == 2
        assert "unknown" in err

    def test_malformed_params_exit_2(self, capsys):
        code, _, _ = run(capsys, "expand", "siegel", "1/2", "--trunc", "4")
        assert code == 2
        code, _, _ = run(capsys, "expand", "siegel", "x", "y", "--trunc", "4")
        assert code == 2


class TestVerify:
    def test_jacobi_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "jacobi", "--trunc", "40")
        assert code == 0
        assert "pass" in out

    def test_g14_eta_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "g14-eta", "--trunc", "20")
        assert code == 0

    def test_rank_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "rank", "--N", "4", "--format", "json")
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_unknown_identity_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "not-an-identity")
        assert code == 2

    def test_seeded_report_is_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "verify", "theta-diag", "--samples", "5", "--seed", "3", "--format", "json")
        code2, out2, _ = run(capsys, "verify", "theta-diag", "--samples", "5", "--seed", "3", "--format", "json")
        assert code1 == code2 == 0
        r1, r2 = json.loads(out1), json.loads(out2)
        assert r1["witness"] == r2["witness"]


class TestCuspsDivisorRank:
    def test_cusps_2(self, capsys):
        code, out, _ = run(capsys, "cusps", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 3
        assert len(data["cusps"]) == 3

    def test_divisor_sums_to_zero(self, capsys):
        code, out, _ = run(capsys, "divisor", "1/2", "0", "2")
        assert code == 0
        data = json.loads(out)
        assert data["degree"] == "0"

    def test_rank_4(self, capsys):
        code, out, _ = run(capsys, "rank", "4", "--format", "json")
        assert code == 0
        assert json.loads(out)["rank"] == 5

    def test_malformed_divisor_exit_2(self, capsys):
        code, _, _ = run(capsys, "divisor", "1/3", "0", "2")
        assert code == 2


class TestTheta:
    def test_diag_product(self, capsys):
        code, out, _ = run(
            capsys, "theta", "--g", "2", "--char", "0,0:0,0", "--point", "i,2i"
        )
        assert code == 0
        data = json.loads(out)
        from modunits.classical import theta_classical

        expected = theta_classical(3, 40).evaluate(1j) * theta_classical(3, 40).evaluate(2j)
        assert abs(complex(data["value_re"], data["value_im"]) - expected) < 1e-10
        assert data["residuals"]["two_radius"] < 1e-10

    def test_malformed_char_exit_2(self, capsys):
        code, _, _ = run(capsys, "theta", "--g", "2", "--char", "0,0", "--point", "i,2i")
        assert code == 2

    def test_bad_point_exit_2(self, capsys):
        code, _, _ = run(capsys, "theta", "--g", "1", "--char", "0:0", "--point", "1")
        assert code == 2


def test_usage_error_exit_2(capsys):
    assert main(["no-such-command"]) == 2
