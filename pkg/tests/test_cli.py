import json
from fractions import Fraction

import pytest

from rspinrel.cli import main
from rspinrel.linalg import RationalMatrix, rank_and_solve


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def span_rank(rows):
    rows = [row for row in rows if any(row)]
    if not rows:
        return 0
    return rank_and_solve(RationalMatrix([[Fraction(x) for x in r] for r in rows]))[0]


class TestRelationsCommand:
    def test_golden_two_marked(self, capsys):
        code, out, _ = run(capsys, ["relations", "--g", "1", "--n", "2", "--r", "3"])
        assert code == 0
        assert "3 normalized relations" in out

    def test_golden_two_marked_span(self, capsys):
        # The printed set must span exactly the three golden relations over
        # (psi_1, psi_2, kappa_1, delta_irr, delta_sep).
        _, out, _ = run(
            capsys,
            ["relations", "--g", "1", "--n", "2", "--r", "3", "--format", "json"],
        )
        printed = [payload["coeffs"] for payload in json.loads(out)["relations"]]
        targets = [
            [1, -1, 0, 0, 0],
            [2, 0, -1, 0, -1],
            [12, 0, 0, -1, -12],
        ]
        assert span_rank(printed) == 3
        assert span_rank(targets) == 3
        assert span_rank(printed + targets) == 3

    def test_golden_genus_two_vectors(self, capsys):
        _, out, _ = run(
            capsys,
            ["relations", "--g", "2", "--n", "0", "--r", "3", "--format", "json"],
        )
        record = json.loads(out)
        assert record["relations"][0]["generators"] == [
            "kappa_1", "delta_irr", "delta_{1,{}}"
        ]
        assert record["relations"][0]["coeffs"] == [5, -1, -7]

        _, out, _ = run(
            capsys,
            ["relations", "--g", "2", "--n", "2", "--r", "3", "--format", "json"],
        )
        payload = json.loads(out)["relations"][0]
        coeffs = dict(zip(payload["generators"], payload["coeffs"]))
        # 5(kappa - psi_1 - psi_2 + delta_0) = delta_irr + 7(delta_1 sum),
        # up to an overall sign from normalization.
        vec = [coeffs[name] for name in (
            "kappa_1", "psi_1", "psi_2", "delta_{0,{1,2}}", "delta_irr",
            "delta_{1,{}}", "delta_{1,{1}}")]
        assert vec in ([5, -5, -5, 5, -1, -7, -7], [-5, 5, 5, -5, 1, 7, 7])

    def test_json_round_trip(self, capsys):
        code, out, _ = run(
            capsys,
            ["relations", "--g", "1", "--n", "2", "--r", "3", "--format", "json"],
        )
        assert code == 0
        record = json.loads(out)
        assert record == json.loads(json.dumps(record))
        assert record["schema_version"] == 1
        assert record["command"] == "relations"
        assert len(record["relations"]) == 3

    def test_text_and_json_same_vectors(self, capsys):
        _, json_out, _ = run(
            capsys,
            ["relations", "--g", "1", "--n", "2", "--r", "3", "--format", "json"],
        )
        record = json.loads(json_out)
        _, text_out, _ = run(capsys, ["relations", "--g", "1", "--n", "2", "--r", "3"])
        for payload in record["relations"]:
            for name, coeff in zip(payload["generators"], payload["coeffs"]):
                if coeff != 0:
                    assert f"{abs(coeff)}*{name}" in text_out

    def test_single_leg_vector(self, capsys):
        code, out, _ = run(
            capsys,
            ["relations", "--g", "1", "--n", "2", "--r", "3", "--a", "1,0",
             "--format", "json"],
        )
        assert code == 0
        record = json.loads(out)
        assert len(record["relations"]) == 1
        payload = record["relations"][0]
        assert payload["a"] == [1, 0]
        assert payload["coeffs"] == [7, -5, 5, -1, -7]

    def test_genus_two_pullback_route(self, capsys):
        code, out, _ = run(
            capsys,
            ["relations", "--g", "2", "--n", "3", "--r", "3", "--format", "json"],
        )
        assert code == 0
        record = json.loads(out)
        assert len(record["relations"]) == 1
        generators = record["relations"][0]["generators"]
        assert "delta_{1,{}}" in generators

    def test_genus_two_leg_vector_routes_through_pullback(self, capsys):
        code, out, _ = run(
            capsys,
            ["relations", "--g", "2", "--n", "2", "--r", "3", "--a", "0,0",
             "--format", "json"],
        )
        assert code == 0
        payload = json.loads(out)["relations"][0]
        assert payload["coeffs"] == [5, 5, -5, 1, -5, 7, 7]
        # Only the all-zero leg vector exists on the unmarked source space.
        code, _, err = run(
            capsys, ["relations", "--g", "2", "--n", "2", "--r", "3", "--a", "1,0"]
        )
        assert code == 1

    def test_degree_gate_exit_code(self, capsys):
        code, _, err = run(capsys, ["relations", "--g", "4", "--n", "0", "--r", "3"])
        assert code == 2
        assert "D = 1" in err

    def test_genus_three_zero_relation(self, capsys):
        code, out, _ = run(capsys, ["relations", "--g", "3", "--n", "0", "--r", "3"])
        assert code == 0
        assert "zero relation" in out

    def test_symbolic_mode(self, capsys):
        code, out, _ = run(
            capsys,
            ["relations", "--g", "1", "--n", "2", "--symbolic", "--a", "1,0",
             "--format", "json"],
        )
        assert code == 0
        record = json.loads(out)
        modes = {payload["r"] for payload in record["relations"]}
        assert "r^3" in modes and "r^2" in modes

    def test_usage_errors(self, capsys):
        assert run(capsys, ["relations", "--g", "0", "--n", "2", "--r", "3"])[0] == 1
        assert run(capsys, ["relations", "--g", "1", "--n", "0", "--r", "3"])[0] == 1
        assert run(capsys, ["relations", "--g", "1", "--n", "2"])[0] == 1
        assert run(capsys, ["relations", "--g", "1", "--n", "2", "--r", "3",
                            "--a", "1"])[0] == 1
        assert run(capsys, ["relations", "--g", "1", "--n", "2", "--r", "2"])[0] == 1
        assert run(capsys, ["relations", "--g", "2", "--n", "0", "--symbolic"])[0] == 1
        assert run(capsys, ["nonsense"])[0] == 1


class TestVerifyAcCommand:
    @pytest.mark.parametrize("g,n,expected_rank", [(1, 4, 5), (2, 0, 1), (3, 0, 0)])
    def test_equal_cases(self, capsys, g, n, expected_rank):
        code, out, _ = run(
            capsys, ["verify-ac", "--g", str(g), "--n", str(n), "--r", "3"]
        )
        assert code == 0
        assert "EQUAL" in out
        assert f"union rank {expected_rank}" in out

    def test_json_verdict(self, capsys):
        code, out, _ = run(
            capsys,
            ["verify-ac", "--g", "1", "--n", "2", "--r", "3", "--format", "json"],
        )
        assert code == 0
        record = json.loads(out)
        assert record["verdicts"][0]["verdict"] == "EQUAL"
        assert record["verdicts"][0]["rank_computed"] == 3

    def test_unsupported_genus(self, capsys):
        code, _, err = run(capsys, ["verify-ac", "--g", "7", "--n", "0", "--r", "3"])
        assert code == 1


class TestPmTableCommand:
    def test_first_order_row(self, capsys):
        code, out, _ = run(capsys, ["pm-table", "--m-max", "1", "--r", "3"])
        assert code == 0
        assert "-5/24" in out and "7/24" in out

    def test_order_zero_row_all_ones(self, capsys):
        code, out, _ = run(
            capsys, ["pm-table", "--m-max", "0", "--r", "5", "--format", "json"]
        )
        assert code == 0
        record = json.loads(out)
        assert record["table"][0]["values"] == ["1", "1", "1", "1"]


class TestSelftestCommand:
    def test_json_verdicts_and_exit_code(self, capsys):
        code, out, _ = run(capsys, ["selftest", "--json"])
        record = json.loads(out)
        assert len(record["verdicts"]) == 11
        all_pass = all(v["verdict"] == "PASS" for v in record["verdicts"])
        assert code == (0 if all_pass else 1)
