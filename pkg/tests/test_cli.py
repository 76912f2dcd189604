"""CLI behavior: exit codes, JSON round-trips, CSV scan, figures."""

import json

import pytest

from jrnum import cli, render


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGood:
    def test_good_exit_zero(self, capsys):
        code, out, _ = run(capsys, "good", "3", "4", "2")
        assert code == 0 and "is good" in out

    def test_bad_exit_one_with_reason(self, capsys):
        code, out, _ = run(capsys, "good", "3", "4", "3")
        assert code == 1 and "r divides b" in out

    def test_bad_v2(self, capsys):
        code, out, _ = run(capsys, "good", "1", "8", "2")
        assert code == 1 and "v2(b) - 1 coprime to r" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "good", "3", "4", "2", "--json")
        rec = json.loads(out)
        assert rec["good"] is True and rec["violations"] == []


class TestJR:
    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "jr", "3", "4", "2")
        assert code == 0
        assert "s^2          8" in out
        assert "3 + 2*sqrt(2)" in out and "5.8284271247" in out

    def test_json_values(self, capsys):
        code, out, _ = run(capsys, "jr", "3", "4", "2", "--json")
        rec = json.loads(out)
        assert rec["s_squared"] == "8"
        assert rec["jr"] == {"int": 3, "coeff": "2", "radicand": 2, "decimal": "5.8284271247"}
        assert rec["witnesses"] == [{"k": 0, "x": "4", "y": "-4"}]
        assert rec["bounds"]["ok"] is True

    def test_json_roundtrip_byte_identical(self, capsys):
        _, out, _ = run(capsys, "jr", "11", "12", "6", "--json")
        rec = json.loads(out)
        assert render.dumps(rec) + "\n" == out

    def test_integer_jr(self, capsys):
        code, out, _ = run(capsys, "jr", "1", "4", "2", "--json")
        rec = json.loads(out)
        assert rec["jr"]["decimal"] == "8.0000000000"

    def test_digits_flag(self, capsys):
        _, out, _ = run(capsys, "jr", "11", "12", "6", "--json", "--digits", "8")
        rec = json.loads(out)
        assert rec["jr"]["decimal"] == "9.89897949"

    def test_invalid_triple_exit_one(self, capsys):
        code, _, err = run(capsys, "jr", "3", "4", "3")
        assert code == 1 and "not good" in err

    def test_budget_exit_three(self, capsys):
        code, _, err = run(capsys, "jr", "1", "20", "10", "--climit", "2")
        assert code == 3 and "resource cap" in err


class TestWitness:
    def test_three_witnesses_pass(self, capsys):
        code, out, _ = run(capsys, "witness", "3", "4", "2", "--count", "3", "--json")
        rec = json.loads(out)
        assert code == 0 and rec["ok"] is True and rec["count"] == 3
        for w in rec["witnesses"]:
            assert w["integral_by_valuations"] and w["integral_by_charpoly"]
            assert w["conjugates_in_range"]

    def test_count_zero(self, capsys):
        code, out, _ = run(capsys, "witness", "3", "4", "2", "--count", "0", "--json")
        rec = json.loads(out)
        assert code == 0 and rec["witnesses"] == []

    def test_142_first_witness(self, capsys):
        code, out, _ = run(capsys, "witness", "1", "4", "2", "--count", "1", "--json")
        rec = json.loads(out)
        w = rec["witnesses"][0]
        assert w["level"] == 4 and w["coeffs"] == {"0": "4", "1": "4"}
        assert w["min_conjugate"] >= -1e-9 and w["max_conjugate"] <= 8 + 1e-9


class TestVerify:
    def test_ok(self, capsys):
        code, out, _ = run(
            capsys, "verify", "3", "4", "2", "--samples", "50", "--seed", "7", "--nmax", "8"
        )
        assert code == 0 and "all checks passed" in out

    def test_second_triple(self, capsys):
        code, _, _ = run(capsys, "verify", "15", "16", "2", "--samples", "40")
        assert code == 0

    def test_malformed_triple(self, capsys):
        code, _, err = run(capsys, "verify", "2", "6", "2")
        assert code == 1

    def test_property_failure_exits_two(self, capsys, monkeypatch):
        from jrnum import checks

        monkeypatch.setattr(
            checks, "run_all", lambda *a, **k: [checks.CheckResult("forced", False, "")]
        )
        code, out, _ = run(capsys, "verify", "3", "4", "2")
        assert code == 2 and "verification FAILED" in out


class TestExamples:
    def test_sqrt2t_checked(self, capsys):
        code, out, _ = run(
            capsys, "examples", "--family", "sqrt2t", "--t", "1", "--count", "3", "--check"
        )
        assert code == 0
        assert out.count("[confirmed]") == 3
        assert "(3, 4, 2)" in out and "(63, 64, 2)" in out

    def test_8t_checked(self, capsys):
        code, out, _ = run(
            capsys, "examples", "--family", "8t", "--t", "3", "--count", "1", "--check", "--json"
        )
        rec = json.loads(out)
        assert code == 0 and rec["ok"] is True
        entry = rec["entries"][0]
        assert (entry["a"], entry["b"], entry["r"]) == (1, 12, 6)
        assert entry["predicted_jr"]["decimal"].startswith("24.")

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "examples", "--family", "8t", "--t", "1", "--count", "0")
        assert code == 0 and "(no entries)" in out

    def test_bad_t(self, capsys):
        code, _, err = run(capsys, "examples", "--family", "8t", "--t", "9", "--count", "1")
        assert code == 1


class TestScan:
    def test_header_and_rows(self, capsys):
        code, out, _ = run(capsys, "scan", "--bmax", "16")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "a,b,r,N,u,v,t,s_squared,jr_decimal"
        rows = {tuple(line.split(",")[:3]) for line in lines[1:]}
        assert ("3", "4", "2") in rows and ("15", "16", "2") in rows
        row342 = next(line for line in lines[1:] if line.startswith("3,4,2,"))
        assert row342.split(",")[7] == "8"

    def test_empty_scan(self, capsys):
        code, out, _ = run(capsys, "scan", "--bmax", "3")
        assert code == 0 and out.splitlines() == ["a,b,r,N,u,v,t,s_squared,jr_decimal"]

    def test_bmax20_includes_1_20_10(self, capsys):
        _, out, _ = run(capsys, "scan", "--bmax", "20")
        row = next(line for line in out.splitlines() if line.startswith("1,20,10,"))
        assert row.split(",")[7] == "400"

    def test_sorted_by_b_a_r(self, capsys):
        _, out, _ = run(capsys, "scan", "--bmax", "24")
        keys = [tuple(map(int, line.split(",")[:3])) for line in out.splitlines()[1:]]
        assert keys == sorted(keys, key=lambda k: (k[1], k[0], k[2]))

    def test_out_file_lf_endings(self, capsys, tmp_path):
        target = tmp_path / "scan.csv"
        code, out, _ = run(capsys, "scan", "--bmax", "12", "--out", str(target))
        assert code == 0 and out == ""
        data = target.read_bytes()
        assert b"\r" not in data and data.decode("utf-8").startswith("a,b,r,")

    def test_plot_file_written(self, capsys, tmp_path):
        target = tmp_path / "scan.png"
        code, _, _ = run(capsys, "scan", "--bmax", "16", "--plot", str(target))
        assert code == 0 and target.exists() and target.stat().st_size > 0


class TestDistinct:
    def test_distinct(self, capsys):
        code, out, _ = run(capsys, "distinct", "3", "4", "2", "15", "16", "2")
        assert code == 0 and out.strip() == "distinct"

    def test_inconclusive(self, capsys):
        code, out, _ = run(capsys, "distinct", "3", "4", "2", "3", "4", "2")
        assert code == 0 and out.strip() == "inconclusive"

    def test_odd_r_rejected(self, capsys):
        code, out, _ = run(capsys, "distinct", "23", "24", "3", "3", "4", "2")
        assert code == 1

    def test_invalid_triple(self, capsys):
        code, out, _ = run(capsys, "distinct", "3", "4", "3", "3", "4", "2")
        assert code == 1 and "r divides b" in out
