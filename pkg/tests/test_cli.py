import csv
import io
import json

import pytest

from artin_progressions.constants import CSV_HEADER, EXIT_INVALID_INPUT, EXIT_OK, EXIT_VERIFICATION_FAILED, HEURISTIC_CSV_HEADER


def _csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def test_density_rodier_class(run_cli):
    code, out, _ = run_cli("density", "-g", "2", "-f", "28", "-a", "3", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[0] == ",".join(CSV_HEADER)
    [row] = _csv(out)
    assert row["coefficient"] == "7/82"
    assert row["numeric"] == "0.0319230572601"
    assert row["method"] == "closed"
    assert row["value"] == "" and row["error"] == ""


def test_density_defaults_to_whole_set(run_cli):
    code, out, _ = run_cli("density", "-g", "2", "--format", "csv")
    assert code == EXIT_OK
    [row] = _csv(out)
    assert (row["a"], row["f"], row["coefficient"]) == ("1", "1", "1")


def test_density_second_closed_form(run_cli):
    _, first, _ = run_cli("density", "-g", "-3", "-f", "12", "--format", "csv")
    code, second, _ = run_cli("density", "-g", "-3", "-f", "12", "--format", "csv", "--method", "closed_v2")
    assert code == EXIT_OK
    assert [r["coefficient"] for r in _csv(first)] == [r["coefficient"] for r in _csv(second)]
    assert {r["method"] for r in _csv(second)} == {"closed_v2"}


def test_csv_and_json_carry_the_same_rows(run_cli):
    _, as_csv, _ = run_cli("density", "-g", "3", "-f", "8", "--format", "csv")
    _, as_json, _ = run_cli("density", "-g", "3", "-f", "8", "--format", "json")
    assert _csv(as_csv) == json.loads(as_json)


def test_density_table_output(run_cli):
    code, out, _ = run_cli("density", "-g", "2", "-f", "28", "-a", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split() == CSV_HEADER
    assert "7/82" in lines[1]


def test_density_accepts_power_notation(run_cli):
    code, out, _ = run_cli("density", "-g", "21^7", "-f", "3", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["g"] for row in rows] == [str(21**7)] * 2
    assert rows[0]["coefficient"] == rows[1]["coefficient"]


@pytest.mark.parametrize(
    "argv, message",
    [
        (("density", "-g", "4", "-f", "3"), "not in G"),
        (("density", "-g", "0"), "not in G"),
        (("density", "-g", "2", "-f", "4", "-a", "2"), "gcd"),
        (("density", "-g", "2", "-f", "0"), "modulus"),
        (("scan", "-g", "2", "-x", "10^9"), "MAX_SCAN_BOUND"),
    ],
)
def test_rejected_inputs(run_cli, argv, message):
    code, out, err = run_cli(*argv)
    assert code == EXIT_INVALID_INPUT
    assert out == ""
    assert message in err


@pytest.mark.parametrize(
    "argv",
    [
        ("density", "-g", "2", "--digits", "31"),
        ("density", "-g", "2", "--digits", "0"),
        ("density", "-g", "two"),
        ("density", "-g", "2^999999999"),
        ("density", "-f", "4"),
        ("nonsense",),
    ],
)
def test_parser_errors(run_cli, argv):
    code, _, _ = run_cli(*argv)
    assert code == EXIT_INVALID_INPUT


def test_help_exits_cleanly(run_cli):
    code, out, _ = run_cli("--help")
    assert code == EXIT_OK
    assert "density" in out


@pytest.mark.parametrize(
    "g, expected",
    [
        ("2", ["1", "2", "4"]),
        ("3", ["1", "2"]),
        ("5", ["1", "2", "4", "8"]),
        ("21^7", ["1", "2", "3", "4", "6", "8"]),
    ],
)
def test_classify_wud_moduli(run_cli, g, expected):
    code, out, _ = run_cli("classify", "-g", g, "--fmax", "8", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["f"] for row in rows] == [str(f) for f in range(1, 9)]
    assert [row["f"] for row in rows if row["is_wud"] == "true"] == expected


def test_classify_lists_zero_classes(run_cli):
    _, out, _ = run_cli("classify", "-g", "5", "--fmax", "5", "--format", "csv")
    row = _csv(out)[4]
    assert row["zero_classes"] == "1 4"
    assert row["is_wud"] == "false"


def test_verify_passes(run_cli):
    code, out, _ = run_cli("verify", "-g", "2", "-N", "16", "-x", "10000", "--tolerance", "0.03")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split()[0] == "a"
    assert lines[1].split()[-1] == "pass"


def test_verify_reports_exact_zero(run_cli):
    code, out, _ = run_cli("verify", "-g", "5", "-f", "5", "-N", "100", "-x", "10^5", "--tolerance", "0.05")
    assert code == EXIT_OK
    assert out.count("exact-zero(DiscriminantSplits; hits=0)") == 2


def test_verify_fails_on_tight_tolerance(run_cli):
    code, out, _ = run_cli("verify", "-g", "2", "-f", "4", "-N", "100", "-x", "10000", "--tolerance", "1e-9")
    assert code == EXIT_VERIFICATION_FAILED
    assert "empirical:FAIL" in out


def test_verify_machine_output(run_cli):
    code, out, _ = run_cli("verify", "-g", "2", "-f", "4", "-N", "100", "-x", "10000", "--tolerance", "0.05", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [(row["a"], row["method"]) for row in rows] == [
        (a, method) for a in ("1", "3") for method in ("closed", "closed_v2", "series", "empirical")
    ]
    series = [row for row in rows if row["method"] == "series"]
    assert all(row["error"] for row in series)


def test_scan_counts_primes_with_root_two(run_cli):
    code, out, _ = run_cli("scan", "-g", "2", "-x", "100", "--format", "json")
    assert code == EXIT_OK
    [row] = json.loads(out)
    assert row["hits"] == "12"


def test_scan_single_class(run_cli):
    _, out, _ = run_cli("scan", "-g", "2", "-f", "4", "-a", "3", "-x", "1000", "--format", "json")
    assert [row["a"] for row in json.loads(out)] == ["3"]


def test_heuristic_columns(run_cli):
    code, out, _ = run_cli("heuristic", "-g", "2", "-f", "4", "-x", "10000", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["a"] for row in rows] == ["1", "3"]
    assert all(list(row) == HEURISTIC_CSV_HEADER for row in rows)


def test_output_file(run_cli, tmp_path):
    target = tmp_path / "rodier.csv"
    code, out, _ = run_cli("density", "-g", "2", "-f", "28", "--format", "csv", "--output", str(target))
    assert code == EXIT_OK
    assert out == ""
    rows = _csv(target.read_text())
    assert [row["a"] for row in rows if row["coefficient"] == "7/82"] == ["3", "19", "27"]
