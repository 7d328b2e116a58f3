"""Command-line interface: output formats, exit codes, config evaluation."""

import json
from fractions import Fraction

import pytest

from qident.cli import EXIT_ERROR, EXIT_PASS, EXIT_SKIPPED, main
from qident.qpoch import qpoch

F = Fraction
Q = F(1, 3)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# list / describe


def test_list_names_every_record(capsys):
    code, out, _ = run(capsys, "list")
    assert code == EXIT_PASS
    lines = [line for line in out.splitlines() if line]
    assert sum("terminating" in line for line in lines) >= 55
    assert any(line.startswith("balanced_duality_1d") for line in lines)


def test_list_json_matches_catalog_schema(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    assert code == EXIT_PASS
    docs = json.loads(out)
    assert len(docs) >= 55
    for doc in docs:
        assert {"id", "group", "dims", "termination"} <= set(doc)


def test_describe_shows_constraints(capsys):
    code, out, _ = run(capsys, "describe", "jackson_sum_an")
    assert code == EXIT_PASS
    assert "jackson_sum_an" in out
    assert "solved by balancing: e" in out
    assert "reduces to jackson_8w7_sum" in out
    code, out, _ = run(capsys, "describe", "jackson_sum_an", "--format", "json")
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["constraints"] == ["e = q^(1 + N) * a^(2) * b^(-1) * c^(-1) * d^(-1)"]


def test_describe_unknown_id(capsys):
    code, _, err = run(capsys, "describe", "nope")
    assert code == EXIT_ERROR
    assert "nope" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_exact_record(capsys):
    code, out, _ = run(
        capsys, "verify", "jackson_sum_an", "--n", "2", "--N", "2", "--trials", "3"
    )
    assert code == EXIT_PASS
    assert "Pass" in out


def test_verify_json_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, _ = run(
        capsys,
        "verify",
        "saalschutz_an",
        "--trials",
        "2",
        "--format",
        "json",
        "--out",
        str(target),
    )
    assert code == EXIT_PASS
    doc = json.loads(target.read_text())
    assert doc["id"] == "saalschutz_an"
    assert doc["verdict"] == {"status": "pass"}
    assert len(doc["trials"]) == 2 * len(doc["dims"])


def test_verify_unknown_record(capsys):
    code, _, err = run(capsys, "verify", "no_such_record")
    assert code == EXIT_ERROR
    assert "no_such_record" in err


def test_verify_insufficient_digits_skips(capsys):
    code, out, _ = run(capsys, "verify", "euler_mult", "--digits", "20", "--trials", "1")
    assert code == EXIT_SKIPPED
    assert "Skipped" in out


def test_verify_reduction_flag(capsys):
    code, out, _ = run(capsys, "verify", "watson_an_1", "--reduction", "--trials", "2")
    assert code == EXIT_PASS
    assert "watson_classical" in out


def test_environment_digits_default(capsys, monkeypatch):
    monkeypatch.setenv("QIDENT_DIGITS", "20")
    code, _, _ = run(capsys, "verify", "euler_mult", "--trials", "1")
    assert code == EXIT_SKIPPED
    # an explicit flag beats the environment
    code, _, _ = run(capsys, "verify", "euler_mult", "--trials", "1", "--digits", "40")
    assert code == EXIT_PASS


# ---------------------------------------------------------------------------
# suite


def test_suite_filter_tsv(capsys, tmp_path):
    target = tmp_path / "summary.tsv"
    code, _, _ = run(
        capsys,
        "suite",
        "--only",
        "rogers_sum_classical",
        "--trials",
        "1",
        "--format",
        "tsv",
        "--out",
        str(target),
    )
    assert code == EXIT_PASS
    lines = target.read_text().strip().splitlines()
    assert lines[0].startswith("identity\t")
    assert all("rogers_sum_classical" in line for line in lines[1:])


# ---------------------------------------------------------------------------
# eval


def _write(tmp_path, doc):
    path = tmp_path / "series.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_eval_terminating_well_poised_sum(capsys, tmp_path):
    # 6-parameter very-well-poised sum against its closed product form
    a, b, c, n = F(2, 5), F(3, 7), F(5, 11), 2
    cfg = {
        "type": "vwp",
        "s": "2/5",
        "params": ["3/7", "5/11", "9"],
        "q": "1/3",
        "z": str(a * Q ** (n + 1) / (b * c)),
        "termination": n,
    }
    code, out, _ = run(capsys, "eval", _write(tmp_path, cfg))
    assert code == EXIT_PASS
    value = F(out.splitlines()[0].split("= ")[1])
    want = (
        qpoch(a * Q, Q, n)
        * qpoch(a * Q / (b * c), Q, n)
        / (qpoch(a * Q / b, Q, n) * qpoch(a * Q / c, Q, n))
    )
    assert value == want
    assert f"terms = {n + 1}" in out


def test_eval_empty_domain_is_one(capsys, tmp_path):
    cfg = {
        "type": "wnm",
        "s": "2/5",
        "a": ["1/3", "1/7"],
        "x": ["1", "1/4"],
        "u": ["1/5"],
        "v": ["3/4"],
        "q": "1/3",
        "z": "1/2",
        "domain": {"kind": "weight", "N": 0},
    }
    code, out, _ = run(capsys, "eval", _write(tmp_path, cfg))
    assert code == EXIT_PASS
    assert out.splitlines()[0] == "value = 1"


def test_eval_infinite_domain_reports_tail(capsys, tmp_path):
    cfg = {
        "type": "an",
        "x": ["1", "1/4"],
        "z": "1/5",
        "q": "1/3",
        "vandermonde": False,
        "domain": {"kind": "infinite"},
        "digits": 30,
    }
    code, out, _ = run(capsys, "eval", _write(tmp_path, cfg))
    assert code == EXIT_PASS
    assert "tail <= " in out
    value = float(out.splitlines()[0].split("= ")[1])
    assert abs(value - (1 / (1 - 0.2)) ** 2) < 1e-12


def test_eval_malformed_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"type": "phi",')
    code, _, err = run(capsys, "eval", str(path))
    assert code == EXIT_ERROR
    assert "line" in err and "column" in err


def test_eval_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "eval", str(tmp_path / "absent.json"))
    assert code == EXIT_ERROR
    assert "cannot read" in err


def test_eval_unknown_series_type(capsys, tmp_path):
    code, _, err = run(capsys, "eval", _write(tmp_path, {"type": "zeta", "q": "1/3"}))
    assert code == EXIT_ERROR
    assert "zeta" in err


# ---------------------------------------------------------------------------
# usage errors


def test_missing_subcommand_arguments_exit_with_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == EXIT_ERROR
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_ERROR


def test_bad_dims_flag_reports_error(capsys):
    code, _, err = run(capsys, "verify", "jackson_sum_an", "--n", "0")
    assert code == EXIT_ERROR
    assert err
