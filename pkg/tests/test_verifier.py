"""Verification engine: sampling, trials, verdicts, reductions, suites."""

import json
from dataclasses import replace
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qident.errors import InvalidDims, MappingUndefined
from qident.identities import lookup, lookup_composition
from qident.params import eval_monomial
from qident.verifier import (
    Fail,
    Pass,
    Skipped,
    TSV_HEADER,
    TrialDims,
    dims_grid,
    reports_to_tsv,
    run_suite,
    sample_params,
    suite_summary,
    verify,
    verify_composition,
    verify_reduction,
)

F = Fraction


# ---------------------------------------------------------------------------
# dimension handling


def test_trial_dims_label():
    assert TrialDims(n=2, m=1, order=3).label() == "n=2 m=1 N=3"
    assert TrialDims(n=1, m=0, box=(2, 0)).label() == "n=1 m=0 M=2,0"


def test_trial_dims_validate_rejects_out_of_range():
    with pytest.raises(InvalidDims):
        TrialDims(n=0, m=0).validate()
    with pytest.raises(InvalidDims):
        TrialDims(n=1, m=0, order=-1).validate()
    with pytest.raises(InvalidDims):
        TrialDims(n=1, m=1, box=(-1, 2)).validate()


def test_dims_grid_respects_signatures():
    assert dims_grid(lookup("balanced_duality")) == (
        (1, 1),
        (2, 1),
        (1, 2),
        (2, 2),
        (3, 2),
    )
    assert dims_grid(lookup("jackson_sum_an")) == ((1, 0), (2, 0), (3, 0))
    assert dims_grid(lookup("rogers_sum_classical")) == ((1, 0),)
    # nonterminating families stop at rank 2
    for pair in dims_grid(lookup("euler_mult")):
        assert max(pair) <= 2


# ---------------------------------------------------------------------------
# sampling


def test_sampler_is_deterministic():
    dims = TrialDims(n=2, m=0, order=2)
    a = sample_params("jackson_sum_an", dims, seed=7, trial=1)
    b = sample_params("jackson_sum_an", dims, seed=7, trial=1)
    assert a.canonical() == b.canonical()
    assert a.digest() == b.digest()


def test_sampler_varies_with_trial_and_seed():
    dims = TrialDims(n=2, m=0, order=2)
    base = sample_params("jackson_sum_an", dims, seed=7, trial=1)
    assert base.canonical() != sample_params(
        "jackson_sum_an", dims, seed=7, trial=2
    ).canonical()
    assert base.canonical() != sample_params(
        "jackson_sum_an", dims, seed=8, trial=1
    ).canonical()


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_sampled_point_satisfies_balancing_exactly(seed):
    rec = lookup("jackson_sum_an")
    p = sample_params(rec, TrialDims(n=2, m=0, order=3), seed=seed)
    for rule in rec.constraints:
        assert p.scalar(rule.solve_for) == eval_monomial(rule.monomial, p)


def test_sampled_coordinates_are_distinct():
    p = sample_params("jackson_sum_an", TrialDims(n=3, m=0, order=2), seed=3)
    x = p.vector("x")
    assert len(set(x)) == len(x)


def test_sampled_nonterminating_point_respects_margin():
    rec = lookup("euler_mult")
    p = sample_params(rec, TrialDims(n=2, m=1), seed=5, digits=60)
    assert max(abs(v) for v in rec.termination_class.moduli(p)) < F(4, 5)


# ---------------------------------------------------------------------------
# verification verdicts


def test_exact_verification_has_zero_residuals():
    rep = verify(lookup("rogers_sum_classical"), trials=4, seed=0)
    assert isinstance(rep.verdict, Pass)
    assert rep.mode == "exact"
    assert rep.digits is None
    assert all(t.residual == "0" for t in rep.trials)


def test_numeric_verification_stays_within_tolerance():
    rep = verify(lookup("euler_mult"), trials=2, seed=0, digits=40)
    assert rep.ok
    assert rep.mode == "numeric"
    assert all(Decimal(t.residual) <= Decimal(10) ** -20 for t in rep.trials)


def test_terminating_record_can_be_forced_numeric():
    rep = verify(lookup("rogers_sum_classical"), trials=2, seed=0, digits=40, mode="numeric")
    assert rep.ok
    assert rep.mode == "numeric"


def test_low_precision_request_skips():
    rep = verify(lookup("euler_mult"), trials=1, seed=0, digits=20)
    assert isinstance(rep.verdict, Skipped)
    assert "digits" in rep.verdict.reason


def test_wrong_closed_form_fails_on_first_trial():
    orig = lookup("rogers_sum_classical")

    def doubled(p, _build=orig.rhs):
        side = _build(p)
        return replace(side, scale=side.scale * 2)

    broken = replace(orig, rhs=doubled)
    rep = verify(broken, trials=3, seed=0)
    assert isinstance(rep.verdict, Fail)
    assert rep.verdict.trial == 0
    assert not rep.trials[0].ok


# ---------------------------------------------------------------------------
# reports


def test_report_json_is_deterministic():
    first = verify(lookup("saalschutz_an"), trials=3, seed=2)
    second = verify(lookup("saalschutz_an"), trials=3, seed=2)
    a = json.dumps(first.to_json(), sort_keys=True)
    b = json.dumps(second.to_json(), sort_keys=True)
    assert a == b
    assert "elapsed" not in a


def test_report_schema():
    rep = verify(lookup("saalschutz_an"), trials=2, seed=0)
    doc = rep.to_json()
    assert set(doc) == {
        "id",
        "kind",
        "target",
        "mode",
        "seed",
        "digits",
        "dims",
        "trials",
        "verdict",
    }
    assert doc["kind"] == "identity"
    assert doc["verdict"] == {"status": "pass"}
    for entry in doc["trials"]:
        assert set(entry) == {
            "trial",
            "dims",
            "digest",
            "lhs",
            "rhs",
            "residual",
            "retries",
            "ok",
        }


def test_tsv_summary_lines():
    reports = [verify(lookup("rogers_sum_classical"), trials=1, seed=0)]
    text = reports_to_tsv(reports)
    lines = text.strip().splitlines()
    assert lines[0] == TSV_HEADER
    assert lines[1].startswith("rogers_sum_classical\tidentity\texact")
    assert lines[1].endswith("Pass")


# ---------------------------------------------------------------------------
# reductions and compositions


def test_reduction_to_classical_formula():
    rep = verify_reduction(lookup("watson_an_1"), trials=3, seed=0)
    assert rep.ok
    assert rep.kind == "reduction"
    assert rep.target == "watson_classical"


def test_rectangular_record_reduces_to_triangular_parent():
    rep = verify_reduction(lookup("watson_an_1_box"), trials=3, seed=0)
    assert rep.ok
    assert rep.target == "watson_an_1"


def test_reduction_with_unknown_target_raises():
    with pytest.raises(MappingUndefined):
        verify_reduction(lookup("watson_an_1"), target="rogers_sum_classical")
    with pytest.raises(MappingUndefined):
        verify_reduction(lookup("rogers_sum_classical"))


def test_composition_reports():
    rep = verify_composition(lookup_composition("bailey_twice"), trials=2, seed=0)
    assert rep.ok
    assert rep.kind == "composition"
    assert len(rep.trials) == 2


# ---------------------------------------------------------------------------
# precision behaviour and suites


def test_more_digits_never_flips_a_pass():
    rec = lookup("euler_mult")
    lo = verify(rec, trials=2, seed=0, digits=40)
    hi = verify(rec, trials=2, seed=0, digits=80)
    assert not (lo.ok and isinstance(hi.verdict, Fail))
    assert hi.ok


def test_suite_filter_and_summary():
    reports = run_suite(only=("rogers_sum_classical",), trials=2, seed=0)
    assert reports
    assert all(r.id == "rogers_sum_classical" for r in reports)
    counts = suite_summary(reports)
    assert counts["pass"] == len(reports)
    assert counts["fail"] == 0


def test_suite_group_filter_includes_reductions():
    reports = run_suite(only=("watson",), trials=1, seed=0)
    kinds = {r.kind for r in reports}
    assert "identity" in kinds
    assert "reduction" in kinds
    assert all("watson" in (r.target or r.id) or r.id.startswith("watson") for r in reports)
