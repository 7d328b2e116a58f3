"""Acceptance gate: one check per shipping criterion, one verdict line each.

Every test prints ``PASS <criterion>: <detail>`` (or ``FAIL``) so a plain
``pytest -v -s tests/test_acceptance.py`` doubles as the release checklist.
"""

import time
from dataclasses import replace
from decimal import Decimal
from fractions import Fraction
from itertools import permutations

from qident.identities import (
    Nonterminating,
    Terminating,
    build_side,
    catalog,
    composition_plans,
    lookup,
)
from qident.qpoch import qpoch
from qident.series import (
    AnSeries,
    Box,
    VwpSpec,
    Weight,
    WnmSpec,
    eval_an_series,
    eval_wnm,
    is_vwp_balanced,
    wnm_balance_params,
)
from qident.verifier import (
    TrialDims,
    dims_grid,
    sample_params,
    verify,
    verify_composition,
    verify_reduction,
)

F = Fraction
Q = F(1, 3)


def _conclude(tag, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} {tag}: {detail}")
    assert ok, f"{tag}: {detail}"


def _dims_fields(label):
    parts = dict(piece.split("=") for piece in label.split())
    order = int(parts["N"]) if "N" in parts else None
    box = tuple(int(b) for b in parts["M"].split(",")) if "M" in parts else None
    return int(parts["n"]), int(parts["m"]), order, box


def _terminating():
    return [r for r in catalog() if isinstance(r.termination_class, Terminating)]


def _nonterminating():
    return [r for r in catalog() if isinstance(r.termination_class, Nonterminating)]


# ---------------------------------------------------------------------------
# criterion 1: every terminating record, exact, full dimension sweep


def test_terminating_catalog_verifies_exactly():
    records = _terminating()
    started = time.monotonic()
    problems = []
    for rec in records:
        report = verify(rec, trials=5, seed=0)
        if not report.ok or report.mode != "exact":
            problems.append(f"{rec.id}: {report.verdict.label}")
            continue
        if any(t.residual != "0" for t in report.trials):
            problems.append(f"{rec.id}: nonzero residual")
            continue
        orders, totals = set(), set()
        for t in report.trials:
            n, m, order, box = _dims_fields(t.dims)
            assert (n, m) in dims_grid(rec)
            if order is not None:
                orders.add(order)
            if box is not None:
                totals.add(sum(box))
        if rec.dims.order and orders != {0, 1, 2, 3, 4}:
            problems.append(f"{rec.id}: orders {sorted(orders)}")
        if rec.dims.box is not None and totals != {0, 1, 2, 3, 4}:
            problems.append(f"{rec.id}: box totals {sorted(totals)}")
    elapsed = time.monotonic() - started
    ok = not problems and len(records) >= 40 and elapsed < 600
    _conclude(
        "terminating suite",
        ok,
        f"{len(records)} records x 5 exact trials per (n, m), {elapsed:.1f}s"
        + (f"; problems: {problems}" if problems else ""),
    )


# ---------------------------------------------------------------------------
# criterion 2: every nonterminating record at 60 digits


def test_nonterminating_catalog_at_sixty_digits():
    records = _nonterminating()
    started = time.monotonic()
    problems = []
    for rec in records:
        report = verify(rec, trials=3, seed=0, digits=60)
        if not report.ok or report.mode != "numeric":
            problems.append(f"{rec.id}: {report.verdict.label}")
            continue
        for t in report.trials:
            n, m, _, _ = _dims_fields(t.dims)
            if max(n, m) > 2:
                problems.append(f"{rec.id}: rank {n},{m} too high")
            if Decimal(t.residual) > Decimal("1e-30"):
                problems.append(f"{rec.id}: residual {t.residual}")
    elapsed = time.monotonic() - started
    ok = not problems and len(records) >= 15 and elapsed < 300
    _conclude(
        "nonterminating suite",
        ok,
        f"{len(records)} records x 3 trials at 60 digits, {elapsed:.1f}s"
        + (f"; problems: {problems}" if problems else ""),
    )


# ---------------------------------------------------------------------------
# criterion 3: every reduction link closes


def test_reduction_links_close():
    linked = [rec for rec in catalog() if rec.reductions]
    pairs = {(rec.id, rec.reductions[0].target) for rec in linked}
    assert {
        ("jackson_sum_an", "jackson_8w7_sum"),
        ("rogers_sum_an", "rogers_sum_classical"),
        ("saalschutz_an", "saalschutz"),
        ("watson_an_1", "watson_classical"),
        ("watson_an_2", "watson_classical"),
        ("watson_an_3", "watson_classical"),
        ("watson_an_4", "watson_classical_2"),
        ("sears_an_m1", "sears"),
    } <= pairs
    started = time.monotonic()
    problems = []
    for rec in linked:
        report = verify_reduction(rec, trials=5, seed=0)
        if not report.ok:
            problems.append(f"{rec.id}->{report.target}: {report.verdict.label}")
    elapsed = time.monotonic() - started
    ok = not problems and len(linked) >= 30
    _conclude(
        "reduction coherence",
        ok,
        f"{len(linked)} links, {elapsed:.1f}s"
        + (f"; problems: {problems}" if problems else ""),
    )


# ---------------------------------------------------------------------------
# criterion 4: composed transformations


def test_composition_chains_close():
    plans = composition_plans()
    assert [plan.id for plan in plans] == ["bailey_twice", "watson_via_sears"]
    problems = []
    for plan in plans:
        report = verify_composition(plan, trials=3, seed=0)
        if not report.ok or len(report.trials) != 3:
            problems.append(f"{plan.id}: {report.verdict.label}")
    _conclude(
        "composition checks",
        not problems,
        "2 chains x 3 points" + (f"; problems: {problems}" if problems else ""),
    )


# ---------------------------------------------------------------------------
# criterion 5: evaluator properties


def _permutation_symmetry_holds():
    base = dict(u=(F(1, 5),), v=(F(3, 4),), q=Q, z=F(1, 6), s=F(2, 7))
    a = (F(1, 3), F(2, 9), F(5, 11))
    x = (F(1), F(1, 4), F(3, 7))
    for rank in (1, 2, 3):
        want = eval_wnm(WnmSpec(a=a[:rank], x=x[:rank], **base), Weight(3))
        for order in permutations(range(rank)):
            spec = WnmSpec(
                a=tuple(a[i] for i in order), x=tuple(x[i] for i in order), **base
            )
            if eval_wnm(spec, Weight(3)) != want:
                return False
    series = AnSeries(
        q=Q,
        x=x,
        z=F(1, 5),
        vwp=F(2, 7),
        x_exponent=-1,
        e2_exponent=1,
        cross_num=((F(1, 2), F(2, 9), F(5, 11)),),
        cross_den=((F(1, 5), F(4, 21), F(2, 11)),),
        per_index_num=((F(1, 6) * x[0], F(1, 6) * x[1], F(1, 6) * x[2]),),
        per_index_den=((F(8, 9) * x[0], F(8, 9) * x[1], F(8, 9) * x[2]),),
        weight_num=(F(2, 11),),
        weight_den=(F(7, 9),),
    )
    want = eval_an_series(series, Weight(3))
    for order in permutations(range(3)):

        def pick(row):
            return tuple(row[i] for i in order)

        shuffled = replace(
            series,
            x=pick(series.x),
            cross_num=tuple(pick(r) for r in series.cross_num),
            cross_den=tuple(pick(r) for r in series.cross_den),
            per_index_num=tuple(pick(r) for r in series.per_index_num),
            per_index_den=tuple(pick(r) for r in series.per_index_den),
        )
        if eval_an_series(shuffled, Weight(3)) != want:
            return False
    return True


def _termination_walls_hold():
    weighted = AnSeries(
        q=Q, x=(F(1), F(1, 4)), z=F(1, 3), cross_den=((Q, Q),), weight_num=(Q**-2,)
    )
    if eval_an_series(weighted, Weight(2)) != eval_an_series(weighted, Weight(7)):
        return False
    boxed = AnSeries(
        q=Q,
        x=(F(1), F(1, 4)),
        z=F(1, 3),
        cross_den=((Q, Q),),
        per_index_num=((Q**-1, Q**-2),),
    )
    return eval_an_series(boxed, Box((1, 2))) == eval_an_series(boxed, Weight(9))


def _factorial_shift_holds():
    for a in (F(2, 5), F(5, 3), F(-2, 7)):
        for j in range(5):
            for k in range(5):
                if qpoch(a, Q, j + k) != qpoch(a, Q, j) * qpoch(a * Q**j, Q, k):
                    return False
    return True


def _negative_power_vanishing_holds():
    for order in range(5):
        for k in range(7):
            vanishes = qpoch(Q**-order, Q, k) == 0
            if vanishes != (k > order):
                return False
    return True


def _generic_dims(rec):
    n, m = dims_grid(rec)[0]
    order = 3 if rec.dims.order else None
    length = rec.dims.box_length(n, m)
    box = tuple(1 for _ in range(length)) if rec.dims.box is not None else None
    return TrialDims(n=n, m=m, order=order, box=box)


def _catalog_well_poised_sides_balanced():
    checked = 0
    for rec in catalog():
        p = sample_params(rec, _generic_dims(rec), seed=11)
        for which in ("lhs", "rhs"):
            side = build_side(rec, which, p)
            if isinstance(side.series, VwpSpec):
                spec = side.series
                if not is_vwp_balanced(spec.s, spec.params, spec.q, spec.z):
                    return 0
                checked += 1
            if side.wnm is not None:
                s, flat, z = wnm_balance_params(side.wnm)
                if not is_vwp_balanced(s, flat, p.q, z):
                    return 0
                checked += 1
    return checked


def _precision_never_flips():
    for rec in _nonterminating():
        lo = verify(rec, trials=2, seed=0, digits=40)
        hi = verify(rec, trials=2, seed=0, digits=80)
        if lo.ok and not hi.ok:
            return False
    return True


def test_evaluator_properties_hold():
    started = time.monotonic()
    checks = {
        "permutation symmetry (all orders, rank <= 3)": _permutation_symmetry_holds(),
        "termination walls (weight and box)": _termination_walls_hold(),
        "factorial shift": _factorial_shift_holds(),
        "negative-power vanishing": _negative_power_vanishing_holds(),
        "balanced well-poised sides": _catalog_well_poised_sides_balanced() == 40,
        "40 -> 80 digit monotonicity": _precision_never_flips(),
    }
    elapsed = time.monotonic() - started
    failed = [name for name, ok in checks.items() if not ok]
    _conclude(
        "evaluator properties",
        not failed,
        f"{len(checks)} property groups, {elapsed:.1f}s"
        + (f"; failed: {failed}" if failed else ""),
    )


# ---------------------------------------------------------------------------
# criterion 6: rectangular records against their triangular parents


def test_rectangular_records_match_their_triangular_parents():
    records = [r for r in _terminating() if r.dims.box is not None]
    assert {rec.id for rec in records} == {
        "saalschutz_an_box",
        "sears_an_1_box",
        "sears_an_2_box",
        "sears_an_3_box",
        "terminating_8w7_an_same_dim_box",
        "watson_an_1_box",
        "watson_an_2_box",
        "watson_an_3_box",
        "watson_an_4_box",
    }
    started = time.monotonic()
    problems = []
    for rec in records:
        pinned = verify_reduction(rec, trials=5, seed=0)
        if not pinned.ok:
            problems.append(f"{rec.id} pinned: {pinned.verdict.label}")
        direct = verify(rec, trials=3, seed=0)
        if not direct.ok or any(t.residual != "0" for t in direct.trials):
            problems.append(f"{rec.id} direct: {direct.verdict.label}")
    elapsed = time.monotonic() - started
    _conclude(
        "rectangular records",
        not problems,
        f"{len(records)} records, pinned + 3 generic trials, {elapsed:.1f}s"
        + (f"; problems: {problems}" if problems else ""),
    )
