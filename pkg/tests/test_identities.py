"""Identity catalog: records, constraints, exact evaluations, compositions."""

import json
from fractions import Fraction

import pytest

from qident.errors import MissingParameter, UnknownIdentity
from qident.identities import (
    Nonterminating,
    Terminating,
    build_side,
    catalog,
    catalog_json,
    composition_plans,
    eval_side,
    lookup,
    lookup_composition,
    record_summary,
)
from qident.params import ParamSet, eval_monomial

F = Fraction
Q = F(1, 3)


# ---------------------------------------------------------------------------
# registry shape


def test_catalog_is_sorted_and_unique():
    ids = [rec.id for rec in catalog()]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_catalog_size():
    assert len(catalog()) >= 55


def test_catalog_covers_expected_families():
    ids = {rec.id for rec in catalog()}
    assert {
        "balanced_duality",
        "balanced_duality_1d",
        "jackson_sum_an",
        "rogers_sum_an",
        "saalschutz_an",
        "sears_an",
        "sears_reversed_an",
        "bailey_10w9",
        "watson_an_1",
        "watson_an_4_box",
        "terminating_8w7_an",
        "euler_mult",
        "karlsson_minton_an",
        "nonterminating_8w7_an",
    } <= ids


def test_lookup_unknown_id_raises():
    with pytest.raises(UnknownIdentity):
        lookup("no_such_identity")


def test_every_record_has_either_finite_or_convergent_class():
    for rec in catalog():
        assert isinstance(rec.termination_class, (Terminating, Nonterminating))
        if isinstance(rec.termination_class, Nonterminating):
            assert callable(rec.termination_class.moduli)


def test_record_summary_and_catalog_json_round_trip():
    doc = record_summary(lookup("jackson_sum_an"))
    assert doc["id"] == "jackson_sum_an"
    assert doc["dims"]["order"] is True
    assert doc["termination"] == "terminating"
    assert [v["name"] for v in doc["vectors"]] == ["b", "x"]
    everything = catalog_json()
    assert len(everything) == len(catalog())
    assert json.loads(json.dumps(everything)) == everything


# ---------------------------------------------------------------------------
# balancing constraints


def test_duality_constraint_solves_last_scalar():
    rec = lookup("balanced_duality_1d")
    p = rec.resolve(
        ParamSet(
            q=Q,
            order=2,
            scalars={
                "a": F(2, 5),
                "b": F(1, 2),
                "c": F(1, 7),
                "d": F(3, 4),
                "e": F(5, 8),
                "f": F(2, 7),
            },
        )
    )
    want = Q**2 * F(2, 5) ** 3 / (F(1, 2) * F(1, 7) * F(3, 4) * F(5, 8) * F(2, 7) ** 2)
    assert p.scalar("mu") == want


def test_bailey_constraint_solves_last_scalar():
    rec = lookup("bailey_10w9")
    p = rec.resolve(
        ParamSet(
            q=Q,
            order=3,
            scalars={
                "a": F(2, 5),
                "b": F(1, 2),
                "c": F(1, 7),
                "d": F(3, 4),
                "e": F(5, 8),
                "f": F(2, 7),
            },
        )
    )
    assert p.scalar("lam") == Q * F(2, 5) ** 2 / (F(1, 2) * F(1, 7) * F(3, 4))


def test_jackson_constraint_uses_vector_product_and_order():
    rec = lookup("jackson_sum_an")
    p = rec.resolve(
        ParamSet(
            q=Q,
            n=2,
            order=1,
            scalars={"a": F(2, 5), "c": F(1, 7), "d": F(3, 4)},
            vectors={"b": (F(1, 2), F(2, 9)), "x": (F(1), F(1, 5))},
        )
    )
    B = F(1, 2) * F(2, 9)
    assert p.scalar("e") == Q**2 * F(2, 5) ** 2 / (B * F(1, 7) * F(3, 4))
    # the recorded rule and the hand computation agree
    rule = rec.constraints[0]
    assert p.scalar(rule.solve_for) == eval_monomial(rule.monomial, p)


def test_resolve_reports_missing_symbols():
    rec = lookup("balanced_duality_1d")
    with pytest.raises(MissingParameter):
        rec.resolve(ParamSet(q=Q, order=2, scalars={"a": F(2, 5)}))


# ---------------------------------------------------------------------------
# exact side evaluations


def _jackson_point(order):
    rec = lookup("jackson_sum_an")
    return rec, rec.resolve(
        ParamSet(
            q=Q,
            n=2,
            order=order,
            scalars={"a": F(2, 5), "c": F(1, 7), "d": F(3, 4)},
            vectors={"b": (F(1, 2), F(2, 9)), "x": (F(1), F(1, 5))},
        )
    )


def test_jackson_sum_rank_two_closed_form():
    rec, p = _jackson_point(order=1)
    assert eval_side(rec, "lhs", p) == eval_side(rec, "rhs", p)


def test_order_zero_sides_are_trivial():
    rec, p = _jackson_point(order=0)
    assert eval_side(rec, "lhs", p) == 1
    assert eval_side(rec, "rhs", p) == 1


def test_sears_transformation_rank_two():
    rec = lookup("sears_an_1")
    p = ParamSet(
        q=Q,
        n=2,
        order=2,
        scalars={"a": F(2, 5), "c": F(1, 7), "d": F(3, 4), "e": F(5, 8)},
        vectors={"b": (F(1, 2), F(2, 9)), "x": (F(1), F(1, 5))},
    )
    lhs = eval_side(rec, "lhs", p)
    assert lhs == eval_side(rec, "rhs", p)
    assert lhs == F(-246459829, 2542440331)


def test_duality_sides_match_at_small_order():
    rec = lookup("balanced_duality_1d")
    p = rec.resolve(
        ParamSet(
            q=Q,
            order=2,
            scalars={
                "a": F(2, 5),
                "b": F(1, 2),
                "c": F(1, 7),
                "d": F(3, 4),
                "e": F(5, 8),
                "f": F(2, 7),
            },
        )
    )
    assert eval_side(rec, "lhs", p) == eval_side(rec, "rhs", p)


def test_build_side_rejects_bad_side_name():
    rec, p = _jackson_point(order=1)
    with pytest.raises(ValueError):
        build_side(rec, "middle", p)


# ---------------------------------------------------------------------------
# nonterminating metadata


def test_euler_moduli_bound_the_sampled_geometry():
    rec = lookup("euler_mult")
    p = ParamSet(
        q=Q,
        n=1,
        m=1,
        scalars={"u": F(1, 4), "c": F(3, 5)},
        vectors={"a": (F(1, 2),), "b": (F(2, 7),), "x": (F(1),), "y": (F(1),)},
    )
    values = rec.termination_class.moduli(p)
    assert values
    assert all(abs(v) < 1 for v in values)


def test_reduction_links_point_at_registered_records():
    for rec in catalog():
        for link in rec.reductions:
            target = lookup(link.target)
            assert target.id != rec.id


# ---------------------------------------------------------------------------
# composition plans


def test_composition_plans_registered():
    plans = composition_plans()
    assert [plan.id for plan in plans] == ["bailey_twice", "watson_via_sears"]
    for plan in plans:
        assert lookup(plan.base).id == plan.base
    with pytest.raises(UnknownIdentity):
        lookup_composition("no_such_plan")


def test_iterated_bailey_composition_closes_exactly():
    plan = lookup_composition("bailey_twice")
    rec = lookup(plan.base)
    p = rec.resolve(
        ParamSet(
            q=Q,
            order=2,
            scalars={
                "a": F(2, 5),
                "b": F(1, 2),
                "c": F(1, 7),
                "d": F(3, 4),
                "e": F(5, 8),
                "f": F(2, 7),
            },
        )
    )
    results = plan.check(p)
    assert len(results) == 4
    for label, left, right in results:
        assert left == right, label
