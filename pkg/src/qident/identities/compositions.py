"""Composition plans: identities proved by chaining other catalog records.

Each plan fixes a base record, maps a sampled parameter point through a
chain of already-verified transformations, and asserts that the chain lands
exactly on another record's statement.  Two plans are shipped:

* applying the two-term Bailey rewriting of a terminating very-well-poised
  sum twice reproduces the rank-one balanced duality transformation;
* the two triangular Watson transformations interchange through the
  inverted-coordinate Sears transformation.

A plan yields labelled assertions ``(label, left, right)``; the verifier
samples base points and compares each pair exactly (all chains here are
terminating, so values are rational).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from ..errors import UnknownIdentity
from ..params import ParamSet
from ..qpoch import qpoch_product
from ..scalars import Scalar
from .core import Side, eval_built_side, eval_side, lookup

Assertion = tuple[str, Scalar, Scalar]


@dataclass(frozen=True)
class CompositionPlan:
    """A named chain check.

    ``base`` is the record whose symbols and dimension signature drive the
    sampling; ``check`` maps one resolved base point to the assertions that
    must all hold for the chain to close.
    """

    id: str
    title: str
    base: str
    check: Callable[[ParamSet], tuple[Assertion, ...]]
    description: str = ""


def _prefactor_value(side: Side, q: Scalar) -> Scalar:
    value: Scalar = side.scale
    if isinstance(value, int):
        value = Fraction(value)
    if side.prefactor_num or side.prefactor_den:
        value = value * qpoch_product(side.prefactor_num, side.prefactor_den, q)
    return value


def _series_value(side: Side, q: Scalar) -> Scalar:
    bare = Side(series=side.series, domain=side.domain, wnm=side.wnm)
    return eval_built_side(bare, q)


def _bailey_twice(p: ParamSet) -> tuple[Assertion, ...]:
    base = lookup("balanced_duality_1d")
    step = lookup("bailey_10w9")
    q = p.q
    a, b, c, d, e, f = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f"))

    first = step.resolve(replace(p, scalars={s: p.scalar(s) for s in "abcdef"}))
    lam = first.scalar("lam")
    # Second application: keep the first two untouched letters as the new
    # moved triple's tail and move the images of c and d.
    second = step.resolve(
        replace(
            p,
            scalars={
                "a": lam,
                "b": lam * b / a,
                "c": e,
                "d": f,
                "e": lam * c / a,
                "f": lam * d / a,
            },
        )
    )
    swapped = base.resolve(replace(p, scalars={**p.scalars, "b": f, "f": b}))

    side1 = step.rhs(first)
    composite = _prefactor_value(side1, q) * eval_side(step, "rhs", second)
    return (
        (
            "first application starts from the duality source sum",
            eval_side(step, "lhs", first),
            eval_side(base, "lhs", p),
        ),
        (
            "second application starts from the first image sum",
            _series_value(side1, q),
            eval_side(step, "lhs", second),
        ),
        (
            "swapping the moved and kept letters fixes the source sum",
            eval_side(base, "lhs", p),
            eval_side(base, "lhs", swapped),
        ),
        (
            "the composite equals the duality image at swapped letters",
            composite,
            eval_side(base, "rhs", swapped),
        ),
    )


def _watson_via_sears(p: ParamSet) -> tuple[Assertion, ...]:
    one = lookup("watson_an_1")
    two = lookup("watson_an_2")
    link = lookup("sears_an_2")
    q = p.q
    a, c, e = p.scalar("a"), p.scalar("c"), p.scalar("e")
    bridge = ParamSet(
        q=q,
        n=p.n,
        m=0,
        order=p.order,
        scalars={
            "a": a * q / (c * e),
            "c": p.scalar("d"),
            "d": a * q / e,
            "e": a * q / c,
        },
        vectors={"b": p.vector("b"), "x": p.vector("x")},
    )
    side1 = one.rhs(p)
    side2 = two.rhs(p)
    side_link = link.rhs(bridge)
    pref1 = _prefactor_value(side1, q)
    return (
        (
            "the link sum equals the first image series",
            eval_side(link, "lhs", bridge),
            _series_value(side1, q),
        ),
        (
            "the transformed link sum equals the second image series",
            _series_value(side_link, q),
            _series_value(side2, q),
        ),
        (
            "the prefactors compose",
            pref1 * _prefactor_value(side_link, q),
            _prefactor_value(side2, q),
        ),
        (
            "the composite equals the second transformation",
            pref1 * eval_built_side(side_link, q),
            eval_side(two, "rhs", p),
        ),
    )


_PLANS: dict[str, CompositionPlan] = {}


def _register(plan: CompositionPlan) -> None:
    _PLANS[plan.id] = plan


_register(
    CompositionPlan(
        id="bailey_twice",
        title="Iterating the Bailey rewriting reproduces the rank-one duality",
        base="balanced_duality_1d",
        check=_bailey_twice,
        description="Apply the two-term Bailey rewriting, split the image's "
        "parameters the other way, apply it again; the chain lands on the "
        "rank-one balanced duality statement with two letters exchanged.",
    )
)

_register(
    CompositionPlan(
        id="watson_via_sears",
        title="The two Watson transformations interchange through Sears",
        base="watson_an_1",
        check=_watson_via_sears,
        description="The image series of the first Watson transformation, "
        "read as a balanced sum, maps under the inverted-coordinate Sears "
        "transformation onto the image series of the second; prefactors "
        "multiply accordingly.",
    )
)


def composition_plans() -> tuple[CompositionPlan, ...]:
    """All plans, sorted by id."""
    return tuple(_PLANS[k] for k in sorted(_PLANS))


def lookup_composition(ident: str) -> CompositionPlan:
    try:
        return _PLANS[ident]
    except KeyError:
        raise UnknownIdentity(f"no composition plan with id {ident!r}") from None
