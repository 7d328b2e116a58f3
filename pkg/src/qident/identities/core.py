"""Catalog data model: identity records, evaluable sides, reduction links.

An identity record holds the two sides of one transformation or summation
formula together with everything needed to check it: the free symbols, the
balancing constraints that solve dependent symbols, the dimensional
signature, a termination classification, and links to the specializations
it contains.

Records never store parameter values.  A side is *built* from a ParamSet,
yielding a Side whose series payload has every coefficient baked to a
concrete scalar; prefactors are ratios of q-shifted factorials evaluated by
``qpoch_product``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Union

from ..errors import InvalidDims, QidentError, UnknownIdentity
from ..params import BalancingRule, ParamSet
from ..params import resolve_constraints as _resolve
from ..qpoch import QPochSpec, qpoch_product
from ..scalars import Precision, Scalar, to_decimal
from ..series import (
    AnSeries,
    Domain,
    PhiSpec,
    VwpSpec,
    WnmSpec,
    eval_an_series,
    eval_phi_spec,
    eval_vwp_spec,
    wnm_series,
)

# ---------------------------------------------------------------------------
# Termination classification


@dataclass(frozen=True)
class Terminating:
    """Both sides are finite sums; verification is exact rational arithmetic."""


@dataclass(frozen=True)
class Nonterminating:
    """At least one side is an infinite sum or product.

    ``moduli`` maps a resolved ParamSet to the quantities whose absolute
    values must stay below 1 for every sum and product involved to converge;
    the sampler keeps their maximum under its margin.
    """

    moduli: Callable[[ParamSet], tuple[Fraction, ...]]
    description: str = ""


TerminationClass = Union[Terminating, Nonterminating]

TERMINATING = Terminating()


# ---------------------------------------------------------------------------
# Dimensional signature and symbol declarations


@dataclass(frozen=True)
class DimsSignature:
    """Which dimensions an identity exposes.

    ``n`` and ``m`` are the two summation-family ranks: None means the rank
    is free (any value >= 1), an integer pins it (m=0: no second family).
    ``order`` says the record carries a triangular truncation order N;
    ``box`` names the rank ("n" or "m") that sets the length of the
    rectangular bound vector, or None when there is none.
    """

    n: int | None = None
    m: int | None = 0
    order: bool = False
    box: str | None = None

    def box_length(self, n: int, m: int) -> int:
        if self.box == "n":
            return n
        if self.box == "m":
            return m
        return 0

    def validate(self, n: int, m: int) -> None:
        if self.n is not None and n != self.n:
            raise InvalidDims(f"rank n is fixed at {self.n}, got {n}")
        if self.n is None and n < 1:
            raise InvalidDims(f"rank n must be >= 1, got {n}")
        if self.m is not None and m != self.m:
            raise InvalidDims(f"rank m is fixed at {self.m}, got {m}")
        if self.m is None and m < 1:
            raise InvalidDims(f"rank m must be >= 1, got {m}")


@dataclass(frozen=True)
class VectorSpec:
    """One vector symbol: its name, which rank sets its length, and whether
    it is a coordinate family (pairwise distinct, pole-sensitive ratios)."""

    name: str
    dim: str = "n"
    coord: bool = False


# ---------------------------------------------------------------------------
# Evaluable sides


@dataclass(frozen=True)
class Side:
    """One side of an identity with all values baked in.

    ``scale * prefactor_num/prefactor_den * sum(series over domain)``; a side
    with no series is a closed form.  ``wnm`` holds the well-poised
    multivariate shape before compilation so structural checks (balancing)
    can read it; it is compiled on evaluation.
    """

    series: AnSeries | PhiSpec | VwpSpec | None = None
    domain: Domain | None = None
    prefactor_num: tuple = ()
    prefactor_den: tuple = ()
    scale: Scalar | int = 1
    wnm: WnmSpec | None = None


SideBuilder = Callable[[ParamSet], Side]


def pochs(*pairs) -> tuple[QPochSpec, ...]:
    """Tuple of q-shifted-factorial specs from ``(base, length)`` pairs."""
    return tuple(QPochSpec(base, length) for base, length in pairs)


def eval_built_side(
    side: Side,
    q: Scalar,
    prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    value: Scalar = side.scale
    if isinstance(value, int):
        value = Fraction(value)
    if prec is not None:
        value = to_decimal(value)
    if side.prefactor_num or side.prefactor_den:
        value = value * qpoch_product(side.prefactor_num, side.prefactor_den, q, prec)
    payload = wnm_series(side.wnm) if side.wnm is not None else side.series
    if payload is None:
        return value
    if isinstance(payload, AnSeries):
        if side.domain is None:
            raise ValueError("a multivariate side needs a domain")
        total = eval_an_series(payload, side.domain, prec=prec, stats=stats)
    elif isinstance(payload, PhiSpec):
        total = eval_phi_spec(payload, prec=prec, stats=stats)
    elif isinstance(payload, VwpSpec):
        total = eval_vwp_spec(payload, prec=prec, stats=stats)
    else:
        raise TypeError(f"not a series payload: {payload!r}")
    return value * total


# ---------------------------------------------------------------------------
# Reduction links


def pin_coords(p: ParamSet, name: str) -> ParamSet:
    """Pin every entry of a coordinate vector to 1."""
    ones = (Fraction(1),) * len(p.vector(name))
    return replace(p, vectors={**p.vectors, name: ones})


def pin_scalar_power(p: ParamSet, name: str, order: int) -> ParamSet:
    """Pin a scalar to q^(-order)."""
    return replace(p, scalars={**p.scalars, name: p.q**-order})


@dataclass(frozen=True)
class ReductionLink:
    """Statement that this record, specialized, coincides with ``target``.

    ``n``/``m`` pin the source ranks for the check; ``prepare`` adjusts the
    sampled source parameters before constraint resolution (pinning
    coordinates or turning a free scalar into a q-power); ``map`` translates
    the resolved source ParamSet into the target's symbols (None: reuse it
    unchanged).  With ``swap`` the target's sides correspond crosswise.
    """

    target: str
    n: int | None = None
    m: int | None = None
    prepare: Callable[[ParamSet], ParamSet] | None = None
    map: Callable[[ParamSet], ParamSet] | None = None
    swap: bool = False
    description: str = ""


# ---------------------------------------------------------------------------
# The record itself


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    group: str
    title: str
    dims: DimsSignature
    lhs: SideBuilder
    rhs: SideBuilder
    scalars: tuple[str, ...] = ()
    vectors: tuple[VectorSpec, ...] = ()
    constraints: tuple[BalancingRule, ...] = ()
    termination_class: TerminationClass = TERMINATING
    reductions: tuple[ReductionLink, ...] = ()
    notes: str = ""

    @property
    def solved(self) -> tuple[str, ...]:
        """Symbols (or vector components) assigned by the constraints."""
        out = []
        for rule in self.constraints:
            name = rule.solve_for
            if rule.component is not None:
                name = f"{name}[{rule.component}]"
            out.append(name)
        return tuple(out)

    @property
    def free_scalars(self) -> tuple[str, ...]:
        solved = {r.solve_for for r in self.constraints if r.component is None}
        return tuple(s for s in self.scalars if s not in solved)

    def resolve(self, params: ParamSet) -> ParamSet:
        """Apply this record's balancing constraints to a parameter set."""
        return _resolve(self.constraints, params)


def build_side(rec: IdentityRecord, which: str, params: ParamSet) -> Side:
    if which not in ("lhs", "rhs"):
        raise ValueError(f"side must be 'lhs' or 'rhs', got {which!r}")
    builder = rec.lhs if which == "lhs" else rec.rhs
    try:
        return builder(params)
    except QidentError as exc:
        raise type(exc)(f"{rec.id} {which}: {exc}") from exc


def eval_side(
    rec: IdentityRecord,
    which: str,
    params: ParamSet,
    prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    """Evaluate one side of a record at resolved parameter values.

    Evaluator errors are re-raised as the same class with the record id and
    side prepended, so reports can name the failing combination.
    """
    side = build_side(rec, which, params)
    try:
        return eval_built_side(side, params.q, prec=prec, stats=stats)
    except QidentError as exc:
        raise type(exc)(f"{rec.id} {which}: {exc}") from exc


# ---------------------------------------------------------------------------
# Registry


_REGISTRY: dict[str, IdentityRecord] = {}


def register(rec: IdentityRecord) -> IdentityRecord:
    if rec.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {rec.id!r}")
    _REGISTRY[rec.id] = rec
    return rec


def catalog() -> tuple[IdentityRecord, ...]:
    """All records, sorted by id."""
    return tuple(_REGISTRY[k] for k in sorted(_REGISTRY))


def lookup(ident: str) -> IdentityRecord:
    try:
        return _REGISTRY[ident]
    except KeyError:
        raise UnknownIdentity(f"no identity with id {ident!r}") from None


def describe_termination(tc: TerminationClass) -> str:
    if isinstance(tc, Terminating):
        return "terminating"
    if tc.description:
        return f"nonterminating ({tc.description})"
    return "nonterminating"


def record_summary(rec: IdentityRecord) -> dict:
    """JSON-ready description of one record (no parameter values)."""
    return {
        "id": rec.id,
        "group": rec.group,
        "title": rec.title,
        "dims": {
            "n": rec.dims.n,
            "m": rec.dims.m,
            "order": rec.dims.order,
            "box": rec.dims.box,
        },
        "scalars": list(rec.scalars),
        "vectors": [
            {"name": v.name, "dim": v.dim, "coord": v.coord} for v in rec.vectors
        ],
        "constraints": [r.describe() for r in rec.constraints],
        "termination": describe_termination(rec.termination_class),
        "reductions": [link.target for link in rec.reductions],
    }


def catalog_json() -> list[dict]:
    return [record_summary(rec) for rec in catalog()]
