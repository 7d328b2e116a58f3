"""Parameter assignments and balancing constraints.

A ParamSet binds every free symbol of an identity to an exact rational:
plain scalars, vectors indexed by the summation rank, the base q, and the
termination data (a triangular order N or rectangular box bounds).

Balancing constraints are pure monomials — each one solves a single symbol
as a product of the others raised to exponents that may depend linearly on
the dimensions.  ``resolve_constraints`` applies them in order.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import MissingParameter, ZeroParameter
from .scalars import format_rational


@dataclass(frozen=True)
class LinExp:
    """Integer exponent of the form const + cn*n + cm*m + cN*N + cM*|M|."""

    const: int = 0
    n: int = 0
    m: int = 0
    N: int = 0
    absM: int = 0

    def at(self, n: int, m: int, N: int, absM: int) -> int:
        return self.const + self.n * n + self.m * m + self.N * N + self.absM * absM

    def describe(self) -> str:
        pieces = []
        if self.const:
            pieces.append(str(self.const))
        for coeff, sym in [(self.n, "n"), (self.m, "m"), (self.N, "N"), (self.absM, "|M|")]:
            if coeff == 1:
                pieces.append(sym)
            elif coeff == -1:
                pieces.append(f"-{sym}")
            elif coeff:
                pieces.append(f"{coeff}{sym}")
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"


def const(k: int) -> LinExp:
    return LinExp(const=k)


@dataclass(frozen=True)
class Monomial:
    """Product of named symbols and q raised to LinExp powers.

    A vector symbol stands for the product of its components.  Inside a rule
    that solves one component of that same vector, the symbol stands for the
    product over the *other* components.
    """

    factors: tuple[tuple[str, LinExp], ...] = ()
    q_exp: LinExp = LinExp()

    def describe(self) -> str:
        parts = []
        if self.q_exp != LinExp():
            parts.append(f"q^({self.q_exp.describe()})")
        for sym, ex in self.factors:
            if ex == LinExp(const=1):
                parts.append(sym)
            else:
                parts.append(f"{sym}^({ex.describe()})")
        return " * ".join(parts) if parts else "1"


def monomial(q_exp: LinExp | int = 0, **factors: LinExp | int) -> Monomial:
    """Convenience constructor: int exponents become constant LinExps."""

    def lift(e: LinExp | int) -> LinExp:
        return e if isinstance(e, LinExp) else LinExp(const=e)

    return Monomial(
        factors=tuple((sym, lift(e)) for sym, e in factors.items()),
        q_exp=lift(q_exp),
    )


@dataclass(frozen=True)
class BalancingRule:
    """Assigns ``solve_for`` (or one component of it) the monomial's value."""

    solve_for: str
    monomial: Monomial
    component: int | None = None  # index into a vector symbol, e.g. -1 for last

    def describe(self) -> str:
        target = self.solve_for
        if self.component is not None:
            target = f"{target}[{self.component}]"
        return f"{target} = {self.monomial.describe()}"


@dataclass(frozen=True)
class ParamSet:
    """Exact values for every symbol of one identity instance."""

    q: Fraction
    n: int = 1
    m: int = 0
    order: int | None = None  # triangular truncation N
    box: tuple[int, ...] | None = None  # rectangular bounds
    scalars: Mapping[str, Fraction] = field(default_factory=dict)
    vectors: Mapping[str, tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (0 < self.q < 1):
            raise ValueError(f"q must lie in (0, 1), got {self.q}")
        if self.order is not None and self.order < 0:
            raise ValueError(f"termination order must be >= 0, got {self.order}")
        if self.box is not None and any(b < 0 for b in self.box):
            raise ValueError(f"box bounds must be >= 0, got {self.box}")

    @property
    def abs_box(self) -> int:
        return sum(self.box) if self.box else 0

    def scalar(self, name: str) -> Fraction:
        try:
            return self.scalars[name]
        except KeyError:
            raise MissingParameter(f"scalar {name!r} is not assigned") from None

    def vector(self, name: str) -> tuple[Fraction, ...]:
        try:
            return self.vectors[name]
        except KeyError:
            raise MissingParameter(f"vector {name!r} is not assigned") from None

    def product(self, name: str, skip: int | None = None) -> Fraction:
        """Product of a vector's components, optionally omitting one index."""
        values = self.vector(name)
        if skip is not None:
            skip = skip % len(values)
        result = Fraction(1)
        for i, v in enumerate(values):
            if skip is not None and i == skip:
                continue
            result *= v
        return result

    def exponent_env(self) -> tuple[int, int, int, int]:
        return self.n, self.m, self.order or 0, self.abs_box

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:12]

    def canonical(self) -> str:
        payload = {
            "q": format_rational(self.q),
            "n": self.n,
            "m": self.m,
            "order": self.order,
            "box": list(self.box) if self.box is not None else None,
            "scalars": {k: format_rational(v) for k, v in sorted(self.scalars.items())},
            "vectors": {
                k: [format_rational(v) for v in vec]
                for k, vec in sorted(self.vectors.items())
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def eval_monomial(
    mono: Monomial, params: ParamSet, self_symbol: str | None = None, self_skip: int | None = None
) -> Fraction:
    """Evaluate a monomial at the given parameter values.

    ``self_symbol``/``self_skip`` implement the vector-component convention:
    while solving component ``self_skip`` of vector ``self_symbol``, that
    symbol denotes the product of its remaining components.
    """
    n, m, order, absm = params.exponent_env()
    result = params.q ** mono.q_exp.at(n, m, order, absm)
    for sym, ex in mono.factors:
        exponent = ex.at(n, m, order, absm)
        if exponent == 0:
            continue
        if sym in params.scalars:
            value = params.scalars[sym]
        elif sym in params.vectors:
            skip = self_skip if sym == self_symbol else None
            value = params.product(sym, skip=skip)
        else:
            raise MissingParameter(f"symbol {sym!r} is not assigned")
        if value == 0 and exponent < 0:
            raise ZeroParameter(f"monomial divides by {sym} = 0")
        result *= value**exponent
    return result


def apply_rule(rule: BalancingRule, params: ParamSet) -> ParamSet:
    if rule.component is None:
        value = eval_monomial(rule.monomial, params)
        scalars = dict(params.scalars)
        scalars[rule.solve_for] = value
        return replace(params, scalars=scalars)
    vec = list(params.vector(rule.solve_for))
    index = rule.component % len(vec)
    value = eval_monomial(
        rule.monomial, params, self_symbol=rule.solve_for, self_skip=index
    )
    vec[index] = value
    vectors = dict(params.vectors)
    vectors[rule.solve_for] = tuple(vec)
    return replace(params, vectors=vectors)


def resolve_constraints(rules: Sequence[BalancingRule], params: ParamSet) -> ParamSet:
    """Apply each rule in order, returning the completed ParamSet."""
    for rule in rules:
        params = apply_rule(rule, params)
    return params
