"""Scalar arithmetic shared by every evaluator.

Two modes are supported behind one small contract:

* exact mode  -- ``fractions.Fraction``: arbitrary-precision rationals, no
  rounding ever, always in lowest terms with positive denominator;
* float mode  -- ``decimal.Decimal`` at a configurable number of decimal
  digits, so that tolerances quoted in reports count decimal digits rather
  than bits.

Mixing the two promotes to ``Decimal`` at the active precision.  All values
are immutable, so everything here is safe to share between workers.
"""

from __future__ import annotations

import decimal
from contextlib import contextmanager
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Union

from .errors import ZeroToNegativePower

Scalar = Union[Fraction, Decimal]

DEFAULT_DIGITS = 60


def _default_tolerance(digits: int) -> float:
    return 10.0 ** (-(digits / 2.0))


@dataclass(frozen=True)
class Precision:
    """Numeric policy for float-mode evaluation.

    ``digits`` is the number of significant decimal digits carried by every
    operation; ``tolerance`` is the acceptance threshold used when comparing
    two float-mode values (default ``10**(-digits/2)``, which leaves half the
    carried digits as guard digits).
    """

    digits: int = DEFAULT_DIGITS
    tolerance: float = field(default=0.0)

    def __post_init__(self) -> None:
        if self.digits < 15:
            raise ValueError(f"precision requires at least 15 digits, got {self.digits}")
        if self.tolerance == 0.0:
            object.__setattr__(self, "tolerance", _default_tolerance(self.digits))
        if not (0.0 < self.tolerance < 1.0):
            raise ValueError(f"tolerance must lie in (0, 1), got {self.tolerance}")


@contextmanager
def working_precision(prec: Precision) -> Iterator[decimal.Context]:
    """Run a block with the decimal context set to ``prec.digits`` digits."""
    with decimal.localcontext() as ctx:
        ctx.prec = prec.digits
        yield ctx


def is_exact(x: Scalar) -> bool:
    return isinstance(x, Fraction)


def to_decimal(x: Scalar, prec: Precision | None = None) -> Decimal:
    """Promote ``x`` to a Decimal at ``prec`` digits (ambient context if None)."""
    if isinstance(x, Decimal):
        return x
    if prec is None:
        return Decimal(x.numerator) / Decimal(x.denominator)
    with working_precision(prec):
        return Decimal(x.numerator) / Decimal(x.denominator)


def promote_pair(a: Scalar, b: Scalar) -> tuple[Scalar, Scalar]:
    """Bring two scalars into a common mode (exact stays exact, mixed goes float)."""
    if isinstance(a, Decimal) and isinstance(b, Fraction):
        return a, to_decimal(b)
    if isinstance(a, Fraction) and isinstance(b, Decimal):
        return to_decimal(a), b
    return a, b


def scalar_pow(base: Scalar, exp: int) -> Scalar:
    """``base ** exp`` for integer ``exp`` of either sign.

    Exact inputs give exact results.  Raising zero to a negative power is
    reported as ZeroToNegativePower instead of propagating a division error.
    """
    if exp < 0 and not base:
        raise ZeroToNegativePower(f"0 ** {exp} is undefined")
    if isinstance(base, Fraction):
        return base**exp
    # decimal.Decimal handles negative integer exponents natively, rounding
    # once per multiply under the ambient context.
    return base**exp


def scalar_abs(x: Scalar) -> Scalar:
    return abs(x)


def as_float(x: Scalar) -> float:
    return float(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, integer, or plain decimal strings into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    """Inverse of parse_rational: ``p/q`` or a bare integer."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
