"""q-shifted factorials: finite products, infinite products, and ratios.

``qpoch(a, q, k)`` is the finite product ``(1-a)(1-aq)...(1-aq^(k-1))`` and
``qpoch_inf(a, q, prec)`` its infinite extension for ``0 < q < 1``, computed
to a requested number of decimal digits with an explicit geometric tail
bound.  Both are memoized per ``(a, q, precision)`` because series terms
re-read the same prefixes at every summation index.

``qpoch_product`` evaluates a ratio of such factors and is the workhorse
behind every prefactor in the catalog; a vanishing denominator factor is
reported as PoleEncountered with the factor spelled out.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Sequence, Union

from .errors import NoConvergence, PoleEncountered
from .scalars import Precision, Scalar, to_decimal, working_precision

_MAX_INF_TERMS = 100_000

# (a, q, mode) -> growing list of prefix products; mode is 0 for exact input
# and the decimal context precision otherwise.  A parallel list of powers of q
# lets the prefix list grow lazily without re-multiplying from scratch.
_finite_cache: dict = {}
_inf_cache: dict = {}


def clear_caches() -> None:
    _finite_cache.clear()
    _inf_cache.clear()


def _cache_mode(a: Scalar, q: Scalar) -> int:
    if isinstance(a, Fraction) and isinstance(q, Fraction):
        return 0
    return decimal.getcontext().prec


def qpoch(a: Scalar, q: Scalar, k: int) -> Scalar:
    """Finite q-shifted factorial ``(a; q)_k`` for ``k >= 0``."""
    if k < 0:
        raise ValueError(f"q-shifted factorial needs a non-negative length, got {k}")
    mode = _cache_mode(a, q)
    if mode and isinstance(a, Fraction):
        a = to_decimal(a)
    if mode and isinstance(q, Fraction):
        q = to_decimal(q)
    key = (a, q, mode)
    entry = _finite_cache.get(key)
    if entry is None:
        one = Fraction(1) if mode == 0 else Decimal(1)
        entry = ([one], [one])  # prefix products, powers of q
        _finite_cache[key] = entry
    prods, powers = entry
    while len(prods) <= k:
        j = len(prods) - 1
        prods.append(prods[-1] * (1 - a * powers[j]))
        powers.append(powers[j] * q)
    return prods[k]


def poch_vanishes(a: Fraction, q: Fraction, length: int | None) -> bool:
    """Exact test whether ``(a; q)_length`` is zero, for rational inputs.

    For ``0 < q < 1`` the factor ``1 - a q^j`` vanishes only when
    ``a = q**(-j)``, which bounds the search even when length is None
    (the infinite product): only finitely many ``j`` satisfy ``q^j >= 1/a``.
    """
    if not (0 < q < 1):
        raise ValueError(f"pole test assumes 0 < q < 1, got q={q}")
    if a <= 0:
        return False
    power = Fraction(1)
    j = 0
    while length is None or j < length:
        if a * power == 1:
            return True
        if a * power < 1:
            # powers only shrink from here on
            return False
        power *= q
        j += 1
    return False


def qpoch_inf(a: Scalar, q: Scalar, prec: Precision) -> Decimal:
    """Infinite product ``(a; q)_oo`` to ``prec.digits`` decimal digits.

    Requires ``0 < q < 1``.  Terms are accumulated until the remaining
    factors differ from 1 by less than ``10**-(digits+2)`` in relative
    terms, using ``|log prod_{j>=J}(1-a q^j)| <= 2|a|q^J/(1-q)``.
    """
    key = (a, q, prec.digits)
    hit = _inf_cache.get(key)
    if hit is not None:
        return hit
    work = Precision(digits=prec.digits + 10)
    with working_precision(work):
        ad = to_decimal(a)
        qd = to_decimal(q)
        if not (0 < qd < 1):
            raise NoConvergence(f"infinite q-shifted factorial needs 0 < q < 1, got q={q}")
        target = Decimal(10) ** (-(prec.digits + 2))
        product = Decimal(1)
        power = Decimal(1)  # q^j
        aq = abs(ad)
        one_minus_q = 1 - qd
        for _ in range(_MAX_INF_TERMS):
            bound = 2 * aq * power / one_minus_q
            if bound < target or product == 0:
                break
            product *= 1 - ad * power
            power *= qd
        else:
            raise NoConvergence(
                f"(a; q)_oo did not meet the tail bound within {_MAX_INF_TERMS} factors "
                f"(a={a}, q={q}, digits={prec.digits})"
            )
    with working_precision(prec):
        result = +product
    _inf_cache[key] = result
    return result


@dataclass(frozen=True)
class QPochSpec:
    """One factor ``(base; q)_length``; ``length=None`` means the infinite product."""

    base: Scalar
    length: Union[int, None]


def _normalize(spec) -> QPochSpec:
    if isinstance(spec, QPochSpec):
        return spec
    base, length = spec
    return QPochSpec(base, length)


def qpoch_product(
    num: Sequence,
    den: Sequence,
    q: Scalar,
    prec: Precision | None = None,
) -> Scalar:
    """Evaluate ``prod (a;q)_k`` over ``num`` divided by the same over ``den``.

    Entries are QPochSpec or plain ``(base, length)`` pairs.  Infinite lengths
    require ``prec``.  A vanishing denominator factor raises PoleEncountered
    naming the factor.
    """
    num = [_normalize(s) for s in num]
    den = [_normalize(s) for s in den]

    # Fraction and Decimal do not mix in arithmetic, so settle the mode first.
    float_mode = prec is not None or isinstance(q, Decimal) or any(
        isinstance(s.base, Decimal) for s in num + den
    )
    if float_mode:
        q = to_decimal(q)
        num = [QPochSpec(to_decimal(s.base), s.length) for s in num]
        den = [QPochSpec(to_decimal(s.base), s.length) for s in den]

    def factor(spec: QPochSpec) -> Scalar:
        if spec.length is None:
            if prec is None:
                raise NoConvergence(
                    f"infinite factor ({spec.base}; q)_oo requires a float-mode precision"
                )
            return qpoch_inf(spec.base, q, prec)
        return qpoch(spec.base, q, spec.length)

    result: Scalar = 1
    for spec in num:
        result = result * factor(spec)
    for spec in den:
        value = factor(spec)
        if not value:
            length = "oo" if spec.length is None else spec.length
            raise PoleEncountered(f"denominator factor ({spec.base}; q)_{length} = 0")
        result = result / value
    if isinstance(result, int):
        return Decimal(result) if float_mode else Fraction(result)
    return result
