"""Series evaluators: one-dimensional basic hypergeometric sums and their
multivariate (multi-index) generalizations.

Every multivariate sum handled here fits one shape: a sum over multi-indices
``gamma`` of a ratio of alternants times products of q-shifted factorials
whose lengths are the parts ``gamma_i`` or the weight ``|gamma|``.  The
``AnSeries`` record captures that shape as data; ``eval_an_series`` walks a
termination domain (or, for convergent infinite sums, accumulates weight
shells until a tail criterion is met) evaluating each term directly from the
memoized factorial tables.

Termination is always decided symbolically by the caller through the domain
argument, never by sniffing for numerically vanishing factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .errors import DegenerateVariables, NoConvergence, PoleEncountered
from .multiindex import MultiIndex, e2, enumerate_box, enumerate_weight, weight
from .qpoch import qpoch
from .scalars import Precision, Scalar, scalar_pow, to_decimal, working_precision

# Stopping policy for convergent infinite sums: a weight shell counts as
# negligible when it is below tolerance relative to the running partial sum,
# and we only trust that once three shells in a row are negligible while the
# shell magnitudes are still decaying geometrically.
_SMALL_RUN = 3
_SHELL_DECAY = Decimal("0.9")
_MAX_SHELLS = 600
_MAX_PHI_TERMS = 20_000


# ---------------------------------------------------------------------------
# Termination domains


@dataclass(frozen=True)
class Weight:
    """All gamma with |gamma| <= total (triangular truncation)."""

    total: int


@dataclass(frozen=True)
class Shell:
    """All gamma with |gamma| == total exactly (equal-weight slice)."""

    total: int


@dataclass(frozen=True)
class Box:
    """All gamma with gamma_i <= bounds_i (rectangular truncation)."""

    bounds: tuple[int, ...]


@dataclass(frozen=True)
class Infinite:
    """No truncation: the series must converge and is summed numerically."""


Domain = Union[Weight, Shell, Box, Infinite]


def domain_shells(domain: Domain, n: int) -> Iterator[tuple[int, list[MultiIndex]]]:
    """Group a finite domain into weight shells (used for exact summation)."""
    if isinstance(domain, Weight):
        for total in range(domain.total + 1):
            yield total, list(enumerate_weight(n, total))
    elif isinstance(domain, Shell):
        yield domain.total, list(enumerate_weight(n, domain.total))
    elif isinstance(domain, Box):
        if len(domain.bounds) != n:
            raise ValueError(f"box rank {len(domain.bounds)} != series rank {n}")
        buckets: dict[int, list[MultiIndex]] = {}
        for gamma in enumerate_box(domain.bounds):
            buckets.setdefault(weight(gamma), []).append(gamma)
        for total in sorted(buckets):
            yield total, buckets[total]
    else:
        raise TypeError(f"not a finite domain: {domain!r}")


# ---------------------------------------------------------------------------
# Ratio of alternants


def vandermonde_ratio(x: Sequence[Scalar], gamma: Sequence[int], q: Scalar) -> Scalar:
    """Ratio of the shifted to unshifted alternant, as a product of factor ratios.

    Computed factor by factor as prod_{i<j} (x_i q^{g_i} - x_j q^{g_j}) / (x_i - x_j)
    rather than via determinants, so exact mode stays exact and float mode
    rounds once per factor.
    """
    n = len(x)
    result: Scalar = Fraction(1) if isinstance(q, Fraction) else Decimal(1)
    shifted = [x[i] * scalar_pow(q, gamma[i]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            den = x[i] - x[j]
            if not den:
                raise DegenerateVariables(f"x_{i + 1} == x_{j + 1} == {x[i]}")
            result = result * (shifted[i] - shifted[j]) / den
    return result


# ---------------------------------------------------------------------------
# The multivariate series shape


@dataclass(frozen=True)
class AnSeries:
    """One multivariate series as data.

    The term at multi-index ``gamma`` (with ``N = |gamma|``) is the product of:

    * ``z ** N``;
    * the alternant ratio for ``x`` (when ``vandermonde``);
    * ``prod_i (1 - vwp * x_i * q**(N + gamma_i)) / (1 - vwp * x_i)`` (when set);
    * per cross row ``A``: ``prod_{i,j} (A_j x_i / x_j; q)_{gamma_i}``
      (numerator rows and denominator rows);
    * per per-index row ``w``: ``prod_i (w_i; q)_{gamma_i}``;
    * per weight entry ``v``: ``(v; q)_N``;
    * ``prod_i x_i ** (x_exponent * gamma_i)`` and ``q ** (e2_exponent * e2(gamma))``.
    """

    q: Scalar
    x: tuple[Scalar, ...]
    z: Scalar
    vandermonde: bool = True
    vwp: Scalar | None = None
    cross_num: tuple[tuple[Scalar, ...], ...] = ()
    cross_den: tuple[tuple[Scalar, ...], ...] = ()
    per_index_num: tuple[tuple[Scalar, ...], ...] = ()
    per_index_den: tuple[tuple[Scalar, ...], ...] = ()
    weight_num: tuple[Scalar, ...] = ()
    weight_den: tuple[Scalar, ...] = ()
    x_exponent: int = 0
    e2_exponent: int = 0

    @property
    def rank(self) -> int:
        return len(self.x)


def _promote_series(series: AnSeries) -> AnSeries:
    """Convert every stored scalar to Decimal under the ambient context."""

    def dec_rows(rows):
        return tuple(tuple(to_decimal(v) for v in row) for row in rows)

    return AnSeries(
        q=to_decimal(series.q),
        x=tuple(to_decimal(v) for v in series.x),
        z=to_decimal(series.z),
        vandermonde=series.vandermonde,
        vwp=None if series.vwp is None else to_decimal(series.vwp),
        cross_num=dec_rows(series.cross_num),
        cross_den=dec_rows(series.cross_den),
        per_index_num=dec_rows(series.per_index_num),
        per_index_den=dec_rows(series.per_index_den),
        weight_num=tuple(to_decimal(v) for v in series.weight_num),
        weight_den=tuple(to_decimal(v) for v in series.weight_den),
        x_exponent=series.x_exponent,
        e2_exponent=series.e2_exponent,
    )


def _series_term(series: AnSeries, gamma: MultiIndex) -> Scalar:
    q = series.q
    x = series.x
    n = len(x)
    total = weight(gamma)

    num: Scalar = scalar_pow(series.z, total)
    if series.vandermonde:
        num = num * vandermonde_ratio(x, gamma, q)
    den: Scalar = Fraction(1) if isinstance(q, Fraction) else Decimal(1)

    if series.vwp is not None:
        s = series.vwp
        for i in range(n):
            base = 1 - s * x[i]
            if not base:
                raise PoleEncountered(f"well-poising factor 1 - s*x_{i + 1} = 0")
            num = num * (1 - s * x[i] * scalar_pow(q, total + gamma[i]))
            den = den * base

    for row in series.cross_num:
        for i in range(n):
            for j in range(n):
                num = num * qpoch(row[j] * x[i] / x[j], q, gamma[i])
    for row in series.cross_den:
        for i in range(n):
            for j in range(n):
                den = den * qpoch(row[j] * x[i] / x[j], q, gamma[i])
    for row in series.per_index_num:
        for i in range(n):
            num = num * qpoch(row[i], q, gamma[i])
    for row in series.per_index_den:
        for i in range(n):
            den = den * qpoch(row[i], q, gamma[i])
    for v in series.weight_num:
        num = num * qpoch(v, q, total)
    for v in series.weight_den:
        den = den * qpoch(v, q, total)

    if series.x_exponent:
        for i in range(n):
            num = num * scalar_pow(x[i], series.x_exponent * gamma[i])
    if series.e2_exponent:
        num = num * scalar_pow(q, series.e2_exponent * e2(gamma))

    if not den:
        raise PoleEncountered(f"term denominator vanished at gamma={gamma}")
    return num / den


def eval_an_series(
    series: AnSeries,
    domain: Domain,
    prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    """Sum the series over the domain.

    With ``prec=None`` the domain must be finite and every scalar exact; the
    result is an exact rational.  With a precision, everything is promoted to
    Decimal at ``prec.digits`` and infinite domains are summed shell by shell
    until the tail criterion is met (NoConvergence if it never is).

    When a ``stats`` dict is supplied it receives the number of summed terms
    and, for infinite domains, the magnitude of the last shell as ``tail``.
    """
    if prec is None:
        if isinstance(domain, Infinite):
            raise NoConvergence("an infinite sum needs a float-mode precision")
        total_sum: Scalar = Fraction(0)
        count = 0
        for _, shell in domain_shells(domain, series.rank):
            for gamma in shell:
                total_sum += _series_term(series, gamma)
                count += 1
        if stats is not None:
            stats.update(terms=count, tail=None)
        return total_sum

    with working_precision(prec):
        dseries = _promote_series(series)
        if not isinstance(domain, Infinite):
            acc = Decimal(0)
            count = 0
            for _, shell in domain_shells(domain, dseries.rank):
                for gamma in shell:
                    acc += _series_term(dseries, gamma)
                    count += 1
            if stats is not None:
                stats.update(terms=count, tail=None)
            return acc
        tol = Decimal(repr(prec.tolerance))
        partial = Decimal(0)
        count = 0
        small_run = 0
        prev_mag: Decimal | None = None
        for total in range(_MAX_SHELLS):
            shell_sum = Decimal(0)
            for gamma in enumerate_weight(dseries.rank, total):
                shell_sum += _series_term(dseries, gamma)
                count += 1
            partial += shell_sum
            mag = abs(shell_sum)
            scale = max(Decimal(1), abs(partial))
            decaying = mag == 0 or (
                prev_mag is not None and prev_mag > 0 and mag < prev_mag * _SHELL_DECAY
            )
            if mag < tol * scale and decaying:
                small_run += 1
                if small_run >= _SMALL_RUN:
                    if stats is not None:
                        stats.update(terms=count, tail=mag)
                    return partial
            else:
                small_run = 0
            prev_mag = mag
        raise NoConvergence(
            f"shell sums did not fall below tolerance within {_MAX_SHELLS} shells"
        )


# ---------------------------------------------------------------------------
# One-dimensional series


def eval_phi(
    upper: Sequence[Scalar],
    lower: Sequence[Scalar],
    q: Scalar,
    z: Scalar,
    terms: int | None = None,
    prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    """Basic hypergeometric sum with the given numerator/denominator parameters.

    The term at k is ``prod (a;q)_k / ((q;q)_k prod (b;q)_k) * z**k`` times the
    standard compensating factor ``((-1)^k q^(k(k-1)/2))**(1 + len(lower) - len(upper))``
    when the parameter counts are unbalanced.  ``terms=N`` sums k = 0..N;
    ``terms=None`` requires a precision and sums until the tail criterion holds.
    """
    excess = 1 + len(lower) - len(upper)

    def term(k: int, uppers, lowers, qq, zz) -> Scalar:
        num = scalar_pow(zz, k)
        den = qpoch(qq, qq, k)
        for a in uppers:
            num = num * qpoch(a, qq, k)
        for b in lowers:
            den = den * qpoch(b, qq, k)
        if excess:
            comp = scalar_pow(-1, k) * scalar_pow(qq, k * (k - 1) // 2)
            num = num * scalar_pow(comp, excess)
        if not den:
            raise PoleEncountered(f"term denominator vanished at k={k}")
        return num / den

    if terms is not None:
        if stats is not None:
            stats.update(terms=terms + 1, tail=None)
        acc: Scalar = Fraction(0) if isinstance(q, Fraction) else Decimal(0)
        if prec is not None:
            with working_precision(prec):
                acc = Decimal(0)
                du = [to_decimal(a) for a in upper]
                dl = [to_decimal(b) for b in lower]
                dq, dz = to_decimal(q), to_decimal(z)
                for k in range(terms + 1):
                    acc += term(k, du, dl, dq, dz)
                return acc
        for k in range(terms + 1):
            acc += term(k, upper, lower, q, z)
        return acc

    if prec is None:
        raise NoConvergence("a nonterminating sum needs a float-mode precision")
    with working_precision(prec):
        du = [to_decimal(a) for a in upper]
        dl = [to_decimal(b) for b in lower]
        dq, dz = to_decimal(q), to_decimal(z)
        tol = Decimal(repr(prec.tolerance))
        partial = Decimal(0)
        small_run = 0
        prev_mag: Decimal | None = None
        for k in range(_MAX_PHI_TERMS):
            t = term(k, du, dl, dq, dz)
            partial += t
            mag = abs(t)
            scale = max(Decimal(1), abs(partial))
            decaying = mag == 0 or (
                prev_mag is not None and prev_mag > 0 and mag < prev_mag * _SHELL_DECAY
            )
            if mag < tol * scale and decaying:
                small_run += 1
                if small_run >= _SMALL_RUN:
                    if stats is not None:
                        stats.update(terms=k + 1, tail=mag)
                    return partial
            else:
                small_run = 0
            prev_mag = mag
        raise NoConvergence(
            f"terms did not fall below tolerance within {_MAX_PHI_TERMS} steps"
        )


def eval_vwp(
    s: Scalar,
    params: Sequence[Scalar],
    q: Scalar,
    z: Scalar,
    terms: int | None = None,
    prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    """Well-poised sum with leading parameter ``s`` and parameter list ``params``.

    Term at k: ``(1 - s q^{2k})/(1 - s) * (s;q)_k prod (a;q)_k /
    ((q;q)_k prod (sq/a;q)_k) * z**k``.
    """

    def run(ss, ps, qq, zz, kmax: int | None, tol: Decimal | None) -> Scalar:
        one_minus_s = 1 - ss
        if not one_minus_s:
            raise PoleEncountered("well-poising factor 1 - s = 0")
        acc = None
        small_run = 0
        prev_mag = None
        limit = kmax + 1 if kmax is not None else _MAX_PHI_TERMS
        for k in range(limit):
            num = (1 - ss * scalar_pow(qq, 2 * k)) * qpoch(ss, qq, k) * scalar_pow(zz, k)
            den = one_minus_s * qpoch(qq, qq, k)
            for a in ps:
                num = num * qpoch(a, qq, k)
                den = den * qpoch(ss * qq / a, qq, k)
            if not den:
                raise PoleEncountered(f"term denominator vanished at k={k}")
            t = num / den
            acc = t if acc is None else acc + t
            if kmax is None:
                mag = abs(t)
                scale = max(Decimal(1), abs(acc))
                decaying = mag == 0 or (
                    prev_mag is not None and prev_mag > 0 and mag < prev_mag * _SHELL_DECAY
                )
                if mag < tol * scale and decaying:
                    small_run += 1
                    if small_run >= _SMALL_RUN:
                        if stats is not None:
                            stats.update(terms=k + 1, tail=mag)
                        return acc
                else:
                    small_run = 0
                prev_mag = mag
        if kmax is not None:
            if stats is not None:
                stats.update(terms=limit, tail=None)
            return acc
        raise NoConvergence(
            f"terms did not fall below tolerance within {_MAX_PHI_TERMS} steps"
        )

    if terms is not None:
        if prec is not None:
            with working_precision(prec):
                return run(
                    to_decimal(s),
                    [to_decimal(a) for a in params],
                    to_decimal(q),
                    to_decimal(z),
                    terms,
                    None,
                )
        return run(s, list(params), q, z, terms, None)
    if prec is None:
        raise NoConvergence("a nonterminating sum needs a float-mode precision")
    with working_precision(prec):
        return run(
            to_decimal(s),
            [to_decimal(a) for a in params],
            to_decimal(q),
            to_decimal(z),
            None,
            Decimal(repr(prec.tolerance)),
        )


@dataclass(frozen=True)
class BalanceCheck:
    """Outcome of the well-poised balancing test; truthy iff balanced.

    ``sign`` names the square-root branch (+1 or -1) when it can be decided,
    and is None otherwise (unbalanced, or the root is irrational in exact mode).
    """

    balanced: bool
    sign: int | None

    def __bool__(self) -> bool:
        return self.balanced


def _exact_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    pn, pd = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if pn * pn == value.numerator and pd * pd == value.denominator:
        return Fraction(pn, pd)
    return None


def is_vwp_balanced(
    s: Scalar, params: Sequence[Scalar], q: Scalar, z: Scalar
) -> BalanceCheck:
    """Whether a well-poised parameter list satisfies the balancing condition.

    Checked in squared form, ``(prod(params) * z)**2 == (s*q)**(r-1)`` with
    ``r = len(params)``, which covers both sign branches of the square root;
    the reported sign recovers which branch the unsquared product sits on.
    """
    r = len(params)
    prod: Scalar = Fraction(1) if isinstance(q, Fraction) else Decimal(1)
    for a in params:
        prod = prod * a
    prod = prod * z
    lhs = prod * prod
    rhs = scalar_pow(s * q, r - 1)
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        if lhs != rhs:
            return BalanceCheck(False, None)
        if (r - 1) % 2 == 0:
            root_pow: Fraction | None = scalar_pow(s * q, (r - 1) // 2)
        else:
            root = _exact_sqrt(s * q)
            root_pow = None if root is None else scalar_pow(root, r - 1)
        if root_pow is None:
            return BalanceCheck(True, None)
        return BalanceCheck(True, 1 if prod == root_pow else -1)
    lhs_d, rhs_d = to_decimal(lhs), to_decimal(rhs)
    tol = Decimal(10) ** -20
    if abs(lhs_d - rhs_d) > tol * max(Decimal(1), abs(lhs_d), abs(rhs_d)):
        return BalanceCheck(False, None)
    sq = to_decimal(s) * to_decimal(q)
    if sq < 0:
        return BalanceCheck(True, None)
    root_d = sq ** ((r - 1) // 2) * (sq.sqrt() if (r - 1) % 2 else Decimal(1))
    prod_d = to_decimal(prod)
    return BalanceCheck(True, 1 if abs(prod_d - root_d) <= abs(prod_d + root_d) else -1)


# ---------------------------------------------------------------------------
# One-dimensional series as data (for catalog sides)


@dataclass(frozen=True)
class PhiSpec:
    """A 1-D basic hypergeometric sum with bound parameter values.

    ``termination``, when set, records the exponent N of a numerator entry
    equal to ``q**-N``; evaluation then runs over k = 0..N.
    """

    upper: tuple[Scalar, ...]
    lower: tuple[Scalar, ...]
    q: Scalar
    z: Scalar
    termination: int | None = None


@dataclass(frozen=True)
class VwpSpec:
    """A 1-D well-poised sum with bound parameter values.

    ``termination`` plays the same role as on :class:`PhiSpec`.
    """

    s: Scalar
    params: tuple[Scalar, ...]
    q: Scalar
    z: Scalar
    termination: int | None = None


def eval_phi_spec(
    spec: PhiSpec, terms: int | None = None, prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    if terms is None and spec.termination is not None:
        terms = spec.termination
    return eval_phi(spec.upper, spec.lower, spec.q, spec.z, terms=terms, prec=prec, stats=stats)


def eval_vwp_spec(
    spec: VwpSpec, terms: int | None = None, prec: Precision | None = None,
    stats: dict | None = None,
) -> Scalar:
    if terms is None and spec.termination is not None:
        terms = spec.termination
    return eval_vwp(spec.s, spec.params, spec.q, spec.z, terms=terms, prec=prec, stats=stats)


# ---------------------------------------------------------------------------
# The well-poised multivariate series


@dataclass(frozen=True)
class WnmSpec:
    """Well-poised multivariate series: rooted pairs ``(a_i, x_i)``, leading
    parameter ``s``, numerator coefficients ``u_k`` with companion
    denominators from ``v_k``, and argument ``z``."""

    s: Scalar
    a: tuple[Scalar, ...]
    x: tuple[Scalar, ...]
    u: tuple[Scalar, ...]
    v: tuple[Scalar, ...]
    q: Scalar
    z: Scalar

    def __post_init__(self) -> None:
        if len(self.a) != len(self.x):
            raise ValueError("a and x must pair up")
        if len(self.u) != len(self.v):
            raise ValueError("u and v must pair up")


def wnm_series(spec: WnmSpec) -> AnSeries:
    """Compile the well-poised spec into the generic multivariate shape."""
    s, a, x, u, v, q, z = spec.s, spec.a, spec.x, spec.u, spec.v, spec.q, spec.z
    n = len(x)
    weight_num = tuple(s * xj for xj in x) + tuple(v)
    weight_den = tuple((s * q / aj) * xj for aj, xj in zip(a, x)) + tuple(
        s * q / uk for uk in u
    )
    return AnSeries(
        q=q,
        x=tuple(x),
        z=z,
        vandermonde=True,
        vwp=s,
        cross_num=(tuple(a),),
        cross_den=((q,) * n,),
        per_index_num=tuple(tuple(uk * xi for xi in x) for uk in u),
        per_index_den=tuple(tuple((s * q / vk) * xi for xi in x) for vk in v),
        weight_num=weight_num,
        weight_den=weight_den,
    )


def wnm_balance_params(spec: WnmSpec) -> tuple[Scalar, tuple[Scalar, ...], Scalar]:
    """Flatten a well-poised spec into a one-dimensional parameter list for
    the balancing test: the rooted coefficients enter by their product."""
    prod: Scalar = Fraction(1) if isinstance(spec.q, Fraction) else Decimal(1)
    for ai in spec.a:
        prod = prod * ai
    return spec.s, (prod,) + spec.u + spec.v, spec.z


def eval_wnm(spec: WnmSpec, domain: Domain, prec: Precision | None = None) -> Scalar:
    return eval_an_series(wnm_series(spec), domain, prec)


# ---------------------------------------------------------------------------
# Pole anatomy (used by the sampling screen)


def _part_bounds(domain: Domain, n: int) -> list[int | None]:
    """Largest value each gamma_i can take over the domain (None = unbounded)."""
    if isinstance(domain, (Weight, Shell)):
        return [domain.total] * n
    if isinstance(domain, Box):
        return list(domain.bounds)
    return [None] * n


def denominator_factors(
    series, domain: Domain | None
) -> list[tuple[Scalar, int | None]]:
    """Every q-shifted-factorial base appearing in term denominators, with the
    largest length the domain can realize for it.

    A term denominator ``(w; q)_k`` vanishes somewhere on the domain exactly
    when ``w = q**-j`` for some ``j`` smaller than the realizable length, so
    the sampler screens these pairs exactly.  Non-factorial denominators
    (the well-poising factors) are screened separately.
    """
    out: list[tuple[Scalar, int | None]] = []
    if isinstance(series, PhiSpec):
        top = None if domain is None else _part_bounds(domain, 1)[0]
        for b in series.lower:
            out.append((b, top))
        return out
    if isinstance(series, VwpSpec):
        top = None if domain is None else _part_bounds(domain, 1)[0]
        for a in series.params:
            out.append((series.s * series.q / a, top))
        return out
    if isinstance(series, WnmSpec):
        series = wnm_series(series)
    if not isinstance(series, AnSeries):
        raise TypeError(f"not a series spec: {series!r}")
    n = series.rank
    bounds = _part_bounds(domain, n) if domain is not None else [None] * n
    weight_bound: int | None
    if isinstance(domain, (Weight, Shell)):
        weight_bound = domain.total
    elif isinstance(domain, Box):
        weight_bound = sum(domain.bounds)
    else:
        weight_bound = None
    x = series.x
    for row in series.cross_den:
        for i in range(n):
            for j in range(n):
                out.append((row[j] * x[i] / x[j], bounds[i]))
    for row in series.per_index_den:
        for i in range(n):
            out.append((row[i], bounds[i]))
    for v in series.weight_den:
        out.append((v, weight_bound))
    return out


def well_poising_denominators(series) -> list[Scalar]:
    """Linear denominator factors ``1 - s x_i`` (or ``1 - s``) of a series."""
    if isinstance(series, VwpSpec):
        return [Fraction(1) - series.s] if isinstance(series.s, Fraction) else [1 - series.s]
    if isinstance(series, WnmSpec):
        return [1 - series.s * xi for xi in series.x]
    if isinstance(series, AnSeries) and series.vwp is not None:
        return [1 - series.vwp * xi for xi in series.x]
    return []
