"""Duality-type records: the balanced duality transformation between series
of complementary ranks, its non-balanced version and inverse, the symmetric
equal-weight forms, the one-dimensional specializations, and the multiple
Euler transformation.

Builders bake every coefficient to a concrete scalar; the summation rank of
each side is read off the baked coordinate vector, so one builder serves all
dimensions.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MissingParameter
from ..params import BalancingRule, LinExp, ParamSet, monomial
from ..series import AnSeries, Infinite, PhiSpec, Shell, VwpSpec, Weight, WnmSpec
from .core import (
    TERMINATING,
    DimsSignature,
    IdentityRecord,
    Nonterminating,
    ReductionLink,
    Side,
    VectorSpec,
    pin_coords,
    pochs,
    register,
)


def _order(p: ParamSet) -> int:
    if p.order is None:
        raise MissingParameter("this identity needs a truncation order N")
    return p.order




# ---------------------------------------------------------------------------
# Balanced duality transformation


def _balanced_duality_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, d, e, f, mu = (p.scalar(s) for s in ("a", "d", "e", "f", "mu"))
    b, x, c, y = p.vector("b"), p.vector("x"), p.vector("c"), p.vector("y")
    u = tuple(ck * yk for ck, yk in zip(c, y)) + (d, e)
    v = tuple(f / yk for yk in y) + (mu * f * q**N, q**-N)
    return Side(wnm=WnmSpec(s=a, a=b, x=x, u=u, v=v, q=q, z=q), domain=Weight(N))


def _balanced_duality_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, d, e, f, mu = (p.scalar(s) for s in ("a", "d", "e", "f", "mu"))
    b, x, c, y = p.vector("b"), p.vector("x"), p.vector("c"), p.vector("y")
    num = [(mu * d * f / a, N), (mu * e * f / a, N)]
    den = [(a * q / d, N), (a * q / e, N)]
    for ck, yk in zip(c, y):
        num += [((mu * ck * f / a) * yk, N), (f / yk, N)]
        den += [(mu * q * yk, N), ((a * q / ck) / yk, N)]
    for bi, xi in zip(b, x):
        num += [(a * q * xi, N), ((mu * bi * f / a) / xi, N)]
        den += [((a * q / bi) * xi, N), ((mu * f / a) / xi, N)]
    u = tuple((a * q / (bi * f)) * xi for bi, xi in zip(b, x)) + (
        a * q / (d * f),
        a * q / (e * f),
    )
    v = tuple((mu * f / a) / xi for xi in x) + (mu * f * q**N, q**-N)
    return Side(
        wnm=WnmSpec(s=mu, a=tuple(a * q / (ck * f) for ck in c), x=y, u=u, v=v, q=q, z=q),
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="balanced_duality",
        group="duality",
        title="Balanced duality transformation exchanging the two summation ranks",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_balanced_duality_lhs,
        rhs=_balanced_duality_rhs,
        scalars=("a", "d", "e", "f", "mu"),
        vectors=(
            VectorSpec("b", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("c", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        constraints=(
            BalancingRule(
                "mu",
                monomial(
                    q_exp=LinExp(const=1, m=1),
                    a=LinExp(const=2, m=1),
                    b=-1,
                    c=-1,
                    d=-1,
                    e=-1,
                    f=LinExp(const=-1, m=-1),
                ),
            ),
        ),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="balanced_duality_m1",
                m=1,
                prepare=lambda p: pin_coords(p, "y"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=p.order,
                    scalars={**p.scalars, "c": p.vector("c")[0]},
                    vectors={"b": p.vector("b"), "x": p.vector("x")},
                ),
                description="second rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


def _balanced_duality_m1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e, f, mu = (p.scalar(s) for s in ("a", "c", "d", "e", "f", "mu"))
    b, x = p.vector("b"), p.vector("x")
    return Side(
        wnm=WnmSpec(
            s=a, a=b, x=x, u=(c, d, e), v=(f, mu * f * q**N, q**-N), q=q, z=q
        ),
        domain=Weight(N),
    )


def _balanced_duality_m1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e, f, mu = (p.scalar(s) for s in ("a", "c", "d", "e", "f", "mu"))
    b, x = p.vector("b"), p.vector("x")
    num = [(mu * c * f / a, N), (mu * d * f / a, N), (mu * e * f / a, N), (f, N)]
    den = [(a * q / c, N), (a * q / d, N), (a * q / e, N), (mu * q, N)]
    for bi, xi in zip(b, x):
        num += [(a * q * xi, N), ((mu * bi * f / a) / xi, N)]
        den += [((a * q / bi) * xi, N), ((mu * f / a) / xi, N)]
    params = (
        tuple((a * q / (bi * f)) * xi for bi, xi in zip(b, x))
        + (a * q / (c * f), a * q / (d * f), a * q / (e * f))
        + tuple((mu * f / a) / xi for xi in x)
        + (mu * f * q**N, q**-N)
    )
    return Side(
        series=VwpSpec(s=mu, params=params, q=q, z=q, termination=N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="balanced_duality_m1",
        group="duality",
        title="Balanced duality transformation onto a single very-well-poised sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_balanced_duality_m1_lhs,
        rhs=_balanced_duality_m1_rhs,
        scalars=("a", "c", "d", "e", "f", "mu"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        constraints=(
            BalancingRule(
                "mu",
                monomial(q_exp=2, a=3, b=-1, c=-1, d=-1, e=-1, f=-2),
            ),
        ),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="balanced_duality_1d",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={**p.scalars, "b": p.vector("b")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


def _balanced_duality_1d_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e, f, mu = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f", "mu"))
    return Side(
        series=VwpSpec(
            s=a, params=(b, c, d, e, f, mu * f * q**N, q**-N), q=q, z=q, termination=N
        )
    )


def _balanced_duality_1d_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e, f, mu = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f", "mu"))
    num = pochs(
        (mu * b * f / a, N),
        (mu * c * f / a, N),
        (mu * d * f / a, N),
        (mu * e * f / a, N),
        (a * q, N),
        (f, N),
    )
    den = pochs(
        (a * q / b, N),
        (a * q / c, N),
        (a * q / d, N),
        (a * q / e, N),
        (mu * q, N),
        (mu * f / a, N),
    )
    params = (
        a * q / (b * f),
        a * q / (c * f),
        a * q / (d * f),
        a * q / (e * f),
        mu * f / a,
        mu * f * q**N,
        q**-N,
    )
    return Side(
        series=VwpSpec(s=mu, params=params, q=q, z=q, termination=N),
        prefactor_num=num,
        prefactor_den=den,
    )


register(
    IdentityRecord(
        id="balanced_duality_1d",
        group="duality",
        title="Terminating balanced transformation between two very-well-poised sums",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_balanced_duality_1d_lhs,
        rhs=_balanced_duality_1d_rhs,
        scalars=("a", "b", "c", "d", "e", "f", "mu"),
        constraints=(
            BalancingRule(
                "mu",
                monomial(q_exp=2, a=3, b=-1, c=-1, d=-1, e=-1, f=-2),
            ),
        ),
        termination_class=TERMINATING,
    )
)


def _bailey_10w9_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e, f, lam = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f", "lam"))
    params = (b, c, d, e, f, lam * a * q ** (N + 1) / (e * f), q**-N)
    return Side(series=VwpSpec(s=a, params=params, q=q, z=q, termination=N))


def _bailey_10w9_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e, f, lam = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f", "lam"))
    num = pochs((a * q, N), (a * q / (e * f), N), (lam * q / e, N), (lam * q / f, N))
    den = pochs((a * q / e, N), (a * q / f, N), (lam * q, N), (lam * q / (e * f), N))
    params = (
        lam * b / a,
        lam * c / a,
        lam * d / a,
        e,
        f,
        lam * a * q ** (N + 1) / (e * f),
        q**-N,
    )
    return Side(
        series=VwpSpec(s=lam, params=params, q=q, z=q, termination=N),
        prefactor_num=num,
        prefactor_den=den,
    )


register(
    IdentityRecord(
        id="bailey_10w9",
        group="bailey",
        title="Bailey transformation for a terminating very-well-poised 10W9 sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_bailey_10w9_lhs,
        rhs=_bailey_10w9_rhs,
        scalars=("a", "b", "c", "d", "e", "f", "lam"),
        constraints=(
            BalancingRule("lam", monomial(q_exp=1, a=2, b=-1, c=-1, d=-1)),
        ),
        termination_class=TERMINATING,
    )
)


def _balanced_duality_symmetric_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    c = p.scalar("c")
    a, b = p.vector("a"), p.vector("b")
    x, y = p.vector("x"), p.vector("y")
    series = AnSeries(
        q=q,
        x=x,
        z=Fraction(1),
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(bk * xi * yk for xi in x) for bk, yk in zip(b, y)),
        per_index_den=tuple(tuple(c * xi * yk for xi in x) for yk in y),
    )
    return Side(series=series, domain=Shell(N))


def _balanced_duality_symmetric_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    c = p.scalar("c")
    a, b = p.vector("a"), p.vector("b")
    x, y = p.vector("x"), p.vector("y")
    series = AnSeries(
        q=q,
        x=y,
        z=Fraction(1),
        cross_num=(tuple(c / bl for bl in b),),
        cross_den=((q,) * len(y),),
        per_index_num=tuple(tuple((c / ai) * xi * yk for yk in y) for ai, xi in zip(a, x)),
        per_index_den=tuple(tuple(c * xi * yk for yk in y) for xi in x),
    )
    return Side(series=series, domain=Shell(N))


register(
    IdentityRecord(
        id="balanced_duality_symmetric",
        group="duality",
        title="Equal-weight duality between two sums over a fixed total degree",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_balanced_duality_symmetric_lhs,
        rhs=_balanced_duality_symmetric_rhs,
        scalars=("c",),
        vectors=(
            VectorSpec("a", "n"),
            VectorSpec("b", "m"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("y", "m", coord=True),
        ),
        constraints=(
            BalancingRule(
                "a",
                monomial(c=LinExp(m=1), a=-1, b=-1),
                component=-1,
            ),
        ),
        termination_class=TERMINATING,
        notes="The product of both coefficient vectors equals the m-th power of c.",
    )
)


# ---------------------------------------------------------------------------
# Multiple Euler transformation


def _euler_mult_lhs(p: ParamSet) -> Side:
    q = p.q
    u, c = p.scalar("u"), p.scalar("c")
    a, b = p.vector("a"), p.vector("b")
    x, y = p.vector("x"), p.vector("y")
    series = AnSeries(
        q=q,
        x=x,
        z=u,
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(bk * xi * yk for xi in x) for bk, yk in zip(b, y)),
        per_index_den=tuple(tuple(c * xi * yk for xi in x) for yk in y),
    )
    return Side(series=series, domain=Infinite())


def _euler_mult_rhs(p: ParamSet) -> Side:
    q = p.q
    u, c = p.scalar("u"), p.scalar("c")
    a, b = p.vector("a"), p.vector("b")
    x, y = p.vector("x"), p.vector("y")
    m = len(y)
    w = p.product("a") * p.product("b") * u / c**m
    series = AnSeries(
        q=q,
        x=y,
        z=w,
        cross_num=(tuple(c / bl for bl in b),),
        cross_den=((q,) * m,),
        per_index_num=tuple(tuple((c / ai) * xi * yk for yk in y) for ai, xi in zip(a, x)),
        per_index_den=tuple(tuple(c * xi * yk for yk in y) for xi in x),
    )
    return Side(
        series=series,
        domain=Infinite(),
        prefactor_num=pochs((w, None)),
        prefactor_den=pochs((u, None)),
    )


def _euler_mult_moduli(p: ParamSet) -> tuple[Fraction, ...]:
    u, c = p.scalar("u"), p.scalar("c")
    return (u, p.product("a") * p.product("b") * u / c ** len(p.vector("y")))


register(
    IdentityRecord(
        id="euler_mult",
        group="euler",
        title="Euler transformation between nonterminating sums of complementary ranks",
        dims=DimsSignature(n=None, m=None),
        lhs=_euler_mult_lhs,
        rhs=_euler_mult_rhs,
        scalars=("u", "c"),
        vectors=(
            VectorSpec("a", "n"),
            VectorSpec("b", "m"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=Nonterminating(
            moduli=_euler_mult_moduli,
            description="max(|u|, |A B u / c^m|) < 1",
        ),
    )
)


# ---------------------------------------------------------------------------
# Non-balanced duality transformation


def _duality_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, e = p.scalar("a"), p.scalar("c"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    d, y = p.vector("d"), p.vector("y")
    m = len(y)
    z = a ** (m + 1) * q ** (N + m + 1) / (p.product("b") * c * p.product("d") * e**m)
    u = (c,) + tuple(dk * yk for dk, yk in zip(d, y))
    v = (q**-N,) + tuple(e / yk for yk in y)
    return Side(wnm=WnmSpec(s=a, a=b, x=x, u=u, v=v, q=q, z=z), domain=Weight(N))


def _duality_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, e = p.scalar("a"), p.scalar("c"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    d, y = p.vector("d"), p.vector("y")
    m = len(y)
    head = a ** (m + 1) * q ** (m + 1) / (p.product("b") * c * p.product("d") * e**m)
    num = [(head, N)]
    den = [(a * q / c, N)]
    for bi, xi in zip(b, x):
        num.append((a * q * xi, N))
        den.append(((a * q / bi) * xi, N))
    for dk, yk in zip(d, y):
        num.append((e / yk, N))
        den.append(((a * q / dk) / yk, N))
    series = AnSeries(
        q=q,
        x=y,
        z=q,
        cross_num=(tuple(a * q / (dl * e) for dl in d),),
        cross_den=((q,) * m,),
        per_index_num=tuple(
            tuple((a * q / (bi * e)) * xi * yk for yk in y) for bi, xi in zip(b, x)
        )
        + (tuple((a * q / (c * e)) * yk for yk in y),),
        per_index_den=tuple(tuple((a * q / e) * xi * yk for yk in y) for xi in x)
        + (tuple((q ** (1 - N) / e) * yk for yk in y),),
        weight_num=(q**-N,),
        weight_den=(head,),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="duality",
        group="duality",
        title="Duality transformation exchanging the two summation ranks",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_duality_lhs,
        rhs=_duality_rhs,
        scalars=("a", "c", "e"),
        vectors=(
            VectorSpec("b", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("d", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=TERMINATING,
    )
)


def _duality_m1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    z = a**2 * q ** (N + 2) / (p.product("b") * c * d * e)
    return Side(
        wnm=WnmSpec(s=a, a=b, x=x, u=(c, d), v=(q**-N, e), q=q, z=z),
        domain=Weight(N),
    )


def _duality_m1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    head = a**2 * q**2 / (p.product("b") * c * d * e)
    num = [(head, N), (e, N)]
    den = [(a * q / c, N), (a * q / d, N)]
    for bi, xi in zip(b, x):
        num.append((a * q * xi, N))
        den.append(((a * q / bi) * xi, N))
    upper = (
        (q**-N,)
        + tuple((a * q / (bi * e)) * xi for bi, xi in zip(b, x))
        + (a * q / (c * e), a * q / (d * e))
    )
    lower = (q ** (1 - N) / e,) + tuple((a * q / e) * xi for xi in x) + (head,)
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=q, termination=N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="duality_m1",
        group="duality",
        title="Duality transformation onto a single balanced-type sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_duality_m1_lhs,
        rhs=_duality_m1_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
    )
)


def _duality_n1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, d, e = (p.scalar(s) for s in ("a", "b", "d", "e"))
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    z = a ** (m + 1) * q ** (N + m + 1) / (b * p.product("c") * d * e**m)
    params = (
        (b,)
        + tuple(ck * yk for ck, yk in zip(c, y))
        + (d,)
        + tuple(e / yk for yk in y)
        + (q**-N,)
    )
    return Side(series=VwpSpec(s=a, params=params, q=q, z=z, termination=N))


def _duality_n1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, d, e = (p.scalar(s) for s in ("a", "b", "d", "e"))
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    head = a ** (m + 1) * q ** (m + 1) / (b * p.product("c") * d * e**m)
    num = [(head, N), (a * q, N)]
    den = [(a * q / b, N), (a * q / d, N)]
    for ck, yk in zip(c, y):
        num.append((e / yk, N))
        den.append(((a * q / ck) / yk, N))
    series = AnSeries(
        q=q,
        x=y,
        z=q,
        cross_num=(tuple(a * q / (cl * e) for cl in c),),
        cross_den=((q,) * m,),
        per_index_num=(
            tuple((a * q / (b * e)) * yk for yk in y),
            tuple((a * q / (d * e)) * yk for yk in y),
        ),
        per_index_den=(
            tuple((a * q / e) * yk for yk in y),
            tuple((q ** (1 - N) / e) * yk for yk in y),
        ),
        weight_num=(q**-N,),
        weight_den=(head,),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="duality_n1",
        group="duality",
        title="Duality transformation from a single very-well-poised sum",
        dims=DimsSignature(n=1, m=None, order=True),
        lhs=_duality_n1_lhs,
        rhs=_duality_n1_rhs,
        scalars=("a", "b", "d", "e"),
        vectors=(VectorSpec("c", "m"), VectorSpec("y", "m", coord=True)),
        termination_class=TERMINATING,
    )
)


def _duality_1d_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    z = a**2 * q ** (N + 2) / (b * c * d * e)
    return Side(
        series=VwpSpec(s=a, params=(b, c, d, e, q**-N), q=q, z=z, termination=N)
    )


def _duality_1d_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    head = a**2 * q**2 / (b * c * d * e)
    num = pochs((head, N), (e, N), (a * q, N))
    den = pochs((a * q / b, N), (a * q / c, N), (a * q / d, N))
    upper = (q**-N, a * q / (b * e), a * q / (c * e), a * q / (d * e))
    lower = (q ** (1 - N) / e, head, a * q / e)
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=q, termination=N),
        prefactor_num=num,
        prefactor_den=den,
    )


register(
    IdentityRecord(
        id="duality_1d",
        group="duality",
        title="Terminating very-well-poised sum as a balanced-type sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_duality_1d_lhs,
        rhs=_duality_1d_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=TERMINATING,
    )
)


# ---------------------------------------------------------------------------
# Inverse duality transformation


def _inverse_duality_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    c, d, e = p.scalar("c"), p.scalar("d"), p.scalar("e")
    a, x = p.vector("a"), p.vector("x")
    b, y = p.vector("b"), p.vector("y")
    m = len(y)
    tail = p.product("a") * p.product("b") * c * q ** (1 - N) / (d * e**m)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(bk * xi * yk for xi in x) for bk, yk in zip(b, y))
        + (tuple(c * xi for xi in x),),
        per_index_den=tuple(tuple(e * xi * yk for xi in x) for yk in y)
        + (tuple(tail * xi for xi in x),),
        weight_num=(q**-N,),
        weight_den=(d,),
    )
    return Side(series=series, domain=Weight(N))


def _inverse_duality_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    c, d, e = p.scalar("c"), p.scalar("d"), p.scalar("e")
    a, x = p.vector("a"), p.vector("x")
    b, y = p.vector("b"), p.vector("y")
    m = len(y)
    AB = p.product("a") * p.product("b")
    core = d * e**m / (AB * c)
    num = [(d * e**m / AB, N)]
    den = [(d, N)]
    for bk, yk in zip(b, y):
        num.append(((core * bk) * yk, N))
        den.append(((core * e) * yk, N))
    for ai, xi in zip(a, x):
        num.append(((core * ai) / xi, N))
        den.append((core / xi, N))
    u = (e / c,) + tuple((e / ai) * xi for ai, xi in zip(a, x))
    v = (q**-N,) + tuple(core / xi for xi in x)
    return Side(
        wnm=WnmSpec(
            s=core * e / q,
            a=tuple(e / bk for bk in b),
            x=y,
            u=u,
            v=v,
            q=q,
            z=d * q**N,
        ),
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="inverse_duality",
        group="duality",
        title="Inverse duality transformation exchanging the two summation ranks",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_inverse_duality_lhs,
        rhs=_inverse_duality_rhs,
        scalars=("c", "d", "e"),
        vectors=(
            VectorSpec("a", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("b", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=TERMINATING,
    )
)


def _inverse_duality_m1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    b, c, d, e = (p.scalar(s) for s in ("b", "c", "d", "e"))
    a, x = p.vector("a"), p.vector("x")
    tail = p.product("a") * b * c * q ** (1 - N) / (d * e)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple(b * xi for xi in x),
            tuple(c * xi for xi in x),
        ),
        per_index_den=(
            tuple(e * xi for xi in x),
            tuple(tail * xi for xi in x),
        ),
        weight_num=(q**-N,),
        weight_den=(d,),
    )
    return Side(series=series, domain=Weight(N))


def _inverse_duality_m1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    b, c, d, e = (p.scalar(s) for s in ("b", "c", "d", "e"))
    a, x = p.vector("a"), p.vector("x")
    A = p.product("a")
    core = d * e / (A * b * c)
    num = [(core * c, N), (core * b, N)]
    den = [(core * e, N), (d, N)]
    for ai, xi in zip(a, x):
        num.append(((core * ai) / xi, N))
        den.append((core / xi, N))
    params = (
        tuple((e / ai) * xi for ai, xi in zip(a, x))
        + tuple(core / xi for xi in x)
        + (e / b, e / c, q**-N)
    )
    return Side(
        series=VwpSpec(s=core * e / q, params=params, q=q, z=d * q**N, termination=N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="inverse_duality_m1",
        group="duality",
        title="Inverse duality transformation onto a single very-well-poised sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_inverse_duality_m1_lhs,
        rhs=_inverse_duality_m1_rhs,
        scalars=("b", "c", "d", "e"),
        vectors=(VectorSpec("a", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        notes="The coefficient paired with each inverted coordinate carries no "
        "extra power of the base.",
    )
)


def _inverse_duality_n1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, y = p.vector("b"), p.vector("y")
    m = len(y)
    tail = a * p.product("b") * c * q ** (1 - N) / (d * e**m)
    upper = (q**-N, a) + tuple(bk * yk for bk, yk in zip(b, y)) + (c,)
    lower = (d,) + tuple(e * yk for yk in y) + (tail,)
    return Side(series=PhiSpec(upper=upper, lower=lower, q=q, z=q, termination=N))


def _inverse_duality_n1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, y = p.vector("b"), p.vector("y")
    m = len(y)
    B = p.product("b")
    core = d * e**m / (a * B * c)
    num = [(d * e**m / (a * B), N), (d * e**m / (B * c), N)]
    den = [(d, N), (core, N)]
    for bk, yk in zip(b, y):
        num.append(((core * bk) * yk, N))
        den.append(((core * e) * yk, N))
    return Side(
        wnm=WnmSpec(
            s=core * e / q,
            a=tuple(e / bk for bk in b),
            x=y,
            u=(e / c, e / a),
            v=(q**-N, core),
            q=q,
            z=d * q**N,
        ),
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="inverse_duality_n1",
        group="duality",
        title="Inverse duality transformation from a single balanced-type sum",
        dims=DimsSignature(n=1, m=None, order=True),
        lhs=_inverse_duality_n1_lhs,
        rhs=_inverse_duality_n1_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "m"), VectorSpec("y", "m", coord=True)),
        termination_class=TERMINATING,
    )
)


def _inverse_duality_1d_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    tail = a * b * c * q ** (1 - N) / (d * e)
    return Side(
        series=PhiSpec(
            upper=(q**-N, a, b, c), lower=(d, e, tail), q=q, z=q, termination=N
        )
    )


def _inverse_duality_1d_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    core = d * e / (a * b * c)
    num = pochs((d * e / (b * c), N), (d * e / (a * c), N), (d * e / (a * b), N))
    den = pochs((core * e, N), (core, N), (d, N))
    params = (e / a, core, e / b, e / c, q**-N)
    return Side(
        series=VwpSpec(s=core * e / q, params=params, q=q, z=d * q**N, termination=N),
        prefactor_num=num,
        prefactor_den=den,
    )


register(
    IdentityRecord(
        id="inverse_duality_1d",
        group="duality",
        title="Balanced-type sum as a very-well-poised sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_inverse_duality_1d_lhs,
        rhs=_inverse_duality_1d_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=TERMINATING,
    )
)


def _inverse_duality_symmetric_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    c = p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    b, y = p.vector("b"), p.vector("y")
    m = len(y)
    tail = p.product("a") * p.product("b") * q ** (1 - N) / c**m
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(bk * xi * yk for xi in x) for bk, yk in zip(b, y)),
        per_index_den=tuple(tuple(c * xi * yk for xi in x) for yk in y),
        weight_num=(q**-N,),
        weight_den=(tail,),
    )
    return Side(series=series, domain=Weight(N))


def _inverse_duality_symmetric_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    c = p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    b, y = p.vector("b"), p.vector("y")
    m = len(y)
    series = AnSeries(
        q=q,
        x=y,
        z=Fraction(1),
        cross_num=(tuple(c / bl for bl in b),),
        cross_den=((q,) * m,),
        per_index_num=tuple(tuple((c / ai) * xi * yk for yk in y) for ai, xi in zip(a, x)),
        per_index_den=tuple(tuple(c * xi * yk for yk in y) for xi in x),
    )
    return Side(
        series=series,
        domain=Shell(N),
        prefactor_num=pochs((q, N)),
        prefactor_den=pochs((c**m / (p.product("a") * p.product("b")), N)),
    )


register(
    IdentityRecord(
        id="inverse_duality_symmetric",
        group="duality",
        title="Triangular sum against its top equal-weight slice in the dual rank",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_inverse_duality_symmetric_lhs,
        rhs=_inverse_duality_symmetric_rhs,
        scalars=("c",),
        vectors=(
            VectorSpec("a", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("b", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=TERMINATING,
    )
)
