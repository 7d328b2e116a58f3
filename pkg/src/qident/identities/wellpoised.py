"""Very-well-poised records: the nonterminating transformation that trades
the principal parameter for a smaller one, and the terminating transformation
whose image sum is very well poised in q^-N e/d.  Both come as general
two-rank statements, collapsed single-rank forms, and the classical
one-dimensional transformations.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MissingParameter
from ..params import BalancingRule, LinExp, ParamSet, monomial
from ..series import AnSeries, Infinite, VwpSpec, Weight
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
# Nonterminating transformation


def _nonterminating_8w7_an_lhs(p: ParamSet) -> Side:
    q = p.q
    a, d, e, f, mu = (p.scalar(s) for s in ("a", "d", "e", "f", "mu"))
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    series = AnSeries(
        q=q,
        x=x,
        z=mu * f / a,
        x_exponent=-1,
        e2_exponent=1,
        vwp=a,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(ck * xi * yk for xi in x) for ck, yk in zip(c, y))
        + ((tuple(d * xi for xi in x)), (tuple(e * xi for xi in x))),
        per_index_den=tuple(tuple((a * q / f) * xi * yk for xi in x) for yk in y),
        weight_num=tuple(a * xi for xi in x) + tuple(f / yk for yk in y),
        weight_den=tuple((a * q / bi) * xi for bi, xi in zip(b, x))
        + tuple((a * q / ck) / yk for ck, yk in zip(c, y))
        + (a * q / d, a * q / e),
    )
    return Side(series=series, domain=Infinite())


def _nonterminating_8w7_an_rhs(p: ParamSet) -> Side:
    q = p.q
    a, d, e, f, mu = (p.scalar(s) for s in ("a", "d", "e", "f", "mu"))
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    num = [(mu * d * f / a, None), (mu * e * f / a, None)]
    den = [(a * q / d, None), (a * q / e, None)]
    for ck, yk in zip(c, y):
        num += [((mu * ck * f / a) * yk, None), (f / yk, None)]
        den += [(mu * q * yk, None), ((a * q / ck) / yk, None)]
    for bi, xi in zip(b, x):
        num += [(a * q * xi, None), ((mu * bi * f / a) / xi, None)]
        den += [((a * q / bi) * xi, None), ((mu * f / a) / xi, None)]
    series = AnSeries(
        q=q,
        x=y,
        z=f,
        x_exponent=-1,
        e2_exponent=1,
        vwp=mu,
        cross_num=(tuple(a * q / (cl * f) for cl in c),),
        cross_den=((q,) * len(y),),
        per_index_num=tuple(
            tuple((a * q / (bi * f)) * xi * yk for yk in y) for bi, xi in zip(b, x)
        )
        + (
            (tuple((a * q / (d * f)) * yk for yk in y)),
            (tuple((a * q / (e * f)) * yk for yk in y)),
        ),
        per_index_den=tuple(tuple((a * q / f) * xi * yk for yk in y) for xi in x),
        weight_num=tuple(mu * yk for yk in y) + tuple((mu * f / a) / xi for xi in x),
        weight_den=tuple((mu * ck * f / a) * yk for ck, yk in zip(c, y))
        + tuple((mu * bi * f / a) / xi for bi, xi in zip(b, x))
        + (mu * d * f / a, mu * e * f / a),
    )
    return Side(
        series=series,
        domain=Infinite(),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


def _nonterminating_8w7_an_moduli(p: ParamSet) -> tuple[Fraction, ...]:
    a, f, mu = p.scalar("a"), p.scalar("f"), p.scalar("mu")
    return tuple((mu * f / a) / xi for xi in p.vector("x")) + tuple(
        f / yk for yk in p.vector("y")
    )


register(
    IdentityRecord(
        id="nonterminating_8w7_an",
        group="well_poised",
        title="Nonterminating very-well-poised transformation of both ranks",
        dims=DimsSignature(n=None, m=None),
        lhs=_nonterminating_8w7_an_lhs,
        rhs=_nonterminating_8w7_an_rhs,
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
        termination_class=Nonterminating(
            moduli=_nonterminating_8w7_an_moduli,
            description="|mu f / (a x_i)| < 1 for every i and |f / y_k| < 1",
        ),
        reductions=(
            ReductionLink(
                target="nonterminating_8w7_m1",
                m=1,
                prepare=lambda p: pin_coords(p, "y"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    scalars={**p.scalars, "c": p.vector("c")[0]},
                    vectors={"b": p.vector("b"), "x": p.vector("x")},
                ),
                description="second rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


def _nonterminating_8w7_m1_lhs(p: ParamSet) -> Side:
    q = p.q
    a, c, d, e, f = (p.scalar(s) for s in ("a", "c", "d", "e", "f"))
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a**2 * q**2 / (p.product("b") * c * d * e * f),
        x_exponent=-1,
        e2_exponent=1,
        vwp=a,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple(c * xi for xi in x),
            tuple(d * xi for xi in x),
            tuple(e * xi for xi in x),
        ),
        per_index_den=(tuple((a * q / f) * xi for xi in x),),
        weight_num=(f,) + tuple(a * xi for xi in x),
        weight_den=(a * q / c, a * q / d, a * q / e)
        + tuple((a * q / bi) * xi for bi, xi in zip(b, x)),
    )
    return Side(series=series, domain=Infinite())


def _nonterminating_8w7_m1_rhs(p: ParamSet) -> Side:
    q = p.q
    a, c, d, e, f, mu = (p.scalar(s) for s in ("a", "c", "d", "e", "f", "mu"))
    b, x = p.vector("b"), p.vector("x")
    num = [(mu * c * f / a, None), (mu * d * f / a, None), (mu * e * f / a, None), (f, None)]
    den = [(a * q / c, None), (a * q / d, None), (a * q / e, None), (mu * q, None)]
    for bi, xi in zip(b, x):
        num += [(a * q * xi, None), ((mu * bi * f / a) / xi, None)]
        den += [((a * q / bi) * xi, None), ((mu * f / a) / xi, None)]
    params = (
        tuple((a * q / (bi * f)) * xi for bi, xi in zip(b, x))
        + (a * q / (c * f), a * q / (d * f), a * q / (e * f))
        + tuple((mu * f / a) / xi for xi in x)
    )
    return Side(
        series=VwpSpec(s=mu, params=params, q=q, z=f),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="nonterminating_8w7_m1",
        group="well_poised",
        title="Nonterminating very-well-poised transformation onto one sum",
        dims=DimsSignature(n=None, m=0),
        lhs=_nonterminating_8w7_m1_lhs,
        rhs=_nonterminating_8w7_m1_rhs,
        scalars=("a", "c", "d", "e", "f", "mu"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        constraints=(
            BalancingRule(
                "mu",
                monomial(q_exp=2, a=3, b=-1, c=-1, d=-1, e=-1, f=-2),
            ),
        ),
        termination_class=Nonterminating(
            moduli=lambda p: tuple(
                p.scalar("mu") * p.scalar("f") / (p.scalar("a") * xi)
                for xi in p.vector("x")
            )
            + (p.scalar("f"),),
            description="|mu f / (a x_i)| < 1 for every i and |f| < 1",
        ),
        reductions=(
            ReductionLink(
                target="nonterminating_8w7_1d",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    scalars={**p.scalars, "b": p.vector("b")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


def _nonterminating_8w7_1d_lhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, e, f = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f"))
    return Side(
        series=VwpSpec(
            s=a,
            params=(b, c, d, e, f),
            q=q,
            z=a**2 * q**2 / (b * c * d * e * f),
        )
    )


def _nonterminating_8w7_1d_rhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, e, f, mu = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f", "mu"))
    num = pochs(
        (mu * b * f / a, None),
        (mu * c * f / a, None),
        (mu * d * f / a, None),
        (mu * e * f / a, None),
        (a * q, None),
        (f, None),
    )
    den = pochs(
        (a * q / b, None),
        (a * q / c, None),
        (a * q / d, None),
        (a * q / e, None),
        (mu * q, None),
        (mu * f / a, None),
    )
    params = (
        a * q / (b * f),
        a * q / (c * f),
        a * q / (d * f),
        a * q / (e * f),
        mu * f / a,
    )
    return Side(
        series=VwpSpec(s=mu, params=params, q=q, z=f),
        prefactor_num=num,
        prefactor_den=den,
    )


register(
    IdentityRecord(
        id="nonterminating_8w7_1d",
        group="well_poised",
        title="Transformation lowering the principal very-well-poised parameter",
        dims=DimsSignature(n=1, m=0),
        lhs=_nonterminating_8w7_1d_lhs,
        rhs=_nonterminating_8w7_1d_rhs,
        scalars=("a", "b", "c", "d", "e", "f", "mu"),
        constraints=(
            BalancingRule(
                "mu",
                monomial(q_exp=2, a=3, b=-1, c=-1, d=-1, e=-1, f=-2),
            ),
        ),
        termination_class=Nonterminating(
            moduli=lambda p: (
                p.scalar("a") ** 2
                * p.q**2
                / (
                    p.scalar("b")
                    * p.scalar("c")
                    * p.scalar("d")
                    * p.scalar("e")
                    * p.scalar("f")
                ),
                p.scalar("f"),
            ),
            description="max(|a^2 q^2 / (b c d e f)|, |f|) < 1",
        ),
    )
)


# ---------------------------------------------------------------------------
# Terminating transformation


def _terminating_8w7_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    z = a ** (m + 1) * q ** (m + N + 1) / (p.product("b") * p.product("c") * d**m * e)
    series = AnSeries(
        q=q,
        x=x,
        z=z,
        x_exponent=1,
        e2_exponent=-1,
        vwp=a,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(ck * xi * yk for xi in x) for ck, yk in zip(c, y)),
        per_index_den=tuple(tuple((a * q / d) * xi * yk for xi in x) for yk in y)
        + (
            (tuple(a * q ** (N + 1) * xi for xi in x)),
            (tuple((a * q / e) * xi for xi in x)),
        ),
        weight_num=(q**-N, e)
        + tuple(a * xi for xi in x)
        + tuple(d / yk for yk in y),
        weight_den=tuple((a * q / bi) * xi for bi, xi in zip(b, x))
        + tuple((a * q / ck) / yk for ck, yk in zip(c, y)),
    )
    return Side(series=series, domain=Weight(N))


def _terminating_8w7_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    num, den = [], []
    for ck, yk in zip(c, y):
        num += [((a * q / (ck * e)) / yk, N), (d / yk, N)]
        den += [((a * q / ck) / yk, N), ((d / e) / yk, N)]
    for bi, xi in zip(b, x):
        num += [((a * q / (bi * e)) * xi, N), (a * q * xi, N)]
        den += [((a * q / bi) * xi, N), ((a * q / e) * xi, N)]
    pivot = q**-N * e / d
    series = AnSeries(
        q=q,
        x=y,
        z=p.product("b") * p.product("c") * d ** (m - 1) * q ** (1 - m) / a**m,
        x_exponent=1,
        e2_exponent=-1,
        vwp=pivot,
        cross_num=(tuple(a * q / (cl * d) for cl in c),),
        cross_den=((q,) * m,),
        per_index_num=tuple(
            tuple((a * q / (bi * d)) * xi * yk for yk in y) for bi, xi in zip(b, x)
        ),
        per_index_den=tuple(tuple((a * q / d) * xi * yk for yk in y) for xi in x)
        + (
            (tuple((q * e / d) * yk for yk in y)),
            (tuple((q ** (1 - N) / d) * yk for yk in y)),
        ),
        weight_num=(q**-N, e)
        + tuple(pivot * yk for yk in y)
        + tuple((q**-N * e / a) / xi for xi in x),
        weight_den=tuple((q**-N * ck * e / a) * yk for ck, yk in zip(c, y))
        + tuple((q**-N * bi * e / a) / xi for bi, xi in zip(b, x)),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="terminating_8w7_an",
        group="well_poised",
        title="Terminating very-well-poised transformation of both ranks",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_terminating_8w7_an_lhs,
        rhs=_terminating_8w7_an_rhs,
        scalars=("a", "d", "e"),
        vectors=(
            VectorSpec("b", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("c", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="terminating_8w7_m1",
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
        notes="The image sum is very well poised in q^-N e/d and its "
        "argument carries the power q^(1-m).",
    )
)


def _terminating_8w7_m1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a**2 * q ** (2 + N) / (p.product("b") * c * d * e),
        x_exponent=1,
        e2_exponent=-1,
        vwp=a,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(
            tuple((a * q / d) * xi for xi in x),
            tuple((a * q / e) * xi for xi in x),
            tuple(a * q ** (N + 1) * xi for xi in x),
        ),
        weight_num=(q**-N, d, e) + tuple(a * xi for xi in x),
        weight_den=(a * q / c,) + tuple((a * q / bi) * xi for bi, xi in zip(b, x)),
    )
    return Side(series=series, domain=Weight(N))


def _terminating_8w7_m1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    num = [(a * q / (c * e), N), (d, N)]
    den = [(a * q / c, N), (d / e, N)]
    for bi, xi in zip(b, x):
        num += [((a * q / (bi * e)) * xi, N), (a * q * xi, N)]
        den += [((a * q / bi) * xi, N), ((a * q / e) * xi, N)]
    params = (
        tuple((a * q / (bi * d)) * xi for bi, xi in zip(b, x))
        + tuple((q**-N * e / a) / xi for xi in x)
        + (a * q / (c * d), e, q**-N)
    )
    return Side(
        series=VwpSpec(
            s=q**-N * e / d,
            params=params,
            q=q,
            z=p.product("b") * c / a,
            termination=N,
        ),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="terminating_8w7_m1",
        group="well_poised",
        title="Terminating very-well-poised transformation onto one sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_terminating_8w7_m1_lhs,
        rhs=_terminating_8w7_m1_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="terminating_8w7_1d",
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


def _terminating_8w7_1d_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=VwpSpec(
            s=a,
            params=(b, c, d, e, q**-N),
            q=q,
            z=a**2 * q ** (N + 2) / (b * c * d * e),
            termination=N,
        )
    )


def _terminating_8w7_1d_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=VwpSpec(
            s=q**-N * e / d,
            params=(a * q / (b * d), q**-N * e / a, a * q / (c * d), e, q**-N),
            q=q,
            z=b * c / a,
            termination=N,
        ),
        prefactor_num=pochs(
            (a * q / (b * e), N), (a * q / (c * e), N), (a * q, N), (d, N)
        ),
        prefactor_den=pochs(
            (a * q / b, N), (a * q / c, N), (a * q / e, N), (d / e, N)
        ),
    )


register(
    IdentityRecord(
        id="terminating_8w7_1d",
        group="well_poised",
        title="Watson-Bailey transformation between terminating very-well-poised sums",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_terminating_8w7_1d_lhs,
        rhs=_terminating_8w7_1d_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=TERMINATING,
    )
)
