"""Sears-type records: the terminating balanced transformation between sums
of complementary ranks, its nonterminating partner, the reversed terminating
form, and the Hall transformation obtained from it in the nonterminating
limit.  Each family comes in a general two-rank shape, a collapsed shape with
the second rank pinned, and the classical one-dimensional statement.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MissingParameter
from ..params import BalancingRule, LinExp, ParamSet, monomial
from ..series import AnSeries, Infinite, PhiSpec, Weight
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
# Terminating balanced transformation (Sears type)


def _sears_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    tail = a * p.product("b") * p.product("c") * q ** (1 - N) / (d**m * e)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(ck * xi * yk for xi in x) for ck, yk in zip(c, y)),
        per_index_den=tuple(tuple(d * xi * yk for xi in x) for yk in y),
        weight_num=(q**-N, a),
        weight_den=(e, tail),
    )
    return Side(series=series, domain=Weight(N))


def _sears_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    head = d**m * e / (p.product("b") * p.product("c"))
    series = AnSeries(
        q=q,
        x=y,
        z=q,
        cross_num=(tuple(d / cl for cl in c),),
        cross_den=((q,) * m,),
        per_index_num=tuple(
            tuple((d / bi) * xi * yk for yk in y) for bi, xi in zip(b, x)
        ),
        per_index_den=tuple(tuple(d * xi * yk for yk in y) for xi in x),
        weight_num=(q**-N, a),
        weight_den=(q ** (1 - N) * a / e, head),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs((e / a, N), (head, N)),
        prefactor_den=pochs((e, N), (head / a, N)),
    )


register(
    IdentityRecord(
        id="sears_an",
        group="sears",
        title="Terminating balanced transformation exchanging the two ranks",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_sears_an_lhs,
        rhs=_sears_an_rhs,
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
                target="sears_an_m1",
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


def _sears_an_m1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    tail = a * p.product("b") * c * q ** (1 - N) / (d * e)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(q**-N, a),
        weight_den=(e, tail),
    )
    return Side(series=series, domain=Weight(N))


def _sears_an_m1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    head = d * e / (p.product("b") * c)
    upper = (q**-N, a, d / c) + tuple((d / bi) * xi for bi, xi in zip(b, x))
    lower = (q ** (1 - N) * a / e, head) + tuple(d * xi for xi in x)
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=q, termination=N),
        prefactor_num=pochs((e / a, N), (head, N)),
        prefactor_den=pochs((e, N), (head / a, N)),
    )


register(
    IdentityRecord(
        id="sears_an_m1",
        group="sears",
        title="Terminating balanced transformation onto a single balanced sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_sears_an_m1_lhs,
        rhs=_sears_an_m1_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="sears",
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


def _sears_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=PhiSpec(
            upper=(q**-N, a, b, c),
            lower=(d, e, a * b * c * q ** (1 - N) / (d * e)),
            q=q,
            z=q,
            termination=N,
        )
    )


def _sears_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    head = d * e / (b * c)
    return Side(
        series=PhiSpec(
            upper=(q**-N, a, d / b, d / c),
            lower=(d, a * q ** (1 - N) / e, head),
            q=q,
            z=q,
            termination=N,
        ),
        prefactor_num=pochs((e / a, N), (head, N)),
        prefactor_den=pochs((e, N), (head / a, N)),
    )


register(
    IdentityRecord(
        id="sears",
        group="sears",
        title="Sears transformation of a terminating balanced series",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_sears_lhs,
        rhs=_sears_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=TERMINATING,
    )
)


# ---------------------------------------------------------------------------
# Nonterminating balanced transformation


def _nonterminating_3phi2_an_lhs(p: ParamSet) -> Side:
    q = p.q
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    z = d**m * e / (a * p.product("b") * p.product("c"))
    series = AnSeries(
        q=q,
        x=x,
        z=z,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(tuple(ck * xi * yk for xi in x) for ck, yk in zip(c, y)),
        per_index_den=tuple(tuple(d * xi * yk for xi in x) for yk in y),
        weight_num=(a,),
        weight_den=(e,),
    )
    return Side(series=series, domain=Infinite())


def _nonterminating_3phi2_an_rhs(p: ParamSet) -> Side:
    q = p.q
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    b, x = p.vector("b"), p.vector("x")
    c, y = p.vector("c"), p.vector("y")
    m = len(y)
    head = d**m * e / (p.product("b") * p.product("c"))
    series = AnSeries(
        q=q,
        x=y,
        z=e / a,
        cross_num=(tuple(d / cl for cl in c),),
        cross_den=((q,) * m,),
        per_index_num=tuple(
            tuple((d / bi) * xi * yk for yk in y) for bi, xi in zip(b, x)
        ),
        per_index_den=tuple(tuple(d * xi * yk for yk in y) for xi in x),
        weight_num=(a,),
        weight_den=(head,),
    )
    return Side(
        series=series,
        domain=Infinite(),
        prefactor_num=pochs((e / a, None), (head, None)),
        prefactor_den=pochs((e, None), (head / a, None)),
    )


def _nonterminating_3phi2_an_moduli(p: ParamSet) -> tuple[Fraction, ...]:
    a, d, e = p.scalar("a"), p.scalar("d"), p.scalar("e")
    m = len(p.vector("y"))
    return (d**m * e / (a * p.product("b") * p.product("c")), e / a)


register(
    IdentityRecord(
        id="nonterminating_3phi2_an",
        group="three_two",
        title="Nonterminating balanced transformation exchanging the two ranks",
        dims=DimsSignature(n=None, m=None),
        lhs=_nonterminating_3phi2_an_lhs,
        rhs=_nonterminating_3phi2_an_rhs,
        scalars=("a", "d", "e"),
        vectors=(
            VectorSpec("b", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("c", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=Nonterminating(
            moduli=_nonterminating_3phi2_an_moduli,
            description="max(|d^m e / (a B C)|, |e/a|) < 1",
        ),
        reductions=(
            ReductionLink(
                target="nonterminating_3phi2_an_m1",
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


def _nonterminating_3phi2_an_m1_lhs(p: ParamSet) -> Side:
    q = p.q
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=d * e / (a * p.product("b") * c),
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(a,),
        weight_den=(e,),
    )
    return Side(series=series, domain=Infinite())


def _nonterminating_3phi2_an_m1_rhs(p: ParamSet) -> Side:
    q = p.q
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    head = d * e / (p.product("b") * c)
    upper = (d / c, a) + tuple((d / bi) * xi for bi, xi in zip(b, x))
    lower = (head,) + tuple(d * xi for xi in x)
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=e / a),
        prefactor_num=pochs((e / a, None), (head, None)),
        prefactor_den=pochs((e, None), (head / a, None)),
    )


register(
    IdentityRecord(
        id="nonterminating_3phi2_an_m1",
        group="three_two",
        title="Nonterminating balanced transformation onto a single series",
        dims=DimsSignature(n=None, m=0),
        lhs=_nonterminating_3phi2_an_m1_lhs,
        rhs=_nonterminating_3phi2_an_m1_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=Nonterminating(
            moduli=lambda p: (
                p.scalar("d") * p.scalar("e")
                / (p.scalar("a") * p.product("b") * p.scalar("c")),
                p.scalar("e") / p.scalar("a"),
            ),
            description="max(|d e / (a B c)|, |e/a|) < 1",
        ),
        reductions=(
            ReductionLink(
                target="nonterminating_3phi2",
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


def _nonterminating_3phi2_lhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=PhiSpec(upper=(a, b, c), lower=(d, e), q=q, z=d * e / (a * b * c))
    )


def _nonterminating_3phi2_rhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    head = d * e / (b * c)
    return Side(
        series=PhiSpec(upper=(a, d / b, d / c), lower=(d, head), q=q, z=e / a),
        prefactor_num=pochs((e / a, None), (head, None)),
        prefactor_den=pochs((e, None), (head / a, None)),
    )


register(
    IdentityRecord(
        id="nonterminating_3phi2",
        group="three_two",
        title="Transformation of a nonterminating series with balanced argument",
        dims=DimsSignature(n=1, m=0),
        lhs=_nonterminating_3phi2_lhs,
        rhs=_nonterminating_3phi2_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=Nonterminating(
            moduli=lambda p: (
                p.scalar("d") * p.scalar("e")
                / (p.scalar("a") * p.scalar("b") * p.scalar("c")),
                p.scalar("e") / p.scalar("a"),
            ),
            description="max(|d e / (a b c)|, |e/a|) < 1",
        ),
    )
)


# ---------------------------------------------------------------------------
# Reversed terminating balanced transformation

_REVERSED_RULE = BalancingRule(
    "d",
    monomial(q_exp=LinExp(const=1, N=-1), a=LinExp(m=1), b=1, c=1, e=-1, f=-1),
)

_REVERSED_RULE_M1 = BalancingRule(
    "d",
    monomial(q_exp=LinExp(const=1, N=-1), a=1, b=1, c=1, e=-1, f=-1),
)


def _sears_reversed_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, f = (p.scalar(s) for s in ("a", "c", "d", "f"))
    b, x = p.vector("b"), p.vector("x")
    e, y = p.vector("e"), p.vector("y")
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(q**-N,) + tuple(a * yk for yk in y),
        weight_den=(f,) + tuple(ek * yk for ek, yk in zip(e, y)),
    )
    return Side(series=series, domain=Weight(N))


def _sears_reversed_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, f = p.scalar("a"), p.scalar("c"), p.scalar("f")
    b, x = p.vector("b"), p.vector("x")
    e, y = p.vector("e"), p.vector("y")
    m = len(y)
    B = p.product("b")
    head = p.product("e") * f / (a**m * B)
    num = [(head, N)] + [(a * yk, N) for yk in y]
    den = [(f, N)] + [(ek * yk, N) for ek, yk in zip(e, y)]
    for bi, xi in zip(b, x):
        num.append(((head / c) * bi / xi, N))
        den.append(((head / c) / xi, N))
    w = tuple(1 / yk for yk in y)
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(tuple(el / a for el in e),),
        cross_den=((q,) * m,),
        per_index_num=(tuple((f / a) * wk for wk in w),),
        per_index_den=(tuple((q ** (1 - N) / a) * wk for wk in w),),
        weight_num=(q**-N,) + tuple((head / c) / xi for xi in x),
        weight_den=(head,) + tuple((head / c) * bi / xi for bi, xi in zip(b, x)),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="sears_reversed_an",
        group="sears",
        title="Reversed terminating balanced transformation between the two ranks",
        dims=DimsSignature(n=None, m=None, order=True),
        lhs=_sears_reversed_an_lhs,
        rhs=_sears_reversed_an_rhs,
        scalars=("a", "c", "d", "f"),
        vectors=(
            VectorSpec("b", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("e", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        constraints=(_REVERSED_RULE,),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="sears_reversed_m1",
                m=1,
                prepare=lambda p: pin_coords(p, "y"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=p.order,
                    scalars={**p.scalars, "e": p.vector("e")[0]},
                    vectors={"b": p.vector("b"), "x": p.vector("x")},
                ),
                description="second rank 1 with its coordinate pinned to 1",
            ),
        ),
        notes="The prefactor denominator attaches each inverted coordinate "
        "alone; the numerator carries the matching coefficient ratio.",
    )
)


def _sears_reversed_m1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e, f = (p.scalar(s) for s in ("a", "c", "d", "e", "f"))
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(q**-N, a),
        weight_den=(e, f),
    )
    return Side(series=series, domain=Weight(N))


def _sears_reversed_m1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, e, f = (p.scalar(s) for s in ("a", "c", "e", "f"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    head = e * f / (a * B)
    num = [(head, N), (a, N)]
    den = [(e, N), (f, N)]
    for bi, xi in zip(b, x):
        num.append(((head / c) * bi / xi, N))
        den.append(((head / c) / xi, N))
    upper = (q**-N, e / a, f / a) + tuple((head / c) / xi for xi in x)
    lower = (q ** (1 - N) / a, head) + tuple(
        (head / c) * bi / xi for bi, xi in zip(b, x)
    )
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=q, termination=N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="sears_reversed_m1",
        group="sears",
        title="Reversed terminating balanced transformation onto a single sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_sears_reversed_m1_lhs,
        rhs=_sears_reversed_m1_rhs,
        scalars=("a", "c", "d", "e", "f"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        constraints=(_REVERSED_RULE_M1,),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="sears_reversed_1d",
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


def _sears_reversed_1d_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e, f = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f"))
    return Side(
        series=PhiSpec(
            upper=(q**-N, a, b, c), lower=(d, e, f), q=q, z=q, termination=N
        )
    )


def _sears_reversed_1d_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, e, f = (p.scalar(s) for s in ("a", "b", "c", "e", "f"))
    return Side(
        series=PhiSpec(
            upper=(q**-N, e / a, f / a, e * f / (a * b * c)),
            lower=(q ** (1 - N) / a, e * f / (a * b), e * f / (a * c)),
            q=q,
            z=q,
            termination=N,
        ),
        prefactor_num=pochs((e * f / (a * b), N), (e * f / (a * c), N), (a, N)),
        prefactor_den=pochs((e, N), (f, N), (e * f / (a * b * c), N)),
    )


register(
    IdentityRecord(
        id="sears_reversed_1d",
        group="sears",
        title="Reversed Sears transformation of a terminating balanced series",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_sears_reversed_1d_lhs,
        rhs=_sears_reversed_1d_rhs,
        scalars=("a", "b", "c", "d", "e", "f"),
        constraints=(_REVERSED_RULE_M1,),
        termination_class=TERMINATING,
    )
)


# ---------------------------------------------------------------------------
# Hall transformation (nonterminating limit of the reversed form)


def _hall_transform_an_lhs(p: ParamSet) -> Side:
    q = p.q
    a, c, f = p.scalar("a"), p.scalar("c"), p.scalar("f")
    b, x = p.vector("b"), p.vector("x")
    e, y = p.vector("e"), p.vector("y")
    m = len(y)
    z = p.product("e") * f / (a**m * p.product("b") * c)
    series = AnSeries(
        q=q,
        x=x,
        z=z,
        x_exponent=-1,
        e2_exponent=1,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        weight_num=tuple(a * yk for yk in y),
        weight_den=(f,) + tuple(ek * yk for ek, yk in zip(e, y)),
    )
    return Side(series=series, domain=Infinite())


def _hall_transform_an_rhs(p: ParamSet) -> Side:
    q = p.q
    a, c, f = p.scalar("a"), p.scalar("c"), p.scalar("f")
    b, x = p.vector("b"), p.vector("x")
    e, y = p.vector("e"), p.vector("y")
    m = len(y)
    B = p.product("b")
    head = p.product("e") * f / (a**m * B)
    num = [(head, None)] + [(a * yk, None) for yk in y]
    den = [(f, None)] + [(ek * yk, None) for ek, yk in zip(e, y)]
    for bi, xi in zip(b, x):
        num.append(((head / c) * bi / xi, None))
        den.append(((head / c) / xi, None))
    w = tuple(1 / yk for yk in y)
    series = AnSeries(
        q=q,
        x=w,
        z=a,
        x_exponent=-1,
        e2_exponent=1,
        cross_num=(tuple(el / a for el in e),),
        cross_den=((q,) * m,),
        per_index_num=(tuple((f / a) * wk for wk in w),),
        weight_num=tuple((head / c) / xi for xi in x),
        weight_den=(head,) + tuple((head / c) * bi / xi for bi, xi in zip(b, x)),
    )
    return Side(
        series=series,
        domain=Infinite(),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


def _hall_transform_an_moduli(p: ParamSet) -> tuple[Fraction, ...]:
    a, c, f = p.scalar("a"), p.scalar("c"), p.scalar("f")
    m = len(p.vector("y"))
    z = p.product("e") * f / (a**m * p.product("b") * c)
    return tuple(z / xi for xi in p.vector("x")) + tuple(
        a * yk for yk in p.vector("y")
    )


register(
    IdentityRecord(
        id="hall_transform_an",
        group="hall",
        title="Hall transformation between nonterminating sums of both ranks",
        dims=DimsSignature(n=None, m=None),
        lhs=_hall_transform_an_lhs,
        rhs=_hall_transform_an_rhs,
        scalars=("a", "c", "f"),
        vectors=(
            VectorSpec("b", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("e", "m"),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=Nonterminating(
            moduli=_hall_transform_an_moduli,
            description="|E f / (a^m B c x_i)| < 1 for every i and |a y_k| < 1",
        ),
        reductions=(
            ReductionLink(
                target="hall_transform_m1",
                m=1,
                prepare=lambda p: pin_coords(p, "y"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    scalars={**p.scalars, "e": p.vector("e")[0]},
                    vectors={"b": p.vector("b"), "x": p.vector("x")},
                ),
                description="second rank 1 with its coordinate pinned to 1",
            ),
        ),
        notes="Same prefactor shape as the reversed terminating form, with "
        "all finite lengths grown to infinite products.",
    )
)


def _hall_transform_m1_lhs(p: ParamSet) -> Side:
    q = p.q
    a, c, e, f = (p.scalar(s) for s in ("a", "c", "e", "f"))
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=e * f / (a * p.product("b") * c),
        x_exponent=-1,
        e2_exponent=1,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        weight_num=(a,),
        weight_den=(e, f),
    )
    return Side(series=series, domain=Infinite())


def _hall_transform_m1_rhs(p: ParamSet) -> Side:
    q = p.q
    a, c, e, f = (p.scalar(s) for s in ("a", "c", "e", "f"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    head = e * f / (a * B)
    num = [(head, None), (a, None)]
    den = [(e, None), (f, None)]
    for bi, xi in zip(b, x):
        num.append(((head / c) * bi / xi, None))
        den.append(((head / c) / xi, None))
    upper = (e / a, f / a) + tuple((head / c) / xi for xi in x)
    lower = (head,) + tuple((head / c) * bi / xi for bi, xi in zip(b, x))
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=a),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="hall_transform_m1",
        group="hall",
        title="Hall transformation onto a single nonterminating series",
        dims=DimsSignature(n=None, m=0),
        lhs=_hall_transform_m1_lhs,
        rhs=_hall_transform_m1_rhs,
        scalars=("a", "c", "e", "f"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=Nonterminating(
            moduli=lambda p: tuple(
                p.scalar("e") * p.scalar("f")
                / (p.scalar("a") * p.product("b") * p.scalar("c") * xi)
                for xi in p.vector("x")
            )
            + (p.scalar("a"),),
            description="|e f / (a B c x_i)| < 1 for every i and |a| < 1",
        ),
        reductions=(
            ReductionLink(
                target="hall_transform_3phi2",
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


def _hall_transform_3phi2_lhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, e, f = (p.scalar(s) for s in ("a", "b", "c", "e", "f"))
    return Side(
        series=PhiSpec(upper=(a, b, c), lower=(e, f), q=q, z=e * f / (a * b * c))
    )


def _hall_transform_3phi2_rhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, e, f = (p.scalar(s) for s in ("a", "b", "c", "e", "f"))
    return Side(
        series=PhiSpec(
            upper=(e / a, f / a, e * f / (a * b * c)),
            lower=(e * f / (a * b), e * f / (a * c)),
            q=q,
            z=a,
        ),
        prefactor_num=pochs(
            (e * f / (a * b), None), (e * f / (a * c), None), (a, None)
        ),
        prefactor_den=pochs((e, None), (f, None), (e * f / (a * b * c), None)),
    )


register(
    IdentityRecord(
        id="hall_transform_3phi2",
        group="hall",
        title="Hall three-term transformation of a nonterminating series",
        dims=DimsSignature(n=1, m=0),
        lhs=_hall_transform_3phi2_lhs,
        rhs=_hall_transform_3phi2_rhs,
        scalars=("a", "b", "c", "e", "f"),
        termination_class=Nonterminating(
            moduli=lambda p: (
                p.scalar("e") * p.scalar("f")
                / (p.scalar("a") * p.scalar("b") * p.scalar("c")),
                p.scalar("a"),
            ),
            description="max(|e f / (a b c)|, |a|) < 1",
        ),
    )
)
