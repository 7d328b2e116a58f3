"""Summation records: closed-form evaluations of Jackson, Rogers,
Saalschutz, Karlsson-Minton, Gauss and Bailey type, in one dimension and
for series attached to a root system of type A.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MissingParameter
from ..params import BalancingRule, LinExp, ParamSet, monomial
from ..series import AnSeries, Box, Infinite, PhiSpec, VwpSpec, Weight, WnmSpec
from .core import (
    TERMINATING,
    DimsSignature,
    IdentityRecord,
    Nonterminating,
    ReductionLink,
    Side,
    VectorSpec,
    pin_coords,
    pin_scalar_power,
    pochs,
    register,
)


def _order(p: ParamSet) -> int:
    if p.order is None:
        raise MissingParameter("this identity needs a truncation order N")
    return p.order


def _box(p: ParamSet) -> tuple[int, ...]:
    if p.box is None:
        raise MissingParameter("this identity needs a box of exponents")
    return p.box


_PIN_ORDER = 2  # truncation used when pinning a free scalar to a power of q


# ---------------------------------------------------------------------------
# Jackson-type summations


def _jackson_sum_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    return Side(
        wnm=WnmSpec(s=a, a=b, x=x, u=(c, e), v=(d, q**-N), q=q, z=q),
        domain=Weight(N),
    )


def _jackson_sum_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d = p.scalar("a"), p.scalar("c"), p.scalar("d")
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    num = [(a * q / (B * c), N), (a * q / (c * d), N)]
    den = [(a * q / (B * c * d), N), (a * q / c, N)]
    for bi, xi in zip(b, x):
        num += [((a * q / (bi * d)) * xi, N), (a * q * xi, N)]
        den += [((a * q / bi) * xi, N), ((a * q / d) * xi, N)]
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="jackson_sum_an",
        group="jackson",
        title="Jackson summation for a balanced very-well-poised multiple sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_jackson_sum_an_lhs,
        rhs=_jackson_sum_an_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        constraints=(
            BalancingRule(
                "e",
                monomial(q_exp=LinExp(const=1, N=1), a=2, b=-1, c=-1, d=-1),
            ),
        ),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="jackson_8w7_sum",
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


def _jackson_8w7_sum_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=VwpSpec(s=a, params=(b, c, d, e, q**-N), q=q, z=q, termination=N)
    )


def _jackson_8w7_sum_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d = (p.scalar(s) for s in ("a", "b", "c", "d"))
    num = pochs((a * q, N), (a * q / (b * c), N), (a * q / (b * d), N), (a * q / (c * d), N))
    den = pochs((a * q / (b * c * d), N), (a * q / b, N), (a * q / c, N), (a * q / d, N))
    return Side(prefactor_num=num, prefactor_den=den)


register(
    IdentityRecord(
        id="jackson_8w7_sum",
        group="jackson",
        title="Jackson summation for a terminating balanced very-well-poised sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_jackson_8w7_sum_lhs,
        rhs=_jackson_8w7_sum_rhs,
        scalars=("a", "b", "c", "d", "e"),
        constraints=(
            BalancingRule(
                "e",
                monomial(q_exp=LinExp(const=1, N=1), a=2, b=-1, c=-1, d=-1),
            ),
        ),
        termination_class=TERMINATING,
    )
)


# ---------------------------------------------------------------------------
# Rogers-type summations


def _rogers_sum_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c = p.scalar("a"), p.scalar("c")
    b, x = p.vector("b"), p.vector("x")
    z = a * q ** (N + 1) / (p.product("b") * c)
    return Side(
        wnm=WnmSpec(s=a, a=b, x=x, u=(c,), v=(q**-N,), q=q, z=z),
        domain=Weight(N),
    )


def _rogers_sum_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c = p.scalar("a"), p.scalar("c")
    b, x = p.vector("b"), p.vector("x")
    num = [(a * q / (p.product("b") * c), N)]
    den = [(a * q / c, N)]
    for bi, xi in zip(b, x):
        num.append((a * q * xi, N))
        den.append(((a * q / bi) * xi, N))
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="rogers_sum_an",
        group="rogers",
        title="Rogers summation for a very-well-poised multiple sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_rogers_sum_an_lhs,
        rhs=_rogers_sum_an_rhs,
        scalars=("a", "c"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="rogers_sum_classical",
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


def _rogers_sum_classical_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    z = a * q ** (N + 1) / (b * c)
    return Side(series=VwpSpec(s=a, params=(b, c, q**-N), q=q, z=z, termination=N))


def _rogers_sum_classical_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    return Side(
        prefactor_num=pochs((a * q, N), (a * q / (b * c), N)),
        prefactor_den=pochs((a * q / b, N), (a * q / c, N)),
    )


register(
    IdentityRecord(
        id="rogers_sum_classical",
        group="rogers",
        title="Rogers summation for a terminating very-well-poised 6W5 sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_rogers_sum_classical_lhs,
        rhs=_rogers_sum_classical_rhs,
        scalars=("a", "b", "c"),
        termination_class=TERMINATING,
    )
)


def _rogers_sum_an_alt_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c = p.scalar("a"), p.scalar("c")
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a * q ** (N + 1) / (p.product("b") * c),
        vwp=a,
        x_exponent=1,
        e2_exponent=-1,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_den=(
            tuple((a * q / c) * xi for xi in x),
            tuple(a * q ** (N + 1) * xi for xi in x),
        ),
        weight_num=(q**-N, c) + tuple(a * xi for xi in x),
        weight_den=tuple((a * q / bi) * xi for bi, xi in zip(b, x)),
    )
    return Side(series=series, domain=Weight(N))


def _rogers_sum_an_alt_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c = p.scalar("a"), p.scalar("c")
    b, x = p.vector("b"), p.vector("x")
    num, den = [], []
    for bi, xi in zip(b, x):
        num += [((a * q / (bi * c)) * xi, N), (a * q * xi, N)]
        den += [((a * q / bi) * xi, N), ((a * q / c) * xi, N)]
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="rogers_sum_an_alt",
        group="rogers",
        title="Rogers summation with the well-poising factor on inverted weights",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_rogers_sum_an_alt_lhs,
        rhs=_rogers_sum_an_alt_rhs,
        scalars=("a", "c"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
    )
)


# ---------------------------------------------------------------------------
# Saalschutz-type summations


def _saalschutz_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    b, c = p.scalar("b"), p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(b * xi for xi in x),),
        per_index_den=(tuple(c * xi for xi in x),),
        weight_num=(q**-N,),
        weight_den=(p.product("a") * b * q ** (1 - N) / c,),
    )
    return Side(series=series, domain=Weight(N))


def _saalschutz_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    b, c = p.scalar("b"), p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    num = [(c / b, N)]
    den = [(c / (p.product("a") * b), N)]
    for ai, xi in zip(a, x):
        num.append(((c / ai) * xi, N))
        den.append((c * xi, N))
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="saalschutz_an",
        group="saalschutz",
        title="Saalschutz summation for a balanced multiple sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_saalschutz_an_lhs,
        rhs=_saalschutz_an_rhs,
        scalars=("b", "c"),
        vectors=(VectorSpec("a", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="saalschutz",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={**p.scalars, "a": p.vector("a")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


def _saalschutz_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    return Side(
        series=PhiSpec(
            upper=(a, b, q**-N),
            lower=(c, a * b * q ** (1 - N) / c),
            q=q,
            z=q,
            termination=N,
        )
    )


def _saalschutz_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    return Side(
        prefactor_num=pochs((c / a, N), (c / b, N)),
        prefactor_den=pochs((c, N), (c / (a * b), N)),
    )


register(
    IdentityRecord(
        id="saalschutz",
        group="saalschutz",
        title="Saalschutz summation for a terminating balanced 3phi2 sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_saalschutz_lhs,
        rhs=_saalschutz_rhs,
        scalars=("a", "b", "c"),
        termination_class=TERMINATING,
    )
)


def _saalschutz_an_box_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    x = p.vector("x")
    absM = sum(M)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(b * xi for xi in x),),
        per_index_den=(tuple(c * xi for xi in x),),
        weight_num=(a,),
        weight_den=(a * b * q ** (1 - absM) / c,),
    )
    return Side(series=series, domain=Box(M))


def _saalschutz_an_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    x = p.vector("x")
    absM = sum(M)
    num = [(c / b, absM)]
    den = [(c / (a * b), absM)]
    for mi, xi in zip(M, x):
        num.append(((c / a) * xi, mi))
        den.append((c * xi, mi))
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="saalschutz_an_box",
        group="saalschutz",
        title="Saalschutz summation over a rectangular box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_saalschutz_an_box_lhs,
        rhs=_saalschutz_an_box_rhs,
        scalars=("a", "b", "c"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="saalschutz_an",
                prepare=lambda p: pin_scalar_power(p, "a", _PIN_ORDER),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=_PIN_ORDER,
                    scalars={"b": p.scalar("b"), "c": p.scalar("c")},
                    vectors={
                        "a": tuple(p.q**-mi for mi in p.box),
                        "x": p.vector("x"),
                    },
                ),
                description="box truncation matches the triangular sum when the "
                "free scalar is a negative power of q",
            ),
        ),
    )
)


# ---------------------------------------------------------------------------
# Karlsson-Minton-type summations


def _karlsson_minton_an_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    b, c = p.scalar("b"), p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    y = p.vector("y")
    absM = sum(M)
    series = AnSeries(
        q=q,
        x=x,
        z=q ** (1 - absM) / p.product("a"),
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=tuple(
            tuple(c * q**mk * xi * yk for xi in x) for mk, yk in zip(M, y)
        ),
        per_index_den=tuple(tuple(c * xi * yk for xi in x) for yk in y),
        weight_num=(b,),
        weight_den=(b * q,),
    )
    return Side(series=series, domain=Infinite())


def _karlsson_minton_an_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    b, c = p.scalar("b"), p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    y = p.vector("y")
    m = len(y)
    head = q ** (1 - sum(M)) * b / p.product("a")
    series = AnSeries(
        q=q,
        x=y,
        z=q,
        cross_num=(tuple(q**-ml for ml in M),),
        cross_den=((q,) * m,),
        per_index_num=tuple(tuple((c / ai) * xi * yk for yk in y) for ai, xi in zip(a, x)),
        per_index_den=tuple(tuple(c * xi * yk for yk in y) for xi in x),
        weight_num=(b,),
        weight_den=(head,),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs((q, None), (head, None)),
        prefactor_den=pochs((b * q, None), (head / b, None)),
    )


def _karlsson_minton_an_moduli(p: ParamSet) -> tuple[Fraction, ...]:
    return (p.q ** (1 - sum(_box(p))) / p.product("a"),)


register(
    IdentityRecord(
        id="karlsson_minton_an",
        group="karlsson_minton",
        title="Karlsson-Minton transformation with integral parameter offsets",
        dims=DimsSignature(n=None, m=None, box="m"),
        lhs=_karlsson_minton_an_lhs,
        rhs=_karlsson_minton_an_rhs,
        scalars=("b", "c"),
        vectors=(
            VectorSpec("a", "n"),
            VectorSpec("x", "n", coord=True),
            VectorSpec("y", "m", coord=True),
        ),
        termination_class=Nonterminating(
            moduli=_karlsson_minton_an_moduli,
            description="|q^(1-|M|) / A| < 1",
        ),
        reductions=(
            ReductionLink(
                target="karlsson_minton_m1",
                m=1,
                prepare=lambda p: pin_coords(p, "y"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=1,
                    box=p.box,
                    scalars=p.scalars,
                    vectors={"a": p.vector("a"), "x": p.vector("x")},
                ),
                description="one offset with its coordinate pinned to 1",
            ),
        ),
    )
)


def _karlsson_minton_sum_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    x = p.vector("x")
    upper = (a, b) + tuple(c * q**mi * xi for mi, xi in zip(M, x))
    lower = (b * q,) + tuple(c * xi for xi in x)
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=q ** (1 - sum(M)) / a)
    )


def _karlsson_minton_sum_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    x = p.vector("x")
    num = [(q, None), (b * q / a, None)]
    den = [(b * q, None), (q / a, None)]
    for mi, xi in zip(M, x):
        num.append(((c / b) * xi, mi))
        den.append((c * xi, mi))
    return Side(
        scale=b ** sum(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="karlsson_minton_sum",
        group="karlsson_minton",
        title="Karlsson-Minton summation with integral parameter offsets",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_karlsson_minton_sum_lhs,
        rhs=_karlsson_minton_sum_rhs,
        scalars=("a", "b", "c"),
        vectors=(VectorSpec("x", "n"),),
        termination_class=Nonterminating(
            moduli=lambda p: (p.q ** (1 - sum(_box(p))) / p.scalar("a"),),
            description="|q^(1-|M|) / a| < 1",
        ),
    )
)


def _karlsson_minton_m1_lhs(p: ParamSet) -> Side:
    q, (M,) = p.q, _box(p)
    b, c = p.scalar("b"), p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=q ** (1 - M) / p.product("a"),
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * q**M * xi for xi in x),),
        per_index_den=(tuple(c * xi for xi in x),),
        weight_num=(b,),
        weight_den=(b * q,),
    )
    return Side(series=series, domain=Infinite())


def _karlsson_minton_m1_rhs(p: ParamSet) -> Side:
    q, (M,) = p.q, _box(p)
    b, c = p.scalar("b"), p.scalar("c")
    a, x = p.vector("a"), p.vector("x")
    head = q ** (1 - M) * b / p.product("a")
    upper = (q**-M, b) + tuple((c / ai) * xi for ai, xi in zip(a, x))
    lower = (head,) + tuple(c * xi for xi in x)
    return Side(
        series=PhiSpec(upper=upper, lower=lower, q=q, z=q, termination=M),
        prefactor_num=pochs((q, None), (head, None)),
        prefactor_den=pochs((b * q, None), (head / b, None)),
    )


register(
    IdentityRecord(
        id="karlsson_minton_m1",
        group="karlsson_minton",
        title="Karlsson-Minton transformation with a single integral offset",
        dims=DimsSignature(n=None, m=1, box="m"),
        lhs=_karlsson_minton_m1_lhs,
        rhs=_karlsson_minton_m1_rhs,
        scalars=("b", "c"),
        vectors=(VectorSpec("a", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=Nonterminating(
            moduli=lambda p: (p.q ** (1 - _box(p)[0]) / p.product("a"),),
            description="|q^(1-M) / A| < 1",
        ),
        reductions=(
            ReductionLink(
                target="karlsson_minton_1d",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=1,
                    box=p.box,
                    scalars={**p.scalars, "a": p.vector("a")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


def _karlsson_minton_1d_lhs(p: ParamSet) -> Side:
    q, (M,) = p.q, _box(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    return Side(
        series=PhiSpec(
            upper=(a, b, c * q**M), lower=(b * q, c), q=q, z=q ** (1 - M) / a
        )
    )


def _karlsson_minton_1d_rhs(p: ParamSet) -> Side:
    q, (M,) = p.q, _box(p)
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    num = pochs((q, None), (b * q / a, None), (c / b, M))
    den = pochs((b * q, None), (q / a, None), (c, M))
    return Side(scale=b**M, prefactor_num=num, prefactor_den=den)


register(
    IdentityRecord(
        id="karlsson_minton_1d",
        group="karlsson_minton",
        title="Karlsson-Minton summation for a 3phi2 sum with one offset",
        dims=DimsSignature(n=1, m=1, box="m"),
        lhs=_karlsson_minton_1d_lhs,
        rhs=_karlsson_minton_1d_rhs,
        scalars=("a", "b", "c"),
        termination_class=Nonterminating(
            moduli=lambda p: (p.q ** (1 - _box(p)[0]) / p.scalar("a"),),
            description="|q^(1-M) / a| < 1",
        ),
        notes="The ratio of factors involving the third parameter has finite "
        "length M; the general formula degenerates to it at rank one.",
    )
)


# ---------------------------------------------------------------------------
# Gauss-type summations


def _gauss_sum_an_lhs(p: ParamSet) -> Side:
    q = p.q
    a, c = p.scalar("a"), p.scalar("c")
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=c / (a * p.product("b")),
        x_exponent=-1,
        e2_exponent=1,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(a * xi for xi in x),),
        weight_den=(c,),
    )
    return Side(series=series, domain=Infinite())


def _gauss_sum_an_rhs(p: ParamSet) -> Side:
    a, c = p.scalar("a"), p.scalar("c")
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    num = [(c / B, None)]
    den = [(c, None)]
    for bi, xi in zip(b, x):
        num.append(((c * bi / (a * B)) / xi, None))
        den.append(((c / (a * B)) / xi, None))
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="gauss_sum_an",
        group="gauss",
        title="Gauss summation for a nonterminating multiple sum",
        dims=DimsSignature(n=None, m=0),
        lhs=_gauss_sum_an_lhs,
        rhs=_gauss_sum_an_rhs,
        scalars=("a", "c"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=Nonterminating(
            moduli=lambda p: tuple(
                c / (a * B * xi)
                for c, a, B, xi in (
                    (p.scalar("c"), p.scalar("a"), p.product("b"), xi)
                    for xi in p.vector("x")
                )
            ),
            description="|c / (a B) / x_i| < 1 for every i",
        ),
        reductions=(
            ReductionLink(
                target="gauss_sum",
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
        notes="Each inverted coordinate contributes one factor whose "
        "denominator entry does not depend on the coefficient vector.",
    )
)


def _gauss_sum_lhs(p: ParamSet) -> Side:
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    return Side(series=PhiSpec(upper=(a, b), lower=(c,), q=p.q, z=c / (a * b)))


def _gauss_sum_rhs(p: ParamSet) -> Side:
    a, b, c = p.scalar("a"), p.scalar("b"), p.scalar("c")
    return Side(
        prefactor_num=pochs((c / a, None), (c / b, None)),
        prefactor_den=pochs((c, None), (c / (a * b), None)),
    )


register(
    IdentityRecord(
        id="gauss_sum",
        group="gauss",
        title="Gauss summation for a nonterminating 2phi1 sum",
        dims=DimsSignature(n=1, m=0),
        lhs=_gauss_sum_lhs,
        rhs=_gauss_sum_rhs,
        scalars=("a", "b", "c"),
        termination_class=Nonterminating(
            moduli=lambda p: (p.scalar("c") / (p.scalar("a") * p.scalar("b")),),
            description="|c / (a b)| < 1",
        ),
    )
)


# ---------------------------------------------------------------------------
# Bailey-type summations


def _bailey_6w5_an_lhs(p: ParamSet) -> Side:
    q = p.q
    a, c, d = p.scalar("a"), p.scalar("c"), p.scalar("d")
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a * q / (p.product("b") * c * d),
        vwp=a,
        x_exponent=-1,
        e2_exponent=1,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple(c * xi for xi in x),
            tuple(d * xi for xi in x),
        ),
        weight_num=tuple(a * xi for xi in x),
        weight_den=(a * q / c, a * q / d)
        + tuple((a * q / bi) * xi for bi, xi in zip(b, x)),
    )
    return Side(series=series, domain=Infinite())


def _bailey_6w5_an_rhs(p: ParamSet) -> Side:
    q = p.q
    a, c, d = p.scalar("a"), p.scalar("c"), p.scalar("d")
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    num = [(a * q / (B * c), None), (a * q / (B * d), None)]
    den = [(a * q / c, None), (a * q / d, None)]
    for bi, xi in zip(b, x):
        num += [(a * q * xi, None), ((a * q * bi / (B * c * d)) / xi, None)]
        den += [((a * q / bi) * xi, None), ((a * q / (B * c * d)) / xi, None)]
    return Side(prefactor_num=pochs(*num), prefactor_den=pochs(*den))


register(
    IdentityRecord(
        id="bailey_6w5_an",
        group="bailey",
        title="Bailey summation for a nonterminating very-well-poised multiple sum",
        dims=DimsSignature(n=None, m=0),
        lhs=_bailey_6w5_an_lhs,
        rhs=_bailey_6w5_an_rhs,
        scalars=("a", "c", "d"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=Nonterminating(
            moduli=lambda p: tuple(
                p.scalar("a") * p.q / (p.product("b") * p.scalar("c") * p.scalar("d") * xi)
                for xi in p.vector("x")
            ),
            description="|a q / (B c d) / x_i| < 1 for every i",
        ),
        reductions=(
            ReductionLink(
                target="bailey_6w5",
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


def _bailey_6w5_lhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d = (p.scalar(s) for s in ("a", "b", "c", "d"))
    return Side(series=VwpSpec(s=a, params=(b, c, d), q=q, z=a * q / (b * c * d)))


def _bailey_6w5_rhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d = (p.scalar(s) for s in ("a", "b", "c", "d"))
    num = pochs(
        (a * q, None),
        (a * q / (c * d), None),
        (a * q / (b * d), None),
        (a * q / (b * c), None),
    )
    den = pochs(
        (a * q / (b * c * d), None),
        (a * q / b, None),
        (a * q / c, None),
        (a * q / d, None),
    )
    return Side(prefactor_num=num, prefactor_den=den)


register(
    IdentityRecord(
        id="bailey_6w5",
        group="bailey",
        title="Bailey summation for a nonterminating very-well-poised 6W5 sum",
        dims=DimsSignature(n=1, m=0),
        lhs=_bailey_6w5_lhs,
        rhs=_bailey_6w5_rhs,
        scalars=("a", "b", "c", "d"),
        termination_class=Nonterminating(
            moduli=lambda p: (
                p.scalar("a") * p.q / (p.scalar("b") * p.scalar("c") * p.scalar("d")),
            ),
            description="|a q / (b c d)| < 1",
        ),
    )
)
