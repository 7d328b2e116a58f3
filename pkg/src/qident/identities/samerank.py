"""Records whose image sum keeps the rank of the source sum.

Three balanced transformations move a terminating balanced sum to another
one over the same coordinates, over rescaled inverted coordinates, or with
part of the parameter family inverted; each has a rectangular-box companion.
Two very-well-poised transformations — one nonterminating, one terminating —
iterate the corresponding one-sum transformations and land on a sum of the
same rank with a smaller principal parameter; both collapse at rank one to
the classical two-term rewritings of a very-well-poised sum.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MissingParameter
from ..params import BalancingRule, ParamSet, monomial
from ..series import AnSeries, Box, Infinite, VwpSpec, Weight
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
# Balanced transformation over the same coordinates


def _sears_an_1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
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
        weight_den=(e, a * p.product("b") * c * q ** (1 - N) / (d * e)),
    )
    return Side(series=series, domain=Weight(N))


def _sears_an_1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple((d / a) * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(q**-N, d / c),
        weight_den=(d * e / (a * c), q ** (1 - N) * B / e),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs((e / B, N), (d * e / (a * c), N)),
        prefactor_den=pochs((e, N), (d * e / (a * B * c), N)),
    )


register(
    IdentityRecord(
        id="sears_an_1",
        group="sears",
        title="Sears transformation between balanced sums over the same coordinates",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_sears_an_1_lhs,
        rhs=_sears_an_1_rhs,
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
                    scalars={
                        "a": p.vector("b")[0],
                        "b": p.scalar("a"),
                        "c": p.scalar("c"),
                        "d": p.scalar("d"),
                        "e": p.scalar("e"),
                    },
                ),
                description="rank 1 with its coordinate pinned to 1; the "
                "coefficient trades places with the first scalar",
            ),
        ),
    )
)


def _sears_an_1_box_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(a, b),
        weight_den=(e, a * b * c * q ** (1 - sum(M)) / (d * e)),
    )
    return Side(series=series, domain=Box(M))


def _sears_an_1_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple((d / a) * xi for xi in x),),
        per_index_den=(tuple(d * xi for xi in x),),
        weight_num=(b, d / c),
        weight_den=(d * e / (a * c), q ** (1 - absM) * b / e),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs((e / b, absM), (d * e / (a * c), absM)),
        prefactor_den=pochs((e, absM), (d * e / (a * b * c), absM)),
    )


register(
    IdentityRecord(
        id="sears_an_1_box",
        group="sears",
        title="Sears transformation over a rectangular box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_sears_an_1_box_lhs,
        rhs=_sears_an_1_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="sears_an_1",
                prepare=lambda p: pin_scalar_power(p, "b", _PIN_ORDER),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=_PIN_ORDER,
                    scalars={s: p.scalar(s) for s in ("a", "c", "d", "e")},
                    vectors={
                        "b": tuple(p.q**-mi for mi in p.box),
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
# Balanced transformation onto inverted coordinates


def _sears_an_2_lhs(p: ParamSet) -> Side:
    return _sears_an_1_lhs(p)


def _sears_an_2_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    w = tuple(bi / (B * xi) for bi, xi in zip(b, x))
    num = [(d * e / (a * c), N)]
    den = [(d * e / (a * B * c), N)]
    for bi, xi in zip(b, x):
        num.append(((d / bi) * xi, N))
        den.append((d * xi, N))
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple((e / c) * wi for wi in w),),
        per_index_den=(tuple((q ** (1 - N) * B / d) * wi for wi in w),),
        weight_num=(q**-N, e / a),
        weight_den=(d * e / (a * c), e),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="sears_an_2",
        group="sears",
        title="Sears transformation onto a balanced sum over inverted coordinates",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_sears_an_2_lhs,
        rhs=_sears_an_2_rhs,
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
                    scalars={
                        "a": p.vector("b")[0],
                        "b": p.scalar("a"),
                        "c": p.scalar("c"),
                        "d": p.scalar("e"),
                        "e": p.scalar("d"),
                    },
                ),
                description="rank 1 with its coordinate pinned to 1; the "
                "coefficient replaces the first scalar and the last two swap",
            ),
        ),
        notes="The image coordinates are each coefficient divided by the "
        "coefficient product times the matching coordinate.",
    )
)


def _sears_an_2_box_lhs(p: ParamSet) -> Side:
    return _sears_an_1_box_lhs(p)


def _sears_an_2_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    w = tuple(q ** (absM - mi) / xi for mi, xi in zip(M, x))
    num = [(d * e / (a * c), absM)]
    den = [(d * e / (a * b * c), absM)]
    for mi, xi in zip(M, x):
        num.append(((d / b) * xi, mi))
        den.append((d * xi, mi))
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple((e / c) * wi for wi in w),),
        per_index_den=(tuple((b * q ** (1 - absM) / d) * wi for wi in w),),
        weight_num=(e / a, b),
        weight_den=(d * e / (a * c), e),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="sears_an_2_box",
        group="sears",
        title="Inverted-coordinate Sears transformation over a box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_sears_an_2_box_lhs,
        rhs=_sears_an_2_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="sears_an_2",
                prepare=lambda p: pin_scalar_power(p, "b", _PIN_ORDER),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=_PIN_ORDER,
                    scalars={s: p.scalar(s) for s in ("a", "c", "d", "e")},
                    vectors={
                        "b": tuple(p.q**-mi for mi in p.box),
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
# Balanced transformation with two per-index rows on each side


def _sears_an_3_lhs(p: ParamSet) -> Side:
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


def _sears_an_3_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    b, c, d, e = (p.scalar(s) for s in ("b", "c", "d", "e"))
    a, x = p.vector("a"), p.vector("x")
    A = p.product("a")
    w = tuple(ai / (A * xi) for ai, xi in zip(a, x))
    num, den = [], []
    for ai, xi, wi in zip(a, x, w):
        num += [((d * e / (b * c)) * wi, N), ((e / ai) * xi, N)]
        den += [((d * e / (ai * b * c)) * wi, N), (e * xi, N)]
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(a,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((d / b) * wi for wi in w),
            tuple((d / c) * wi for wi in w),
        ),
        per_index_den=(
            tuple((d * e / (b * c)) * wi for wi in w),
            tuple((A * q ** (1 - N) / e) * wi for wi in w),
        ),
        weight_num=(q**-N,),
        weight_den=(d,),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="sears_an_3",
        group="sears",
        title="Sears transformation with paired per-index rows on both sides",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_sears_an_3_lhs,
        rhs=_sears_an_3_rhs,
        scalars=("b", "c", "d", "e"),
        vectors=(VectorSpec("a", "n"), VectorSpec("x", "n", coord=True)),
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
                    scalars={**p.scalars, "a": p.vector("a")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
        notes="Each inverted coordinate contributes one prefactor whose "
        "denominator entry does not depend on the coefficient vector.",
    )
)


def _sears_an_3_box_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    tail = a * b * c * q ** (1 - sum(M)) / (d * e)
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple(b * xi for xi in x),
            tuple(c * xi for xi in x),
        ),
        per_index_den=(
            tuple(e * xi for xi in x),
            tuple(tail * xi for xi in x),
        ),
        weight_num=(a,),
        weight_den=(d,),
    )
    return Side(series=series, domain=Box(M))


def _sears_an_3_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    w = tuple(q ** (absM - mi) / xi for mi, xi in zip(M, x))
    num, den = [], []
    for mi, xi, wi in zip(M, x, w):
        num += [((d * e / (b * c)) * wi, mi), ((e / a) * xi, mi)]
        den += [((d * e / (a * b * c)) * wi, mi), (e * xi, mi)]
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((d / b) * wi for wi in w),
            tuple((d / c) * wi for wi in w),
        ),
        per_index_den=(
            tuple((d * e / (b * c)) * wi for wi in w),
            tuple((a * q ** (1 - absM) / e) * wi for wi in w),
        ),
        weight_num=(a,),
        weight_den=(d,),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="sears_an_3_box",
        group="sears",
        title="Paired-row Sears transformation over a rectangular box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_sears_an_3_box_lhs,
        rhs=_sears_an_3_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="sears_an_3",
                prepare=lambda p: pin_scalar_power(p, "a", _PIN_ORDER),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=_PIN_ORDER,
                    scalars={s: p.scalar(s) for s in ("b", "c", "d", "e")},
                    vectors={
                        "a": tuple(p.q**-mi for mi in p.box),
                        "x": p.vector("x"),
                    },
                ),
                description="box truncation matches the triangular sum when the "
                "free scalar is a negative power of q",
            ),
        ),
        notes="The image coordinate for slot i is q to the power of the box "
        "weight minus the slot bound, divided by x_i.",
    )
)


# ---------------------------------------------------------------------------
# Nonterminating very-well-poised transformation of matching rank


def _nt_same_lhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, f = (p.scalar(s) for s in ("a", "b", "c", "d", "f"))
    e, x = p.vector("e"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a**2 * q**2 / (b * c * d * p.product("e") * f),
        x_exponent=-1,
        e2_exponent=1,
        vwp=a,
        cross_num=(e,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple(b * xi for xi in x),
            tuple(c * xi for xi in x),
            tuple(d * xi for xi in x),
        ),
        per_index_den=(tuple((a * q / f) * xi for xi in x),),
        weight_num=(f,) + tuple(a * xi for xi in x),
        weight_den=(a * q / b, a * q / c, a * q / d)
        + tuple((a * q / ei) * xi for ei, xi in zip(e, x)),
    )
    return Side(series=series, domain=Infinite())


def _nt_same_rhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, f, lam = (p.scalar(s) for s in ("a", "b", "c", "d", "f", "lam"))
    e, x = p.vector("e"), p.vector("x")
    E = p.product("e")
    w = tuple(ei / (E * xi) for ei, xi in zip(e, x))
    num, den = [], []
    for ei, xi, wi in zip(e, x, w):
        num += [
            (a * q * xi, None),
            ((a * q / (ei * f)) * xi, None),
            ((lam * q / ei) * wi, None),
            ((lam * q / f) * wi, None),
        ]
        den += [
            ((a * q / ei) * xi, None),
            ((a * q / f) * xi, None),
            ((lam * q / (ei * f)) * wi, None),
            (lam * q * wi, None),
        ]
    series = AnSeries(
        q=q,
        x=w,
        z=a * q / (E * f),
        x_exponent=-1,
        e2_exponent=1,
        vwp=lam,
        cross_num=(e,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((a * q / (c * d)) * wi for wi in w),
            tuple((a * q / (b * d)) * wi for wi in w),
            tuple((a * q / (b * c)) * wi for wi in w),
        ),
        per_index_den=(tuple((lam * q / f) * wi for wi in w),),
        weight_num=(f,) + tuple(lam * wi for wi in w),
        weight_den=(a * q / b, a * q / c, a * q / d)
        + tuple((lam * q / ei) * wi for ei, wi in zip(e, w)),
    )
    return Side(
        series=series,
        domain=Infinite(),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


def _nt_same_moduli(p: ParamSet) -> tuple[Fraction, ...]:
    a, b, c, d, f = (p.scalar(s) for s in ("a", "b", "c", "d", "f"))
    e, x = p.vector("e"), p.vector("x")
    z = a**2 * p.q**2 / (b * c * d * p.product("e") * f)
    return tuple(z / xi for xi in x) + tuple(
        a * p.q * xi / (ei * f) for ei, xi in zip(e, x)
    )


register(
    IdentityRecord(
        id="nonterminating_8w7_an_same_dim",
        group="well_poised",
        title="Nonterminating very-well-poised transformation of matching rank",
        dims=DimsSignature(n=None, m=0),
        lhs=_nt_same_lhs,
        rhs=_nt_same_rhs,
        scalars=("a", "b", "c", "d", "f", "lam"),
        vectors=(VectorSpec("e", "n"), VectorSpec("x", "n", coord=True)),
        constraints=(
            BalancingRule("lam", monomial(q_exp=1, a=2, b=-1, c=-1, d=-1)),
        ),
        termination_class=Nonterminating(
            moduli=_nt_same_moduli,
            description="|a^2 q^2 / (b c d E f x_i)| < 1 and "
            "|a q x_i / (e_i f)| < 1 for every i",
        ),
        reductions=(
            ReductionLink(
                target="nonterminating_8w7_2n",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    scalars={**p.scalars, "e": p.vector("e")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
        notes="The image coordinates are each coefficient divided by the "
        "coefficient product times the matching coordinate.",
    )
)


def _nt_2n_lhs(p: ParamSet) -> Side:
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


def _nt_2n_rhs(p: ParamSet) -> Side:
    q = p.q
    a, b, c, d, e, f, lam = (p.scalar(s) for s in ("a", "b", "c", "d", "e", "f", "lam"))
    return Side(
        series=VwpSpec(
            s=lam,
            params=(lam * b / a, lam * c / a, lam * d / a, e, f),
            q=q,
            z=a * q / (e * f),
        ),
        prefactor_num=pochs(
            (a * q, None), (a * q / (e * f), None), (lam * q / e, None), (lam * q / f, None)
        ),
        prefactor_den=pochs(
            (a * q / e, None), (a * q / f, None), (lam * q, None), (lam * q / (e * f), None)
        ),
    )


register(
    IdentityRecord(
        id="nonterminating_8w7_2n",
        group="well_poised",
        title="Two-term rewriting of a nonterminating very-well-poised sum",
        dims=DimsSignature(n=1, m=0),
        lhs=_nt_2n_lhs,
        rhs=_nt_2n_rhs,
        scalars=("a", "b", "c", "d", "e", "f", "lam"),
        constraints=(
            BalancingRule("lam", monomial(q_exp=1, a=2, b=-1, c=-1, d=-1)),
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
                p.scalar("a") * p.q / (p.scalar("e") * p.scalar("f")),
            ),
            description="max(|a^2 q^2 / (b c d e f)|, |a q / (e f)|) < 1",
        ),
    )
)


# ---------------------------------------------------------------------------
# Terminating very-well-poised transformation of matching rank


def _t_same_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, f, g = (p.scalar(s) for s in ("a", "c", "f", "g"))
    b, x = p.vector("b"), p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a**2 * q ** (N + 2) / (p.product("b") * c * f * g),
        x_exponent=1,
        e2_exponent=-1,
        vwp=a,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(
            tuple(a * q ** (N + 1) * xi for xi in x),
            tuple((a * q / f) * xi for xi in x),
            tuple((a * q / g) * xi for xi in x),
        ),
        weight_num=(f, g, q**-N) + tuple(a * xi for xi in x),
        weight_den=(a * q / c,) + tuple((a * q / bi) * xi for bi, xi in zip(b, x)),
    )
    return Side(series=series, domain=Weight(N))


def _t_same_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, f, g = (p.scalar(s) for s in ("a", "c", "f", "g"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    pivot = q ** (-N - 1) * B * f * g / a
    w = tuple(bi / (B * xi) for bi, xi in zip(b, x))
    num, den = [], []
    for bi, xi in zip(b, x):
        num += [
            (a * q * xi, N),
            ((a * q / (bi * f)) * xi, N),
            ((a * q / (bi * g)) * xi, N),
            ((a * q / (f * g)) * xi, N),
        ]
        den += [
            ((a * q / bi) * xi, N),
            ((a * q / f) * xi, N),
            ((a * q / g) * xi, N),
            ((a * q / (bi * f * g)) * xi, N),
        ]
    series = AnSeries(
        q=q,
        x=w,
        z=q / c,
        x_exponent=1,
        e2_exponent=-1,
        vwp=pivot,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((q ** (-N - 1) * B * c * f * g / a**2) * wi for wi in w),
        ),
        per_index_den=(
            tuple((B * f * g / a) * wi for wi in w),
            tuple((q**-N * B * g / a) * wi for wi in w),
            tuple((q**-N * B * f / a) * wi for wi in w),
        ),
        weight_num=(f, g, q**-N) + tuple(pivot * wi for wi in w),
        weight_den=(a * q / c,)
        + tuple((pivot * q / bi) * wi for bi, wi in zip(b, w)),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="terminating_8w7_an_same_dim",
        group="well_poised",
        title="Terminating very-well-poised transformation of matching rank",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_t_same_lhs,
        rhs=_t_same_rhs,
        scalars=("a", "c", "f", "g"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="terminating_8w7_2n",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={**{s: p.scalar(s) for s in ("a", "c", "f", "g")},
                             "b": p.vector("b")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
        notes="The image runs over each coefficient divided by the coefficient "
        "product times the matching coordinate, and is very well poised in "
        "q^(-N-1) B f g / a.",
    )
)


def _t_same_box_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, f, g = (p.scalar(s) for s in ("a", "b", "c", "f", "g"))
    x = p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a**2 * q ** (sum(M) + 2) / (b * c * f * g),
        x_exponent=1,
        e2_exponent=-1,
        vwp=a,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(
            tuple((a * q / b) * xi for xi in x),
            tuple((a * q / f) * xi for xi in x),
            tuple((a * q / g) * xi for xi in x),
        ),
        weight_num=(b, f, g) + tuple(a * xi for xi in x),
        weight_den=(a * q / c,)
        + tuple(a * q ** (1 + mi) * xi for mi, xi in zip(M, x)),
    )
    return Side(series=series, domain=Box(M))


def _t_same_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, f, g = (p.scalar(s) for s in ("a", "b", "c", "f", "g"))
    x = p.vector("x")
    absM = sum(M)
    pivot = q ** (-absM - 1) * b * f * g / a
    w = tuple(q ** (absM - mi) / xi for mi, xi in zip(M, x))
    num, den = [], []
    for mi, xi in zip(M, x):
        num += [
            (a * q * xi, mi),
            ((a * q / (b * f)) * xi, mi),
            ((a * q / (b * g)) * xi, mi),
            ((a * q / (f * g)) * xi, mi),
        ]
        den += [
            ((a * q / b) * xi, mi),
            ((a * q / f) * xi, mi),
            ((a * q / g) * xi, mi),
            ((a * q / (b * f * g)) * xi, mi),
        ]
    series = AnSeries(
        q=q,
        x=w,
        z=q / c,
        x_exponent=1,
        e2_exponent=-1,
        vwp=pivot,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((q ** (-absM - 1) * b * c * f * g / a**2) * wi for wi in w),
        ),
        per_index_den=(
            tuple((q**-absM * f * g / a) * wi for wi in w),
            tuple((q**-absM * b * g / a) * wi for wi in w),
            tuple((q**-absM * b * f / a) * wi for wi in w),
        ),
        weight_num=(b, f, g) + tuple(pivot * wi for wi in w),
        weight_den=(a * q / c,)
        + tuple((pivot * q ** (1 + mi)) * wi for mi, wi in zip(M, w)),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="terminating_8w7_an_same_dim_box",
        group="well_poised",
        title="Matching-rank very-well-poised transformation over a box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_t_same_box_lhs,
        rhs=_t_same_box_rhs,
        scalars=("a", "b", "c", "f", "g"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="terminating_8w7_an_same_dim",
                prepare=lambda p: pin_scalar_power(p, "b", _PIN_ORDER),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=p.n,
                    m=0,
                    order=_PIN_ORDER,
                    scalars={s: p.scalar(s) for s in ("a", "c", "f", "g")},
                    vectors={
                        "b": tuple(p.q**-mi for mi in p.box),
                        "x": p.vector("x"),
                    },
                ),
                description="box truncation matches the triangular sum when the "
                "free scalar is a negative power of q",
            ),
        ),
    )
)


def _t_2n_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, f, g = (p.scalar(s) for s in ("a", "b", "c", "f", "g"))
    return Side(
        series=VwpSpec(
            s=a,
            params=(b, c, f, g, q**-N),
            q=q,
            z=a**2 * q ** (2 + N) / (b * c * f * g),
            termination=N,
        )
    )


def _t_2n_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, f, g = (p.scalar(s) for s in ("a", "b", "c", "f", "g"))
    pivot = q ** (-N - 1) * b * f * g / a
    return Side(
        series=VwpSpec(
            s=pivot,
            params=(b, q ** (-N - 1) * b * c * f * g / a**2, f, g, q**-N),
            q=q,
            z=q / c,
            termination=N,
        ),
        prefactor_num=pochs(
            (a * q, N), (a * q / (b * f), N), (a * q / (b * g), N), (a * q / (f * g), N)
        ),
        prefactor_den=pochs(
            (a * q / b, N), (a * q / f, N), (a * q / g, N), (a * q / (b * f * g), N)
        ),
    )


register(
    IdentityRecord(
        id="terminating_8w7_2n",
        group="well_poised",
        title="Two-term rewriting of a terminating very-well-poised sum",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_t_2n_lhs,
        rhs=_t_2n_rhs,
        scalars=("a", "b", "c", "f", "g"),
        termination_class=TERMINATING,
    )
)
