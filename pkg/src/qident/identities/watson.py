"""Watson-type records.

Four multivariate transformations carry a terminating very-well-poised sum
to a balanced sum of the same rank, in two flavors: the image sum may run
over the original coordinates or over rescaled inverted ones.  Each comes
with a rectangular-box companion whose truncation orders differ coordinate
by coordinate, and all collapse at rank one to one of the two classical
Watson transformations.  The module also holds the multivariate Bailey
transformation used to derive the inverted-coordinate variants and a
very-well-poised rewriting of the one-dimensional duality.
"""

from __future__ import annotations

from ..errors import MissingParameter
from ..params import BalancingRule, ParamSet, monomial
from ..series import AnSeries, Box, PhiSpec, VwpSpec, Weight, WnmSpec
from .core import (
    TERMINATING,
    DimsSignature,
    IdentityRecord,
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
# Classical transformations


def _watson_classical_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=VwpSpec(
            s=a,
            params=(b, c, d, e, q**-N),
            q=q,
            z=a**2 * q ** (2 + N) / (b * c * d * e),
            termination=N,
        )
    )


def _watson_classical_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=PhiSpec(
            upper=(q**-N, d, e, a * q / (b * c)),
            lower=(a * q / b, a * q / c, d * e * q**-N / a),
            q=q,
            z=q,
            termination=N,
        ),
        prefactor_num=pochs((a * q, N), (a * q / (d * e), N)),
        prefactor_den=pochs((a * q / d, N), (a * q / e, N)),
    )


register(
    IdentityRecord(
        id="watson_classical",
        group="watson",
        title="Watson transformation from a very-well-poised sum to a balanced series",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_watson_classical_lhs,
        rhs=_watson_classical_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=TERMINATING,
    )
)


def _watson_classical_2_lhs(p: ParamSet) -> Side:
    return _watson_classical_lhs(p)


def _watson_classical_2_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    return Side(
        series=PhiSpec(
            upper=(q**-N, b, q ** (-1 - N) * b * c * d * e / a**2, q**-N * b / a),
            lower=(b * c * q**-N / a, b * d * q**-N / a, b * e * q**-N / a),
            q=q,
            z=q,
            termination=N,
        ),
        scale=b**N,
        prefactor_num=pochs(
            (a * q, N), (a * q / (b * c), N), (a * q / (b * d), N), (a * q / (b * e), N)
        ),
        prefactor_den=pochs(
            (a * q / b, N), (a * q / c, N), (a * q / d, N), (a * q / e, N)
        ),
    )


register(
    IdentityRecord(
        id="watson_classical_2",
        group="watson",
        title="Second Watson transformation onto a reversed balanced series",
        dims=DimsSignature(n=1, m=0, order=True),
        lhs=_watson_classical_2_lhs,
        rhs=_watson_classical_2_rhs,
        scalars=("a", "b", "c", "d", "e"),
        termination_class=TERMINATING,
    )
)


# ---------------------------------------------------------------------------
# First transformation: image sum over the original coordinates


def _watson_an_1_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    z = a**2 * q ** (N + 2) / (p.product("b") * c * d * e)
    return Side(
        wnm=WnmSpec(s=a, a=b, x=x, u=(c, d), v=(e, q**-N), q=q, z=z),
        domain=Weight(N),
    )


def _watson_an_1_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    num = [(a * q / (B * d), N)]
    den = [(a * q / d, N)]
    for bi, xi in zip(b, x):
        num.append((a * q * xi, N))
        den.append(((a * q / bi) * xi, N))
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(d * xi for xi in x),),
        per_index_den=(tuple((a * q / e) * xi for xi in x),),
        weight_num=(q**-N, a * q / (c * e)),
        weight_den=(B * d * q**-N / a, a * q / c),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_1",
        group="watson",
        title="Watson transformation onto a balanced sum over the same coordinates",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_watson_an_1_lhs,
        rhs=_watson_an_1_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_classical",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={
                        "a": p.scalar("a"),
                        "b": p.scalar("c"),
                        "c": p.scalar("e"),
                        "d": p.scalar("d"),
                        "e": p.vector("b")[0],
                    },
                ),
                description="rank 1 with its coordinate pinned to 1; two scalar "
                "slots and the coefficient trade places",
            ),
        ),
    )
)


def _watson_an_1_box_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    z = a**2 * q ** (sum(M) + 2) / (b * c * d * e)
    coeff = tuple(q**-mi for mi in M)
    return Side(
        wnm=WnmSpec(s=a, a=coeff, x=x, u=(c, d), v=(b, e), q=q, z=z),
        domain=Box(M),
    )


def _watson_an_1_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    num = [(a * q / (b * d), absM)]
    den = [(a * q / d, absM)]
    for mi, xi in zip(M, x):
        num.append((a * q * xi, mi))
        den.append(((a * q / b) * xi, mi))
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(d * xi for xi in x),),
        per_index_den=(tuple((a * q / e) * xi for xi in x),),
        weight_num=(b, a * q / (c * e)),
        weight_den=(b * d * q**-absM / a, a * q / c),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_1_box",
        group="watson",
        title="Watson transformation onto a balanced sum over a box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_watson_an_1_box_lhs,
        rhs=_watson_an_1_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_an_1",
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
# Second transformation: image sum over rescaled inverted coordinates


def _watson_an_2_lhs(p: ParamSet) -> Side:
    return _watson_an_1_lhs(p)


def _watson_an_2_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    w = tuple(bi / (B * xi) for bi, xi in zip(b, x))
    num, den = [], []
    for bi, xi in zip(b, x):
        num += [(a * q * xi, N), ((a * q / (bi * e)) * xi, N)]
        den += [((a * q / bi) * xi, N), ((a * q / e) * xi, N)]
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple((a * q / (c * d)) * wi for wi in w),),
        per_index_den=(tuple((B * e * q**-N / a) * wi for wi in w),),
        weight_num=(q**-N, e),
        weight_den=(a * q / c, a * q / d),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_2",
        group="watson",
        title="Watson transformation onto a balanced sum over inverted coordinates",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_watson_an_2_lhs,
        rhs=_watson_an_2_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_classical",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={
                        "a": p.scalar("a"),
                        "b": p.scalar("c"),
                        "c": p.scalar("d"),
                        "d": p.scalar("e"),
                        "e": p.vector("b")[0],
                    },
                ),
                description="rank 1 with its coordinate pinned to 1; the scalar "
                "slots rotate and the coefficient fills the last one",
            ),
        ),
        notes="The image coordinates are each coefficient divided by the "
        "coefficient product times the matching coordinate.",
    )
)


def _watson_an_2_box_lhs(p: ParamSet) -> Side:
    return _watson_an_1_box_lhs(p)


def _watson_an_2_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    w = tuple(q ** (absM - mi) / xi for mi, xi in zip(M, x))
    num, den = [], []
    for mi, xi in zip(M, x):
        num += [(a * q * xi, mi), ((a * q / (b * e)) * xi, mi)]
        den += [((a * q / b) * xi, mi), ((a * q / e) * xi, mi)]
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple((a * q / (c * d)) * wi for wi in w),),
        per_index_den=(tuple((b * e * q**-absM / a) * wi for wi in w),),
        weight_num=(b, e),
        weight_den=(a * q / c, a * q / d),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_2_box",
        group="watson",
        title="Inverted-coordinate Watson transformation over a box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_watson_an_2_box_lhs,
        rhs=_watson_an_2_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_an_2",
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
        notes="The image coordinate for slot i is q to the power of the box "
        "weight minus the slot bound, divided by x_i.",
    )
)


# ---------------------------------------------------------------------------
# Bailey transformation feeding the inverted-coordinate variants


def _bailey_10w9_an_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, f, lam = (p.scalar(s) for s in ("a", "b", "c", "d", "f", "lam"))
    e, x = p.vector("e"), p.vector("x")
    E = p.product("e")
    v = (q**-N, f, a * lam * q ** (1 + N) / (E * f))
    return Side(
        wnm=WnmSpec(s=a, a=e, x=x, u=(b, c, d), v=v, q=q, z=q),
        domain=Weight(N),
    )


def _bailey_10w9_an_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, c, d, f, lam = (p.scalar(s) for s in ("a", "b", "c", "d", "f", "lam"))
    e, x = p.vector("e"), p.vector("x")
    E = p.product("e")
    w = tuple(ei / (E * xi) for ei, xi in zip(e, x))
    num, den = [], []
    for ei, xi, wi in zip(e, x, w):
        num += [
            (a * q * xi, N),
            ((a * q / (ei * f)) * xi, N),
            ((lam * q / ei) * wi, N),
            ((lam * q / f) * wi, N),
        ]
        den += [
            ((a * q / ei) * xi, N),
            ((a * q / f) * xi, N),
            (lam * q * wi, N),
            ((lam * q / (ei * f)) * wi, N),
        ]
    v = (q**-N, f, a * lam * q ** (1 + N) / (E * f))
    u = (a * q / (c * d), a * q / (b * d), a * q / (b * c))
    return Side(
        wnm=WnmSpec(s=lam, a=e, x=w, u=u, v=v, q=q, z=q),
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="bailey_10w9_an",
        group="bailey",
        title="Multivariate Bailey transformation between very-well-poised sums",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_bailey_10w9_an_lhs,
        rhs=_bailey_10w9_an_rhs,
        scalars=("a", "b", "c", "d", "f", "lam"),
        vectors=(VectorSpec("e", "n"), VectorSpec("x", "n", coord=True)),
        constraints=(
            BalancingRule("lam", monomial(q_exp=1, a=2, b=-1, c=-1, d=-1)),
        ),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="bailey_10w9",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={**p.scalars, "e": p.vector("e")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
    )
)


# ---------------------------------------------------------------------------
# Third transformation: very-well-poised source, image over the same coordinates


def _watson_an_3_lhs(p: ParamSet) -> Side:
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


def _watson_an_3_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    num = [(a * q / (B * c), N)]
    den = [(a * q / c, N)]
    for bi, xi in zip(b, x):
        num.append((a * q * xi, N))
        den.append(((a * q / bi) * xi, N))
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((a * q / (d * e)) * xi for xi in x),
            tuple(c * xi for xi in x),
        ),
        per_index_den=(
            tuple((a * q / d) * xi for xi in x),
            tuple((a * q / e) * xi for xi in x),
        ),
        weight_num=(q**-N,),
        weight_den=(q**-N * B * c / a,),
    )
    return Side(
        series=series,
        domain=Weight(N),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_3",
        group="watson",
        title="Watson transformation of a very-well-poised sum onto a balanced sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_watson_an_3_lhs,
        rhs=_watson_an_3_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_classical",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={
                        "a": p.scalar("a"),
                        "b": p.scalar("d"),
                        "c": p.scalar("e"),
                        "d": p.vector("b")[0],
                        "e": p.scalar("c"),
                    },
                ),
                description="rank 1 with its coordinate pinned to 1; the "
                "coefficient moves into the fourth scalar slot",
            ),
        ),
    )
)


def _watson_an_3_box_lhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    series = AnSeries(
        q=q,
        x=x,
        z=a**2 * q ** (2 + sum(M)) / (b * c * d * e),
        x_exponent=1,
        e2_exponent=-1,
        vwp=a,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(tuple(c * xi for xi in x),),
        per_index_den=(
            tuple((a * q / b) * xi for xi in x),
            tuple((a * q / d) * xi for xi in x),
            tuple((a * q / e) * xi for xi in x),
        ),
        weight_num=(b, d, e) + tuple(a * xi for xi in x),
        weight_den=(a * q / c,)
        + tuple(a * q ** (1 + mi) * xi for mi, xi in zip(M, x)),
    )
    return Side(series=series, domain=Box(M))


def _watson_an_3_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    num = [(a * q / (b * c), absM)]
    den = [(a * q / c, absM)]
    for mi, xi in zip(M, x):
        num.append((a * q * xi, mi))
        den.append(((a * q / b) * xi, mi))
    series = AnSeries(
        q=q,
        x=x,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((a * q / (d * e)) * xi for xi in x),
            tuple(c * xi for xi in x),
        ),
        per_index_den=(
            tuple((a * q / d) * xi for xi in x),
            tuple((a * q / e) * xi for xi in x),
        ),
        weight_num=(b,),
        weight_den=(q**-absM * b * c / a,),
    )
    return Side(
        series=series,
        domain=Box(M),
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_3_box",
        group="watson",
        title="Very-well-poised Watson transformation over a box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_watson_an_3_box_lhs,
        rhs=_watson_an_3_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_an_3",
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
        notes="Slot i of the source carries the weight denominator entry "
        "a q^(1+m_i) x_i.",
    )
)


# ---------------------------------------------------------------------------
# Fourth transformation: very-well-poised source, image over inverted coordinates


def _watson_an_4_lhs(p: ParamSet) -> Side:
    return _watson_an_3_lhs(p)


def _watson_an_4_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, c, d, e = (p.scalar(s) for s in ("a", "c", "d", "e"))
    b, x = p.vector("b"), p.vector("x")
    B = p.product("b")
    w = tuple(bi / xi for bi, xi in zip(b, x))
    num = [(a * q / (B * c), N)]
    den = [(a * q / c, N)]
    for bi, xi in zip(b, x):
        num += [
            (a * q * xi, N),
            ((a * q / (bi * d)) * xi, N),
            ((a * q / (bi * e)) * xi, N),
        ]
        den += [
            ((a * q / bi) * xi, N),
            ((a * q / d) * xi, N),
            ((a * q / e) * xi, N),
        ]
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(b,),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((q ** (-1 - N) * c * d * e / a**2) * wi for wi in w),
            tuple((q**-N / a) * wi for wi in w),
        ),
        per_index_den=(
            tuple((q**-N * d / a) * wi for wi in w),
            tuple((q**-N * e / a) * wi for wi in w),
        ),
        weight_num=(q**-N,),
        weight_den=(q**-N * B * c / a,),
    )
    return Side(
        series=series,
        domain=Weight(N),
        scale=B**N,
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_4",
        group="watson",
        title="Very-well-poised Watson transformation onto inverted coordinates",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_watson_an_4_lhs,
        rhs=_watson_an_4_rhs,
        scalars=("a", "c", "d", "e"),
        vectors=(VectorSpec("b", "n"), VectorSpec("x", "n", coord=True)),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_classical_2",
                n=1,
                prepare=lambda p: pin_coords(p, "x"),
                map=lambda p: ParamSet(
                    q=p.q,
                    n=1,
                    m=0,
                    order=p.order,
                    scalars={**{s: p.scalar(s) for s in ("a", "c", "d", "e")},
                             "b": p.vector("b")[0]},
                ),
                description="rank 1 with its coordinate pinned to 1",
            ),
        ),
        notes="The image sum runs over each coefficient divided by its "
        "coordinate, and the whole side is scaled by the coefficient product "
        "raised to the truncation order.",
    )
)


def _watson_an_4_box_lhs(p: ParamSet) -> Side:
    return _watson_an_3_box_lhs(p)


def _watson_an_4_box_rhs(p: ParamSet) -> Side:
    q, M = p.q, _box(p)
    a, b, c, d, e = (p.scalar(s) for s in ("a", "b", "c", "d", "e"))
    x = p.vector("x")
    absM = sum(M)
    w = tuple(q**-mi / xi for mi, xi in zip(M, x))
    num = [(a * q / (b * c), absM)]
    den = [(a * q / c, absM)]
    for mi, xi in zip(M, x):
        num += [
            (a * q * xi, mi),
            ((a * q / (b * d)) * xi, mi),
            ((a * q / (b * e)) * xi, mi),
        ]
        den += [
            ((a * q / b) * xi, mi),
            ((a * q / d) * xi, mi),
            ((a * q / e) * xi, mi),
        ]
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(tuple(q**-mj for mj in M),),
        cross_den=((q,) * len(x),),
        per_index_num=(
            tuple((b * c * d * e / (a**2 * q)) * wi for wi in w),
            tuple((b / a) * wi for wi in w),
        ),
        per_index_den=(
            tuple((b * d / a) * wi for wi in w),
            tuple((b * e / a) * wi for wi in w),
        ),
        weight_num=(b,),
        weight_den=(q**-absM * b * c / a,),
    )
    return Side(
        series=series,
        domain=Box(M),
        scale=b**absM,
        prefactor_num=pochs(*num),
        prefactor_den=pochs(*den),
    )


register(
    IdentityRecord(
        id="watson_an_4_box",
        group="watson",
        title="Inverted-coordinate Watson transformation over a box of indices",
        dims=DimsSignature(n=None, m=0, box="n"),
        lhs=_watson_an_4_box_lhs,
        rhs=_watson_an_4_box_rhs,
        scalars=("a", "b", "c", "d", "e"),
        vectors=(VectorSpec("x", "n", coord=True),),
        termination_class=TERMINATING,
        reductions=(
            ReductionLink(
                target="watson_an_4",
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
# Duality rewritten with every parameter family inside one sum


def _duality_vwp_phi_lhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, d = p.scalar("a"), p.scalar("b"), p.scalar("d")
    u, v = p.vector("u"), p.vector("v")
    n = len(u)
    z = a ** (n + 1) * q ** (N + n + 1) / (b * d * p.product("u") * p.product("v"))
    params = (b,) + u + (d,) + v + (q**-N,)
    return Side(series=VwpSpec(s=a, params=params, q=q, z=z, termination=N))


def _duality_vwp_phi_rhs(p: ParamSet) -> Side:
    q, N = p.q, _order(p)
    a, b, d = p.scalar("a"), p.scalar("b"), p.scalar("d")
    u, v = p.vector("u"), p.vector("v")
    n = len(u)
    head = a ** (n + 1) * q ** (n + 1) / (b * d * p.product("u") * p.product("v"))
    w = tuple(1 / vi for vi in v)
    num = [(head, N), (a * q, N)]
    den = [(a * q / b, N), (a * q / d, N)]
    for ui, vi in zip(u, v):
        num.append((vi, N))
        den.append((a * q / ui, N))
    series = AnSeries(
        q=q,
        x=w,
        z=q,
        cross_num=(tuple(a * q / (uj * vj) for uj, vj in zip(u, v)),),
        cross_den=((q,) * n,),
        per_index_num=(
            tuple((a * q / b) * wi for wi in w),
            tuple((a * q / d) * wi for wi in w),
        ),
        per_index_den=(
            tuple(a * q * wi for wi in w),
            tuple(q ** (1 - N) * wi for wi in w),
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
        id="duality_vwp_phi",
        group="duality",
        title="Duality as one very-well-poised sum against a finite multiple sum",
        dims=DimsSignature(n=None, m=0, order=True),
        lhs=_duality_vwp_phi_lhs,
        rhs=_duality_vwp_phi_rhs,
        scalars=("a", "b", "d"),
        vectors=(VectorSpec("u", "n"), VectorSpec("v", "n", coord=True)),
        termination_class=TERMINATING,
        notes="Both parameter families sit inside a single one-dimensional "
        "very-well-poised sum; the image runs over the reciprocals of the "
        "second family.",
    )
)
