"""Series evaluators: multi-index enumeration, 1-D sums, multivariate sums."""

from decimal import Decimal
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qident.errors import DegenerateVariables, NoConvergence
from qident.multiindex import e2, enumerate_box, enumerate_weight, weight
from qident.qpoch import qpoch, qpoch_product
from qident.scalars import Precision
from qident.series import (
    AnSeries,
    Box,
    Infinite,
    Shell,
    Weight,
    WnmSpec,
    eval_an_series,
    eval_phi,
    eval_vwp,
    eval_wnm,
    is_vwp_balanced,
    vandermonde_ratio,
    wnm_balance_params,
    wnm_series,
)

F = Fraction
Q = F(1, 3)


# ---------------------------------------------------------------------------
# multi-indices


def test_enumerate_weight_shell():
    assert list(enumerate_weight(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(enumerate_weight(3, 4))) == 15  # C(6,2)


def test_enumerate_box_counts():
    assert len(list(enumerate_box((1, 1)))) == 4
    assert len(list(enumerate_box((2, 3)))) == 12


@given(st.lists(st.integers(0, 9), min_size=1, max_size=5))
def test_e2_complements_the_square(parts):
    gamma = tuple(parts)
    assert weight(gamma) ** 2 == sum(g * g for g in gamma) + 2 * e2(gamma)


# ---------------------------------------------------------------------------
# ratio of alternants


def test_vandermonde_ratio_value():
    assert vandermonde_ratio((F(1), F(1, 4)), (1, 0), F(1, 2)) == F(1, 3)


def test_vandermonde_ratio_identity_index():
    assert vandermonde_ratio((F(1), F(1, 5), F(2, 7)), (0, 0, 0), Q) == 1


def test_vandermonde_ratio_rejects_equal_variables():
    with pytest.raises(DegenerateVariables):
        vandermonde_ratio((F(1, 2), F(1, 2)), (1, 0), Q)


# ---------------------------------------------------------------------------
# one-dimensional sums


def test_phi_gauss_sum_nonterminating():
    a, b, c = F(2, 3), F(3, 4), F(1, 4)
    prec = Precision(50)
    got = eval_phi([a, b], [c], Q, c / (a * b), prec=prec)
    want = qpoch_product(
        [(c / a, None), (c / b, None)], [(c, None), (c / (a * b), None)], Q, prec=prec
    )
    assert abs(got - want) < Decimal(10) ** -25


def test_phi_balanced_3phi2_sum():
    # terminating balanced series with argument q sums to a factorial ratio
    a, b, c, n = F(2, 7), F(3, 5), F(1, 4), 4
    got = eval_phi([a, b, Q**-n], [c, a * b * Q ** (1 - n) / c], Q, Q, terms=n)
    want = (
        qpoch(c / a, Q, n)
        * qpoch(c / b, Q, n)
        / (qpoch(c, Q, n) * qpoch(c / (a * b), Q, n))
    )
    assert got == want


def test_phi_nonterminating_needs_precision():
    with pytest.raises(NoConvergence):
        eval_phi([F(1, 2)], [F(1, 3)], Q, F(1, 5))


def test_vwp_rogers_sum():
    # terminating well-poised 6-parameter sum in closed form
    a, b, c, n = F(2, 5), F(3, 7), F(5, 11), 2
    got = eval_vwp(a, [b, c, Q**-n], Q, a * Q ** (n + 1) / (b * c), terms=n)
    want = (
        qpoch(a * Q, Q, n)
        * qpoch(a * Q / (b * c), Q, n)
        / (qpoch(a * Q / b, Q, n) * qpoch(a * Q / c, Q, n))
    )
    assert got == want


def test_vwp_matches_term_expansion():
    s, bs, z, n = F(3, 7), [F(1, 2), F(2, 9)], F(1, 5), 6
    got = eval_vwp(s, bs, Q, z, terms=n)
    want = F(0)
    for k in range(n + 1):
        t = (1 - s * Q ** (2 * k)) / (1 - s) * qpoch(s, Q, k) / qpoch(Q, Q, k) * z**k
        for b in bs:
            t *= qpoch(b, Q, k) / qpoch(s * Q / b, Q, k)
        want += t
    assert got == want


def test_vwp_jackson_sum_closed_form():
    # balanced 8-parameter sum: the product side assembled with qpoch_product
    a, b, c, d, n = F(3, 5), F(2, 7), F(5, 9), F(1, 2), 3
    e = a * a * Q ** (n + 1) / (b * c * d)
    got = eval_vwp(a, [b, c, d, e, Q**-n], Q, Q, terms=n)
    want = qpoch_product(
        [(a * Q, n), (a * Q / (b * c), n), (a * Q / (b * d), n), (a * Q / (c * d), n)],
        [(a * Q / b, n), (a * Q / c, n), (a * Q / d, n), (a * Q / (b * c * d), n)],
        Q,
    )
    assert got == want


def test_vwp_balance_check():
    # 10-parameter balanced case: last parameter solved from the others
    a, b, c, d, e, f, n = F(2, 5), F(1, 3), F(1, 7), F(2, 9), F(3, 8), F(5, 6), 3
    g = a**3 * Q ** (n + 2) / (b * c * d * e * f)
    assert is_vwp_balanced(a, [b, c, d, e, f, g, Q**-n], Q, Q)
    assert not is_vwp_balanced(a, [b, c, d, e, f, g * Q, Q**-n], Q, Q)
    # single parameter, unit argument: condition degenerates to 1 == 1
    assert is_vwp_balanced(F(2, 5), [F(1)], Q, F(1))


# ---------------------------------------------------------------------------
# multivariate sums


def _phi_like_series(a, b, c, d, e, z):
    # rank-1 series carrying one upper parameter in each structural slot
    return AnSeries(
        q=Q,
        x=(F(1),),
        z=z,
        cross_num=((a,),),
        cross_den=((Q,),),
        per_index_num=((b,),),
        per_index_den=((d,),),
        weight_num=(c,),
        weight_den=(e,),
    )


def test_an_series_weight_zero_is_one():
    series = _phi_like_series(F(2, 5), F(3, 7), F(1, 6), F(1, 2), F(2, 3), F(1, 4))
    assert eval_an_series(series, Weight(0)) == 1


def test_an_series_rank_one_matches_phi():
    a, b, c, d, e, z = F(2, 5), F(3, 7), F(1, 6), F(1, 2), F(2, 3), F(1, 4)
    series = _phi_like_series(a, b, c, d, e, z)
    for n in range(4):
        assert eval_an_series(series, Weight(n)) == eval_phi(
            [a, b, c], [d, e], Q, z, terms=n
        )


def test_an_series_shell_decomposition():
    series = _phi_like_series(F(2, 5), F(3, 7), F(1, 6), F(1, 2), F(2, 3), F(1, 4))
    total = sum(eval_an_series(series, Shell(t)) for t in range(4))
    assert total == eval_an_series(series, Weight(3))


def test_an_series_box_termination():
    # per-index numerators q^-1, q^-2 kill every term outside the 1 x 2 box
    series = AnSeries(
        q=Q,
        x=(F(1), F(1, 4)),
        z=F(1, 3),
        cross_den=((Q, Q),),
        per_index_num=((Q**-1, Q**-2),),
    )
    boxed = eval_an_series(series, Box((1, 2)))
    assert boxed == eval_an_series(series, Weight(9))


def test_an_series_weight_termination():
    series = AnSeries(
        q=Q,
        x=(F(1), F(1, 4)),
        z=F(1, 3),
        cross_den=((Q, Q),),
        weight_num=(Q**-2,),
    )
    assert eval_an_series(series, Weight(2)) == eval_an_series(series, Weight(6))


def test_wnm_zero_argument_is_one():
    spec = WnmSpec(
        s=F(2, 5),
        a=(F(1, 3), F(1, 7)),
        x=(F(1), F(1, 4)),
        u=(F(1, 5),),
        v=(F(3, 4),),
        q=Q,
        z=F(0),
    )
    assert eval_wnm(spec, Weight(3)) == 1


def test_wnm_rank_one_matches_vwp():
    spec = WnmSpec(
        s=F(2, 5),
        a=(F(1, 3),),
        x=(F(1),),
        u=(F(1, 5), F(2, 9)),
        v=(F(3, 4), F(5, 8)),
        q=Q,
        z=F(1, 7),
    )
    got = eval_wnm(spec, Weight(6))
    want = eval_vwp(
        F(2, 5), [F(1, 3), F(1, 5), F(2, 9), F(3, 4), F(5, 8)], Q, F(1, 7), terms=6
    )
    assert got == want


def test_wnm_three_pairs_matches_ten_parameter_sum_termwise():
    s = F(2, 5)
    u = (F(1, 5), F(2, 9), F(4, 7))
    v = (F(3, 4), F(5, 8), F(1, 6))
    spec = WnmSpec(s=s, a=(F(1, 3),), x=(F(1),), u=u, v=v, q=Q, z=F(1, 9))
    params = [F(1, 3), *u, *v]
    for k in range(5):
        assert eval_wnm(spec, Shell(k)) == eval_vwp(
            s, params, Q, F(1, 9), terms=k
        ) - (eval_vwp(s, params, Q, F(1, 9), terms=k - 1) if k else 0)


def test_wnm_pair_permutation_symmetry():
    # relabelling the rooted pairs must not move the sum, at every rank <= 3
    base = dict(u=(F(1, 5),), v=(F(3, 4),), q=Q, z=F(1, 6), s=F(2, 7))
    a = (F(1, 3), F(2, 9), F(5, 11))
    x = (F(1), F(1, 4), F(3, 7))
    for rank in (1, 2, 3):
        reference = eval_wnm(WnmSpec(a=a[:rank], x=x[:rank], **base), Weight(3))
        for order in permutations(range(rank)):
            permuted = WnmSpec(
                a=tuple(a[i] for i in order), x=tuple(x[i] for i in order), **base
            )
            assert eval_wnm(permuted, Weight(3)) == reference


def test_wnm_balance_params_flatten():
    spec = WnmSpec(
        s=F(2, 5),
        a=(F(1, 3), F(1, 7)),
        x=(F(1), F(1, 4)),
        u=(F(1, 5),),
        v=(F(3, 4),),
        q=Q,
        z=F(1, 2),
    )
    s, params, z = wnm_balance_params(spec)
    assert s == F(2, 5)
    assert params == (F(1, 21), F(1, 5), F(3, 4))
    assert z == F(1, 2)


def test_an_jackson_summation_rank_two():
    # terminating balanced rank-2 series against its closed product form
    n_dim, N = 2, 2
    a, b1, b2, c, d = F(3, 5), F(2, 7), F(5, 9), F(1, 2), F(4, 3)
    x1, x2 = F(1), F(1, 5)
    B = b1 * b2
    e = a * a * Q ** (N + 1) / (B * c * d)
    spec = WnmSpec(s=a, a=(b1, b2), x=(x1, x2), u=(c, e), v=(d, Q**-N), q=Q, z=Q)
    lhs = eval_wnm(spec, Weight(N))
    rhs = (
        qpoch(a * Q / (B * c), Q, N)
        * qpoch(a * Q / (c * d), Q, N)
        / (qpoch(a * Q / (B * c * d), Q, N) * qpoch(a * Q / c, Q, N))
    )
    for bi, xi in [(b1, x1), (b2, x2)]:
        rhs *= (
            qpoch(a * Q / (bi * d) * xi, Q, N)
            * qpoch(a * Q * xi, Q, N)
            / (qpoch(a * Q / bi * xi, Q, N) * qpoch(a * Q / d * xi, Q, N))
        )
    assert lhs == rhs
    s_, params, z_ = wnm_balance_params(spec)
    assert is_vwp_balanced(s_, params, Q, z_)


def test_infinite_domain_needs_precision():
    series = _phi_like_series(F(2, 5), F(3, 7), F(1, 6), F(1, 2), F(2, 3), F(1, 4))
    with pytest.raises(NoConvergence):
        eval_an_series(series, Infinite())


def test_infinite_rank_two_matches_split_product():
    # a rank-2 series with no couplings factors into two geometric series
    series = AnSeries(
        q=Q,
        x=(F(1), F(1, 4)),
        z=F(1, 5),
        vandermonde=False,
        cross_num=(),
        cross_den=(),
    )
    got = eval_an_series(series, Infinite(), prec=Precision(40, tolerance=1e-32))
    want = (Decimal(1) / (1 - Decimal(1) / 5)) ** 2
    assert abs(got - want) < Decimal(10) ** -25
