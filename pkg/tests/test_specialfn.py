from fractions import Fraction

import pytest
import sympy

from nsr.errors import DegenerateParameters
from nsr.nekrasov import nekrasov_additive, nekrasov_block
from nsr.partition import PartitionTuple
from nsr.qseries import Cyclic, TruncSeries, arc, p_poch_expand, theta_expand
from nsr.scalar import TAU, evaluate, poch_q
from nsr.specialfn import (
    ParamPoint,
    alpha_const,
    alpha_toda,
    char_gl1_point,
    char_glN_limit,
    cN_closed,
    cN_recursive,
    f_ecs,
    f_hat,
    f_hat_kappa0,
    f_hat_kappa_zero,
    f_macdonald,
    f_stationary,
    f_toda,
    f_toda_from_limit,
    gt_pattern_counts,
    phi_dual_expand,
    phi_hat,
    phi_prefactor,
    psi0,
    strict_upper,
    uniform_part,
)

Fr = Fraction
POINT2 = ParamPoint(2, Fr(1, 3), Fr(2, 5), Fr(3, 7), (Fr(1), Fr(5, 11)))
POINT3 = ParamPoint(3, Fr(1, 3), Fr(2, 5), Fr(3, 7), (Fr(1), Fr(5, 11), Fr(4, 13)))


def partitions_count(k):
    return int(sympy.functions.combinatorial.numbers.partition(k))


def test_trivial_truncations():
    one = TruncSeries.one(Cyclic(2), 0)
    assert f_hat(POINT2, 0) == one
    assert phi_hat(POINT2, 0) == one
    assert f_hat_kappa0(2, Fr(1, 3), Fr(2, 5), 0) == one
    assert psi0(2, Fr(0), 4) == TruncSeries.one(Cyclic(2), 4)
    assert alpha_const(POINT3, 2) == TruncSeries.one(Cyclic(3), 2)


def test_single_tuple_coefficient_matches_block_product():
    p = POINT2
    T = PartitionTuple([[1], []])
    num = den = Fraction(1)
    for i in range(1, 3):
        for j in range(1, 3):
            u = p.s[j - 1] / p.s[i - 1]
            num *= nekrasov_block(j - i, T[i - 1], T[j - 1], p.t * u, p.q, p.kappa, 2)
            den *= nekrasov_block(j - i, T[i - 1], T[j - 1], u, p.q, p.kappa, 2)
    assert f_hat(p, 1)[(1, 0)] == num / den / p.t


@pytest.mark.parametrize("N", [2, 3])
def test_char_gl1_coefficients_are_partition_numbers(N):
    point = char_gl1_point(N, Fr(1, 3), Fr(2, 5))
    D = 4 * N if N == 2 else 2 * N
    f = f_hat(point, D)
    for d, c in f.items():
        assert len(set(d)) == 1
        assert c == partitions_count(d[0])
    assert f[(4,) * 2 if N == 2 else (2,) * 3] == (5 if N == 2 else 2)


def test_rotation_invariance():
    f = f_hat(POINT3, 3)
    s = POINT3.s
    assert f_hat(POINT3.replace(s=(s[2], s[0], s[1])), 3) == f.rotate(1)


def test_kappa_zero_closed_form():
    q, t = Fr(1, 3), Fr(2, 5)
    for point in (POINT2.replace(kappa=Fr(0)), POINT3.replace(kappa=Fr(0))):
        assert f_hat_kappa_zero(point, 3) == f_hat_kappa0(point.N, q, t, 3)
    assert f_hat_kappa0(2, q, q, 4) == 1


def test_phi_prefactor_round_trip():
    f = f_hat(POINT2, 4)
    phi = phi_hat(POINT2, 4)
    assert phi * f_hat_kappa0(2, POINT2.q, POINT2.t, 4) == f
    assert phi_prefactor(2, POINT2.q, POINT2.t, 4) * f_hat_kappa0(2, POINT2.q, POINT2.t, 4) == 1


def test_alpha_is_uniform_restriction():
    assert alpha_const(POINT2, 4) == uniform_part(f_hat(POINT2, 4))
    assert alpha_const(POINT3, 3) == uniform_part(f_hat(POINT3, 3))


def test_stationary_limit_is_regular_with_simple_alpha_pole():
    point = POINT2.replace(kappa=TAU, s=(Fr(1), Fr(2, 9)))
    res = f_stationary(point, 2)
    assert res.regular
    assert res.series.constant_term == 1
    assert res.alpha_pole_orders[1] <= 1
    with pytest.raises(ValueError):
        f_stationary(POINT2, 2)


def test_macdonald_gl2_matches_closed_series():
    q, t, s = Fr(1, 3), Fr(2, 5), (Fr(1), Fr(5, 11))
    u = s[1] / s[0]
    M = f_macdonald(2, s, q, t, 5)
    for n in range(6):
        expected = (poch_q(t, q, n) * poch_q(t * u, q, n)
                    / (poch_q(q, q, n) * poch_q(q * u, q, n)) * (q / t) ** n)
        assert M[(n,)] == expected


def test_cN_recursion_matches_closed_product_gl3():
    q, t, s = Fr(1, 3), Fr(2, 5), (Fr(1), Fr(5, 11), Fr(4, 13))
    for theta, _ in strict_upper(3, 4):
        assert cN_closed(theta, 3, s, q, t) == cN_recursive(theta, 3, s, q, t)


def test_toda_limit_matches_closed_form():
    point = ParamPoint(2, Fr(4, 9), None, Fr(3, 7), (Fr(1), Fr(5, 11)), r=Fr(2, 3))
    ft = f_toda(point, 2)
    assert ft.constant_term == 1
    assert f_toda_from_limit(point, 2) == ft
    assert alpha_toda(point, 2) == uniform_part(ft)
    with pytest.raises(ValueError):
        f_toda(point.replace(r=Fr(1, 2)), 2)


def test_gt_counts_match_dominant_weight_limit():
    assert char_glN_limit(2, 1, (), Fr(1, 3), 4) == gt_pattern_counts(2, 1, (), 4)


def test_ecs_single_tuple_and_character():
    lam, k, beta = (Fr(1, 3), Fr(-2, 5)), Fr(3, 7), Fr(1, 2)
    T = PartitionTuple([[1], []])
    num = den = Fraction(1)
    for i in range(1, 3):
        for j in range(1, 3):
            v = lam[j - 1] - lam[i - 1]
            num *= nekrasov_additive(j - i, T[i - 1], T[j - 1], 1 - beta + v, k, 2)
            den *= nekrasov_additive(j - i, T[i - 1], T[j - 1], v, k, 2)
    assert f_ecs(2, lam, k, beta, 1)[(1, 0)] == num / den

    beta = Fr(2, 7)
    f = f_ecs(2, (0, 0), -beta, beta, 8)
    for d, c in f.items():
        assert d[0] == d[1] and c == partitions_count(d[0])


def test_ecs_degenerate_denominator():
    with pytest.raises(DegenerateParameters):
        f_ecs(2, (0, 0), Fr(0), Fr(1, 2), 2)


def test_psi0_powers():
    D = 4
    coords = Cyclic(2)
    assert psi0(2, 1, D) == p_poch_expand(coords, D) * theta_expand(arc(2, 1, 2), coords, D)
    half = psi0(3, Fr(1, 2), 3)
    assert half * half == psi0(3, 1, 3)


def test_dual_table_at_bidegree_zero_and_kappa_collapse():
    q, t = Fr(1, 3), Fr(2, 5)
    tab = phi_dual_expand(2, q, t, 2, 2)
    assert tab[((0, 0), (0, 0))] == 1
    # sigma-degree 0 is phi at kappa = 0, which is identically 1
    assert {d: c for (d, e), c in tab.items() if not any(e)} == {(0, 0): 1}
