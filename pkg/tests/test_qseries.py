import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nsr.errors import CoordinateMismatch, SeriesError
from nsr.qseries import (
    Cyclic,
    Finite,
    Monomial,
    PSeries,
    TruncSeries,
    arc,
    full_period,
    infinite_poch_expand,
    p_poch_expand,
    poch_pseries,
    series_invert,
    series_pow_rational,
    theta1_at_one,
    theta_expand,
    theta_laurent,
    theta_logderiv,
    theta_logderiv_direct,
    theta_triple_product,
    v0_coefficients,
    v0_series,
    v_potential_pseries,
)
from nsr.scalar import TAU

coeff = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def random_series(coords, D, draw):
    keys = [d for n in range(D + 1) for d in _vectors(coords.arity, n)]
    vals = draw(st.lists(coeff, min_size=len(keys), max_size=len(keys)))
    return TruncSeries(coords, D, dict(zip(keys, vals)))


def _vectors(n, total):
    if n == 1:
        return [(total,)]
    return [(a,) + r for a in range(total, -1, -1) for r in _vectors(n - 1, total - a)]


def test_arc_and_period():
    assert arc(3, 1, 3).exps == (1, 1, 0)
    assert arc(3, 3, 1).exps == (0, 0, 1)
    assert arc(2, 2, 1).exps == (0, 1)
    assert full_period(3).exps == (1, 1, 1)
    with pytest.raises(ValueError):
        arc(2, 1, 3)


def test_coordinate_mismatch():
    with pytest.raises(CoordinateMismatch):
        TruncSeries.one(Cyclic(2), 2) + TruncSeries.one(Finite(2), 2)
    with pytest.raises(CoordinateMismatch):
        TruncSeries.one(Finite(3), 2).p_derivative()


def test_truncation_drops_high_terms():
    S = TruncSeries(Cyclic(2), 2, {(2, 1): Fraction(1), (1, 0): Fraction(3)})
    assert dict(S.items()) == {(1, 0): 3}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([Cyclic(2), Cyclic(3), Finite(3)]), st.integers(min_value=1, max_value=3), st.data())
def test_inverse_is_two_sided(coords, D, data):
    A = random_series(coords, D, data.draw)
    if A.constant_term == 0:
        with pytest.raises(SeriesError):
            series_invert(A)
        return
    inv = series_invert(A)
    assert A * inv == 1
    assert inv * A == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.data())
def test_rational_power_squares_back(D, data):
    A = random_series(Cyclic(2), D, data.draw)
    A = A - A.constant_term + 1
    half = series_pow_rational(A, Fraction(1, 2))
    assert half * half == A


@pytest.mark.parametrize("q", [Fraction(1, 3), Fraction(-2, 5), TAU])
def test_infinite_poch_functional_equation(q):
    coords, D = Cyclic(2), 6
    w = Monomial(Fraction(2, 3), (1, 0))
    direct = infinite_poch_expand(w, q, "direct", coords, D)
    shifted = infinite_poch_expand(w.scaled(q), q, "direct", coords, D)
    assert direct == shifted.mul_binomial(w)
    assert direct * infinite_poch_expand(w, q, "inverse", coords, D) == 1


@pytest.mark.parametrize("N,exps,D", [(2, (1, 0), 7), (3, (1, 0, 0), 7), (3, (1, 1, 0), 7), (4, (0, 1, 1, 0), 8)])
def test_theta_product_matches_sum(N, exps, D):
    w = Monomial(Fraction(3, 2), exps)
    coords = Cyclic(N)
    assert theta_expand(w, coords, D) == theta_triple_product(w, coords, D)
    assert theta_logderiv(w, 1, coords, D) == theta_logderiv_direct(w, coords, D)


def test_theta_argument_validation():
    with pytest.raises(SeriesError):
        theta_expand(Monomial(Fraction(1), (1, 1)), Cyclic(2), 3)
    with pytest.raises(CoordinateMismatch):
        theta_expand(Monomial(Fraction(1), (1, 0)), Finite(3), 3)


def test_v0_known_coefficients():
    assert v0_coefficients(7) == [-2, -6, -8, -14, -12, -24, -16]


@pytest.mark.parametrize("N", [2, 3])
def test_v0_is_minus_two_sigma(N):
    S = v0_series(Cyclic(N), 4 * N)
    assert S.is_uniform()
    for n in range(1, 5):
        assert S[(n,) * N] == -2 * sympy.divisor_sigma(n)


@pytest.mark.parametrize("N", [2, 3])
def test_theta1_at_one_is_minus_euler_cubed(N):
    D = 5 * N
    assert theta1_at_one(Cyclic(N), D) == -(p_poch_expand(Cyclic(N), D) ** 3)


def _binomial(D, n, c):
    """``1 - c p^n`` as a PSeries."""
    out = [Fraction(0)] * (D + 1)
    out[0] = Fraction(1)
    if n <= D:
        out[n] = out[n] - c
    return PSeries(D, out)


def test_pseries_jacobi_triple_product():
    D, z = 6, TAU
    prod = poch_pseries(D)
    for n in range(D + 1):
        prod = prod * _binomial(D, n, z) * _binomial(D, n + 1, 1 / z)
    assert theta_laurent(D, z) == prod


def test_pseries_inverse_and_derivative():
    E = poch_pseries(8)
    assert E * E.inverse() == PSeries(8, [1])
    assert poch_pseries(8, -1) == E.inverse()
    # p d/dp log (p;p) = -sum sigma(n) p^n
    L = E.p_derivative() / E
    assert L.coeffs[1:] == [-sympy.divisor_sigma(n) for n in range(1, 9)]
    with pytest.raises(SeriesError):
        PSeries(3, [0, 1]).inverse()


@pytest.mark.parametrize("z", [Fraction(2, 3), TAU])
def test_potential_is_elliptic(z):
    D = 5
    assert v_potential_pseries(D, z, shift=1) == v_potential_pseries(D, z)


def test_json_is_canonical():
    S = theta_expand(Monomial(Fraction(1), (1, 0)), Cyclic(2), 4)
    doc = json.loads(S.dumps())
    assert doc["coords"] == {"kind": "cyclic", "N": 2}
    assert doc["trunc"] == 4
    keys = [tuple(t["d"]) for t in doc["terms"]]
    assert keys == sorted(keys, key=lambda d: (sum(d), d))
    assert S.dumps() == theta_triple_product(Monomial(Fraction(1), (1, 0)), Cyclic(2), 4).dumps()
