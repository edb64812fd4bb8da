"""Operators acting on ``x^lambda`` times a truncated series.

A :class:`TwistedSeries` stands for ``x^lambda * body``.  Difference
operators only see ``lambda`` through the values ``q^{lambda_i}``
(``qlambda``); differential operators and the q-Gaussian ``q^Delta`` need
``lambda`` itself (``lam``).

On a key d the Euler operator ``x_i d/dx_i`` acts by ``lambda_i + m_i(d)``
and the shift ``T_{q,x_i}`` by ``q^{lambda_i} q^{m_i(d)}``, where m is the
x-exponent vector of the coordinate system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import CoordinateMismatch, SeriesError
from .qseries import (
    Cyclic,
    Monomial,
    TruncSeries,
    arc,
    infinite_poch_expand,
    series_invert,
    theta1_at_one,
    theta_expand,
    theta_logderiv,
    v0_series,
    v_potential,
    z_grading,
)
from .scalar import PowerCache, Q, div


@dataclass(frozen=True)
class TwistedSeries:
    body: TruncSeries
    qlambda: tuple = None
    lam: tuple = None

    @property
    def coords(self):
        return self.body.coords

    def with_body(self, body: TruncSeries) -> "TwistedSeries":
        return TwistedSeries(body, self.qlambda, self.lam)

    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        return self.with_body(self.body + other.body)

    def __sub__(self, other: "TwistedSeries") -> "TwistedSeries":
        return self.with_body(self.body - other.body)

    def scale(self, c) -> "TwistedSeries":
        return self.with_body(self.body.scale(c))


def shift(F: TwistedSeries, i: int, q) -> TruncSeries:
    """Body of ``T_{q,x_i}`` applied to ``x^lambda F`` (x^lambda stripped)."""
    if F.qlambda is None:
        raise ValueError("q-shifts need qlambda")
    qp = PowerCache(q)
    ql = F.qlambda[i - 1]
    coords = F.coords
    return F.body.map_keys(lambda d: ql * qp(coords.x_exponents(d)[i - 1]))


def euler(F: TwistedSeries, i: int) -> TruncSeries:
    """Body of ``x_i d/dx_i`` applied to ``x^lambda F``."""
    if F.lam is None:
        raise ValueError("Euler operators need lam")
    li = F.lam[i - 1]
    coords = F.coords
    return F.body.map_keys(lambda d: li + coords.x_exponents(d)[i - 1])


# ---------------------------------------------------------------------------
# Macdonald and Ruijsenaars


def _finite_arc(N, i, j):
    return Monomial(Fraction(1), tuple(1 if i <= l < j else 0 for l in range(1, N)))


@lru_cache(maxsize=None)
def _macdonald_coefficients(N: int, t, D: int):
    from .qseries import Finite
    coords = Finite(N)
    out = []
    for i in range(1, N + 1):
        R = TruncSeries.one(coords, D)
        for j in range(1, N + 1):
            if j == i:
                continue
            w = _finite_arc(N, min(i, j), max(i, j))
            geo = infinite_poch_expand(w, Fraction(0), "inverse", coords, D)
            if j > i:
                num = TruncSeries.constant(coords, D, t) - TruncSeries.from_monomial(coords, D, w)
            else:
                num = TruncSeries.one(coords, D).mul_binomial(w.scaled(t))
            R = R * num * geo
        out.append(R)
    return tuple(out)


def macdonald_apply(F: TwistedSeries, q, t) -> TwistedSeries:
    """``sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i}`` for x_1 >> ... >> x_N."""
    if F.coords.kind != "finite":
        raise CoordinateMismatch("the Macdonald operator acts in finite coordinates")
    N, D = F.coords.N, F.body.trunc
    coeffs = _macdonald_coefficients(N, t, D)
    out = TruncSeries.zero(F.coords, D)
    for i in range(1, N + 1):
        out = out + coeffs[i - 1] * shift(F, i, q)
    return F.with_body(out)


@lru_cache(maxsize=None)
def _ruijsenaars_coefficients(N: int, t, D: int, tilde: bool):
    coords = Cyclic(N)
    tp = PowerCache(t)
    out = []
    for i in range(1, N + 1):
        R = TruncSeries.constant(coords, D, Fraction(1) if tilde else tp(N - i))
        for j in range(1, i):
            w = arc(N, j, i)
            R = R * theta_expand(w.scaled(t), coords, D) * series_invert(theta_expand(w, coords, D))
        for k in range(i + 1, N + 1):
            w = arc(N, i, k)
            R = R * theta_expand(w.scaled(div(1, t)), coords, D) * series_invert(theta_expand(w, coords, D))
        out.append(R)
    return tuple(out)


def ruijsenaars_apply(F: TwistedSeries, q, t, tilde: bool = False) -> TwistedSeries:
    """The modified Ruijsenaars operator in cyclic coordinates.

    With ``tilde=True`` the prefactors ``t^{N-i}`` are dropped.
    """
    if F.coords.kind != "cyclic":
        raise CoordinateMismatch("the Ruijsenaars operator acts in cyclic coordinates")
    N, D = F.coords.N, F.body.trunc
    coeffs = _ruijsenaars_coefficients(N, t, D, tilde)
    out = TruncSeries.zero(F.coords, D)
    for i in range(1, N + 1):
        out = out + coeffs[i - 1] * shift(F, i, q)
    return F.with_body(out)


# ---------------------------------------------------------------------------
# affine q-Toda


def _unit(N, i, coef=Fraction(1)):
    return Monomial(coef, tuple(1 if k == i - 1 else 0 for k in range(N)))


def toda_apply(F: TwistedSeries, q) -> TwistedSeries:
    """``sum_i (1 - p~ x_{i+1}/x_i) T_{q,x_i}``; y_i plays the role of p~ x_{i+1}/x_i."""
    if F.coords.kind != "cyclic":
        raise CoordinateMismatch("the Toda operator acts in cyclic coordinates")
    N = F.coords.N
    out = TruncSeries.zero(F.coords, F.body.trunc)
    for i in range(1, N + 1):
        out = out + shift(F, i, q).mul_binomial(_unit(N, i))
    return F.with_body(out)


def q_gaussian(F: TwistedSeries, r) -> TruncSeries:
    """Body of ``q^Delta x^lambda F`` with ``q = r^2`` and integer lambda."""
    if F.lam is None or any(Q(l).denominator != 1 for l in F.lam):
        raise ValueError("q^Delta needs integer lambda")
    lam = [int(Q(l)) for l in F.lam]
    rp = PowerCache(r)
    coords = F.coords
    return F.body.map_keys(
        lambda d: rp(sum((l + m) ** 2 for l, m in zip(lam, coords.x_exponents(d)))))


def toda_nonstat_apply(F: TwistedSeries, q, kappa, r) -> TwistedSeries:
    """``prod_i (p~ q x_{i+1}/x_i; q)^{-1} q^Delta T_{kappa, p~}`` with ``q = r^2``."""
    if r * r != q:
        raise ValueError("need q = r^2")
    if F.coords.kind != "cyclic":
        raise CoordinateMismatch("the Toda operator acts in cyclic coordinates")
    N, D = F.coords.N, F.body.trunc
    kp = PowerCache(kappa)
    dilated = F.with_body(F.body.map_keys(lambda d: kp(sum(d))))
    out = q_gaussian(dilated, r)
    for i in range(1, N + 1):
        out = out * infinite_poch_expand(_unit(N, i, q), q, "inverse", F.coords, D)
    return F.with_body(out)


# ---------------------------------------------------------------------------
# elliptic Calogero-Sutherland


@dataclass(frozen=True)
class _ThetaData:
    L1: dict  # (i, j) -> Theta1/Theta at arc(i, j)
    L2: dict
    V: dict
    V0: TruncSeries
    C: TruncSeries  # p d/dp Theta1(1) / Theta1(1)


@lru_cache(maxsize=None)
def theta_data(N: int, D: int) -> _ThetaData:
    coords = Cyclic(N)
    L1, L2, V = {}, {}, {}
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            w = arc(N, i, j)
            L1[(i, j)] = theta_logderiv(w, 1, coords, D)
            L2[(i, j)] = theta_logderiv(w, 2, coords, D)
            V[(i, j)] = v_potential(w, coords, D)
    T1 = theta1_at_one(coords, D)
    C = T1.p_derivative() * series_invert(T1)
    return _ThetaData(L1, L2, V, v0_series(coords, D), C)


def _laplacian(F: TwistedSeries) -> TruncSeries:
    N = F.coords.N
    lam = F.lam
    coords = F.coords
    return F.body.map_keys(
        lambda d: sum((lam[i] + m) ** 2 for i, m in enumerate(coords.x_exponents(d))) / Fraction(2))


def h_beta_apply(F: TwistedSeries, beta, form: str = "three-body") -> TwistedSeries:
    """``H_beta(p)`` in its three-body or two-body form."""
    N, D = F.coords.N, F.body.trunc
    td = theta_data(N, D)
    beta = Q(beta)
    out = _laplacian(F)
    for (i, j), L1 in td.L1.items():
        out = out - (L1 * (euler(F, i) - euler(F, j))).scale(beta)
    if form == "three-body":
        pot = TruncSeries.zero(F.coords, D)
        for L2 in td.L2.values():
            pot = pot + L2
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                for k in range(j + 1, N + 1):
                    a, b, c = td.L1[(i, j)], td.L1[(i, k)], td.L1[(j, k)]
                    pot = pot + a * b - a * c + b * c
    elif form == "two-body":
        pot = TruncSeries.zero(F.coords, D)
        for (i, j), L2 in td.L2.items():
            pot = pot + L2.scale(Fraction(N, 2)) - td.L1[(i, j)].scale(Fraction(N - 2 * j + 2 * i, 2))
        pot = pot - td.C.scale(Fraction((N - 1) * (N - 2), 6))
    else:
        raise ValueError(f"unknown form {form!r}")
    out = out + (pot * F.body).scale(beta * beta)
    return F.with_body(out)


def ecs_potential(N: int, beta, D: int) -> TruncSeries:
    """``beta(beta-1) (sum_{i<j} V(arc_ij) + N/2 V_0(P))``."""
    td = theta_data(N, D)
    beta = Q(beta)
    pot = td.V0.scale(Fraction(N, 2))
    for Vij in td.V.values():
        pot = pot + Vij
    return pot.scale(beta * (beta - 1))


def h_ecs_apply(F: TwistedSeries, beta) -> TwistedSeries:
    N, D = F.coords.N, F.body.trunc
    return F.with_body(_laplacian(F) + ecs_potential(N, beta, D) * F.body)


def ecs_apply(F: TwistedSeries, beta, variant: str = "H_eCS", k=None) -> TwistedSeries:
    """Dispatch over ``H_beta`` (three-body / two-body), ``H_eCS`` and ``NonStat``.

    ``NonStat`` is ``k p d/dp + H_eCS``.
    """
    if F.coords.kind != "cyclic":
        raise CoordinateMismatch("eCS operators act in cyclic coordinates")
    if variant in ("H_beta", "three-body"):
        return h_beta_apply(F, beta, "three-body")
    if variant == "two-body":
        return h_beta_apply(F, beta, "two-body")
    if variant == "H_eCS":
        return h_ecs_apply(F, beta)
    if variant == "NonStat":
        if k is None:
            raise ValueError("NonStat needs k")
        H = h_ecs_apply(F, beta)
        return H.with_body(H.body + F.body.p_derivative().scale(Q(k)))
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# eigen-ratio extraction


@dataclass
class EigenReport:
    ratio: TruncSeries
    uniform: bool
    eigenvalue_series: list
    constant_term: object
    witness: tuple = None  # first non-uniform key and its coefficient
    witnesses: list = field(default_factory=list)


def eigen_extract(opF: TwistedSeries, F: TwistedSeries) -> EigenReport:
    """Ratio ``body(opF) / body(F)`` and its support condition."""
    if F.body.constant_term == 0:
        raise SeriesError("eigen extraction needs a unit constant term")
    ratio = opF.body * series_invert(F.body)
    coords = ratio.coords
    bad = []
    for d, c in ratio.items():
        if coords.kind == "cyclic":
            ok = all(x == d[0] for x in d)
        else:
            ok = not any(d)
        if not ok:
            bad.append((d, c))
    ev = []
    if coords.kind == "cyclic":
        N = coords.N
        for k in range(ratio.trunc // N + 1):
            ev.append(ratio[(k,) * N])
    else:
        ev.append(ratio.constant_term)
    return EigenReport(ratio, not bad, ev, ratio.constant_term,
                       bad[0] if bad else None, bad)
