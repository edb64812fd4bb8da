"""Constructors for the series built from cyclic Nekrasov factors.

Every affine series is a sum over N-tuples of partitions.  A tuple T
contributes to the coefficient of ``y^d`` with ``d = degree_vector(T)``;
all parameter weights (``t^{-|T|}``, ``kappa^{-|T|}`` ...) are kept in the
coefficient so the coordinates stay parameter free.

Parameters are passed as a :class:`ParamPoint`.  Its ``t`` is the literal
last argument of ``f(x, p | s, kappa | q, t)``; callers that want the
``(q, q/t)`` specialisation pass ``t = q/t`` themselves.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameters, InternalMismatch, SeriesError
from .nekrasov import block_factors
from .partition import (
    DominantWeight,
    degree_vector,
    is_gt_pattern,
    m_from_degree,
    tuples_by_degree,
)
from .qseries import (
    Cyclic,
    Finite,
    Monomial,
    TruncSeries,
    arc,
    double_poch_expand,
    full_period,
    infinite_poch_expand,
    p_poch_expand,
    series_invert,
    series_pow_rational,
    theta_expand,
)
from .scalar import TAU, PowerCache, Q, RatFunc, div, evaluate, poch_q, product, simplify


@dataclass(frozen=True)
class ParamPoint:
    """Values of q, t, kappa and s_1..s_N (rationals or RatFuncs in tau).

    ``r`` is an optional root of q (q = r^N or q = r^2, depending on the
    caller) used where fractional powers of q appear.
    """

    N: int
    q: object
    t: object
    kappa: object
    s: tuple
    r: object = None

    def __post_init__(self):
        if len(self.s) != self.N:
            raise ValueError(f"need {self.N} spectral parameters, got {len(self.s)}")

    def replace(self, **changes) -> "ParamPoint":
        return dataclasses.replace(self, **changes)

    def to_json(self) -> dict:
        from .scalar import to_json_pair

        def enc(x):
            if x is None:
                return None
            num, den = to_json_pair(x)
            return num if den == "1" else f"{num}/{den}"

        out = {"N": self.N, "q": enc(self.q), "t": enc(self.t), "kappa": enc(self.kappa),
               "s": [enc(x) for x in self.s]}
        if self.r is not None:
            out["r"] = enc(self.r)
        return out


# ---------------------------------------------------------------------------
# generic tuple sums


def _tuple_sum(N: int, D: int, term, scale=None) -> TruncSeries:
    """Series whose d-coefficient is ``scale(n) * sum_T term(T, d)``."""
    coeffs = {}
    for n in range(D + 1):
        w = Fraction(1) if scale is None else scale(n)
        for d, tuples in tuples_by_degree(N, n).items():
            total = 0
            for T in tuples:
                v = term(T, d)
                if v != 0:
                    total = total + v
            if total != 0:
                coeffs[d] = simplify(total * w)
    return TruncSeries(Cyclic(N), D, coeffs)


class _RatioFactors:
    """Cached values of ``1 - c u q^a kappa^b`` and ``1 - u q^a kappa^b``."""

    def __init__(self, point: ParamPoint, numer_shift):
        self.point = point
        self.shift = numer_shift
        self.qp = PowerCache(point.q)
        self.kp = PowerCache(point.kappa)
        self.cache = {}

    def u(self, i, j):
        s = self.point.s
        return div(s[j - 1], s[i - 1])

    def get(self, i, j, a, b):
        key = (i, j, a, b)
        v = self.cache.get(key)
        if v is None:
            c = self.u(i, j) * self.qp(a) * self.kp(b)
            v = (1 - self.shift * c, 1 - c)
            self.cache[key] = v
        return v


def _blocks(T):
    N = len(T)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            yield i, j, block_factors((j - i) % N, T[i - 1], T[j - 1], N)


def _ratio_term(factors: _RatioFactors, with_numerator=True):
    def term(T, d):
        nums, dens = [], []
        for i, j, fl in _blocks(T):
            for a, b in fl:
                num, den = factors.get(i, j, a, b)
                if den == 0:
                    raise DegenerateParameters(
                        f"denominator factor (i={i}, j={j}, q^{a} kappa^{b}) vanishes for tuple {T}",
                        where={"d": list(d), "tuple": [list(c) for c in T], "factor": [i, j, a, b]})
                if with_numerator:
                    nums.append(num)
                dens.append(den)
        if not dens:
            return product(nums) if nums else Fraction(1)
        return product(nums) / product(dens) if nums else div(1, product(dens))
    return term


# ---------------------------------------------------------------------------
# the affine series f and its relatives


def f_hat(point: ParamPoint, D: int) -> TruncSeries:
    """Coefficients ``t^{-|T|} prod_{i,j} N(t s_j/s_i) / N(s_j/s_i)`` summed by degree."""
    factors = _RatioFactors(point, point.t)
    tp = PowerCache(point.t)
    return _tuple_sum(point.N, D, _ratio_term(factors), scale=lambda n: tp(-n))


def f_hat_kappa_zero(point: ParamPoint, D: int) -> TruncSeries:
    """f at kappa = 0, taken factor by factor.

    Each ratio ``(1 - t c kappa^b)/(1 - c kappa^b)`` tends to 1 for b > 0,
    to t for b < 0 and is unchanged for b = 0.
    """
    t = point.t
    qp = PowerCache(point.q)
    tp = PowerCache(t)
    s = point.s

    def term(T, d):
        nums, dens = [], []
        for i, j, fl in _blocks(T):
            u = div(s[j - 1], s[i - 1])
            for a, b in fl:
                if b < 0:
                    nums.append(t)
                elif b == 0:
                    c = u * qp(a)
                    if c == 1:
                        raise DegenerateParameters(
                            f"kappa-free factor (i={i}, j={j}, q^{a}) vanishes for tuple {T}",
                            where={"d": list(d), "tuple": [list(c) for c in T]})
                    nums.append(1 - t * c)
                    dens.append(1 - c)
        return product(nums) / product(dens) if dens else product(nums)

    return _tuple_sum(point.N, D, term, scale=lambda n: tp(-n))


def _prefactor_pairs(N: int):
    """Arguments of the double products in the kappa = 0 closed form."""
    out = []
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            out.append(arc(N, i, j).exps)
    for i in range(1, N + 1):
        for j in range(i, N + 1):
            out.append(full_period(N).exps if i == j else arc(N, j, i).exps)
    return out


def f_hat_kappa0(N: int, q, t, D: int) -> TruncSeries:
    """Closed double-product form of f at kappa = 0."""
    coords = Cyclic(N)
    S = TruncSeries.one(coords, D)
    for exps in _prefactor_pairs(N):
        S = S * double_poch_expand(Monomial(q, exps), q, "direct", coords, D)
        S = S * double_poch_expand(Monomial(t, exps), q, "inverse", coords, D)
    return S


def phi_prefactor(N: int, q, t, D: int) -> TruncSeries:
    """The inverse of :func:`f_hat_kappa0`, expanded directly."""
    coords = Cyclic(N)
    S = TruncSeries.one(coords, D)
    for exps in _prefactor_pairs(N):
        S = S * double_poch_expand(Monomial(t, exps), q, "direct", coords, D)
        S = S * double_poch_expand(Monomial(q, exps), q, "inverse", coords, D)
    return S


def phi_hat(point: ParamPoint, D: int) -> TruncSeries:
    """Normalised series: f divided by its kappa = 0 value."""
    return phi_prefactor(point.N, point.q, point.t, D) * f_hat(point, D)


def uniform_part(S: TruncSeries) -> TruncSeries:
    """Restriction to keys (k, ..., k), i.e. the x-constant term."""
    return S.restrict(lambda d: all(x == d[0] for x in d))


def alpha_const(point: ParamPoint, D: int) -> TruncSeries:
    """Constant term in x of f, summed directly over tuples with m = 0."""
    factors = _RatioFactors(point, point.t)
    tp = PowerCache(point.t)
    inner = _ratio_term(factors)

    def term(T, d):
        if any(x != d[0] for x in d):
            return 0
        return inner(T, d)

    return _tuple_sum(point.N, D, term, scale=lambda n: tp(-n))


@dataclass
class StationaryResult:
    series: TruncSeries
    alpha_pole_orders: dict  # k -> pole order of alpha_k at kappa = 1
    ratio_pole_orders: dict  # d -> pole order of (f/alpha)_d at kappa = 1

    @property
    def regular(self) -> bool:
        return not any(self.ratio_pole_orders.values())


def f_stationary(point: ParamPoint, D: int, at=1) -> StationaryResult:
    """``(f / alpha)`` at kappa = ``at``; kappa must be symbolic (tau).

    Any pole of a reduced coefficient at kappa = ``at`` is reported instead
    of raising, together with the pole orders of the alpha coefficients.
    """
    if not isinstance(point.kappa, RatFunc) or point.kappa != TAU:
        raise ValueError("f_stationary needs kappa = TAU")
    return _stationary(f_hat(point, D), point.N, D, at)


def _stationary(f: TruncSeries, N: int, D: int, at) -> StationaryResult:
    alpha = uniform_part(f)
    ratio = f * series_invert(alpha)
    alpha_poles = {}
    for k in range(1, D // N + 1):
        c = alpha[(k,) * N]
        alpha_poles[k] = c.pole_order(at) if isinstance(c, RatFunc) else 0
    ratio_poles = {}
    values = {}
    for d, c in ratio.items():
        order = c.pole_order(at) if isinstance(c, RatFunc) else 0
        ratio_poles[d] = order
        if order == 0:
            values[d] = evaluate(c, at)
    return StationaryResult(TruncSeries(Cyclic(N), D, values), alpha_poles, ratio_poles)


# ---------------------------------------------------------------------------
# characters


def char_gl1_point(N: int, q, t) -> ParamPoint:
    """``s = (1, ..., 1)``, ``kappa = 1/t`` and last argument ``q/t``."""
    return ParamPoint(N, Q(q), div(q, t), div(1, t), (Fraction(1),) * N)


def char_glN_point(N: int, K: int, mu, r) -> ParamPoint:
    """Dominant-weight specialisation with ``q = r^N`` and ``t = tau`` symbolic.

    ``s_i = r^{-K(N-i) + N mu_i}``, ``kappa = r^{-K}/tau`` and the last
    argument of f is ``q/tau``.
    """
    mu = DominantWeight(K, tuple(mu)).padded(N)
    r = Q(r)
    q = r ** N
    s = tuple(r ** (-K * (N - i) + N * mu[i - 1]) for i in range(1, N + 1))
    kappa = r ** (-K) / TAU
    return ParamPoint(N, q, q / TAU, kappa, s, r=r)


def char_glN_limit(N: int, K: int, mu, r, D: int) -> TruncSeries:
    """Coefficients of f at the dominant-weight point, evaluated at t = q."""
    point = char_glN_point(N, K, mu, r)
    f = f_hat(point, D)
    return f.map_coeffs(lambda c: evaluate(c, point.q))


def gt_pattern_counts(N: int, K: int, mu, D: int) -> TruncSeries:
    """Number of affine Gelfand-Tsetlin patterns per degree vector."""
    w = DominantWeight(K, tuple(mu))
    coeffs = {}
    for n in range(D + 1):
        for d, tuples in tuples_by_degree(N, n).items():
            c = sum(1 for T in tuples if is_gt_pattern(T, w))
            if c:
                coeffs[d] = Fraction(c)
    return TruncSeries(Cyclic(N), D, coeffs)


# ---------------------------------------------------------------------------
# Macdonald functions (finite type)


def strict_upper(N: int, D: int):
    """Strictly upper triangular theta with sum (j-i) theta_ij <= D.

    Yields ``(theta, d)`` where theta is an (N+1)x(N+1) nested list with
    1-based indices and d is the z-degree vector ``d_l = sum_{i<=l<j} theta_ij``.
    """
    pairs = [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]

    def rec(idx, budget, theta):
        if idx == len(pairs):
            yield theta
            return
        i, j = pairs[idx]
        w = j - i
        for n in range(budget // w + 1):
            theta[i][j] = n
            yield from rec(idx + 1, budget - n * w, theta)
        theta[i][j] = 0

    theta = [[0] * (N + 1) for _ in range(N + 1)]
    for th in rec(0, D, theta):
        d = tuple(sum(th[i][j] for i in range(1, l + 1) for j in range(l + 1, N + 1))
                  for l in range(1, N))
        yield [row[:] for row in th], d


def cN_factors(theta, N: int, q, t):
    """Pochhammer factors of the closed product for c_N.

    Yields ``(power, coef, i, j, n)`` standing for
    ``(coef * s_j/s_i ; q)_n ** power``.
    """
    qp = PowerCache(q)
    for k in range(2, N + 1):
        for i in range(1, k):
            n = theta[i][k]
            if n == 0:
                continue
            for j in range(i, k):
                e1 = sum(theta[i][a] - theta[j + 1][a] for a in range(k + 1, N + 1))
                yield (1, qp(e1) * t, i, j + 1, n)
                yield (-1, qp(e1) * q, i, j + 1, n)
                e2 = -theta[j][k] + sum(theta[i][a] - theta[j][a] for a in range(k + 1, N + 1))
                yield (1, qp(e2) * div(q, t), i, j, n)
                yield (-1, qp(e2), i, j, n)


def _poch_or_fail(u, q, n, what):
    v = poch_q(u, q, n)
    if v == 0:
        raise DegenerateParameters(f"vanishing Pochhammer symbol in {what}", where=what)
    return v


def cN_closed(theta, N: int, s, q, t):
    nums, dens = [], []
    for power, coef, i, j, n in cN_factors(theta, N, q, t):
        u = coef * div(s[j - 1], s[i - 1])
        if power > 0:
            nums.append(poch_q(u, q, n))
        else:
            dens.append(_poch_or_fail(u, q, n, "c_N"))
    return product(nums) / product(dens) if dens else product(nums)


def cN_recursive(theta, N: int, s, q, t):
    if N == 1:
        return Fraction(1)
    qp = PowerCache(q)
    shifted = tuple(qp(-theta[i][N]) * s[i - 1] for i in range(1, N))
    value = cN_recursive(theta, N - 1, shifted, q, t)
    for i in range(1, N):
        n = theta[i][N]
        if n == 0:
            continue
        for j in range(i, N):
            value = value * poch_q(t * div(s[j], s[i - 1]), q, n)
            value = div(value, _poch_or_fail(q * div(s[j], s[i - 1]), q, n, "c_N"))
            value = value * poch_q(qp(-theta[j][N]) * q * div(s[j - 1], t * s[i - 1]), q, n)
            value = div(value, _poch_or_fail(qp(-theta[j][N]) * div(s[j - 1], s[i - 1]), q, n, "c_N"))
    return value


def cN(theta, N: int, s, q, t, check: bool = True):
    """c_N(theta; s; q, t) from the closed product, cross-checked by recursion."""
    closed = cN_closed(theta, N, s, q, t)
    if check:
        rec = cN_recursive(theta, N, s, q, t)
        if rec != closed:
            raise InternalMismatch(f"c_N recursion {rec} != closed form {closed} at theta={theta}")
    return closed


def f_macdonald(N: int, s, q, t, D: int, check: bool = True) -> TruncSeries:
    """``sum_theta c_N(theta; s; q, t) prod (x_j/x_i)^theta_ij`` in Finite(N)."""
    coeffs = {}
    for theta, d in strict_upper(N, D):
        c = cN(theta, N, s, q, t, check)
        if c != 0:
            coeffs[d] = coeffs.get(d, 0) + c
    return TruncSeries(Finite(N), D, coeffs)


def finite_arc(N: int, i: int, j: int, coef=Fraction(1)) -> Monomial:
    """``x_j/x_i = z_i ... z_{j-1}`` for i < j in Finite(N) coordinates."""
    return Monomial(coef, tuple(1 if i <= l < j else 0 for l in range(1, N)))


def macdonald_prefactor(N: int, q, t, D: int) -> TruncSeries:
    """``prod_{i<j} (q x_j/(t x_i); q) / (q x_j/x_i; q)``."""
    coords = Finite(N)
    S = TruncSeries.one(coords, D)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            S = S * infinite_poch_expand(finite_arc(N, i, j, div(q, t)), q, "direct", coords, D)
            S = S * infinite_poch_expand(finite_arc(N, i, j, q), q, "inverse", coords, D)
    return S


def phi_macdonald(N: int, s, q, t, D: int) -> TruncSeries:
    return macdonald_prefactor(N, q, t, D) * f_macdonald(N, s, q, t, D)


def _geometric_factor(coords, D, coef, exps, power):
    """``(1 - coef m)`` for power 1 or ``1/(1 - coef m)`` for power -1."""
    if power > 0:
        return TruncSeries.one(coords, D).mul_binomial(Monomial(coef, exps))
    deg = sum(exps)
    out = {}
    n = 0
    while n * deg <= D:
        key = tuple(n * e for e in exps)
        out[key] = out.get(key, 0) + coef ** n
        n += 1
    return TruncSeries(coords, D, out)


def _expand_product(coords, D, factors, const=Fraction(1)) -> TruncSeries:
    """Product of binomials ``(1 - coef m)^power`` as a series.

    Factors with a degree-0 monomial are folded into the constant.
    """
    S = TruncSeries.constant(coords, D, const)
    consts_num, consts_den = [], []
    for power, coef, exps in factors:
        if sum(exps) == 0:
            v = 1 - coef
            if power > 0:
                consts_num.append(v)
            else:
                if v == 0:
                    raise DegenerateParameters("degree-0 denominator factor vanishes", where=coef)
                consts_den.append(v)
            continue
        S = S * _geometric_factor(coords, D, coef, exps, power)
    c = product(consts_num) if consts_num else Fraction(1)
    if consts_den:
        c = c / product(consts_den)
    return S.scale(c)


def _bigraded_table(pref: TruncSeries, pieces: dict, Dy: int, Ds: int) -> dict:
    table = {}
    for d, ps in pieces.items():
        for dp, cp in pref.coeffs.items():
            key = tuple(a + b for a, b in zip(d, dp))
            if sum(key) > Dy:
                continue
            for e, ce in ps.coeffs.items():
                k = (key, e)
                table[k] = table.get(k, 0) + cp * ce
    return {k: v for k, v in table.items() if v != 0}


def phi_macdonald_dual(N: int, q, t, Dz: int, Ds: int) -> dict:
    """Joint expansion of the Macdonald phi in z_i and zeta_l = s_{l+1}/s_l.

    Returns ``{(d, e): coefficient}`` for |d| <= Dz, |e| <= Ds.
    """
    coords = Finite(N)
    pieces = {}
    for theta, d in strict_upper(N, Dz):
        factors = []
        for power, coef, i, j, n in cN_factors(theta, N, q, t):
            exps = finite_arc(N, i, j).exps if j > i else (0,) * (N - 1)
            qp = PowerCache(q)
            for r in range(n):
                factors.append((power, coef * qp(r), exps))
        S = _expand_product(coords, Ds, factors)
        pieces[d] = pieces[d] + S if d in pieces else S
    pref = macdonald_prefactor(N, q, t, Dz)
    return _bigraded_table(pref, pieces, Dz, Ds)


def phi_dual_expand(N: int, q, t, Dy: int, Ds: int) -> dict:
    """Joint expansion of phi in y_i and sigma_i = kappa s_{i+1}/s_i.

    Each ``kappa^b s_j/s_i`` in a Nekrasov factor is a sigma-monomial of
    degree b.  Factors with b < 0 are rewritten as
    ``t (1 - c^{-1}/t) / (1 - c^{-1})`` before expanding.
    """
    coords = Cyclic(N)
    qp = PowerCache(q)
    tp = PowerCache(t)
    pieces = {}
    for n in range(Dy + 1):
        for d, tuples in tuples_by_degree(N, n).items():
            acc = None
            for T in tuples:
                factors = []
                const = tp(-n)
                for i, j, fl in _blocks(T):
                    for a, b in fl:
                        exps = _sigma_monomial(N, i, j, abs(b), b >= 0)
                        if b >= 0:
                            factors.append((1, t * qp(a), exps))
                            factors.append((-1, qp(a), exps))
                        else:
                            const = const * t
                            factors.append((1, div(qp(-a), t), exps))
                            factors.append((-1, qp(-a), exps))
                S = _expand_product(coords, Ds, factors, const)
                acc = S if acc is None else acc + S
            pieces[d] = acc
    pref = phi_prefactor(N, q, t, Dy)
    return _bigraded_table(pref, pieces, Dy, Ds)


def _sigma_monomial(N: int, i: int, j: int, deg: int, forward: bool) -> tuple:
    """Exponents of ``kappa^deg s_j/s_i`` (forward) or ``kappa^deg s_i/s_j``."""
    if not forward:
        i, j = j, i
    e = list(arc(N, i, j).exps) if (j - i) % N else [0] * N
    r = sum(e)
    if (deg - r) % N or deg < r:
        raise SeriesError(f"kappa^{deg} s_{j}/s_{i} is not a sigma monomial")
    return tuple(x + (deg - r) // N for x in e)


# ---------------------------------------------------------------------------
# Toda limit


def f_toda(point: ParamPoint, D: int) -> TruncSeries:
    """Closed form of the t -> 0 limit (coordinates y_i = p~ x_{i+1}/x_i).

    Coefficient at d: ``sum_T prod_i s_i^{-m_i} r^{-m_i^2} kappa^{-|T|} /
    prod_{i,j} N(s_j/s_i | q, kappa)`` with ``q = r^2``.
    """
    r = point.r
    if r is None or r * r != point.q:
        raise ValueError("f_toda needs r with q = r^2")
    factors = _RatioFactors(point, 0)
    inner = _ratio_term(factors, with_numerator=False)
    rp = PowerCache(r)
    kp = PowerCache(point.kappa)
    sp = [PowerCache(x) for x in point.s]

    def term(T, d):
        m = m_from_degree(d)
        w = product([sp[i](-m[i]) for i in range(len(m))] + [rp(-sum(x * x for x in m)), kp(-sum(d))])
        return w * inner(T, d)

    return _tuple_sum(point.N, D, term)


def alpha_toda(point: ParamPoint, D: int) -> TruncSeries:
    """x-constant term of :func:`f_toda` (the m = 0 tuples)."""
    return uniform_part(f_toda(point, D))


def f_toda_stationary(point: ParamPoint, D: int, at=1) -> StationaryResult:
    """``f_toda / alpha_toda`` at kappa = ``at``; kappa must be symbolic (tau)."""
    if not isinstance(point.kappa, RatFunc) or point.kappa != TAU:
        raise ValueError("f_toda_stationary needs kappa = TAU")
    return _stationary(f_toda(point, D), point.N, D, at)


def f_toda_from_limit(point: ParamPoint, D: int) -> TruncSeries:
    """``lim_{t->0} f(x, t p~ | s, kappa | q, q/t)`` with t symbolic."""
    sym = point.replace(t=point.q / TAU)
    f = f_hat(sym, D)
    return f.map_keys(lambda d: TAU ** sum(d)).map_coeffs(lambda c: evaluate(c, 0))


def f_t_to_zero(point: ParamPoint, D: int) -> TruncSeries:
    """``lim_{t->0} f(x, t p~ | s, kappa | q, t)``: coefficients ``1/prod N(s_j/s_i)``."""
    factors = _RatioFactors(point, 0)
    return _tuple_sum(point.N, D, _ratio_term(factors, with_numerator=False))


def toda_poincare_lhs(point: ParamPoint, D: int) -> TruncSeries:
    """``prod_i 1/(p~ q x_{i+1}/x_i; q)`` times :func:`f_t_to_zero`."""
    N = point.N
    coords = Cyclic(N)
    S = f_t_to_zero(point, D)
    for i in range(N):
        e = tuple(1 if k == i else 0 for k in range(N))
        S = S * infinite_poch_expand(Monomial(point.q, e), point.q, "inverse", coords, D)
    return S


# ---------------------------------------------------------------------------
# elliptic Calogero-Sutherland limit


def f_ecs(N: int, lam, k, beta, D: int) -> TruncSeries:
    """``sum_T prod N_add(1 - beta + lam_j - lam_i | k) / N_add(lam_j - lam_i | k)``."""
    lam = tuple(lam)
    cache = {}

    def factor(i, j, a, b):
        key = (i, j, a, b)
        v = cache.get(key)
        if v is None:
            v0 = lam[j - 1] - lam[i - 1] + a + b * k
            v = (v0 + 1 - beta, v0)
            cache[key] = v
        return v

    def term(T, d):
        nums, dens = [], []
        for i, j, fl in _blocks(T):
            for a, b in fl:
                num, den = factor(i, j, a, b)
                if den == 0:
                    raise DegenerateParameters(
                        f"additive denominator vanishes (i={i}, j={j}, {a} + {b}k) for tuple {T}",
                        where={"d": list(d), "tuple": [list(c) for c in T]})
                nums.append(num)
                dens.append(den)
        if not dens:
            return Fraction(1)
        return product(nums) / product(dens)

    return _tuple_sum(N, D, term)


def psi0(N: int, beta, D: int) -> TruncSeries:
    """``((P;P)^{N - N(N-1)/2} prod_{i<j} Theta_P(arc_ij))^beta``."""
    coords = Cyclic(N)
    S = p_poch_expand(coords, D) ** (N - N * (N - 1) // 2)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            S = S * theta_expand(arc(N, i, j), coords, D)
    return series_pow_rational(S, Q(beta))


# ---------------------------------------------------------------------------
# evaluation formula


def evaluation_partial_sums(point: ParamPoint, Dmax: int) -> list:
    """Partial sums over |d| <= D of f(1,...,1, 1/t | s, kappa | q, q/t).

    ``point.t`` is the t of the formula; the series is built with last
    argument q/t and evaluated at every y_i = 1/t.
    """
    t = point.t
    f = f_hat(point.replace(t=div(point.q, t)), Dmax)
    sums, acc = [], Fraction(0)
    totals = {}
    for d, c in f.items():
        totals[sum(d)] = totals.get(sum(d), 0) + c
    for n in range(Dmax + 1):
        acc = acc + totals.get(n, 0) * div(1, t) ** n
        sums.append(acc)
    return sums


def evaluation_rhs(point: ParamPoint, dps: int = 50):
    """Numerical value of the conjectured closed product (mpmath)."""
    import mpmath

    with mpmath.workdps(dps):
        N = point.N
        q = mpmath.mpf(Q(point.q).numerator) / Q(point.q).denominator
        t = mpmath.mpf(Q(point.t).numerator) / Q(point.t).denominator
        k = mpmath.mpf(Q(point.kappa).numerator) / Q(point.kappa).denominator
        s = [mpmath.mpf(Q(x).numerator) / Q(x).denominator for x in point.s]
        kN = k ** N

        def poch(u, base):
            return mpmath.qp(u, base)

        def dpoch(u, b1, b2):
            out = mpmath.mpf(1)
            j = 0
            while True:
                term = poch(u * b2 ** j, b1)
                out *= term
                if abs(u * b2 ** j) < mpmath.mpf(10) ** (-dps):
                    break
                j += 1
            return out

        val = 1 / poch(kN, kN) * poch(q / t, q) ** N
        val *= (dpoch(kN * q / t, q, kN) / dpoch(kN * q, q, kN)) ** N
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                r = s[j - 1] / s[i - 1]
                val *= dpoch(k ** (j - i) * q * r / t, q, kN) / dpoch(k ** (j - i) * q * r, q, kN)
                val *= dpoch(k ** (N - j + i) * q / (r * t), q, kN) / dpoch(k ** (N - j + i) * q / r, q, kN)
        return val
