"""Truncated power series in cyclic ratio coordinates.

Cyclic(N) coordinates are ``y_i = p x_{i+1}/x_i`` (indices mod N), so
``y_1 ... y_N = p^N =: P``.  A monomial ``y^d`` carries ``p^{|d|}`` and the
x-exponents ``m_i = d_{i-1} - d_i``.  Finite(N) coordinates are
``z_i = x_{i+1}/x_i`` for ``i = 1..N-1`` with no p at all.

Series are dense maps ``degree vector -> scalar`` with a total-degree cap.
Products of binomials are expanded exactly; the infinite q-products use
Euler's sums.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import CoordinateMismatch, SeriesError
from .scalar import PowerCache, div, to_json_pair


@dataclass(frozen=True)
class CoordSystem:
    kind: str  # "cyclic" or "finite"
    N: int

    def __post_init__(self):
        if self.kind not in ("cyclic", "finite"):
            raise ValueError(f"unknown coordinate kind {self.kind!r}")
        if self.N < 2:
            raise ValueError("N must be at least 2")

    @property
    def arity(self) -> int:
        return self.N if self.kind == "cyclic" else self.N - 1

    def x_exponents(self, d) -> tuple:
        """x-exponents of the monomial with exponent vector d."""
        if self.kind == "cyclic":
            return tuple(d[i - 1] - d[i] for i in range(self.N))
        full = (0,) + tuple(d) + (0,)
        return tuple(full[i] - full[i + 1] for i in range(self.N))

    def to_json(self):
        return {"kind": self.kind, "N": self.N}


def Cyclic(N: int) -> CoordSystem:
    return CoordSystem("cyclic", N)


def Finite(N: int) -> CoordSystem:
    return CoordSystem("finite", N)


def _check_trunc(D: int):
    if D < 0:
        raise SeriesError("truncation order must be nonnegative")


@dataclass(frozen=True)
class Monomial:
    """``coef * y^exps``."""

    coef: object
    exps: tuple

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.coef * other.coef, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def power(self, n: int) -> "Monomial":
        return Monomial(self.coef ** n, tuple(n * a for a in self.exps))

    def scaled(self, c) -> "Monomial":
        return Monomial(self.coef * c, self.exps)


def arc(N: int, i: int, j: int, coef=Fraction(1)) -> Monomial:
    """``p^{(j-i) mod N} x_j/x_i`` as ``y_i y_{i+1} ... y_{j-1}`` (cyclic, 1-based)."""
    if (i - j) % N == 0:
        raise ValueError("arc endpoints must differ mod N")
    e = [0] * N
    k = i
    while (k - j) % N:
        e[(k - 1) % N] += 1
        k += 1
    return Monomial(coef, tuple(e))


def full_period(N: int, coef=Fraction(1)) -> Monomial:
    """The monomial ``P = p^N``."""
    return Monomial(coef, (1,) * N)


class TruncSeries:
    """Immutable truncated series with scalar coefficients."""

    __slots__ = ("coords", "trunc", "coeffs")

    def __init__(self, coords: CoordSystem, trunc: int, coeffs=None):
        _check_trunc(trunc)
        self.coords = coords
        self.trunc = trunc
        clean = {}
        if coeffs:
            n = coords.arity
            for d, c in coeffs.items():
                d = tuple(d)
                if len(d) != n or min(d, default=0) < 0:
                    raise SeriesError(f"bad exponent {d} for {coords}")
                if sum(d) <= trunc and c != 0:
                    clean[d] = c
        self.coeffs = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def one(cls, coords, trunc):
        return cls(coords, trunc, {(0,) * coords.arity: Fraction(1)})

    @classmethod
    def zero(cls, coords, trunc):
        return cls(coords, trunc)

    @classmethod
    def constant(cls, coords, trunc, c):
        return cls(coords, trunc, {(0,) * coords.arity: c})

    @classmethod
    def from_monomial(cls, coords, trunc, m: Monomial):
        return cls(coords, trunc, {m.exps: m.coef})

    # -- access ---------------------------------------------------------

    def __getitem__(self, d):
        return self.coeffs.get(tuple(d), Fraction(0))

    def keys_sorted(self):
        return sorted(self.coeffs, key=lambda d: (sum(d), d))

    def items(self):
        for d in self.keys_sorted():
            yield d, self.coeffs[d]

    @property
    def constant_term(self):
        return self[(0,) * self.coords.arity]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        terms = ", ".join(f"{list(d)}: {c}" for d, c in list(self.items())[:8])
        more = " ..." if len(self.coeffs) > 8 else ""
        return f"TruncSeries({self.coords.kind}{self.coords.N}, D={self.trunc}, {{{terms}{more}}})"

    # -- ring operations ------------------------------------------------

    def _other(self, other):
        if isinstance(other, TruncSeries):
            if other.coords != self.coords:
                raise CoordinateMismatch(f"{self.coords} vs {other.coords}")
            return other
        return TruncSeries.constant(self.coords, self.trunc, other)

    def __add__(self, other):
        o = self._other(other)
        D = min(self.trunc, o.trunc)
        out = dict(self.coeffs)
        for d, c in o.coeffs.items():
            out[d] = out.get(d, 0) + c
        return TruncSeries(self.coords, D, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.coords, self.trunc, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def scale(self, c):
        if c == 0:
            return TruncSeries(self.coords, self.trunc)
        return TruncSeries(self.coords, self.trunc, {d: c * v for d, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        o = self._other(other)
        D = min(self.trunc, o.trunc)
        a = [(d, sum(d), c) for d, c in self.coeffs.items() if sum(d) <= D]
        b = [(d, sum(d), c) for d, c in o.coeffs.items() if sum(d) <= D]
        out = {}
        for da, na, ca in a:
            for db, nb, cb in b:
                if na + nb > D:
                    continue
                key = tuple(x + y for x, y in zip(da, db))
                out[key] = out.get(key, 0) + ca * cb
        return TruncSeries(self.coords, D, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return series_invert(self) ** (-n)
        result = TruncSeries.one(self.coords, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * series_invert(other)
        return self.scale(div(1, other))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(self.coords, self.trunc, other)
        if other.coords != self.coords:
            return False
        D = min(self.trunc, other.trunc)
        a = {d: c for d, c in self.coeffs.items() if sum(d) <= D}
        b = {d: c for d, c in other.coeffs.items() if sum(d) <= D}
        return a == b

    __hash__ = None

    # -- structural helpers ---------------------------------------------

    def truncate(self, D: int) -> "TruncSeries":
        return TruncSeries(self.coords, min(D, self.trunc), self.coeffs)

    def map_coeffs(self, f) -> "TruncSeries":
        return TruncSeries(self.coords, self.trunc, {d: f(c) for d, c in self.coeffs.items()})

    def map_keys(self, f) -> "TruncSeries":
        """Coefficient at d is multiplied by ``f(d)``."""
        out = {}
        for d, c in self.coeffs.items():
            w = f(d)
            if w != 0:
                out[d] = c * w
        return TruncSeries(self.coords, self.trunc, out)

    def p_derivative(self) -> "TruncSeries":
        """``p d/dp``: multiply the coefficient at d by |d| (cyclic coordinates)."""
        if self.coords.kind != "cyclic":
            raise CoordinateMismatch("p-derivative needs cyclic coordinates")
        return self.map_keys(sum)

    def mul_binomial(self, m: Monomial) -> "TruncSeries":
        """Multiply by ``1 - m``."""
        out = dict(self.coeffs)
        deg = m.degree
        for d, c in self.coeffs.items():
            if sum(d) + deg > self.trunc:
                continue
            key = tuple(x + y for x, y in zip(d, m.exps))
            out[key] = out.get(key, 0) - m.coef * c
        return TruncSeries(self.coords, self.trunc, out)

    def difference(self, other) -> dict:
        """Nonzero coefficients of ``self - other`` (for witnesses)."""
        diff = self - other
        return dict(diff.items())

    def is_uniform(self) -> bool:
        return all(all(x == d[0] for x in d) for d in self.coeffs)

    def restrict(self, pred) -> "TruncSeries":
        return TruncSeries(self.coords, self.trunc, {d: c for d, c in self.coeffs.items() if pred(d)})

    def rotate(self, shift: int = 1) -> "TruncSeries":
        """Rotate keys cyclically: new key index i holds old index i - shift."""
        n = self.coords.arity
        return TruncSeries(self.coords, self.trunc,
                           {tuple(d[(i - shift) % n] for i in range(n)): c for d, c in self.coeffs.items()})

    def to_json(self) -> dict:
        terms = []
        for d, c in self.items():
            num, den = to_json_pair(c)
            terms.append({"d": list(d), "num": num, "den": den})
        return {"coords": self.coords.to_json(), "trunc": self.trunc, "terms": terms}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def series_invert(A: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be nonzero."""
    a0 = A.constant_term
    if a0 == 0:
        raise SeriesError("cannot invert a series with zero constant term")
    inv0 = div(1, a0)
    zero = (0,) * A.coords.arity
    rest = [(d, c) for d, c in A.coeffs.items() if d != zero]
    out = {zero: inv0}
    D = A.trunc
    for n in range(1, D + 1):
        for d in _vectors_of_total(A.coords.arity, n):
            acc = 0
            for k, c in rest:
                e = tuple(x - y for x, y in zip(d, k))
                if min(e) < 0:
                    continue
                b = out.get(e)
                if b is not None:
                    acc = acc + c * b
            if acc != 0:
                out[d] = -inv0 * acc
    return TruncSeries(A.coords, D, out)


def _vectors_of_total(n: int, total: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _vectors_of_total(n - 1, total - first):
            yield (first,) + rest


def _binom(beta, k: int):
    out = Fraction(1)
    for i in range(k):
        out = out * (beta - i) / (i + 1)
    return out


def series_pow_rational(A: TruncSeries, beta) -> TruncSeries:
    """``A^beta`` via the binomial series; needs constant term 1."""
    if A.constant_term != 1:
        raise SeriesError("rational powers need constant term 1")
    U = A - 1
    result = TruncSeries.one(A.coords, A.trunc)
    term = TruncSeries.one(A.coords, A.trunc)
    for k in range(1, A.trunc + 1):
        term = term * U
        if not term.coeffs:
            break
        result = result + term.scale(_binom(beta, k))
    return result


# ---------------------------------------------------------------------------
# infinite products


def _q_factorials(q, n: int):
    out = [Fraction(1)]
    qp = PowerCache(q)
    for k in range(1, n + 1):
        v = out[-1] * (1 - qp(k))
        if v == 0:
            raise SeriesError(f"(q;q)_{k} vanishes at q={q}")
        out.append(v)
    return out


def infinite_poch_expand(w: Monomial, q, sign: str, coords: CoordSystem, D: int) -> TruncSeries:
    """``(w;q)_inf`` (sign="direct") or its inverse, truncated at degree D."""
    if w.degree < 1:
        raise SeriesError("infinite product argument must have degree >= 1")
    if sign not in ("direct", "inverse"):
        raise ValueError("sign must be 'direct' or 'inverse'")
    nmax = D // w.degree
    facts = _q_factorials(q, nmax)
    qp = PowerCache(q)
    out = {}
    for n in range(nmax + 1):
        c = w.coef ** n / facts[n]
        if sign == "direct":
            c = c * qp(n * (n - 1) // 2) * (-1) ** n
        key = tuple(n * e for e in w.exps)
        out[key] = out.get(key, 0) + c
    return TruncSeries(coords, D, out)


def poch_partial_product(w: Monomial, q, coords: CoordSystem, D: int) -> TruncSeries:
    """Literal product of ``1 - q^i w`` for i = 0..D (reference oracle)."""
    S = TruncSeries.one(coords, D)
    qp = PowerCache(q)
    for i in range(D + 1):
        S = S.mul_binomial(w.scaled(qp(i)))
    return S


def double_poch_expand(u: Monomial, q, sign: str, coords: CoordSystem, D: int) -> TruncSeries:
    """``(u;q,P)_inf`` as the product over b of ``(u P^b; q)_inf``."""
    if coords.kind != "cyclic":
        raise CoordinateMismatch("double products need cyclic coordinates")
    if u.degree < 1:
        raise SeriesError("double product argument must have degree >= 1")
    S = TruncSeries.one(coords, D)
    P = full_period(coords.N)
    b = 0
    m = u
    while m.degree <= D:
        S = S * infinite_poch_expand(m, q, sign, coords, D)
        m = m * P
        b += 1
    return S


def _theta_check(w: Monomial, coords: CoordSystem):
    if coords.kind != "cyclic":
        raise CoordinateMismatch("theta functions need cyclic coordinates")
    if any(e not in (0, 1) for e in w.exps) or w.degree < 1 or w.degree > coords.N - 1:
        raise SeriesError(
            f"theta argument {w.exps} needs deg(w) >= 1 and deg(P/w) >= 1 with nonnegative exponents")


def p_poch_expand(coords: CoordSystem, D: int) -> TruncSeries:
    """``(P;P)_inf``."""
    S = TruncSeries.one(coords, D)
    m = full_period(coords.N)
    while m.degree <= D:
        S = S.mul_binomial(m)
        m = m * full_period(coords.N)
    return S


def theta_expand(w: Monomial, coords: CoordSystem, D: int) -> TruncSeries:
    """``Theta_P(w) = (w;P)(P/w;P)(P;P)``."""
    _theta_check(w, coords)
    N = coords.N
    P = full_period(N)
    comp = Monomial(div(1, w.coef), tuple(1 - e for e in w.exps))
    S = p_poch_expand(coords, D)
    for start in (w, comp):
        m = start
        while m.degree <= D:
            S = S.mul_binomial(m)
            m = m * P
    return S


def theta_triple_product(w: Monomial, coords: CoordSystem, D: int) -> TruncSeries:
    """``sum_n (-1)^n P^{n(n-1)/2} w^n`` (independent oracle for theta_expand)."""
    _theta_check(w, coords)
    out = {}
    a = w.degree
    N = coords.N
    comp_exps = tuple(1 - e for e in w.exps)
    n = 0
    while True:
        # n >= 0 term: w^n P^{n(n-1)/2}
        deg = a * n + N * n * (n - 1) // 2
        if deg > D and n > 0:
            break
        if deg <= D:
            key = tuple(n * e + n * (n - 1) // 2 for e in w.exps)
            out[key] = out.get(key, 0) + (-1) ** n * w.coef ** n
        n += 1
    m = 1
    while True:
        # n = -m term: (P/w)^m P^{m(m-1)/2}
        deg = (N - a) * m + N * m * (m - 1) // 2
        if deg > D:
            break
        key = tuple(m * c + m * (m - 1) // 2 for c in comp_exps)
        out[key] = out.get(key, 0) + (-1) ** m * w.coef ** (-m)
        m += 1
    return TruncSeries(coords, D, out)


def z_grading(w: Monomial):
    """Map a key of Theta_P(w)'s expansion to the power of z it came from."""
    j = w.exps.index(1)
    i = w.exps.index(0)
    return lambda d: d[j] - d[i]


def theta_derivative(w: Monomial, order: int, coords: CoordSystem, D: int) -> TruncSeries:
    """``((z d/dz)^order Theta_P)(w)``."""
    T = theta_expand(w, coords, D)
    g = z_grading(w)
    return T.map_keys(lambda d: g(d) ** order)


def theta_logderiv(w: Monomial, order: int, coords: CoordSystem, D: int) -> TruncSeries:
    """``Theta^{(order)}_P(w) / Theta_P(w)`` for order 1 or 2."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    T = theta_expand(w, coords, D)
    g = z_grading(w)
    return T.map_keys(lambda d: g(d) ** order) * series_invert(T)


def theta_logderiv_direct(w: Monomial, coords: CoordSystem, D: int) -> TruncSeries:
    """First log-derivative from the sum over the product's factors (oracle).

    ``-sum_{n>=0} P^n w/(1-P^n w) + sum_{n>=1} (P^n/w)/(1-P^n/w)``.
    """
    _theta_check(w, coords)
    P = full_period(coords.N)
    comp = Monomial(div(1, w.coef), tuple(1 - e for e in w.exps))
    out = TruncSeries.zero(coords, D)
    for start, sgn in ((w, -1), (comp, 1)):
        m = start
        while m.degree <= D:
            k = 1
            while k * m.degree <= D:
                p = m.power(k)
                out = out + TruncSeries.from_monomial(coords, D, p.scaled(sgn))
                k += 1
            m = m * P
    return out


def ratio_theta(num: Monomial, den: Monomial, coords: CoordSystem, D: int) -> TruncSeries:
    return theta_expand(num, coords, D) * series_invert(theta_expand(den, coords, D))


def v_potential(w: Monomial, coords: CoordSystem, D: int) -> TruncSeries:
    """``Theta2/Theta - (Theta1/Theta)^2`` at w."""
    T = theta_expand(w, coords, D)
    inv = series_invert(T)
    g = z_grading(w)
    r1 = T.map_keys(g) * inv
    r2 = T.map_keys(lambda d: g(d) ** 2) * inv
    return r2 - r1 * r1


def v0_series(coords: CoordSystem, D: int) -> TruncSeries:
    """``V_0(P) = 2 (P d/dP (P;P)) / (P;P)``, supported on uniform keys."""
    N = coords.N
    E = p_poch_expand(coords, D)
    return E.map_keys(lambda d: Fraction(2 * sum(d), N)) * series_invert(E)


def v0_coefficients(n: int) -> list:
    """Coefficients of ``V_0(p)`` at ``p^1 .. p^n``."""
    coords = Cyclic(2)
    S = v0_series(coords, 2 * n)
    return [S[(k, k)] for k in range(1, n + 1)]


def theta1_at_one(coords: CoordSystem, D: int) -> TruncSeries:
    """``(z d/dz Theta_P)(1) = sum_n n (-1)^n P^{n(n-1)/2}``."""
    N = coords.N
    out = {}
    n = 0
    while True:
        e = n * (n - 1) // 2
        if N * e > D:
            break
        # n and 1 - n share the exponent n(n-1)/2
        for m in (n, 1 - n):
            key = (e,) * N
            out[key] = out.get(key, 0) + (-m if m % 2 else m)
        n -= 1
    return TruncSeries(coords, D, out)


# ---------------------------------------------------------------------------
# univariate series in p over Q(z)
#
# Used for identities in a single theta variable z, where z stays symbolic
# (a RatFunc) and only p is expanded.  This sidesteps the degree limits of
# monomial substitution in cyclic coordinates.


class PSeries:
    """Truncated series ``sum_{k<=D} c_k p^k`` with scalar coefficients."""

    __slots__ = ("D", "coeffs")

    def __init__(self, D: int, coeffs=None):
        _check_trunc(D)
        self.D = D
        c = list(coeffs or [])[: D + 1]
        self.coeffs = c + [Fraction(0)] * (D + 1 - len(c))

    def __getitem__(self, k):
        return self.coeffs[k]

    def _same(self, other):
        if not isinstance(other, PSeries):
            other = PSeries(self.D, [other])
        if other.D != self.D:
            raise SeriesError(f"truncation orders differ: {self.D} vs {other.D}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return PSeries(self.D, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return PSeries(self.D, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        if not isinstance(other, PSeries):
            return PSeries(self.D, [a * other for a in self.coeffs])
        other = self._same(other)
        out = [Fraction(0)] * (self.D + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.D + 1 - i):
                    if other.coeffs[j]:
                        out[i + j] = out[i + j] + a * other.coeffs[j]
        return PSeries(self.D, out)

    __rmul__ = __mul__

    def inverse(self) -> "PSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise SeriesError("constant term is zero; series not invertible")
        inv0 = div(1, c0)
        out = [inv0]
        for n in range(1, self.D + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return PSeries(self.D, out)

    def __truediv__(self, other):
        if isinstance(other, PSeries):
            return self * other.inverse()
        return PSeries(self.D, [div(a, other) for a in self.coeffs])

    def p_derivative(self) -> "PSeries":
        """``p d/dp``."""
        return PSeries(self.D, [k * a for k, a in enumerate(self.coeffs)])

    def map_coeffs(self, f) -> "PSeries":
        return PSeries(self.D, [f(a) for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        return self.D == other.D and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"PSeries(D={self.D}, {self.coeffs!r})"


def theta_laurent(D: int, z, order: int = 0, shift: int = 0, base: int = 1, invert: bool = False) -> PSeries:
    """``Theta^{(order)}_{p^base}`` evaluated at ``p^shift z^{+-1}``.

    ``Theta_p(z) = sum_n (-1)^n p^{n(n-1)/2} z^n`` and ``Theta^{(k)}`` is
    ``(z d/dz)^k Theta``, taken before the argument is substituted.
    ``invert`` selects the argument ``p^shift / z``.
    """
    out = [Fraction(0)] * (D + 1)
    zp = PowerCache(z)
    sgn = -1 if invert else 1
    # the exponent base*n(n-1)/2 + shift*n grows quadratically; scan until
    # both tails are past D
    n = 0
    while True:
        hit = False
        for m in ((n, -n - 1) if n >= 0 else ()):
            e = base * m * (m - 1) // 2 + shift * m
            if 0 <= e <= D:
                hit = True
                c = m ** order * zp(sgn * m)
                out[e] = out[e] + (-c if m % 2 else c)
            elif e < 0:
                raise SeriesError("argument outside the annulus of the expansion")
        if not hit and base * n * (n - 1) // 2 - abs(shift) * (n + 1) > D:
            break
        n += 1
    return PSeries(D, out)


def poch_pseries(D: int, power: int = 1) -> PSeries:
    """``(p;p)_infinity^power`` to order D."""
    E = PSeries(D, [Fraction(1)])
    for n in range(1, D + 1):
        f = [Fraction(0)] * (D + 1)
        f[0] = Fraction(1)
        f[n] = Fraction(-1)
        E = E * PSeries(D, f)
    out = PSeries(D, [Fraction(1)])
    base = E if power >= 0 else E.inverse()
    for _ in range(abs(power)):
        out = out * base
    return out


def v_potential_pseries(D: int, z, shift: int = 0) -> PSeries:
    """``V(p^shift z | p)`` as a series in p with z kept as a scalar."""
    T = theta_laurent(D, z, 0, shift)
    inv = T.inverse()
    r1 = theta_laurent(D, z, 1, shift) * inv
    r2 = theta_laurent(D, z, 2, shift) * inv
    return r2 - r1 * r1
