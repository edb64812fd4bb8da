"""Exact coefficient fields.

Two kinds of scalar are used throughout the package:

* ``fractions.Fraction`` for rational numbers, and
* :class:`RatFunc`, a reduced rational function in a single generator
  ``tau`` with rational coefficients.

At most one parameter is ever symbolic at a time, so a univariate field is
enough.  Mixed arithmetic (``Fraction`` op ``RatFunc``) returns a
``RatFunc``.  Polynomial arithmetic is delegated to FLINT's ``fmpq_poly``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from numbers import Rational as _RationalABC

import flint

from .errors import DegreeOverflowError, PoleError, ScalarDivisionError

DEFAULT_MAX_DEGREE = 512


def max_degree() -> int:
    """Current polynomial degree cap (``NSR_RATFUNC_DEGREE`` overrides)."""
    value = os.environ.get("NSR_RATFUNC_DEGREE")
    return int(value) if value else DEFAULT_MAX_DEGREE


def Q(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def _fmpq(x) -> flint.fmpq:
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, flint.fmpq):
        return x
    x = Q(x)
    return flint.fmpq(x.numerator, x.denominator)


def _frac(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


_ONE = flint.fmpq_poly([1])
_ZERO = flint.fmpq_poly([])


class RatFunc:
    """Reduced quotient ``num/den`` of polynomials in ``tau``.

    The denominator is monic and coprime to the numerator, so two equal
    rational functions always have identical fields.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly([_fmpq(c) for c in num])
        if den is None:
            den = _ONE
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly([_fmpq(c) for c in den])
        if not _reduced:
            if den == 0:
                raise ScalarDivisionError("rational function with zero denominator")
            if num == 0:
                den = _ONE
            else:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
                lead = den[den.degree()]
                if lead != 1:
                    num = num / lead
                    den = den / lead
        cap = max_degree()
        if num.degree() > cap or den.degree() > cap:
            raise DegreeOverflowError(
                f"degree {max(num.degree(), den.degree())} exceeds cap {cap}")
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def gen(cls) -> "RatFunc":
        """The generator ``tau``."""
        return cls(flint.fmpq_poly([0, 1]), _ONE, _reduced=True)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(flint.fmpq_poly([_fmpq(c)]), _ONE, _reduced=True)

    # -- inspection -----------------------------------------------------

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return _frac(self.num[0])

    def numerator_coeffs(self) -> list[Fraction]:
        return [_frac(c) for c in self.num.coeffs()]

    def denominator_coeffs(self) -> list[Fraction]:
        return [_frac(c) for c in self.den.coeffs()]

    def pole_order(self, a) -> int:
        """Multiplicity of ``tau = a`` as a root of the reduced denominator."""
        lin = flint.fmpq_poly([-_fmpq(a), 1])
        den, k = self.den, 0
        while den.degree() > 0:
            quo, rem = divmod(den, lin)
            if rem != 0:
                break
            den, k = quo, k + 1
        return k

    def __call__(self, a) -> Fraction:
        a = _fmpq(a)
        d = self.den(a)
        if d == 0:
            raise PoleError(_frac(a))
        return _frac(self.num(a) / d)

    evaluate = __call__

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, flint.fmpq)):
            return RatFunc(flint.fmpq_poly([_fmpq(x)]), _ONE, _reduced=True)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            c = o.num[0] if o.num.degree() == 0 else flint.fmpq(0)
            if c == 0:
                return RatFunc(_ZERO, _ONE, _reduced=True)
            return RatFunc(self.num * c, self.den, _reduced=True)
        # cross cancellation keeps intermediate degrees small
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        lead = d[d.degree()]
        if lead != 1:
            n, d = n / lead, d / lead
        return RatFunc(n, d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.num == 0:
            raise ScalarDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((tuple(self.numerator_coeffs()),
                                   tuple(self.denominator_coeffs())))
        return self._hash

    def __bool__(self):
        return self.num != 0

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        num = str(self.num).replace("x", "tau")
        if self.den == 1:
            return num
        return f"({num})/({str(self.den).replace('x', 'tau')})"


Scalar = "Fraction | RatFunc"

TAU = RatFunc.gen()


def is_symbolic(x) -> bool:
    return isinstance(x, RatFunc)


def evaluate(x, a):
    """Evaluate a scalar at ``tau = a`` (rationals pass through)."""
    if isinstance(x, RatFunc):
        return x(a)
    return x


def simplify(x):
    """Demote constant rational functions to Fractions."""
    if isinstance(x, RatFunc) and x.is_constant():
        return x.to_fraction()
    return x


def div(a, b):
    """Exact division that raises :class:`ScalarDivisionError` on zero."""
    if b == 0:
        raise ScalarDivisionError(f"division of {a} by zero")
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def power(x, n: int):
    """``x**n`` for integer n, with exact rationals for int bases."""
    if isinstance(x, int):
        x = Fraction(x)
    if n < 0 and x == 0:
        raise ScalarDivisionError("negative power of zero")
    return x ** n


def poch_q(u, q, n: int):
    """Finite q-shifted factorial ``(u;q)_n``."""
    if n < 0:
        raise ValueError("poch_q needs n >= 0")
    result = Fraction(1)
    qr = Fraction(1)
    for _ in range(n):
        result = result * (1 - qr * u)
        qr = qr * q
    return result


def rising(a, n: int):
    """Rising factorial ``(a)_n = a(a+1)...(a+n-1)``."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    result = Fraction(1)
    for i in range(n):
        result = result * (a + i)
    return result


def to_json_pair(x) -> tuple[str, str]:
    """Canonical ``(num, den)`` strings; rational functions use tau notation."""
    if isinstance(x, RatFunc):
        if x.is_constant():
            x = x.to_fraction()
        else:
            return (str(x.num).replace("x", "tau"), str(x.den).replace("x", "tau"))
    x = Q(x)
    return (str(x.numerator), str(x.denominator))


class PowerCache:
    """Memoised integer powers of a fixed scalar."""

    def __init__(self, base):
        self.base = base
        self._cache = {0: Fraction(1), 1: base}

    def __call__(self, n: int):
        v = self._cache.get(n)
        if v is None:
            if n < 0:
                v = div(1, self(-n))
            else:
                half = self(n // 2)
                v = half * half
                if n % 2:
                    v = v * self.base
            self._cache[n] = v
        return v


def product(values):
    """Product of many scalars with a single reduction at the end.

    Rationals are multiplied as bare integers and RatFuncs as bare
    polynomials, so the cost of gcd computations is paid once.
    """
    n, d = 1, 1
    pn, pd = None, None
    for v in values:
        if isinstance(v, RatFunc):
            if pn is None:
                pn, pd = v.num, v.den
            else:
                pn, pd = pn * v.num, pd * v.den
        elif isinstance(v, int):
            n *= v
        else:
            v = Q(v)
            n *= v.numerator
            d *= v.denominator
        if n == 0:
            return Fraction(0)
    rational = Fraction(n, d)
    if pn is None:
        return rational
    if pd == 0:
        raise ScalarDivisionError("zero denominator in product")
    g = pn.gcd(pd)
    if g.degree() > 0:
        pn, pd = pn // g, pd // g
    lead = pd[pd.degree()]
    pn = pn * _fmpq(rational) / lead
    pd = pd / lead
    return RatFunc(pn, pd, _reduced=True)
