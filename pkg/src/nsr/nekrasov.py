"""Cyclic Nekrasov factors and the tangent characters built from them.

Every multiplicative block is a product of binomials ``1 - u q^a kappa^b``.
We compute the list of exponent pairs ``(a, b)`` once per
``(k, lam, mu, N)`` and evaluate it at whatever scalars are supplied.  The
additive block uses the same list, with ``1 - u q^a kappa^b`` replaced by
``v + a + b k``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .errors import InternalMismatch
from .partition import Partition, part
from .scalar import PowerCache


def _as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


@lru_cache(maxsize=None)
def block_factors(k: int, lam, mu, N: int) -> tuple:
    """Exponents ``(a, b)`` of the binomials ``1 - u q^a kappa^b`` in block k.

    Row indices run up to ``len + N``; beyond that every Pochhammer length
    vanishes.
    """
    k %= N
    out = []
    top = len(lam) + N
    for i in range(1, top + 1):
        mu_i = part(mu, i)
        for j in range(i, top + 1):
            if (j - i) % N != k:
                continue
            length = part(lam, j) - part(lam, j + 1)
            base = -mu_i + part(lam, j + 1)
            for r in range(length):
                out.append((base + r, j - i))
    kk = (-k - 1) % N
    top = len(mu) + N
    for alpha in range(1, top + 1):
        lam_a = part(lam, alpha)
        for beta in range(alpha, top + 1):
            if (beta - alpha) % N != kk:
                continue
            length = part(mu, beta) - part(mu, beta + 1)
            base = lam_a - part(mu, beta)
            for r in range(length):
                out.append((base + r, alpha - beta - 1))
    return tuple(out)


def _eval_factors(factors, u, q, kappa):
    qp = PowerCache(q)
    kp = PowerCache(kappa)
    result = Fraction(1)
    for a, b in factors:
        result = result * (1 - u * qp(a) * kp(b))
    return result


def nekrasov_block(k: int, lam, mu, u, q, kappa, N: int):
    """``N^{(k|N)}_{lam,mu}(u|q,kappa)``."""
    return _eval_factors(block_factors(k, _as_partition(lam), _as_partition(mu), N), u, q, kappa)


@lru_cache(maxsize=None)
def full_factors_box(lam, mu) -> tuple:
    """Exponent pairs from the box-product form of the full factor."""
    lam_c, mu_c = lam.conjugate(), mu.conjugate()
    out = []
    for (i, j) in lam.boxes():
        out.append((-part(mu, i) + j - 1, part(lam_c, j) - i))
    for (k, l) in mu.boxes():
        out.append((part(lam, k) - l, -part(mu_c, l) + k - 1))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def full_factors_poch(lam, mu) -> tuple:
    """Exponent pairs from the double Pochhammer form (no congruence)."""
    out = []
    top = len(lam) + 1
    for i in range(1, top + 1):
        for j in range(i, top + 1):
            base = -part(mu, i) + part(lam, j + 1)
            for r in range(part(lam, j) - part(lam, j + 1)):
                out.append((base + r, j - i))
    top = len(mu) + 1
    for alpha in range(1, top + 1):
        for beta in range(alpha, top + 1):
            base = part(lam, alpha) - part(mu, beta)
            for r in range(part(mu, beta) - part(mu, beta + 1)):
                out.append((base + r, alpha - beta - 1))
    return tuple(sorted(out))


def nekrasov_full(lam, mu, u, q, kappa):
    """Ordinary K-theoretic Nekrasov factor, computed two ways."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    box = _eval_factors(full_factors_box(lam, mu), u, q, kappa)
    poch = _eval_factors(full_factors_poch(lam, mu), u, q, kappa)
    if box != poch:
        raise InternalMismatch(f"box and Pochhammer forms differ for {lam}, {mu}: {box} vs {poch}")
    return box


def nekrasov_additive(l: int, lam, mu, v, k, N: int):
    """Additive block: product of rising factorials in ``v`` with step ``k``."""
    result = Fraction(1)
    for a, b in block_factors(l, _as_partition(lam), _as_partition(mu), N):
        result = result * (v + a + b * k)
    return result


def nekrasov_additive_literal(l: int, lam, mu, v, k, N: int):
    """Direct transcription of the two products of rising factorials."""
    from .scalar import rising
    lam, mu = _as_partition(lam), _as_partition(mu)
    l %= N
    result = Fraction(1)
    top = len(lam) + N
    for i in range(1, top + 1):
        for j in range(i, top + 1):
            if (j - i) % N == l:
                result *= rising(v - part(mu, i) + part(lam, j + 1) - (i - j) * k,
                                 part(lam, j) - part(lam, j + 1))
    top = len(mu) + N
    for alpha in range(1, top + 1):
        for beta in range(alpha, top + 1):
            if (beta - alpha) % N == (-l - 1) % N:
                result *= rising(v + part(lam, alpha) - part(mu, beta) + (alpha - beta - 1) * k,
                                 part(mu, beta) - part(mu, beta + 1))
    return result


# ---------------------------------------------------------------------------
# tangent characters
#
# A character is a Counter keyed by (q exponent, kappa exponent, l, l') for
# the monomial q^a kappa^b s_l/s_l'.  Indices are residues in 1..N; when
# l == l' (mod N) the ratio is 1 and both are stored as 0.


def _skey(l: int, lp: int, N: int):
    a, b = (l - 1) % N + 1, (lp - 1) % N + 1
    return (0, 0) if a == b else (a, b)


def _geom(n: int) -> Counter:
    """Laurent polynomial ``q (1 - q^n) / (1 - q)`` as exponent counts."""
    out = Counter()
    if n >= 0:
        for e in range(1, n + 1):
            out[e] += 1
    else:
        for e in range(n + 1, 1):
            out[e] -= 1
    return out


def _mul_qpoly(a: Counter, b: Counter) -> Counter:
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] += ca * cb
    return out


def _one_minus_q(n: int) -> Counter:
    out = Counter({0: 1})
    out[n] -= 1
    return out


def _add_term(acc: Counter, qpoly: Counter, kexp: int, l: int, lp: int, N: int, sign: int = 1):
    sk = _skey(l, lp, N)
    for e, c in qpoly.items():
        if c:
            acc[(e, kexp) + sk] += sign * c


def _clean(c: Counter) -> Counter:
    return Counter({k: v for k, v in c.items() if v != 0})


def _comp(T, l):
    return T[(l - 1) % len(T)]


def _lowest_index(T, i):
    # below this every partition index is past the longest component
    return i - max((len(c) for c in T), default=0) - len(T) - 1


def ch_tangent_a(T) -> Counter:
    """Tangent character as a double sum over l <= l' <= i and l' < l <= i."""
    N = len(T)
    acc = Counter()
    for i in range(1, N + 1):
        low = _lowest_index(T, i)
        for l in range(low, i + 1):
            lam_l = _comp(T, l)
            n = part(lam_l, i + 1 - l) - part(lam_l, i + 2 - l)
            if n:
                for lp in range(l, i + 1):
                    e = part(_comp(T, lp), i + 1 - lp) - part(lam_l, i + 1 - l)
                    g = Counter({k + e: v for k, v in _geom(n).items()})
                    _add_term(acc, g, l - lp, l, lp, N)
        for lp in range(low, i):
            lam_lp = _comp(T, lp)
            n = part(lam_lp, i - lp) - part(lam_lp, i + 1 - lp)
            if n:
                for l in range(lp + 1, i + 1):
                    e = part(lam_lp, i + 1 - lp) - part(_comp(T, l), i + 1 - l)
                    g = Counter({k + e: v for k, v in _geom(n).items()})
                    _add_term(acc, g, l - lp, l, lp, N)
    return _clean(acc)


def ch_tangent_b(T, k_reading=None, printed_signs: bool = False) -> Counter:
    """Tangent character in the recast form with ``d_{k,l} = lam^(l)_{k-l+1}``.

    The two single sums carry an index that the recast form leaves free;
    ``k_reading(i)`` chooses it (default: the outer index i).  With that
    reading the form agrees with :func:`ch_tangent_a` only when the two
    triple sums enter with the sign opposite to the printed one; pass
    ``printed_signs=True`` to get the literal signs instead.
    """
    N = len(T)
    if k_reading is None:
        k_reading = lambda i: i

    def dd(k, l):
        return part(_comp(T, l), k - l + 1)

    triple = 1 if printed_signs else -1
    acc = Counter()
    for i in range(1, N + 1):
        low = _lowest_index(T, i)
        kk = k_reading(i)
        for lp in range(low, i):
            a = dd(i - 1, lp)
            if not a:
                continue
            left = _geom(a)
            for l in range(low, i + 1):
                b = dd(i, l)
                if b:
                    _add_term(acc, _mul_qpoly(left, _one_minus_q(-b)), l - lp, l, lp, N, triple)
            _add_term(acc, left, kk - lp, kk, lp, N)
        for lp in range(low, i + 1):
            a = dd(i, lp)
            if not a:
                continue
            left = _geom(a)
            for l in range(low, i + 1):
                b = dd(i, l)
                if b:
                    _add_term(acc, _mul_qpoly(left, _one_minus_q(-b)), l - lp, l, lp, N, -triple)
        for l in range(low, i + 1):
            b = dd(i, l)
            if b:
                _add_term(acc, _geom(-b), l - kk, l, kk, N, -1)
    return _clean(acc)


def ch_tangent(T, mode: str = "A") -> Counter:
    mode = mode.upper()
    if mode == "A":
        return ch_tangent_a(T)
    if mode == "B":
        return ch_tangent_b(T)
    raise ValueError(f"unknown mode {mode!r}")


def denominator_character(T) -> Counter:
    """Apply ``L`` term by term to the denominator blocks of f's coefficient.

    A binomial ``1 - (s_j/s_i) q^a kappa^b`` of block (i, j) maps to the
    monomial ``q^-a kappa^-b s_i/s_j``.
    """
    N = len(T)
    acc = Counter()
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for a, b in block_factors((j - i) % N, T[i - 1], T[j - 1], N):
                acc[(-a, -b) + _skey(i, j, N)] += 1
    return _clean(acc)


def character_dimension(ch: Counter) -> int:
    """Sum of multiplicities."""
    return sum(ch.values())
