"""Partitions, cyclic tuples of partitions and their degree bookkeeping.

Conventions
-----------
* A partition is a weakly decreasing tuple of positive integers.  Part
  access is 1-based and returns 0 past the end (``part(lam, i)``).
* A tuple ``T = (lam^(1), ..., lam^(N))`` is indexed cyclically:
  ``T.component(i + N) == T.component(i)``.
* The degree vector of ``T`` collects the exponents of the cyclic ratio
  variables ``y_j = p x_{j+1}/x_j``: the box in row ``a`` of component ``b``
  contributes to ``y_j`` with ``j = a + b - 1 (mod N)``.
* Enumeration order is reverse lexicographic and fixed, so anything built
  on top of it is reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeCapExceeded

DEFAULT_SIZE_CAP = 12


def size_cap() -> int:
    """Global cap on truncation order and tuple size (``NSR_MAX_DEGREE``)."""
    value = os.environ.get("NSR_MAX_DEGREE")
    return int(value) if value else DEFAULT_SIZE_CAP


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """``lambda_i`` with 1-based i; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self):
        """Boxes ``(i, j)`` (row, column), both 1-based."""
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield (i, j)

    def __repr__(self):
        return f"Partition({list(self)})"


EMPTY = Partition()


def part(lam, i: int) -> int:
    return lam[i - 1] if 1 <= i <= len(lam) else 0


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for first in range(min(remaining, largest), 0, -1):
            rec(remaining - first, first, prefix + (first,))

    rec(n, n, ())
    return tuple(out)


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))


class PartitionTuple(tuple):
    """An N-tuple of partitions with cyclic component access."""

    def __new__(cls, components):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if len(comps) < 1:
            raise ValueError("need at least one component")
        return super().__new__(cls, comps)

    @property
    def N(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self)

    def component(self, i: int) -> Partition:
        """``lambda^(i)`` with 1-based cyclic index."""
        return self[(i - 1) % len(self)]

    def rotate(self, shift: int = 1) -> "PartitionTuple":
        """Component i of the result is component i - shift of self."""
        n = len(self)
        return PartitionTuple(self[(i - shift) % n] for i in range(n))

    def __repr__(self):
        return "PartitionTuple(" + ", ".join(str(list(c)) for c in self) + ")"


@dataclass(frozen=True)
class DominantWeight:
    """Level K together with mu = (mu_1 >= ... >= mu_N), zero padded."""

    K: int
    mu: tuple

    def __post_init__(self):
        if self.K < 0:
            raise ValueError("level must be nonnegative")

    def padded(self, N: int) -> tuple:
        mu = tuple(self.mu) + (0,) * (N - len(self.mu))
        if len(mu) != N:
            raise ValueError(f"mu {self.mu} longer than N={N}")
        if any(a < b for a, b in zip(mu, mu[1:])):
            raise ValueError(f"mu {self.mu} is not weakly decreasing")
        if self.K + mu[-1] - mu[0] < 0:
            raise ValueError("K + mu_N - mu_1 must be nonnegative")
        return mu


def degree_vector(T) -> tuple:
    """Exponent vector of the y-monomial attached to T."""
    N = len(T)
    d = [0] * N
    for b, lam in enumerate(T):
        for a, row in enumerate(lam):
            d[(a + b) % N] += row
    return tuple(d)


def m_vector(T) -> tuple:
    """x-exponents ``m_i = d_{i-1} - d_i`` (cyclic)."""
    d = degree_vector(T)
    return tuple(d[i - 1] - d[i] for i in range(len(d)))


def m_from_degree(d) -> tuple:
    return tuple(d[i - 1] - d[i] for i in range(len(d)))


def is_uniform(d) -> bool:
    return all(x == d[0] for x in d)


def rotate_degree(d, shift: int = 1) -> tuple:
    n = len(d)
    return tuple(d[(i - shift) % n] for i in range(n))


def _check_cap(n: int):
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(f"total size {n} exceeds enumeration cap {cap}")


def compositions(n: int, k: int):
    """Weak compositions of n into k parts, lexicographically decreasing."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def tuples_of_size(N: int, n: int) -> tuple:
    """All N-tuples of partitions with total size n (deterministic order)."""
    if N < 1:
        raise ValueError("N must be positive")
    _check_cap(n)
    out = []
    for comp in compositions(n, N):
        for combo in itertools.product(*(enumerate_partitions(c) for c in comp)):
            out.append(PartitionTuple(combo))
    return tuple(out)


@lru_cache(maxsize=None)
def tuples_by_degree(N: int, n: int) -> dict:
    """Tuples of total size n grouped by degree vector."""
    groups: dict = {}
    for T in tuples_of_size(N, n):
        groups.setdefault(degree_vector(T), []).append(T)
    return {d: tuple(v) for d, v in groups.items()}


def enumerate_tuples(N: int, d) -> tuple:
    """All tuples with degree vector d."""
    d = tuple(d)
    if len(d) != N:
        raise ValueError(f"degree vector {d} does not have length {N}")
    if N < 2:
        raise ValueError("N must be at least 2")
    return tuples_by_degree(N, sum(d)).get(d, ())


def degree_vectors(N: int, n: int):
    """All degree vectors of length N and total n that are realised by tuples."""
    return sorted(tuples_by_degree(N, n), reverse=True)


def all_degree_vectors(N: int, n: int):
    """Every nonnegative vector of length N with total n (lex decreasing)."""
    return list(compositions(n, N))


def is_gt_pattern(T, w: DominantWeight) -> bool:
    """Interlacing conditions bounded by the weight (K, mu)."""
    N = len(T)
    mu = w.padded(N)
    length = max((len(c) for c in T), default=0)
    first, last = T[0], T[N - 1]
    top = w.K + mu[N - 1] - mu[0]
    for a in range(1, length + 1):
        if part(last, a) - part(first, a) > top:
            return False
        for j in range(N - 1):
            if part(T[j], a) - part(T[j + 1], a) > mu[j] - mu[j + 1]:
                return False
    return True


def _contains(lam, mu) -> bool:
    return all(part(lam, i) >= part(mu, i) for i in range(1, max(len(lam), len(mu)) + 1))


def _contains_shifted(lam, mu) -> bool:
    return all(part(lam, i) >= part(mu, i + 1) for i in range(1, max(len(lam), len(mu)) + 1))


def to_cylindric(T):
    """Map a tuple to the collection ``lam^{kl}`` (1-based k, l).

    Returns ``(collection, ok)`` where ``collection[(k, l)]`` is a Partition
    and ``ok`` reports whether every chain
    ``lam^{ll} > lam^{l+1,l} > ... > lam^{l-1,l} >~ lam^{ll}`` holds.
    """
    N = len(T)
    coll = {}
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            lam = T[l - 1]
            off = (k - l) % N
            rows = []
            i = 1
            while True:
                idx = N * (i - 1) + off + 1
                if idx > len(lam):
                    break
                rows.append(lam[idx - 1])
                i += 1
            coll[(k, l)] = Partition(rows)
    ok = True
    for l in range(1, N + 1):
        chain = [coll[((l - 1 + j) % N + 1, l)] for j in range(N)]
        for a, b in zip(chain, chain[1:]):
            if not _contains(a, b):
                ok = False
        if not _contains_shifted(chain[-1], chain[0]):
            ok = False
    return coll, ok


def from_cylindric(coll, N: int) -> PartitionTuple:
    """Inverse of :func:`to_cylindric`."""
    comps = []
    for l in range(1, N + 1):
        parts = {}
        for k in range(1, N + 1):
            off = (k - l) % N
            for i, v in enumerate(coll[(k, l)], 1):
                parts[N * (i - 1) + off + 1] = v
        length = max(parts, default=0)
        comps.append(Partition(parts.get(i, 0) for i in range(1, length + 1)))
    return PartitionTuple(comps)


def cylindric_degrees(coll, N: int) -> tuple:
    """``d_k = sum_l |lam^{kl}|`` for k = 1..N."""
    return tuple(sum(coll[(k, l)].size for l in range(1, N + 1)) for k in range(1, N + 1))
