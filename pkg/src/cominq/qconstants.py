"""
Degree sequences and the alternating sums defining quantum K-theory
structure constants.

The K-theoretic Gromov-Witten invariants enter as abstract integer tables:
``three_point[d][u, v, k]`` plays I_d(O_u, O_v, O_k^vee) and
``two_point[d][k, l]`` plays I_d(O_k, O_l^vee).  All arithmetic is on Python
integers (object arrays where numpy is used), so nothing can overflow.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable

import numpy as np

__all__ = [
    "DegreeSequence", "GWTables", "ConstantReport",
    "enumerate_sequences", "count_sequences", "alt_binomial_sum",
    "cancellation_sum", "random_tables", "assemble_direct", "assemble_matrix",
    "chain_euler", "degenerate_tables",
]


@dataclass(frozen=True)
class DegreeSequence:
    """(d_0, d_1, ..., d_r) with d_0 >= 0 and d_i >= 1 for i >= 1."""
    entries: tuple[int, ...]

    def __post_init__(self):
        e = self.entries
        if not e or e[0] < 0 or any(x < 1 for x in e[1:]):
            raise ValueError(f"invalid degree sequence {e}")

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    @property
    def sign(self) -> int:
        return -1 if self.r % 2 else 1

    def __iter__(self):
        return iter(self.entries)


def _compositions(n: int):
    """Compositions of n into positive parts, lexicographically."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=64)
def _sequences(d: int) -> tuple[DegreeSequence, ...]:
    return tuple(DegreeSequence((d0,) + tail)
                 for d0 in range(d, -1, -1)
                 for tail in _compositions(d - d0))


def enumerate_sequences(d: int) -> list[DegreeSequence]:
    """All sequences of total ``d``; ordered by d_0 descending, then lexicographically."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return list(_sequences(d))


def count_sequences(d: int, d0: int, length: int) -> int:
    """Number of sequences of total ``d`` starting with ``d0`` with ``length`` entries."""
    if d0 == d:
        return int(length == 1)
    if d0 < d and length >= 2:
        return comb(d - d0 - 1, length - 2)
    return 0


def alt_binomial_sum(k: int) -> int:
    """sum_{r=1}^{k} (-1)^r binom(k-1, r-1)."""
    if k < 1:
        raise ValueError("k must be positive")
    return sum((-1) ** r * comb(k - 1, r - 1) for r in range(1, k + 1))


def cancellation_sum(d: int, dmax: int, c: Callable[[int], int]) -> int:
    """
    Sum over sequences of total ``d`` of (-1)^r c(min(d_0, dmax)).

    This vanishes whenever d > dmax.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    return sum(s.sign * c(min(s.entries[0], dmax)) for s in _sequences(d))


@dataclass(frozen=True)
class GWTables:
    """Abstract 3-point and 2-point invariant tables over a basis of size n."""
    n: int
    max_degree: int
    three_point: tuple[np.ndarray, ...]            # index d = 0..D, shape (n, n, n)
    two_point: tuple[np.ndarray, ...]              # index d = 0..D, entry 0 unused

    def __post_init__(self):
        if len(self.three_point) != self.max_degree + 1 or len(self.two_point) != self.max_degree + 1:
            raise ValueError("tables must cover degrees 0..max_degree")
        for a in self.three_point:
            if a.shape != (self.n,) * 3:
                raise ValueError("three-point table has wrong shape")
        for t in self.two_point[1:]:
            if t.shape != (self.n,) * 2:
                raise ValueError("two-point table has wrong shape")

    @classmethod
    def from_lists(cls, three_point, two_point) -> GWTables:
        """``two_point`` lists degrees 1..D; values are converted to exact integers."""
        a = tuple(np.array(x, dtype=object).reshape((len(x),) * 3) for x in three_point)
        n = a[0].shape[0]
        t = (np.zeros((n, n), dtype=object),) + tuple(
            np.array(x, dtype=object).reshape(n, n) for x in two_point)
        return cls(n, len(a) - 1, a, t)

    def check_degree(self, d: int) -> None:
        if not 0 <= d <= self.max_degree:
            raise ValueError(f"degree {d} exceeds table range 0..{self.max_degree}")


def random_tables(n: int, max_degree: int, seed: int, low: int = -3, high: int = 3) -> GWTables:
    """Uniform integer tables in [low, high], reproducible from a 64-bit seed."""
    rng = random.Random(seed)
    a = tuple(np.array([rng.randint(low, high) for _ in range(n ** 3)], dtype=object).reshape(n, n, n)
              for _ in range(max_degree + 1))
    t = (np.zeros((n, n), dtype=object),) + tuple(
        np.array([rng.randint(low, high) for _ in range(n * n)], dtype=object).reshape(n, n)
        for _ in range(max_degree))
    return GWTables(n, max_degree, a, t)


def degenerate_tables(n: int, max_degree: int, dmax: int, seed: int) -> GWTables:
    """
    Random tables in which every term of the alternating sum depends only on
    min(d_0, dmax) and r.

    Three-point slices depend on min(d, dmax).  The two-point slice is one
    matrix for every d >= 1: if T_1 and T_2 differed, the chain products for
    tails (1, 2) and (2, 1) would differ and the grouping would break.
    """
    base = random_tables(n, max_degree, seed)
    a = tuple(base.three_point[min(d, dmax)] for d in range(max_degree + 1))
    t = base.two_point[:1] + base.two_point[1:2] * max_degree
    return GWTables(n, max_degree, a, t)


@dataclass
class ConstantReport:
    u: int
    v: int
    w: int
    d: int
    value: int
    terms: list[dict] = field(default_factory=list)   # keys: sequence, sign, term

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "w": self.w, "d": self.d,
                "terms": self.terms, "total": self.value}


def assemble_direct(t: GWTables, u: int, v: int, w: int, d: int) -> ConstantReport:
    """Brute-force nested sum over sequences and all kappa tuples (reference oracle)."""
    t.check_degree(d)
    report = ConstantReport(u, v, w, d, 0)
    for seq in enumerate_sequences(d):
        d0, *rest = seq.entries
        term = 0
        for kappas in itertools.product(range(t.n), repeat=len(rest)):
            chain = kappas + (w,)
            prod = int(t.three_point[d0][u, v, chain[0]])
            for i, di in enumerate(rest):
                if not prod:
                    break
                prod *= int(t.two_point[di][chain[i], chain[i + 1]])
            term += prod
        report.terms.append({"sequence": list(seq.entries), "sign": seq.sign, "term": seq.sign * term})
        report.value += seq.sign * term
    return report


def _euler_vector(t: GWTables, entries: tuple[int, ...], u: int, v: int) -> np.ndarray:
    if len(entries) == 1:
        return t.three_point[entries[0]][u, v, :].astype(object)
    return _euler_vector(t, entries[:-1], u, v).dot(t.two_point[entries[-1]].astype(object))


def chain_euler(t: GWTables, bd: DegreeSequence, u: int, v: int, w: int) -> int:
    """
    Euler characteristic over the boundary stratum of ``bd``, by the recursion
    E_bd(u, v, .) = E_bd'(u, v, .) T_{d_r} with bd' = bd minus its last entry.
    """
    for di in bd.entries:
        t.check_degree(di)
    return int(_euler_vector(t, bd.entries, u, v)[w])


def assemble_matrix(t: GWTables, u: int, v: int, w: int, d: int) -> int:
    """Structure constant as sum_bd (-1)^r A_{d_0}[u, v, :] (T_{d_1} ... T_{d_r})[:, w]."""
    t.check_degree(d)
    n = t.n
    total = 0
    for seq in enumerate_sequences(d):
        d0, *rest = seq.entries
        m = np.identity(n, dtype=object)
        for di in rest:
            m = m.dot(t.two_point[di].astype(object))
        total += seq.sign * int(t.three_point[d0][u, v, :].astype(object).dot(m[:, w]))
    return total
