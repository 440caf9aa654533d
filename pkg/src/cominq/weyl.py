"""
Weyl group elements as integer matrices, reduced words, Bruhat order and
minimal coset representatives for a maximal parabolic subgroup.

An element acts on root coordinates (simple-root basis) by its matrix.  A word
``(i1, ..., ik)`` stands for the product ``s_i1 s_i2 ... s_ik``; its matrix is
the left-to-right matrix product, so ``s_ik`` is applied to a vector first.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .rootsys import ConfigurationError, RootSystem, cominuscule_nodes

__all__ = [
    "WeylElement", "ParabolicQuotient",
    "identity", "simple_reflection", "from_word", "multiply",
    "reduced_word", "all_reduced_words", "random_reduced_word",
    "longest_element", "min_rep", "is_min_rep", "enumerate_wp", "bruhat_leq",
    "format_word", "parse_word",
]

Word = tuple[int, ...]


@lru_cache(maxsize=None)
def _positive_root_matrix(rs: RootSystem) -> np.ndarray:
    m = np.array(rs.positive_roots, dtype=np.int64).T
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _simple_matrices(rs: RootSystem) -> tuple[np.ndarray, ...]:
    mats = []
    for i in rs.nodes:
        s = np.eye(rs.rank, dtype=np.int64)
        s[i - 1] -= rs.cartan[i - 1]
        s.setflags(write=False)
        mats.append(s)
    return tuple(mats)


def _inversions(rs: RootSystem, action: np.ndarray) -> int:
    images = action @ _positive_root_matrix(rs)
    return int(np.count_nonzero(images.sum(axis=0) < 0))


class WeylElement:
    """An element of the Weyl group of ``rs``, stored as its action matrix."""

    __slots__ = ("rs", "action", "length", "_key", "__weakref__")

    def __init__(self, rs: RootSystem, action: np.ndarray, length: int | None = None):
        action = np.array(action, dtype=np.int64)
        action.setflags(write=False)
        self.rs = rs
        self.action = action
        self._key = action.tobytes()
        self.length = _inversions(rs, action) if length is None else length

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.rs == other.rs
                and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __repr__(self):
        return f"WeylElement({self.rs.type_label}{self.rs.rank}, word={format_word(reduced_word(self))})"

    def root_image(self, i: int) -> np.ndarray:
        """Image of the simple root alpha_i."""
        return self.action[:, i - 1]

    def has_right_descent(self, i: int) -> bool:
        # images of roots are sign-coherent, so the sum decides the sign
        return int(self.action[:, i - 1].sum()) < 0

    def right_descents(self) -> list[int]:
        sums = self.action.sum(axis=0)
        return [int(i) + 1 for i in np.flatnonzero(sums < 0)]

    def times_simple(self, i: int) -> WeylElement:
        """Right multiplication by s_i, with the length updated in O(1)."""
        step = -1 if self.has_right_descent(i) else 1
        return WeylElement(self.rs, self.action @ _simple_matrices(self.rs)[i - 1],
                           self.length + step)

    def simple_times(self, i: int) -> WeylElement:
        """Left multiplication by s_i."""
        return WeylElement(self.rs, _simple_matrices(self.rs)[i - 1] @ self.action)

    def inverse(self) -> WeylElement:
        return from_word(self.rs, reduced_word(self)[::-1])

    def is_identity(self) -> bool:
        return self.length == 0


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, np.eye(rs.rank, dtype=np.int64), 0)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"node {i} out of range 1..{rs.rank}")
    return WeylElement(rs, _simple_matrices(rs)[i - 1], 1)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The product s_i1 ... s_ik; length is recomputed, so words need not be reduced."""
    m = np.eye(rs.rank, dtype=np.int64)
    mats = _simple_matrices(rs)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise IndexError(f"node {i} out of range 1..{rs.rank}")
        m = m @ mats[i - 1]
    return WeylElement(rs, m)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rs != b.rs:
        raise ValueError(f"elements of different Weyl groups: {a.rs} and {b.rs}")
    return WeylElement(a.rs, a.action @ b.action)


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed word {text!r}; expected comma-separated node indices") from None


def reduced_word(u: WeylElement) -> Word:
    """
    Canonical reduced word: repeatedly strip the largest right descent.

    This rule reproduces the customary E6/E7 words, e.g. 6,5,4,2,3,4,5,6.
    """
    out = []
    while u.length:
        i = u.right_descents()[-1]
        out.append(i)
        u = u.times_simple(i)
    return tuple(reversed(out))


def all_reduced_words(u: WeylElement, cap: int) -> tuple[list[Word], bool]:
    """
    Reduced words of ``u`` by depth-first search over right descents.

    Returns at most ``cap`` words and a flag telling whether the list is
    the complete set.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    found: list[Word] = []

    def search(v: WeylElement, suffix: Word) -> bool:
        if v.length == 0:
            found.append(suffix)
            return len(found) > cap
        for i in v.right_descents():
            if search(v.times_simple(i), (i,) + suffix):
                return True
        return False

    overflow = search(u, ())
    return found[:cap], not overflow


def random_reduced_word(u: WeylElement, rng: random.Random) -> Word:
    """A reduced word built by stripping uniformly chosen right descents."""
    out = []
    while u.length:
        i = rng.choice(u.right_descents())
        out.append(i)
        u = u.times_simple(i)
    return tuple(reversed(out))


def longest_element(rs: RootSystem, subset: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic subgroup generated by ``subset``."""
    subset = sorted(set(subset))
    w = identity(rs)
    while True:
        ascent = next((i for i in subset if not w.has_right_descent(i)), None)
        if ascent is None:
            return w
        w = w.times_simple(ascent)


def is_min_rep(u: WeylElement, node: int) -> bool:
    return all(i == node or not u.has_right_descent(i) for i in u.rs.nodes)


def min_rep(w: WeylElement, node: int) -> WeylElement:
    """Shortest element of the coset w W_P, where W_P omits s_node."""
    while True:
        i = next((i for i in w.right_descents() if i != node), None)
        if i is None:
            return w
        w = w.times_simple(i)


def bruhat_leq(v: WeylElement, u: WeylElement, _memo: dict | None = None) -> bool:
    """
    Bruhat order by the lifting property: take s with su < u; then v <= u iff
    sv <= su (when sv < v) or v <= su (otherwise).
    """
    memo = {} if _memo is None else _memo
    return _bruhat(v, u, memo)


def _bruhat(v: WeylElement, u: WeylElement, memo: dict) -> bool:
    if v.length == 0:
        return True
    if v.length > u.length:
        return False
    if v.length == u.length:
        return v == u
    key = (v, u)
    hit = memo.get(key)
    if hit is not None:
        return hit
    for i in u.rs.nodes:
        su = u.simple_times(i)
        if su.length < u.length:
            break
    sv = v.simple_times(i)
    result = _bruhat(sv, su, memo) if sv.length < v.length else _bruhat(v, su, memo)
    memo[key] = result
    return result


@dataclass(frozen=True, eq=False)
class ParabolicQuotient:
    """Minimal coset representatives W^P for the maximal parabolic of ``node``."""
    root_system: RootSystem
    node: int
    reps: tuple[WeylElement, ...]
    weights: dict = field(repr=False)   # WeylElement -> weight in the fundamental-weight basis
    u_max: WeylElement
    w_P: WeylElement
    words: tuple[Word, ...] = field(repr=False)   # canonical reduced word of each rep

    def __len__(self):
        return len(self.reps)

    @cached_property
    def index(self) -> dict[WeylElement, int]:
        return {u: k for k, u in enumerate(self.reps)}

    @cached_property
    def bruhat(self) -> np.ndarray:
        """Boolean matrix: bruhat[a, b] iff reps[a] <= reps[b]."""
        memo: dict = {}
        n = len(self.reps)
        rel = np.zeros((n, n), dtype=bool)
        for b, u in enumerate(self.reps):
            for a, v in enumerate(self.reps):
                rel[a, b] = _bruhat(v, u, memo)
        rel.setflags(write=False)
        return rel

    def leq(self, v: WeylElement, u: WeylElement) -> bool:
        return bool(self.bruhat[self.index[v], self.index[u]])

    def rep_of(self, w: WeylElement) -> WeylElement:
        return min_rep(w, self.node)

    def ranks(self) -> list[int]:
        """Number of representatives of each length 0, 1, ..., l(u_max)."""
        counts = [0] * (self.u_max.length + 1)
        for u in self.reps:
            counts[u.length] += 1
        return counts


def enumerate_wp(rs: RootSystem, node: int) -> ParabolicQuotient:
    """
    Breadth-first search over the orbit of the fundamental weight of ``node``.

    Each orbit point is reached first along a reduced path, so the BFS depth is
    the length of the minimal representative.
    """
    if node not in cominuscule_nodes(rs):
        raise ConfigurationError(f"node {node} is not cominuscule in {rs.type_label}{rs.rank}")
    a = rs.cartan
    start = tuple(int(j == node) for j in rs.nodes)
    found = {start: (identity(rs), 0)}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        u, depth = found[lam]
        for i in rs.nodes:
            c = lam[i - 1]
            if c <= 0:
                continue
            mu = tuple(lam[j] - c * int(a[j, i - 1]) for j in range(rs.rank))
            if mu not in found:
                found[mu] = (WeylElement(rs, _simple_matrices(rs)[i - 1] @ u.action, depth + 1), depth + 1)
                queue.append(mu)

    entries = []
    for lam, (u, depth) in found.items():
        if u.length != depth:
            raise ArithmeticError("orbit depth disagrees with inversion count")  # pragma: no cover
        entries.append((depth, reduced_word(u), u, lam))
    entries.sort(key=lambda e: (e[0], e[1]))
    reps = tuple(e[2] for e in entries)
    tops = [u for u in reps if u.length == entries[-1][0]]
    if len(tops) != 1:
        raise ArithmeticError("W^P has no unique maximal element")  # pragma: no cover
    return ParabolicQuotient(
        root_system=rs,
        node=node,
        reps=reps,
        weights={e[2]: e[3] for e in entries},
        u_max=tops[0],
        w_P=longest_element(rs, [i for i in rs.nodes if i != node]),
        words=tuple(e[1] for e in entries),
    )
