"""
Degree distance, curve neighborhoods and the special Schubert varieties X_d
of cominuscule spaces.

Schubert varieties are named by their minimal coset representatives, so
``gamma1(space, u)`` returns the representative of the degree-one curve
neighborhood of X(u).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache

from .report import Report
from .rootsys import ConfigurationError, RootSystem, build_root_system
from .weyl import (
    ParabolicQuotient, WeylElement, all_reduced_words, enumerate_wp, from_word,
    identity, is_min_rep, min_rep, random_reduced_word, reduced_word,
    simple_reflection,
)

__all__ = [
    "CominSpace", "DegreeTable", "cominuscule_space", "parse_space",
    "deg_dist", "diameter", "dx_table", "gamma1", "gamma", "line_chain",
    "x_small", "partition_word", "verify_dx3", "verify_all",
    "word_independence",
]


@dataclass(frozen=True, eq=False)
class CominSpace:
    family: str          # GR, LG, OG, Q, E6P6, E7P7
    params: tuple[int, ...]
    root_system: RootSystem
    node: int
    wp: ParabolicQuotient

    @property
    def name(self) -> str:
        if self.family in ("E6P6", "E7P7"):
            return self.family[:2]
        args = ",".join(map(str, self.params))
        return f"{'Gr' if self.family == 'GR' else self.family}({args})"

    @property
    def dim(self) -> int:
        return self.wp.u_max.length

    def __repr__(self):
        return f"CominSpace({self.name})"


@dataclass(frozen=True)
class DegreeTable:
    d2: int
    d3: int


def _lie_data(family: str, params: tuple[int, ...]) -> tuple[str, int, int]:
    if family == "GR":
        m, n = params
        if not 1 <= m < n:
            raise ConfigurationError(f"Gr({m},{n}) needs 1 <= m < n")
        return "A", n - 1, m
    (n,) = params
    if family == "LG":
        if n < 2:
            raise ConfigurationError("LG(n) needs n >= 2")
        return "C", n, n
    if family == "OG":
        if n < 3:
            raise ConfigurationError("OG(n) needs n >= 3")
        return "D", n, n
    if family == "Q":
        if n < 3:
            raise ConfigurationError("Q(n) needs n >= 3")
        if n % 2:
            return "B", (n + 1) // 2, 1
        return "D", (n + 2) // 2, 1
    raise ConfigurationError(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def cominuscule_space(family: str, *params: int) -> CominSpace:
    if family == "E6P6":
        type_label, rank, node = "E6", 6, 6
    elif family == "E7P7":
        type_label, rank, node = "E7", 7, 7
    else:
        type_label, rank, node = _lie_data(family, tuple(params))
    rs = build_root_system(type_label, rank)
    return CominSpace(family, tuple(params), rs, node, enumerate_wp(rs, node))


_SPACE_RE = re.compile(r"^\s*(Gr|GR|LG|OG|Q)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$")


def parse_space(text: str) -> CominSpace:
    """
    Parse ``Gr(m,n)``, ``LG(n)``, ``OG(n)``, ``Q(n)``, ``E6`` or ``E7``.

    ``LG(n,2n)``, ``OG(n,2n)`` and ``E6/P6``, ``E7/P7`` are accepted too.
    """
    t = text.strip()
    if t.upper() in ("E6", "E6/P6", "E6P6"):
        return cominuscule_space("E6P6")
    if t.upper() in ("E7", "E7/P7", "E7P7"):
        return cominuscule_space("E7P7")
    m = _SPACE_RE.match(t)
    if not m:
        raise ConfigurationError(f"cannot parse space {text!r}")
    family = m.group(1).upper()
    a = int(m.group(2))
    b = None if m.group(3) is None else int(m.group(3))
    if family == "GR":
        if b is None:
            raise ConfigurationError("Gr needs two arguments: Gr(m,n)")
        return cominuscule_space("GR", a, b)
    if b is not None and not (family in ("LG", "OG") and b == 2 * a):
        raise ConfigurationError(f"cannot parse space {text!r}")
    return cominuscule_space(family, a)


def deg_dist(space: CominSpace, u: WeylElement) -> int:
    """Degree distance from the base point: occurrences of s_node in a reduced word."""
    if not is_min_rep(u, space.node):
        raise ValueError("element is not a minimal coset representative")
    return reduced_word(u).count(space.node)


def diameter(space: CominSpace) -> int:
    return deg_dist(space, space.wp.u_max)


def dx_table(space: CominSpace) -> DegreeTable:
    """The closed-form values of d_X(2) and d_X(3) for each family."""
    f, p = space.family, space.params
    if f == "GR":
        m, k = p[0], p[1] - p[0]
        return DegreeTable(min(m, k), min(2 * m, 2 * k, max(m, k)))
    if f == "LG":
        return DegreeTable(p[0], p[0])
    if f == "OG":
        n = p[0]
        return DegreeTable(n // 2, (n + 1) // 2)
    if f == "Q":
        return DegreeTable(2, 2)
    if f == "E6P6":
        return DegreeTable(2, 4)
    return DegreeTable(3, 3)


def family_dimension(space: CominSpace) -> int:
    f, p = space.family, space.params
    if f == "GR":
        return p[0] * (p[1] - p[0])
    if f == "LG":
        return p[0] * (p[0] + 1) // 2
    if f == "OG":
        return p[0] * (p[0] - 1) // 2
    if f == "Q":
        return p[0]
    # 16 for the Cayley plane: the top class is O_16
    return 16 if f == "E6P6" else 27


def gamma1(space: CominSpace, u: WeylElement) -> WeylElement:
    """Degree-one curve neighborhood; the full space is a fixed point."""
    wp = space.wp
    if u == wp.u_max:
        return u
    return min_rep(u * wp.w_P * simple_reflection(space.root_system, space.node), space.node)


def gamma(space: CominSpace, u: WeylElement, d: int) -> WeylElement:
    if d < 0:
        raise ValueError("degree must be non-negative")
    for _ in range(d):
        u = gamma1(space, u)
    return u


def line_chain(space: CominSpace, u: WeylElement) -> list[WeylElement]:
    """Prefixes of the canonical word of ``u`` ending at each s_node."""
    if not is_min_rep(u, space.node):
        raise ValueError("element is not a minimal coset representative")
    word = reduced_word(u)
    rs = space.root_system
    chain = [identity(rs)]
    chain += [from_word(rs, word[:j + 1]) for j, i in enumerate(word) if i == space.node]
    return chain


def partition_word(space: CominSpace, parts: tuple[int, ...]) -> tuple[int, ...]:
    """
    Reduced word of the representative attached to a partition.

    Gr(m,n) uses ordinary Young diagrams with box (r, c) labelled m + c - r;
    LG(n) and OG(n) use shifted diagrams of strict partitions, with box (r, c)
    labelled n - (c - r) for LG, and n - 1 - (c - r) off the diagonal for OG
    (diagonal boxes alternate n, n-1).  Boxes are added row by row, the first
    box being the rightmost letter.
    """
    f = space.family
    labels = []
    for r, length in enumerate(parts, start=1):
        cols = range(1, length + 1) if f == "GR" else range(r, r + length)
        for c in cols:
            if f == "GR":
                labels.append(space.params[0] + c - r)
            elif f == "LG":
                labels.append(space.params[0] - (c - r))
            elif f == "OG":
                n = space.params[0]
                if c == r:
                    labels.append(n if r % 2 else n - 1)
                else:
                    labels.append(n - 1 - (c - r))
            else:
                raise ConfigurationError(f"no partitions for {space.name}")
    return tuple(reversed(labels))


def x_small(space: CominSpace, d: int) -> WeylElement:
    """Representative of X_d, the B-stable Schubert variety Gamma_d(x, y) with d(x, y) = d."""
    d2 = diameter(space)
    if not 0 <= d <= d2:
        raise ValueError(f"d must lie in [0, {d2}]")
    rs, f = space.root_system, space.family
    if d == 0:
        return identity(rs)
    if d == 1:
        u = simple_reflection(rs, space.node)
    elif f == "GR":
        u = from_word(rs, partition_word(space, (d,) * d))
    elif f == "LG":
        u = from_word(rs, partition_word(space, tuple(range(d, 0, -1))))
    elif f == "OG":
        u = from_word(rs, partition_word(space, tuple(range(2 * d - 1, 0, -1))))
    elif f == "Q":
        u = space.wp.u_max
    elif f == "E6P6":
        u = from_word(rs, (6, 5, 4, 2, 3, 4, 5, 6))
    elif d == 2:
        u = from_word(rs, (7, 6, 5, 4, 2, 3, 4, 5, 6, 7))
    else:
        u = space.wp.u_max
    if not is_min_rep(u, space.node) or deg_dist(space, u) != d:
        raise ArithmeticError(f"X_{d} construction for {space.name} is inconsistent")
    return u


def x_small_length(space: CominSpace, d: int) -> int:
    """Expected dimension of X_d."""
    f = space.family
    if f == "GR":
        return d * d
    if f == "LG":
        return d * (d + 1) // 2
    if f == "OG":
        return d * (2 * d - 1)
    if f == "Q":
        return (0, 1, space.params[0])[d]
    if f == "E6P6":
        return (0, 1, 8)[d]
    return (0, 1, 10, 27)[d]


def verify_dx3(space: CominSpace) -> Report:
    """Check that the (d_X(3) - d)-neighborhood of X_d is the whole space."""
    rep = Report()
    d3 = dx_table(space).d3
    for d in range(diameter(space) + 1):
        u = gamma(space, x_small(space, d), d3 - d)
        rep.add(f"gamma_{d3 - d}(X_{d}) = X", u == space.wp.u_max,
                f"length {u.length} of {space.dim}")
    return rep


def word_independence(space: CominSpace, samples: int = 50, seed: int = 0,
                      cap: int | None = None) -> tuple[bool, str]:
    """
    Count s_node in ``samples`` random reduced words of every representative.

    With ``cap`` set, representatives having at most ``cap`` reduced words are
    checked exhaustively instead.
    """
    rng = random.Random(seed)
    words_checked = 0
    for u in space.wp.reps:
        expected = reduced_word(u).count(space.node)
        words = None
        if cap is not None:
            found, complete = all_reduced_words(u, cap)
            if complete:
                words = found
        if words is None:
            words = [random_reduced_word(u, rng) for _ in range(samples)]
        for w in words:
            words_checked += 1
            if w.count(space.node) != expected:
                return False, f"word {w} of length {u.length} disagrees"
    return True, f"{words_checked} words"


def verify_all(space: CominSpace, seed: int = 0) -> Report:
    """Run every structural check on W^P, curve neighborhoods and X_d."""
    wp, node = space.wp, space.node
    reps = wp.reps
    rep = Report()

    rep.add("dimension", space.dim == family_dimension(space),
            f"l(u_max) = {space.dim}")
    rep.add("wp_membership", all(is_min_rep(u, node) for u in reps), f"{len(reps)} reps")
    rep.add("weights_injective", len(set(wp.weights.values())) == len(reps))
    rep.add("unique_extremes",
            sum(u.length == 0 for u in reps) == 1 and sum(u.length == space.dim for u in reps) == 1)

    le = wp.bruhat
    n = len(reps)
    reflexive = all(le[a, a] for a in range(n))
    antisym = all(not (le[a, b] and le[b, a]) for a in range(n) for b in range(n) if a != b)
    transitive = bool(((le.astype(int) @ le.astype(int) > 0) <= le).all())
    graded = all(reps[a].length < reps[b].length
                 for a in range(n) for b in range(n) if a != b and le[a, b])
    rep.add("bruhat_partial_order", reflexive and antisym and transitive and graded)

    ok, detail = word_independence(space, samples=50, seed=seed)
    rep.add("word_independence", ok, detail)

    d2 = diameter(space)
    table = dx_table(space)
    rep.add("diameter_matches_table", d2 == table.d2, f"d_X(2) = {d2}")

    g = {u: gamma1(space, u) for u in reps}
    rep.add("gamma1_expansion", all(
        wp.leq(u, g[u]) and (u == wp.u_max or g[u].length > u.length) for u in reps))
    rep.add("gamma1_monotone", all(
        wp.leq(g[reps[a]], g[reps[b]]) for a in range(n) for b in range(n) if le[a, b]))
    rep.add("gamma1_degree_step", all(deg_dist(space, g[u]) <= deg_dist(space, u) + 1 for u in reps))
    e = identity(space.root_system)
    rep.add("saturation", gamma(space, e, d2) == wp.u_max
            and (d2 == 0 or gamma(space, e, d2 - 1) != wp.u_max))

    chain_ok = True
    for u in reps:
        chain = line_chain(space, u)
        if len(chain) != deg_dist(space, u) + 1 or min_rep(chain[-1], node) != u:
            chain_ok = False
        for a, b in zip(chain, chain[1:]):
            if deg_dist(space, min_rep(a.inverse() * b, node)) != 1:
                chain_ok = False
    rep.add("line_chain", chain_ok)

    xs_ok = True
    for d in range(d2 + 1):
        u = x_small(space, d)
        xs_ok &= deg_dist(space, u) == d and u.length == x_small_length(space, d)
    rep.add("x_small", xs_ok)
    dx3 = verify_dx3(space)
    rep.add("dx3", dx3.passed, "; ".join(c.check for c in dx3.checks if not c.passed) or None)
    return rep
