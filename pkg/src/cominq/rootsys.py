"""
Root systems of types A, B, C, D, E6 and E7 with exact integer data.

Roots are integer vectors in the basis of simple roots.  Node indices are
1-based and follow Bourbaki numbering throughout (E7: node 7 ends the long
arm, node 2 hangs off node 4).

>>> rs = build_root_system("C", 3)
>>> rs.highest_root
(2, 2, 1)
>>> sorted(cominuscule_nodes(rs))
[3]
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ConfigurationError", "CartanDatum", "RootSystem",
    "cartan_matrix", "build_root_system", "cominuscule_nodes", "reflect",
]

Root = tuple[int, ...]


class ConfigurationError(ValueError):
    """Unsupported Lie type, rank, node or space description."""


def _edges(type_label: str, rank: int) -> list[tuple[int, int]]:
    if type_label in ("A", "B", "C"):
        return [(i, i + 1) for i in range(1, rank)]
    if type_label == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if type_label in ("E6", "E7"):
        return [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
    raise ConfigurationError(f"unsupported type {type_label!r}")


def _check_type(type_label: str, rank: int) -> None:
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if type_label in minimum:
        if rank < minimum[type_label]:
            raise ConfigurationError(f"{type_label}_{rank} is not supported")
    elif type_label == "E6":
        if rank != 6:
            raise ConfigurationError("E6 has rank 6")
    elif type_label == "E7":
        if rank != 7:
            raise ConfigurationError("E7 has rank 7")
    else:
        raise ConfigurationError(f"unsupported type {type_label!r}")


def cartan_matrix(type_label: str, rank: int) -> np.ndarray:
    """
    Bourbaki Cartan matrix with entry [i, j] = <alpha_i^vee, alpha_j>
    (0-based array indices for 1-based nodes).
    """
    _check_type(type_label, rank)
    a = 2 * np.eye(rank, dtype=np.int64)
    for i, j in _edges(type_label, rank):
        a[i - 1, j - 1] = a[j - 1, i - 1] = -1
    if type_label == "B":
        # alpha_n short
        a[rank - 1, rank - 2] = -2
    elif type_label == "C":
        # alpha_n long
        a[rank - 2, rank - 1] = -2
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CartanDatum:
    type_label: str
    rank: int
    cartan_matrix: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        a = self.cartan_matrix
        if a.shape != (self.rank, self.rank):
            raise ConfigurationError("Cartan matrix has the wrong shape")
        if not (np.all(np.diag(a) == 2) and np.all(a - np.diag(np.diag(a)) <= 0)):
            raise ConfigurationError("not a Cartan matrix")


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root data for one simple Lie type."""
    datum: CartanDatum
    positive_roots: tuple[Root, ...]   # sorted by height, then lexicographically
    highest_root: Root

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def type_label(self) -> str:
        return self.datum.type_label

    @property
    def cartan(self) -> np.ndarray:
        return self.datum.cartan_matrix

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def __repr__(self):
        return f"RootSystem({self.type_label}{self.rank})"

    def __eq__(self, other):
        return (isinstance(other, RootSystem)
                and (self.type_label, self.rank) == (other.type_label, other.rank))

    def __hash__(self):
        return hash((self.type_label, self.rank))


def reflect(rs: RootSystem, i: int, v) -> tuple[int, ...]:
    """Simple reflection s_i(v) = v - <v, alpha_i^vee> alpha_i on root coordinates."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"node {i} out of range 1..{rs.rank}")
    out = [int(x) for x in v]
    if len(out) != rs.rank:
        raise ValueError("vector length does not match rank")
    pairing = sum(int(c) * x for c, x in zip(rs.cartan[i - 1], out))
    out[i - 1] -= pairing
    return tuple(out)


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Generate positive roots by breadth-first closure from the simple roots."""
    a = cartan_matrix(type_label, rank)
    datum = CartanDatum(type_label, rank, a)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    proto = RootSystem(datum, (), ())
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(1, rank + 1):
            gamma = reflect(proto, i, beta)
            # s_i only negates alpha_i among positive roots
            if all(c >= 0 for c in gamma) and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    roots = tuple(sorted(seen, key=lambda r: (sum(r), r)))
    highest = roots[-1]
    if not all(all(x >= y for x, y in zip(highest, r)) for r in roots):
        raise ArithmeticError("no coordinatewise maximal root")  # pragma: no cover
    return RootSystem(datum, roots, highest)


def cominuscule_nodes(rs: RootSystem) -> set[int]:
    """Nodes whose coefficient in the highest root is one."""
    return {i for i, c in zip(rs.nodes, rs.highest_root) if c == 1}
