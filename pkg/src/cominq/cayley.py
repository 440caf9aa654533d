"""
The quantum K-theory ring of the Cayley plane E6/P6.

The multiplication table ships as ``data/qk_e6p6.tbl``, one product per line::

    O6' * O6 = O12 + 2 O12' + q - 2 O13 - 2 q O1 + q O2

Labels are ``O<codim>`` followed by ``'`` or ``''`` for the second and third
Schubert class of the same codimension.  A term without a label is a multiple
of the unit class ``O0``; products with ``O0`` are never stored.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import total_ordering
from importlib import resources
from itertools import combinations_with_replacement
from pathlib import Path

from .report import Report
from .weyl import ParabolicQuotient, from_word, is_min_rep, parse_word

__all__ = [
    "ClassLabel", "QKElement", "MultTable", "TableSyntaxError", "TableError",
    "LABELS", "UNIT", "LABEL_WORDS", "TOP_CODIM",
    "parse_label", "parse_expr", "parse_table", "load_table", "default_table_path",
    "multiply", "verify_associativity", "verify_degree_bound", "infer_index",
    "verify_codim_sign", "link_labels",
]

TOP_CODIM = 16
INT64_MAX = 2 ** 63 - 1
# number of Schubert classes in each codimension
CENSUS = {c: 1 for c in (0, 1, 2, 3, 13, 14, 15, 16)}
CENSUS.update({c: 2 for c in (4, 5, 6, 7, 9, 10, 11, 12)})
CENSUS[8] = 3


class TableSyntaxError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        super().__init__(f"line {line}, column {col}: {msg}" if line else f"column {col}: {msg}")


class TableError(ValueError):
    """Structurally invalid table: census violation, duplicate or missing pair."""


@total_ordering
@dataclass(frozen=True)
class ClassLabel:
    codim: int
    variant: int = 0   # 0, 1 or 2 primes

    def __post_init__(self):
        if self.codim not in CENSUS or not 0 <= self.variant < CENSUS[self.codim]:
            raise TableError("no Schubert class O" + str(self.codim) + "'" * self.variant)

    def __lt__(self, other):
        return (self.codim, self.variant) < (other.codim, other.variant)

    def __str__(self):
        return f"O{self.codim}" + "'" * self.variant

    @property
    def is_unit(self) -> bool:
        return self.codim == 0


LABELS = tuple(ClassLabel(c, v) for c in sorted(CENSUS) for v in range(CENSUS[c]))
UNIT = LABELS[0]

# Weyl words of the classes not determined by their codimension
LABEL_WORDS = {
    ClassLabel(4, 0): "5,4,3,1,6,5,4,2,3,4,5,6",
    ClassLabel(4, 1): "2,4,3,1,6,5,4,2,3,4,5,6",
    ClassLabel(5, 0): "2,4,3,1,5,4,2,3,4,5,6",
    ClassLabel(5, 1): "4,3,1,6,5,4,2,3,4,5,6",
    ClassLabel(6, 0): "4,3,1,5,4,2,3,4,5,6",
    ClassLabel(6, 1): "3,1,6,5,4,2,3,4,5,6",
    ClassLabel(7, 0): "3,1,5,4,2,3,4,5,6",
    ClassLabel(7, 1): "1,6,5,4,2,3,4,5,6",
    ClassLabel(8, 0): "3,1,4,2,3,4,5,6",
    ClassLabel(8, 1): "1,5,4,2,3,4,5,6",
    ClassLabel(8, 2): "6,5,4,2,3,4,5,6",
    ClassLabel(9, 0): "1,4,2,3,4,5,6",
    ClassLabel(9, 1): "5,4,2,3,4,5,6",
    ClassLabel(10, 0): "1,2,3,4,5,6",
    ClassLabel(10, 1): "4,2,3,4,5,6",
    ClassLabel(11, 0): "1,3,4,5,6",
    ClassLabel(11, 1): "2,3,4,5,6",
    ClassLabel(12, 0): "2,4,5,6",
    ClassLabel(12, 1): "3,4,5,6",
}


class QKElement:
    """A Z[q]-combination of Schubert classes: {(q_degree, label): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, ClassLabel], int] = {}
        for key, c in dict(terms or {}).items():
            if key[0] < 0:
                raise ValueError("negative q-degree")
            if c:
                self.terms[key] = c
        for c in self.terms.values():
            if abs(c) > INT64_MAX:
                raise OverflowError("coefficient exceeds the signed 64-bit range")

    @classmethod
    def basis(cls, label: ClassLabel, q: int = 0, coef: int = 1) -> QKElement:
        return cls({(q, label): coef})

    @classmethod
    def one(cls) -> QKElement:
        return cls.basis(UNIT)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QKElement({(0, UNIT): other})
        return isinstance(other, QKElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: QKElement) -> QKElement:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return QKElement(out)

    def __neg__(self) -> QKElement:
        return QKElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: QKElement) -> QKElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> QKElement:
        return QKElement({k: scalar * c for k, c in self.terms.items()})

    def shift(self, q: int) -> QKElement:
        """Multiply by q^q."""
        return QKElement({(d + q, lab): c for (d, lab), c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        """Terms in canonical order (q-degree, codimension, variant)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    @property
    def max_q_degree(self) -> int:
        return max((d for d, _ in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (d, lab), c in self.items():
            parts = []
            if abs(c) != 1 or (d == 0 and lab.is_unit):
                parts.append(str(abs(c)))
            if d:
                parts.append("q" if d == 1 else f"q^{d}")
            if not lab.is_unit:
                parts.append(str(lab))
            body = " ".join(parts)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"QKElement({self})"


_TOKEN = re.compile(r"\s*(?:(?P<label>O(?P<codim>\d+)(?P<primes>'{0,2})(?!'))"
                    r"|(?P<q>q(?:\^(?P<qexp>\d+))?)|(?P<int>\d+)|(?P<op>[-+*=]))")


def _tokenize(text: str, lineno: int = 0) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise TableSyntaxError(f"unexpected character {text[col - 1]!r}", lineno, col)
        col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
        if m.group("label"):
            codim, variant = int(m.group("codim")), len(m.group("primes"))
            try:
                tokens.append(("label", ClassLabel(codim, variant), col))
            except TableError as e:
                where = f"line {lineno}, column {col}" if lineno else f"column {col}"
                raise TableError(f"{where}: {e}") from None
        elif m.group("q"):
            exp = m.group("qexp")
            tokens.append(("q", 1 if exp is None else int(exp), col))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int")), col))
        else:
            tokens.append(("op", m.group("op"), col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


def _parse_terms(tokens, k: int, lineno: int, strict: bool) -> tuple[QKElement, int]:
    terms: dict[tuple[int, ClassLabel], int] = {}
    sign = 1
    if not strict and tokens[k][0] == "op" and tokens[k][1] == "-":
        sign, k = -1, k + 1
    while True:
        kind, val, col = tokens[k]
        coef, qdeg, label = 1, 0, UNIT
        have_int = have_body = False
        if kind == "int":
            coef, have_int, k = val, True, k + 1
        if tokens[k][0] == "q":
            qdeg, have_body, k = tokens[k][1], True, k + 1
        if tokens[k][0] == "label":
            label, have_body, k = tokens[k][1], True, k + 1
        if not have_body and not (have_int and not strict):
            raise TableSyntaxError("expected a term", lineno, tokens[k][2])
        key = (qdeg, label)
        if key in terms and strict:
            raise TableSyntaxError(f"repeated term {label} with q^{qdeg}", lineno, col)
        terms[key] = terms.get(key, 0) + sign * coef
        kind, val, col = tokens[k]
        if kind == "op" and val in "+-":
            sign = 1 if val == "+" else -1
            k += 1
            continue
        return QKElement(terms), k


def parse_label(text: str) -> ClassLabel:
    tokens = _tokenize(text)
    if len(tokens) != 2 or tokens[0][0] != "label":
        raise TableSyntaxError(f"not a class label: {text!r}", 0, 1)
    return tokens[0][1]


def parse_expr(text: str) -> QKElement:
    """Parse an element such as ``2 O4' - q O1`` or ``1``."""
    tokens = _tokenize(text)
    elem, k = _parse_terms(tokens, 0, 0, strict=False)
    if tokens[k][0] != "end":
        raise TableSyntaxError("trailing input", 0, tokens[k][2])
    return elem


def _pair(a: ClassLabel, b: ClassLabel) -> tuple[ClassLabel, ClassLabel]:
    return (a, b) if a >= b else (b, a)


class MultTable:
    """Products of the 26 non-unit classes, one per unordered pair."""

    N_ENTRIES = 351

    def __init__(self, entries: dict[tuple[ClassLabel, ClassLabel], QKElement]):
        self.entries = {_pair(*k): v for k, v in entries.items()}
        self._basis_cache: dict | None = None

    def product(self, a: ClassLabel, b: ClassLabel) -> QKElement:
        if a.is_unit:
            return QKElement.basis(b)
        if b.is_unit:
            return QKElement.basis(a)
        return self.entries[_pair(a, b)]

    def rows(self):
        """(larger label, smaller label, product) in canonical order."""
        for (a, b) in sorted(self.entries, key=lambda p: (p[0], p[1])):
            yield a, b, self.entries[(a, b)]

    def serialize(self) -> str:
        return "".join(f"{a} * {b} = {e}\n" for a, b, e in self.rows())

    def with_entry(self, a: ClassLabel, b: ClassLabel, value: QKElement) -> MultTable:
        entries = dict(self.entries)
        entries[_pair(a, b)] = value
        return MultTable(entries)

    def __eq__(self, other):
        return isinstance(other, MultTable) and self.entries == other.entries

    def _index_table(self):
        """Products as sparse lists over label indices, for the sweeps."""
        if self._basis_cache is None:
            idx = {lab: i for i, lab in enumerate(LABELS)}
            self._basis_cache = [
                [[(d, idx[lab], c) for (d, lab), c in self.product(a, b).terms.items()]
                 for b in LABELS]
                for a in LABELS
            ]
        return self._basis_cache


def parse_table(text: str) -> MultTable:
    entries: dict[tuple[ClassLabel, ClassLabel], QKElement] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = _tokenize(line, lineno)
        shape = [t[0] for t in tokens[:4]]
        if shape != ["label", "op", "label", "op"] or tokens[1][1] != "*" or tokens[3][1] != "=":
            bad = next((t for t, want in zip(tokens, [("label", None), ("op", "*"), ("label", None), ("op", "=")])
                        if t[0] != want[0] or (want[1] and t[1] != want[1])), tokens[-1])
            raise TableSyntaxError("expected 'LABEL * LABEL = EXPR'", lineno, bad[2])
        a, b = tokens[0][1], tokens[2][1]
        if a.is_unit or b.is_unit:
            raise TableSyntaxError("products with the unit class are implicit", lineno, tokens[0][2])
        elem, k = _parse_terms(tokens, 4, lineno, strict=True)
        if tokens[k][0] != "end":
            raise TableSyntaxError("trailing input", lineno, tokens[k][2])
        key = _pair(a, b)
        if key in entries:
            raise TableError(f"line {lineno}: duplicate product {a} * {b}")
        entries[key] = elem
    if len(entries) != MultTable.N_ENTRIES:
        missing = [f"{a} * {b}" for b, a in combinations_with_replacement(LABELS[1:], 2)
                   if (a, b) not in entries]
        raise TableError(f"expected {MultTable.N_ENTRIES} products, found {len(entries)}; "
                         f"missing {', '.join(missing[:5])}")
    return MultTable(entries)


def default_table_path() -> Path:
    """``$COMINQ_TABLE`` if set, else the table shipped with the package."""
    env = os.environ.get("COMINQ_TABLE")
    if env:
        return Path(env)
    return Path(str(resources.files("cominq") / "data" / "qk_e6p6.tbl"))


def load_table(path: str | os.PathLike | None = None) -> MultTable:
    path = default_table_path() if path is None else Path(path)
    return parse_table(path.read_text(encoding="utf-8"))


def multiply(t: MultTable, a: QKElement, b: QKElement) -> QKElement:
    """Bilinear, q-additive extension of the basis products."""
    out: dict[tuple[int, ClassLabel], int] = {}
    for (da, la), ca in a.terms.items():
        for (db, lb), cb in b.terms.items():
            for (d, lab), c in t.product(la, lb).terms.items():
                key = (da + db + d, lab)
                out[key] = out.get(key, 0) + ca * cb * c
    return QKElement(out)


def _times_basis(basis, vec: dict, c: int) -> dict:
    out: dict = {}
    for (d, i), x in vec.items():
        for (e, j, y) in basis[i][c]:
            key = (d + e, j)
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def verify_associativity(t: MultTable) -> Report:
    """(O_a O_b) O_c = O_a (O_b O_c) for all 27^3 ordered triples of classes."""
    basis = t._index_table()
    n = len(LABELS)
    rep = Report()
    worst = 0
    failure = None
    for a in range(n):
        for b in range(n):
            ab = {(d, j): c for d, j, c in basis[a][b]}
            for c in range(n):
                left = _times_basis(basis, ab, c)
                bc = {(d, j): x for d, j, x in basis[b][c]}
                # O_a (O_b O_c) = sum over terms of O_b O_c times O_a
                right: dict = {}
                for (d, j), x in bc.items():
                    for (e, k, y) in basis[j][a]:
                        key = (d + e, k)
                        right[key] = right.get(key, 0) + x * y
                right = {k: v for k, v in right.items() if v}
                worst = max(worst, max((d for d, _ in left), default=0),
                            max((d for d, _ in right), default=0))
                if any(abs(v) > INT64_MAX for v in left.values()):
                    raise OverflowError("coefficient exceeds the signed 64-bit range")
                if left != right and failure is None:
                    failure = (LABELS[a], LABELS[b], LABELS[c], left, right)
    if failure:
        a, b, c, left, right = failure
        detail = {"triple": [str(a), str(b), str(c)],
                  "left": str(QKElement({(d, LABELS[i]): v for (d, i), v in left.items()})),
                  "right": str(QKElement({(d, LABELS[i]): v for (d, i), v in right.items()}))}
    else:
        detail = f"{n ** 3} triples"
    rep.add("associativity", failure is None, detail)
    rep.add("triple_product_degree_le_4", worst <= 4, f"max q-degree {worst}")
    return rep


def verify_degree_bound(t: MultTable, bound: int = 2) -> Report:
    rep = Report()
    top = max(e.max_q_degree for e in t.entries.values())
    rep.add("max_q_degree", top == bound, f"max q-degree {top}, bound {bound}")
    return rep


def infer_index(t: MultTable) -> int:
    """(2 * 16 - codim w) / d from the square of the point class, q^d O_w."""
    top = ClassLabel(TOP_CODIM)
    sq = t.product(top, top)
    if len(sq.terms) != 1:
        raise ValueError(f"square of the point class is not a single term: {sq}")
    ((d, w), _), = sq.terms.items()
    num = 2 * TOP_CODIM - w.codim
    if d <= 0 or num % d:
        raise ValueError(f"non-integral index from {top} * {top} = {sq}")
    return num // d


def index_candidates(t: MultTable) -> list[int | float]:
    """For each q-term, the index that would make it degree-preserving."""
    out = []
    for (a, b), e in t.entries.items():
        for (d, w), _ in e.terms.items():
            if d:
                out.append((a.codim + b.codim - w.codim) / d)
    return out


def verify_codim_sign(t: MultTable, index: int | None = None) -> Report:
    """
    Every term N q^d O_w of O_u O_v has offset
    codim(w) + index*d - codim(u) - codim(v) >= 0 and sign (-1)^offset.
    """
    index = infer_index(t) if index is None else index
    rep = Report()
    bad = []
    for a, b, e in t.rows():
        for (d, w), c in e.items():
            off = w.codim + index * d - a.codim - b.codim
            if off < 0 or (c > 0) != (off % 2 == 0):
                bad.append(f"{a} * {b}: {c} q^{d} {w}")
    rep.add("codim_sign", not bad, bad[0] if bad else f"index {index}")
    rep.add("index_consistency", max(index_candidates(t)) == index)
    return rep


def link_labels(t: MultTable, wp: ParabolicQuotient) -> Report:
    """Match the labelled Weyl words and the label census with the Weyl data of E6/P6."""
    rep = Report()
    rs = wp.root_system
    if (rs.type_label, wp.node) != ("E6", 6):
        raise ValueError("link_labels needs W^P of E6 with node 6")
    elements = {}
    for lab, text in LABEL_WORDS.items():
        word = parse_word(text)
        u = from_word(rs, word)
        ok = (u.length == len(word) and is_min_rep(u, 6)
              and u.length == TOP_CODIM - lab.codim)
        rep.add(f"word {lab}", ok, f"{text} (length {u.length})")
        elements[lab] = u
    rep.add("words_distinct", len(set(elements.values())) == len(elements))
    by_codim = [sum(1 for lab in LABELS if lab.codim == c) for c in range(TOP_CODIM + 1)]
    by_length = wp.ranks()
    census_ok = len(by_length) == TOP_CODIM + 1 and all(
        by_codim[c] == by_length[TOP_CODIM - c] for c in range(TOP_CODIM + 1))
    rep.add("census", census_ok and len(wp) == len(LABELS) == 27,
            f"|W^P| = {len(wp)}, ranks {by_length[::-1]}")
    used = {lab for (a, b), e in t.entries.items() for lab in (a, b)}
    used |= {lab for e in t.entries.values() for (_, lab) in e.terms}
    rep.add("table_labels", used <= set(LABELS))
    return rep
