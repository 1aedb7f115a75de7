"""Boundary-form matrices, exact rank/determinant, and the structural checks.

The matrix for a selection of r Legendre polynomials and s second-kind
functions is the (r+s) x (r+s) table of brackets, P-block first.  All rank
and determinant decisions use fraction-free (Bareiss) elimination over the
integers after clearing row denominators, so there is no rounding anywhere
and no magnitude wall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .brackets import bracket
from .classical import ClassicalFunction
from .exactnum import rational_str

__all__ = [
    "IndexSelection",
    "BracketMatrix",
    "canonical_selection",
    "build_matrix",
    "b_block",
    "c_block",
    "rank_exact",
    "det_exact",
    "is_li_mod_dmin",
    "parity_census",
    "glazman_symmetry_check",
]


@dataclass(frozen=True)
class IndexSelection:
    """Chosen P-indices and Q-indices defining candidate GKN conditions."""

    p_indices: tuple[int, ...]
    q_indices: tuple[int, ...]
    power: int

    def __post_init__(self):
        object.__setattr__(self, "p_indices", tuple(self.p_indices))
        object.__setattr__(self, "q_indices", tuple(self.q_indices))
        if self.power < 1:
            raise ValueError("power must be >= 1")
        for name, idx in (("p_indices", self.p_indices), ("q_indices", self.q_indices)):
            if any(i < 0 for i in idx):
                raise ValueError(f"{name}: indices must be >= 0")
            if list(idx) != sorted(set(idx)):
                raise ValueError(f"{name}: indices must be strictly increasing")

    @property
    def labels(self) -> tuple[ClassicalFunction, ...]:
        return tuple(
            [ClassicalFunction("P", i) for i in self.p_indices]
            + [ClassicalFunction("Q", i) for i in self.q_indices]
        )

    def key(self) -> str:
        p = ",".join(map(str, self.p_indices))
        q = ",".join(map(str, self.q_indices))
        return f"n={self.power};P={p};Q={q}"


def canonical_selection(n: int) -> IndexSelection:
    """The canonical choice: P_0..P_{n-1} with Q_0..Q_{n-1} (even n) or
    Q_1..Q_n (odd n)."""
    if n < 1:
        raise ValueError("canonical_selection: n must be >= 1")
    p = tuple(range(n))
    q = tuple(range(n)) if n % 2 == 0 else tuple(range(1, n + 1))
    return IndexSelection(p, q, n)


@dataclass(frozen=True)
class BracketMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    labels: tuple[ClassicalFunction, ...]
    power: int

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "power": self.power,
            "labels": [str(l) for l in self.labels],
            "entries": [[rational_str(e) for e in row] for row in self.entries],
        }

    def to_csv(self) -> str:
        lines = [",".join(rational_str(e) for e in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        cells = [[rational_str(e) for e in row] for row in self.entries]
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        return "\n".join(
            "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells
        )


def build_matrix(sel: IndexSelection) -> BracketMatrix:
    """Populate the full bracket matrix for a selection, P-block first."""
    labels = sel.labels
    entries = tuple(
        tuple(bracket(f, g, sel.power) for g in labels) for f in labels
    )
    return BracketMatrix(entries, labels, sel.power)


def b_block(sel: IndexSelection) -> list[list[Fraction]]:
    """The P-vs-Q (upper right) block."""
    n = sel.power
    ps = [ClassicalFunction("P", i) for i in sel.p_indices]
    qs = [ClassicalFunction("Q", i) for i in sel.q_indices]
    return [[bracket(p, q, n) for q in qs] for p in ps]


def c_block(sel: IndexSelection) -> list[list[Fraction]]:
    """The Q-vs-Q (lower right) block."""
    n = sel.power
    qs = [ClassicalFunction("Q", i) for i in sel.q_indices]
    return [[bracket(a, b, n) for b in qs] for a in qs]


def _integer_rows(matrix) -> list[list[int]]:
    """Clear denominators row by row; preserves rank."""
    out = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        mult = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def rank_exact(matrix) -> int:
    """Exact rank via Bareiss fraction-free elimination over the integers."""
    m = _integer_rows(matrix)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pivot = m[row][col]
        for r in range(row + 1, nrows):
            factor = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (pivot * m[r][c] - factor * m[row][c]) // prev
            m[r][col] = 0
        prev = pivot
        row += 1
    return row


def det_exact(matrix) -> Fraction:
    """Exact determinant of a square rational matrix (fraction-free)."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("det_exact: matrix must be square")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in rows:
        mult = math.lcm(*(x.denominator for x in row))
        scale *= mult
        m.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col]
            for c in range(col + 1, n):
                m[r][c] = (pivot * m[r][c] - factor * m[col][c]) // prev
            m[r][col] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1]) / scale


def is_li_mod_dmin(sel: IndexSelection) -> bool:
    """Rank-certified linear independence modulo the minimal domain.

    True means the full bracket matrix has full rank, which is sufficient for
    independence.  False is not a certificate of dependence: the rank test is
    sufficient but not necessary.
    """
    m = build_matrix(sel)
    return rank_exact(m.entries) == m.size


def parity_census(sel: IndexSelection) -> tuple[int, int]:
    """(evens, odds) over the union of P- and Q-indices, with multiplicity."""
    idx = list(sel.p_indices) + list(sel.q_indices)
    evens = sum(1 for i in idx if i % 2 == 0)
    return evens, len(idx) - evens


def glazman_symmetry_check(functions, n: int) -> bool:
    """True iff all pairwise brackets among the proposed GKN set vanish."""
    fs = list(functions)
    for i, f in enumerate(fs):
        for g in fs[i + 1 :]:
            if bracket(f, g, n) != 0:
                return False
    return True
