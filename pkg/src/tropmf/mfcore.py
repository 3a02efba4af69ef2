"""Matching fields on 3-row weight matrices, with exact arithmetic.

A weight matrix is a 3 x n grid of rationals.  For a 3-subset of columns
{i1 < i2 < i3} there are six ways to place the three columns into the
three rows; the weight of a placement (c1, c2, c3) is the row-1 entry of
column c1 plus the row-2 entry of column c2 plus the row-3 entry of
column c3.  When the minimum weight placement is unique it is the
induced tableau of the subset, and the map from all subsets to their
tableaux is the induced matching field.

All values are `fractions.Fraction` and every comparison is a rational
comparison; nothing in this module (or anywhere else in the package)
decides anything in floating point.  Column indices are 1-based
throughout the public API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

Triple = tuple[int, int, int]
Tableau = tuple[int, int, int]


class BadSize(ValueError):
    """A size parameter is out of range (e.g. fewer than 3 columns)."""


class SizeMismatch(ValueError):
    """Two objects that must share a column count do not."""


class TieError(ValueError):
    """The minimum placement weight of a triple is attained twice."""

    def __init__(self, triple: Triple):
        self.triple = triple
        super().__init__("tie at triple %d %d %d" % triple)


@dataclass(frozen=True)
class WeightMatrix:
    """A 3 x n matrix of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "WeightMatrix":
        """Build from any 3 iterables of Fraction-coercible values."""
        converted = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len(converted) != 3:
            raise BadSize("a weight matrix has exactly 3 rows")
        width = len(converted[0])
        if width < 2 or any(len(r) != width for r in converted):
            raise BadSize("rows must have equal length >= 2")
        return cls(converted)

    def entry(self, r: int, c: int) -> Fraction:
        """Entry in row r, column c (both 1-based)."""
        return self.rows[r - 1][c - 1]

    def with_entry(self, r: int, c: int, value) -> "WeightMatrix":
        """Copy of the matrix with one entry replaced."""
        rows = [list(row) for row in self.rows]
        rows[r - 1][c - 1] = Fraction(value)
        return WeightMatrix(tuple(tuple(row) for row in rows))

    @property
    def is_normalized(self) -> bool:
        return all(x == 0 for x in self.rows[0])


@dataclass(frozen=True)
class MatchingField:
    """A total map from the 3-subsets of [n] to tableaux."""

    n: int
    assignment: dict

    def tableau(self, triple: Triple) -> Tableau:
        return self.assignment[triple]

    def __getitem__(self, triple: Triple) -> Tableau:
        return self.assignment[triple]

    def items(self):
        return sorted(self.assignment.items())


@dataclass(frozen=True)
class GenericityReport:
    """Outcome of the unique-minimum check, per triple."""

    ok: bool
    offending: tuple[Triple, ...]


def triples(n: int) -> Iterator[Triple]:
    """All 3-subsets of columns 1..n in lexicographic order."""
    return itertools.combinations(range(1, n + 1), 3)


def check_triple(triple: Triple, n: int) -> Triple:
    i1, i2, i3 = triple
    if not (1 <= i1 < i2 < i3 <= n):
        raise BadSize("not a strictly increasing triple in [1, %d]: %r" % (n, (i1, i2, i3)))
    return (i1, i2, i3)


def placement_weight(M: WeightMatrix, tab: Tableau) -> Fraction:
    """Weight of placing column tab[t] into row t+1, for t = 0, 1, 2."""
    r = M.rows
    return r[0][tab[0] - 1] + r[1][tab[1] - 1] + r[2][tab[2] - 1]


def _minimum_placements(M: WeightMatrix, triple: Triple):
    best = None
    winners = []
    for tab in itertools.permutations(triple):
        w = placement_weight(M, tab)
        if best is None or w < best:
            best, winners = w, [tab]
        elif w == best:
            winners.append(tab)
    return best, winners


def normalize(M: WeightMatrix) -> WeightMatrix:
    """Shift each column so the first row is zero.

    Subtracting a constant from a whole column shifts all six placement
    weights of every triple containing that column by the same amount,
    so the induced matching field is unchanged.
    """
    rows = ([Fraction(0)] * M.n,
            [M.rows[1][c] - M.rows[0][c] for c in range(M.n)],
            [M.rows[2][c] - M.rows[0][c] for c in range(M.n)])
    return WeightMatrix(tuple(tuple(r) for r in rows))


def genericity(M: WeightMatrix) -> GenericityReport:
    """Report whether every triple has a unique minimum-weight placement."""
    offending = []
    for T in triples(M.n):
        _, winners = _minimum_placements(M, T)
        if len(winners) != 1:
            offending.append(T)
    return GenericityReport(ok=not offending, offending=tuple(offending))


def induce(M: WeightMatrix) -> MatchingField:
    """The matching field induced by M (raises TieError on any tie)."""
    assignment = {}
    for T in triples(M.n):
        _, winners = _minimum_placements(M, T)
        if len(winners) != 1:
            raise TieError(T)
        assignment[T] = winners[0]
    return MatchingField(M.n, assignment)


def plucker_weights(M: WeightMatrix) -> dict:
    """Minimum placement weight of every triple (ties allowed)."""
    return {T: _minimum_placements(M, T)[0] for T in triples(M.n)}


def diagonal(n: int) -> MatchingField:
    """The field sending every triple (i < j < k) to the tableau (i, j, k)."""
    if n < 3:
        raise BadSize("need n >= 3")
    return MatchingField(n, {T: T for T in triples(n)})


def block_diagonal(n: int, ell: int) -> MatchingField:
    """Identity tableaux, except a first/second row swap when exactly one
    column of the triple lies in {1, .., ell}."""
    if n < 3 or not 0 <= ell <= n:
        raise BadSize("need n >= 3 and 0 <= ell <= n")
    assignment = {}
    for T in triples(n):
        i1, i2, i3 = T
        inside = sum(1 for c in T if c <= ell)
        assignment[T] = (i2, i1, i3) if inside == 1 else T
    return MatchingField(n, assignment)


def block_diagonal_weights(n: int, ell: int) -> WeightMatrix:
    """A normalized weight matrix inducing block_diagonal(n, ell).

    Row 3 uses gaps of n*n, which exceed the row-2 spread (< n), so the
    largest column of any triple is forced into row 3; row 2 then ranks
    the leading block {1..ell} strictly below the rest, which reproduces
    the first/second row swap exactly when one column is in the block.
    """
    if n < 3 or not 0 <= ell <= n:
        raise BadSize("need n >= 3 and 0 <= ell <= n")
    row2 = list(range(ell, 0, -1)) + list(range(n, ell, -1))
    big = n * n
    row3 = [big * (n - c) for c in range(n)]
    return WeightMatrix.from_rows([[0] * n, row2, row3])


def tableau_sign(tab: Tableau) -> int:
    """Parity (+1 or -1) of the rearrangement from the sorted triple."""
    order = sorted(tab)
    perm = [order.index(x) for x in tab]
    inversions = sum(1 for a in range(3) for b in range(a + 1, 3)
                     if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def mf_diff(A: MatchingField, B: MatchingField) -> list:
    """Triples where two fields disagree, with both tableaux, in lex order."""
    if A.n != B.n:
        raise SizeMismatch("fields on %d and %d columns" % (A.n, B.n))
    out = []
    for T in triples(A.n):
        if A.assignment[T] != B.assignment[T]:
            out.append((T, A.assignment[T], B.assignment[T]))
    return out


# ---------------------------------------------------------------------------
# file formats

def weight_matrix_to_text(M: WeightMatrix) -> str:
    """Serialize: a "3 n" header line, then the three rows of rationals."""
    lines = ["3 %d" % M.n]
    for row in M.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def weight_matrix_from_text(text: str) -> WeightMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 4:
        raise ValueError("expected a header line and 3 rows")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "3":
        raise ValueError("header must be '3 n'")
    n = int(header[1])
    rows = []
    for ln in lines[1:]:
        row = [Fraction(tok) for tok in ln.split()]
        if len(row) != n:
            raise ValueError("row has %d entries, expected %d" % (len(row), n))
        rows.append(row)
    return WeightMatrix.from_rows(rows)


def matching_field_to_text(L: MatchingField) -> str:
    """One line per triple: "i1 i2 i3 : c1 c2 c3", lexicographic order."""
    lines = []
    for T, tab in L.items():
        lines.append("%d %d %d : %d %d %d" % (T + tab))
    return "\n".join(lines) + "\n"


def matching_field_from_text(text: str) -> MatchingField:
    assignment = {}
    n = 0
    for ln in text.splitlines():
        if not ln.strip():
            continue
        left, _, right = ln.partition(":")
        T = tuple(int(t) for t in left.split())
        tab = tuple(int(t) for t in right.split())
        if len(T) != 3 or len(tab) != 3:
            raise ValueError("malformed line: %r" % ln)
        assignment[T] = tab
        n = max(n, T[2])
    field = MatchingField(n, assignment)
    for T in triples(n):
        if T not in assignment:
            raise ValueError("missing triple %r" % (T,))
        if tuple(sorted(assignment[T])) != T:
            raise ValueError("tableau %r is not a permutation of %r" % (assignment[T], T))
    return field
