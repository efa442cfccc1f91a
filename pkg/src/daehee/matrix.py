"""Lower-triangular matrices and sequence tables with polynomial entries."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .combinatorics import (
    binom,
    stirling_first,
    stirling_first_signless,
    stirling_second,
    stirling_second_signed,
)
from .exact import DomainError
from .poly import ONE, ZERO, MultiPoly, parse_poly

MATRIX_KINDS = ("identity", "s1", "s2", "signless", "signed-s2", "pascal", "diag")


class TriMatrix:
    """Dense lower-triangular (n+1)x(n+1) matrix; row i stores entries j = 0..i."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        clean = []
        for i, row in enumerate(rows):
            row = list(row)
            if len(row) > i + 1:
                if any(MultiPoly.coerce(e) != 0 for e in row[i + 1 :]):
                    raise DomainError(f"entry above the diagonal in row {i}")
                row = row[: i + 1]
            if len(row) != i + 1:
                raise ValueError(f"row {i} has {len(row)} entries, expected {i + 1}")
            clean.append(tuple(MultiPoly.coerce(e) for e in row))
        self.rows = tuple(clean)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> MultiPoly:
        i, j = ij
        return self.rows[i][j] if j <= i else ZERO

    def dense(self) -> list[list[MultiPoly]]:
        n = self.dim
        return [[self[i, j] for j in range(n)] for i in range(n)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __matmul__(self, other):
        if isinstance(other, TriMatrix):
            return tri_mul(self, other)
        if isinstance(other, SequenceTable):
            return mat_apply(self, other)
        return NotImplemented

    def is_identity(self) -> bool:
        return self == identity(self.dim - 1)

    def map(self, fn: Callable[[MultiPoly], MultiPoly]) -> TriMatrix:
        return TriMatrix([[fn(e) for e in row] for row in self.rows])

    def __repr__(self) -> str:
        return f"TriMatrix(dim={self.dim})"


def identity(n: int) -> TriMatrix:
    return TriMatrix([[ONE if j == i else ZERO for j in range(i + 1)] for i in range(n + 1)])


def _from_int(fn, n: int) -> TriMatrix:
    return TriMatrix([[MultiPoly.const(fn(i, j)) for j in range(i + 1)] for i in range(n + 1)])


def build_matrix(kind: str, n: int, base=None) -> TriMatrix:
    """Named (n+1)x(n+1) matrix.

    ``pascal`` has entries C(i, j) base^(i-j) (base defaults to x); ``diag``
    is diag(base^i), which gives the Lambda, Lambda_1 and Xi matrices for
    base = lambda, -lambda and xi.
    """
    if n < 0:
        raise ValueError("matrix dimension index must be non-negative")
    if kind == "identity":
        return identity(n)
    if kind == "s1":
        return _from_int(stirling_first, n)
    if kind == "s2":
        return _from_int(stirling_second, n)
    if kind == "signless":
        return _from_int(stirling_first_signless, n)
    if kind == "signed-s2":
        return _from_int(stirling_second_signed, n)
    if kind in ("pascal", "diag"):
        b = MultiPoly.coerce(MultiPoly.var("x") if base is None and kind == "pascal" else base)
        powers = [ONE]
        for _ in range(n):
            powers.append(powers[-1] * b)
        if kind == "pascal":
            return TriMatrix(
                [[powers[i - j] * binom(i, j) for j in range(i + 1)] for i in range(n + 1)]
            )
        return TriMatrix([[powers[i] if j == i else ZERO for j in range(i + 1)] for i in range(n + 1)])
    raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")


def tri_mul(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    rows = []
    for i in range(a.dim):
        row = []
        for j in range(i + 1):
            acc = ZERO
            for m in range(j, i + 1):
                x, y = a.rows[i][m], b.rows[m][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        rows.append(row)
    return TriMatrix(rows)


@dataclass(frozen=True)
class SequenceTable:
    """Grid of values indexed by (n, k) for n = 0..n_max, k = 0..k_max.

    ``bindings`` records the parameter values (x, lambda, xi) that were
    substituted; symbols absent from it are symbolic in the entries.
    """

    family: str
    grid: tuple
    bindings: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        rows = tuple(tuple(MultiPoly.coerce(e) for e in row) for row in self.grid)
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("a sequence table must be a non-empty rectangular grid")
        object.__setattr__(self, "grid", rows)
        object.__setattr__(self, "bindings", dict(sorted(self.bindings.items())))

    @property
    def n_max(self) -> int:
        return len(self.grid) - 1

    @property
    def k_max(self) -> int:
        return len(self.grid[0]) - 1

    def __getitem__(self, nk) -> MultiPoly:
        n, k = nk
        return self.grid[n][k]

    def column(self, k: int) -> list[MultiPoly]:
        return [row[k] for row in self.grid]

    def map(self, fn: Callable[[MultiPoly], MultiPoly], family: str | None = None) -> SequenceTable:
        return SequenceTable(
            family or self.family, [[fn(e) for e in row] for row in self.grid], self.bindings
        )

    def map_rows(self, fn: Callable[[int, MultiPoly], MultiPoly], family: str | None = None) -> SequenceTable:
        """Apply ``fn(n, entry)`` to every entry."""
        return SequenceTable(
            family or self.family,
            [[fn(n, e) for e in row] for n, row in enumerate(self.grid)],
            self.bindings,
        )

    def evaluate(self, bindings: Mapping[str, Fraction]) -> SequenceTable:
        if not bindings:
            return self
        merged = {**self.bindings, **bindings}
        return SequenceTable(
            self.family, [[e.evaluate(bindings) for e in row] for row in self.grid], merged
        )

    def same_entries(self, other: SequenceTable) -> bool:
        return self.grid == other.grid

    def mismatches(self, other: SequenceTable) -> list[tuple[int, int]]:
        if (self.n_max, self.k_max) != (other.n_max, other.k_max):
            raise ValueError("tables have different shapes")
        return [
            (n, k)
            for n in range(self.n_max + 1)
            for k in range(self.k_max + 1)
            if self.grid[n][k] != other.grid[n][k]
        ]

    @classmethod
    def from_strings(cls, family: str, rows, bindings=None) -> SequenceTable:
        return cls(family, [[parse_poly(s) for s in row] for row in rows], bindings or {})


def mat_apply(a: TriMatrix, table: SequenceTable, family: str | None = None) -> SequenceTable:
    """Column-wise product A @ T."""
    if a.dim != table.n_max + 1:
        raise ValueError(f"matrix dimension {a.dim} does not match table rows {table.n_max + 1}")
    grid = []
    for i in range(a.dim):
        row = []
        for k in range(table.k_max + 1):
            acc = ZERO
            for m in range(i + 1):
                c, e = a.rows[i][m], table.grid[m][k]
                if c and e:
                    acc = acc + c * e
            row.append(acc)
        grid.append(row)
    return SequenceTable(family or table.family, grid, table.bindings)
