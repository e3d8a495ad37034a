"""Exact integer matrices, Smith normal form and abelian group presentations.

Everything here works over Python's arbitrary-precision ``int``; nothing is
ever converted to floating point.  The main entry points are

    smith_normal_form(m)  -> SmithDecomposition with u @ m @ v == d
    kernel_basis(m)       -> integer basis of {x : m x = 0}
    cokernel(m)           -> AbelianGroup  Z^rows / image(m)

and ``elementary_divisors_oracle``, a deliberately slow gcd-of-minors
computation used to cross-check the Smith form in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "AbelianGroup",
    "smith_normal_form",
    "elementary_divisors_oracle",
    "kernel_basis",
    "cokernel",
    "group_pretty",
    "rational_rank",
    "determinant",
    "parse_matrix",
    "format_matrix",
    "MatrixFormatError",
]

ORACLE_MAX_DIM = 8


class MatrixFormatError(ValueError):
    """Raised for malformed matrix text."""


class IntMatrix:
    """Dense immutable matrix of Python integers, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int] = ()):
        entries = tuple(entries)
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if not entries and rows * cols:
            entries = (0,) * (rows * cols)
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build from nested rows.  ``cols`` is needed only when there are no rows."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(diag):
            out[i][i] = x
        return cls.from_rows(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for shape {self.shape}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(row_idx), len(col_idx),
                         [self[i, j] for i in row_idx for j in col_idx])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
        return IntMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} does not match {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}, {self.cols}, {list(self.entries)!r})"

    def is_diagonal(self) -> bool:
        return all(x == 0 for k, x in enumerate(self.entries) if k // self.cols != k % self.cols)


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free determinant of a square matrix."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def rational_rank(m: IntMatrix) -> int:
    """Rank over Q by Gaussian elimination on Fractions.

    Independent of the Smith normal form code path; tests use it as a
    second opinion on ``SmithDecomposition.rank``.
    """
    a = [[Fraction(x) for x in r] for r in m.tolist()]
    rank = 0
    for j in range(m.cols):
        piv = next((i for i in range(rank, m.rows) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, m.rows):
            if a[i][j]:
                f = a[i][j] / a[rank][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class SmithDecomposition:
    """``u @ m @ v == d`` with ``u``, ``v`` unimodular and ``d`` in Smith form."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    rank: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i, i] for i in range(min(self.d.rows, self.d.cols)))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """The nonzero diagonal entries (including 1s)."""
        return self.diagonal[:self.rank]

    def verify(self, m: IntMatrix) -> bool:
        """Check every structural invariant against the source matrix ``m``."""
        if self.u @ m @ self.v != self.d:
            return False
        if abs(determinant(self.u)) != 1 or abs(determinant(self.v)) != 1:
            return False
        if not self.d.is_diagonal():
            return False
        diag = self.diagonal
        if any(x <= 0 for x in diag[:self.rank]) or any(x != 0 for x in diag[self.rank:]):
            return False
        return all(diag[i + 1] % diag[i] == 0 for i in range(self.rank - 1))


def _find_pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    # minimal |entry| in the working block, ties broken by (row, col)
    best = None
    best_val = 0
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best_val):
                best, best_val = (i, j), abs(x)
                if best_val == 1:
                    return best
    return best


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form of an integer matrix with unimodular witnesses.

    Row operations are accumulated into ``u`` and column operations into
    ``v`` so that ``u @ m @ v == d``.  The pivot at each stage is the entry
    of least absolute value in the remaining block, so the output is fully
    deterministic.  Diagonal entries are non-negative and each divides the
    next.
    """
    nr, nc = m.rows, m.cols
    a = m.tolist()
    u = IntMatrix.identity(nr).tolist()
    v = IntMatrix.identity(nc).tolist()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, f):
        # row[dst] += f * row[src]
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    t = 0
    while t < min(nr, nc):
        piv = _find_pivot(a, t)
        if piv is None:
            break
        while True:
            i, j = piv
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # leftover remainders are strictly smaller than |p|; re-pivot on them
            rest = [(i, t) for i in range(t + 1, nr) if a[i][t]]
            rest += [(t, j) for j in range(t + 1, nc) if a[t][j]]
            if rest:
                piv = min(rest, key=lambda ij: (abs(a[ij[0]][ij[1]]), ij))
                continue
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is None:
                break
            # pull a non-multiple into the pivot row; the next pass leaves a smaller remainder
            add_row(t, bad[0], 1)
            piv = (t, t)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    d = IntMatrix.from_rows(a, nc)
    return SmithDecomposition(
        u=IntMatrix.from_rows(u, nr),
        d=d,
        v=IntMatrix.from_rows(v, nc),
        rank=t,
    )


def elementary_divisors_oracle(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors from gcds of minors: d_k = g_k / g_{k-1}.

    ``g_k`` is the gcd of all k x k minors.  Stops at the first k whose
    minors all vanish.  Exponential in the matrix size, hence the guard.
    """
    if m.rows > ORACLE_MAX_DIM or m.cols > ORACLE_MAX_DIM:
        raise ValueError(
            f"oracle limited to {ORACLE_MAX_DIM}x{ORACLE_MAX_DIM}, got {m.rows}x{m.cols}"
        )
    out = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for ri in combinations(range(m.rows), k):
            for ci in combinations(range(m.cols), k):
                g = gcd(g, determinant(m.submatrix(ri, ci)))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return tuple(out)


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A Z-basis of the integer kernel of ``m``: the trailing columns of ``v``."""
    snf = smith_normal_form(m)
    return [snf.v.column(j) for j in range(snf.rank, m.cols)]


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank (+) Z_{t1} (+) ... with t1 | t2 | ... and every t_i >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for x in self.torsion:
            if x < 2:
                raise ValueError(f"invariant factors must be >= 2, got {x}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisibility chain: {self.torsion}")

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank, ())

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Direct sum of Z_n for each n; n = 0 means Z, and Z_n = Z_|n|.

        The summands need not be in invariant-factor form; they are
        normalised through the Smith form of the diagonal relation matrix.
        """
        orders = [abs(n) for n in orders]
        return cokernel(IntMatrix.diagonal(orders))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        return group_pretty(self)

    def to_dict(self) -> dict:
        return {"text": group_pretty(self), "free_rank": self.free_rank,
                "torsion": list(self.torsion)}


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Z^rows / image(m) in invariant-factor form."""
    snf = smith_normal_form(m)
    factors = snf.invariant_factors
    return AbelianGroup(m.rows - snf.rank, tuple(x for x in factors if x > 1))


def group_pretty(g: AbelianGroup) -> str:
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z_{d}" for d in g.torsion)
    return " (+) ".join(parts) if parts else "0"


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``rows cols`` followed by ``rows`` lines of integers."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(k + 1, ln) for k, ln in enumerate(lines) if ln]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    lineno, header = lines[0]
    try:
        rows, cols = (int(x) for x in header.split())
    except ValueError:
        raise MatrixFormatError(f"line {lineno}: expected 'rows cols', got {header!r}") from None
    if rows < 0 or cols < 0:
        raise MatrixFormatError(f"line {lineno}: negative dimension")
    body = lines[1:]
    # a matrix with zero columns has rows that are blank, hence dropped above
    if cols == 0:
        if body:
            raise MatrixFormatError(f"line {body[0][0]}: unexpected data for a {rows}x0 matrix")
        return IntMatrix(rows, 0)
    if len(body) != rows:
        raise MatrixFormatError(f"expected {rows} rows of data, found {len(body)}")
    entries = []
    for lineno, ln in body:
        try:
            vals = [int(x) for x in ln.split()]
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: non-integer entry in {ln!r}") from None
        if len(vals) != cols:
            raise MatrixFormatError(f"line {lineno}: expected {cols} entries, found {len(vals)}")
        entries.extend(vals)
    return IntMatrix(rows, cols, entries)


def format_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"
