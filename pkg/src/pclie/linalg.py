"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always stored in lowest terms with a
positive denominator).  Matrices are small immutable dense row-major arrays.
Vectors are plain tuples of Fractions and are treated as *row* vectors
throughout: a "kernel" here is always the left kernel ``{x : x @ m = 0}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple  # tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^-?\d+(/\d+)?$")


class LinalgError(ValueError):
    pass


def parse_scalar(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Plain ints are accepted too."""
    if isinstance(text, bool):
        raise LinalgError(f"not a scalar: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _SCALAR_RE.match(text.strip()):
        raise LinalgError(f"not a scalar: {text!r}")
    value = Fraction(text.strip())
    return value


def format_scalar(x) -> str:
    return str(Fraction(x))


def to_vec(values: Iterable) -> Vec:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, k: int) -> Vec:
    return tuple(Fraction(int(i == k)) for i in range(n))


def is_zero_vec(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def vec_add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> Vec:
    return tuple(c * a for a in v)


def vec_dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class Mat:
    """Dense rational matrix, row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise LinalgError(
                f"entries length {len(self.entries)} != {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise LinalgError("column count needed for a matrix with no rows")
            cols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise LinalgError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vec:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vec:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def tolist(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Mat":
        return Mat.from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise LinalgError(f"shape mismatch {self.rows}x{self.cols} @ "
                              f"{other.rows}x{other.cols}")
        cols = [other.col(j) for j in range(other.cols)]
        return Mat.from_rows(
            [[vec_dot(self.row(i), c) for c in cols] for i in range(self.rows)],
            other.cols)

    def vecmul(self, v: Sequence) -> Vec:
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise LinalgError("vector length does not match row count")
        return tuple(vec_dot(v, self.col(j)) for j in range(self.cols))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def delete(self, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> "Mat":
        rows, cols = set(rows), set(cols)
        keep_c = [j for j in range(self.cols) if j not in cols]
        return Mat.from_rows(
            [[self[i, j] for j in keep_c] for i in range(self.rows) if i not in rows],
            len(keep_c))

    def to_strings(self) -> list:
        return [[format_scalar(x) for x in r] for r in self.tolist()]

    @classmethod
    def from_strings(cls, rows, cols: int | None = None) -> "Mat":
        return cls.from_rows([[parse_scalar(x) for x in r] for r in rows], cols)

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(format_scalar(x) for x in r) + "]" for r in self.tolist()) + "]"


def _rref_rows(rows: list, ncols: int) -> tuple:
    """In-place Gauss-Jordan on a list of lists of Fractions."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Mat) -> tuple:
    """Reduced row echelon form and the list of pivot columns.

    Pivot search is leftmost column first, first nonzero row at or below the
    current pivot row, so the result is fully deterministic.
    """
    rows, pivots = _rref_rows([list(m.row(i)) for i in range(m.rows)], m.cols)
    return Mat.from_rows(rows, m.cols), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def vectors_rank(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors:
        return 0
    return len(_rref_rows([list(v) for v in vectors], dim)[1])


def kernel_basis(m: Mat) -> list:
    """Basis of the left kernel ``{x : x @ m = 0}``, one vector per free column
    of ``rref(m.T)``."""
    t = m.T
    red, pivots = rref(t)
    free = [c for c in range(t.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * t.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(tuple(v))
    return basis


def rowspace_basis(vectors: Sequence[Sequence], dim: int) -> list:
    """Nonzero rows of the rref of the stacked vectors."""
    if not vectors:
        return []
    rows, pivots = _rref_rows([list(v) for v in vectors], dim)
    return [tuple(rows[i]) for i in range(len(pivots))]


def complement_basis(vectors: Sequence[Sequence], dim: int) -> list:
    """Standard basis vectors for the non-pivot coordinates of the stacked input.

    Together with the input they form a basis of Q^dim.
    """
    for v in vectors:
        if len(v) != dim:
            raise LinalgError(f"vector of length {len(v)} in ambient dimension {dim}")
    pivots = []
    if vectors:
        _, pivots = _rref_rows([list(v) for v in vectors], dim)
    if len(pivots) != len(vectors):
        raise LinalgError("not independent")
    return [unit_vec(dim, k) for k in range(dim) if k not in pivots]


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise LinalgError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise LinalgError("singular matrix")
    return Mat.from_rows([r[n:] for r in rows], n)


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if is_zero_vec(v):
        return True
    dim = len(v)
    return vectors_rank(list(basis) + [v], dim) == vectors_rank(basis, dim)


class SpanCoordinates:
    """Coordinates with respect to a fixed list of independent vectors.

    Pick pivot columns of the basis once and invert the square submatrix
    there; every later query is then a single vector-matrix product.
    """

    def __init__(self, basis: Sequence[Sequence], dim: int):
        self.basis = [tuple(Fraction(x) for x in b) for b in basis]
        self.dim = dim
        k = len(self.basis)
        if k == 0:
            self._pivots, self._inv = [], None
            return
        _, pivots = _rref_rows([list(b) for b in self.basis], dim)
        if len(pivots) != k:
            raise LinalgError("not independent")
        self._pivots = pivots
        sub = Mat.from_rows([[b[p] for p in pivots] for b in self.basis], k)
        self._inv = inverse(sub)

    def coords(self, v: Sequence, check: bool = True) -> Vec:
        if not self.basis:
            if check and not is_zero_vec(v):
                raise LinalgError("vector not in span")
            return ()
        c = self._inv.vecmul([v[p] for p in self._pivots])
        if check:
            back = [Fraction(0)] * self.dim
            for ci, b in zip(c, self.basis):
                if ci:
                    for t in range(self.dim):
                        back[t] += ci * b[t]
            if any(x != y for x, y in zip(back, v)):
                raise LinalgError("vector not in span")
        return c


class IncrementalBasis:
    """Greedy basis extraction: keep a vector iff it is independent of the
    vectors kept so far."""

    def __init__(self, dim: int):
        self.dim = dim
        self.kept: list = []
        self._echelon: list = []  # (pivot column, normalized row)

    def _reduce(self, v):
        w = list(v)
        for p, row in self._echelon:
            f = w[p]
            if f != 0:
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def add(self, v: Sequence) -> bool:
        w = self._reduce(v)
        p = next((i for i, x in enumerate(w) if x != 0), None)
        if p is None:
            return False
        piv = w[p]
        w = [x / piv for x in w]
        # keep rows fully reduced against the new pivot
        self._echelon = [
            (q, [a - r[p] * b for a, b in zip(r, w)] if r[p] != 0 else r)
            for q, r in self._echelon]
        self._echelon.append((p, w))
        self.kept.append(tuple(Fraction(x) for x in v))
        return True
