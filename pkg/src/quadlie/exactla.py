"""Exact linear algebra over the rational numbers.

Vectors are tuples of ``fractions.Fraction``; matrices are immutable dense
row tuples.  Subspaces are kept in reduced row-echelon form so that set
equality is literal equality of basis matrices.  Everything is exact: no
tolerances, no floats.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, str]
Vector = tuple

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")


def rat(x: Scalar) -> Fraction:
    """Coerce an int, Fraction, or canonical string to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def parse_rational(text: str) -> Fraction:
    """Parse the interchange form ``p`` or ``p/q`` (q > 0, gcd(|p|, q) = 1)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    if format_rational(value) != text:
        raise ValueError(f"rational literal not in canonical form: {text!r}")
    return value


def format_rational(value: Fraction) -> str:
    """Format as ``p`` or ``p/q`` with q > 0 and gcd(|p|, q) = 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(rat(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def add_vec(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise ValueError("vector length mismatch")
    return tuple(a + b for a, b in zip(x, y))


def sub_vec(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise ValueError("vector length mismatch")
    return tuple(a - b for a, b in zip(x, y))


def scale_vec(c: Scalar, x: Vector) -> Vector:
    c = rat(c)
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> Fraction:
    if len(x) != len(y):
        raise ValueError("vector length mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def is_zero_vec(x: Vector) -> bool:
    return all(a == 0 for a in x)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of rationals.

    ``rows`` is a tuple of row tuples.  The column count is stored
    explicitly so that 0-row matrices keep their shape.
    """

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Scalar]], ncols: Optional[int] = None):
        normalized = tuple(tuple(rat(x) for x in row) for row in rows)
        if normalized:
            widths = {len(row) for row in normalized}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", normalized)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([zero_vector(ncols)] * nrows, ncols)

    @classmethod
    def diagonal(cls, entries: Iterable[Scalar]) -> "Matrix":
        diag = [rat(x) for x in entries]
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], nrows: Optional[int] = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [add_vec(r, s) for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [sub_vec(r, s) for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "Matrix":
        c = rat(c)
        return Matrix([[c * x for x in row] for row in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimension mismatch")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(
            [[dot(row, col) for col in cols] for row in self.rows], other.ncols
        )

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix-vector product with ``v`` as a column vector."""
        v = vector(v)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(dot(row, v) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(
            [self.column(j) for j in range(self.ncols)], self.nrows
        )

    def stack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.rows + other.rows, self.ncols)

    def rref(self) -> tuple:
        """Reduced row echelon form.

        Returns ``(R, pivots)`` where ``pivots`` is the tuple of pivot
        column indices.  Zero rows are kept (callers drop them as needed).
        """
        rows = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            pivot_row = None
            for i in range(r, nr):
                if rows[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            pv = rows[r][c]
            if pv != 1:
                rows[r] = [x / pv for x in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(rows, nc), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        rows = [list(r) for r in self.rows]
        result = Fraction(1)
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if rows[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                result = -result
            pv = rows[c][c]
            result *= pv
            inv = 1 / pv
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return result

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.det() != 0

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        augmented = Matrix(
            [self.rows[i] + Matrix.identity(n).rows[i] for i in range(n)], 2 * n
        )
        reduced, pivots = augmented.rref()
        if pivots != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in reduced.rows], n)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose()

    def is_skew_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == -self.transpose()

    def is_zero(self) -> bool:
        return all(is_zero_vec(row) for row in self.rows)

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def flatten(self) -> Vector:
        return tuple(x for row in self.rows for x in row)


def solve(A: Matrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """Solve ``A x = b`` exactly; returns None when inconsistent.

    With free variables present, the particular solution with all free
    coordinates zero is returned (deterministic).
    """
    b = vector(b)
    if len(b) != A.nrows:
        raise ValueError("right-hand side length mismatch")
    augmented = Matrix([row + (bi,) for row, bi in zip(A.rows, b)], A.ncols + 1)
    if A.nrows == 0:
        return zero_vector(A.ncols)
    reduced, pivots = augmented.rref()
    if pivots and pivots[-1] == A.ncols:
        return None
    x = list(zero_vector(A.ncols))
    for r, c in enumerate(pivots):
        x[c] = reduced.rows[r][A.ncols]
    return tuple(x)


def kernel(A: Matrix) -> "Subspace":
    """Null space {x : A x = 0} as a Subspace of the column space."""
    reduced, pivots = A.rref()
    pivot_set = set(pivots)
    free = [c for c in range(A.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * A.ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced.rows[r][f]
        basis.append(tuple(v))
    return Subspace.from_vectors(A.ncols, basis)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A linear subspace of QQ^n, canonically represented by an rref basis.

    Two subspaces are equal iff their ambient dimensions agree and their
    row-reduced basis matrices are identical.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix):
        if basis.ncols != ambient_dim:
            raise ValueError("basis width does not match ambient dimension")
        reduced, pivots = basis.rref()
        rows = reduced.rows[: len(pivots)]
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", Matrix(rows, ambient_dim))
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        rows = [vector(v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        return cls(ambient_dim, Matrix(rows, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix([], ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def vectors(self) -> tuple:
        return self.basis.rows

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.coordinates_of(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def coordinates_of(self, v: Sequence[Scalar]) -> Optional[Vector]:
        """Coordinates of ``v`` in the rref basis, or None if outside.

        Because the basis is in rref, the candidate coordinates are the
        entries of v at the pivot columns; membership is the check that
        they reconstruct v.
        """
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        coords = tuple(v[c] for c in self.pivots)
        residual = list(v)
        for c, row in zip(coords, self.basis.rows):
            if c != 0:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(x != 0 for x in residual):
            return None
        return coords

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of QQ^{self.ambient_dim})"


def sum_intersect(U: Subspace, W: Subspace) -> tuple:
    """(U + W, U ∩ W) via the Zassenhaus double-block reduction."""
    if U.ambient_dim != W.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = U.ambient_dim
    block_rows = [row + row for row in U.vectors()]
    block_rows += [row + zero_vector(n) for row in W.vectors()]
    reduced, pivots = Matrix(block_rows, 2 * n).rref()
    sum_rows = []
    intersect_rows = []
    for r, c in enumerate(pivots):
        if c < n:
            sum_rows.append(reduced.rows[r][:n])
        else:
            intersect_rows.append(reduced.rows[r][n:])
    return (
        Subspace.from_vectors(n, sum_rows),
        Subspace.from_vectors(n, intersect_rows),
    )


def _require_gram(G: Matrix, ambient_dim: int) -> None:
    if G.nrows != G.ncols or G.nrows != ambient_dim:
        raise ValueError("gram matrix size does not match ambient dimension")
    if not G.is_symmetric():
        raise ValueError("gram matrix is not symmetric")


def form_orthogonal(G: Matrix, U: Subspace) -> Subspace:
    """U^perp = {x : x^T G u = 0 for all u in U} for a symmetric G."""
    _require_gram(G, U.ambient_dim)
    return kernel(U.basis @ G)


def restricted_gram(G: Matrix, U: Subspace) -> Matrix:
    """Gram matrix of the form restricted to the rref basis of U."""
    _require_gram(G, U.ambient_dim)
    return U.basis @ G @ U.basis.transpose()


def form_restrict_nondegenerate(G: Matrix, U: Subspace) -> bool:
    """True iff the form restricted to U has invertible Gram matrix."""
    return restricted_gram(G, U).det() != 0
