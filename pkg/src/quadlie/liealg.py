"""Lie algebras presented by structure constants over QQ.

The bracket is stored sparsely for index pairs i < j only; antisymmetry is
structural.  All operations are pure and return new values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .exactla import (
    Matrix,
    Subspace,
    Vector,
    add_vec,
    kernel,
    rat,
    unit_vector,
    vector,
    zero_vector,
)

StructureInput = Mapping


class LinearMap:
    """A linear map given by its matrix in the column-vector convention."""

    __slots__ = ("source_dim", "target_dim", "matrix")

    def __init__(self, source_dim: int, target_dim: int, matrix: Matrix):
        if matrix.shape != (target_dim, source_dim):
            raise ValueError("matrix shape does not match declared dimensions")
        object.__setattr__(self, "source_dim", source_dim)
        object.__setattr__(self, "target_dim", target_dim)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("LinearMap is immutable")

    def apply(self, v: Sequence) -> Vector:
        return self.matrix.apply(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"LinearMap({self.source_dim}->{self.target_dim})"


class JacobiViolation(NamedTuple):
    i: int
    j: int
    k: int
    residual: Vector


class LieAlgebra:
    """A Lie algebra of dimension ``dim`` with sparse structure constants.

    ``structure`` maps (i, j) with i < j to a tuple of (k, c) pairs meaning
    [e_i, e_j] = sum c * e_k.  Brackets [e_j, e_i] are derived by negation
    and diagonal brackets are zero, so antisymmetry holds by construction.
    Equality compares dimension and structure constants; basis labels are
    cosmetic.
    """

    __slots__ = ("dim", "basis_labels", "structure")

    def __init__(
        self,
        dim: int,
        structure: StructureInput,
        basis_labels: Optional[Sequence[str]] = None,
    ):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        if basis_labels is None:
            basis_labels = tuple(f"e{i + 1}" for i in range(dim))
        else:
            basis_labels = tuple(str(s) for s in basis_labels)
            if len(basis_labels) != dim:
                raise ValueError("label count does not match dimension")
        table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (i, j), terms in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index out of range: ({i}, {j})")
            if isinstance(terms, Mapping):
                pairs = terms.items()
            else:
                pairs = terms
            for k, c in pairs:
                if not 0 <= k < dim:
                    raise ValueError(f"target index out of range: {k}")
                c = rat(c)
                if c == 0:
                    continue
                if i == j:
                    raise ValueError("nonzero diagonal bracket")
                if i < j:
                    key, coeff = (i, j), c
                else:
                    key, coeff = (j, i), -c
                slot = table.setdefault(key, {})
                slot[k] = slot.get(k, Fraction(0)) + coeff
        normalized = {}
        for key in sorted(table):
            entries = tuple(
                (k, c) for k, c in sorted(table[key].items()) if c != 0
            )
            if entries:
                normalized[key] = entries
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_labels", basis_labels)
        object.__setattr__(self, "structure", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def abelian(cls, dim: int, basis_labels: Optional[Sequence[str]] = None) -> "LieAlgebra":
        return cls(dim, {}, basis_labels)

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a coordinate vector."""
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise ValueError("basis index out of range")
        if i == j:
            return zero_vector(self.dim)
        sign = 1 if i < j else -1
        terms = self.structure.get((min(i, j), max(i, j)), ())
        out = [Fraction(0)] * self.dim
        for k, c in terms:
            out[k] = sign * c
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.structure == other.structure
        )

    def __hash__(self) -> int:
        return hash((self.dim, tuple(sorted(self.structure.items()))))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.structure)})"


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure constants to arbitrary vectors."""
    x = vector(x)
    y = vector(y)
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError("vector dimension mismatch")
    out = [Fraction(0)] * g.dim
    for (i, j), terms in g.structure.items():
        coeff = x[i] * y[j] - x[j] * y[i]
        if coeff == 0:
            continue
        for k, c in terms:
            out[k] += coeff * c
    return tuple(out)


def check_jacobi(g: LieAlgebra) -> List[JacobiViolation]:
    """All triples i < j < k where the Jacobi identity fails."""
    n = g.dim
    violations = []
    brk = [[g.bracket_basis(i, j) for j in range(n)] for i in range(n)]

    def double_bracket(first: Vector, t: int) -> List[Fraction]:
        # [first, e_t] expanded through the sparse bracket table
        out = [Fraction(0)] * n
        for p, c in enumerate(first):
            if c != 0:
                for s, x in enumerate(brk[p][t]):
                    if x != 0:
                        out[s] += c * x
        return out

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                residual = double_bracket(brk[i][j], k)
                for s, x in enumerate(double_bracket(brk[j][k], i)):
                    residual[s] += x
                for s, x in enumerate(double_bracket(brk[k][i], j)):
                    residual[s] += x
                if any(x != 0 for x in residual):
                    violations.append(JacobiViolation(i, j, k, tuple(residual)))
    return violations


def ad(g: LieAlgebra, x: Sequence) -> LinearMap:
    """Adjoint map y -> [x, y]."""
    x = vector(x)
    columns = [bracket(g, x, unit_vector(g.dim, j)) for j in range(g.dim)]
    return LinearMap(g.dim, g.dim, Matrix.from_columns(columns, g.dim))


def bracket_subspaces(g: LieAlgebra, U: Subspace, W: Subspace) -> Subspace:
    """span{[u, w] : u in U, w in W}."""
    vecs = [bracket(g, u, w) for u in U.vectors() for w in W.vectors()]
    return Subspace.from_vectors(g.dim, vecs)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    """[g, g] = span of all basis brackets."""
    vecs = []
    for (i, j), terms in g.structure.items():
        out = [Fraction(0)] * g.dim
        for k, c in terms:
            out[k] = c
        vecs.append(tuple(out))
    return Subspace.from_vectors(g.dim, vecs)


def derived_series(g: LieAlgebra) -> List[Subspace]:
    """g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... until stabilization."""
    series = [Subspace.full(g.dim)]
    while True:
        current = series[-1]
        nxt = bracket_subspaces(g, current, current)
        if nxt == current:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def lower_central_series(g: LieAlgebra) -> List[Subspace]:
    """g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... until stabilization."""
    full = Subspace.full(g.dim)
    series = [full]
    while True:
        current = series[-1]
        nxt = bracket_subspaces(g, full, current)
        if nxt == current:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].is_zero()


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].is_zero()


def center(g: LieAlgebra) -> Subspace:
    """{x : [x, y] = 0 for all y}, computed as one stacked kernel."""
    if g.dim == 0:
        return Subspace.zero(0)
    rows = []
    for j in range(g.dim):
        # row block: x -> [x, e_j] = -ad(e_j) x
        adj = ad(g, unit_vector(g.dim, j)).matrix
        rows.extend((-adj).rows)
    return kernel(Matrix(rows, g.dim))


def centralizer(g: LieAlgebra, U: Subspace) -> Subspace:
    """{x : [x, u] = 0 for all u in U}."""
    if U.ambient_dim != g.dim:
        raise ValueError("ambient dimension mismatch")
    if U.is_zero():
        return Subspace.full(g.dim)
    rows = []
    for u in U.vectors():
        adj = ad(g, u).matrix
        rows.extend((-adj).rows)
    return kernel(Matrix(rows, g.dim))


def is_subalgebra(g: LieAlgebra, U: Subspace) -> bool:
    """[U, U] ⊆ U."""
    vecs = U.vectors()
    return all(
        U.contains(bracket(g, vecs[i], vecs[j]))
        for i in range(len(vecs))
        for j in range(i + 1, len(vecs))
    )


def is_ideal(g: LieAlgebra, U: Subspace) -> bool:
    """[g, U] ⊆ U."""
    return all(
        U.contains(bracket(g, unit_vector(g.dim, i), u))
        for i in range(g.dim)
        for u in U.vectors()
    )


def ideal_generated_by(g: LieAlgebra, vectors_in: Iterable[Sequence]) -> Subspace:
    """Smallest ideal containing the given vectors (closure under ad)."""
    current = Subspace.from_vectors(g.dim, [vector(v) for v in vectors_in])
    for _ in range(g.dim + 1):
        new_vecs = list(current.vectors())
        for i in range(g.dim):
            ei = unit_vector(g.dim, i)
            for u in current.vectors():
                new_vecs.append(bracket(g, ei, u))
        nxt = Subspace.from_vectors(g.dim, new_vecs)
        if nxt == current:
            return current
        current = nxt
    return current


def quotient(g: LieAlgebra, I: Subspace) -> Tuple[LieAlgebra, LinearMap]:
    """Quotient algebra g/I with its projection.

    The quotient coordinates are the non-pivot coordinates of the ideal's
    rref basis, making the construction deterministic.
    """
    if not is_ideal(g, I):
        raise ValueError("subspace is not an ideal")
    _, pivots = I.basis.rref()
    pivot_set = set(pivots)
    complement_cols = [c for c in range(g.dim) if c not in pivot_set]
    qdim = len(complement_cols)

    # projection: reduce modulo the ideal rows, then read complement coords
    proj_columns = []
    for j in range(g.dim):
        v = list(unit_vector(g.dim, j))
        for r, c in enumerate(pivots):
            if v[c] != 0:
                f = v[c]
                v = [a - f * b for a, b in zip(v, I.basis.rows[r])]
        proj_columns.append(tuple(v[c] for c in complement_cols))
    proj = LinearMap(g.dim, qdim, Matrix.from_columns(proj_columns, qdim))

    structure = {}
    for s in range(qdim):
        for t in range(s + 1, qdim):
            w = g.bracket_basis(complement_cols[s], complement_cols[t])
            coords = proj.apply(w)
            terms = [(k, c) for k, c in enumerate(coords) if c != 0]
            if terms:
                structure[(s, t)] = terms
    labels = [g.basis_labels[c] + "~" for c in complement_cols]
    return LieAlgebra(qdim, structure, labels), proj


def subalgebra_on(g: LieAlgebra, U: Subspace) -> LieAlgebra:
    """The algebra structure on a subalgebra U, in its rref basis."""
    if not is_subalgebra(g, U):
        raise ValueError("subspace is not a subalgebra")
    vecs = U.vectors()
    structure = {}
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            w = bracket(g, vecs[i], vecs[j])
            coords = U.coordinates_of(w)
            if coords is None:
                raise ValueError("bracket left the subalgebra")
            terms = [(k, c) for k, c in enumerate(coords) if c != 0]
            if terms:
                structure[(i, j)] = terms
    labels = [f"r{t + 1}" for t in range(len(vecs))]
    return LieAlgebra(len(vecs), structure, labels)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    """Block-wise direct sum; the two summands commute."""
    n1 = g1.dim
    structure = {}
    for (i, j), terms in g1.structure.items():
        structure[(i, j)] = terms
    for (i, j), terms in g2.structure.items():
        structure[(i + n1, j + n1)] = [(k + n1, c) for k, c in terms]
    return LieAlgebra(
        n1 + g2.dim, structure, g1.basis_labels + g2.basis_labels
    )


def killing_form(g: LieAlgebra) -> Matrix:
    """K(x, y) = trace(ad x · ad y) on basis pairs."""
    ads = [ad(g, unit_vector(g.dim, i)).matrix for i in range(g.dim)]
    rows = []
    for i in range(g.dim):
        row = []
        for j in range(g.dim):
            row.append((ads[i] @ ads[j]).trace())
        rows.append(row)
    return Matrix(rows, g.dim)


def is_derivation(g: LieAlgebra, M: Matrix) -> bool:
    """Whether M([x,y]) = [Mx, y] + [x, My] holds on all basis pairs."""
    if M.shape != (g.dim, g.dim):
        raise ValueError("matrix shape does not match algebra dimension")
    for i in range(g.dim):
        ei = unit_vector(g.dim, i)
        for j in range(i + 1, g.dim):
            ej = unit_vector(g.dim, j)
            lhs = M.apply(g.bracket_basis(i, j))
            rhs = add_vec(bracket(g, M.apply(ei), ej), bracket(g, ei, M.apply(ej)))
            if lhs != rhs:
                return False
    return True


def transport(g: LieAlgebra, P: Matrix, basis_labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Express g in the new basis given by the rows of P.

    Row i of P is the i-th new basis vector in the old coordinates; P must
    be invertible.  Structure constants of the result satisfy
    [f_i, f_j] = sum_k c'_{ij}^k f_k with f_i = P[i].
    """
    if P.shape != (g.dim, g.dim):
        raise ValueError("base change must be square of the algebra dimension")
    try:
        Pt_inv = P.transpose().inverse()
    except ValueError as exc:
        raise ValueError("base change matrix is singular") from exc
    structure = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            w = bracket(g, P.rows[i], P.rows[j])
            coords = Pt_inv.apply(w)
            terms = [(k, c) for k, c in enumerate(coords) if c != 0]
            if terms:
                structure[(i, j)] = terms
    if basis_labels is None:
        basis_labels = [f"b{t + 1}" for t in range(g.dim)]
    return LieAlgebra(g.dim, structure, basis_labels)


def transport_subspace(U: Subspace, P: Matrix) -> Subspace:
    """Coordinates of U in the new basis given by the rows of P."""
    try:
        Pt_inv = P.transpose().inverse()
    except ValueError as exc:
        raise ValueError("base change matrix is singular") from exc
    vecs = [Pt_inv.apply(v) for v in U.vectors()]
    return Subspace.from_vectors(U.ambient_dim, vecs)
