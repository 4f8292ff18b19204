"""Constructors for Heisenberg-type quadratic Lie algebras.

Provides the Heisenberg algebra h_m, its extension h_m(phi) by an
invertible derivation, the double extension S(D) of a quadratic algebra by
a skew derivation, the main builder that couples S(D) with a symplectic
block, and the coadjoint-double example generator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import ensure
from .exactla import Matrix, Subspace, unit_vector, vector
from .liealg import LieAlgebra, LinearMap, check_jacobi, is_derivation
from .quadform import BilinearForm, QuadraticLieAlgebra


def standard_symplectic_matrix(m: int) -> Matrix:
    """The block form [[0, I_m], [-I_m, 0]] on QQ^{2m}."""
    rows = []
    for i in range(2 * m):
        row = [Fraction(0)] * (2 * m)
        if i < m:
            row[i + m] = Fraction(1)
        else:
            row[i - m] = Fraction(-1)
        rows.append(row)
    return Matrix(rows, 2 * m)


class SymplecticSpace:
    """An even-dimensional space with an invertible skew-symmetric form."""

    __slots__ = ("omega",)

    def __init__(self, omega: Matrix):
        if omega.nrows != omega.ncols:
            raise ValueError("omega must be square")
        if omega.nrows % 2 != 0:
            raise ValueError("symplectic dimension must be even")
        if not omega.is_skew_symmetric():
            raise ValueError("omega must be skew-symmetric")
        if omega.det() == 0:
            raise ValueError("omega must be nondegenerate")
        object.__setattr__(self, "omega", omega)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticSpace is immutable")

    @classmethod
    def standard(cls, m: int) -> "SymplecticSpace":
        return cls(standard_symplectic_matrix(m))

    @property
    def dim(self) -> int:
        return self.omega.nrows

    def pairing(self, u: Sequence, v: Sequence) -> Fraction:
        from .exactla import dot

        return dot(self.omega.apply(vector(u)), vector(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticSpace) and self.omega == other.omega

    def __repr__(self) -> str:
        return f"SymplecticSpace(dim={self.dim})"


class SymplecticMap:
    """An element of o(omega): omega(f u, v) = -omega(u, f v)."""

    __slots__ = ("space", "matrix")

    def __init__(self, space: SymplecticSpace, matrix: Matrix):
        if matrix.shape != (space.dim, space.dim):
            raise ValueError("matrix size does not match symplectic space")
        if not in_omega_algebra(matrix, space.omega):
            raise ValueError("matrix does not lie in o(omega)")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticMap is immutable")

    def is_invertible(self) -> bool:
        return self.matrix.det() != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymplecticMap)
            and self.space == other.space
            and self.matrix == other.matrix
        )

    def __repr__(self) -> str:
        return f"SymplecticMap(dim={self.space.dim})"


def in_omega_algebra(f: Matrix, omega: Matrix) -> bool:
    """Membership test f^T omega + omega f = 0."""
    return (f.transpose() @ omega + omega @ f).is_zero()


def _as_omega_matrix(
    value: Union[SymplecticMap, Matrix], space: SymplecticSpace, name: str
) -> Matrix:
    if isinstance(value, SymplecticMap):
        if value.space != space:
            raise ValueError(f"{name} is attached to a different symplectic space")
        return value.matrix
    if value.shape != (space.dim, space.dim):
        raise ValueError(f"{name} has the wrong size for the symplectic space")
    if not in_omega_algebra(value, space.omega):
        raise ValueError(f"{name} must lie in o(omega)")
    return value


def heisenberg(m: int, omega: Optional[Matrix] = None) -> LieAlgebra:
    """The Heisenberg algebra h_m on u_1..u_{2m}, hbar.

    [u_i, u_j] = omega_{ij} hbar with hbar central; omega defaults to the
    standard block form.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if omega is None:
        omega = standard_symplectic_matrix(m)
    space = SymplecticSpace(omega)  # validates skew + nondegenerate
    if space.dim != 2 * m:
        raise ValueError("omega size does not match m")
    dim = 2 * m + 1
    structure = {}
    for i in range(2 * m):
        for j in range(i + 1, 2 * m):
            c = omega.entry(i, j)
            if c != 0:
                structure[(i, j)] = [(2 * m, c)]
    labels = [f"u{i + 1}" for i in range(2 * m)] + ["hbar"]
    return LieAlgebra(dim, structure, labels)


def extend_heisenberg(
    m: int,
    omega: Optional[Matrix],
    phi: Union[SymplecticMap, Matrix],
) -> QuadraticLieAlgebra:
    """The Heisenberg algebra extended by an invertible phi in o(omega).

    Basis (d, u_1..u_{2m}, hbar) with [d, u] = phi(u), [u, v] = omega(u, v)
    hbar, hbar central; the metric is B(u, v) = omega(phi^{-1} u, v) on V,
    B(d, hbar) = 1, and zero elsewhere.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if omega is None:
        omega = standard_symplectic_matrix(m)
    space = SymplecticSpace(omega)
    if space.dim != 2 * m:
        raise ValueError("omega size does not match m")
    phi_mat = _as_omega_matrix(phi, space, "phi")
    if phi_mat.det() == 0:
        raise ValueError("phi must be invertible on V")

    dim = 2 * m + 2
    hb = dim - 1
    structure = {}
    for j in range(2 * m):
        col = phi_mat.column(j)
        terms = [(1 + i, c) for i, c in enumerate(col) if c != 0]
        if terms:
            structure[(0, 1 + j)] = terms
    for i in range(2 * m):
        for j in range(i + 1, 2 * m):
            c = omega.entry(i, j)
            if c != 0:
                structure[(1 + i, 1 + j)] = [(hb, c)]
    labels = ["d"] + [f"u{i + 1}" for i in range(2 * m)] + ["hbar"]
    algebra = LieAlgebra(dim, structure, labels)
    ensure(not check_jacobi(algebra), "extended Heisenberg bracket failed Jacobi")

    gram_v = phi_mat.inverse().transpose() @ omega
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(2 * m):
        for j in range(2 * m):
            rows[1 + i][1 + j] = gram_v.entry(i, j)
    rows[0][hb] = Fraction(1)
    rows[hb][0] = Fraction(1)
    return QuadraticLieAlgebra(algebra, BilinearForm(Matrix(rows, dim)))


def _require_skew_derivation(S: QuadraticLieAlgebra, D: Matrix, name: str = "D") -> None:
    if D.shape != (S.dim, S.dim):
        raise ValueError(f"{name} has the wrong size for the core algebra")
    if not is_derivation(S.algebra, D):
        raise ValueError(f"{name} is not a derivation of the core algebra")
    skew = D.transpose() @ S.metric.gram + S.metric.gram @ D
    if not skew.is_zero():
        raise ValueError(f"{name} is not skew-symmetric with respect to the metric")


def double_extension(
    S: QuadraticLieAlgebra, D: Union[LinearMap, Matrix]
) -> QuadraticLieAlgebra:
    """Double extension S(D) of a quadratic algebra by a skew derivation.

    Basis (D, s_1..s_n, hbar) with [D, x] = D(x), [x, y] = [x, y]_S +
    B_S(D x, y) hbar, hbar central; the metric extends B_S hyperbolically
    on the (D, hbar) pair.
    """
    D_mat = D.matrix if isinstance(D, LinearMap) else D
    _require_skew_derivation(S, D_mat)
    n = S.dim
    dim = n + 2
    hb = dim - 1
    structure = {}
    for j in range(n):
        col = D_mat.column(j)
        terms = [(1 + i, c) for i, c in enumerate(col) if c != 0]
        if terms:
            structure[(0, 1 + j)] = terms
    gram_s = S.metric.gram
    mu = D_mat.transpose() @ gram_s  # mu[i][j] = B_S(D s_i, s_j)
    for i in range(n):
        for j in range(i + 1, n):
            terms = [
                (1 + k, c) for k, c in enumerate(S.algebra.bracket_basis(i, j)) if c != 0
            ]
            if mu.entry(i, j) != 0:
                terms = terms + [(hb, mu.entry(i, j))]
            if terms:
                structure[(1 + i, 1 + j)] = terms
    labels = ["D"] + list(S.algebra.basis_labels) + ["hbar"]
    algebra = LieAlgebra(dim, structure, labels)
    ensure(not check_jacobi(algebra), "double extension bracket failed Jacobi")

    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            rows[1 + i][1 + j] = gram_s.entry(i, j)
    rows[0][hb] = Fraction(1)
    rows[hb][0] = Fraction(1)
    return QuadraticLieAlgebra(algebra, BilinearForm(Matrix(rows, dim)))


def build_with_heisenberg_ideal(
    S: QuadraticLieAlgebra,
    D: Union[LinearMap, Matrix, None],
    V: SymplecticSpace,
    sigmaD: Union[SymplecticMap, Matrix],
) -> QuadraticLieAlgebra:
    """Quadratic Lie algebra on S ⊕ QQ d ⊕ V ⊕ QQ hbar containing h_m.

    The (S, d, hbar) part carries the double extension S(D); d acts on V by
    the invertible sigmaD in o(omega); [u, v] = omega(u, v) hbar on V; S and
    V commute.  The metric is B_{S(D)} ⊥ B_V with B_V(u, v) =
    omega(sigmaD^{-1} u, v).  The subspace V ⊕ QQ hbar is a Heisenberg
    ideal of the result.
    """
    if D is None:
        D_mat = Matrix.zeros(S.dim, S.dim)
    else:
        D_mat = D.matrix if isinstance(D, LinearMap) else D
    _require_skew_derivation(S, D_mat)
    sigma = _as_omega_matrix(sigmaD, V, "sigmaD")
    if sigma.det() == 0:
        raise ValueError("sigmaD must be invertible")

    k = S.dim
    two_m = V.dim
    dim = k + 1 + two_m + 1
    d_idx = k
    hb = dim - 1
    v_idx = lambda i: k + 1 + i

    gram_s = S.metric.gram
    structure = {}
    mu = D_mat.transpose() @ gram_s  # mu[i][j] = B_S(D s_i, s_j)
    for i in range(k):
        for j in range(i + 1, k):
            terms = [
                (t, c) for t, c in enumerate(S.algebra.bracket_basis(i, j)) if c != 0
            ]
            if mu.entry(i, j) != 0:
                terms = terms + [(hb, mu.entry(i, j))]
            if terms:
                structure[(i, j)] = terms
    for j in range(k):
        col = D_mat.column(j)
        terms = [(t, c) for t, c in enumerate(col) if c != 0]
        if terms:
            # [s_j, d] = -D(s_j); stored for the ordered pair (j, d_idx)
            structure[(j, d_idx)] = [(t, -c) for t, c in terms]
    for j in range(two_m):
        col = sigma.column(j)
        terms = [(v_idx(i), c) for i, c in enumerate(col) if c != 0]
        if terms:
            structure[(d_idx, v_idx(j))] = terms
    for i in range(two_m):
        for j in range(i + 1, two_m):
            c = V.omega.entry(i, j)
            if c != 0:
                structure[(v_idx(i), v_idx(j))] = [(hb, c)]
    labels = (
        list(S.algebra.basis_labels)
        + ["d"]
        + [f"u{i + 1}" for i in range(two_m)]
        + ["hbar"]
    )
    algebra = LieAlgebra(dim, structure, labels)
    ensure(not check_jacobi(algebra), "heisenberg-ideal build failed Jacobi")

    gram_v = sigma.inverse().transpose() @ V.omega
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(k):
        for j in range(k):
            rows[i][j] = gram_s.entry(i, j)
    for i in range(two_m):
        for j in range(two_m):
            rows[v_idx(i)][v_idx(j)] = gram_v.entry(i, j)
    rows[d_idx][hb] = Fraction(1)
    rows[hb][d_idx] = Fraction(1)
    return QuadraticLieAlgebra(algebra, BilinearForm(Matrix(rows, dim)))


def heisenberg_ideal_span(q: QuadraticLieAlgebra, m: int) -> Subspace:
    """The canonical ideal V ⊕ QQ hbar of a build_with_heisenberg_ideal output."""
    n = q.dim
    vecs = [unit_vector(n, i) for i in range(n - 1 - 2 * m, n)]
    return Subspace.from_vectors(n, vecs)


def coadjoint_double(g: LieAlgebra) -> QuadraticLieAlgebra:
    """The quadratic algebra on g ⊕ g* with the hyperbolic metric.

    The bracket extends that of g by the coadjoint action; g* is an abelian
    ideal and B(x + zeta, y + nu) = zeta(y) + nu(x).
    """
    if check_jacobi(g):
        raise ValueError("input algebra fails the Jacobi identity")
    n = g.dim
    dim = 2 * n
    structure = {}
    for (i, j), terms in g.structure.items():
        structure[(i, j)] = list(terms)
    # [x_i, xi_j] = -sum_l c^j_{il} xi_l
    for i in range(n):
        for j in range(n):
            terms = []
            for l in range(n):
                c = g.bracket_basis(i, l)[j]
                if c != 0:
                    terms.append((n + l, -c))
            if terms:
                key = (i, n + j)
                existing = list(structure.get(key, []))
                structure[key] = existing + terms
    labels = list(g.basis_labels) + [s + "*" for s in g.basis_labels]
    algebra = LieAlgebra(dim, structure, labels)
    ensure(not check_jacobi(algebra), "coadjoint double failed Jacobi")

    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(n):
        rows[i][n + i] = Fraction(1)
        rows[n + i][i] = Fraction(1)
    return QuadraticLieAlgebra(algebra, BilinearForm(Matrix(rows, dim)))
