"""Invariant metrics on Lie algebras.

A quadratic Lie algebra couples a Lie algebra with a nondegenerate,
symmetric, ad-invariant bilinear form.  This module provides the checker,
the musical isomorphisms, orthogonal complements, the solver for the space
of invariant symmetric forms, and orthogonal splitting along nondegenerate
ideals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .exactla import (
    Matrix,
    Subspace,
    Vector,
    add_vec,
    dot,
    form_orthogonal,
    form_restrict_nondegenerate,
    kernel,
    restricted_gram,
    solve,
    vector,
    zero_vector,
)
from .liealg import LieAlgebra, is_ideal, subalgebra_on, transport


class BilinearForm:
    """A symmetric bilinear form given by its Gram matrix."""

    __slots__ = ("gram",)

    def __init__(self, gram: Matrix):
        if gram.nrows != gram.ncols:
            raise ValueError("gram matrix must be square")
        if not gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearForm is immutable")

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def evaluate(self, x: Sequence, y: Sequence) -> Fraction:
        return dot(self.gram.apply(vector(x)), vector(y))

    def is_nondegenerate(self) -> bool:
        return self.gram.det() != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearForm) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"BilinearForm(dim={self.dim})"


class MetricViolation(NamedTuple):
    kind: str          # "symmetric" | "nondegenerate" | "invariance"
    indices: tuple
    detail: str


def check_invariant_metric(
    g: LieAlgebra, B: Union[BilinearForm, Matrix]
) -> List[MetricViolation]:
    """Violations of symmetry, nondegeneracy, or invariance of B on g.

    Invariance means B([x,y],z) = B(x,[y,z]) on all basis triples.  The
    returned list is empty iff B is an invariant metric for g.
    """
    gram = B.gram if isinstance(B, BilinearForm) else B
    n = g.dim
    if gram.nrows != gram.ncols or gram.nrows != n:
        raise ValueError("gram matrix size does not match algebra dimension")
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            if gram.entry(i, j) != gram.entry(j, i):
                violations.append(
                    MetricViolation("symmetric", (i, j), "gram[i][j] != gram[j][i]")
                )
    if gram.det() == 0:
        violations.append(MetricViolation("nondegenerate", (), "det(gram) = 0"))
    brk = [[g.bracket_basis(i, j) for j in range(n)] for i in range(n)]
    zero = zero_vector(n)
    for i in range(n):
        row_i = gram.row(i)
        for j in range(n):
            # w[k] = B([e_i, e_j], e_k), accumulated over the sparse bracket
            w = None
            for p, c in enumerate(brk[i][j]):
                if c != 0:
                    contrib = tuple(c * x for x in gram.row(p))
                    w = contrib if w is None else add_vec(w, contrib)
            if w is None:
                w = zero
            for k in range(n):
                rhs = Fraction(0)
                for p, c in enumerate(brk[j][k]):
                    if c != 0:
                        rhs += row_i[p] * c
                if w[k] != rhs:
                    violations.append(
                        MetricViolation(
                            "invariance",
                            (i, j, k),
                            "B([e_i,e_j],e_k) != B(e_i,[e_j,e_k])",
                        )
                    )
    return violations


class QuadraticLieAlgebra:
    """A Lie algebra together with an invariant metric.

    Construction validates nondegeneracy and invariance exactly and raises
    ``ValueError`` on the first batch of violations.
    """

    __slots__ = ("algebra", "metric")

    def __init__(self, algebra: LieAlgebra, metric: BilinearForm):
        if metric.dim != algebra.dim:
            raise ValueError("metric dimension does not match algebra")
        violations = check_invariant_metric(algebra, metric)
        if violations:
            head = ", ".join(f"{v.kind}{v.indices}" for v in violations[:5])
            raise ValueError(f"not an invariant metric: {head}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "metric", metric)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticLieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadraticLieAlgebra)
            and self.algebra == other.algebra
            and self.metric == other.metric
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.metric))

    def __repr__(self) -> str:
        return f"QuadraticLieAlgebra(dim={self.dim})"


def flat(B: BilinearForm, x: Sequence) -> Vector:
    """The covector B(x, ·) in dual coordinates."""
    return B.gram.apply(vector(x))


def sharp(B: BilinearForm, alpha: Sequence) -> Vector:
    """Inverse of flat; requires B nondegenerate."""
    result = solve(B.gram, vector(alpha))
    if result is None or not B.is_nondegenerate():
        raise ValueError("form is degenerate; sharp is undefined")
    return result


def orthogonal_in(q: QuadraticLieAlgebra, U: Subspace) -> Subspace:
    """Orthogonal complement of U inside q with respect to its metric."""
    return form_orthogonal(q.metric.gram, U)


def invariant_symmetric_forms(g: LieAlgebra) -> List[BilinearForm]:
    """Basis of the space of invariant symmetric bilinear forms on g.

    The Gram matrix is parameterized by its upper triangle (n(n+1)/2
    unknowns); invariance on all basis triples gives the linear system,
    solved by one kernel computation.  The basis is the rref kernel basis,
    so the output is deterministic.
    """
    n = g.dim
    pairs = [(p, q) for p in range(n) for q in range(p, n)]
    index = {pq: t for t, pq in enumerate(pairs)}

    def entry_index(p: int, q: int) -> int:
        return index[(p, q) if p <= q else (q, p)]

    rows = []
    for i in range(n):
        for j in range(n):
            cij = g.bracket_basis(i, j)
            for k in range(n):
                cjk = g.bracket_basis(j, k)
                coeffs = [Fraction(0)] * len(pairs)
                for p, c in enumerate(cij):
                    if c != 0:
                        coeffs[entry_index(p, k)] += c
                for p, c in enumerate(cjk):
                    if c != 0:
                        coeffs[entry_index(i, p)] -= c
                if any(c != 0 for c in coeffs):
                    rows.append(coeffs)
    solution = kernel(Matrix(rows, len(pairs)))
    forms = []
    for coords in solution.vectors():
        gram_rows = [[Fraction(0)] * n for _ in range(n)]
        for (p, q), t in index.items():
            gram_rows[p][q] = coords[t]
            gram_rows[q][p] = coords[t]
        forms.append(BilinearForm(Matrix(gram_rows, n)))
    return forms


def restrict_quadratic(q: QuadraticLieAlgebra, U: Subspace) -> QuadraticLieAlgebra:
    """Quadratic algebra on a subalgebra U with the restricted metric.

    Raises ``ValueError`` when U is not a subalgebra or the restricted
    metric is degenerate.
    """
    algebra = subalgebra_on(q.algebra, U)
    gram = restricted_gram(q.metric.gram, U)
    return QuadraticLieAlgebra(algebra, BilinearForm(gram))


def split_by_nondegenerate_ideal(
    q: QuadraticLieAlgebra, I: Subspace
) -> Optional[Tuple[QuadraticLieAlgebra, QuadraticLieAlgebra]]:
    """Orthogonal splitting q = I ⊥ I^perp along a nondegenerate ideal.

    Returns None when I is not an ideal or the metric degenerates on it;
    callers probe candidates, so this is not an error.
    """
    if I.ambient_dim != q.dim:
        raise ValueError("ambient dimension mismatch")
    if not is_ideal(q.algebra, I):
        return None
    if not form_restrict_nondegenerate(q.metric.gram, I):
        return None
    perp = orthogonal_in(q, I)
    return restrict_quadratic(q, I), restrict_quadratic(q, perp)


def transport_quadratic(
    q: QuadraticLieAlgebra, P: Matrix, basis_labels: Optional[Sequence[str]] = None
) -> QuadraticLieAlgebra:
    """Express q in the new basis given by the rows of P (metric included)."""
    algebra = transport(q.algebra, P, basis_labels)
    gram = P @ q.metric.gram @ P.transpose()
    return QuadraticLieAlgebra(algebra, BilinearForm(gram))


def skew_derivation_space(q: QuadraticLieAlgebra) -> List[Matrix]:
    """Basis of derivations of q that are skew with respect to its metric.

    Solves the linear system "D is a derivation and D^T G + G D = 0" in the
    n^2 matrix unknowns; deterministic rref kernel basis.
    """
    n = q.dim
    g = q.algebra
    gram = q.metric.gram
    # unknown D laid out row-major: D[r][c] at index r*n + c
    rows = []
    # derivation: D([e_i,e_j]) - [D e_i, e_j] - [e_i, D e_j] = 0
    for i in range(n):
        for j in range(i + 1, n):
            cij = g.bracket_basis(i, j)
            for t in range(n):
                coeffs = [Fraction(0)] * (n * n)
                for p, c in enumerate(cij):
                    if c != 0:
                        coeffs[t * n + p] += c
                for r in range(n):
                    # [e_r, e_j] contributes -D[r][i] * c^t_{rj}
                    coeffs[r * n + i] -= g.bracket_basis(r, j)[t]
                    coeffs[r * n + j] -= g.bracket_basis(i, r)[t]
                if any(c != 0 for c in coeffs):
                    rows.append(coeffs)
    # skewness: (D^T G + G D)[i][j] = 0
    for i in range(n):
        for j in range(i, n):
            coeffs = [Fraction(0)] * (n * n)
            for r in range(n):
                coeffs[r * n + i] += gram.entry(r, j)
                coeffs[r * n + j] += gram.entry(i, r)
            if any(c != 0 for c in coeffs):
                rows.append(coeffs)
    solution = kernel(Matrix(rows, n * n))
    mats = []
    for coords in solution.vectors():
        mats.append(Matrix([coords[r * n : (r + 1) * n] for r in range(n)], n))
    return mats
