"""JSON interchange documents for algebras and constructions.

Rationals travel as canonical strings ("p" or "p/q" with q > 0 and
gcd(|p|, q) = 1) so that no float contamination is possible.  Serialization
is byte-deterministic: fixed key order via sorted keys, two-space indent,
and a trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from .exactla import Matrix, format_rational, parse_rational
from .heisenberg import (
    SymplecticSpace,
    build_with_heisenberg_ideal,
    coadjoint_double,
    double_extension,
    extend_heisenberg,
    heisenberg,
)
from .liealg import LieAlgebra
from .quadform import BilinearForm, QuadraticLieAlgebra


class DocumentError(ValueError):
    """Malformed interchange document; ``where`` locates the offence."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class AlgebraDocument:
    """An algebra (and optional metric) in interchange form."""

    name: str
    algebra: LieAlgebra
    metric: Optional[BilinearForm] = None

    def quadratic(self) -> QuadraticLieAlgebra:
        if self.metric is None:
            raise DocumentError("document carries no metric", "metric")
        return QuadraticLieAlgebra(self.algebra, self.metric)


def _expect(condition: bool, message: str, where: str) -> None:
    if not condition:
        raise DocumentError(message, where)


def _parse_rational_at(value: Any, where: str) -> Fraction:
    if not isinstance(value, str):
        raise DocumentError(f"expected a rational string, got {value!r}", where)
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise DocumentError(str(exc), where) from exc


def _parse_matrix(value: Any, where: str, nrows: Optional[int] = None,
                  ncols: Optional[int] = None) -> Matrix:
    _expect(isinstance(value, list), "expected a matrix (list of rows)", where)
    rows = []
    for r, row in enumerate(value):
        _expect(isinstance(row, list), "expected a row (list)", f"{where}[{r}]")
        rows.append(
            [_parse_rational_at(x, f"{where}[{r}][{c}]") for c, x in enumerate(row)]
        )
    widths = {len(row) for row in rows}
    _expect(len(widths) <= 1, "ragged matrix rows", where)
    matrix = Matrix(rows, ncols if not rows else None)
    if nrows is not None:
        _expect(matrix.nrows == nrows, f"expected {nrows} rows", where)
    if ncols is not None:
        _expect(matrix.ncols == ncols, f"expected {ncols} columns", where)
    return matrix


def matrix_to_json(M: Matrix) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in M.rows]


def vector_to_json(v: Sequence[Fraction]) -> List[str]:
    return [format_rational(x) for x in v]


def algebra_document_from_json(data: Any) -> AlgebraDocument:
    """Parse and validate an AlgebraDocument from decoded JSON."""
    _expect(isinstance(data, dict), "expected an object", "$")
    for field in ("name", "dim", "basis", "brackets"):
        _expect(field in data, f"missing field {field!r}", "$")
    name = data["name"]
    _expect(isinstance(name, str), "name must be a string", "name")
    dim = data["dim"]
    _expect(isinstance(dim, int) and dim >= 0, "dim must be a nonnegative integer", "dim")
    basis = data["basis"]
    _expect(
        isinstance(basis, list) and all(isinstance(s, str) for s in basis),
        "basis must be a list of labels",
        "basis",
    )
    _expect(len(basis) == dim, "basis length must equal dim", "basis")
    brackets = data["brackets"]
    _expect(isinstance(brackets, list), "brackets must be a list", "brackets")
    structure = {}
    for t, entry in enumerate(brackets):
        where = f"brackets[{t}]"
        _expect(isinstance(entry, dict), "expected an object", where)
        for field in ("i", "j", "terms"):
            _expect(field in entry, f"missing field {field!r}", where)
        i, j = entry["i"], entry["j"]
        _expect(
            isinstance(i, int) and isinstance(j, int), "indices must be integers", where
        )
        _expect(0 <= i < dim and 0 <= j < dim, "index out of range", where)
        _expect(i < j, "brackets require i < j", where)
        _expect((i, j) not in structure, "duplicate bracket pair", where)
        terms = []
        _expect(isinstance(entry["terms"], list), "terms must be a list", where)
        for u, term in enumerate(entry["terms"]):
            tw = f"{where}.terms[{u}]"
            _expect(isinstance(term, dict), "expected an object", tw)
            _expect("k" in term and "c" in term, "term needs fields k and c", tw)
            k = term["k"]
            _expect(isinstance(k, int) and 0 <= k < dim, "k out of range", tw)
            terms.append((k, _parse_rational_at(term["c"], f"{tw}.c")))
        structure[(i, j)] = terms
    try:
        algebra = LieAlgebra(dim, structure, basis)
    except ValueError as exc:
        raise DocumentError(str(exc), "brackets") from exc
    metric = None
    if data.get("metric") is not None:
        gram = _parse_matrix(data["metric"], "metric", nrows=dim, ncols=dim)
        _expect(gram.is_symmetric(), "metric must be symmetric", "metric")
        metric = BilinearForm(gram)
    return AlgebraDocument(name, algebra, metric)


def algebra_document_to_json(doc: AlgebraDocument) -> dict:
    brackets = []
    for (i, j), terms in sorted(doc.algebra.structure.items()):
        brackets.append(
            {
                "i": i,
                "j": j,
                "terms": [{"k": k, "c": format_rational(c)} for k, c in terms],
            }
        )
    data = {
        "name": doc.name,
        "dim": doc.algebra.dim,
        "basis": list(doc.algebra.basis_labels),
        "brackets": brackets,
    }
    if doc.metric is not None:
        data["metric"] = matrix_to_json(doc.metric.gram)
    return data


CONSTRUCTION_KINDS = (
    "heisenberg",
    "extend_heisenberg",
    "double_extension",
    "build_with_heisenberg_ideal",
    "coadjoint_double",
)


def construct_from_json(data: Any) -> AlgebraDocument:
    """Run the constructor described by a ConstructionDocument."""
    _expect(isinstance(data, dict), "expected an object", "$")
    _expect("kind" in data, "missing field 'kind'", "$")
    kind = data["kind"]
    _expect(kind in CONSTRUCTION_KINDS, f"unknown kind {kind!r}", "kind")
    params = data.get("parameters", {})
    _expect(isinstance(params, dict), "parameters must be an object", "parameters")
    name = data.get("name", kind)
    _expect(isinstance(name, str), "name must be a string", "name")

    if kind == "heisenberg":
        m = params.get("m")
        _expect(isinstance(m, int) and m >= 1, "parameter m must be a positive integer",
                "parameters.m")
        omega = None
        if params.get("omega") is not None:
            omega = _parse_matrix(params["omega"], "parameters.omega", 2 * m, 2 * m)
        algebra = heisenberg(m, omega)
        return AlgebraDocument(name, algebra, None)

    if kind == "extend_heisenberg":
        m = params.get("m")
        _expect(isinstance(m, int) and m >= 1, "parameter m must be a positive integer",
                "parameters.m")
        omega = None
        if params.get("omega") is not None:
            omega = _parse_matrix(params["omega"], "parameters.omega", 2 * m, 2 * m)
        _expect("phi" in params, "missing parameter 'phi'", "parameters")
        phi = _parse_matrix(params["phi"], "parameters.phi", 2 * m, 2 * m)
        q = extend_heisenberg(m, omega, phi)
        return AlgebraDocument(name, q.algebra, q.metric)

    if kind == "double_extension":
        _expect("S" in params, "missing parameter 'S'", "parameters")
        inner = algebra_document_from_json(params["S"])
        _expect(inner.metric is not None, "core document needs a metric", "parameters.S")
        _expect("D" in params, "missing parameter 'D'", "parameters")
        D = _parse_matrix(params["D"], "parameters.D", inner.algebra.dim, inner.algebra.dim)
        q = double_extension(inner.quadratic(), D)
        return AlgebraDocument(name, q.algebra, q.metric)

    if kind == "build_with_heisenberg_ideal":
        _expect("S" in params, "missing parameter 'S'", "parameters")
        inner = algebra_document_from_json(params["S"])
        _expect(inner.metric is not None, "core document needs a metric", "parameters.S")
        sdim = inner.algebra.dim
        _expect("D" in params, "missing parameter 'D'", "parameters")
        D = _parse_matrix(params["D"], "parameters.D", sdim, sdim)
        m = params.get("m")
        _expect(isinstance(m, int) and m >= 1, "parameter m must be a positive integer",
                "parameters.m")
        if params.get("omega") is not None:
            omega = _parse_matrix(params["omega"], "parameters.omega", 2 * m, 2 * m)
            V = SymplecticSpace(omega)
        else:
            V = SymplecticSpace.standard(m)
        _expect("sigmaD" in params, "missing parameter 'sigmaD'", "parameters")
        sigma = _parse_matrix(params["sigmaD"], "parameters.sigmaD", 2 * m, 2 * m)
        q = build_with_heisenberg_ideal(inner.quadratic(), D, V, sigma)
        return AlgebraDocument(name, q.algebra, q.metric)

    _expect("g" in params, "missing parameter 'g'", "parameters")
    inner = algebra_document_from_json(params["g"])
    q = coadjoint_double(inner.algebra)
    return AlgebraDocument(name, q.algebra, q.metric)


def dumps_canonical(data: Any) -> str:
    """Canonical JSON bytes: sorted keys, two-space indent, one newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads_document(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return algebra_document_from_json(data)


def dumps_document(doc: AlgebraDocument) -> str:
    return dumps_canonical(algebra_document_to_json(doc))
