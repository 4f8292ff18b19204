"""Exact-arithmetic toolkit for quadratic Lie algebras with Heisenberg ideals.

Everything is computed over the rationals with no tolerances.  The main
entry points are the constructors in :mod:`quadlie.heisenberg`, the
structure analysis in :mod:`quadlie.structure`, and the ``quadlie`` CLI.
"""

from .exactla import (
    Matrix,
    Rational,
    Subspace,
    form_orthogonal,
    form_restrict_nondegenerate,
    format_rational,
    kernel,
    parse_rational,
    solve,
    sum_intersect,
)
from .errors import InternalVerificationError
from .liealg import (
    JacobiViolation,
    LieAlgebra,
    LinearMap,
    ad,
    bracket,
    center,
    centralizer,
    check_jacobi,
    derived_series,
    derived_subalgebra,
    direct_sum,
    ideal_generated_by,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    killing_form,
    lower_central_series,
    quotient,
    subalgebra_on,
    transport,
)
from .quadform import (
    BilinearForm,
    MetricViolation,
    QuadraticLieAlgebra,
    check_invariant_metric,
    flat,
    invariant_symmetric_forms,
    orthogonal_in,
    sharp,
    skew_derivation_space,
    split_by_nondegenerate_ideal,
    transport_quadratic,
)
from .heisenberg import (
    SymplecticMap,
    SymplecticSpace,
    build_with_heisenberg_ideal,
    coadjoint_double,
    double_extension,
    extend_heisenberg,
    heisenberg,
    standard_symplectic_matrix,
)
from .structure import (
    ComplementWitness,
    DecomposableVerdict,
    ExtendedHeisenbergVerdict,
    HeisenbergIdealData,
    NilradicalTheoremReport,
    NotApplicableVerdict,
    RecoveredStructure,
    complement_from_quotient_metric,
    find_heisenberg_ideal,
    has_invariant_quotient_metric,
    nilradical,
    quotient_metric_from_complement,
    radical,
    recognize_extended_heisenberg,
    recover_structure,
    verify_nilradical_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "ComplementWitness",
    "DecomposableVerdict",
    "ExtendedHeisenbergVerdict",
    "HeisenbergIdealData",
    "InternalVerificationError",
    "JacobiViolation",
    "LieAlgebra",
    "LinearMap",
    "Matrix",
    "MetricViolation",
    "NilradicalTheoremReport",
    "NotApplicableVerdict",
    "QuadraticLieAlgebra",
    "Rational",
    "RecoveredStructure",
    "Subspace",
    "SymplecticMap",
    "SymplecticSpace",
    "ad",
    "bracket",
    "build_with_heisenberg_ideal",
    "center",
    "centralizer",
    "check_invariant_metric",
    "check_jacobi",
    "coadjoint_double",
    "complement_from_quotient_metric",
    "derived_series",
    "derived_subalgebra",
    "direct_sum",
    "double_extension",
    "extend_heisenberg",
    "find_heisenberg_ideal",
    "flat",
    "form_orthogonal",
    "form_restrict_nondegenerate",
    "format_rational",
    "has_invariant_quotient_metric",
    "heisenberg",
    "ideal_generated_by",
    "invariant_symmetric_forms",
    "is_ideal",
    "is_nilpotent",
    "is_solvable",
    "is_subalgebra",
    "kernel",
    "killing_form",
    "lower_central_series",
    "nilradical",
    "orthogonal_in",
    "parse_rational",
    "quotient",
    "quotient_metric_from_complement",
    "radical",
    "recognize_extended_heisenberg",
    "recover_structure",
    "sharp",
    "skew_derivation_space",
    "solve",
    "split_by_nondegenerate_ideal",
    "standard_symplectic_matrix",
    "subalgebra_on",
    "sum_intersect",
    "transport",
    "transport_quadratic",
    "verify_nilradical_theorem",
]
