"""Exact-arithmetic toolkit for orthogonal symmetric pairs.

Builds symmetric pairs (cotangent and swap families) over Q, constructs and
certifies Pukanszky polarizations of regular forms, expands the determinant
series J and its square root, and verifies that the corrected symmetrization
map is an algebra isomorphism onto the invariant quotient, all without a
single floating point number.
"""

from .errors import (
    AdjointNotInK,
    BaseCaseUnsupported,
    FormDegenerate,
    FormNotInvariant,
    NilradicalVerificationFailed,
    NonRationalSpectrum,
    NotASubalgebra,
    NotInvariant,
    NotSemisimple,
    ParseError,
    RadicalVerificationFailed,
    SympairError,
    UsageError,
    ValidationError,
    VariableCountMismatch,
)
from .exactla import Mat, UniPoly, charpoly, jordan_chevalley, kernel, minpoly, rational_roots, solve
from .lie_core import (
    LieAlgebra,
    Subspace,
    centralizer_of_form,
    check_axioms,
    eigensplit,
    is_nilpotent,
    nilradical,
    solvable_radical,
    subalgebra_generated,
)
from .pairs import (
    BUILTIN_PAIRS,
    SymmetricPair,
    builtin_algebra,
    builtin_pair,
    delta_character,
    form_centralizer,
    is_regular,
    make_cotangent_pair,
    make_swap_pair,
    regularity_conditions,
    sample_regular,
    xf_of_form,
)
from .polarization import (
    Polarization,
    construct_polarization,
    pukanszky_check,
    sample_polarizable_forms,
    verify_polarization,
)
from .poly_series import (
    MultiPoly,
    TruncSeries,
    apply_cc_operator,
    invariants_up_to_degree,
    j_half,
    j_series,
    k_derivation,
)
from .pbw_quotient import (
    PBWElement,
    QuotientClass,
    class_k_action,
    class_multiply,
    commutativity_check,
    is_invariant_class,
    pbw_context,
    pbw_multiply,
    reduce_mod_ideal,
    rouviere,
    symmetrize,
    verify_rouviere_homomorphism,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointNotInK",
    "BaseCaseUnsupported",
    "FormDegenerate",
    "FormNotInvariant",
    "NilradicalVerificationFailed",
    "NonRationalSpectrum",
    "NotASubalgebra",
    "NotInvariant",
    "NotSemisimple",
    "ParseError",
    "RadicalVerificationFailed",
    "SympairError",
    "UsageError",
    "ValidationError",
    "VariableCountMismatch",
    "Mat",
    "UniPoly",
    "charpoly",
    "jordan_chevalley",
    "kernel",
    "minpoly",
    "rational_roots",
    "solve",
    "LieAlgebra",
    "Subspace",
    "centralizer_of_form",
    "check_axioms",
    "eigensplit",
    "is_nilpotent",
    "nilradical",
    "solvable_radical",
    "subalgebra_generated",
    "BUILTIN_PAIRS",
    "SymmetricPair",
    "builtin_algebra",
    "builtin_pair",
    "delta_character",
    "form_centralizer",
    "is_regular",
    "make_cotangent_pair",
    "make_swap_pair",
    "regularity_conditions",
    "sample_regular",
    "xf_of_form",
    "Polarization",
    "construct_polarization",
    "pukanszky_check",
    "sample_polarizable_forms",
    "verify_polarization",
    "MultiPoly",
    "TruncSeries",
    "apply_cc_operator",
    "invariants_up_to_degree",
    "j_half",
    "j_series",
    "k_derivation",
    "PBWElement",
    "QuotientClass",
    "class_k_action",
    "class_multiply",
    "commutativity_check",
    "is_invariant_class",
    "pbw_context",
    "pbw_multiply",
    "reduce_mod_ideal",
    "rouviere",
    "symmetrize",
    "verify_rouviere_homomorphism",
    "__version__",
]
