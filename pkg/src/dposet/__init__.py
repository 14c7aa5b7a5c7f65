"""Exact combinatorial Hopf algebras of double posets and permutations.

The basis objects are double posets (finite sets with two partial orders),
their special/plane/forest subfamilies, and permutations; the operations are
the composition product, the ideal coproduct, the picture pairing, linear
extension maps into the permutation algebra, dendriform and duplicial
refinements, and exact integer linear algebra over the pairing matrices.
Everything is computed over exact scalars (fractions and Gaussian rationals).
"""

from .algebra import (
    GaussRat,
    LinComb,
    Tensor,
    antipode,
    apply_slot,
    as_lincomb,
    coproduct,
    format_lincomb,
    format_scalar,
    gram_matrix,
    lc_product,
    pairing,
    parse_lincomb,
    parse_scalar,
    reduced_coproduct,
    tensor_of,
)
from .dupdend import (
    AXIOM_SUITES,
    check_axioms,
    prim_tot_basis,
    sp_dendriform_coproducts,
    sp_nwarrow,
    spf_prec,
    spf_succ,
    spp_dendriform_coproducts,
)
from .fqsym import (
    Permutation,
    fq_coproduct,
    fq_dendriform_coproducts,
    fq_nwarrow,
    fq_pairing,
    fq_reduced_coproduct,
    parse_permutation,
    shuffle_product,
    standardize,
    weak_interval_down,
    weak_order_leq,
)
from .linalg import (
    ISOMETRY_VARIANTS,
    CongruenceCertificate,
    GradedMapSpec,
    build_isometry,
    congruence_diagonalize,
    det,
    mat_inverse,
    mat_mul,
    plane_to_special_isometry,
    rank_kernel,
    verify_graded_isometry,
)
from .morphisms import (
    bruhat_interval_check,
    linear_extensions,
    pairing_kernel_basis,
    phi,
    psi,
    rewrite_step,
    theta,
    theta_hof_inverse,
    upsilon,
    upsilon_by_rewriting,
)
from .poset_core import (
    DoublePoset,
    Family,
    SpecialPoset,
    b_plus,
    canonical_form,
    classify,
    compose,
    empty_poset,
    enumerate_family,
    format_poset,
    ideals,
    iota,
    kappa,
    max_degree,
    nwarrow,
    parse_poset,
    plane_version,
    restrict,
    reverse_rel2,
)
from .series import RatSeries, decoration_counts, poincare_series

__version__ = "0.1.0"

__all__ = [
    "AXIOM_SUITES",
    "CongruenceCertificate",
    "DoublePoset",
    "Family",
    "GaussRat",
    "GradedMapSpec",
    "ISOMETRY_VARIANTS",
    "LinComb",
    "Permutation",
    "RatSeries",
    "SpecialPoset",
    "Tensor",
    "antipode",
    "apply_slot",
    "as_lincomb",
    "b_plus",
    "bruhat_interval_check",
    "build_isometry",
    "canonical_form",
    "check_axioms",
    "classify",
    "compose",
    "congruence_diagonalize",
    "coproduct",
    "decoration_counts",
    "det",
    "empty_poset",
    "enumerate_family",
    "format_lincomb",
    "format_poset",
    "format_scalar",
    "fq_coproduct",
    "fq_dendriform_coproducts",
    "fq_nwarrow",
    "fq_pairing",
    "fq_reduced_coproduct",
    "gram_matrix",
    "ideals",
    "iota",
    "kappa",
    "lc_product",
    "linear_extensions",
    "mat_inverse",
    "mat_mul",
    "max_degree",
    "nwarrow",
    "pairing",
    "pairing_kernel_basis",
    "parse_lincomb",
    "parse_permutation",
    "parse_poset",
    "parse_scalar",
    "phi",
    "plane_to_special_isometry",
    "plane_version",
    "poincare_series",
    "prim_tot_basis",
    "psi",
    "rank_kernel",
    "reduced_coproduct",
    "restrict",
    "reverse_rel2",
    "rewrite_step",
    "shuffle_product",
    "sp_dendriform_coproducts",
    "sp_nwarrow",
    "spf_prec",
    "spf_succ",
    "spp_dendriform_coproducts",
    "standardize",
    "tensor_of",
    "theta",
    "theta_hof_inverse",
    "upsilon",
    "upsilon_by_rewriting",
    "verify_graded_isometry",
    "weak_interval_down",
    "weak_order_leq",
]
