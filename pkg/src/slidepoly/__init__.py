"""Slide polynomials, quasi-Yamanouchi pipe dreams and Schubert products.

Everything is exact integer arithmetic on sparse polynomials and
finite combinatorial sets. See the submodules for the individual pieces.
"""

from .core import (
    DomainError,
    Permutation,
    code_to_permutation,
    descent_composition,
    dominates,
    embed_left,
    flatten,
    grassmannian,
    lehmer_code,
    parse_composition,
    reduced_words,
)
from .pipedreams import (
    PipeDream,
    destandardize_pd,
    enumerate_pipe_dreams,
    enumerate_qpd,
    eta,
    qpd_count_profile,
    schubert_polynomial,
    schubert_to_fundamental_slide,
    sit,
    standardize_pd,
)
from .polynomial import (
    Expansion,
    Polynomial,
    expand_fundamental_qsym,
    expand_fundamental_slide,
    expand_monomial_qsym,
    expand_monomial_slide,
    fundamental_slide_to_monomial_slide,
    to_fundamental_slide_basis,
    to_monomial_slide_basis,
)
from .products import (
    FormalSum,
    bump_quasi,
    bump_slide,
    fundamental_qsym_product,
    monomial_qsym_product,
    quasi_shuffle,
    quasi_shuffle_set,
    quasi_slide_product,
    schubert_product,
    schubert_product_slide,
    shuffle_set,
    slide_expansion_to_schubert,
    slide_product,
)
from .stability import (
    schubert_product_stabilization_oracle,
    slide_product_stabilization_profile,
    stanley_product,
    stanley_via_reduced_words,
    stanley_via_stable_slide,
    zeta_perm,
    zeta_strong,
    zeta_weak,
)
from .tableaux import (
    Tableau,
    destandardize_tableau,
    enumerate_qyt,
    enumerate_ssyt,
    enumerate_syt,
    schur_polynomial,
    schur_via_qyt,
    schur_via_ssyt,
    schur_via_syt,
)

__version__ = "0.1.0"

__all__ = [
    "bump_quasi",
    "bump_slide",
    "code_to_permutation",
    "descent_composition",
    "destandardize_pd",
    "destandardize_tableau",
    "DomainError",
    "dominates",
    "embed_left",
    "enumerate_pipe_dreams",
    "enumerate_qpd",
    "enumerate_qyt",
    "enumerate_ssyt",
    "enumerate_syt",
    "eta",
    "expand_fundamental_qsym",
    "expand_fundamental_slide",
    "expand_monomial_qsym",
    "expand_monomial_slide",
    "Expansion",
    "flatten",
    "FormalSum",
    "fundamental_qsym_product",
    "fundamental_slide_to_monomial_slide",
    "grassmannian",
    "lehmer_code",
    "monomial_qsym_product",
    "parse_composition",
    "Permutation",
    "PipeDream",
    "Polynomial",
    "qpd_count_profile",
    "quasi_shuffle",
    "quasi_shuffle_set",
    "quasi_slide_product",
    "reduced_words",
    "schubert_polynomial",
    "schubert_product",
    "schubert_product_slide",
    "schubert_product_stabilization_oracle",
    "schubert_to_fundamental_slide",
    "schur_polynomial",
    "schur_via_qyt",
    "schur_via_ssyt",
    "schur_via_syt",
    "shuffle_set",
    "sit",
    "slide_expansion_to_schubert",
    "slide_product",
    "slide_product_stabilization_profile",
    "standardize_pd",
    "stanley_product",
    "stanley_via_reduced_words",
    "stanley_via_stable_slide",
    "Tableau",
    "to_fundamental_slide_basis",
    "to_monomial_slide_basis",
    "zeta_perm",
    "zeta_strong",
    "zeta_weak",
]
