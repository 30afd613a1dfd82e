"""Exact-arithmetic toolkit for quantum linear superspaces.

Builds objects (complementary decompositions of the tensor square of a
dual space), derives the quadratic relations of the matrix-entry algebras
between them, and verifies their structure: projector combinations and the
braid relation, the classical-dimension (PBW) criterion with an exact
dimension oracle and a cubic-overlap confluence check, the coalgebra
axioms, and the 2x2 quantum determinant.
"""

from .bialgebra import (
    ComposableTriple,
    WrongShape,
    coassociativity_check,
    composable_triple,
    comultiplication_check,
    counit_check,
    determinant_2x2,
    determinant_multiplicativity,
)
from .graded import (
    DegreeMismatch,
    GradedSpace,
    even_space,
    koszul_gram,
    koszul_pairing,
    pi_image,
    pi_matrix,
    space_of,
    tensor_power_basis,
)
from .homs import (
    AlphabetMismatch,
    ComponentCountMismatch,
    HomAlgebra,
    RelationSet,
    bilinear_form_relations,
    degree2_quotient,
    derive_relations_general,
    derive_relations_sudbery,
    hom_algebra,
    relation_set,
    spans_equal,
)
from .linalg import (
    Matrix,
    NotComplementary,
    annihilator,
    kernel_basis,
    projectors,
    rank,
    rank_bareiss,
)
from .pbw import (
    Extraction,
    PBWVerdict,
    TooLarge,
    classical_dimension,
    dimension_oracle,
    pbw_criterion,
    pbw_extract_constant,
)
from .rewrite import (
    Alphabet,
    NCPoly,
    RewriteSystem,
    build_rewrite_system,
    confluence_check,
    failed_overlaps,
    format_poly,
    matrix_alphabet,
    monomial_compare,
    normal_form,
)
from .rmatrix import (
    BMatrix,
    RepeatedCoefficient,
    build_B,
    normalized_B,
    rmatrix_relation_span,
    yang_baxter_check,
)
from .spaces import (
    BadParameters,
    QuantumObject,
    dual_object,
    make_classical,
    make_general,
    make_normalized,
    make_sudbery,
    objects_equal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
