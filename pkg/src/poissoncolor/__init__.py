"""Exact computations with finite-dimensional Poisson color algebras of degree g0."""

from .algebra import (
    BRACKET,
    PRODUCT,
    Ambient,
    ColorAlgebra,
    Element,
    Subspace,
    bilinear_eval,
    bracket,
    product,
    product_of_subspaces,
    subspace_contains,
    subspace_intersection,
    subspace_span,
    subspace_sum,
)
from .axioms import (
    LAWS,
    AxiomReport,
    check_axioms,
    compute_center,
    is_centerless,
    is_maximal_length,
    is_sigma_multiplicative,
    is_symmetric_support,
    is_tight,
    sigma_multiplicativity_violations,
    tightness_witness,
)
from .bicharacter import Bicharacter, parity_bicharacter, trivial_bicharacter, validate_bicharacter
from .connections import (
    Connection,
    RestrictedSupport,
    SupportPartition,
    compose_connections,
    equivalence_classes,
    find_connection,
    restricted_support,
    reverse_connection,
    verify_connection,
)
from .decomposition import (
    DecompositionReport,
    IdealDescriptor,
    compute_ideal,
    compute_p_alpha,
    decompose,
    extract_component,
    ideal_generated_by,
    is_simple,
    minimal_ideal_decomposition,
    simplicity_hypotheses,
    verify_orthogonality,
)
from .errors import *  # noqa: F401,F403
from .fileformat import TwoTorsionWarning, algebra_to_json, load_algebra, parse_algebra_file, serialize_algebra
from .group import GroupElement, GroupSpec, group_add, group_neg, is_free_of_2_torsion
from .library import (
    berezin,
    builtin_example,
    builtin_names,
    change_basis,
    direct_sum,
    group_algebra,
    odd_line,
    orthogonal_sum,
    random_change_basis,
    regrade,
    tensor_group_algebra,
)
from .report import ReportOptions, render_text, run_report, to_json_text
from .scalars import GF, QQ, FieldSpec, Scalar, scalar_arith, scalar_pow

__version__ = "0.1.0"
