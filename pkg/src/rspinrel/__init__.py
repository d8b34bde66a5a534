"""Exact-arithmetic divisor relations on moduli of stable curves.

The library assembles the codimension-1 relations produced by the shifted
r-spin field theory on the moduli space of genus-g stable curves with n
markings, extracts their per-power-of-r consequences, pulls the genus-2
relation back along forgetful maps, and verifies everything against the known
complete set of degree-2 relations.  All arithmetic is exact: rationals,
polynomials in r, and cyclotomic integers.
"""

from .cohft import (
    IdempotentReport,
    PhiDegreeReport,
    PhiExponent,
    RSpinTheory,
    ScaleFactor,
    StructureConstants,
    idempotent_check,
    p_polynomial,
    p_polynomial_symbolic,
    phi_degree,
    quantum_structure_constants,
    r_forward_entry,
    r_forward_matrix,
    r_inverse_entry,
    r_inverse_matrix,
    topological_value,
    witten_degree,
)
from .linalg import RationalMatrix, determinant, rank_and_solve
from .relations import (
    AssemblyError,
    BasisMismatchError,
    DegreeGateError,
    GraphTerm,
    Relation,
    RelationSet,
    SpanReport,
    SystemDetReport,
    ac_relations,
    admissible_leg_vectors,
    assemble_relation,
    edge_constant_term,
    edge_series_coefficients,
    extract_r_coefficients,
    graph_contribution_terms,
    ppz_relation_set,
    pullback_genus2,
    spans_equal,
    system_matrix_det,
)
from .rpoly import InterpolationError, Rational, RPoly, poly_eval, poly_interpolate
from .selftest import CriterionResult, run_acceptance
from .strata import (
    DivisorClass,
    ExcludedFamily,
    GraphContribution,
    StabilityError,
    StableGraph,
    UnsupportedGenusError,
    Vertex,
    automorphism_order,
    canonical_divisor,
    delta_irr,
    delta_sep,
    divisor_class_of,
    divisor_generators,
    enumerate_contributing_graphs,
    excluded_contributions,
    kappa1,
    placement_count,
    psi,
)

__version__ = "0.1.0"
