"""Lexicographic degree bounds for two-bridge knots."""

from .arith import (
    Catalog,
    KnotRecord,
    SchubertFraction,
    catalog_lookup,
    cf_eval,
    cf_expand_positive,
    default_catalog,
    fraction_equivalent,
    parse_fraction,
)
from .diagram import (
    TrigonalDiagram,
    complexity,
    conway_normal_form,
    crossing_number,
    gauss_sign_changes,
    identify_knot,
    is_simple_candidate,
    islets,
    lagrange_step,
)
from .enumeration import (
    DegreeTriple,
    chebyshev_degree,
    enumerate_simple_diagrams,
    m_C,
    table_budget,
)
from .planereduce import (
    DegreeReport,
    PlaneWord,
    ReductionTrace,
    apply_R,
    b_lower_bound,
    degree_verdict,
    inverse_R,
    neighbors,
    project,
    reduction_search,
    same_word_class,
)
from .report import TableRow, build_table, diff_expected, emit

__version__ = "0.1.0"
