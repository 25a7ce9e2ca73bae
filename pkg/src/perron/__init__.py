"""Exact characteristic polynomials of multi-digraphs via cycle covers,
certified brackets for their leading real roots, and exhaustive searches over
low-complexity digraph shapes."""

from .charpoly import (
    LinearSubdigraph,
    char_poly_ct,
    char_poly_oracle,
    enumerate_linear_subdigraphs,
)
from .digraph import (
    Cycle,
    MultiDigraph,
    canonical_form,
    complexity,
    cycle_digraph,
    enumerate_elementary_cycles,
    is_primitive,
    is_primitive_power,
    is_strongly_connected,
)
from .errors import (
    CounterexampleError,
    FixtureNotFound,
    Inconclusive,
    NoRootAtLeastOne,
    ParameterRangeError,
    PerronError,
    RefinementLimitError,
    ResourceLimitError,
)
from .families import (
    GenusBound,
    Shape,
    build_shape_22,
    build_shape_nc,
    c4_polynomial,
    hironaka_bound,
    lt_polynomial,
    ring_shape,
    ring_shape_with_through,
)
from .io import digraph_from_json_obj, digraph_to_json_obj, format_digraph, parse_digraph
from .polynomial import (
    IntPolynomial,
    PalindromeClass,
    classify_palindrome,
    eval_at_one,
    format_coefficient_list,
    format_polynomial,
    parse_polynomial,
)
from .search import (
    SearchReport,
    SurvivorEntry,
    count_realizations,
    enumerate_digraphs,
    genus_candidates,
    reconstruct_figure4,
    verify_case_c_le_2,
    verify_case_odd_diagonal,
)
from .spectral import (
    RootResult,
    ham_song_check,
    largest_real_root,
    monotonicity_witness,
    pf_eigenvalue,
)

__version__ = "0.1.0"
