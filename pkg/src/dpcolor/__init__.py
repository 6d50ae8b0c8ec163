"""Exact chromatic polynomials and DP color functions of small graphs."""

from .chrompoly import (
    BudgetExceeded,
    IntPolynomial,
    broken_circuit_coeffs,
    chordal_product_poly,
    chromatic_number,
    chromatic_polynomial,
    clique_sum_poly,
    eval_poly,
)
from .cover import (
    Cover,
    count_colorings,
    gauge_normalize,
    identity_cover,
    path_case_cover,
    random_cover,
    twisted_edge_cover,
)
from .dpmin import (
    BoundReport,
    DpMinResult,
    dp_exact,
    dp_formula,
    dp_value,
    edge_delete_extremal_cover,
    edge_delete_extremal_value,
    greedy_lower_bound,
    join_lower_bound,
    monte_carlo_bound,
    path_delete_quantities,
    strict_gap_witness,
)
from .graph import (
    Graph,
    GraphError,
    build_family,
    chordal_peo,
    clique_sum,
    degeneracy_ordering,
    girth_and_count,
    join_with_complete,
)

__version__ = "0.1.0"
