"""Exact chromatic polynomials, circuit censuses and coefficient bounds."""

from ._core import (
    BoundParams,
    ChromaticPolynomial,
    ChromaboundError,
    Graph,
    binom,
    bound_report,
    brute_force_colorings,
    check_proposition1,
    chromatic_polynomial,
    coefficients_via_broken_circuits,
    contract_edge,
    count_cycles,
    count_cycles_star,
    count_cycles_through_edge,
    delete_edge,
    generate,
    girth,
    improved_bound,
    improved_bound_alt,
    leading_coefficient,
    lemma1_sides,
    li_tian_bound,
    normalize_labels,
    parse_edge_list,
    run_suite,
    s_term,
    select_edge,
    simplify,
    suite_names,
    triangle_correction,
    verify_additivity,
    verify_lemma2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
