import pytest

import chromabound as cb


def test_triangle_and_single_edge():
    k3 = cb.chromatic_polynomial(cb.generate("complete:n=3"))
    assert k3.magnitudes == [2, 3, 1]
    assert k3.evaluate(3) == 6
    assert str(cb.chromatic_polynomial(cb.parse_edge_list("0 1"))) == "q^2 - q"


def test_memoized_matches_plain():
    g = cb.generate("petersen")
    assert cb.chromatic_polynomial(g, memoize=True) == cb.chromatic_polynomial(g)


def test_oracles_agree():
    g = cb.generate("randomGnm:n=6,m=9", seed=3)
    p = cb.chromatic_polynomial(g)
    for q in range(g.vertex_count + 1):
        assert p.evaluate(q) == cb.brute_force_colorings(g, q)
    order = [e[2] for e in reversed(g.edges)]
    assert cb.coefficients_via_broken_circuits(g, order) == p


def test_big_values_are_python_ints():
    p = cb.chromatic_polynomial(cb.generate("complete:n=8"))
    assert p.evaluate(10**12) == p.evaluate(10**12)
    assert isinstance(p.evaluate(10**6), int)
    assert cb.binom(200, 100) > 2**64


def test_cycle_census():
    k4 = cb.generate("complete:n=4")
    assert cb.girth(k4) == 3
    assert cb.girth(cb.generate("path:n=4")) is None
    assert cb.count_cycles(k4, 4) == 3
    assert cb.count_cycles_through_edge(k4, 0, 3) == 2
    report = cb.verify_lemma2(k4, 0, 4)
    assert report["triangle_case"]
    assert report["rows"][0]["predicted_contracted"] == 2
    assert report["rows"][0]["measured_contracted"] == 1


def test_bounds_for_complete_four():
    p = cb.BoundParams(e=6, v=4, g=3, kg=4, lg=2, lgp1star=0, r=1)
    assert cb.li_tian_bound(p) == 10
    assert cb.s_term(p) == 2
    assert cb.triangle_correction(p) == 2
    assert cb.improved_bound(p) == cb.improved_bound_alt(p) == 6
    assert cb.lemma1_sides(10, 2, 2) == (-44, -44)
    assert cb.leading_coefficient(6, 4, 3, 4, 2) == 11
    assert cb.leading_coefficient(6, 4, 3, 4, 1) is None


def test_bound_report_formats():
    g = cb.generate("complete:n=4")
    report = cb.bound_report(g)
    assert report["rows"][0]["exact"] == "6"
    assert cb.select_edge(g, 1)["id"] == "0"
    csv = cb.bound_report(g, mode="fixed", format="csv")
    assert csv.startswith("r,exact,li_tian,improved,edge,lg,lgp1star,S,flags")


def test_additivity_and_chain():
    g = cb.generate("cycle:n=5")
    assert cb.verify_additivity(g, 0)["holds"]
    prop = cb.check_proposition1(cb.chromatic_polynomial(g), g.edge_count)
    assert not prop["nondecreasing_chain"] and prop["consistent"]


def test_errors_map_to_value_error():
    with pytest.raises(cb.ChromaboundError):
        cb.parse_edge_list("0 0")
    with pytest.raises(ValueError):
        cb.generate("randomGnm:n=5,m=6")
    with pytest.raises(ValueError):
        cb.bound_report(cb.generate("path:n=3"))
    with pytest.raises(ValueError):
        cb.delete_edge(cb.generate("cycle:n=4"), 42)


def test_suite_runner():
    assert "theorem1" in cb.suite_names()
    summary = cb.run_suite("lemma1", "empty")
    assert summary["ok"]
    assert summary["suites"]["lemma1"]["failed"] == "0"
