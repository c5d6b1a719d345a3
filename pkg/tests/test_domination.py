import random
from fractions import Fraction as F

import pytest

from cyclecert.domination import (
    SearchBudget,
    Variant,
    decide_parameter_via_prefix,
    epn,
    induced_perfect_matching_exists,
    ipn,
    is_dominating,
    is_minimal_dominating,
    is_minimal_total_dominating,
    is_paired_dominating,
    is_total_dominating,
    max_minimal_parameter,
    min_parameter,
    paired_lower_bound,
    paired_value_c5,
    pn,
    prefix_pruned_search,
    rd_graph,
    rd_prefix_pruned_search,
    rd_vertex,
    verify_paired_c5,
    verify_upper_total_c4,
)
from cyclecert.errors import BudgetExceededError
from cyclecert.graphs import (
    Graph,
    cartesian_cycles,
    complete,
    complete_bipartite,
    cycle,
)
from cyclecert.structures import (
    CyclicSymmetry,
    VertexPartition,
    column_shift_symmetry,
    columns_partition,
)
from conftest import (
    brute_has_perfect_matching,
    brute_is_dominating,
    brute_is_paired_dominating,
    brute_is_total_dominating,
    brute_max_minimal_parameter,
    brute_min_parameter,
    random_graph,
    random_regular_graph,
)


SMALL_GRAPHS = [
    cycle(3),
    cycle(4),
    cycle(5),
    cycle(6),
    cycle(7),
    cycle(8),
    complete(2),
    complete(3),
    complete(5),
    complete_bipartite(2, 2),
    complete_bipartite(2, 3),
    complete_bipartite(3, 3),
    cartesian_cycles(3, 3),
]


# --- validators against set-arithmetic oracles --------------------------------


def test_validators_agree_with_definitions_on_random_sets():
    rng = random.Random(71)
    for _ in range(250):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, 0.45)
        s = {v for v in range(n) if rng.random() < 0.5}
        assert is_dominating(g, s) == brute_is_dominating(g, s)
        if all(g.adj[v] for v in range(n)):
            assert is_total_dominating(g, s) == brute_is_total_dominating(g, s)
            assert is_paired_dominating(g, s) == brute_is_paired_dominating(g, s)
        assert induced_perfect_matching_exists(g, s) == brute_has_perfect_matching(g, s)


def test_total_domination_rejects_isolated_vertices():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        is_total_dominating(g, {0, 1})
    with pytest.raises(ValueError):
        min_parameter(g, Variant.TOTAL)


def test_empty_set_dominates_nothing():
    assert not is_dominating(cycle(3), set())
    assert induced_perfect_matching_exists(cycle(3), set())


def test_vertex_out_of_range_rejected():
    with pytest.raises(ValueError):
        is_dominating(cycle(3), {5})


# --- private neighborhoods ----------------------------------------------------


def test_private_neighbors_on_star():
    # center 0 with leaves 1..3, set {0, 1}: each leaf sees S only at 0,
    # and that includes the member leaf 1 itself (open neighborhoods)
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    s = {0, 1}
    assert pn(g, s, 0) == frozenset({1, 2, 3})
    assert pn(g, s, 1) == frozenset({0})
    assert epn(g, s, 0) == frozenset({2, 3})
    assert ipn(g, s, 0) == frozenset({1})
    assert ipn(g, s, 1) == frozenset({0})
    assert epn(g, s, 1) == frozenset()


def test_pn_requires_membership():
    with pytest.raises(ValueError):
        pn(cycle(4), {0}, 1)


def test_minimal_total_dominating_criterion_matches_removal_test():
    rng = random.Random(37)
    checked = 0
    while checked < 150:
        n = rng.randint(3, 9)
        g = random_graph(rng, n, 0.5)
        if not all(g.adj[v] for v in range(n)):
            continue
        s = {v for v in range(n) if rng.random() < 0.6}
        if not brute_is_total_dominating(g, s):
            continue
        checked += 1
        removal = all(
            not brute_is_total_dominating(g, s - {v}) for v in s
        )
        assert is_minimal_total_dominating(g, s) == removal


def test_minimal_total_dominating_rejects_non_td():
    with pytest.raises(ValueError):
        is_minimal_total_dominating(cycle(4), {0})


def test_minimal_dominating_definitional():
    g = cycle(6)
    assert is_minimal_dominating(g, {0, 3})
    assert not is_minimal_dominating(g, {0, 1, 3})
    with pytest.raises(ValueError):
        is_minimal_dominating(g, {0})


# --- redundancy counts ----------------------------------------------------------


def test_rd_vertex_values_on_cycle():
    g = cycle(5)
    s = {0, 1}
    # closed neighborhoods: 0 sees {4,0,1}, 1 sees {0,1,2}, 2 sees {1}, ...
    assert rd_vertex(g, s, 0) == 1
    assert rd_vertex(g, s, 1) == 1
    assert rd_vertex(g, s, 2) == 0
    assert rd_vertex(g, s, 3) == -1  # undominated
    assert rd_graph(g, s) == sum(rd_vertex(g, s, u) for u in range(5))


def test_rd_identity_on_regular_graphs():
    # on a k-regular graph the total redundancy of any set S is
    # (k+1)|S| - |V| plus one for each undominated vertex... no: it is
    # exactly (k+1)|S| - |V| always, domination not required
    rng = random.Random(99)
    for _ in range(60):
        n, d = rng.choice([(8, 3), (10, 3), (8, 4), (12, 4)])
        g = random_regular_graph(rng, n, d)
        s = {v for v in range(n) if rng.random() < 0.5}
        assert rd_graph(g, s) == (d + 1) * len(s) - n


# --- exact solvers vs exhaustive oracles -----------------------------------------


@pytest.mark.parametrize("variant", ["dominating", "total", "paired"])
def test_min_parameter_matches_brute_on_small_graphs(variant):
    for g in SMALL_GRAPHS:
        want = brute_min_parameter(g, variant)
        report = min_parameter(g, Variant(variant))
        assert report.value == want, f"{variant} on {g.n}-vertex graph"
        witness = set(report.witness)
        assert len(witness) == report.value
        if variant == "dominating":
            assert is_dominating(g, witness)
        elif variant == "total":
            assert is_total_dominating(g, witness)
        else:
            assert is_paired_dominating(g, witness)


def test_min_parameter_matches_brute_on_random_graphs():
    rng = random.Random(13)
    tried = 0
    while tried < 40:
        n = rng.randint(3, 9)
        g = random_graph(rng, n, 0.5)
        if not all(g.adj[v] for v in range(n)):
            continue
        tried += 1
        for variant in ("dominating", "total", "paired"):
            want = brute_min_parameter(g, variant)
            if want is None:
                with pytest.raises(ValueError):
                    min_parameter(g, Variant(variant))
            else:
                assert min_parameter(g, Variant(variant)).value == want


def test_paired_witness_is_a_disjoint_edge_union():
    report = min_parameter(cartesian_cycles(5, 3), Variant.PAIRED)
    witness = set(report.witness)
    assert report.value == len(witness) == 4
    assert is_paired_dominating(cartesian_cycles(5, 3), witness)


def test_paired_requires_an_edge_somewhere():
    # a triangle with a pendant path: paired sets exist; but an edgeless
    # graph has none and the solver must say so, not loop
    g = Graph.from_edges(2, [(0, 1)])
    assert min_parameter(g, Variant.PAIRED).value == 2


@pytest.mark.parametrize("variant", ["dominating", "total"])
def test_max_minimal_matches_brute_on_small_graphs(variant):
    for g in SMALL_GRAPHS:
        want = brute_max_minimal_parameter(g, variant)
        report = max_minimal_parameter(g, Variant(variant))
        assert report.value == want
        witness = set(report.witness)
        if variant == "dominating":
            assert is_minimal_dominating(g, witness)
        else:
            assert is_minimal_total_dominating(g, witness)


def test_max_minimal_rejects_paired():
    with pytest.raises(ValueError):
        max_minimal_parameter(cycle(4), Variant.PAIRED)


def test_node_budget_trips():
    with pytest.raises(BudgetExceededError):
        min_parameter(cartesian_cycles(4, 4), Variant.TOTAL, SearchBudget(max_nodes=1))


def test_time_budget_trips():
    with pytest.raises(BudgetExceededError):
        max_minimal_parameter(
            cartesian_cycles(4, 5), Variant.TOTAL,
            SearchBudget(max_nodes=10**9, max_seconds=0.0),
        )


# --- closed form and its verification --------------------------------------------


def test_paired_closed_form_values():
    assert [paired_value_c5(n) for n in range(3, 9)] == [4, 6, 8, 8, 10, 12]
    with pytest.raises(ValueError):
        paired_value_c5(2)


def test_paired_closed_form_is_even():
    assert all(paired_value_c5(n) % 2 == 0 for n in range(3, 40))


def test_paired_lower_bound_even_and_sound():
    g = cartesian_cycles(5, 3)
    lb = paired_lower_bound(g)
    assert lb % 2 == 0
    assert lb <= min_parameter(g, Variant.PAIRED).value


def test_verify_paired_c5_small():
    assert verify_paired_c5(3)
    assert verify_paired_c5(4)


def test_verify_upper_total_c4_small():
    assert verify_upper_total_c4(3)


# --- prefix-pruned searches -------------------------------------------------------


def torus_setup(m, n):
    g = cartesian_cycles(m, n)
    return g, columns_partition(m, n), column_shift_symmetry(m, n)


def test_prefix_search_finds_valid_set_with_bounded_prefixes():
    g, p, sigma = torus_setup(3, 3)
    h = 3
    found = prefix_pruned_search(g, p, sigma, Variant.DOMINATING, h)
    assert found is not None
    assert is_dominating(g, found)
    assert len(found) <= h
    counts = [len(found & part) for part in p.parts]
    t = len(p.parts)
    acc = 0
    for j, cnt in enumerate(counts, start=1):
        acc += cnt
        assert F(acc) < F(j) * (F(h) + F(1, 2)) / t


def test_prefix_search_refutes_below_minimum():
    g, p, sigma = torus_setup(3, 3)
    # gamma of the 3x3 torus is 3; at bound 2 + eps nothing fits
    assert prefix_pruned_search(g, p, sigma, Variant.DOMINATING, 2) is None


@pytest.mark.parametrize("m,n,variant", [(3, 3, "dominating"), (3, 3, "total"), (4, 3, "dominating")])
def test_decide_agrees_with_solver_for_every_h(m, n, variant):
    g, p, sigma = torus_setup(m, n)
    true_value = min_parameter(g, Variant(variant)).value
    for h in range(1, g.n + 1):
        decided = decide_parameter_via_prefix(g, p, sigma, Variant(variant), h)
        assert decided == (h == true_value), f"h={h}"


def test_decide_paired_on_torus():
    g, p, sigma = torus_setup(5, 3)
    assert decide_parameter_via_prefix(g, p, sigma, Variant.PAIRED, 4)
    assert not decide_parameter_via_prefix(g, p, sigma, Variant.PAIRED, 6)


def test_prefix_search_requires_verified_shift():
    g, p, _ = torus_setup(3, 3)
    broken = CyclicSymmetry((0, 1, 2, 3, 4, 5, 6, 7, 8))  # identity: no shift
    with pytest.raises(ValueError):
        prefix_pruned_search(g, p, broken, Variant.DOMINATING, 3)


def test_rd_prefix_search_decides_gamma():
    g, p, sigma = torus_setup(3, 3)
    # gamma = 3: redundancy target (4+1)*3 - 9 = 6 is reachable...
    assert rd_prefix_pruned_search(g, p, sigma, 3) is not None
    assert rd_prefix_pruned_search(g, p, sigma, 2) is None
    found = rd_prefix_pruned_search(g, p, sigma, 3)
    assert is_dominating(g, found)


def test_rd_prefix_search_needs_regular_graph():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    p = VertexPartition((frozenset({0, 1}), frozenset({2, 3})))
    sigma = CyclicSymmetry((2, 3, 0, 1))
    with pytest.raises(ValueError):
        rd_prefix_pruned_search(g, p, sigma, 2)


def test_prefix_search_epsilon_range():
    g, p, sigma = torus_setup(3, 3)
    with pytest.raises(ValueError):
        prefix_pruned_search(g, p, sigma, Variant.DOMINATING, 3, epsilon=F(3, 2))
    with pytest.raises(ValueError):
        decide_parameter_via_prefix(g, p, sigma, Variant.DOMINATING, 3, epsilon=F(0))


# --- reports ---------------------------------------------------------------------


def test_solve_report_fields():
    report = min_parameter(cycle(5), Variant.DOMINATING)
    assert report.value == 2
    assert report.nodes_explored > 0
    assert report.pruned_by_prefix == 0
    assert report.witness == tuple(sorted(report.witness))
