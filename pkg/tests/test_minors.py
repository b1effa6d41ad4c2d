import random

import pytest

from hadwiger import graphs, minors
from hadwiger.errors import BudgetExceeded, CapacityExceeded, SideInvalid
from hadwiger.minors import MinorModel
from oracles import bramble_order, check_tree_decomposition, naive_eta


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graphs.from_edges(10, outer + spokes + inner)


def c6_triangle_model():
    c6 = graphs.cycle_graph(6)
    sets = {0: frozenset({0, 1}), 1: frozenset({2, 3}), 2: frozenset({4, 5})}
    return MinorModel(c6, graphs.complete_graph(3), sets, 1)


def test_verify_model_passes_c6_contraction():
    assert minors.verify_model(c6_triangle_model()).ok


def test_verify_model_detects_disconnected_set():
    m = c6_triangle_model()
    bad = MinorModel(m.host, m.pattern, {**m.branch_sets, 0: frozenset({0, 3})}, 1)
    rep = minors.verify_model(bad)
    assert any(c.name == "sets-connected" and c.witness == [0] for c in rep.failures)


def test_verify_model_detects_overlap():
    m = c6_triangle_model()
    bad = MinorModel(m.host, m.pattern, {**m.branch_sets, 0: frozenset({0, 1, 2})}, 1)
    rep = minors.verify_model(bad)
    assert any(c.name.startswith("capacity") for c in rep.failures)


def test_verify_model_detects_missing_pattern_edge():
    host = graphs.from_edges(4, [(0, 1), (2, 3)])
    sets = {0: frozenset({0, 1}), 1: frozenset({2}), 2: frozenset({3})}
    rep = minors.verify_model(MinorModel(host, graphs.complete_graph(3), sets, 1))
    assert any(c.name == "pattern-edges-touch" for c in rep.failures)


def k4_in_c4_overlap_model():
    """Every C_4 vertex carries two branch sets; touch is by shared vertices."""
    c4 = graphs.cycle_graph(4)
    sets = {
        0: frozenset({0, 1}),
        1: frozenset({1, 2}),
        2: frozenset({2, 3}),
        3: frozenset({3, 0}),
    }
    return MinorModel(c4, graphs.complete_graph(4), sets, 2)


def test_overlap_model_verifies_with_multiplicity_2():
    assert minors.verify_model(k4_in_c4_overlap_model()).ok


def test_model_to_lex_gives_disjoint_model():
    lifted = minors.model_to_lex(k4_in_c4_overlap_model(), 2)
    assert lifted.multiplicity == 1
    assert minors.verify_model(lifted).ok
    assert lifted.host.n == 8


def test_model_to_lex_rejects_overloaded_vertex():
    m = k4_in_c4_overlap_model()
    with pytest.raises(CapacityExceeded):
        minors.model_to_lex(m, 1)


def test_lex_round_trip():
    m = k4_in_c4_overlap_model()
    lifted = minors.model_to_lex(m, 2)
    back = minors.lex_to_model(lifted, m.host, 2)
    assert minors.verify_model(back).ok
    assert back.branch_sets == m.branch_sets


def test_model_to_lex_k1_is_identity_up_to_labels():
    m = c6_triangle_model()
    lifted = minors.model_to_lex(m, 1)
    assert minors.verify_model(lifted).ok
    assert {frozenset(s) for s in lifted.branch_sets.values()} == {
        frozenset(s) for s in m.branch_sets.values()
    }


def test_project_model_cliquesum():
    k4a = graphs.complete_graph(4)
    k4b = graphs.complete_graph(4).relabel(["a", "b", "c", "d"])
    s, m1, m2 = graphs.clique_sum_with_embeddings(k4a, [0, 1, 2], k4b, [0, 1, 2])
    # three joint vertices plus the private vertex of side b
    sets = {
        0: frozenset({0}),
        1: frozenset({1}),
        2: frozenset({2}),
        3: frozenset({4}),
    }
    model = MinorModel(s, graphs.complete_graph(4), sets, 1)
    assert minors.verify_model(model).ok
    with pytest.raises(SideInvalid):
        minors.project_model_cliquesum(model, k4a, m1)
    side = minors.project_model_cliquesum(model, k4b, m2)
    assert minors.verify_model(side).ok
    assert side.branch_sets[3] == frozenset({3})


def test_project_model_inside_one_side_is_unchanged():
    g1 = graphs.complete_graph(5)
    g2 = graphs.complete_graph(3).relabel("xyz")
    s, m1, _ = graphs.clique_sum_with_embeddings(g1, [0, 1], g2, [0, 1])
    sets = {i: frozenset({i}) for i in range(5)}
    model = MinorModel(s, graphs.complete_graph(5), sets, 1)
    side = minors.project_model_cliquesum(model, g1, m1)
    assert side.branch_sets == sets


def test_compose_models():
    outer = c6_triangle_model()
    inner = MinorModel(
        graphs.complete_graph(3),
        graphs.complete_graph(2),
        {0: frozenset({0, 1}), 1: frozenset({2})},
        1,
    )
    composed = minors.compose_models(outer, inner)
    assert minors.verify_model(composed).ok
    assert composed.pattern.n == 2


def test_hadwiger_oracle_known_values():
    assert minors.hadwiger_oracle(graphs.complete_graph(5)) == 5
    assert minors.hadwiger_oracle(graphs.cycle_graph(5)) == 3
    assert minors.hadwiger_oracle(graphs.grid_graph(2)) == 3


def test_hadwiger_witness_verifies():
    eta, model = minors.hadwiger_model(graphs.grid_graph(3))
    assert eta == 4
    assert minors.verify_model(model).ok
    assert model.pattern.n == 4


def test_hadwiger_oracle_matches_naive_on_petersen():
    g = petersen()
    eta, model = minors.hadwiger_model(g)
    assert minors.verify_model(model).ok
    assert eta == naive_eta(g) == 5


def test_hadwiger_oracle_budget():
    with pytest.raises(BudgetExceeded):
        minors.hadwiger_oracle(graphs.grid_graph(4))


def test_hadwiger_oracle_matches_naive_on_random_graphs():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(2, 6)
        edges = [e for e in graphs.complete_graph(n).edges() if rng.random() < 0.6]
        g = graphs.from_edges(n, edges)
        assert minors.hadwiger_oracle(g) == naive_eta(g)


def test_treewidth_known_values():
    tree = graphs.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert minors.treewidth_oracle(tree) == 1
    assert minors.treewidth_oracle(graphs.complete_graph(5)) == 4
    assert minors.treewidth_oracle(graphs.cycle_graph(6)) == 2


def test_treewidth_l3_cross_checked():
    g = graphs.grid_graph(3)
    assert minors.treewidth_oracle(g) == 3
    # independent lower bound: a bramble of order 4
    idx = g.index_of
    sets = [
        {idx((i, 1)), idx((i, 2)), idx((1, j)), idx((2, j))}
        for i in (1, 2)
        for j in (1, 2)
    ]
    sets.append({idx((3, y)) for y in (1, 2, 3)})
    sets.append({idx((1, 3)), idx((2, 3))})
    assert bramble_order(g, sets) == 4
    # independent upper bound: an explicit width-3 path decomposition
    bags = [frozenset(range(i, i + 4)) for i in range(6)]
    assert check_tree_decomposition(g, bags, [(i, i + 1) for i in range(5)])


def test_treewidth_budget():
    with pytest.raises(BudgetExceeded):
        minors.treewidth_oracle(graphs.grid_graph(4))


def test_max_clique():
    g = graphs.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    assert minors.max_clique(g) == [0, 1, 2]
