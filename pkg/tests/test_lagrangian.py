import numpy as np
import pytest
from hypothesis import given, settings

from conftest import brute_clique_number, graphs, simplex_max
from spectral_turan.cliques import edge_clique_orders
from spectral_turan.graph import Graph, complete_graph, complete_multipartite, cycle_graph, disjoint_union, kite, path_graph
from spectral_turan.lagrangian import (
    SimplexVector,
    gradient_balance_shift,
    lagrangian_value,
    maximize_lagrangian,
    maximize_weighted,
    support_shift_nonadjacent,
    verify_equality_support,
    weight_matrix,
    weighted_value,
)


def test_simplex_vector():
    x = SimplexVector.from_array([2.0, 0.0, 2.0])
    assert np.allclose(x.entries, [0.5, 0.0, 0.5]) and x.support == (0, 2)
    assert SimplexVector.uniform(4, [1, 3]).support == (1, 3)
    for bad in ([], [-1.0, 2.0], [0.0, 0.0]):
        with pytest.raises(ValueError):
            SimplexVector.from_array(bad)


def test_lagrangian_examples():
    assert lagrangian_value(complete_graph(3), SimplexVector.uniform(3)) == pytest.approx(2 / 3)
    value, x = maximize_lagrangian(cycle_graph(5))
    assert value == pytest.approx(0.5, abs=1e-9)
    assert len(x.support) == 2
    value, _ = maximize_lagrangian(Graph.empty(3))
    assert value == 0.0


def test_weight_matrix_examples():
    w = weight_matrix(kite(8, 4))
    assert w[0, 1] == pytest.approx(4 / 3)
    assert w[4, 5] == pytest.approx(2.0)
    assert w[0, 5] == 0.0


def test_weighted_value_on_clique_and_edge():
    g = kite(8, 4)
    p = edge_clique_orders(g)
    assert weighted_value(g, p, SimplexVector.uniform(g.n, range(4))) == pytest.approx(1.0)
    assert weighted_value(g, p, SimplexVector.uniform(g.n, [4, 5])) == pytest.approx(1.0)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_optimisers_match_face_enumeration(g):
    value, _ = maximize_lagrangian(g)
    assert value == pytest.approx(simplex_max(g.adjacency_matrix()), abs=1e-9)
    assert value == pytest.approx(1 - 1 / brute_clique_number(g), abs=1e-9)
    if g.m:
        wvalue, x = maximize_weighted(g)
        assert wvalue == pytest.approx(simplex_max(weight_matrix(g)), abs=1e-9)
        assert wvalue == pytest.approx(1.0, abs=1e-9)
        assert verify_equality_support(g, x, edge_clique_orders(g))


def test_support_shift_nonadjacent():
    g = path_graph(3)
    w = g.adjacency_matrix()
    x = SimplexVector.from_array([0.3, 0.4, 0.3])
    y = support_shift_nonadjacent(g, w, x, 0, 2)
    assert y.support == (0, 1)
    assert y.entries @ w @ y.entries >= x.entries @ w @ x.entries
    with pytest.raises(ValueError):
        support_shift_nonadjacent(g, w, x, 0, 1)


def test_support_shift_direction():
    g = Graph.from_edges(3, [(0, 1)])
    w = g.adjacency_matrix()
    x = SimplexVector.from_array([0.2, 0.5, 0.3])
    with pytest.raises(ValueError):
        support_shift_nonadjacent(g, w, x, 2, 0)  # grad_2 = 0 < grad_0
    y = support_shift_nonadjacent(g, w, x, 0, 2)
    gain = y.entries @ w @ y.entries - x.entries @ w @ x.entries
    grad = w @ x.entries
    assert gain == pytest.approx(2 * 0.3 * (grad[0] - grad[2]))


def test_gradient_balance_shift_gain():
    g = complete_graph(3)
    w = g.adjacency_matrix()
    x = SimplexVector.from_array([0.5, 0.3, 0.2])
    grad = w @ x.entries
    i, j = int(np.argmax(grad)), int(np.argmin(grad))
    eps = 0.05
    y = gradient_balance_shift(g, w, x, i, j, eps)
    gain = y.entries @ w @ y.entries - x.entries @ w @ x.entries
    assert gain == pytest.approx(2 * eps * (grad[i] - grad[j]) - 2 * eps * eps * w[i, j])
    with pytest.raises(ValueError):
        gradient_balance_shift(g, w, x, j, i, eps)
    with pytest.raises(ValueError):
        gradient_balance_shift(g, w, x, i, j, 0.5)


def test_equality_support_allows_multipartite():
    g = complete_multipartite([2, 2, 2])
    p = edge_clique_orders(g)
    x = SimplexVector.uniform(6)
    assert lagrangian_value(g, x) == pytest.approx(2 / 3)
    assert verify_equality_support(g, x, p)
    assert not verify_equality_support(g, SimplexVector.uniform(6, [0, 2]), p)


def test_isolated_vertex_in_maximiser_support():
    # K3 + K4: uniform weight on the triangle gives F = 1 but the support is
    # only 3-partite while omega = 4
    g = disjoint_union(complete_graph(3), complete_graph(4))
    p = edge_clique_orders(g)
    tri = SimplexVector.uniform(7, range(3))
    assert weighted_value(g, p, tri) == pytest.approx(1.0)
    assert not verify_equality_support(g, tri, p)
    value, x = maximize_weighted(g, p)
    assert value == pytest.approx(1.0)
    assert verify_equality_support(g, x, p)


def test_profile_mismatch_rejected():
    with pytest.raises(ValueError):
        weight_matrix(path_graph(3), edge_clique_orders(path_graph(4)))
    with pytest.raises(ValueError):
        lagrangian_value(path_graph(3), SimplexVector.uniform(4))


def test_small_value_examples():
    assert lagrangian_value(cycle_graph(5), SimplexVector.uniform(5, [2])) == 0.0
    assert lagrangian_value(cycle_graph(5), SimplexVector.uniform(5, [0, 1])) == pytest.approx(0.5)
    k33 = complete_multipartite([3, 3])
    assert weighted_value(k33, edge_clique_orders(k33), SimplexVector.uniform(6)) == pytest.approx(1.0)
    p3 = path_graph(3)
    assert weighted_value(p3, edge_clique_orders(p3), SimplexVector.uniform(3, [1])) == 0.0
    for r in range(2, 7):
        k = complete_graph(r)
        assert weighted_value(k, edge_clique_orders(k), SimplexVector.uniform(r)) == pytest.approx(1.0)


def test_optimiser_examples():
    value, x = maximize_lagrangian(complete_graph(4))
    assert value == pytest.approx(0.75) and np.allclose(x.entries, 0.25)
    value, x = maximize_weighted(path_graph(3))
    assert value == pytest.approx(1.0) and len(x.support) == 2 and np.allclose(x.entries[list(x.support)], 0.5)
    value, _ = maximize_weighted(Graph.empty(5), edge_clique_orders(Graph.empty(5)))
    assert value == 0.0
    value, x = maximize_lagrangian(cycle_graph(5))
    assert verify_equality_support(cycle_graph(5), x, edge_clique_orders(cycle_graph(5)))


def test_shift_with_equal_gradients():
    g = cycle_graph(5)
    w = weight_matrix(g)
    x = SimplexVector.uniform(5)
    y = support_shift_nonadjacent(g, w, x, 0, 2)
    assert y.support == (0, 1, 3, 4)
    assert y.entries @ w @ y.entries >= x.entries @ w @ x.entries - 1e-15


def test_shift_from_isolated_vertex():
    g = disjoint_union(complete_graph(2), Graph.empty(1))
    w = weight_matrix(g)
    x = SimplexVector.from_array([0.5, 0.0, 0.5])
    y = support_shift_nonadjacent(g, w, x, 0, 2)
    assert np.allclose(y.entries, [1.0, 0.0, 0.0])


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_shift_never_decreases(g):
    w = weight_matrix(g)
    rng = np.random.default_rng(g.n + g.m)
    x = SimplexVector.from_array(rng.random(g.n) + 0.01)
    grad = w @ x.entries
    for i in range(g.n):
        for j in range(g.n):
            if i != j and not g.has_edge(i, j) and grad[i] >= grad[j]:
                y = support_shift_nonadjacent(g, w, x, i, j)
                assert y.entries @ w @ y.entries >= x.entries @ w @ x.entries - 1e-12
                assert len(y.support) == len(x.support) - 1


def test_balance_shift_half_threshold_strictly_increases():
    g = path_graph(3)
    w = weight_matrix(g)
    x = SimplexVector.from_array([0.6, 0.3, 0.1])
    grad = w @ x.entries
    i, j = 1, 0  # adjacent, grad_1 > grad_0
    assert grad[i] > grad[j]
    threshold = (grad[i] - grad[j]) / w[i, j]
    eps = min(threshold / 2, x.entries[j] / 2)
    y = gradient_balance_shift(g, w, x, i, j, eps)
    assert y.entries @ w @ y.entries > x.entries @ w @ x.entries


def test_balance_shift_nonadjacent_is_linear():
    g = path_graph(4)
    w = weight_matrix(g)
    x = SimplexVector.from_array([0.3, 0.2, 0.2, 0.3])
    grad = w @ x.entries
    assert grad[2] > grad[0] and not g.has_edge(0, 2)
    base = x.entries @ w @ x.entries
    gains = [gradient_balance_shift(g, w, x, 2, 0, eps).entries @ w @ gradient_balance_shift(g, w, x, 2, 0, eps).entries - base
             for eps in (0.01, 0.02, 0.04)]
    assert gains[1] == pytest.approx(2 * gains[0]) and gains[2] == pytest.approx(4 * gains[0])


def test_balance_shift_rejects_balanced_gradients():
    g = complete_graph(3)
    w = weight_matrix(g)
    x = SimplexVector.uniform(3)
    with pytest.raises(ValueError):
        gradient_balance_shift(g, w, x, 0, 1, 0.01)


def test_equality_support_on_paths():
    g = path_graph(4)
    assert not verify_equality_support(g, SimplexVector.uniform(4), edge_clique_orders(g))
    # the 3-vertex path is K_{1,2}, a genuine equality support
    p3 = path_graph(3)
    x = SimplexVector.from_array([0.25, 0.5, 0.25])
    assert weighted_value(p3, edge_clique_orders(p3), x) == pytest.approx(1.0)
    assert verify_equality_support(p3, x, edge_clique_orders(p3))
