import math

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs
from spectral_turan.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    path_graph,
    star,
)
from spectral_turan.spectral import (
    ConvergenceError,
    extreme_eigenvalues,
    jacobi_eigenvalues,
    rayleigh_quotient,
    signless_laplacian,
    signless_laplacian_radius,
    spectral_radius,
    summarize,
)


def test_jacobi_oracle_matches_lapack():
    rng = np.random.default_rng(7)
    for n in (1, 2, 5, 9):
        m = rng.normal(size=(n, n))
        m = m + m.T
        assert np.allclose(jacobi_eigenvalues(m), np.linalg.eigvalsh(m), atol=1e-10)
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0, 1], [0, 0]])


@settings(max_examples=120)
@given(graphs(min_n=1, max_n=8))
def test_extremes_match_jacobi(g):
    ref = jacobi_eigenvalues(g.adjacency_matrix())
    lam1, lamn = extreme_eigenvalues(g)
    assert abs(lam1 - ref[-1]) < 1e-9
    assert abs(lamn - ref[0]) < 1e-9
    assert abs(spectral_radius(g)[0] - ref[-1]) < 1e-9
    assert abs(signless_laplacian_radius(g) - jacobi_eigenvalues(signless_laplacian(g))[-1]) < 1e-9


def test_closed_form_spectra():
    golden = (1 + math.sqrt(5)) / 2
    assert spectral_radius(path_graph(4))[0] == pytest.approx(golden, abs=1e-12)
    assert extreme_eigenvalues(path_graph(4))[1] == pytest.approx(-golden, abs=1e-12)
    assert spectral_radius(cycle_graph(5))[0] == pytest.approx(2.0, abs=1e-12)
    assert extreme_eigenvalues(cycle_graph(5))[1] == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=1e-12)
    assert spectral_radius(complete_graph(6))[0] == pytest.approx(5.0, abs=1e-12)
    assert spectral_radius(complete_multipartite([3, 3]))[0] == pytest.approx(3.0, abs=1e-12)
    assert spectral_radius(Graph.empty(3))[0] == 0.0


def test_perron_vector_properties():
    g = path_graph(5)
    lam, x = spectral_radius(g)
    assert np.all(x > 0)
    assert np.linalg.norm(x) == pytest.approx(1.0)
    assert np.allclose(g.adjacency_matrix() @ x, lam * x, atol=1e-10)
    # 2 sum_edges x_i x_j = lambda
    assert 2 * sum(x[i] * x[j] for i, j in g.edges()) == pytest.approx(lam, abs=1e-10)


def test_disconnected_picks_largest_component():
    g = disjoint_union(path_graph(2), complete_graph(4))
    lam, x = spectral_radius(g)
    assert lam == pytest.approx(3.0)
    assert np.allclose(x[:2], 0.0) and np.all(x[2:] > 0)


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=8))
def test_bipartite_spectrum_is_symmetric(g):
    ref = jacobi_eigenvalues(g.adjacency_matrix())
    # only meaningful on bipartite graphs
    from spectral_turan.cliques import chromatic_number

    if chromatic_number(g) <= 2:
        assert np.allclose(np.sort(ref), np.sort(-ref), atol=1e-9)


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=8))
def test_edge_removal_does_not_raise_radius(g):
    lam = spectral_radius(g)[0]
    for i, j in list(g.edges())[:3]:
        assert spectral_radius(g.without_edge(i, j))[0] <= lam + 1e-12


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=8))
def test_rayleigh_quotient_below_radius(g):
    rng = np.random.default_rng(g.m)
    v = rng.normal(size=g.n)
    assert rayleigh_quotient(g, v) <= spectral_radius(g)[0] + 1e-9


def test_rayleigh_quotient_errors():
    with pytest.raises(ValueError):
        rayleigh_quotient(path_graph(3), [1.0, 1.0])
    with pytest.raises(ValueError):
        rayleigh_quotient(path_graph(3), [0.0, 0.0, 0.0])


def test_power_path_agrees_with_dense():
    rng = np.random.default_rng(3)
    for _ in range(5):
        n = 40
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.2])
        d = summarize(g, method="dense")
        p = summarize(g, method="power")
        assert abs(d.lambda1 - p.lambda1) < 1e-8
        assert abs(d.lambdan - p.lambdan) < 1e-8
        assert abs(d.q - p.q) < 1e-8
        assert np.allclose(np.abs(d.perron), np.abs(p.perron), atol=1e-6)


def test_power_on_bipartite_graph():
    # +-lambda pair would stall plain power iteration
    lam = spectral_radius(cycle_graph(600))[0]
    assert lam == pytest.approx(2.0, abs=1e-9)
    assert spectral_radius(path_graph(30), method="power")[0] == pytest.approx(2 * math.cos(math.pi / 31), abs=1e-9)


def test_iteration_cap_raises():
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(path_graph(200), method="power", iter_cap=5)
    assert info.value.residual > 0


def test_star_signless_radius():
    for n in (2, 5, 50):
        assert signless_laplacian_radius(star(n)) == pytest.approx(n, abs=1e-9)
    assert signless_laplacian_radius(star(50), method="power") == pytest.approx(50, abs=1e-8)


def test_unknown_method():
    with pytest.raises(ValueError):
        spectral_radius(path_graph(3), method="lanczos")


def test_complete_and_bipartite_closed_forms():
    for n in (2, 5, 9):
        lam, x = spectral_radius(complete_graph(n))
        assert lam == pytest.approx(n - 1)
        assert np.allclose(x, 1 / math.sqrt(n))
        assert signless_laplacian_radius(complete_graph(n)) == pytest.approx(2 * (n - 1))
    for a, b in [(1, 4), (2, 3), (3, 5)]:
        assert spectral_radius(complete_multipartite([b, a]))[0] == pytest.approx(math.sqrt(a * b))
    assert extreme_eigenvalues(complete_graph(2)) == pytest.approx((1.0, -1.0))
    assert extreme_eigenvalues(complete_multipartite([3, 3])) == pytest.approx((3.0, -3.0))


def test_rayleigh_examples():
    assert rayleigh_quotient(complete_graph(3), np.ones(3) / 3) == pytest.approx(2.0)
    assert rayleigh_quotient(complete_graph(3), [1.0, 0.0, 0.0]) == 0.0


def _layer_test_vector(n, k):
    from spectral_turan.graph import gregory_layers

    layers = gregory_layers(n, k)
    t = len(layers) - 1
    z = np.zeros(n)
    for i, layer in enumerate(layers):
        z[list(layer)] = math.sin((i + 1) * math.pi / (t + 2))
    return z


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_layered_test_vector_quotient(k):
    from spectral_turan.graph import gregory_gadget

    for n in range(2 * (k - 1), 120, 7):
        g = gregory_gadget(n, k)
        q = rayleigh_quotient(g, _layer_test_vector(n, k))
        assert q >= 2 * (k - 1) - (k - 1) ** 3 * math.pi**2 / n**2
        assert q <= spectral_radius(g)[0] + 1e-12


@settings(max_examples=80)
@given(graphs(min_n=1, max_n=10))
def test_perron_quotient_and_edge_count(g):
    lam, x = spectral_radius(g)
    assert rayleigh_quotient(g, x) == pytest.approx(lam, abs=2e-10)
    lam1, lamn = extreme_eigenvalues(g)
    assert lamn <= lam1
    if g.m:
        assert lam1 >= 1 - 1e-12


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=10))
def test_bipartite_extremes_cancel(g):
    from spectral_turan.cliques import chromatic_number

    if g.m and chromatic_number(g) == 2:
        lam1, lamn = extreme_eigenvalues(g)
        assert abs(lam1 + lamn) < 1e-8


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=10))
def test_edge_addition_monotone_on_connected(g):
    from spectral_turan.graph import is_connected

    if not is_connected(g):
        return
    lam = spectral_radius(g)[0]
    missing = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.has_edge(i, j)]
    for i, j in missing[:3]:
        assert spectral_radius(g.with_edge(i, j))[0] >= lam - 1e-12
