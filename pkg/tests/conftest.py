import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from spectral_turan.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_clique_number(g):
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def brute_chromatic(g):
    for k in range(0, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[i] != colors[j] for i, j in g.edges()):
                return k
    return g.n


def simplex_max(m):
    """Max of x^T M x over the simplex by enumerating stationary points of every face."""
    n = m.shape[0]
    best = -np.inf
    for size in range(1, n + 1):
        for face in itertools.combinations(range(n), size):
            sub = m[np.ix_(face, face)]
            kkt = np.zeros((size + 1, size + 1))
            kkt[:size, :size] = 2 * sub
            kkt[:size, size] = -1
            kkt[size, :size] = 1
            rhs = np.zeros(size + 1)
            rhs[size] = 1
            try:
                sol = np.linalg.solve(kkt, rhs)
            except np.linalg.LinAlgError:
                continue
            x = sol[:size]
            if np.all(x >= -1e-12):
                best = max(best, float(x @ sub @ x))
    return best


@pytest.fixture(scope="session")
def small_graphs():
    from spectral_turan.canonical import enumerate_graphs

    return {n: enumerate_graphs(n) for n in range(0, 8)}


# acceptance criteria report -------------------------------------------------

_CRITERIA: dict[int, tuple[str, str, str]] = {}
_NOTES: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    detail = "" if call.excinfo is None else str(call.excinfo.value).splitlines()[0][:160]
    _CRITERIA[number] = (title, outcome, detail)


@pytest.fixture
def note(request):
    marker = request.node.get_closest_marker("criterion")
    lines = _NOTES.setdefault(marker.args[0], [])
    return lines.append


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome, detail = _CRITERIA[number]
        line = f"criterion {number:>2} {outcome}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
        for extra in _NOTES.get(number, []):
            terminalreporter.write_line(f"    {extra}")
