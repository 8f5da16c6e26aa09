"""Quadratic forms x^T M x maximised over the standard simplex.

Two matrices are used: the adjacency matrix (the graph Lagrangian, whose
maximum is 1 - 1/omega) and the clique-order weight matrix with entries
c(e) / (c(e) - 1) on edges (whose maximum is 1 on any graph with an edge).

The optimiser climbs with replicator updates, collapses the support onto a
clique with mass-transfer moves between non-adjacent vertices, then polishes
with pairwise exchanges until the gradient is flat on the support.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .cliques import EdgeCliqueProfile, complete_multipartite_parts, edge_clique_orders, maximal_cliques, maximum_clique
from .graph import Graph, bits

SUPPORT_THRESHOLD = 1e-14
MAX_RESTART_CLIQUES = 32
GRADIENT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SimplexVector:
    entries: np.ndarray
    support: tuple[int, ...]

    @classmethod
    def from_array(cls, values) -> "SimplexVector":
        x = np.array(values, dtype=float)
        if x.ndim != 1 or x.size == 0:
            raise ValueError("simplex vector must be a nonempty 1-d array")
        if np.any(x < -SUPPORT_THRESHOLD):
            raise ValueError("simplex vector has negative entries")
        x[x <= SUPPORT_THRESHOLD] = 0.0
        total = x.sum()
        if total <= 0:
            raise ValueError("simplex vector has no positive entries")
        x /= total
        x.setflags(write=False)
        return cls(x, tuple(int(i) for i in np.flatnonzero(x)))

    @classmethod
    def uniform(cls, n: int, subset: Optional[Iterable[int]] = None) -> "SimplexVector":
        x = np.zeros(n)
        idx = list(range(n)) if subset is None else list(subset)
        x[idx] = 1.0
        return cls.from_array(x)

    @property
    def n(self) -> int:
        return self.entries.size

    def __len__(self) -> int:
        return self.entries.size


def weight_matrix(g: Graph, profile: Optional[EdgeCliqueProfile] = None) -> np.ndarray:
    if profile is None:
        profile = edge_clique_orders(g)
    w = np.zeros((g.n, g.n))
    for (i, j), c in profile.edge_orders.items():
        if not g.has_edge(i, j):
            raise ValueError(f"profile edge ({i}, {j}) is not an edge of the graph")
        w[i, j] = w[j, i] = c / (c - 1)
    if len(profile.edge_orders) != g.m:
        raise ValueError("profile does not cover every edge")
    return w


def _check_dim(g: Graph, x: SimplexVector) -> np.ndarray:
    if x.n != g.n:
        raise ValueError(f"vector of length {x.n} for a graph on {g.n} vertices")
    return x.entries


def lagrangian_value(g: Graph, z: SimplexVector) -> float:
    """2 sum over edges of z_i z_j."""
    v = _check_dim(g, z)
    return 2.0 * sum(v[i] * v[j] for i, j in g.edges())


def weighted_value(g: Graph, profile: EdgeCliqueProfile, x: SimplexVector) -> float:
    """2 sum over edges of c/(c-1) x_i x_j."""
    v = _check_dim(g, x)
    if len(profile.edge_orders) != g.m:
        raise ValueError("profile does not match the graph")
    total = 0.0
    for (i, j), c in profile.edge_orders.items():
        total += c / (c - 1) * v[i] * v[j]
    return 2.0 * total


def support_shift_nonadjacent(g: Graph, w: np.ndarray, x: SimplexVector, i: int, j: int) -> SimplexVector:
    """Move all of x_j onto x_i for a non-adjacent pair with grad_i >= grad_j.

    The objective changes by 2 x_j (grad_i - grad_j) >= 0 and the support
    loses j.
    """
    v = x.entries
    if i == j or g.has_edge(i, j):
        raise ValueError(f"vertices {i} and {j} must be distinct and non-adjacent")
    if not (v[i] > 0 and v[j] > 0):
        raise ValueError("both vertices must be in the support")
    grad = w @ v
    if grad[i] < grad[j]:
        raise ValueError("mass must move towards the larger gradient")
    y = v.copy()
    y[i] += y[j]
    y[j] = 0.0
    return SimplexVector.from_array(y)


def gradient_balance_shift(g: Graph, w: np.ndarray, x: SimplexVector, i: int, j: int, eps: float) -> SimplexVector:
    """x + eps (e_i - e_j) for i, j in the support with grad_i > grad_j.

    The gain is 2 eps (grad_i - grad_j) - 2 eps^2 w_ij.
    """
    v = x.entries
    if not (v[i] > 0 and v[j] > 0):
        raise ValueError("both vertices must be in the support")
    grad = w @ v
    if not grad[i] > grad[j]:
        raise ValueError("need a strictly larger gradient at i")
    if not 0 < eps < min(v[i], v[j]):
        raise ValueError(f"eps={eps} outside (0, {min(v[i], v[j])})")
    y = v.copy()
    y[i] += eps
    y[j] -= eps
    return SimplexVector.from_array(y)


def _replicator(w: np.ndarray, x: np.ndarray, tol: float, iter_cap: int) -> np.ndarray:
    for _ in range(iter_cap):
        grad = w @ x
        value = float(x @ grad)
        if value <= 0.0:
            return x
        on = x > 0
        if grad[on].max() - grad[on].min() <= tol:
            return x
        x = x * grad / value
        x[x <= SUPPORT_THRESHOLD] = 0.0
        x /= x.sum()
    return x


def _collapse_to_clique(g: Graph, w: np.ndarray, x: SimplexVector) -> SimplexVector:
    while True:
        supp = x.support
        pair = None
        for a_pos, a in enumerate(supp):
            for b in supp[a_pos + 1:]:
                if not g.has_edge(a, b):
                    pair = (a, b)
                    break
            if pair:
                break
        if pair is None:
            return x
        a, b = pair
        grad = w @ x.entries
        i, j = (a, b) if grad[a] >= grad[b] else (b, a)
        x = support_shift_nonadjacent(g, w, x, i, j)


def _polish(g: Graph, w: np.ndarray, x: SimplexVector, tol: float, iter_cap: int) -> SimplexVector:
    for _ in range(iter_cap):
        v = x.entries
        grad = w @ v
        supp = list(x.support)
        i = max(supp, key=lambda u: (grad[u], -u))
        j = min(supp, key=lambda u: (grad[u], u))
        diff = grad[i] - grad[j]
        if diff <= tol:
            break
        cap = 0.5 * min(v[i], v[j])
        eps = cap if w[i, j] <= 0 else min(cap, diff / (2.0 * w[i, j]))
        if eps <= 0:
            break
        y = gradient_balance_shift(g, w, x, i, j, eps)
        if float(y.entries @ w @ y.entries) < float(v @ grad):
            break
        x = y
    return x


def _starts(g: Graph) -> list[tuple[int, ...]]:
    starts = [tuple(range(g.n))]
    if g.m == 0:
        return starts
    best = tuple(bits(maximum_clique(g)))
    cliques = sorted(
        {tuple(bits(c)) for c in maximal_cliques(g, limit=4 * MAX_RESTART_CLIQUES)},
        key=lambda c: (-len(c), c),
    )[:MAX_RESTART_CLIQUES]
    if best not in cliques:
        cliques = [best] + cliques[: MAX_RESTART_CLIQUES - 1]
    return starts + cliques


def _maximize(g: Graph, w: np.ndarray, tol: float, iter_cap: int) -> tuple[float, SimplexVector]:
    if g.n < 1:
        raise ValueError("need at least one vertex")
    results = []
    for start in _starts(g):
        x = SimplexVector.uniform(g.n, start)
        x = SimplexVector.from_array(_replicator(w, x.entries.copy(), tol, iter_cap))
        x = _collapse_to_clique(g, w, x)
        x = SimplexVector.from_array(_replicator(w, x.entries.copy(), tol, iter_cap))
        x = _polish(g, w, x, GRADIENT_TOL, iter_cap)
        results.append((float(x.entries @ w @ x.entries), x))
    top = max(value for value, _ in results)
    # among near-ties prefer the largest support, then the lexicographically smallest
    tied = [(value, x) for value, x in results if value >= top - tol]
    value, x = min(tied, key=lambda vx: (-len(vx[1].support), vx[1].support))
    return value, x


def maximize_lagrangian(g: Graph, tol: float = 1e-10, iter_cap: int = 20000) -> tuple[float, SimplexVector]:
    """Maximum of z^T A z over the simplex (equals 1 - 1/omega)."""
    return _maximize(g, g.adjacency_matrix(), tol, iter_cap)


def maximize_weighted(
    g: Graph, profile: Optional[EdgeCliqueProfile] = None, tol: float = 1e-10, iter_cap: int = 20000
) -> tuple[float, SimplexVector]:
    """Maximum of x^T W x over the simplex (equals 1 when g has an edge)."""
    return _maximize(g, weight_matrix(g, profile), tol, iter_cap)


def verify_equality_support(g: Graph, x: SimplexVector, profile: EdgeCliqueProfile) -> bool:
    """Whether the support induces a complete omega-partite graph (isolated vertices ignored)."""
    sub = g.induced(list(x.support))
    if sub.m == 0:
        # an independent support is a single part
        return profile.omega == 1
    parts = complete_multipartite_parts(sub)
    return parts is not None and parts.r == profile.omega
