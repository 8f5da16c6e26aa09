"""Adjacency and signless Laplacian eigenvalues of simple graphs.

Graphs with at most ``DENSE_LIMIT`` vertices go through a dense symmetric
eigensolve.  Larger graphs use shifted power iteration, which only yields the
extreme eigenvalues.  :func:`jacobi_eigenvalues` is a self-contained cyclic
Jacobi rotation solver kept as a reference for cross-checking the dense path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, connected_components

DENSE_LIMIT = 512
DEFAULT_TOL = 1e-10
DEFAULT_ITER_CAP = 10**6


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (best residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class SpectrumSummary:
    lambda1: float
    lambdan: float
    perron: np.ndarray
    q: float
    tol: float


def _use_dense(n: int, method: str) -> bool:
    if method not in ("auto", "dense", "power"):
        raise ValueError(f"unknown method {method!r}")
    return method == "dense" or (method == "auto" and n <= DENSE_LIMIT)


def _power(matrix: np.ndarray, start: np.ndarray, tol: float, iter_cap: int) -> tuple[float, np.ndarray]:
    """Dominant eigenpair of a PSD or nonnegative primitive matrix."""
    x = start / np.linalg.norm(start)
    best = np.inf
    for _ in range(iter_cap):
        y = matrix @ x
        value = float(x @ y)
        residual = float(np.max(np.abs(y - value * x)))
        best = min(best, residual)
        if residual <= tol:
            return value, x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0, x
        x = y / norm
    raise ConvergenceError("power iteration hit the iteration cap", best)


def _component_radius(a: np.ndarray, dense: bool, tol: float, iter_cap: int) -> tuple[float, np.ndarray]:
    k = a.shape[0]
    if k == 1:
        return 0.0, np.ones(1)
    if dense:
        w, v = np.linalg.eigh(a)
        x = np.abs(v[:, -1])
        return float(w[-1]), x / np.linalg.norm(x)
    # A + I is primitive on a connected component, so no bipartite oscillation
    value, x = _power(a + np.eye(k), np.ones(k), tol / 2, iter_cap)
    return value - 1.0, np.abs(x)


def spectral_radius(
    g: Graph, tol: float = DEFAULT_TOL, iter_cap: int = DEFAULT_ITER_CAP, method: str = "auto"
) -> tuple[float, np.ndarray]:
    """Largest adjacency eigenvalue and unit nonnegative Perron vector.

    For a disconnected graph the vector lives on the component of largest
    spectral radius (lowest vertex index wins ties) and is zero elsewhere.
    """
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    dense = _use_dense(g.n, method)
    a = g.adjacency_matrix()
    best_value, best_vec, best_comp = -1.0, None, None
    for comp in connected_components(g):
        if len(comp) == 1 and best_comp is not None:
            continue
        sub = a[np.ix_(comp, comp)]
        value, vec = _component_radius(sub, dense, tol, iter_cap)
        if best_comp is None or value > best_value + tol:
            best_value, best_vec, best_comp = value, vec, comp
    perron = np.zeros(g.n)
    perron[best_comp] = best_vec
    residual = float(np.max(np.abs(a @ perron - best_value * perron)))
    if residual > tol:
        raise ConvergenceError("Perron residual above tolerance", residual)
    return best_value, perron


def extreme_eigenvalues(
    g: Graph, tol: float = DEFAULT_TOL, iter_cap: int = DEFAULT_ITER_CAP, method: str = "auto"
) -> tuple[float, float]:
    if g.n < 1:
        raise ValueError("need at least one vertex")
    a = g.adjacency_matrix()
    if _use_dense(g.n, method):
        w = np.linalg.eigvalsh(a)
        return float(w[-1]), float(w[0])
    lam1, _ = spectral_radius(g, tol, iter_cap, method="power")
    # lambda1 I - A is PSD; its top eigenvalue is lambda1 - lambda_n
    start = np.cos(np.arange(g.n) * 2.0) + 0.5 * (-1.0) ** np.arange(g.n)
    mu, _ = _power(lam1 * np.eye(g.n) - a, start, tol / 2, iter_cap)
    return lam1, lam1 - mu


def signless_laplacian(g: Graph) -> np.ndarray:
    a = g.adjacency_matrix()
    return a + np.diag(a.sum(axis=1))


def signless_laplacian_radius(
    g: Graph, tol: float = DEFAULT_TOL, iter_cap: int = DEFAULT_ITER_CAP, method: str = "auto"
) -> float:
    if g.n < 1:
        raise ValueError("need at least one vertex")
    q = signless_laplacian(g)
    if _use_dense(g.n, method):
        return float(np.linalg.eigvalsh(q)[-1])
    value, _ = _power(q, np.ones(g.n) + 1e-3 * np.arange(g.n), tol / 2, iter_cap)
    return value


def rayleigh_quotient(g: Graph, v) -> float:
    v = np.asarray(v, dtype=float)
    if v.shape != (g.n,):
        raise ValueError(f"vector has shape {v.shape}, expected ({g.n},)")
    denom = float(v @ v)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    total = 0.0
    for i, j in g.edges():
        total += v[i] * v[j]
    return 2.0 * total / denom


def summarize(g: Graph, tol: float = DEFAULT_TOL, iter_cap: int = DEFAULT_ITER_CAP, method: str = "auto") -> SpectrumSummary:
    lam1, perron = spectral_radius(g, tol, iter_cap, method)
    _, lamn = extreme_eigenvalues(g, tol, iter_cap, method)
    q = signless_laplacian_radius(g, tol, iter_cap, method)
    return SpectrumSummary(lam1, lamn, perron, q, tol)


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise ValueError("matrix must be square and symmetric")
    scale = max(np.abs(a).max(), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off <= tol * scale:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    raise ConvergenceError("Jacobi sweeps did not converge", float(np.sqrt(np.sum(np.triu(a, 1) ** 2))))
