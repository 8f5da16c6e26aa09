"""Exact clique number, per-edge clique orders, multipartite recognition and
exact chromatic number.

All routines work on the integer bitset rows of :class:`Graph`.  Maximum
clique search is a greedy-colouring branch and bound in the style of Tomita's
MCQ; chromatic number is exact backtracking with a hard size guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .graph import Graph, PartitionSpec, bits

CHROMATIC_LIMIT = 16


@dataclass(frozen=True)
class EdgeCliqueProfile:
    """Clique number plus, for every edge i < j, the order of the largest
    clique containing it."""

    omega: int
    edge_orders: dict[tuple[int, int], int]

    def radicand(self) -> Fraction:
        """Exact sum over edges of (c(e) - 1) / c(e)."""
        return sum((Fraction(c - 1, c) for c in self.edge_orders.values()), Fraction(0))

    def order(self, u: int, v: int) -> int:
        return self.edge_orders[(u, v) if u < v else (v, u)]


def _color_sort(cand: int, adj: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; vertices listed by colour class."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            rest &= ~low
            avail &= ~low & ~adj[v]
    return order, colors


def maximum_clique(g: Graph, candidates: Optional[int] = None) -> int:
    """Bitmask of a maximum clique of g restricted to ``candidates``."""
    adj = g.adj
    cand = (1 << g.n) - 1 if candidates is None else candidates
    if not cand:
        return 0
    best = [0, 0]

    def expand(clique: int, size: int, cand: int) -> None:
        order, colors = _color_sort(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= best[0]:
                return
            v = order[idx]
            bit = 1 << v
            sub = cand & adj[v]
            if sub:
                expand(clique | bit, size + 1, sub)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, clique | bit
            cand &= ~bit

    expand(0, 0, cand)
    return best[1]


def clique_number(g: Graph) -> int:
    return maximum_clique(g).bit_count()


def is_clique(g: Graph, mask: int) -> bool:
    return all(mask & ~(1 << v) & ~g.adj[v] == 0 for v in bits(mask))


def maximal_cliques(g: Graph, limit: Optional[int] = None) -> Iterator[int]:
    """Bron-Kerbosch with Tomita pivoting; yields bitmasks deterministically."""
    adj = g.adj
    count = 0

    def recurse(r: int, p: int, x: int) -> Iterator[int]:
        nonlocal count
        if not p and not x:
            count += 1
            yield r
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: ((p & adj[u]).bit_count(), -u))
        for v in bits(p & ~adj[pivot]):
            if limit is not None and count >= limit:
                return
            bit = 1 << v
            yield from recurse(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        yield from recurse(0, (1 << g.n) - 1, 0)


def edge_clique_orders(g: Graph) -> EdgeCliqueProfile:
    """c(ij) = 2 + omega(G[N(i) & N(j)]) for every edge."""
    adj = g.adj
    memo: dict[int, int] = {}
    orders: dict[tuple[int, int], int] = {}
    for i, j in g.edges():
        common = adj[i] & adj[j]
        if common not in memo:
            memo[common] = maximum_clique(g, common).bit_count() if common else 0
        orders[(i, j)] = 2 + memo[common]
    if orders:
        omega = max(orders.values())
    else:
        omega = 1 if g.n else 0
    return EdgeCliqueProfile(omega, orders)


def complete_multipartite_parts(g: Graph) -> Optional[PartitionSpec]:
    """Part sizes if g minus its isolated vertices is complete multipartite.

    Non-adjacency has to be an equivalence relation on the non-isolated
    vertices; its classes are the parts.
    """
    active = 0
    for v, row in enumerate(g.adj):
        if row:
            active |= 1 << v
    if not active:
        return None
    sizes = []
    seen = 0
    for v in bits(active):
        if seen >> v & 1:
            continue
        part = active & ~g.adj[v]
        for u in bits(part):
            if active & ~g.adj[u] != part:
                return None
        seen |= part
        sizes.append(part.bit_count())
    return PartitionSpec.of(sizes)


def _colorable(g: Graph, k: int) -> bool:
    n = g.n
    adj = g.adj
    color = [-1] * n
    # forbidden[v] is a bitmask over colours used by neighbours of v
    forbidden = [0] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            cand = (forbidden[v].bit_count(), adj[v].bit_count())
            if key is None or cand > key:
                best, key = v, cand
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        # symmetry breaking: only one fresh colour is ever tried
        for c in range(min(used + 1, k)):
            if forbidden[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            for u in bits(adj[v]):
                if color[u] < 0 and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
            if solve(colored + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            color[v] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n > CHROMATIC_LIMIT:
        raise ValueError(f"exact chromatic number is limited to n <= {CHROMATIC_LIMIT}, got n={g.n}")
    if g.n == 0:
        return 0
    k = max(clique_number(g), 1)
    while not _colorable(g, k):
        k += 1
    return k
