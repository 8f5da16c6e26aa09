"""Canonical graph6 labels and isomorphism-class enumeration for small graphs.

The canonical form is the minimum graph6 string over the leaves of an
individualisation-refinement tree: colour refinement produces an equitable
ordered partition, a vertex of the first non-singleton cell is
individualised, and so on until the partition is discrete.  Vertices that
are twins inside a cell are interchangeable, so only one of them is tried.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, to_graph6

ENUMERATION_LIMIT = 8


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed = sorted(cell, key=lambda v: tuple((adj[v] & m).bit_count() for m in masks))
            groups: list[list[int]] = []
            last = None
            for v in keyed:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                if sig != last:
                    groups.append([])
                    last = sig
                groups[-1].append(v)
            new_cells.extend(groups)
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for u in reps:
            mask = ~((1 << u) | (1 << v))
            if adj[u] & mask == adj[v] & mask:
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation (old vertex -> new label) giving the canonical form."""
    adj = g.adj
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = [0] * g.n
            for pos, cell in enumerate(cells):
                perm[cell[0]] = pos
            code = to_graph6(g.relabel(perm))
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, perm
            return
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if g.n == 0:
        return []
    search([list(range(g.n))])
    return best[1]


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_id(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and sorted(g.degrees()) == sorted(h.degrees()) and canonical_id(g) == canonical_id(h)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    if n == 0:
        return (to_graph6(Graph.empty(0)),)
    from .graph import from_graph6

    found: set[str] = set()
    for code in _classes(n - 1):
        parent = from_graph6(code)
        base = list(parent.adj) + [0]
        new = n - 1
        for subset in range(1 << (n - 1)):
            rows = base.copy()
            rows[new] = subset
            s = subset
            while s:
                low = s & -s
                rows[low.bit_length() - 1] |= 1 << new
                s ^= low
            found.add(canonical_id(Graph(n, tuple(rows))))
    return tuple(sorted(found))


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by graph6."""
    if not 0 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"internal enumeration supports 0 <= n <= {ENUMERATION_LIMIT}; pipe graph6 for larger n")
    from .graph import from_graph6

    return [from_graph6(code) for code in _classes(n)]


def enumerate_graph6(n: int) -> tuple[str, ...]:
    if not 0 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"internal enumeration supports 0 <= n <= {ENUMERATION_LIMIT}")
    return _classes(n)
