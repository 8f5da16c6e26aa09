"""Simple undirected graphs stored as rows of integer bitsets.

Vertex labels are 0-based.  Every constructor documents the labelling it
uses so that Perron components can be addressed by role (part, layer,
clique vertex, path vertex).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 4096


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        total = 0
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or row >> i & 1:
                raise ValueError(f"row {i} has a loop or an out-of-range bit")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)
        # symmetry check is quadratic in the worst case; walk set bits only
        for i, row in enumerate(self.adj):
            while row:
                low = row & -row
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                row ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (i, j) with i < j, ordered by i then j."""
        for i, row in enumerate(self.adj):
            for j in bits(row >> (i + 1) << (i + 1)):
                yield i, j

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
        index = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex v becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.adj) if row == 0]

    def without_isolated(self) -> "Graph":
        return self.induced([v for v, row in enumerate(self.adj) if row])

    def with_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def __str__(self) -> str:
        return to_graph6(self)


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, largest first."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("partition needs at least one part")
        if any(p <= 0 for p in parts):
            raise ValueError(f"part sizes must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"part sizes must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, sizes: Iterable[int]) -> "PartitionSpec":
        return cls(tuple(sorted(sizes, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def edge_count(self) -> int:
        n = self.n
        return (n * n - sum(p * p for p in self.parts)) // 2


def bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# graph6 ---------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = [n + 63]
    elif n <= 258047:
        header = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 supports at most 258047 vertices")
    body = []
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                body.append(acc + 63)
                acc = nbits = 0
    if nbits:
        body.append((acc << (6 - nbits)) + 63)
    return bytes(header + body).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"character {byte!r} outside graph6 range 63..126", pos)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated extended header", len(data))
        if data[1] == 126:
            raise Graph6Error("8-byte header exceeds the supported vertex count", 1)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("extended header used for n <= 62", 0)
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds limit {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} edge bytes, found {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after edge data", pos + need)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b_index, byte in enumerate(body):
        value = byte - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if value & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("nonzero padding bits", pos + b_index)
                break
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


# structural helpers -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(bits(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def distances_from(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


# named families -------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """Vertex 0 joined to vertices 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def part_ranges(spec: PartitionSpec) -> list[range]:
    out = []
    start = 0
    for size in spec.parts:
        out.append(range(start, start + size))
        start += size
    return out


def complete_multipartite(spec: PartitionSpec | Sequence[int]) -> Graph:
    """Complete multipartite graph; vertices are numbered part by part."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    n = spec.n
    full = (1 << n) - 1
    rows = []
    for block in part_ranges(spec):
        mask = ((1 << len(block)) - 1) << block.start
        rows.extend([full & ~mask] * len(block))
    return Graph(n, tuple(rows))


def turan_partition(n: int, r: int) -> PartitionSpec:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    q, t = divmod(n, r)
    return PartitionSpec((q + 1,) * t + (q,) * (r - t))


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(turan_partition(n, r))


def turan_edge_count(n: int, r: int) -> int:
    """e(T_r(n)) = (1 - 1/r) n^2 / 2 - t (1 - t/r) / 2 with t = n mod r."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    t = n % r
    value = Fraction(r - 1, 2 * r) * n * n - Fraction(t, 2) * (1 - Fraction(t, r))
    if value.denominator != 1:
        raise ArithmeticError("Turán edge count is not an integer")
    return int(value)


def turan_minus(n: int, r: int) -> Graph:
    """T_r(n) with the star from the first vertex of V_1 to the first vertex
    of every other part removed."""
    if not 2 <= r <= n - 1:
        raise ValueError(f"need 2 <= r <= n - 1, got n={n}, r={r}")
    spec = turan_partition(n, r)
    rows = list(complete_multipartite(spec).adj)
    blocks = part_ranges(spec)
    center = blocks[0].start
    for block in blocks[1:]:
        leaf = block.start
        rows[center] &= ~(1 << leaf)
        rows[leaf] &= ~(1 << center)
    return Graph(n, tuple(rows))


def kite(m: int, w: int) -> Graph:
    """K_w on 0..w-1 with a pendant path w-1, w, w+1, ... so that there are m edges."""
    if w < 2:
        raise ValueError("clique order must be at least 2")
    tail = m - comb(w, 2)
    if tail < 1:
        raise ValueError(f"m={m} leaves no path edges after K_{w}")
    n = w + tail
    edges = [(i, j) for i in range(w) for j in range(i + 1, w)]
    edges += [(v, v + 1) for v in range(w - 1, n - 1)]
    return Graph.from_edges(n, edges)


def gregory_layers(n: int, k: int) -> list[range]:
    """Vertex layers V_0, V_1, ... of the layered graph; empty trailing layer dropped."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 2 * (k - 1):
        raise ValueError(f"need n >= 2(k-1) = {2 * (k - 1)}, got n={n}")
    t, s = divmod(n, k - 1)
    sizes = [k - 1] * t + ([s] if s else [])
    layers = []
    start = 0
    for size in sizes:
        layers.append(range(start, start + size))
        start += size
    return layers


def gregory_gadget(n: int, k: int) -> Graph:
    """K_{k-1} followed by independent layers of size k-1 (the last holds the
    remainder), consecutive layers completely joined."""
    layers = gregory_layers(n, k)
    rows = [0] * n
    v0 = layers[0]
    clique = ((1 << len(v0)) - 1) << v0.start
    for v in v0:
        rows[v] |= clique & ~(1 << v)
    for a, b in zip(layers, layers[1:]):
        mask_a = ((1 << len(a)) - 1) << a.start
        mask_b = ((1 << len(b)) - 1) << b.start
        for v in a:
            rows[v] |= mask_b
        for v in b:
            rows[v] |= mask_a
    return Graph(n, tuple(rows))


def gregory_edge_count(n: int, k: int) -> int:
    t, s = divmod(n, k - 1)
    return comb(k - 1, 2) + (t - 1) * (k - 1) ** 2 + s * (k - 1)
