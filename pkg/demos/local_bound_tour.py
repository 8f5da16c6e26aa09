# A tour of the clique-order spectral bound on a few small graphs.
#
# Every edge e gets c(e), the order of the largest clique through it.  The
# bound sqrt(2 * sum (c(e)-1)/c(e)) never exceeds Nikiforov's
# sqrt(2 (1 - 1/omega) m), and the gap opens up when most edges sit in
# small cliques.

# %%
import math

from spectral_turan import bound_ledger, edge_clique_orders, kite
from spectral_turan.graph import Graph, complete_multipartite, cycle_graph, path_graph

graphs = {
    "C5": cycle_graph(5),
    "P6": path_graph(6),
    "K_{3,3}": complete_multipartite([3, 3]),
    "K_{2,2,2}": complete_multipartite([2, 2, 2]),
    "kite(20, 4)": kite(20, 4),
    "bull": Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
}

# %%
print(f"{'graph':<12} {'lambda':>9} {'local':>9} {'nikiforov':>10} {'stanley':>9}")
for name, g in graphs.items():
    led = bound_ledger(g)
    print(f"{name:<12} {led.lambda1:9.5f} {led.local:9.5f} {led.nikiforov:10.5f} {led.stanley:9.5f}")

# %%
# Complete bipartite and complete regular multipartite graphs are tight.
for name in ("K_{3,3}", "K_{2,2,2}"):
    led = bound_ledger(graphs[name])
    print(name, "slack", f"{led.slacks['local']:.2e}")

# %%
# On the kite almost every edge is a K2, so the local radicand is about m
# while Nikiforov's is (3/2) m.  gap / sqrt(m) creeps up to sqrt(1.5) - 1.
for m in (100, 1000, 10_000, 100_000):
    nik = math.sqrt(1.5 * m)
    loc = math.sqrt(m + 3)
    print(f"m={m:>6}  gap/sqrt(m) = {(nik - loc) / math.sqrt(m):.5f}")
print("limit", math.sqrt(1.5) - 1)

# %%
profile = edge_clique_orders(kite(20, 4))
print("edge orders on kite(20, 4):", sorted(profile.edge_orders.values()))
