# Motzkin-Straus with clique-order weights.
#
# The plain Lagrangian z^T A z peaks at 1 - 1/omega on the simplex.  Giving
# edge ij the weight c(ij)/(c(ij)-1) flattens the landscape: the maximum is
# exactly 1 on every graph with an edge, and it is attained on a clique of
# any order.

# %%
import numpy as np

from spectral_turan import maximize_lagrangian, maximize_weighted
from spectral_turan.cliques import edge_clique_orders
from spectral_turan.graph import complete_graph, disjoint_union, kite
from spectral_turan.lagrangian import SimplexVector, verify_equality_support, weight_matrix, weighted_value

g = disjoint_union(complete_graph(3), kite(9, 4))
profile = edge_clique_orders(g)
print("n =", g.n, "m =", g.m, "omega =", profile.omega)

# %%
value, z = maximize_lagrangian(g)
print("Lagrangian max", round(value, 12), "support", z.support)

value, x = maximize_weighted(g, profile)
print("weighted max  ", round(value, 12), "support", x.support)

# %%
# Any clique with uniform weight already reaches 1 ...
for clique in ([0, 1, 2], [3, 4, 5, 6], [8, 9]):
    y = SimplexVector.uniform(g.n, clique)
    print(clique, weighted_value(g, profile, y), verify_equality_support(g, y, profile))

# %%
# ... but only an omega-partite support passes the equality check, which is
# why the optimiser prefers the largest support among ties.
w = weight_matrix(g, profile)
print("W is symmetric:", np.allclose(w, w.T))
