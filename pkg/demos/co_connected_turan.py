# Turán graphs with a star removed, and the co-connected spectral problem.
#
# Deleting a star with one leaf in each other part from T_r(n) makes the
# complement connected while costing only r - 1 edges.  For tiny n an
# exhaustive search finds that this graph maximises the spectral radius among
# co-connected K_{r+1}-free graphs.

# %%
from spectral_turan import turan_graph, turan_minus
from spectral_turan.graph import complement, is_connected
from spectral_turan.spectral import spectral_radius
from spectral_turan.verifier import spex_cc_search, turan_minus_claims

for n, r in [(7, 2), (10, 3), (13, 4)]:
    t, tm = turan_graph(n, r), turan_minus(n, r)
    print(f"T_{r}({n}): m={t.m} co-connected={is_connected(complement(t))}   "
          f"minus star: m={tm.m} co-connected={is_connected(complement(tm))}")

# %%
# lambda drops by less than 2r/n
for n in (20, 50, 100):
    row = turan_minus_claims(n, 3)
    print(n, f"{row['lambda_turan']:.6f} -> {row['lambda_turan_minus']:.6f}  margin {row['claim4_margin']:.5f}")

# %%
for n in range(5, 9):
    res = spex_cc_search(n, 2)
    print(f"n={n}: best {res.graph6} lambda={res.lam:.6f}  T_2^-(n) lambda={res.turan_minus_lambda:.6f}  same={res.equals_turan_minus}")
