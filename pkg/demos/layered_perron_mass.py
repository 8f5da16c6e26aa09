# Perron mass on alternate layers of a layered k-chromatic graph.
#
# G_{n,k} starts with a (k-1)-clique and continues with independent layers
# of size k-1, each joined completely to the previous one.  Let S be the odd
# layers.  A conjectured lower bound on the Perron mass of the even side
# turns out to fail already at five vertices for k = 3.

# %%
import numpy as np

from spectral_turan.bounds import gregory_rhs
from spectral_turan.graph import gregory_gadget
from spectral_turan.verifier import first_violation, gregory_scan

g = gregory_gadget(5, 3)
print("edges of G_{5,3}:", list(g.edges()))

# %%
records = gregory_scan(3, range(4, 13))
for rec in records:
    flag = "above" if rec.violates_conjecture else "at/below"
    print(f"n={rec.n:>2}  sum_S={rec.sum_S:.10f}  bound={rec.conj_rhs:.10f}  {flag}")
print("first violating n:", first_violation(records))

# %%
# The gap 1/2 - sum_S decays like n^-3.
far = gregory_scan(3, range(50, 301, 50))
print(np.array([[r.n, r.gap * r.n**3] for r in far]).round(2))
print("bound at n=300:", gregory_rhs(300, 3))
