"""Closed-form spectral and chromatic bounds, and a per-graph ledger of them.

Slack convention: a positive slack means the inequality holds.  For upper
bounds on a spectral quantity that is ``bound - value``; for the chromatic
lower bounds it is ``chi - bound``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Optional

from .cliques import CHROMATIC_LIMIT, EdgeCliqueProfile, chromatic_number, edge_clique_orders
from .graph import Graph, to_graph6
from .spectral import DEFAULT_ITER_CAP, DEFAULT_TOL, extreme_eigenvalues, signless_laplacian_radius, spectral_radius

SLACK_EPS = 1e-9


def nikiforov_bound(m: int, omega: int) -> float:
    """sqrt(2 (1 - 1/omega) m)."""
    if omega < 1 or m < 0:
        raise ValueError(f"invalid input m={m}, omega={omega}")
    if omega == 1 and m > 0:
        raise ValueError("an edgeless graph cannot have edges")
    return math.sqrt(2.0 * (1.0 - 1.0 / omega) * m)


def local_turan_bound(profile: EdgeCliqueProfile) -> float:
    """sqrt(2 sum_e (c(e) - 1) / c(e))."""
    return math.sqrt(2.0 * float(profile.radicand()))


def stanley_bound(m: int) -> float:
    if m < 0:
        raise ValueError("negative edge count")
    return -0.5 + math.sqrt(2.0 * m + 0.25)


def hoffman_chi(lambda1: float, lambdan: float) -> float:
    """1 + lambda1 / (-lambda_n); needs lambda_n < 0."""
    if not lambdan < 0:
        raise ValueError("Hoffman's bound needs a negative smallest eigenvalue")
    return 1.0 + lambda1 / -lambdan


def cvetkovic_chi(n: int, lambda1: float) -> float:
    """1 + lambda1 / (n - lambda1)."""
    if not lambda1 < n:
        raise ValueError("Cvetkovic's bound needs lambda1 < n")
    return 1.0 + lambda1 / (n - lambda1)


def edwards_elphick_chi(m: int, lambda1: float) -> float:
    """1 + lambda1^2 / (2m - lambda1^2)."""
    sq = lambda1 * lambda1
    if not sq < 2 * m:
        raise ValueError("Edwards-Elphick bound needs lambda1^2 < 2m")
    return 1.0 + sq / (2 * m - sq)


def signless_conjecture_bound(m: int, r: int) -> float:
    """sqrt(8 (1 - 1/r) m), the conjectured cap on q for K_{r+1}-free graphs."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return math.sqrt(8.0 * (1.0 - 1.0 / r) * m)


def gregory_rhs(n: int, k: int) -> float:
    """1/2 - (k-2) / (2 sqrt((k-2)^2 + 4(k-1)(n-k+1)))."""
    if k < 2 or n < k:
        raise ValueError(f"need k >= 2 and n >= k, got n={n}, k={k}")
    return 0.5 - (k - 2) / (2.0 * math.sqrt((k - 2) ** 2 + 4 * (k - 1) * (n - k + 1)))


def kite_radicand(m: int, w: int) -> int:
    """Closed form of 2 sum_e (c-1)/c on a kite: m + C(w-1, 2)."""
    return m + comb(w - 1, 2)


LEDGER_COLUMNS = (
    "graph6", "n", "m", "omega", "chi", "lambda1", "lambdan", "q",
    "nikiforov", "local", "stanley", "hoffman_chi", "cvetkovic_chi",
    "edwards_elphick_chi", "signless_conj", "gregory_rhs",
    "slack_nikiforov", "slack_local", "slack_stanley", "slack_hoffman",
    "slack_cvetkovic", "slack_edwards_elphick", "slack_signless_conj",
)


@dataclass
class BoundLedger:
    graph6: str
    n: int
    m: int
    omega: int
    chi: Optional[int]
    lambda1: float
    lambdan: float
    q: float
    nikiforov: float
    local: float
    stanley: float
    hoffman_chi: Optional[float]
    cvetkovic_chi: Optional[float]
    edwards_elphick_chi: Optional[float]
    signless_conj: Optional[float]
    gregory_rhs: Optional[float]
    slacks: dict[str, float] = field(default_factory=dict)

    PROVED = ("nikiforov", "local", "stanley", "hoffman", "cvetkovic", "edwards_elphick")

    def violations(self, eps: float = SLACK_EPS) -> list[str]:
        return [name for name in self.PROVED if name in self.slacks and self.slacks[name] < -eps]

    def row(self) -> dict:
        out = {k: v for k, v in asdict(self).items() if k != "slacks"}
        for name in ("nikiforov", "local", "stanley", "hoffman", "cvetkovic", "edwards_elphick", "signless_conj"):
            out[f"slack_{name}"] = self.slacks.get(name)
        return out


def bound_ledger(
    g: Graph,
    tol: float = DEFAULT_TOL,
    iter_cap: int = DEFAULT_ITER_CAP,
    profile: Optional[EdgeCliqueProfile] = None,
) -> BoundLedger:
    if profile is None:
        profile = edge_clique_orders(g)
    n, m, omega = g.n, g.m, profile.omega
    if n:
        lam1, _ = spectral_radius(g, tol, iter_cap)
        _, lamn = extreme_eigenvalues(g, tol, iter_cap)
        q = signless_laplacian_radius(g, tol, iter_cap)
    else:
        lam1 = lamn = q = 0.0
    chi = chromatic_number(g) if n <= CHROMATIC_LIMIT else None

    nik = nikiforov_bound(m, max(omega, 1))
    loc = local_turan_bound(profile)
    stan = stanley_bound(m)
    hoff = hoffman_chi(lam1, lamn) if lamn < -tol else None
    cvet = cvetkovic_chi(n, lam1) if n and lam1 < n else None
    ee = edwards_elphick_chi(m, lam1) if m and lam1 * lam1 < 2 * m else None
    sconj = signless_conjecture_bound(m, omega) if omega >= 2 else None
    grhs = gregory_rhs(n, chi) if chi is not None and chi >= 2 and n >= chi else None

    slacks = {"nikiforov": nik - lam1, "local": loc - lam1, "stanley": stan - lam1}
    if chi is not None:
        for name, value in (("hoffman", hoff), ("cvetkovic", cvet), ("edwards_elphick", ee)):
            if value is not None:
                slacks[name] = chi - value
    if sconj is not None:
        slacks["signless_conj"] = sconj - q
    return BoundLedger(
        to_graph6(g), n, m, omega, chi, lam1, lamn, q, nik, loc, stan,
        hoff, cvet, ee, sconj, grhs, slacks,
    )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def ledgers_to_csv(ledgers) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(LEDGER_COLUMNS)
    for ledger in ledgers:
        row = ledger.row()
        writer.writerow([_fmt(row[c]) for c in LEDGER_COLUMNS])
    return buf.getvalue()


def ledgers_to_json(ledgers) -> str:
    rows = []
    for ledger in ledgers:
        row = ledger.row()
        rows.append({c: row[c] for c in LEDGER_COLUMNS})
    return json.dumps(rows, indent=1)
