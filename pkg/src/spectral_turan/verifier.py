"""Exhaustive small-n checks of the spectral inequalities and the numerical
experiments around them (kite gap, star, layered Perron mass, co-connected
Turán graphs).

Checks never raise on a mathematical failure; they record it in a
``violations`` list so that a whole sweep can be reported.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import bounds
from .canonical import ENUMERATION_LIMIT, canonical_id, enumerate_graph6, enumerate_graphs
from .cliques import (
    EdgeCliqueProfile,
    chromatic_number,
    clique_number,
    complete_multipartite_parts,
    edge_clique_orders,
    maximum_clique,
)
from .graph import (
    MAX_VERTICES,
    Graph,
    PartitionSpec,
    complement,
    from_graph6,
    gregory_gadget,
    gregory_layers,
    is_connected,
    kite,
    star,
    to_graph6,
    turan_edge_count,
    turan_graph,
    turan_minus,
)
from .lagrangian import (
    SimplexVector,
    maximize_lagrangian,
    maximize_weighted,
    verify_equality_support,
    weighted_value,
)
from .spectral import DEFAULT_TOL, extreme_eigenvalues, signless_laplacian_radius, spectral_radius

EQUALITY_REL_TOL = 1e-7
# n = 4, k = 3 meets the conjectured bound with equality; rounding alone must not count
CONJECTURE_MARGIN = 1e-12
SLACK_EPS = bounds.SLACK_EPS

NONE, BIPARTITE, REGULAR = "none", "complete-bipartite", "complete-regular-multipartite"


def parallel_map(func: Callable, items: Sequence, jobs: int = 1) -> list:
    """Order-preserving map, optionally across worker processes."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def default_jobs() -> int:
    return os.cpu_count() or 1


# local theorem ---------------------------------------------------------------


@dataclass
class VerificationReport:
    graph6: str
    ledger: Optional[bounds.BoundLedger]
    equality_class: str = NONE
    violations: list[str] = field(default_factory=list)
    skipped: bool = False


def equality_structure(g: Graph, omega: int) -> str:
    """Structural equality class: complete bipartite (omega 2) or complete
    regular omega-partite (omega >= 3), isolated vertices ignored."""
    parts = complete_multipartite_parts(g)
    if parts is None or parts.r != omega:
        return NONE
    if omega == 2:
        return BIPARTITE
    if omega >= 3 and len(set(parts.parts)) == 1:
        return REGULAR
    return NONE


def check_local_theorem(g: Graph, tol: float = DEFAULT_TOL, with_ledger: bool = True) -> VerificationReport:
    profile = edge_clique_orders(g)
    code = to_graph6(g)
    if profile.omega < 2:
        return VerificationReport(code, None, skipped=True)
    lam, _ = spectral_radius(g, tol)
    local = bounds.local_turan_bound(profile)
    ledger = bounds.bound_ledger(g, tol, profile=profile) if with_ledger else None
    report = VerificationReport(code, ledger)
    slack = local - lam
    if slack < -SLACK_EPS:
        report.violations.append(f"local bound exceeded: lambda={lam!r} > {local!r}")
    numeric_tie = slack / local < EQUALITY_REL_TOL
    structure = equality_structure(g, profile.omega)
    report.equality_class = structure
    if numeric_tie and structure == NONE:
        report.violations.append("numerical equality without the equality structure")
    if not numeric_tie and structure != NONE:
        report.violations.append(f"{structure} graph with relative slack {slack / local:.3e}")
    return report


def check_domination(g: Graph, profile: Optional[EdgeCliqueProfile] = None) -> list[str]:
    """Exact check of sum (c-1)/c <= (1 - 1/omega) m."""
    if profile is None:
        profile = edge_clique_orders(g)
    if profile.omega < 1:
        return []
    if profile.radicand() > (1 - Fraction(1, profile.omega)) * g.m:
        return ["local radicand exceeds the Nikiforov radicand"]
    return []


def check_ledger_bounds(g: Graph, tol: float = DEFAULT_TOL) -> list[str]:
    """lambda below the local, Nikiforov and Stanley bounds; chi above the
    three spectral lower bounds on connected graphs; Edwards-Elphick at least
    Cvetkovic wherever defined."""
    if g.n == 0:
        return []
    ledger = bounds.bound_ledger(g, tol)
    out = []
    for name in ("local", "nikiforov", "stanley"):
        if ledger.slacks[name] < -SLACK_EPS:
            out.append(f"{name} bound violated (slack {ledger.slacks[name]:.3e})")
    if ledger.local > ledger.nikiforov + 1e-12:
        out.append("local bound above Nikiforov bound")
    if is_connected(g):
        for name in ("hoffman", "cvetkovic", "edwards_elphick"):
            if name in ledger.slacks and ledger.slacks[name] < -SLACK_EPS:
                out.append(f"chromatic {name} bound violated (slack {ledger.slacks[name]:.3e})")
    if ledger.edwards_elphick_chi is not None and ledger.cvetkovic_chi is not None:
        if ledger.edwards_elphick_chi < ledger.cvetkovic_chi - SLACK_EPS:
            out.append("Edwards-Elphick bound below Cvetkovic bound")
    return out


# Motzkin-Straus ------------------------------------------------------------


def check_motzkin_straus(g: Graph, tol: float = 1e-6) -> list[str]:
    profile = edge_clique_orders(g)
    value, x = maximize_lagrangian(g)
    out = []
    target = 1.0 - 1.0 / profile.omega
    if abs(value - target) > tol:
        out.append(f"Lagrangian maximum {value!r} != 1 - 1/omega = {target!r}")
    if not verify_equality_support(g, x, profile):
        out.append(f"Lagrangian maximiser support {x.support} is not complete omega-partite")
    return out


def check_weighted(g: Graph, tol: float = 1e-6) -> list[str]:
    if g.m == 0:
        return []
    profile = edge_clique_orders(g)
    value, x = maximize_weighted(g, profile)
    out = []
    if abs(value - 1.0) > tol:
        out.append(f"weighted maximum {value!r} != 1")
    if not verify_equality_support(g, x, profile):
        out.append(f"weighted maximiser support {x.support} is not complete omega-partite")
    return out


def check_cauchy_schwarz(g: Graph, tol: float = 1e-8) -> list[str]:
    """With Perron vector z and y = z^2: F(y) <= 1 and lambda^2 <= 2 (sum (c-1)/c) F(y)."""
    if g.m == 0 or not is_connected(g):
        return []
    profile = edge_clique_orders(g)
    lam, z = spectral_radius(g)
    y = SimplexVector.from_array(z * z)
    f = weighted_value(g, profile, y)
    out = []
    if f > 1.0 + tol:
        out.append(f"F(y) = {f!r} > 1")
    rhs = 2.0 * float(profile.radicand()) * f
    if lam * lam > rhs + tol:
        out.append(f"lambda^2 = {lam * lam!r} > {rhs!r}")
    return out


# auxiliary lemmas --------------------------------------------------------------


def check_brouwer(g: Graph, r: int) -> bool:
    """K_{r+1}-free with at least e(T_r(n)) - floor(n/r) + 2 edges implies r-partite."""
    n = g.n
    if r < 2 or n < 2 * r + 1:
        raise ValueError(f"need r >= 2 and n >= 2r + 1, got n={n}, r={r}")
    if clique_number(g) > r:
        raise ValueError(f"graph contains K_{r + 1}")
    if g.m < turan_edge_count(n, r) - n // r + 2:
        return True
    return chromatic_number(g) <= r


def check_mubayi(parts: PartitionSpec | Sequence[int], s: int) -> bool:
    """sum_{i<j} n_i n_j >= e(T_r(n)) - s implies floor(n/r) - s <= n_i <= ceil(n/r) + s."""
    if not isinstance(parts, PartitionSpec):
        parts = PartitionSpec.of(parts)
    n, r = parts.n, parts.r
    if not s < n:
        raise ValueError("need s < n")
    if parts.edge_count() < turan_edge_count(n, r) - s:
        return True
    lo, hi = n // r - s, -(-n // r) + s
    return all(lo <= p <= hi for p in parts.parts)


def mubayi_scan(trials: int = 10**5, r_max: int = 5, n_max: int = 60, seed: int = 0) -> dict:
    """Random compositions checked at a random s and at the tight s (the
    partition's deficit below the Turán edge count)."""
    rng = np.random.default_rng(seed)
    violations = []
    active = 0
    for _ in range(trials):
        r = int(rng.integers(2, r_max + 1))
        n = int(rng.integers(r, n_max + 1))
        # uniform composition of n into r positive parts
        cuts = np.sort(rng.choice(np.arange(1, n), size=r - 1, replace=False))
        sizes = np.diff(np.concatenate(([0], cuts, [n])))
        parts = PartitionSpec.of(int(v) for v in sizes)
        tight = turan_edge_count(n, r) - parts.edge_count()
        for s in {int(rng.integers(0, n)), tight}:
            if not 0 <= s < n:
                continue
            if parts.edge_count() >= turan_edge_count(n, r) - s:
                active += 1
            if not check_mubayi(parts, s):
                violations.append((parts.parts, s))
    return {"trials": trials, "antecedent_true": active, "violations": violations}


# co-connected spectral Turán problem ----------------------------------------


@dataclass
class SpexResult:
    n: int
    r: int
    graph: Graph
    graph6: str
    lam: float
    candidates: int
    turan_minus_lambda: Optional[float]
    equals_turan_minus: Optional[bool]


def _spex_candidates(n: int, r: int) -> Iterable[Graph]:
    if n <= ENUMERATION_LIMIT:
        for g in enumerate_graphs(n):
            if clique_number(g) <= r and is_connected(complement(g)):
                yield g
        return
    # one vertex beyond the enumeration limit: extend K_{r+1}-free parents
    for parent in enumerate_graphs(n - 1):
        if clique_number(parent) > r:
            continue
        base = list(parent.adj) + [0]
        for subset in range(1 << (n - 1)):
            if subset and maximum_clique(parent, subset).bit_count() > r - 1:
                continue
            rows = base.copy()
            rows[n - 1] = subset
            for v in range(n - 1):
                if subset >> v & 1:
                    rows[v] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            if is_connected(complement(g)):
                yield g


def spex_cc_search(n: int, r: int, tol: float = DEFAULT_TOL) -> SpexResult:
    """Maximum spectral radius over co-connected K_{r+1}-free graphs on n vertices."""
    if not 1 <= n <= ENUMERATION_LIMIT + 1:
        raise ValueError(f"exhaustive search supports n <= {ENUMERATION_LIMIT + 1}")
    if r < 1:
        raise ValueError("r must be positive")
    best_lam = -1.0
    tied: list[Graph] = []
    count = 0
    for g in _spex_candidates(n, r):
        count += 1
        lam = spectral_radius(g, tol)[0] if g.m else 0.0
        if lam > best_lam + 1e-9:
            best_lam, tied = lam, [g]
        elif lam >= best_lam - 1e-9:
            tied.append(g)
    if not tied:
        raise ValueError(f"no co-connected K_{r + 1}-free graph on {n} vertices")
    best_id = min(canonical_id(g) for g in tied)
    best = from_graph6(best_id)
    tm_lam = same = None
    if 2 <= r <= n - 1:
        tm = turan_minus(n, r)
        tm_lam = spectral_radius(tm, tol)[0]
        same = canonical_id(tm) == best_id
    return SpexResult(n, r, best, best_id, best_lam, count, tm_lam, same)


def turan_minus_claims(n: int, r: int, tol: float = DEFAULT_TOL) -> dict:
    """lambda(T_r^-(n)) against lambda(T_r(n)) - 2r/n, and the edge count of T_r^-(n)."""
    if r < 2 or n > 600:
        raise ValueError("need r >= 2 and n <= 600")
    tg, tm = turan_graph(n, r), turan_minus(n, r)
    lam_t = spectral_radius(tg, tol)[0]
    lam_m = spectral_radius(tm, tol)[0]
    e_t = turan_edge_count(n, r)
    margin = lam_m - (lam_t - 2 * r / n)
    out = {
        "n": n,
        "r": r,
        "e_turan": e_t,
        "e_turan_minus": tm.m,
        "edge_identity": tm.m == e_t - (r - 1) and tg.m == e_t,
        "claim5": Fraction(tm.m) >= e_t - Fraction(17 * r, 8),
        "co_connected": is_connected(complement(tm)),
        "lambda_turan": lam_t,
        "lambda_turan_minus": lam_m,
        "claim4_margin": margin,
        "claim4": margin > -1e-8,
    }
    out["ok"] = all(out[k] for k in ("edge_identity", "claim5", "co_connected", "claim4"))
    return out


# layered graph Perron mass ---------------------------------------------------------


@dataclass
class GregoryRecord:
    n: int
    k: int
    t: int
    s: int
    lam: float
    x0: float
    sum_S: float
    identity_rhs: float
    conj_rhs: float
    claim8_margin: float
    claim9_margin: float
    violates_conjecture: bool
    v0_spread: float
    violations: list[str] = field(default_factory=list)

    @property
    def gap(self) -> float:
        return 0.5 - self.sum_S


def gregory_experiment(n: int, k: int, tol: float = DEFAULT_TOL) -> GregoryRecord:
    if n > 600:
        raise ValueError("n is limited to 600")
    layers = gregory_layers(n, k)
    g = gregory_gadget(n, k)
    lam, x = spectral_radius(g, tol)
    t, s = divmod(n, k - 1)
    v0 = x[list(layers[0])]
    x0 = float(v0.mean())
    odd = [v for idx, layer in enumerate(layers) if idx % 2 == 1 for v in layer]
    sum_s = float(np.sum(x[odd] ** 2))
    identity = 0.5 - comb(k - 1, 2) * x0 * x0 / lam
    conj = bounds.gregory_rhs(n, k)
    rec = GregoryRecord(
        n=n,
        k=k,
        t=t,
        s=s,
        lam=lam,
        x0=x0,
        sum_S=sum_s,
        identity_rhs=identity,
        conj_rhs=conj,
        claim8_margin=(k - 1) ** 3 * math.pi**2 / n**2 - (2 * (k - 1) - lam),
        claim9_margin=(k - 1) ** 2 * math.pi**2 / n**1.5 - x0,
        violates_conjecture=sum_s - conj > CONJECTURE_MARGIN,
        v0_spread=float(v0.max() - v0.min()),
    )
    if abs(rec.sum_S - rec.identity_rhs) > 1e-10:
        rec.violations.append(f"identity off by {rec.sum_S - rec.identity_rhs:.3e}")
    if rec.claim8_margin < 0:
        rec.violations.append(f"claim 8 margin {rec.claim8_margin:.3e} < 0")
    if rec.claim9_margin < 0:
        rec.violations.append(f"claim 9 margin {rec.claim9_margin:.3e} < 0")
    if rec.v0_spread > 1e-10:
        rec.violations.append(f"clique layer components differ by {rec.v0_spread:.3e}")
    return rec


def gregory_scan(k: int, n_values: Iterable[int], tol: float = DEFAULT_TOL) -> list[GregoryRecord]:
    return [gregory_experiment(n, k, tol) for n in n_values]


def first_violation(records: Iterable[GregoryRecord]) -> Optional[int]:
    return next((rec.n for rec in records if rec.violates_conjecture), None)


def gregory_gap_grid(k_values: Iterable[int], n_values: Iterable[int]) -> list[dict]:
    """(1/2 - sum_S) n^3 / k^5 over a grid; reported, not asserted."""
    rows = []
    for k in k_values:
        for n in n_values:
            if n < 2 * (k - 1):
                continue
            rec = gregory_experiment(n, k)
            rows.append({"n": n, "k": k, "gap": rec.gap, "scaled_gap": rec.gap * n**3 / k**5})
    return rows


# kite and star ---------------------------------------------------------------


def kite_gap_scan(w: int, m_list: Iterable[int], verify_profile: bool = True) -> list[dict]:
    """Nikiforov minus local bound on kites; the radicand identity is checked
    on the constructed graph whenever it fits within the vertex cap."""
    if w < 3:
        raise ValueError("clique order must be at least 3")
    rows = []
    for m in m_list:
        if not m > w * comb(w - 1, 2):
            raise ValueError(f"need m > w C(w-1, 2) = {w * comb(w - 1, 2)}, got m={m}")
        closed = bounds.kite_radicand(m, w)
        nik = bounds.nikiforov_bound(m, w)
        loc = math.sqrt(closed)
        row = {
            "m": m,
            "w": w,
            "nikiforov": nik,
            "local": loc,
            "gap": nik - loc,
            "gap_over_sqrt_m": (nik - loc) / math.sqrt(m),
            "radicand": closed,
            "profile_radicand": None,
            "identity": None,
        }
        n = w + m - comb(w, 2)
        if verify_profile and n <= MAX_VERTICES:
            profile = edge_clique_orders(kite(m, w))
            twice = 2 * profile.radicand()
            row["profile_radicand"] = twice
            row["identity"] = twice == closed and profile.omega == w
        rows.append(row)
    return rows


def kite_gap_limit(w: int) -> float:
    return math.sqrt(2 * (1 - 1 / w)) - 1


def star_counterexample(n: int, r: int, tol: float = DEFAULT_TOL) -> dict:
    if r < 2 or not n > 8 * (1 - 1 / r):
        raise ValueError(f"need r >= 2 and n > 8(1 - 1/r), got n={n}, r={r}")
    q = signless_laplacian_radius(star(n), tol)
    bound = bounds.signless_conjecture_bound(n - 1, r)
    return {
        "n": n,
        "r": r,
        "q": q,
        "bound": bound,
        "q_equals_n": abs(q - n) <= 1e-8,
        "violated": q > bound,
    }


# suites ----------------------------------------------------------------------


def _brouwer_violations(g: Graph) -> list[str]:
    out = []
    omega = clique_number(g)
    for r in (2, 3):
        if g.n >= 2 * r + 1 and omega <= r and not check_brouwer(g, r):
            out.append(f"Brouwer implication fails for r={r}")
    return out


def _local_worker(g: Graph) -> tuple[list[str], str]:
    report = check_local_theorem(g, with_ledger=False)
    violations = list(report.violations) + check_domination(g)
    return violations, report.equality_class


SUITES: dict[str, Callable[[Graph], list[str]]] = {
    "chromatic": check_ledger_bounds,
    "motzkin-straus": check_motzkin_straus,
    "weighted": check_weighted,
    "cauchy-schwarz": check_cauchy_schwarz,
    "brouwer": _brouwer_violations,
}
SUITE_NAMES = ("local-theorem",) + tuple(SUITES)


def _suite_task(item: tuple[str, str]) -> tuple[str, list[str], str]:
    name, code = item
    g = from_graph6(code)
    if name == "local-theorem":
        violations, eq = _local_worker(g)
        return code, violations, eq
    return code, SUITES[name](g), NONE


def run_suite(name: str, n: int, jobs: int = 1, graphs: Optional[Iterable[str]] = None) -> dict:
    """Run one suite over every isomorphism class on n vertices (or over the
    supplied graph6 codes) and summarise."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    codes = list(enumerate_graph6(n)) if graphs is None else list(graphs)
    results = parallel_map(_suite_task, [(name, c) for c in codes], jobs)
    results.sort(key=lambda r: r[0])
    failing = [{"graph6": code, "violations": v} for code, v, _ in results if v]
    equality = [code for code, _, eq in results if eq != NONE]
    return {
        "suite": name,
        "n": n,
        "checked": len(results),
        "violations": failing,
        "equality_cases": equality,
    }


def verify_all(max_n: int, suites: Sequence[str] = SUITE_NAMES, jobs: int = 1) -> list[dict]:
    return [run_suite(s, n, jobs) for s in suites for n in range(1, max_n + 1)]
