"""End-to-end checks: exact values and extremal sets, the inequality ledger,
and the Kopylov / Brandt implications over enumerated graphs."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

from .constructions import Cactus, CompleteBipartite
from .cycles import circumference, cycle_spectrum
from .formulas import binom2, ex_odd_cycle, extremal_family, g_decompose, g_formula, h1_formula, h2_formula, mantel
from .graph import Graph, is_bipartite, is_two_connected
from .graph6 import g6_encode
from .search import SearchConfig, expected_family_forms, enumerate_graphs, max_edges_c2k1_free

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"
SWEEP_CAP = 8


@dataclass
class Verification:
    n: int
    k: int
    status: str
    expected_value: int
    found_value: int | None
    expected_family: list[str]
    found_graphs: list[str]
    nodes_explored: int
    elapsed: float

    @property
    def multiplicity(self) -> int:
        return len(self.found_graphs)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("elapsed")
        d["multiplicity"] = self.multiplicity
        return d


def verify_theorem(n: int, k: int, config: SearchConfig | None = None) -> Verification:
    """Exhaustive search versus the closed-form value and the listed extremal graphs."""
    if config is None:
        config = SearchConfig(n, k)
    elif (config.n, config.k) != (n, k) or not config.collect_all:
        config = SearchConfig(
            n,
            k,
            collect_all=True,
            initial_lower_bound=config.initial_lower_bound,
            worker_count=config.worker_count,
            node_limit=config.node_limit,
            strategy=config.strategy,
        )
    report = max_edges_c2k1_free(config)
    expected = ex_odd_cycle(n, k)
    if k >= 2:
        family = [spec.label for spec in extremal_family(n, k)]
    else:
        family = [CompleteBipartite((n + 1) // 2, n // 2).label] if n >= 2 else ["K_1"]
    found = [g6_encode(cf.graph()) for cf in report.extremal_graphs]
    if not report.complete:
        status = INCONCLUSIVE
    elif report.optimum == expected and set(report.extremal_graphs) == expected_family_forms(n, k):
        status = PASS
    else:
        status = FAIL
    return Verification(
        n=n,
        k=k,
        status=status,
        expected_value=expected,
        found_value=report.optimum,
        expected_family=family,
        found_graphs=found,
        nodes_explored=report.nodes_explored,
        elapsed=report.elapsed,
    )


# ---------------------------------------------------------------------------
# inequality ledger


@dataclass
class LedgerItem:
    name: str
    statement: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    equalities: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class LedgerReport:
    k_max: int
    n_max: int
    items: list[LedgerItem]

    @property
    def violations(self) -> int:
        return sum(len(item.violations) for item in self.items)

    def item(self, name: str) -> LedgerItem:
        return next(i for i in self.items if i.name == name)

    def to_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "n_max": self.n_max,
            "violations": self.violations,
            "items": [
                {
                    "name": i.name,
                    "statement": i.statement,
                    "checked": i.checked,
                    "violations": i.violations,
                    "equalities": [list(e) for e in i.equalities],
                }
                for i in self.items
            ],
        }


G_H2_EXCEPTIONS = frozenset({(5, 2), (6, 2)})


def _ledger_g_h2(k_max: int, n_max: int) -> LedgerItem:
    item = LedgerItem("g_vs_h2", "g(n,k) > h2(n,k) for n >= 2k+1, with equality only at (5,2), (6,2)")
    for k in range(2, k_max + 1):
        for n in range(2 * k + 1, n_max + 1):
            g, h2 = g_formula(n, k), h2_formula(n, k)
            item.checked += 1
            if g == h2:
                item.equalities.append((n, k))
            if g < h2 or (g == h2) != ((n, k) in G_H2_EXCEPTIONS):
                v = {"n": n, "k": k, "g": g, "h2": h2}
                if n >= 4 * k and mantel(n) > max(g, h2):
                    v["note"] = "floor(n^2/4) exceeds both sides here"
                item.violations.append(v)
    return item


def _ledger_g_h1(k_max: int, n_max: int) -> LedgerItem:
    item = LedgerItem("g_vs_h1", "h1(n,k) <= g(n,k), with equality iff r in {k, k+1} where n = (s-1)(2k-1) + r")
    for k in range(2, k_max + 1):
        for n in range(max(k, 2), n_max + 1):
            g, h1 = g_formula(n, k), h1_formula(n, k)
            r = g_decompose(n, k).r
            item.checked += 1
            if g == h1:
                item.equalities.append((n, k, r))
            if h1 > g or (g == h1) != (r in (k, k + 1)):
                item.violations.append({"n": n, "k": k, "r": r, "g": g, "h1": h1})
    return item


def _ledger_h1_mantel(k_max: int, n_max: int) -> LedgerItem:
    item = LedgerItem("h1_below_mantel", "h1(n,k) < floor(n^2/4) for n >= 4k")
    for k in range(2, k_max + 1):
        for n in range(4 * k, n_max + 1):
            item.checked += 1
            if not h1_formula(n, k) < mantel(n):
                item.violations.append({"n": n, "k": k, "h1": h1_formula(n, k), "mantel": mantel(n)})
    return item


def _ledger_bipartite_merge(k_max: int, n_max: int) -> LedgerItem:
    item = LedgerItem(
        "bipartite_merge",
        "e(T_{a,2}) + e(T_{b,2}) <= (a^2 + b^2)/4 < floor((a+b-1)^2/4) for a >= 2k+1, b >= 2",
    )
    for k in range(2, k_max + 1):
        for a in range(2 * k + 1, n_max + 1):
            for b in range(2, n_max + 2 - a):
                lhs = mantel(a) + mantel(b)
                rhs = mantel(a + b - 1)
                item.checked += 1
                # compare the middle term exactly by scaling by 4
                if not (4 * lhs <= a * a + b * b < 4 * rhs):
                    item.violations.append({"k": k, "a": a, "b": b, "lhs": lhs, "rhs": rhs})
    return item


def _ledger_two_cliques(k_max: int, n_max: int) -> LedgerItem:
    item = LedgerItem(
        "h1_clique_to_cactus",
        "h1(a,k) + C(b,2) < C(2k,2) + C(a+b-2k,2) for a in {3k-1, 3k}, 2 <= b <= k",
    )
    for k in range(2, k_max + 1):
        for a in (3 * k - 1, 3 * k):
            for b in range(2, k + 1):
                if a + b - 1 > n_max:
                    continue
                lhs = h1_formula(a, k) + binom2(b)
                spec = Cactus((2 * k, a + b - 2 * k))
                rhs = binom2(2 * k) + binom2(a + b - 2 * k)
                item.checked += 1
                if not lhs < rhs:
                    item.violations.append({"k": k, "a": a, "b": b, "lhs": lhs, "rhs": rhs, "cactus": spec.label})
    return item


def _ledger_turan_merges(k_max: int, n_max: int) -> LedgerItem:
    """The remaining block-pair replacements, each by T_{a+b-1,2}."""
    item = LedgerItem(
        "turan_replacements",
        "block pairs (T_a with H1_b or K_b; H1_a with H1_b or K_b, k <= b <= 2k) have fewer edges than T_{a+b-1,2}",
    )
    for k in range(2, k_max + 1):
        h1_sizes = (3 * k - 1, 3 * k)
        cases: list[tuple[str, int, int, int]] = []
        for a in range(2 * k + 1, n_max + 1):
            for b in h1_sizes:
                cases.append(("T+H1", a, b, mantel(a) + h1_formula(b, k)))
            for b in range(2, 2 * k + 1):
                cases.append(("T+K", a, b, mantel(a) + binom2(b)))
        for a in h1_sizes:
            for b in h1_sizes:
                cases.append(("H1+H1", a, b, h1_formula(a, k) + h1_formula(b, k)))
            for b in range(k, 2 * k + 1):
                cases.append(("H1+K", a, b, h1_formula(a, k) + binom2(b)))
        for kind, a, b, lhs in cases:
            if a + b - 1 > n_max:
                continue
            rhs = mantel(a + b - 1)
            item.checked += 1
            if not lhs < rhs:
                item.violations.append({"case": kind, "k": k, "a": a, "b": b, "lhs": lhs, "rhs": rhs})
    return item


LEDGER_ITEMS: list[Callable[[int, int], LedgerItem]] = [
    _ledger_g_h2,
    _ledger_g_h1,
    _ledger_h1_mantel,
    _ledger_bipartite_merge,
    _ledger_two_cliques,
    _ledger_turan_merges,
]


def check_ledger(k_max: int, n_max: int) -> LedgerReport:
    if k_max < 2:
        raise ValueError(f"need k_max >= 2, got {k_max}")
    if n_max < 2 * k_max + 1:
        raise ValueError(f"need n_max >= 2*k_max + 1 = {2 * k_max + 1}, got {n_max}")
    return LedgerReport(k_max, n_max, [build(k_max, n_max) for build in LEDGER_ITEMS])


# ---------------------------------------------------------------------------
# Kopylov and Brandt implications

VACUOUS, HOLDS, VIOLATED = "vacuous", "holds", "violated"


def kopylov_status(g: Graph, k: int) -> str:
    """2-connected, n >= 2k+1 >= 5, no cycle of length >= 2k+1  =>  e <= max(h1, h2)."""
    n = g.n
    if k < 2 or n < 2 * k + 1 or not is_two_connected(g):
        return VACUOUS
    if circumference(g) > 2 * k:
        return VACUOUS
    bound = max(h1_formula(n, k), h2_formula(n, k))
    return HOLDS if g.edge_count() <= bound else VIOLATED


def check_kopylov(g: Graph, k: int) -> bool:
    return kopylov_status(g, k) != VIOLATED


def brandt_status(g: Graph) -> str:
    """Non-bipartite with e > (n-1)^2/4 + 1  =>  cycles of every length 3..circumference."""
    n, e = g.n, g.edge_count()
    if 4 * e <= (n - 1) ** 2 + 4 or is_bipartite(g):
        return VACUOUS
    spectrum = cycle_spectrum(g)
    top = max(spectrum, default=2)
    return HOLDS if spectrum == set(range(3, top + 1)) else VIOLATED


def check_brandt(g: Graph) -> bool:
    return brandt_status(g) != VIOLATED


@dataclass
class SweepRow:
    n: int
    classes: int = 0
    kopylov: dict[int, dict[str, int]] = field(default_factory=dict)
    brandt: dict[str, int] = field(default_factory=lambda: {VACUOUS: 0, HOLDS: 0, VIOLATED: 0})


@dataclass
class SweepReport:
    n_max: int
    rows: list[SweepRow]
    counterexamples: list[dict]

    @property
    def violations(self) -> int:
        return len(self.counterexamples)

    @property
    def classes(self) -> int:
        return sum(r.classes for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "classes": self.classes,
            "violations": self.violations,
            "rows": [asdict(r) for r in self.rows],
            "counterexamples": self.counterexamples,
        }


def sweep_properties(n_max: int, ks: tuple[int, ...] = (2, 3)) -> SweepReport:
    if not 1 <= n_max <= SWEEP_CAP:
        raise ValueError(f"sweep supports 1 <= n_max <= {SWEEP_CAP}, got {n_max}")
    rows = []
    bad: list[dict] = []
    for n in range(1, n_max + 1):
        row = SweepRow(n, kopylov={k: {VACUOUS: 0, HOLDS: 0, VIOLATED: 0} for k in ks})
        for g in enumerate_graphs(n):
            row.classes += 1
            for k in ks:
                st = kopylov_status(g, k)
                row.kopylov[k][st] += 1
                if st == VIOLATED:
                    bad.append({"property": "kopylov", "k": k, "graph6": g6_encode(g)})
            st = brandt_status(g)
            row.brandt[st] += 1
            if st == VIOLATED:
                bad.append({"property": "brandt", "graph6": g6_encode(g)})
        rows.append(row)
    return SweepReport(n_max, rows, bad)
