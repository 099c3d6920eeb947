"""Exhaustive census of small labelled graphs by genus-type invariants, and the claim registry.

Labelled counts come from enumerating every graph on [n].  Cycle rank,
excess and connectivity are computed for whole index chunks at once with
numpy bit operations; genus profiles (n <= 5) are computed graph by graph.
Unlabelled counts come from the isomorphism-class list, and every labelled
count is cross-checked against the sum of orbit sizes of the member classes.
"""
from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path

import numpy as np

from .canon import iso_classes
from .classes import ext_count, minext
from .config import BudgetExceeded, CeilingExceeded
from .formulas import (OutOfRange, connected_lower, dissection_count, edge_bound, free_sandwich,
                       handle_growth_factor, minext_lower, triangulation_ext, unicellular_upper)
from .genus import genus_profile, is_planar
from .graphs import complete_graph, cycle_rank, excess, graph_from_index, is_connected, pairs

GENUS_FAMILIES = ("E", "OE", "NE", "OENE")
CHEAP_FAMILIES = ("F", "XS", "C")
FAMILIES = GENUS_FAMILIES + CHEAP_FAMILIES
GENUS_NMAX = 5
CHEAP_NMAX = 7
CHUNK = 1 << 15
CSV_FIELDS = ["n", "h", "family", "labelled", "unlabelled", "connected_labelled", "connected_unlabelled"]
INVARIANT_FIELDS = ["index", "m", "connected", "cycle_rank", "excess", "orientable", "nonorientable", "any"]


class CensusBudgetExceeded(BudgetExceeded):
    def __init__(self, n: int, index: int, inner: BudgetExceeded):
        self.n, self.index = n, index
        super().__init__(inner.estimate, inner.budget, f"census graph n={n} index={index}")


@dataclass
class CensusConfig:
    nmax: int = 5
    genus_nmax: int = GENUS_NMAX
    out: Path | None = None
    jobs: int = 1
    resume: bool = False
    budget: int | None = None

    def __post_init__(self):
        if self.nmax > CHEAP_NMAX:
            raise CeilingExceeded(f"census limited to n <= {CHEAP_NMAX}")
        self.genus_nmax = min(self.genus_nmax, self.nmax, GENUS_NMAX)


@dataclass(frozen=True)
class CensusRecord:
    n: int
    h: int
    family: str
    labelled: int
    unlabelled: int
    connected_labelled: int
    connected_unlabelled: int


def max_h(n: int) -> int:
    return max(comb(n, 2) - n + 1, 0)


# ---------------------------------------------------------------- vectorised invariants

def chunk_invariants(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(cycle rank, excess, connected) for every graph index in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    P = pairs(n)
    adj = [np.zeros(len(idx), dtype=np.int64) for _ in range(n)]
    for bit, (u, v) in enumerate(P):
        on = (idx >> bit) & 1
        adj[u - 1] |= on << (v - 1)
        adj[v - 1] |= on << (u - 1)
    deg = [np.bitwise_count(a).astype(np.int64) for a in adj]
    m = np.bitwise_count(idx).astype(np.int64)
    reach = [np.full(len(idx), 1 << v, dtype=np.int64) for v in range(n)]
    for _ in range(max(n - 1, 1)):
        new = []
        for v in range(n):
            r = reach[v].copy()
            for u in range(n):
                r |= np.where((reach[v] >> u) & 1, adj[u], 0)
            new.append(r)
        reach = new
    kappa = np.zeros(len(idx), dtype=np.int64)
    xs = np.zeros(len(idx), dtype=np.int64)
    for v in range(n):
        leader = (reach[v] & ((1 << v) - 1)) == 0
        size = np.bitwise_count(reach[v]).astype(np.int64)
        edges2 = np.zeros(len(idx), dtype=np.int64)
        for u in range(n):
            edges2 += np.where((reach[v] >> u) & 1, deg[u], 0)
        ce = edges2 // 2
        kappa += leader
        xs += np.where(leader, np.maximum(ce - size, 0), 0)
    cr = m - n + kappa
    return cr, xs, kappa == 1


def _chunk_histograms(n: int, start: int, stop: int) -> dict:
    cr, xs, conn = chunk_invariants(n, start, stop)
    H = max_h(n) + 1
    return {
        "start": start,
        "stop": stop,
        "cr": np.bincount(cr, minlength=H).tolist(),
        "xs": np.bincount(xs, minlength=H).tolist(),
        "cr_conn": np.bincount(cr[conn], minlength=H).tolist(),
        "xs_conn": np.bincount(xs[conn], minlength=H).tolist(),
    }


def _checkpoint_path(out: Path | None, n: int, start: int) -> Path | None:
    if out is None:
        return None
    return out / "checkpoints" / f"n{n}_{start:08d}.json"


def _run_chunk(args) -> dict:
    n, start, stop, path = args
    if path is not None and path.exists():
        return json.loads(path.read_text())
    result = _chunk_histograms(n, start, stop)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(result, sort_keys=True))
        tmp.replace(path)
    return result


def cheap_histograms(n: int, cfg: CensusConfig) -> dict[str, list[int]]:
    """Labelled histograms of cycle rank / excess (all graphs and connected ones) over [n]."""
    total = 1 << comb(n, 2)
    tasks = []
    for start in range(0, total, CHUNK):
        path = _checkpoint_path(cfg.out, n, start) if cfg.out is not None else None
        if path is not None and not cfg.resume and path.exists():
            path.unlink()
        tasks.append((n, start, min(start + CHUNK, total), path))
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_run_chunk, tasks))
    else:
        parts = [_run_chunk(t) for t in tasks]
    H = max_h(n) + 1
    agg = {k: [0] * H for k in ("cr", "xs", "cr_conn", "xs_conn")}
    for part in sorted(parts, key=lambda p: p["start"]):
        for k in agg:
            for i, c in enumerate(part[k]):
                agg[k][i] += c
    return agg


# ---------------------------------------------------------------- per-graph genus profiles

@dataclass(frozen=True)
class GraphInvariants:
    index: int
    m: int
    connected: bool
    cycle_rank: int
    excess: int
    orientable: int
    nonorientable: int
    any: int


def graph_invariants(n: int, index: int, budget=None) -> GraphInvariants:
    G = graph_from_index(n, index)
    try:
        prof = genus_profile(G, budget)
    except BudgetExceeded as exc:
        raise CensusBudgetExceeded(n, index, exc) from exc
    return GraphInvariants(index, G.m, is_connected(G), cycle_rank(G), excess(G),
                           prof.orientable, prof.nonorientable, prof.any)


def genus_member(inv, family: str, h: int) -> bool:
    if family == "E":
        return inv.any <= h
    if family == "OE":
        return inv.orientable <= h
    if family == "NE":
        return inv.nonorientable <= h
    if family == "OENE":
        return inv.orientable <= h and inv.nonorientable <= h
    if family == "F":
        return inv.cycle_rank <= h
    if family == "XS":
        return inv.excess <= h
    if family == "C":
        return inv.connected and inv.cycle_rank <= h
    raise ValueError(family)


@dataclass(frozen=True)
class ClassInvariants:
    orbit: int
    connected: bool
    cycle_rank: int
    excess: int
    orientable: int
    nonorientable: int
    any: int


def class_invariants(n: int, with_genus: bool, budget=None) -> list[ClassInvariants]:
    out = []
    for cls in iso_classes(n):
        G = cls.rep
        if with_genus:
            prof = genus_profile(G, budget)
            o, nn, a = prof.orientable, prof.nonorientable, prof.any
        else:
            o = nn = a = -1
        out.append(ClassInvariants(cls.orbit, is_connected(G), cycle_rank(G), excess(G), o, nn, a))
    return out


# ---------------------------------------------------------------- census driver

@dataclass
class CensusResult:
    records: list[CensusRecord] = field(default_factory=list)
    invariants: dict[int, list[GraphInvariants]] = field(default_factory=dict)

    def get(self, n: int, h: int, family: str) -> CensusRecord:
        """Record for (n, h, family); h beyond the stored range saturates at the largest stored h."""
        h = min(h, max_h(n))
        for r in self.records:
            if (r.n, r.h, r.family) == (n, h, family):
                return r
        raise KeyError((n, h, family))

    def has(self, n: int, family: str) -> bool:
        return any(r.n == n and r.family == family for r in self.records)


class CensusMismatch(AssertionError):
    pass


def _cumulative(hist: list[int]) -> list[int]:
    out, run = [], 0
    for c in hist:
        run += c
        out.append(run)
    return out


def run_census(cfg: CensusConfig) -> CensusResult:
    if cfg.out is not None:
        cfg.out = Path(cfg.out)
        cfg.out.mkdir(parents=True, exist_ok=True)
    res = CensusResult()
    for n in range(1, cfg.nmax + 1):
        with_genus = n <= cfg.genus_nmax
        classes = class_invariants(n, with_genus, cfg.budget)
        hist = cheap_histograms(n, cfg)
        cr_cum, xs_cum = _cumulative(hist["cr"]), _cumulative(hist["xs"])
        crc_cum, xsc_cum = _cumulative(hist["cr_conn"]), _cumulative(hist["xs_conn"])
        labelled_direct = {}
        for h in range(max_h(n) + 1):
            labelled_direct[(h, "F")] = (cr_cum[h], crc_cum[h])
            labelled_direct[(h, "XS")] = (xs_cum[h], xsc_cum[h])
            labelled_direct[(h, "C")] = (crc_cum[h], crc_cum[h])
        families = list(CHEAP_FAMILIES)
        if with_genus:
            invs = [graph_invariants(n, i, cfg.budget) for i in range(1 << comb(n, 2))]
            res.invariants[n] = invs
            for h in range(max_h(n) + 1):
                for fam in GENUS_FAMILIES:
                    members = [x for x in invs if genus_member(x, fam, h)]
                    labelled_direct[(h, fam)] = (len(members), sum(1 for x in members if x.connected))
            families = list(GENUS_FAMILIES) + families
        for fam in families:
            for h in range(max_h(n) + 1):
                mem = [c for c in classes if genus_member(c, fam, h)]
                orbit_sum = sum(c.orbit for c in mem)
                orbit_conn = sum(c.orbit for c in mem if c.connected)
                lab, lab_conn = labelled_direct[(h, fam)]
                if (lab, lab_conn) != (orbit_sum, orbit_conn):
                    raise CensusMismatch(f"n={n} h={h} {fam}: enumeration {lab}/{lab_conn} "
                                         f"vs orbit sums {orbit_sum}/{orbit_conn}")
                res.records.append(CensusRecord(n, h, fam, lab, len(mem), lab_conn,
                                                sum(1 for c in mem if c.connected)))
    if cfg.out is not None:
        write_census(res, cfg.out)
    return res


def write_census(res: CensusResult, out: Path) -> None:
    out = Path(out)
    with open(out / "census.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in res.records:
            w.writerow([getattr(r, k) for k in CSV_FIELDS])
    for n, invs in sorted(res.invariants.items()):
        with open(out / f"invariants_n{n}.csv", "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(INVARIANT_FIELDS)
            for x in invs:
                w.writerow([x.index, x.m, int(x.connected), x.cycle_rank, x.excess,
                            x.orientable, x.nonorientable, x.any])


def read_census(path) -> CensusResult:
    path = Path(path)
    res = CensusResult()
    with open(path / "census.csv") as fh:
        for row in csv.DictReader(fh):
            res.records.append(CensusRecord(int(row["n"]), int(row["h"]), row["family"],
                                            *(int(row[k]) for k in CSV_FIELDS[3:])))
    for f in sorted(path.glob("invariants_n*.csv")):
        n = int(f.stem.split("_n")[1])
        with open(f) as fh:
            res.invariants[n] = [GraphInvariants(int(r["index"]), int(r["m"]), r["connected"] == "1",
                                                 int(r["cycle_rank"]), int(r["excess"]), int(r["orientable"]),
                                                 int(r["nonorientable"]), int(r["any"]))
                                 for r in csv.DictReader(fh)]
    return res


# ---------------------------------------------------------------- verification registry

@dataclass
class ClaimResult:
    claim: str
    anchor: str
    instance: str
    status: str  # holds | fails | skipped-budget
    witness: str


def _claim(claim, anchor, instance, failures, checked):
    if failures:
        return ClaimResult(claim, anchor, instance, "fails", failures[0])
    return ClaimResult(claim, anchor, instance, "holds", f"{checked} instances checked")


def _ns(res: CensusResult, family: str) -> list[int]:
    return sorted({r.n for r in res.records if r.family == family})


def check_growth(res):
    fails, checked = [], 0
    for fam in GENUS_FAMILIES:
        ns = _ns(res, fam)
        for n in ns:
            if n + 1 not in ns:
                continue
            for h in range(max_h(n + 1) + 1):
                a, b = res.get(n, h, fam).labelled, res.get(n + 1, h, fam).labelled
                checked += 1
                if b < 2 * n * a:
                    fails.append(f"{fam} n={n} h={h}: {b} < {2 * n}*{a}")
    return _claim("growth", "|A^h_{n+1}| >= 2n |A^h_n|", "A in E,OE,NE,OENE; consecutive census n; all stored h",
                  fails, checked)


def check_handle_growth(res):
    fails, checked = [], 0
    for fam in GENUS_FAMILIES:
        for n in _ns(res, fam):
            for h in range(max_h(n) + 1):
                lhs = res.get(n, h + 2, fam).labelled
                rhs = handle_growth_factor(n, h) * res.get(n, h, fam).labelled
                checked += 1
                if lhs < rhs:
                    fails.append(f"{fam} n={n} h={h}: {lhs} < {rhs}")
    return _claim("handle_growth", "|A^{h+2}_n| >= ((C(n,2) - 3(n+h)) / (3(n+h))) |A^h_n|",
                  "A in E,OE,NE,OENE; census n; all stored h", fails, checked)


def check_connected_lower(res):
    fails, checked = [], 0
    for n in _ns(res, "C"):
        for h in range(0, n * n):
            try:
                b = connected_lower(n, h)
            except OutOfRange:
                continue
            val = res.get(n, h, "C").labelled
            checked += 1
            if val < b:
                fails.append(f"n={n} h={h}: {val} < {b}")
    return _claim("connected_lower", "|C^h_n| >= n^(n-2) ((n^2-3n)/(2(n+h)))^h for 0 <= h <= n^2/2 - 5n/2",
                  "connected graphs of cycle rank <= h, census n", fails, checked)


def check_free_sandwich(res):
    fails, checked = [], 0
    for n in _ns(res, "F"):
        for h in range(0, n * n + 1):
            lo, hi = free_sandwich(n, h)
            val = res.get(n, h, "F").labelled
            checked += 1
            if not lo <= val <= hi:
                fails.append(f"n={n} h={h}: {val} outside [{lo}, {hi}]")
    return _claim("free_sandwich", "(n^2/(14(n+h)))^(n+h) <= |F^h_n| <= (8n^2/(n+h))^(n+h) for 0 <= h <= n^2",
                  "graphs of cycle rank <= h, census n", fails, checked)


def check_nonorientable_from_orientable(res):
    fails, checked = [], 0
    for n, invs in sorted(res.invariants.items()):
        for x in invs:
            checked += 1
            if x.nonorientable > x.any + 1:
                fails.append(f"n={n} index={x.index}: nonorientable {x.nonorientable} > any {x.any} + 1")
    return _claim("nonorientable_from_orientable", "E^h_n subset of NE^{h+1}_n",
                  "every labelled graph with genus data", fails, checked)


def check_bridge_addable(res):
    fails, checked = [], 0
    for fam in GENUS_FAMILIES + ("F",):
        for n in _ns(res, fam):
            for h in range(max_h(n) + 1):
                r = res.get(n, h, fam)
                checked += 1
                if 2 * n * r.connected_unlabelled < r.unlabelled:
                    fails.append(f"{fam} n={n} h={h}: {r.connected_unlabelled} < {r.unlabelled}/{2 * n}")
    return _claim("bridge_addable_connected", "unlabelled connected >= unlabelled / (2n) for bridge-addable classes",
                  "E,OE,NE,OENE,F; census n; all stored h", fails, checked)


def check_edge_bound(res):
    fails, checked = [], 0
    for n, invs in sorted(res.invariants.items()):
        if n < 3:
            continue
        for x in invs:
            checked += 1
            if x.m > edge_bound(n, x.any):
                fails.append(f"n={n} index={x.index}: {x.m} edges > 3(n+h-2) with h={x.any}")
    return _claim("edge_bound", "e(G) <= 3(n+h-2) for G in E^h_n, n >= 3",
                  "every labelled graph with genus data, n >= 3", fails, checked)


def check_excess_embeds(res):
    fails, checked = [], 0
    for n, invs in sorted(res.invariants.items()):
        for x in invs:
            checked += 1
            if x.orientable > x.excess or x.nonorientable > x.excess:
                fails.append(f"n={n} index={x.index}: genus ({x.orientable},{x.nonorientable}) > excess {x.excess}")
    return _claim("excess_embeds", "XS^h subset of OE^h and NE^h",
                  "every labelled graph with genus data", fails, checked)


def check_coherence(res):
    fails, checked = [], 0
    for r in res.records:
        checked += 1
        if r.labelled < r.unlabelled or r.labelled > 2 ** comb(r.n, 2):
            fails.append(f"{r}: labelled out of range")
        if r.h > 0 and res.get(r.n, r.h - 1, r.family).labelled > r.labelled:
            fails.append(f"{r}: not monotone in h")
    for n in _ns(res, "E"):
        for h in range(max_h(n) + 1):
            checked += 1
            if res.get(n, h, "F").labelled > res.get(n, h, "E").labelled:
                fails.append(f"n={n} h={h}: F exceeds E")
            if res.get(n, h, "XS").labelled > res.get(n, h, "OENE").labelled:
                fails.append(f"n={n} h={h}: XS exceeds OE and NE")
            if res.get(n, h, "OE").labelled > res.get(n, h + 1, "NE").labelled:
                fails.append(f"n={n} h={h}: OE^h exceeds NE^(h+1)")
    return _claim("coherence", "F^h in A^h, XS^h in OE^h and NE^h, |OE^h| <= |NE^{h+1}|, monotone in h",
                  "all census records", fails, checked)


def check_minext(res):
    fails, checked = [], 0
    for n in (4, 5):
        val = minext(n, 0).value
        checked += 1
        if val != 6 * n - 9:
            fails.append(f"minext({n}) = {val} != {6 * n - 9}")
    for n in range(1, 6):
        val = minext(n, 0).value
        checked += 1
        if val < minext_lower(n):
            fails.append(f"minext({n}) = {val} < 2n")
    checked += 1
    k3 = ext_count(complete_graph(3), 0)
    if k3 != triangulation_ext(3, 0):
        fails.append(f"ext(K3) = {k3} != 8")
    return _claim("minext_planar", "minext(n, sphere) = 6n-9 for n in {4,5}; minext(n) >= 2n; ext(K3) = 8",
                  "n <= 5, h = 0", fails, checked)


REGISTRY = [
    ("growth", check_growth),
    ("handle_growth", check_handle_growth),
    ("connected_lower", check_connected_lower),
    ("free_sandwich", check_free_sandwich),
    ("nonorientable_from_orientable", check_nonorientable_from_orientable),
    ("bridge_addable_connected", check_bridge_addable),
    ("edge_bound", check_edge_bound),
    ("excess_embeds", check_excess_embeds),
    ("coherence", check_coherence),
    ("minext_planar", check_minext),
]


def verify_inequalities(res: CensusResult) -> list[ClaimResult]:
    out = []
    for claim, check in REGISTRY:
        try:
            out.append(check(res))
        except BudgetExceeded as exc:
            out.append(ClaimResult(claim, "", "", "skipped-budget", str(exc)))
    return out


@dataclass(frozen=True)
class ProxyRow:
    n: int
    e: int
    graphs: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.graphs <= self.bound


def unimap_proxy(nmax: int = 5) -> list[ProxyRow]:
    """Connected planar graphs up to isomorphism with n vertices and e edges against
    (unicellular bound) x (dissections of the one face by the e - n + 1 remaining edges).

    Every such graph has at least one planar map, so this is a one-sided proxy
    for the map inequality; it is reported, not part of the registry.
    """
    rows = []
    for n in range(1, nmax + 1):
        by_e: dict[int, int] = {}
        for cls in iso_classes(n):
            G = cls.rep
            if is_connected(G) and is_planar(G):
                by_e[G.m] = by_e.get(G.m, 0) + 1
        for e, count in sorted(by_e.items()):
            j = e - n + 1
            d = 1 if j == 0 else dissection_count(2 * (n - 1), j)
            rows.append(ProxyRow(n, e, count, unicellular_upper(n, 0) * d))
    return rows


def write_report(report: list[ClaimResult], path) -> None:
    Path(path).write_text(json.dumps([asdict(r) for r in report], indent=2) + "\n")
