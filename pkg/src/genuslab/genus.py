"""Exhaustive minimum and maximum Euler genus search over embedding schemes.

Search runs per connected component.  Rotations range over the product of
cyclic orders at each vertex (first dart fixed); signatures range over gauge
classes, i.e. spanning-forest edges pinned to +1 and the remaining
cycle-rank many edges free.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, inf
from typing import Iterator

import networkx as nx

from .config import BudgetExceeded, resolve_budget
from .embedding import EmbeddingScheme, spanning_forest_edges
from .graphs import Graph, component_subgraphs, cycle_rank, girth

MODES = ("orientable", "nonorientable", "any")


def is_planar(G: Graph) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from((u, v) for u, v in G.edges if u != v)
    return nx.check_planarity(g)[0]


def _rotation_choices(G: Graph) -> list[list[tuple[int, ...]]]:
    out = []
    for v, ds in G.darts_at().items():
        if len(ds) <= 2:
            out.append([tuple(ds)])
        else:
            out.append([(ds[0],) + p for p in permutations(ds[1:])])
    return out


def rotation_count(G: Graph) -> int:
    total = 1
    for d in G.degrees():
        total *= factorial(max(d - 1, 0))
    return total


def estimate_states(G: Graph, signed: bool) -> int:
    est = rotation_count(G) * 4 * max(G.m, 1)
    if signed:
        est <<= cycle_rank(G)
    return est


def iter_rotation_systems(G: Graph) -> Iterator[tuple[tuple[int, ...], ...]]:
    yield from product(*_rotation_choices(G))


def iter_gauge_signatures(G: Graph, include_trivial: bool = True) -> Iterator[tuple[int, ...]]:
    forest = spanning_forest_edges(G)
    free = [i for i in range(1, G.m + 1) if i not in forest]
    for mask in range(0 if include_trivial else 1, 1 << len(free)):
        sig = [1] * G.m
        for j, i in enumerate(free):
            if mask >> j & 1:
                sig[i - 1] = -1
        yield tuple(sig)


def iter_schemes(G: Graph, signed: bool = True) -> Iterator[EmbeddingScheme]:
    """Every rotation system paired with every gauge-class signature (or only +1)."""
    sigs = list(iter_gauge_signatures(G)) if signed else [(1,) * G.m]
    for rot in iter_rotation_systems(G):
        for sig in sigs:
            yield EmbeddingScheme(G, rot, sig)


class _Component:
    """Flat 0-based dart arrays for fast face counting on one connected graph."""

    def __init__(self, G: Graph):
        self.G = G
        self.e = G.m
        self.v = G.n
        self.choices = [[tuple(d - 1 for d in r) for r in opts] for opts in _rotation_choices(G)]
        forest = spanning_forest_edges(G)
        self.free = [i - 1 for i in range(1, G.m + 1) if i not in forest]
        g = girth(G)
        self.f_cap = (2 * self.e) // g if g != inf else 1

    def _succ_pred(self, rot):
        n2 = 2 * self.e
        succ = [0] * n2
        pred = [0] * n2
        for r in rot:
            k = len(r)
            for j in range(k):
                succ[r[j]] = r[(j + 1) % k]
                pred[r[j]] = r[j - 1]
        return succ, pred

    def faces_plain(self, succ) -> int:
        n2 = 2 * self.e
        seen = bytearray(n2)
        f = 0
        for s in range(n2):
            if seen[s]:
                continue
            f += 1
            k = s
            while not seen[k]:
                seen[k] = 1
                k = succ[k ^ 1]
        return f

    def faces_signed(self, succ, pred, neg: bytearray) -> int:
        n4 = 4 * self.e
        seen = bytearray(n4)
        orbits = 0
        for start in range(n4):
            if seen[start]:
                continue
            orbits += 1
            st = start
            while not seen[st]:
                seen[st] = 1
                k = st >> 1
                side = st & 1
                k2 = k ^ 1
                if neg[k >> 1]:
                    side ^= 1
                st = ((pred[k2] if side else succ[k2]) << 1) | side
        return orbits // 2

    def masks(self, include_zero: bool):
        for mask in range(0 if include_zero else 1, 1 << len(self.free)):
            neg = bytearray(self.e)
            for j, i in enumerate(self.free):
                if mask >> j & 1:
                    neg[i] = 1
            yield neg

    def genus(self, f: int) -> int:
        return self.e - self.v - f + 2

    def best_faces(self, kind: str, stop: int | None = None) -> int | None:
        """Largest (kind='orientable'/'strict') or smallest (kind='max'/'orientable_max') face count.

        Stops early once the running best reaches ``stop``.  Returns None when
        the kind admits no scheme (a tree has no non-orientable scheme).
        """
        if self.e == 0:
            return 1 if kind != "strict" else None
        if kind == "strict" and not self.free:
            return None
        best = None
        masks = None
        if kind == "strict":
            masks = list(self.masks(False))
        elif kind == "max":
            masks = list(self.masks(True))
        for rot in product(*self.choices):
            succ, pred = self._succ_pred(rot)
            if kind == "orientable_max":
                f = self.faces_plain(succ)
                if best is None or f < best:
                    best = f
                    if stop is not None and best <= stop:
                        return best
                continue
            if kind == "orientable":
                f = self.faces_plain(succ)
                if best is None or f > best:
                    best = f
                    if stop is not None and best >= stop:
                        return best
                continue
            for neg in masks:
                f = self.faces_signed(succ, pred, neg)
                if kind == "max":
                    if best is None or f < best:
                        best = f
                        if stop is not None and best <= stop:
                            return best
                elif best is None or f > best:
                    best = f
                    if stop is not None and best >= stop:
                        return best
        return best


def _check_budget(G: Graph, signed: bool, budget: int | None):
    b = resolve_budget(budget)
    est = estimate_states(G, signed)
    if est > b:
        raise BudgetExceeded(est, b, "genus search")


def _component_orientable(C: Graph, budget, use_planarity: bool, target: int | None = None) -> int:
    """Minimum orientable Euler genus of a connected graph (or some value <= target if reached)."""
    if C.m == 0:
        return 0
    if use_planarity and is_planar(C):
        return 0
    _check_budget(C, False, budget)
    comp = _Component(C)
    cap = comp.f_cap
    if (cap - (C.m - C.n)) % 2:  # orientable face counts share parity with e - v
        cap -= 1
    stop = cap
    if target is not None:
        stop = min(stop, C.m - C.n + 2 - target)
    return comp.genus(comp.best_faces("orientable", stop))


def _component_strict_nonorientable(C: Graph, budget, target: int | None = None) -> float:
    """Minimum Euler genus over non-orientable schemes of a connected graph; inf for trees."""
    if cycle_rank(C) == 0:
        return inf
    _check_budget(C, True, budget)
    comp = _Component(C)
    stop = min(comp.f_cap, C.m - C.n + 1)
    if target is not None:
        stop = min(stop, C.m - C.n + 2 - target)
    return comp.genus(comp.best_faces("strict", stop))


def _component_max(C: Graph, budget) -> int:
    if C.m == 0:
        return 0
    _check_budget(C, True, budget)
    comp = _Component(C)
    return comp.genus(comp.best_faces("max", 1))


@dataclass(frozen=True)
class GenusProfile:
    orientable: int
    nonorientable: int
    any: int


def _combine_nonorientable(orient: list[int], strict: list[float]) -> int:
    """Min genus over embeddings counted as non-orientable (sphere convention applied by caller)."""
    total_any = sum(min(a, s) for a, s in zip(orient, strict))
    best = inf
    for c in range(len(orient)):
        val = total_any - min(orient[c], strict[c]) + strict[c]
        best = min(best, val)
    return int(best)


def genus_profile(G: Graph, budget: int | None = None, use_planarity: bool = True) -> GenusProfile:
    if use_planarity and is_planar(G):
        return GenusProfile(0, 0, 0)
    orient, strict = [], []
    for C, _, _ in component_subgraphs(G):
        orient.append(_component_orientable(C, budget, use_planarity))
        strict.append(_component_strict_nonorientable(C, budget))
    o = sum(orient)
    a = sum(min(x, y) for x, y in zip(orient, strict))
    nn = 0 if o == 0 else _combine_nonorientable(orient, strict)
    return GenusProfile(o, nn, a)


def min_euler_genus(G: Graph, mode: str = "any", budget: int | None = None,
                    use_planarity: bool = True) -> int:
    """Minimum Euler genus over schemes of the requested kind.

    mode='nonorientable' treats the sphere as non-orientable (planar graphs give 0).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "orientable":
        return sum(_component_orientable(C, budget, use_planarity) for C, _, _ in component_subgraphs(G))
    return getattr(genus_profile(G, budget, use_planarity), mode)


def _component_orientable_max(C: Graph, budget) -> int:
    if C.m == 0:
        return 0
    _check_budget(C, False, budget)
    comp = _Component(C)
    floor_f = 2 if (C.m - C.n) % 2 == 0 else 1
    return comp.genus(comp.best_faces("orientable_max", floor_f))


def max_orientable_euler_genus(G: Graph, budget: int | None = None) -> int:
    """Largest Euler genus over orientable (all +1) schemes, by search."""
    return sum(_component_orientable_max(C, budget) for C, _, _ in component_subgraphs(G))


def max_euler_genus(G: Graph, method: str = "formula", budget: int | None = None) -> int:
    if method == "formula":
        return cycle_rank(G)
    if method != "search":
        raise ValueError("method must be 'formula' or 'search'")
    return sum(_component_max(C, budget) for C, _, _ in component_subgraphs(G))


def genus_at_most(G: Graph, mode: str, t: int, budget: int | None = None) -> bool:
    """Decide min_euler_genus(G, mode) <= t, exiting the search as soon as it is settled."""
    if t < 0:
        return False
    if t >= cycle_rank(G):
        return True
    if is_planar(G):
        return True
    if t == 0:
        return False
    if mode == "orientable" and t < 2:  # orientable Euler genus is even
        return False
    comps = [C for C, _, _ in component_subgraphs(G)]
    if len(comps) == 1:
        C = comps[0]
        if mode == "orientable":
            return _component_orientable(C, budget, True, target=t) <= t
        if mode == "nonorientable":
            return _component_strict_nonorientable(C, budget, target=t) <= t
        if t >= 2 and _component_orientable(C, budget, True, target=t) <= t:
            return True
        return _component_strict_nonorientable(C, budget, target=t) <= t
    return min_euler_genus(G, mode, budget) <= t


def max_faces_rotation(G: Graph, stop: int | None = None, budget: int | None = None) -> int:
    """Largest merged face count over all-+1 rotation systems."""
    total = 0
    comps = component_subgraphs(G)
    for C, _, _ in comps:
        if C.m == 0:
            total += 1
            continue
        _check_budget(C, False, budget)
        total += _Component(C).best_faces("orientable", None if stop is None else stop + len(comps) - 1)
    return total - (len(comps) - 1)
