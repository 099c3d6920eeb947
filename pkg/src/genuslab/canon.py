"""Canonical keys for small simple graphs and isomorphism-class lists.

The key is the lexicographically smallest upper-triangle adjacency string
over vertex relabellings.  Relabellings are restricted to those that respect
an isomorphism-invariant colour refinement, which leaves the minimum (and
hence the key) unchanged while shrinking the search.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import NamedTuple

from .config import LIMITS, CeilingExceeded
from .graphs import Graph, graph_from_index, pairs


class CanonicalKey(NamedTuple):
    n: int
    bits: int  # first pair in lexicographic order is the most significant bit


def refine_colours(n: int, adj: list[set[int]]) -> list[int]:
    """Stable 1-WL colouring of vertices 0..n-1 with canonically ordered colour ids."""
    colour = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in range(n)]
        order = sorted(set(sig))
        idx = {s: i for i, s in enumerate(order)}
        new = [idx[s] for s in sig]
        if len(order) == len(set(colour)):
            return new
        colour = new


def _cells(n: int, adj: list[set[int]]) -> list[list[int]]:
    col = refine_colours(n, adj)
    k = max(col) + 1 if n else 0
    cells: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        cells[col[v]].append(v)
    return cells


def _bits_for(n: int, adj: list[set[int]], label: list[int]) -> int:
    """Adjacency integer after relabelling vertex v to label[v] (0-based labels)."""
    width = n * (n - 1) // 2
    out = 0
    for u in range(n):
        lu = label[u]
        for w in adj[u]:
            lw = label[w]
            if lu < lw:
                pos = lu * (2 * n - lu - 1) // 2 + (lw - lu - 1)
                out |= 1 << (width - 1 - pos)
    return out


def _search(G: Graph) -> tuple[int, int]:
    n = G.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in G.edges:
        if u != v:
            adj[u - 1].add(v - 1)
            adj[v - 1].add(u - 1)
    cells = _cells(n, adj)
    offsets = []
    off = 0
    for c in cells:
        offsets.append(off)
        off += len(c)
    best = None
    count = 0
    label = [0] * n
    for choice in product(*(permutations(c) for c in cells)):
        for ci, perm in enumerate(choice):
            base = offsets[ci]
            for j, v in enumerate(perm):
                label[v] = base + j
        b = _bits_for(n, adj, label)
        if best is None or b < best:
            best, count = b, 1
        elif b == best:
            count += 1
    return (best or 0), count


def canonical_form(G: Graph, ceiling: int | None = None) -> CanonicalKey:
    """Key equal for two simple graphs iff they are isomorphic (loops and multiplicity ignored)."""
    ceiling = LIMITS.canonical_ceiling if ceiling is None else ceiling
    if G.n > ceiling:
        raise CeilingExceeded(f"n={G.n} exceeds canonicalization ceiling {ceiling}")
    return CanonicalKey(G.n, _search(G)[0])


def automorphism_count(G: Graph) -> int:
    return _search(G)[1]


def graph_from_key(key: CanonicalKey) -> Graph:
    n = key.n
    P = pairs(n)
    width = len(P)
    return Graph(n, tuple(P[i] for i in range(width) if key.bits >> (width - 1 - i) & 1), simple=True)


class IsoClass(NamedTuple):
    key: CanonicalKey
    rep: Graph
    aut: int

    @property
    def orbit(self) -> int:
        return factorial(self.key.n) // self.aut


@lru_cache(maxsize=None)
def iso_classes(n: int) -> tuple[IsoClass, ...]:
    """All isomorphism classes of simple graphs on n vertices, sorted by key."""
    if n > LIMITS.canonical_ceiling:
        raise CeilingExceeded(f"n={n} exceeds canonicalization ceiling")
    if n <= 1:
        G = Graph(n, (), simple=True)
        return (IsoClass(canonical_form(G), G, 1),)
    keys = set()
    for cls in iso_classes(n - 1):
        base = cls.rep.edges
        for mask in range(1 << (n - 1)):
            extra = tuple((v, n) for v in range(1, n) if mask >> (v - 1) & 1)
            keys.add(canonical_form(Graph(n, base + extra, simple=True)))
    out = []
    for k in sorted(keys):
        G = graph_from_key(k)
        out.append(IsoClass(k, G, automorphism_count(G)))
    return tuple(out)


def key_of_index(n: int, index: int) -> CanonicalKey:
    return canonical_form(graph_from_index(n, index))
