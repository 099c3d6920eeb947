"""Minor enumeration for small simple graphs, memoized on canonical keys."""
from __future__ import annotations

from functools import lru_cache

from .canon import CanonicalKey, canonical_form, graph_from_key
from .config import LIMITS, CeilingExceeded
from .graphs import Graph, contract_edge, delete_edge, delete_vertex


@lru_cache(maxsize=None)
def _minors_of_key(key: CanonicalKey) -> frozenset:
    G = graph_from_key(key)
    out = {key}
    children = set()
    for e in range(1, G.m + 1):
        children.add(canonical_form(delete_edge(G, e)))
        children.add(canonical_form(contract_edge(G, e)))
    if G.n > 1:
        for v in range(1, G.n + 1):
            children.add(canonical_form(delete_vertex(G, v)))
    for c in children:
        out |= _minors_of_key(c)
    return frozenset(out)


def enumerate_minors(G: Graph, ceiling: int | None = None) -> frozenset:
    """Canonical keys of all minors of the simplification of G (the empty graph excluded)."""
    ceiling = LIMITS.minor_ceiling if ceiling is None else ceiling
    if G.n > ceiling:
        raise CeilingExceeded(f"n={G.n} exceeds minor ceiling {ceiling}")
    if G.n == 0:
        return frozenset()
    return _minors_of_key(canonical_form(G.to_simple()))
