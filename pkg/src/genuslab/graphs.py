"""Labelled pseudographs and cheap structural invariants.

Vertices are 1..n.  Edge i (1-based) owns darts 2i-1 (tail at its first
endpoint) and 2i (tail at its second endpoint).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .config import LIMITS, CeilingExceeded

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()
    simple: bool = False

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise ValueError("negative vertex count")
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 1..{self.n}")
        if self.simple:
            seen = set()
            for u, v in edges:
                if u == v:
                    raise ValueError("loop in a simple graph")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise ValueError("parallel edge in a simple graph")
                seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def dart_tail(self, d: int) -> int:
        u, v = self.edges[(d - 1) // 2]
        return u if d % 2 == 1 else v

    def darts_at(self) -> dict[int, list[int]]:
        """Darts grouped by tail vertex, in increasing dart order."""
        out: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, (u, v) in enumerate(self.edges, start=1):
            out[u].append(2 * i - 1)
            out[v].append(2 * i)
        return out

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edge_set(self) -> frozenset:
        return frozenset((min(u, v), max(u, v)) for u, v in self.edges)

    def to_simple(self) -> "Graph":
        """Drop loops and parallel copies, keeping first occurrences."""
        seen: list[Edge] = []
        keys = set()
        for u, v in self.edges:
            if u == v:
                continue
            k = (min(u, v), max(u, v))
            if k not in keys:
                keys.add(k)
                seen.append(k)
        return Graph(self.n, tuple(seen), simple=True)

    def to_networkx(self):
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g


def twin(d: int) -> int:
    return d + 1 if d % 2 == 1 else d - 1


def edge_of(d: int) -> int:
    """1-based edge index owning dart d."""
    return (d + 1) // 2


@dataclass(frozen=True)
class ComponentPartition:
    kappa: int
    assignment: dict[int, int] = field(default_factory=dict)

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.kappa)]
        for v in sorted(self.assignment):
            out[self.assignment[v] - 1].append(v)
        return out


def components(G: Graph) -> ComponentPartition:
    parent = list(range(G.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    ids: dict[int, int] = {}
    assign = {}
    for v in range(1, G.n + 1):
        r = find(v)
        if r not in ids:
            ids[r] = len(ids) + 1
        assign[v] = ids[r]
    return ComponentPartition(len(ids), assign)


def is_connected(G: Graph) -> bool:
    return components(G).kappa <= 1


def cycle_rank(G: Graph) -> int:
    return G.m - G.n + components(G).kappa


def component_subgraphs(G: Graph) -> list[tuple[Graph, list[int], list[int]]]:
    """Each component as (graph relabelled 1..k, original vertices, original edge indices)."""
    part = components(G)
    groups = part.members()
    edge_groups: list[list[int]] = [[] for _ in groups]
    for i, (u, _) in enumerate(G.edges, start=1):
        edge_groups[part.assignment[u] - 1].append(i)
    out = []
    for verts, eidx in zip(groups, edge_groups):
        pos = {v: j for j, v in enumerate(verts, start=1)}
        sub = Graph(len(verts), tuple((pos[G.edges[i - 1][0]], pos[G.edges[i - 1][1]]) for i in eidx), G.simple)
        out.append((sub, verts, eidx))
    return out


def excess(G: Graph) -> int:
    total = 0
    for sub, _, _ in component_subgraphs(G):
        if sub.m >= sub.n:
            total += sub.m - sub.n
    return total


def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    """Subgraph induced on W, relabelled 1..|W| in increasing order."""
    W = sorted(set(W))
    if not W:
        raise ValueError("W must be nonempty")
    for w in W:
        if not 1 <= w <= G.n:
            raise ValueError(f"vertex {w} out of range")
    pos = {v: j for j, v in enumerate(W, start=1)}
    edges = tuple((pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos)
    return Graph(len(W), edges, G.simple)


def _check_edge(G: Graph, e: int):
    if not 1 <= e <= G.m:
        raise IndexError(f"edge index {e} out of range 1..{G.m}")


def delete_edge(G: Graph, e: int) -> Graph:
    _check_edge(G, e)
    return Graph(G.n, G.edges[: e - 1] + G.edges[e:], G.simple)


def delete_vertex(G: Graph, v: int) -> Graph:
    if not 1 <= v <= G.n:
        raise IndexError(f"vertex {v} out of range")
    keep = [w for w in range(1, G.n + 1) if w != v]
    pos = {w: j for j, w in enumerate(keep, start=1)}
    edges = tuple((pos[a], pos[b]) for a, b in G.edges if a != v and b != v)
    return Graph(G.n - 1, edges, G.simple)


def subdivide_edge(G: Graph, e: int, k: int = 1) -> Graph:
    """Replace edge e by a path through k new vertices n+1..n+k; the path takes e's slot."""
    _check_edge(G, e)
    u, v = G.edges[e - 1]
    new = list(range(G.n + 1, G.n + k + 1))
    chain = [u] + new + [v]
    path = [(chain[j], chain[j + 1]) for j in range(len(chain) - 1)]
    edges = G.edges[: e - 1] + (path[0],) + G.edges[e:] + tuple(path[1:])
    return Graph(G.n + k, edges, G.simple)


def contract_edge(G: Graph, e: int) -> Graph:
    """Merge the endpoints of e into the lower label; simple graphs are simplified afterwards."""
    _check_edge(G, e)
    u, v = G.edges[e - 1]
    if u == v:
        return delete_edge(G, e)
    keep, gone = min(u, v), max(u, v)

    def relabel(x):
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    edges = [(relabel(a), relabel(b)) for i, (a, b) in enumerate(G.edges, start=1) if i != e]
    H = Graph(G.n - 1, tuple(edges), simple=False)
    return H.to_simple() if G.simple else H


def core(G: Graph) -> Graph:
    """Iteratively strip vertices of degree at most one; relabels survivors in order."""
    alive = set(range(1, G.n + 1))
    edges = list(G.edges)
    while True:
        deg = {v: 0 for v in alive}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        drop = {v for v in alive if deg[v] <= 1}
        if not drop:
            break
        alive -= drop
        edges = [(a, b) for a, b in edges if a in alive and b in alive]
    if not alive:
        return Graph(0, (), G.simple)
    return induced_like(G.n, sorted(alive), edges, G.simple)


def induced_like(n: int, verts: Sequence[int], edges: Sequence[Edge], simple: bool) -> Graph:
    pos = {v: j for j, v in enumerate(verts, start=1)}
    return Graph(len(verts), tuple((pos[a], pos[b]) for a, b in edges), simple)


def kernel(G: Graph) -> Graph:
    """Core with degree-2 vertices suppressed; a cycle component becomes a vertex with a loop."""
    H = core(G)
    if H.n == 0:
        return Graph(0, ())
    # edges as mutable list of [a, b] with None for deleted
    edges: list[list[int] | None] = [[a, b] for a, b in H.edges]
    inc: dict[int, list[int]] = {v: [] for v in range(1, H.n + 1)}
    for i, (a, b) in enumerate(H.edges):
        inc[a].append(i)
        inc[b].append(i)
    alive = set(range(1, H.n + 1))
    for v in range(1, H.n + 1):
        if len(inc[v]) != 2:
            continue
        i, j = inc[v]
        if i == j:
            continue  # a lone loop: the cycle has shrunk to one vertex
        ei, ej = edges[i], edges[j]
        x = ei[0] if ei[1] == v else ei[1]
        y = ej[0] if ej[1] == v else ej[1]
        edges[j] = None
        edges[i] = [x, y]
        inc[y] = [i if k == j else k for k in inc[y]]
        alive.discard(v)
        inc[v] = []
    verts = sorted(alive)
    kept = [tuple(e) for e in edges if e is not None]
    return induced_like(H.n, verts, kept, False)


PAIR_CACHE: dict[int, list[Edge]] = {}


def pairs(n: int) -> list[Edge]:
    """Vertex pairs in lexicographic order; bit i of an enumeration index selects pairs(n)[i]."""
    if n not in PAIR_CACHE:
        PAIR_CACHE[n] = list(combinations(range(1, n + 1), 2))
    return PAIR_CACHE[n]


def graph_from_index(n: int, index: int) -> Graph:
    P = pairs(n)
    return Graph(n, tuple(P[i] for i in range(len(P)) if index >> i & 1), simple=True)


def graph_index(G: Graph) -> int:
    P = {p: i for i, p in enumerate(pairs(G.n))}
    return sum(1 << P[p] for p in G.edge_set())


def enumerate_graphs(n: int, filter: Callable[[Graph], bool] | None = None,
                     start: int = 0, stop: int | None = None,
                     ceiling: int | None = None) -> Iterator[Graph]:
    """All simple graphs on [n] in edge-bitmask order, optionally a shard [start, stop)."""
    ceiling = LIMITS.census_ceiling if ceiling is None else ceiling
    if n > ceiling:
        raise CeilingExceeded(f"n={n} exceeds enumeration ceiling {ceiling}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    for idx in range(start, stop):
        G = graph_from_index(n, idx)
        if filter is None or filter(G):
            yield G


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(pairs(n)), simple=True)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),), simple=True)


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)), simple=True)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)), simple=True)


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner), simple=True)


def disjoint_union(*gs: Graph) -> Graph:
    edges: list[Edge] = []
    off = 0
    for g in gs:
        edges.extend((a + off, b + off) for a, b in g.edges)
        off += g.n
    return Graph(off, tuple(edges), all(g.simple for g in gs))


def girth(G: Graph) -> float:
    """Length of a shortest cycle; loops give 1, parallel edges 2, forests inf."""
    best = float("inf")
    seen = set()
    for u, v in G.edges:
        if u == v:
            return 1
        k = (min(u, v), max(u, v))
        if k in seen:
            best = 2
        seen.add(k)
    if best == 2:
        return 2
    adj = G.adjacency()
    from collections import deque

    for s in range(1, G.n + 1):
        dist = {s: 0}
        par = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    q.append(y)
                elif par[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_subcubic(G: Graph) -> bool:
    return all(d <= 3 for d in G.degrees())
