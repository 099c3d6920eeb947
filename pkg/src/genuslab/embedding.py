"""Embedding schemes, face tracing, orientability and scheme surgeries.

A scheme pairs a rotation (cyclic order of darts at every vertex) with a
signature of +1/-1 per edge.  Faces are traced over (dart, side) states:
from (d, s) move to the twin d' of d, set s' = s * sig(edge d), and step to
the successor of d' at its tail when s' = +1 or the predecessor otherwise.
Every face is traced twice (once per direction), so f = orbits / 2.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, components, edge_of, induced_subgraph, twin


@dataclass(frozen=True)
class EmbeddingScheme:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]  # rotation[v-1] is the cyclic order at v
    signature: tuple[int, ...]  # signature[i-1] for edge i

    def __post_init__(self):
        G = self.graph
        rot = tuple(tuple(int(d) for d in r) for r in self.rotation)
        sig = tuple(int(x) for x in self.signature)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "signature", sig)
        if len(rot) != G.n:
            raise ValueError("rotation must list every vertex")
        if len(sig) != G.m:
            raise ValueError("signature must cover every edge")
        if any(x not in (1, -1) for x in sig):
            raise ValueError("signature values must be +1 or -1")
        expected = G.darts_at()
        for v in range(1, G.n + 1):
            if sorted(rot[v - 1]) != expected[v]:
                raise ValueError(f"rotation at {v} must contain exactly the darts with tail {v}")

    @classmethod
    def from_rotation(cls, G: Graph, rotation: Sequence[Sequence[int]], signature=None):
        sig = tuple(signature) if signature is not None else (1,) * G.m
        return cls(G, tuple(tuple(r) for r in rotation), sig)

    @classmethod
    def from_neighbour_rotation(cls, G: Graph, nbr_rot: dict[int, Sequence[int]], signature=None):
        """Build from cyclic neighbour lists on a simple graph, e.g. {1: (2,3,4), ...}."""
        dart_to = {}
        for i, (u, v) in enumerate(G.edges, start=1):
            dart_to[(u, v)] = 2 * i - 1
            dart_to[(v, u)] = 2 * i
        rot = [tuple(dart_to[(v, w)] for w in nbr_rot.get(v, ())) for v in range(1, G.n + 1)]
        return cls.from_rotation(G, rot, signature)

    def neighbour_rotation(self, v: int) -> tuple[int, ...]:
        return tuple(self.graph.dart_tail(twin(d)) for d in self.rotation[v - 1])

    def succ_pred(self) -> tuple[dict[int, int], dict[int, int]]:
        succ, pred = {}, {}
        for r in self.rotation:
            k = len(r)
            for j, d in enumerate(r):
                succ[d] = r[(j + 1) % k]
                pred[d] = r[(j - 1) % k]
        return succ, pred


@dataclass(frozen=True)
class FaceTrace:
    faces: int
    walks: tuple[tuple[int, ...], ...]
    euler_genus: int
    orientable: bool


def _orbits(s: EmbeddingScheme) -> tuple[dict[tuple[int, int], int], list[list[tuple[int, int]]]]:
    succ, pred = s.succ_pred()
    lam = s.signature
    state_orbit: dict[tuple[int, int], int] = {}
    orbits: list[list[tuple[int, int]]] = []
    for d in range(1, 2 * s.graph.m + 1):
        for side in (1, -1):
            if (d, side) in state_orbit:
                continue
            oid = len(orbits)
            walk = []
            st = (d, side)
            while st not in state_orbit:
                state_orbit[st] = oid
                walk.append(st)
                dd, ss = st
                t = twin(dd)
                ss = ss * lam[edge_of(dd) - 1]
                st = (succ[t] if ss == 1 else pred[t], ss)
            orbits.append(walk)
    return state_orbit, orbits


def reverse_state(s: EmbeddingScheme, st: tuple[int, int]) -> tuple[int, int]:
    d, side = st
    return twin(d), -side * s.signature[edge_of(d) - 1]


def face_labels(s: EmbeddingScheme) -> tuple[dict[tuple[int, int], int], list[list[tuple[int, int]]]]:
    """Face id for every state, and one representative orbit per face."""
    state_orbit, orbits = _orbits(s)
    face_of_orbit: dict[int, int] = {}
    reps = []
    for oid, walk in enumerate(orbits):
        if oid in face_of_orbit:
            continue
        partner = state_orbit[reverse_state(s, walk[0])]
        fid = len(reps)
        face_of_orbit[oid] = fid
        face_of_orbit[partner] = fid
        reps.append(walk)
    return {st: face_of_orbit[o] for st, o in state_orbit.items()}, reps


def face_trace(s: EmbeddingScheme) -> FaceTrace:
    G = s.graph
    _, reps = face_labels(s)
    part = components(G)
    kappa = part.kappa
    isolated = sum(1 for d in G.degrees() if d == 0)
    per_component = len(reps) + isolated
    f = per_component - (kappa - 1) if kappa else 1
    h = G.m - G.n - f + kappa + 1
    walks = tuple(tuple(d for d, _ in w) for w in reps)
    return FaceTrace(f, walks, h, is_orientable(s))


def _spanning_forest(G: Graph) -> tuple[list[int], dict[int, int], set[int]]:
    """BFS forest from the lowest vertex of each component: (order, parent edge per vertex, forest edge ids)."""
    inc: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, G.n + 1)}
    for i, (u, v) in enumerate(G.edges, start=1):
        if u != v:
            inc[u].append((i, v))
            inc[v].append((i, u))
    seen = set()
    order = []
    parent_edge: dict[int, int] = {}
    forest = set()
    for r in range(1, G.n + 1):
        if r in seen:
            continue
        seen.add(r)
        q = deque([r])
        while q:
            x = q.popleft()
            order.append(x)
            for i, y in inc[x]:
                if y not in seen:
                    seen.add(y)
                    parent_edge[y] = i
                    forest.add(i)
                    q.append(y)
    return order, parent_edge, forest


def spanning_forest_edges(G: Graph) -> set[int]:
    return _spanning_forest(G)[2]


def gauge_normalize(s: EmbeddingScheme) -> EmbeddingScheme:
    """Equivalent scheme in which every spanning-forest edge has signature +1."""
    G = s.graph
    order, parent_edge, _ = _spanning_forest(G)
    flip = {v: 1 for v in range(1, G.n + 1)}
    for v in order:
        if v in parent_edge:
            i = parent_edge[v]
            a, b = G.edges[i - 1]
            u = a if b == v else b
            flip[v] = flip[u] * s.signature[i - 1]
    rot = []
    for v in range(1, G.n + 1):
        r = s.rotation[v - 1]
        rot.append(r if flip[v] == 1 or not r else (r[0],) + tuple(reversed(r[1:])))
    sig = tuple(s.signature[i - 1] * flip[u] * flip[v] for i, (u, v) in enumerate(G.edges, start=1))
    return EmbeddingScheme(G, tuple(rot), sig)


def is_orientable(s: EmbeddingScheme) -> bool:
    return all(x == 1 for x in gauge_normalize(s).signature)


def induced_scheme(s: EmbeddingScheme, W: Iterable[int]) -> EmbeddingScheme:
    """Restriction to the subgraph induced on W, vertices relabelled in increasing order."""
    W = sorted(set(W))
    G = s.graph
    H = induced_subgraph(G, W)
    keep = set(W)
    new_index = {}
    for i, (u, v) in enumerate(G.edges, start=1):
        if u in keep and v in keep:
            new_index[i] = len(new_index) + 1

    def map_dart(d):
        j = new_index.get(edge_of(d))
        if j is None:
            return None
        return 2 * j - 1 if d % 2 == 1 else 2 * j

    rot = []
    for v in W:
        rot.append(tuple(x for x in (map_dart(d) for d in s.rotation[v - 1]) if x is not None))
    sig = tuple(s.signature[i - 1] for i in sorted(new_index))
    return EmbeddingScheme(H, tuple(rot), sig)


def delete_scheme_edge(s: EmbeddingScheme, e: int) -> EmbeddingScheme:
    """Remove edge e; later edges shift down by one and their darts by two."""
    G = s.graph
    edges = G.edges[: e - 1] + G.edges[e:]

    def remap(d):
        return d - 2 if edge_of(d) > e else d

    rot = tuple(tuple(remap(d) for d in r if edge_of(d) != e) for r in s.rotation)
    sig = s.signature[: e - 1] + s.signature[e:]
    return EmbeddingScheme(Graph(G.n, edges, G.simple), rot, sig)


def chordify_to_unicellular(s: EmbeddingScheme) -> tuple[EmbeddingScheme, list[int]]:
    """Delete lowest-indexed edges separating two distinct faces until one face remains.

    Returns the unicellular scheme and the deleted edges as indices of the input graph.
    """
    if components(s.graph).kappa > 1:
        raise ValueError("chordify needs a connected graph")
    cur = s
    alive = list(range(1, s.graph.m + 1))  # alive[j] = original index of current edge j+1
    removed = []
    while True:
        labels, reps = face_labels(cur)
        if len(reps) <= 1:
            return cur, removed
        for i in range(1, cur.graph.m + 1):
            d = 2 * i - 1
            if labels[(d, 1)] != labels[(d, -1)]:
                removed.append(alive.pop(i - 1))
                cur = delete_scheme_edge(cur, i)
                break
        else:  # pragma: no cover - a multi-face cellular map always has such an edge
            raise RuntimeError("no separating edge found")


@dataclass(frozen=True)
class PrecubicResult:
    scheme: EmbeddingScheme
    root: int  # the added leaf vertex


def split_to_precubic(s: EmbeddingScheme) -> PrecubicResult:
    """Split high-degree vertices into degree-3 pieces, then attach a rooting leaf.

    At each split of v with rotation (d1, d2, d3, ..., dk) a new vertex w gets
    (d1, d2, x') and v keeps (x, d3, ..., dk), where x x' is a new +1 edge.
    The gadget subdivides edge 1 with a vertex u and hangs the leaf from u.
    """
    G = s.graph
    degs = G.degrees()
    if G.m == 0 or any(d in (0, 2) for d in degs):
        raise ValueError("split_to_precubic needs a graph with edges and no vertices of degree 0 or 2")
    if face_trace(s).faces != 1:
        raise ValueError("split_to_precubic needs a unicellular scheme")
    ends = [list(e) for e in G.edges]
    rot = [list(r) for r in s.rotation]
    sig = list(s.signature)

    def set_tail(d, w):
        ends[edge_of(d) - 1][0 if d % 2 == 1 else 1] = w

    v = 1
    while v <= len(rot):
        while len(rot[v - 1]) > 3:
            r = rot[v - 1]
            w = len(rot) + 1
            i = len(ends) + 1
            x, xp = 2 * i - 1, 2 * i
            ends.append([v, w])
            sig.append(1)
            d1, d2 = r[0], r[1]
            set_tail(d1, w)
            set_tail(d2, w)
            rot.append([d1, d2, xp])
            rot[v - 1] = [x] + r[2:]
        v += 1
    # rooting gadget on edge 1
    n = len(rot)
    u, leaf = n + 1, n + 2
    m = len(ends)
    a, b = ends[0]
    ends[0] = [a, u]
    ends.append([u, b])  # edge m+1, darts 2m+1 at u and 2m+2 at b
    ends.append([u, leaf])  # edge m+2, darts 2m+3 at u and 2m+4 at leaf
    sig += [1, 1]
    rot[b - 1] = [2 * m + 2 if d == 2 else d for d in rot[b - 1]]
    rot.append([2, 2 * m + 3, 2 * m + 1])
    rot.append([2 * m + 4])
    H = Graph(len(rot), tuple(tuple(e) for e in ends))
    return PrecubicResult(EmbeddingScheme(H, tuple(tuple(r) for r in rot), tuple(sig)), leaf)
