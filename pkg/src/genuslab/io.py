"""Text formats: edge lists, graph6 strings and scheme files."""
from __future__ import annotations

import re
from pathlib import Path

import networkx as nx

from .embedding import EmbeddingScheme
from .graphs import Graph


def parse_edge_list(text: str, simple: bool = False) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges), simple)


def format_edge_list(G: Graph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(G: Graph, path) -> None:
    Path(path).write_text(format_edge_list(G))


def from_graph6(s: str) -> Graph:
    g = nx.from_graph6_bytes(s.strip().encode())
    nodes = sorted(g.nodes())
    pos = {v: j for j, v in enumerate(nodes, start=1)}
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges())
    return Graph(len(nodes), tuple(edges), simple=True)


def to_graph6(G: Graph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from((u - 1, v - 1) for u, v in G.edges if u != v)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


_SIG = re.compile(r"e(\d+)\s*=\s*[-−]1")


def format_scheme(s: EmbeddingScheme) -> str:
    lines = [f"{v}: " + " ".join(str(d) for d in s.rotation[v - 1]) for v in range(1, s.graph.n + 1)]
    neg = [f"e{i}=-1" for i, x in enumerate(s.signature, start=1) if x == -1]
    lines.append("sig: " + ",".join(neg))
    return "\n".join(lines) + "\n"


def parse_scheme(G: Graph, text: str) -> EmbeddingScheme:
    rot: dict[int, tuple[int, ...]] = {}
    sig = [1] * G.m
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        head, _, rest = ln.partition(":")
        head = head.strip()
        if head == "sig":
            for match in _SIG.finditer(rest):
                sig[int(match.group(1)) - 1] = -1
        else:
            rot[int(head)] = tuple(int(x) for x in rest.split())
    return EmbeddingScheme(G, tuple(rot.get(v, ()) for v in range(1, G.n + 1)), tuple(sig))
