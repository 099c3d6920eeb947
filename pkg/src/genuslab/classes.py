"""Genus functions, class membership predicates, extension counts and generators."""
from __future__ import annotations

import ast
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Sequence

from mpmath import iv, mp

from .canon import CanonicalKey, canonical_form, graph_from_key, iso_classes
from .config import BudgetExceeded, CeilingExceeded, LIMITS, resolve_budget
from .embedding import EmbeddingScheme, face_labels, face_trace, induced_scheme
from .genus import genus_at_most, is_planar, iter_rotation_systems, rotation_count
from .graphs import (Graph, complete_graph, cycle_rank, enumerate_graphs, excess, induced_subgraph,
                     is_connected, is_subcubic)
from .minors import enumerate_minors

# ---------------------------------------------------------------- genus functions

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


class GenusFunctionError(ValueError):
    pass


def _evaluate(node, n, backend):
    if isinstance(node, ast.Expression):
        return _evaluate(node.body, n, backend)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return backend["const"](Fraction(str(node.value)))
    if isinstance(node, ast.Name) and node.id == "n":
        return backend["const"](Fraction(n))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _evaluate(node.operand, n, backend)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        a = _evaluate(node.left, n, backend)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise GenusFunctionError("exponents must be integer literals")
            return a ** node.right.value
        b = _evaluate(node.right, n, backend)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if b == 0:
            raise GenusFunctionError(f"division by zero at n={n}")
        return a / b
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "ln" \
            and len(node.args) == 1:
        if "ln" not in backend:
            raise GenusFunctionError("ln needs interval evaluation")
        return backend["ln"](_evaluate(node.args[0], n, backend))
    raise GenusFunctionError(f"unsupported expression element: {ast.dump(node)}")


def _iv_const(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _iv_ln(x):
    if x.a <= 0:
        raise GenusFunctionError("ln of a non-positive value")
    return iv.log(x)


_EXACT = {"const": lambda q: q}
_INTERVAL = {"const": _iv_const, "ln": _iv_ln}


@dataclass(frozen=True)
class GenusFunction:
    """n -> g(n) from the text grammar: const / table / floor EXPR / ceil EXPR, plus 'with n=v,...' overrides."""

    text: str
    kind: str = field(init=False)
    payload: object = field(init=False)
    overrides: tuple = field(init=False)

    def __post_init__(self):
        body, _, extra = self.text.partition(" with ")
        body = body.strip()
        over = {}
        if extra.strip():
            for item in extra.split(","):
                k, _, v = item.partition("=")
                over[int(k)] = int(v)
        head, _, rest = body.partition(" ")
        rest = rest.strip()
        if head == "const":
            kind, payload = "const", int(rest)
        elif head == "table":
            vals = tuple(int(x) for x in rest.split(",") if x.strip())
            if not vals:
                raise GenusFunctionError("empty table")
            kind, payload = "table", vals
        elif head in ("floor", "ceil"):
            expr = re.sub(r"\bln\s*\(?\s*n\s*\)?", "ln(n)", rest)
            tree = ast.parse(expr, mode="eval")
            uses_ln = any(isinstance(x, ast.Name) and x.id == "ln" for x in ast.walk(tree))
            kind, payload = head, (tree, uses_ln)
        else:
            raise GenusFunctionError(f"unknown genus function form: {self.text!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "overrides", tuple(sorted(over.items())))
        for _, v in over.items():
            if v < 0:
                raise GenusFunctionError("genus values must be nonnegative")

    @classmethod
    def table(cls, values: Sequence[int]) -> "GenusFunction":
        return cls("table " + ",".join(str(int(v)) for v in values))

    @classmethod
    def const(cls, h: int) -> "GenusFunction":
        return cls(f"const {int(h)}")

    def __call__(self, n: int) -> int:
        if n < 1:
            raise GenusFunctionError("genus functions are defined for n >= 1")
        for k, v in self.overrides:
            if k == n:
                return v
        if self.kind == "const":
            val = self.payload
        elif self.kind == "table":
            vals = self.payload
            val = vals[min(n, len(vals)) - 1]
        else:
            tree, uses_ln = self.payload
            if uses_ln:
                val = self._interval_round(tree, n)
            else:
                q = _evaluate(tree, n, _EXACT)
                val = math.floor(q) if self.kind == "floor" else math.ceil(q)
        if val < 0:
            raise GenusFunctionError(f"negative value {val} at n={n}")
        return int(val)

    def _interval_round(self, tree, n: int) -> int:
        with mp.workprec(200):
            x = _evaluate(tree, n, _INTERVAL)
            lo, hi = x.a, x.b
            if self.kind == "floor":
                a, b = int(mp.floor(lo)), int(mp.floor(hi))
            else:
                a, b = int(mp.ceil(lo)), int(mp.ceil(hi))
        if a != b:
            raise GenusFunctionError(f"value at n={n} straddles an integer; add a table override")
        return a


def as_genus_function(g) -> GenusFunction:
    if isinstance(g, GenusFunction):
        return g
    if isinstance(g, str):
        return GenusFunction(g)
    if isinstance(g, int):
        return GenusFunction.const(g)
    return GenusFunction.table(list(g))


# ---------------------------------------------------------------- classes

FAMILIES = ("E", "OE", "NE", "OENE", "F", "XS")
CLOSURES = ("plain", "Hered", "cHered", "Minor", "tMinor")
HERED_CEILING = 16  # cycle rank / excess families
HERED_GENUS_CEILING = 10


@dataclass(frozen=True)
class ClassSpec:
    family: str
    closure: str = "plain"
    g: GenusFunction = field(default_factory=lambda: GenusFunction.const(0))

    def __post_init__(self):
        fam = self.family.replace("∩", "").replace("&", "")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "g", as_genus_function(self.g))
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.closure not in CLOSURES:
            raise ValueError(f"unknown closure {self.closure!r}")
        if self.closure == "cHered" and fam != "OE":
            raise ValueError("cHered is defined only for the orientable family OE")


def family_invariant_at_most(G: Graph, family: str, t: int, budget=None) -> bool:
    """invariant(G) <= t for the family's invariant."""
    if family == "F":
        return cycle_rank(G) <= t
    if family == "XS":
        return excess(G) <= t
    if family == "E":
        return genus_at_most(G, "any", t, budget)
    if family == "OE":
        return genus_at_most(G, "orientable", t, budget)
    if family == "NE":
        return genus_at_most(G, "nonorientable", t, budget)
    if family == "OENE":
        return genus_at_most(G, "orientable", t, budget) and genus_at_most(G, "nonorientable", t, budget)
    raise ValueError(family)


def plain_member(G: Graph, family: str, g: GenusFunction, budget=None) -> bool:
    if G.n == 0:
        return True
    return family_invariant_at_most(G, family, g(G.n), budget)


def _hered(G: Graph, family: str, g: GenusFunction, budget) -> bool:
    cheap = family in ("F", "XS")
    limit = HERED_CEILING if cheap else HERED_GENUS_CEILING
    if G.n > limit:
        raise CeilingExceeded(f"Hered exhaustion for {family} limited to {limit} vertices")
    cache: dict = {}
    for k in range(G.n, 0, -1):
        t = g(k)
        for W in combinations(range(1, G.n + 1), k):
            H = induced_subgraph(G, W)
            if cycle_rank(H) <= t:  # every family invariant is at most the cycle rank
                continue
            if cheap or H.n > LIMITS.canonical_ceiling:
                ok = family_invariant_at_most(H, family, t, budget)
            else:
                key = (canonical_form(H), t)
                if key not in cache:
                    cache[key] = family_invariant_at_most(H, family, t, budget)
                ok = cache[key]
            if not ok:
                return False
    return True


def _induced_genus_cache():
    cache: dict = {}

    def genus_of(s: EmbeddingScheme, W) -> int:
        sub = induced_scheme(s, W)
        key = (sub.graph.edges, sub.rotation)
        if key not in cache:
            cache[key] = face_trace(sub).euler_genus
        return cache[key]

    return genus_of


def certifying_rotation(G: Graph, g: GenusFunction, budget=None):
    """First rotation system whose induced embeddings all meet g, or None."""
    if G.n > 10:
        raise CeilingExceeded("cHered search limited to 10 vertices")
    est = rotation_count(G) * (1 << G.n) * 4 * max(G.m, 1)
    b = resolve_budget(budget)
    if est > b:
        raise BudgetExceeded(est, b, "cHered search")
    subsets = []
    for k in range(1, G.n + 1):
        for W in combinations(range(1, G.n + 1), k):
            if cycle_rank(induced_subgraph(G, W)) > g(k):
                subsets.append((W, g(k)))
    subsets.sort(key=lambda x: (-len(x[0]), x[0]))
    genus_of = _induced_genus_cache()
    sig = (1,) * G.m
    for rot in iter_rotation_systems(G):
        s = EmbeddingScheme(G, rot, sig)
        if all(genus_of(s, W) <= t for W, t in subsets):
            return s
    return None


def _minor_member(G: Graph, family: str, g: GenusFunction, budget) -> bool:
    for key in enumerate_minors(G):
        if not _plain_key(key, family, g, budget):
            return False
    return True


@lru_cache(maxsize=None)
def _plain_key_cached(key: CanonicalKey, family: str, t: int) -> bool:
    return family_invariant_at_most(graph_from_key(key), family, t)


def _plain_key(key: CanonicalKey, family: str, g: GenusFunction, budget) -> bool:
    if key.n == 0:
        return True
    if budget is None:
        return _plain_key_cached(key, family, g(key.n))
    return family_invariant_at_most(graph_from_key(key), family, g(key.n), budget)


def max_suppressions(G: Graph) -> int:
    """Most degree-2 vertices that can be suppressed one by one while the graph stays simple.

    Works per maximal thread of degree-2 vertices.  Threads sharing both
    ends keep one internal vertex each except one that may collapse to a
    direct edge (if no such edge exists); a thread closing on one end keeps
    two; a cycle component keeps three.
    """
    adj = G.adjacency()
    deg = {v: len(adj[v]) for v in adj}
    seen = set()
    total = 0
    groups: dict[tuple[int, int], list[int]] = {}
    for v in adj:
        if deg[v] != 2 or v in seen:
            continue
        # walk the thread through v
        thread = [v]
        seen.add(v)
        ends = []
        for start in adj[v]:
            prev, cur = v, start
            while deg[cur] == 2 and cur not in seen:
                seen.add(cur)
                thread.append(cur)
                nxt = [w for w in adj[cur] if w != prev][0]
                prev, cur = cur, nxt
            ends.append(cur)
        if all(deg[x] == 2 for x in ends):  # a cycle component
            total += len(thread) - 3
            continue
        a, b = sorted(ends)
        groups.setdefault((a, b), []).append(len(thread))
    edge_set = G.edge_set()
    for (a, b), lengths in groups.items():
        if a == b:
            total += sum(L - 2 for L in lengths)
            continue
        direct = (a, b) in edge_set
        cost = [L - 1 for L in lengths]
        total += sum(cost) + (0 if direct else 1)
    return total


def topological_minor_member(G: Graph, test: Callable[[Graph, int], bool], ceiling_edges: int = 18) -> bool:
    """test(H, k) must hold for every topological minor, as (edge subgraph, achievable vertex count k)."""
    if G.m > ceiling_edges:
        raise BudgetExceeded(1 << G.m, 1 << ceiling_edges, "topological minor enumeration")
    n = G.n
    edges = G.edges
    for mask in range(1, 1 << G.m):
        chosen = [edges[i] for i in range(G.m) if mask >> i & 1]
        verts = sorted({x for e in chosen for x in e})
        H = Graph(len(verts), tuple((verts.index(a) + 1, verts.index(b) + 1) for a, b in chosen), True)
        lo = H.n - max_suppressions(H)
        for k in range(lo, n + 1):
            if not test(H, k):
                return False
    return True


def _tminor_member(G: Graph, family: str, g: GenusFunction, budget) -> bool:
    memo: dict = {}

    def test(H: Graph, k: int) -> bool:
        t = g(k)
        if cycle_rank(H) <= t:
            return True
        key = (canonical_form(H) if H.n <= LIMITS.canonical_ceiling else H.edges, t)
        if key not in memo:
            memo[key] = family_invariant_at_most(H, family, t, budget)
        return memo[key]

    return topological_minor_member(G, test)


def member(G: Graph, c: ClassSpec, budget=None) -> bool:
    if c.closure == "plain":
        return plain_member(G, c.family, c.g, budget)
    if c.closure == "Hered":
        return _hered(G, c.family, c.g, budget)
    if c.closure == "cHered":
        return certifying_rotation(G, c.g, budget) is not None
    if c.closure == "Minor":
        return _minor_member(G.to_simple(), c.family, c.g, budget)
    return _tminor_member(G.to_simple(), c.family, c.g, budget)


# ---------------------------------------------------------------- K5 computation

def _nbr_rotations(center: int, others: Sequence[int]) -> list[tuple[int, ...]]:
    first, rest = others[0], others[1:]
    return [(first,) + p for p in permutations(rest)]


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    k = len(a)
    return any(tuple(a[(i + j) % k] for j in range(k)) == tuple(b) for i in range(k))


def _induced_order(rot: Sequence[int], keep: set) -> tuple[int, ...]:
    return tuple(x for x in rot if x in keep)


def face_vertex_walks(s: EmbeddingScheme) -> list[tuple[int, ...]]:
    G = s.graph
    _, reps = face_labels(s)
    return [tuple(G.dart_tail(d) for d, _ in walk) for walk in reps]


def has_facial_walk(s: EmbeddingScheme, cycle: Sequence[int]) -> bool:
    rev = tuple(reversed(cycle))
    return any(_cyclic_equal(w, cycle) or _cyclic_equal(w, rev) for w in face_vertex_walks(s))


@dataclass
class K5Report:
    examined: int
    certifying: int
    four_planar: int  # systems whose drop-2..drop-5 embeddings are all planar
    forced: dict[int, tuple[int, ...]]
    forced_table: dict[tuple[int, int], tuple[int, ...]]
    forced_has_walk_2543: bool

    @property
    def message(self) -> str:
        if self.certifying:
            return f"{self.certifying} certifying rotation systems ({self.examined} examined)"
        return f"no certifying rotation system ({self.examined} examined)"


def planar_k4_rotation(vertices: Sequence[int], fixed_first: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
    """The unique planar rotation of K4 on the given vertices with the first vertex's order fixed."""
    v0 = vertices[0]
    K = complete_graph(4)
    pos = {v: i for i, v in enumerate(vertices, start=1)}
    found = []
    others = list(vertices[1:])
    choices = [_nbr_rotations(v, [w for w in vertices if w != v]) for v in others]
    for combo in product(*choices):
        nbr = {pos[v0]: tuple(pos[w] for w in fixed_first)}
        for v, r in zip(others, combo):
            nbr[pos[v]] = tuple(pos[w] for w in r)
        s = EmbeddingScheme.from_neighbour_rotation(K, nbr)
        if face_trace(s).euler_genus == 0:
            found.append({v0: tuple(fixed_first), **dict(zip(others, combo))})
    if len(found) != 1:
        raise RuntimeError("planar K4 rotation not unique")
    return found[0]


def _merge_subsequences(v: int, parts: list[tuple[int, ...]]) -> tuple[int, ...]:
    """The rotation at v (starting at its smallest neighbour) containing every listed cyclic subsequence."""
    nbrs = sorted({x for p in parts for x in p})
    hits = [r for r in _nbr_rotations(v, nbrs)
            if all(_cyclic_equal(_induced_order(r, set(p)), p) for p in parts)]
    if len(hits) != 1:
        raise RuntimeError(f"subsequences at {v} do not force a unique rotation")
    return hits[0]


def check_k5_chered() -> K5Report:
    """Scan all rotation systems of K5 with pi(1) = (2345) for a planar-certifying one."""
    K5 = complete_graph(5)
    V = [1, 2, 3, 4, 5]
    pi1 = (2, 3, 4, 5)
    # forced table derived from the unique planar K4 rotation for each dropped vertex
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for drop in (2, 3, 4, 5):
        rest = [v for v in V if v != drop]
        planar = planar_k4_rotation(rest, _induced_order(pi1, set(rest)))
        for v, r in planar.items():
            table[(v, drop)] = r
    forced = {1: pi1}
    for v in (2, 3, 4, 5):
        forced[v] = _merge_subsequences(v, [table[(v, d)] for d in (2, 3, 4, 5) if d != v])
    forced_scheme = EmbeddingScheme.from_neighbour_rotation(K5, forced)
    walk = has_facial_walk(induced_scheme(forced_scheme, [2, 3, 4, 5]), _relabel_walk([2, 5, 4, 3], [2, 3, 4, 5]))

    genus_of = _induced_genus_cache()
    examined = certifying = four_planar = 0
    choices = [_nbr_rotations(v, [w for w in V if w != v]) for v in (2, 3, 4, 5)]
    for combo in product(*choices):
        examined += 1
        nbr = {1: pi1, **dict(zip((2, 3, 4, 5), combo))}
        s = EmbeddingScheme.from_neighbour_rotation(K5, nbr)
        drops = [genus_of(s, [v for v in V if v != d]) == 0 for d in V]
        if all(drops[1:]):
            four_planar += 1
            if combo != tuple(forced[v] for v in (2, 3, 4, 5)):
                raise RuntimeError("scan found a planar-on-drops system differing from the forced table")
        if all(drops):
            certifying += 1
    return K5Report(examined, certifying, four_planar, forced, table, walk)


def _relabel_walk(walk: Sequence[int], W: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(sorted(W), start=1)}
    return tuple(pos[v] for v in walk)


# ---------------------------------------------------------------- Ringel-Youngs values

def g_star(n: int, mode: str) -> int:
    """Least Euler genus of a surface of the given kind containing K_n."""
    if n < 1:
        raise ValueError("n >= 1")
    if mode == "orientable":
        return 2 * -(-(n - 3) * (n - 4) // 12) if n >= 3 else 0
    if mode == "nonorientable":
        if n == 7:
            return 3
        return -(-(n - 3) * (n - 4) // 6) if n >= 5 else 0
    raise ValueError("mode must be 'orientable' or 'nonorientable'")


# ---------------------------------------------------------------- extensions

def _genus_ok(G: Graph, h: int, mode: str, budget) -> bool:
    if h == 0:
        return is_planar(G)
    return genus_at_most(G, mode, h, budget)


def ext_count(G: Graph, h: int, mode: str = "any", budget=None) -> int:
    """Graphs on [v(G)+1] that restrict to G on [v(G)] and have min genus (mode) at most h."""
    n = G.n
    count = 0
    for mask in range(1 << n):
        extra = tuple((v, n + 1) for v in range(1, n + 1) if mask >> (v - 1) & 1)
        if _genus_ok(Graph(n + 1, G.edges + extra, G.simple), h, mode, budget):
            count += 1
    return count


@dataclass(frozen=True)
class MinextResult:
    value: int
    argmin: Graph


def minext(n: int, h: int, mode: str = "any", budget=None) -> MinextResult:
    """Minimum ext_count over all graphs on [n] of min genus (mode) at most h."""
    best = None
    best_keys = set()
    for cls in iso_classes(n):
        if not _genus_ok(cls.rep, h, mode, budget):
            continue
        val = ext_count(cls.rep, h, mode, budget)
        if best is None or val < best:
            best, best_keys = val, {cls.key}
        elif val == best:
            best_keys.add(cls.key)
    for G in enumerate_graphs(n, ceiling=LIMITS.canonical_ceiling):
        if canonical_form(G) in best_keys:
            return MinextResult(best, G)
    raise RuntimeError("unreachable")


# ---------------------------------------------------------------- generators

def is_cubic(H: Graph) -> bool:
    return all(d == 3 for d in H.degrees())


def zk_spacing(n: int, k: int) -> int:
    return (2 * (n - k)) // (3 * k)


def generate_Zk(n: int, k: int, H: Graph, order: Sequence[int]) -> Graph:
    """Subdivision of the cubic graph H on [k] with every edge subdivided at least s times.

    order is a permutation of [n]; H's vertex i becomes order[i-1] and the
    remaining entries are the subdivision vertices, inserted s at a time along
    the edges of the relabelled H in lexicographic order (oriented away from
    the smaller end), all leftovers going into the last edge.
    """
    if k % 2 or H.n != k or not is_cubic(H) or not H.simple:
        raise ValueError("H must be a simple cubic graph on [k] with k even")
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("order must be a permutation of [n]")
    s = zk_spacing(n, k)
    m = 3 * k // 2
    if s < 1 or n - k < m * s:
        raise ValueError("need s >= 1 and n - k >= (3k/2) s")
    base = sorted(tuple(sorted((order[u - 1], order[v - 1]))) for u, v in H.edges)
    pool = list(order[k:])
    edges = []
    for j, (a, b) in enumerate(base):
        take = pool[:s] if j < m - 1 else pool
        pool = pool[len(take):]
        chain = [a] + take + [b]
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return Graph(n, tuple(sorted(tuple(sorted(e)) for e in edges)), simple=True)


def zk_hered_table(n: int, k: int) -> GenusFunction:
    """Table m -> floor(2m / (2 + 3s)) bounding the cycle rank of induced subgraphs of Z^k_n graphs."""
    s = zk_spacing(n, k)
    return GenusFunction.table([(2 * m) // (2 + 3 * s) for m in range(1, n + 1)])


def generate_block_path(n: int, t: int, parts: Sequence[Graph] | None = None,
                        order: Sequence[int] | None = None) -> Graph:
    """Consecutive blocks of size t (plus a remainder block), joined by a path on their smallest vertices.

    parts[i] is a connected graph on [size of block i] (default: complete);
    order permutes block indices for the path.
    """
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    sizes = [t] * (n // t) + ([n % t] if n % t else [])
    if parts is None:
        parts = [complete_graph(sz) for sz in sizes]
    if len(parts) != len(sizes):
        raise ValueError(f"expected {len(sizes)} parts")
    edges = []
    start = 0
    leaders = []
    for sz, P in zip(sizes, parts):
        if P.n != sz or not is_connected(P):
            raise ValueError("each part must be a connected graph on its block")
        edges.extend((start + a, start + b) for a, b in P.edges)
        leaders.append(start + 1)
        start += sz
    order = list(range(len(sizes))) if order is None else list(order)
    if sorted(order) != list(range(len(sizes))):
        raise ValueError("order must permute the block indices")
    for i in range(len(order) - 1):
        edges.append((leaders[order[i]], leaders[order[i + 1]]))
    return Graph(n, tuple(edges), simple=True)


def subcubic_tminor_check(G: Graph, g) -> bool:
    """Every topological minor H meets g: planar when v(H) <= 5, else excess(H) <= g(v(H))."""
    g = as_genus_function(g)
    if not is_subcubic(G):
        raise ValueError("graph must be subcubic")
    planar_memo: dict = {}

    def test(H: Graph, k: int) -> bool:
        if cycle_rank(H) <= 3:  # a Kuratowski subdivision has cycle rank at least 4
            return True
        if H.edges not in planar_memo:
            planar_memo[H.edges] = is_planar(H)
        if planar_memo[H.edges]:
            return True
        return k > 5 and excess(H) <= g(k)

    return topological_minor_member(G, test)
