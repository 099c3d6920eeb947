"""Exact counting formulas for unicellular maps and dissections, brute-force oracles and bound evaluators.

Every counting path uses integers or Fractions.  A formula whose value is
not an integer returns it unchanged with ``integral=False``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

from .embedding import EmbeddingScheme, face_trace
from .genus import iter_gauge_signatures, iter_rotation_systems
from .graphs import Graph, is_connected


@dataclass(frozen=True)
class ExactValue:
    value: Fraction
    integral: bool

    @classmethod
    def of(cls, q) -> "ExactValue":
        q = Fraction(q)
        return cls(q, q.denominator == 1)

    @property
    def flag(self) -> str:
        return "" if self.integral else "non-integral"

    def __str__(self) -> str:
        return str(self.value.numerator) if self.integral else f"{self.value.numerator}/{self.value.denominator}"


# ---------------------------------------------------------------- unicellular maps

def composition_sum(parts: int, total: int) -> Fraction:
    """Sum over (i_1..i_parts) >= 0 with sum total of prod 1/(2 i_j + 1), by DP."""
    row = [Fraction(0)] * (total + 1)
    row[0] = Fraction(1)
    for _ in range(parts):
        new = [Fraction(0)] * (total + 1)
        for used, val in enumerate(row):
            if not val:
                continue
            for i in range(total - used + 1):
                new[used + i] += val / (2 * i + 1)
        row = new
    return row[total]


def unicellular_orientable_rooted_count(n: int, h: int, indexing: str = "genus") -> ExactValue:
    """Rooted one-face orientable maps with n vertices and Euler genus h.

    indexing='euler' sums compositions of h, 'genus' sums compositions of h/2.
    """
    if n < 1 or h < 0 or h % 2:
        raise ValueError("need n >= 1 and even h >= 0")
    if indexing not in ("euler", "genus"):
        raise ValueError("indexing must be 'euler' or 'genus'")
    pre = Fraction(factorial(2 * n + 2 * h - 2), 2 ** h * factorial(n) * factorial(n + h - 1))
    target = h if indexing == "euler" else h // 2
    return ExactValue.of(pre * composition_sum(n, target))


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = bytearray(len(perm))
    c = 0
    for i in range(len(perm)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
    return c


@lru_cache(maxsize=None)
def _vertex_cycle_histogram(e: int) -> dict[int, int]:
    """For every full cycle phi on 2e darts, bucket sigma = phi . alpha0 by its cycle count."""
    N = 2 * e
    alpha = [i ^ 1 for i in range(N)]
    hist: dict[int, int] = {}
    for rest in permutations(range(1, N)):
        cyc = (0,) + rest
        phi = [0] * N
        for j in range(N):
            phi[cyc[j]] = cyc[(j + 1) % N]
        sigma = tuple(phi[alpha[x]] for x in range(N))
        k = _cycle_count(sigma)
        hist[k] = hist.get(k, 0) + 1
    return hist


ORACLE_MAX_EDGES = 5


def oracle_unicellular_orientable(n: int, h: int) -> ExactValue:
    """Rooted one-face orientable maps from permutation pairs (sigma, alpha0) with a single face."""
    e = n + h - 1
    if e < 0:
        raise ValueError("need n + h >= 1")
    if e == 0:
        return ExactValue.of(1)  # the one-vertex map
    if e > ORACLE_MAX_EDGES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_EDGES} edges")
    count = _vertex_cycle_histogram(e).get(n, 0)
    return ExactValue.of(Fraction(count, 2 ** (e - 1) * factorial(e - 1)))


def oracle_unicellular_literal(n: int, h: int) -> ExactValue:
    """Same count by enumerating every permutation sigma directly (small e only)."""
    e = n + h - 1
    if e > 3:
        raise ValueError("literal oracle limited to 3 edges")
    N = 2 * e
    alpha = [i ^ 1 for i in range(N)]
    count = 0
    for sigma in permutations(range(N)):
        if _cycle_count(sigma) != n:
            continue
        face = tuple(sigma[alpha[x]] for x in range(N))
        if _cycle_count(face) == 1:
            count += 1
    return ExactValue.of(Fraction(count, 2 ** (e - 1) * factorial(e - 1)))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


# ---------------------------------------------------------------- precubic maps

def precubic_constant(j: int) -> Fraction:
    s = sum(Fraction(comb(2 * l, l), 16 ** l) for l in range(j))
    return 3 * Fraction(2) ** (3 * j - 2) * Fraction(factorial(j), factorial(2 * j)) * s


def precubic_nonorientable_count(m: int, h: int) -> ExactValue:
    """Rooted precubic one-face maps with m edges on the non-orientable surface of Euler genus h."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    if h < 2 or h % 2:
        raise ValueError("h must be even and at least 2")
    k, j = (m - 1) // 2, h // 2
    if k + 1 - 3 * j < 0:
        return ExactValue.of(0)
    val = precubic_constant(j) * Fraction(factorial(2 * k), 6 ** j * factorial(k) * factorial(k + 1 - 3 * j))
    return ExactValue.of(val)


def pseudographs_with_degrees(degrees: list[int]):
    """Edge multisets (sorted pairs u <= v, 1-based) realising the degree sequence exactly."""
    n = len(degrees)
    rem = list(degrees)
    edges: list[tuple[int, int]] = []

    def rec(start_u, start_v):
        u = next((i for i in range(n) if rem[i]), None)
        if u is None:
            yield tuple(edges)
            return
        # edges come in sorted order, so the next edge starts at the smallest unfinished vertex
        if u < start_u:
            return
        for v in range(u, n):
            if u == start_u and v < start_v:
                continue
            need = 2 if u == v else 1
            if u == v and rem[u] < 2:
                continue
            if u != v and (rem[u] < 1 or rem[v] < 1):
                continue
            rem[u] -= need if u == v else 1
            if u != v:
                rem[v] -= 1
            edges.append((u + 1, v + 1))
            yield from rec(u, v)
            edges.pop()
            rem[u] += need if u == v else 1
            if u != v:
                rem[v] += 1

    yield from rec(0, 0)


def _multiplicity_factor(edges) -> int:
    out = 1
    counts: dict = {}
    for e in edges:
        counts[e] = counts.get(e, 0) + 1
    for c in counts.values():
        out *= factorial(c)
    return out


def oracle_precubic_nonorientable(m: int, h: int, roots_per_leaf: int = 2) -> Fraction:
    """Rooted precubic one-face non-orientable maps by enumerating signed schemes on vertex-labelled pseudographs.

    A map with v labelled vertices is counted once per flip class of schemes,
    i.e. (gauge-normalised schemes) / 2, on each edge multiset.  Summing
    roots / |Aut| over maps turns into dividing by v!, by 2 per loop and by
    the factorials of edge multiplicities.  A map has roots_per_leaf roots per leaf.
    """
    v = m + 1 - h
    three = (2 * m - v) // 2
    one = v - three
    if three < 0 or one < 1 or 3 * three + one != 2 * m:
        return Fraction(0)
    total = Fraction(0)
    for leaves in combinations(range(v), one):
        degs = [1 if i in leaves else 3 for i in range(v)]
        for edges in pseudographs_with_degrees(degs):
            G = Graph(v, edges)
            if not is_connected(G):
                continue
            good = 0
            sigs = list(iter_gauge_signatures(G, include_trivial=False))
            for rot in iter_rotation_systems(G):
                for sig in sigs:
                    ft = face_trace(EmbeddingScheme(G, rot, sig))
                    if ft.faces == 1 and ft.euler_genus == h:
                        good += 1
            loops = sum(1 for a, b in edges if a == b)
            total += Fraction(good * one * roots_per_leaf, 2 * 2 ** loops * _multiplicity_factor(edges))
    return total / factorial(v)


# ---------------------------------------------------------------- dissections

def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def dissection_polynomial(k: int) -> tuple[int, ...]:
    """Coefficient j counts sets of j noncrossing diagonals of a convex k-gon.

    The face on a fixed side splits the other k-1 sides into a composition of
    at least two parts; a part of length 1 is a polygon side, a longer part a
    diagonal cutting off a smaller dissected polygon.
    """
    if k < 3:
        raise ValueError("k >= 3")
    L = k - 1
    A = [[1]]  # A[l]: compositions of l into >= 1 parts (A[0] is the empty composition)
    Q = [None]  # Q[l]: weight of a part of length l
    F = [None]  # F[l]: compositions of l into >= 2 parts
    for length in range(1, L + 1):
        f = []
        for first in range(1, length):
            f = _poly_add(f, _poly_mul(Q[first], A[length - first]))
        F.append(f)
        q = [1] if length == 1 else [0] + f
        Q.append(q)
        A.append(_poly_add(q, f))
    return tuple(F[L])


def dissection_count(k: int, j: int) -> int:
    if k < 3 or j < 0 or j > k - 3:
        return 0
    poly = dissection_polynomial(k)
    return poly[j] if j < len(poly) else 0


def dissection_closed_form(k: int, j: int) -> int:
    if k < 3 or j < 0 or j > k - 3:
        return 0
    return comb(k - 3, j) * comb(k + j - 1, j) // (j + 1)


def dissection_brute_force(k: int) -> list[int]:
    """Counts by size of noncrossing diagonal sets, by backtracking over all diagonals."""
    diags = [(a, b) for a in range(k) for b in range(a + 2, k) if not (a == 0 and b == k - 1)]

    def cross(p, q):
        (a, b), (c, d) = p, q
        return a < c < b < d or c < a < d < b

    counts = [0] * (max(k - 2, 1))

    def rec(i, chosen):
        if i == len(diags):
            counts[len(chosen)] += 1
            return
        rec(i + 1, chosen)
        if all(not cross(diags[i], c) for c in chosen):
            chosen.append(diags[i])
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return counts


# ---------------------------------------------------------------- cubic graphs

def cubic_labelled_count(k: int) -> int:
    """Labelled simple cubic graphs on [k]: the lowest unsaturated vertex picks all its remaining partners at once."""
    if k % 2 or k < 4:
        return 0
    if k > 10:
        raise ValueError("exact enumeration limited to k <= 10")
    return _count_cubic(k)


def _count_cubic(k: int) -> int:
    rem = [3] * k
    adj = [set() for _ in range(k)]

    def rec(u):
        while u < k and rem[u] == 0:
            u += 1
        if u == k:
            return 1
        total = 0
        need = rem[u]
        cands = [v for v in range(u + 1, k) if rem[v] and v not in adj[u]]
        for chosen in combinations(cands, need):
            for v in chosen:
                rem[v] -= 1
                adj[u].add(v)
                adj[v].add(u)
            rem[u] = 0
            total += rec(u + 1)
            rem[u] = need
            for v in chosen:
                rem[v] += 1
                adj[u].discard(v)
                adj[v].discard(u)
        return total

    return rec(0)


def cubic_asymptotic(k: int) -> float:
    """Leading-order approximation (2/e)^(1/2) c^k k^(3k/2), c = (1/6)(3/e)^(3/2); floating point."""
    c = (3 / math.e) ** 1.5 / 6
    return math.sqrt(2 / math.e) * c ** k * k ** (1.5 * k)


# ---------------------------------------------------------------- bounds

class OutOfRange(ValueError):
    pass


def connected_lower(n: int, h: int) -> Fraction:
    """n^(n-2) ((n^2-3n)/(2(n+h)))^h, valid for 0 <= h <= n^2/2 - 5n/2."""
    if n < 1 or h < 0 or 2 * h > n * n - 5 * n:
        raise OutOfRange(f"connected_lower needs 0 <= h <= n^2/2 - 5n/2 (n={n}, h={h})")
    return Fraction(n) ** (n - 2) * Fraction(n * n - 3 * n, 2 * (n + h)) ** h


def connected_lower_large_n(n: int, h: int) -> Fraction:
    """n^-3 (n^2/(3h))^h n!, valid for n >= 15."""
    if n < 15 or h < 0:
        raise OutOfRange("valid only for n >= 15 and h >= 0")
    base = Fraction(1) if h == 0 else Fraction(n * n, 3 * h) ** h
    return Fraction(factorial(n), n ** 3) * base


def handle_growth_factor(n: int, h: int) -> Fraction:
    """(C(n,2) - 3(n+h)) / (3(n+h)): lower bound on |A^{h+2}_n| / |A^h_n|."""
    if n < 1 or h < 0:
        raise OutOfRange("need n >= 1, h >= 0")
    return Fraction(comb(n, 2) - 3 * (n + h), 3 * (n + h))


FREE_C1 = Fraction(1, 14)
FREE_C2 = Fraction(8)


def free_sandwich(n: int, h: int, c1: Fraction = FREE_C1, c2: Fraction = FREE_C2) -> tuple[Fraction, Fraction]:
    """((c1 n^2/(n+h))^(n+h), (c2 n^2/(n+h))^(n+h)) for 0 <= h <= n^2."""
    if n < 1 or h < 0 or h > n * n:
        raise OutOfRange("need n >= 1 and 0 <= h <= n^2")
    k = n + h
    return (Fraction(c1) * n * n / k) ** k, (Fraction(c2) * n * n / k) ** k


def unicellular_upper(n: int, h: int) -> int:
    """2^(4n+3h) h^h (with 0^0 = 1)."""
    if n < 1 or h < 0:
        raise OutOfRange("need n >= 1, h >= 0")
    return 2 ** (4 * n + 3 * h) * (h ** h if h else 1)


def degree2_insertions(n: int, h: int, ell: int) -> int:
    """C(n+h-2, ell): ways to spread ell degree-2 vertices over the edges of a smaller map."""
    if ell < 0 or ell >= n or n + h - 2 < 0:
        raise OutOfRange("need 0 <= ell < n and n + h >= 2")
    return comb(n + h - 2, ell)


def precubic_upper(m: int, h: int) -> Fraction:
    """2^m (3h)^(-h/2) m^(3h/2) for even h >= 2."""
    if h < 2 or h % 2 or m < 1:
        raise OutOfRange("need m >= 1 and even h >= 2")
    j = h // 2
    return Fraction(2 ** m * m ** (3 * j), (3 * h) ** j)


def edge_bound(n: int, h: int) -> int:
    """3(n+h-2): maximum edges of a simple graph embedded with Euler genus h, n >= 3."""
    if n < 3 or h < 0:
        raise OutOfRange("edge bound stated for n >= 3")
    return 3 * (n + h - 2)


def minext_lower(n: int) -> int:
    return 2 * n


def triangulation_ext(n: int, h: int) -> int:
    """6n + 5h - 9, except 8 for the 3-vertex sphere triangulation."""
    if n < 3 or h < 0:
        raise OutOfRange("need n >= 3")
    return 8 if (n, h) == (3, 0) else 6 * n + 5 * h - 9


def entropy(p) -> float | Fraction:
    """Binary entropy H(p) = -p log2 p - (1-p) log2 (1-p); exact at p in {0, 1/2, 1}."""
    p = Fraction(p)
    if p < 0 or p > 1:
        raise OutOfRange("p must lie in [0, 1]")
    if p in (0, 1):
        return Fraction(0)
    if p == Fraction(1, 2):
        return Fraction(1)
    x = float(p)
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


BOUNDS = {
    "connected_lower": connected_lower,
    "connected_lower_large_n": connected_lower_large_n,
    "handle_growth": handle_growth_factor,
    "free_sandwich": free_sandwich,
    "unicellular_upper": unicellular_upper,
    "degree2_insertions": degree2_insertions,
    "precubic_upper": precubic_upper,
    "edge_bound": edge_bound,
    "triangulation_ext": triangulation_ext,
}


def bound(name: str, *args):
    if name == "minext_lower":
        return minext_lower(*args)
    if name == "entropy":
        return entropy(*args)
    if name not in BOUNDS:
        raise KeyError(f"unknown bound {name!r}")
    return BOUNDS[name](*args)


# ---------------------------------------------------------------- sweep

def formula_sweep() -> list[tuple[str, str, str, str]]:
    """Rows (name, args, value, flag) comparing formulas with their oracles."""
    rows = []
    for e in range(1, ORACLE_MAX_EDGES + 1):
        for h in range(0, e + 1, 2):
            n = e + 1 - h
            if n < 1:
                continue
            args = f"n={n};h={h}"
            orc = oracle_unicellular_orientable(n, h)
            rows.append(("unicellular_oracle", args, str(orc), orc.flag))
            for ix in ("genus", "euler"):
                val = unicellular_orientable_rooted_count(n, h, ix)
                flag = val.flag or ("matches-oracle" if val.value == orc.value else "mismatch")
                rows.append((f"unicellular_{ix}", args, str(val), flag))
    for m in range(1, 16, 2):
        for h in (2, 4):
            val = precubic_nonorientable_count(m, h)
            rows.append(("precubic", f"m={m};h={h}", str(val), val.flag))
    for k in range(3, 9):
        brute = dissection_brute_force(k)
        for j in range(0, k - 2):
            val = dissection_count(k, j)
            rows.append(("dissection", f"k={k};j={j}", str(val),
                         "matches-brute-force" if val == brute[j] else "mismatch"))
    for k in (2, 4, 6, 8):
        rows.append(("cubic_labelled", f"k={k}", str(cubic_labelled_count(k)), ""))
    return rows
