import itertools

import pytest
from hypothesis import given, strategies as st

from genuslab.canon import canonical_form, iso_classes
from genuslab.classes import (ClassSpec, GenusFunction, GenusFunctionError, check_k5_chered,
                              certifying_rotation, ext_count, g_star, generate_block_path, generate_Zk,
                              max_suppressions, member, minext, subcubic_tminor_check, zk_hered_table)
from genuslab.config import CeilingExceeded
from genuslab.genus import genus_profile, is_planar, min_euler_genus
from genuslab.graphs import (Graph, complete_bipartite, complete_graph, cycle_graph, cycle_rank, excess,
                             girth, is_connected, path_graph, petersen_graph)

from strategies import simple_graphs

K4 = complete_graph(4)
K5 = complete_graph(5)
K5_PENDANT = Graph(6, K5.edges + ((5, 6),), simple=True)
SUBCUBIC_G = GenusFunction("floor n/2 with 1=0,2=0,3=0,4=0,5=0")


# ---------------------------------------------------------------- genus functions

@pytest.mark.parametrize("text,n,value", [
    ("const 2", 9, 2),
    ("table 0,0,0,0,2", 5, 2),
    ("table 0,0,0,0,2", 11, 2),
    ("table 0,1", 1, 0),
    ("floor (n*(n-3))/6", 7, 4),
    ("ceil (n-3)*(n-4)/6", 8, 4),
    ("floor 0.5*n/ln n", 100, 10),
    ("floor 1/2*n/ln(n)", 1000, 72),
    ("ceil n/3 with 7=2", 7, 2),
    ("ceil n/3 with 7=2", 8, 3),
    ("floor n", 6, 6),
])
def test_genus_function_values(text, n, value):
    assert GenusFunction(text)(n) == value


def test_genus_function_errors():
    with pytest.raises(GenusFunctionError):
        GenusFunction("sqrt n")
    with pytest.raises(GenusFunctionError):
        GenusFunction("floor 0.5*n/ln n")(1)
    with pytest.raises(GenusFunctionError):
        GenusFunction("floor n-10")(3)
    with pytest.raises(GenusFunctionError):
        GenusFunction("const 1")(0)


@given(st.integers(2, 2000))
def test_ln_form_agrees_with_float_away_from_integers(n):
    import math

    x = 0.5 * n / math.log(n)
    if abs(x - round(x)) > 1e-9:
        assert GenusFunction("floor 0.5*n/ln n")(n) == math.floor(x)


@pytest.mark.parametrize("n,orientable,nonorientable", [
    (1, 0, 0), (2, 0, 0), (3, 0, 0), (4, 0, 0), (5, 2, 1), (6, 2, 1), (7, 2, 3), (8, 4, 4), (12, 12, 12),
])
def test_g_star(n, orientable, nonorientable):
    assert g_star(n, "orientable") == orientable
    assert g_star(n, "nonorientable") == nonorientable


@pytest.mark.parametrize("n", range(1, 6))
def test_g_star_matches_search(n):
    prof = genus_profile(complete_graph(n), use_planarity=False)
    assert (prof.orientable, prof.nonorientable) == (g_star(n, "orientable"), g_star(n, "nonorientable"))


# ---------------------------------------------------------------- membership

def test_class_spec_validation():
    with pytest.raises(ValueError):
        ClassSpec("E", "cHered", GenusFunction("const 0"))
    with pytest.raises(ValueError):
        ClassSpec("Q")
    assert ClassSpec("OE∩NE").family == "OENE"


def test_forest_class():
    F0 = ClassSpec("F", "plain", "const 0")
    assert member(path_graph(6), F0)
    assert member(Graph(4, ((1, 2), (3, 4)), simple=True), F0)
    assert not member(cycle_graph(3), F0)


def test_pendant_k5_plain_but_not_hereditary():
    g = GenusFunction("table 0,0,0,0,0,2")
    assert member(K5_PENDANT, ClassSpec("E", "plain", g))
    assert not member(K5_PENDANT, ClassSpec("E", "Hered", g))


def test_k5_hereditary_but_not_certifiably():
    g = GenusFunction("table 0,0,0,0,2")
    assert member(K5, ClassSpec("OE", "Hered", g))
    assert not member(K5, ClassSpec("OE", "cHered", g))


def test_k5_minor_class():
    assert member(K5, ClassSpec("E", "Minor", "table 0,0,0,0,1"))
    assert not member(K5, ClassSpec("E", "Minor", "const 0"))


def test_certifying_rotation_for_planar_graph():
    s = certifying_rotation(K4, GenusFunction("const 0"))
    assert s is not None


def test_hered_ceiling():
    with pytest.raises(CeilingExceeded):
        member(complete_graph(11), ClassSpec("E", "Hered", "const 40"))


TABLES = ["const 0", "table 0,0,0,1", "table 0,0,0,0,1", "table 0,0,0,0,2", "table 0,0,1,1,2",
          "table 0,0,0,2,3", "table 0,1,1,1,1", "const 3"]


@pytest.mark.parametrize("text", TABLES)
def test_containment_chains(text):
    g = GenusFunction(text)
    for n in range(1, 6):
        for c in iso_classes(n):
            G = c.rep
            inF = member(G, ClassSpec("F", "plain", g))
            inXS = member(G, ClassSpec("XS", "plain", g))
            inE = member(G, ClassSpec("E", "plain", g))
            inOENE = member(G, ClassSpec("OENE", "plain", g))
            assert not inF or inE
            assert not inXS or inOENE
            assert not inF or inXS


@pytest.mark.parametrize("text", ["const 0", "table 0,0,0,2", "table 0,0,0,0,2", "table 0,0,1,2,2", "const 2"])
def test_hereditary_chain(text):
    g = GenusFunction(text)
    for n in range(1, 6):
        for c in iso_classes(n):
            G = c.rep
            hf = member(G, ClassSpec("F", "Hered", g))
            ch = member(G, ClassSpec("OE", "cHered", g))
            ho = member(G, ClassSpec("OE", "Hered", g))
            assert not hf or ch
            assert not ch or ho


def test_minor_class_is_planar_when_g5_g6_zero():
    spec = ClassSpec("E", "Minor", GenusFunction("table 0,0,0,1,0,0,5"))
    for n in range(1, 7):
        for c in iso_classes(n):
            assert member(c.rep, spec) == is_planar(c.rep)


@pytest.mark.parametrize("text,witness", [
    ("table 0,0,0,0,1,0", K5),
    ("table 0,0,0,0,0,1", complete_bipartite(3, 3)),
    ("table 0,0,0,0,2,2", K5),
])
def test_minor_class_admits_nonplanar_otherwise(text, witness):
    assert not is_planar(witness)
    assert member(witness, ClassSpec("E", "Minor", text))


# ---------------------------------------------------------------- topological minors

def _suppress_sizes(G):
    """Reachable vertex counts by suppressing degree-2 vertices while staying simple (brute force)."""
    out = set()
    todo = [frozenset(tuple(sorted(e)) for e in G.edges)]
    seen = set(todo)
    while todo:
        E = todo.pop()
        verts = {x for e in E for x in e}
        out.add(len(verts))
        for v in verts:
            inc = [e for e in E if v in e]
            if len(inc) != 2:
                continue
            a = inc[0][0] if inc[0][1] == v else inc[0][1]
            b = inc[1][0] if inc[1][1] == v else inc[1][1]
            new = tuple(sorted((a, b)))
            if a == b or new in E:
                continue
            F = (E - set(inc)) | {new}
            if F not in seen:
                seen.add(F)
                todo.append(F)
    return out


@given(simple_graphs(max_n=7).filter(lambda G: G.m > 0 and all(d > 0 for d in G.degrees())))
def test_max_suppressions_matches_brute_force(G):
    sizes = _suppress_sizes(G)
    assert min(sizes) == G.n - max_suppressions(G)
    assert sizes == set(range(min(sizes), G.n + 1))


@pytest.mark.parametrize("G", [cycle_graph(7), Graph(5, ((1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)), True),
                               complete_bipartite(2, 4)])
def test_max_suppressions_structured(G):
    assert min(_suppress_sizes(G)) == G.n - max_suppressions(G)


@pytest.mark.parametrize("G", [K4, complete_bipartite(3, 3), petersen_graph()])
def test_subcubic_tminor(G):
    assert subcubic_tminor_check(G, SUBCUBIC_G)


def test_subcubic_tminor_rejects_when_g_too_small():
    assert not subcubic_tminor_check(complete_bipartite(3, 3), "const 0")
    with pytest.raises(ValueError):
        subcubic_tminor_check(K5, SUBCUBIC_G)


def test_tminor_membership_small():
    spec = ClassSpec("E", "tMinor", "const 0")
    assert member(K4, spec)
    assert not member(complete_bipartite(3, 3), spec)
    # a subdivided K5 is not planar in any topological minor sense
    assert not member(Graph(6, tuple(e for e in K5.edges if e != (1, 2)) + ((1, 6), (6, 2)), True), spec)


# ---------------------------------------------------------------- K5 and extensions

def test_k5_report():
    rep = check_k5_chered()
    assert rep.examined == 1296
    assert rep.certifying == 0
    assert rep.four_planar == 1
    assert rep.forced == {1: (2, 3, 4, 5), 2: (1, 5, 4, 3), 3: (1, 2, 5, 4), 4: (1, 3, 2, 5), 5: (1, 4, 3, 2)}
    assert rep.forced_has_walk_2543
    assert rep.message == "no certifying rotation system (1296 examined)"


def test_ext_triangle_exception():
    assert ext_count(complete_graph(3), 0) == 8
    assert minext(3, 0).value <= 8


def test_minext_four():
    res = minext(4, 0)
    assert res.value == 15 == 6 * 4 - 9
    assert res.value >= 2 * 4
    assert res.argmin.m == 6  # the only 4-vertex triangulation is K4


# ---------------------------------------------------------------- generators

def test_zk_k4_sixteen():
    G = generate_Zk(16, 4, K4, list(range(1, 17)))
    assert G.n == 16 and excess(G) == 2 and is_connected(G)
    assert girth(G) >= 9
    assert member(G, ClassSpec("F", "Hered", zk_hered_table(16, 4)))


def test_zk_injective():
    seen = {}
    for order in itertools.islice(itertools.permutations(range(1, 13)), 0, 3000, 7):
        G = generate_Zk(12, 4, K4, list(order))
        key = G.edge_set()
        assert key not in seen or seen[key] == order
        seen[key] = order


def test_zk_rejects_bad_input():
    with pytest.raises(ValueError):
        generate_Zk(8, 4, K4, list(range(1, 9)))
    with pytest.raises(ValueError):
        generate_Zk(16, 4, cycle_graph(4), list(range(1, 17)))


@pytest.mark.parametrize("n", [10, 11, 12])
def test_zk_hereditary_forest_bound(n):
    for order in [list(range(1, n + 1)), list(range(n, 0, -1))]:
        G = generate_Zk(n, 4, K4, order)
        assert excess(G) == 2
        assert member(G, ClassSpec("F", "Hered", zk_hered_table(n, 4)))


def test_block_path_two_triangles():
    G = generate_block_path(6, 3)
    assert G.m == 7 and is_connected(G)
    assert canonical_form(G) == canonical_form(Graph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4)), True))


def test_block_path_validation():
    with pytest.raises(ValueError):
        generate_block_path(3, 4)
    with pytest.raises(ValueError):
        generate_block_path(6, 3, [path_graph(3), Graph(3, ((1, 2),), True)])
    with pytest.raises(ValueError):
        generate_block_path(6, 3, order=[0, 0])


@given(st.integers(1, 9), st.integers(1, 9), st.randoms(use_true_random=False))
def test_block_path_connected(n, t, rnd):
    if t > n:
        return
    blocks = n // t + (1 if n % t else 0)
    order = list(range(blocks))
    rnd.shuffle(order)
    G = generate_block_path(n, t, None, order)
    assert is_connected(G) and G.n == n


def test_block_path_in_minor_class():
    g = GenusFunction("floor n")
    for n in (4, 5, 6):
        assert member(generate_block_path(n, 3), ClassSpec("E", "Minor", g))


def test_min_genus_monotone_under_induced_subgraphs():
    assert min_euler_genus(K5_PENDANT, "any") == 1
    assert cycle_rank(K5_PENDANT) == 6
