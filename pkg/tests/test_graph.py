import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from planar2tree.graph import (
    Graph, Graph6Error, GraphError, Shape, canonical_form, classify_induced, complete_graph,
    components, cycle_graph, find_isomorphism, graph6_decode, graph6_encode,
    has_nontrivial_3_edge_cut, induced, is_connected, is_isomorphic, path_graph,
    vertex_connectivity,
)
from planar2tree import families as F


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_basic_accessors():
    g = Graph(4, [(1, 0), (2, 1), (3, 2)])
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.adj[1] == (0, 2)
    assert g.degrees() == [1, 2, 2, 1]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_induced_out_of_range():
    with pytest.raises(GraphError):
        induced(path_graph(3), [0, 7])


def test_graph6_known_strings():
    assert graph6_encode(complete_graph(4)) == "C~"
    assert graph6_encode(cycle_graph(4)) == "Cl"
    assert graph6_decode(">>graph6<<C~") == complete_graph(4)


@pytest.mark.parametrize("text", ["", "C", "C~~", "B~", "\x01"])
def test_graph6_errors_carry_offset(text):
    with pytest.raises(Graph6Error) as exc:
        graph6_decode(text)
    assert exc.value.offset >= 0


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_matches_networkx():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 70)
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.2])
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert graph6_encode(g) == ref


@given(graphs())
@settings(max_examples=60)
def test_vertex_connectivity_matches_networkx(g):
    want = nx.node_connectivity(to_nx(g)) if g.n > 1 else 0
    if g.n > 1 and g.size == g.n * (g.n - 1) // 2:
        want = g.n - 1
    assert vertex_connectivity(g) == want


def test_vertex_connectivity_pins():
    assert vertex_connectivity(complete_graph(4)) == 3
    assert vertex_connectivity(F.octahedron().graph) == 4
    assert vertex_connectivity(F.cube().graph) == 3
    assert vertex_connectivity(Graph(4, [(0, 1), (2, 3)])) == 0


@given(graphs(max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    iso = find_isomorphism(g, h)
    assert g.relabel(iso) == h


@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=80)
def test_isomorphism_matches_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_canonical_form_on_regular_graphs():
    # cubic graphs defeat plain refinement; individualisation must separate them
    wagner = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert is_isomorphic(F.prism(4).graph, F.cube().graph)
    assert not is_isomorphic(F.cube().graph, wagner)
    assert is_isomorphic(F.double_wheel(6).graph, F.octahedron().graph)


def brute_3_edge_cut(g):
    full = set(range(g.n))
    for k in range(2, g.n - 1):
        for s in itertools.combinations(range(g.n), k):
            s = set(s)
            cut = [e for e in g.edges if (e[0] in s) != (e[1] in s)]
            if len(cut) == 3 and is_connected(induced(g, s).graph) and is_connected(induced(g, full - s).graph):
                return True
    return False


@pytest.mark.parametrize("name,eg,want", [
    ("cube", F.cube(), False),
    ("prism5", F.prism(5), False),
    ("prism3", F.prism(3), True),
    ("k4", F.k4(), False),
])
def test_nontrivial_3_edge_cut(name, eg, want):
    assert has_nontrivial_3_edge_cut(eg.graph) is want
    assert brute_3_edge_cut(eg.graph) is want


def test_3_edge_cut_requires_cubic():
    with pytest.raises(GraphError):
        has_nontrivial_3_edge_cut(path_graph(4))


def test_classify_induced():
    g = cycle_graph(6)
    assert classify_induced(g, [0, 1, 2]) is Shape.PATH
    assert classify_induced(g, range(6)) is Shape.CYCLIC
    assert classify_induced(g, [0, 2]) is Shape.DISCONNECTED
    assert classify_induced(g, []) is Shape.EMPTY
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert classify_induced(star, range(4)) is Shape.TREE


def test_components():
    g = Graph(5, [(0, 1), (2, 3)])
    assert sorted(map(sorted, components(g))) == [[0, 1], [2, 3], [4]]
    assert sorted(map(sorted, components(path_graph(5), removed=[2]))) == [[0, 1], [3, 4]]
