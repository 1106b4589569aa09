import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from planar2tree import families as F
from planar2tree.embed import dual, glue_on_face, stack_all_faces, stack_face
from planar2tree.graph import Graph, complete_graph, cycle_graph, induced, is_connected
from planar2tree.partitions import PATH_TREE, find_partition
from planar2tree.spanning import (
    DegeneracyWitness, SpanningError, SpanningSearchStats, TwoTreeSequence, count_hamiltonian_cycles,
    count_spanning_two_trees, cycle_edges, enumerate_spanning_two_trees, find_hamiltonian_cycle,
    find_spanning_two_tree, four_block_tree, ham_cycle_from_dual_partition, has_linear_hamiltonian_cycle,
    is_hamiltonian_cycle, is_k_degenerate, is_maximal_k_degenerate, is_two_tree,
    iter_hamiltonian_cycles, linear_hamiltonian_check, recognize_k_tree, reroot_two_tree,
    spanning_max_2_degenerate, triangles, two_tree_from_ham_cycle, two_tree_sequence,
)
from planar2tree.embed import face_sides

K2_K3BAR = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
G4_DUAL = dual(F.g_k(4))


# -- oracles --------------------------------------------------------------------------

def perm_ham_count(g):
    n = g.n
    if n < 3:
        return 0
    seen = set()
    for p in itertools.permutations(range(1, n)):
        c = (0,) + p
        if all(g.has_edge(c[i], c[(i + 1) % n]) for i in range(n)):
            seen.add(frozenset(cycle_edges(c)))
    return len(seen)


def held_karp_hamiltonian(g):
    n = g.n
    if n < 3:
        return False
    reach = [0] * (1 << n)  # reach[S]: endpoints v of paths 0 -> v covering S
    reach[1] = 1
    for s in range(1, 1 << n):
        if not s & 1 or not reach[s]:
            continue
        ends = reach[s]
        for v in range(n):
            if ends >> v & 1:
                for w in g.adj[v]:
                    if not s >> w & 1:
                        reach[s | 1 << w] |= 1 << w
    full = (1 << n) - 1
    return any(reach[full] >> v & 1 and g.has_edge(v, 0) for v in range(1, n))


def brute_two_trees(g):
    m = 2 * g.n - 3
    out = set()
    for es in itertools.combinations(g.edges, m):
        if is_two_tree(Graph(g.n, es)):
            out.add(frozenset(es))
    return out


def k_tree_oracle(g, k):
    """Exhaustive over all removal choices."""
    def rec(alive):
        if len(alive) == k:
            return all(g.has_edge(u, v) for u, v in itertools.combinations(alive, 2))
        for v in alive:
            nb = [w for w in g.adj[v] if w in alive]
            if len(nb) == k and all(g.has_edge(a, b) for a, b in itertools.combinations(nb, 2)):
                if rec(alive - {v}):
                    return True
        return False
    return g.n >= k and rec(frozenset(range(g.n)))


def degenerate_oracle(g, k):
    """Maximal k-degenerate by definition: k-degenerate and no edge can be added."""
    if not is_k_degenerate(g, k):
        return False
    return all(not is_k_degenerate(g.add_edges([e]), k)
               for e in itertools.combinations(range(g.n), 2) if not g.has_edge(*e))


@st.composite
def small_graphs(draw, lo=3, hi=8, p=None):
    n = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    q = p if p is not None else rng.uniform(0.3, 0.9)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < q])


def random_triangulation(seed, n):
    rng = random.Random(seed)
    eg = F.k4()
    while eg.n < n:
        eg = stack_face(eg, rng.randrange(len(eg.faces())))
    return eg


# -- Hamiltonian cycles ----------------------------------------------------------------

def test_ham_count_pins():
    assert count_hamiltonian_cycles(cycle_graph(6)) == 1
    assert count_hamiltonian_cycles(complete_graph(4)) == 3
    assert count_hamiltonian_cycles(F.octahedron().graph) == perm_ham_count(F.octahedron().graph) == 16


@pytest.mark.parametrize("n", [6, 7, 8])
def test_ham_count_double_wheels_vs_permutations(n):
    g = F.double_wheel(n).graph
    assert count_hamiltonian_cycles(g) == perm_ham_count(g)


@given(small_graphs(hi=8))
@settings(max_examples=80, deadline=None)
def test_ham_count_vs_permutations(g):
    assert count_hamiltonian_cycles(g) == perm_ham_count(g)


@given(small_graphs(lo=3, hi=12, p=0.35))
@settings(max_examples=80, deadline=None)
def test_ham_existence_vs_held_karp(g):
    c = find_hamiltonian_cycle(g)
    assert (c is not None) == held_karp_hamiltonian(g)
    if c is not None:
        assert is_hamiltonian_cycle(g, c)


@given(small_graphs(hi=8), st.integers(0, 10 ** 6))
@settings(max_examples=80, deadline=None)
def test_forced_edges_vs_enumeration(g, seed):
    if not g.edges:
        return
    rng = random.Random(seed)
    forced = rng.sample(list(g.edges), min(len(g.edges), rng.randint(1, 3)))
    want = any(set(forced) <= cycle_edges(c) for c in iter_hamiltonian_cycles(g))
    c = find_hamiltonian_cycle(g, forced)
    assert (c is not None) == want
    if c is not None:
        assert set(forced) <= cycle_edges(c) and is_hamiltonian_cycle(g, c)


def test_forced_edge_errors_and_shortcuts():
    g = F.octahedron().graph
    with pytest.raises(SpanningError):
        find_hamiltonian_cycle(g, [(0, 0 if not g.has_edge(0, 5) else 99)])
    hub = g.adj[0]
    assert find_hamiltonian_cycle(g, [(0, hub[0]), (0, hub[1]), (0, hub[2])]) is None
    a, b, c = next(iter(triangles(g)))
    assert find_hamiltonian_cycle(g, [(a, b), (b, c), (a, c)]) is None


def test_tutte_on_double_wheel_8():
    eg = F.double_wheel(8)
    for f in eg.faces():
        for e1, e2 in itertools.combinations(f.edges(), 2):
            c = find_hamiltonian_cycle(eg.graph, [e1, e2])
            assert c is not None and {e1, e2} <= cycle_edges(c)


# -- linear cycles ------------------------------------------------------------------------

def test_octahedron_linearity_vs_internal_triangles():
    """A side's dual is a path iff none of its faces has three chord edges."""
    eg = F.octahedron()
    tally = {}
    for c in iter_hamiltonian_cycles(eg.graph):
        cyc = cycle_edges(c)
        side = face_sides(eg, c)
        want = tuple(not any(side[i] == s and not set(f.edges()) & cyc for i, f in enumerate(eg.faces()))
                     for s in (0, 1))
        got = linear_hamiltonian_check(eg, c)
        assert got == want
        tally[got] = tally.get(got, 0) + 1
    # the 4 cycles whose chords form a central triangle on each side are not linear
    assert tally == {(True, True): 12, (False, False): 4}


def test_double_wheel_10_star_side():
    eg = F.double_wheel(10)
    d = dual(eg).graph
    star = None
    for c in iter_hamiltonian_cycles(eg.graph):
        side = face_sides(eg, c)
        part = [i for i, s in enumerate(side) if s == 0]
        sub = induced(d, part).graph
        if max(sub.degrees()) == 3:
            star = c
            break
    assert star is not None
    assert linear_hamiltonian_check(eg, star)[0] is False


@pytest.mark.parametrize("n", range(6, 11))
def test_double_wheels_have_linear_cycles(n):
    eg = F.double_wheel(n)
    c = has_linear_hamiltonian_cycle(eg)
    assert c is not None and any(linear_hamiltonian_check(eg, c))


def test_g4_dual_has_no_linear_cycle():
    assert has_linear_hamiltonian_cycle(G4_DUAL) is None


@pytest.mark.parametrize("eg", [F.double_wheel(7), F.double_wheel(9), dual(F.h_22())])
def test_cycle_from_dual_partition(eg):
    res = find_partition(dual(eg).graph, PATH_TREE)
    assert res.sat
    c = ham_cycle_from_dual_partition(eg, res.certificate.left)
    assert c is not None and is_hamiltonian_cycle(eg.graph, c)
    flags = linear_hamiltonian_check(eg, c)
    # the path side is whichever side holds the left faces
    side0_is_left = face_sides(eg, c)[res.certificate.left[0]] == 0
    assert flags[0 if side0_is_left else 1]


# -- 2-trees --------------------------------------------------------------------------

def test_two_tree_from_ham_cycle_octahedron():
    eg = F.octahedron()
    c = find_hamiltonian_cycle(eg.graph)
    for side in (0, 1):
        seq = two_tree_from_ham_cycle(eg, c, side)
        assert len(seq.edges()) == 9 and seq.validate(eg.graph) and seq.spans(eg.graph)


@given(st.integers(0, 10 ** 6), st.integers(5, 12), st.integers(0, 1))
@settings(max_examples=40, deadline=None)
def test_two_tree_from_cycle_is_outerplanar_with_unique_cycle(seed, n, side):
    eg = random_triangulation(seed, n)
    c = find_hamiltonian_cycle(eg.graph)
    if c is None:
        return
    t = two_tree_from_ham_cycle(eg, c, side).as_graph(eg.n)
    assert recognize_k_tree(t, 2) is not None
    # no K_2 + 3 independent common neighbours
    for u, v in t.edges:
        assert len(set(t.adj[u]) & set(t.adj[v])) <= 2
    cycles = list(iter_hamiltonian_cycles(t))
    assert len(cycles) == 1 and cycle_edges(cycles[0]) == cycle_edges(c)


def test_recognize_pins():
    assert recognize_k_tree(complete_graph(3), 2) is not None
    assert recognize_k_tree(K2_K3BAR, 2) is not None
    assert recognize_k_tree(cycle_graph(4), 2) is None
    assert recognize_k_tree(complete_graph(4), 3) is not None


@given(small_graphs(lo=2, hi=7), st.integers(1, 3))
@settings(max_examples=120, deadline=None)
def test_recognize_vs_exhaustive(g, k):
    got = recognize_k_tree(g, k)
    assert (got is not None) == k_tree_oracle(g, k)
    if got is not None:
        base, steps = got
        edges = set(itertools.combinations(sorted(base), 2))
        for w, c in steps:
            assert all(tuple(sorted(p)) in edges for p in itertools.combinations(c, 2))
            edges |= {tuple(sorted((w, x))) for x in c}
        assert edges == set(g.edges)


def test_reroot_pins():
    assert reroot_two_tree(complete_graph(3), (0, 1, 2)).steps == ()
    seq = reroot_two_tree(K2_K3BAR, (0, 1, 2))
    assert len(seq.steps) == 2 and seq.base == (0, 1, 2)
    with pytest.raises(SpanningError):
        reroot_two_tree(K2_K3BAR, (2, 3, 4))
    with pytest.raises(SpanningError):
        reroot_two_tree(cycle_graph(4), (0, 1, 2))


@given(st.integers(3, 10), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_reroot_every_triangle(n, seed):
    t = F.random_k_tree(n, 2, seed)
    for tri in triangles(t):
        seq = reroot_two_tree(t, tri)
        assert seq.order[:3] == tri and seq.edges() == set(t.edges) and seq.validate(t)


def test_sequence_validation():
    assert TwoTreeSequence((0, 1), ((2, (0, 1)),)).validate()
    assert not TwoTreeSequence((0, 1), ((2, (0, 3)),)).validate()
    assert not TwoTreeSequence((0, 1), ((1, (0, 1)),)).validate()
    assert two_tree_sequence(cycle_graph(4)) is None


def test_enumeration_pins():
    assert count_spanning_two_trees(complete_graph(4)) == len(brute_two_trees(complete_graph(4))) == 6
    o = F.octahedron().graph
    assert count_spanning_two_trees(o) == 2 * count_hamiltonian_cycles(o) == 32


@given(small_graphs(lo=3, hi=7))
@settings(max_examples=60, deadline=None)
def test_enumeration_vs_brute_force(g):
    got = list(enumerate_spanning_two_trees(g))
    assert len(got) == len(set(got))
    assert set(got) == brute_two_trees(g)


@given(small_graphs(lo=3, hi=7))
@settings(max_examples=60, deadline=None)
def test_find_spanning_two_tree_vs_brute_force(g):
    seq = find_spanning_two_tree(g)
    assert (seq is not None) == bool(brute_two_trees(g))
    if seq is not None:
        assert seq.validate(g) and seq.spans(g)


@given(st.integers(0, 10 ** 6), st.integers(4, 11))
@settings(max_examples=30, deadline=None)
def test_find_spanning_two_tree_vs_enumeration_on_triangulations(seed, n):
    g = random_triangulation(seed, n).graph
    seq = find_spanning_two_tree(g)
    assert (seq is not None) == (next(enumerate_spanning_two_trees(g), None) is not None)


def test_find_spanning_two_tree_pins():
    assert find_spanning_two_tree(F.octahedron().graph) is not None
    for s in range(5):
        seq = find_spanning_two_tree(F.random_k_tree(12, 3, s))
        assert seq is not None and seq.spans(F.random_k_tree(12, 3, s))
    st_ = SpanningSearchStats()
    assert find_spanning_two_tree(stack_all_faces(G4_DUAL).graph, st_) is None
    assert (st_.core_order, st_.hits) == (14, 24) and st_.nodes > 0


def test_g4_dual_every_two_tree_misses_a_face():
    faces = [f.edges() for f in G4_DUAL.faces()]
    total = 0
    for es in enumerate_spanning_two_trees(G4_DUAL.graph):
        total += 1
        assert any(not any(e in es for e in fe) for fe in faces)
    assert total == 2 * count_hamiltonian_cycles(G4_DUAL.graph) == 2368


# -- degeneracy -------------------------------------------------------------------------

def test_degeneracy_pins():
    assert is_maximal_k_degenerate(complete_graph(3), 2) is not None
    assert is_maximal_k_degenerate(cycle_graph(5), 2) is None
    assert is_maximal_k_degenerate(F.random_k_tree(9, 2, 4), 2) is not None


@given(small_graphs(lo=2, hi=9), st.integers(1, 3))
@settings(max_examples=120, deadline=None)
def test_maximal_degenerate_vs_definition(g, k):
    if g.n < k or not is_connected(g):
        return
    w = is_maximal_k_degenerate(g, k)
    assert (w is not None) == degenerate_oracle(g, k)
    if w is not None:
        assert w.check(g, k)


def test_witness_check_rejects_lies():
    g = complete_graph(3)
    assert DegeneracyWitness((0, 1, 2), (2, 1, 0)).check(g, 2)
    assert not DegeneracyWitness((0, 1, 2), (1, 1, 0)).check(g, 2)
    assert not DegeneracyWitness((0, 1, 2), (2, 1, 0)).check(g, 1)


# -- 4-blocks and the max-2-degenerate build ----------------------------------------------

def test_block_tree_pins():
    assert len(four_block_tree(F.octahedron())) == 1
    two, _ = glue_on_face(F.octahedron(), 0, F.octahedron(), 3)
    bt = four_block_tree(two)
    assert len(bt) == 2 and len(bt.gluing_triangles) == 1
    big = four_block_tree(stack_all_faces(G4_DUAL))
    sizes = sorted(len(b.vertices) for b in big.blocks)
    assert sizes == [4] * 24 + [14]
    assert len(big.blocks[0].vertices) == 14


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_block_tree_reconstructs_input(seed):
    eg = F.random_4block_triangulation(seed, 30)
    bt = four_block_tree(eg)
    edges = set()
    for i, b in enumerate(bt.blocks):
        edges |= {(b.vertices[u], b.vertices[v]) for u, v in b.embedding.graph.edges}
        if i:
            assert set(b.glue) <= set(bt.blocks[b.parent].vertices) and set(b.glue) <= set(b.vertices)
    assert edges == set(eg.graph.edges)


def test_max2deg_pins():
    k4 = spanning_max_2_degenerate(F.k4())
    assert k4.subgraph.size == 5
    o = spanning_max_2_degenerate(F.octahedron())
    assert is_two_tree(o.subgraph)
    big = spanning_max_2_degenerate(stack_all_faces(G4_DUAL))
    assert big.subgraph.size == 73 and recognize_k_tree(big.subgraph, 2) is None
    assert big.witness.check(big.subgraph, 2)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_max2deg_property(seed):
    eg = F.random_4block_triangulation(seed)
    res = spanning_max_2_degenerate(eg)
    m = res.subgraph
    assert m.n == eg.n and m.size == 2 * eg.n - 3
    assert all(eg.graph.has_edge(u, v) for u, v in m.edges)
    assert res.witness.check(m, 2) and is_maximal_k_degenerate(m, 2) is not None


def test_max2deg_rejects_non_triangulations():
    with pytest.raises(SpanningError):
        spanning_max_2_degenerate(F.cube())
