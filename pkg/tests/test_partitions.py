import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from planar2tree import _pykernels, families as F, kernels
from planar2tree.graph import Graph, Shape, classify_induced, cycle_graph, is_connected
from planar2tree.handles import random_4mp_dual
from planar2tree.partitions import (
    PATH_PATH, PATH_TREE, TREE_TREE, Part, PartitionCertificate, PartitionError, PartitionSpec,
    find_partition, oracle_find_partition, parse_edge, verify_certificate,
)

SPECS = [PATH_PATH, PATH_TREE, TREE_TREE]
BACKENDS = kernels.available()


def naive(g, spec):
    """Independent oracle: every bipartition, shapes via classify_induced."""
    want = {Part.PATH: {Shape.PATH}, Part.TREE: {Shape.PATH, Shape.TREE}}
    vs = range(g.n)
    for k in range(1, g.n):
        for left in itertools.combinations(vs, k):
            ls = set(left)
            right = [v for v in vs if v not in ls]
            if any((u in ls) != (v in ls) for u, v in spec.required_internal):
                continue
            if any((u in ls) == (v in ls) for u, v in spec.required_crossing):
                continue
            if classify_induced(g, left) in want[spec.left] and classify_induced(g, right) in want[spec.right]:
                return True
    return False


def test_spec_validation():
    with pytest.raises(PartitionError):
        PartitionSpec.of("path", "tree", [(0, 1)], [(1, 0)])
    with pytest.raises(ValueError):
        PartitionSpec.of("cycle", "tree")
    with pytest.raises(PartitionError):
        find_partition(F.cube().graph, PartitionSpec.of("path", "path", [(0, 6)]))


def test_parse_edge():
    assert parse_edge("5-2") == (2, 5)
    with pytest.raises(PartitionError):
        parse_edge("5")


def test_trivial_unsat_reasons():
    assert find_partition(Graph(1), PATH_PATH).reason == "order < 2"
    assert find_partition(Graph(4, [(0, 1), (2, 3)]), PATH_PATH).reason == "disconnected"


@given(st.integers(8, 16).filter(lambda n: n % 2 == 0), st.integers(0, 10 ** 6),
       st.sampled_from(SPECS), st.sampled_from(BACKENDS))
@settings(max_examples=40, deadline=None)
def test_search_agrees_with_oracle_on_4mp_duals(n, seed, spec, backend):
    g = random_4mp_dual(n, seed).graph
    rng = random.Random(seed)
    edges = list(g.edges)
    rng.shuffle(edges)
    spec = PartitionSpec.of(spec.left, spec.right, edges[:rng.randint(0, 2)], edges[2:2 + rng.randint(0, 2)])
    res = find_partition(g, spec, backend)
    orc = oracle_find_partition(g, spec, backend)
    assert res.sat == orc.sat
    if res.sat:
        assert verify_certificate(g, res.certificate, spec)
        assert verify_certificate(g, orc.certificate, spec)


@given(st.integers(2, 8), st.integers(0, 10 ** 6), st.sampled_from(SPECS))
@settings(max_examples=60, deadline=None)
def test_search_agrees_with_naive_on_small_graphs(n, seed, spec):
    rng = random.Random(seed)
    g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.45])
    if not is_connected(g):
        assert find_partition(g, spec).reason == "disconnected"
        return
    res = find_partition(g, spec)
    assert res.sat == naive(g, spec)
    assert res.sat == oracle_find_partition(g, spec).sat


@pytest.mark.skipif("compiled" not in BACKENDS, reason="extension not built")
@pytest.mark.parametrize("eg,spec", [(F.g_k(3), PATH_TREE), (F.h_22(), PATH_TREE), (F.prism(7), PATH_PATH)])
def test_backends_identical(eg, spec):
    a = find_partition(eg.graph, spec, "python")
    b = find_partition(eg.graph, spec, "compiled")
    assert (a.certificate, a.nodes, a.prunes) == (b.certificate, b.nodes, b.prunes)


def test_pins():
    assert not find_partition(F.g_k(4).graph, PATH_TREE)
    assert not find_partition(F.h_22().graph, PATH_PATH)
    assert find_partition(F.h_22().graph, PATH_TREE)
    assert find_partition(F.g_k(4).graph, TREE_TREE)
    assert find_partition(F.cube().graph, PATH_PATH)


def test_certificate_verification_rejects_tampering():
    g = cycle_graph(6)
    spec = PATH_PATH
    good = PartitionCertificate((0, 1, 2), (3, 4, 5), Shape.PATH, Shape.PATH)
    assert verify_certificate(g, good, spec)
    assert not verify_certificate(g, PartitionCertificate((0, 2, 4), (1, 3, 5), Shape.PATH, Shape.PATH), spec)
    assert not verify_certificate(g, PartitionCertificate((0, 1), (3, 4, 5), Shape.PATH, Shape.PATH), spec)
    assert not verify_certificate(g, good, PartitionSpec.of("path", "path", crossing=[(0, 1)]))


def random_cubic(n, seed):
    h = nx.random_regular_graph(3, n, seed=seed)
    return Graph(n, h.edges())


ALL_SPECS = [PartitionSpec.of(a, b) for a in ("path", "tree") for b in ("path", "tree")]


@pytest.mark.parametrize("seed", range(200))
def test_random_cubic_differential(seed):
    rng = random.Random(seed)
    n = rng.choice([8, 10, 12, 14, 16])
    g = random_cubic(n, seed)
    if not is_connected(g):
        return
    for spec in ALL_SPECS:
        res = find_partition(g, spec)
        orc = oracle_find_partition(g, spec)
        assert res.sat == orc.sat, (seed, spec)
        if res.sat:
            assert verify_certificate(g, res.certificate, spec)
            assert len(res.certificate.left) == len(res.certificate.right) == n // 2


@pytest.mark.parametrize("seed", range(100))
def test_path_tree_implies_tree_tree(seed):
    g = random_cubic(random.Random(seed).choice([10, 12, 14]), 1000 + seed)
    res = find_partition(g, PATH_TREE)
    if res.sat:
        assert verify_certificate(g, res.certificate, TREE_TREE)
        assert find_partition(g, TREE_TREE).sat


def test_equal_size_law_on_pins():
    for eg in (F.h_22(), F.g_k(4), F.prism(8)):
        res = find_partition(eg.graph, TREE_TREE)
        assert len(res.certificate.left) == len(res.certificate.right)


def test_swap_breaks_certificate():
    g = F.h_22().graph
    cert = find_partition(g, PATH_TREE).certificate
    broken = 0
    for v in cert.left:
        left = tuple(x for x in cert.left if x != v)
        right = tuple(sorted(cert.right + (v,)))
        fake = PartitionCertificate(left, right, cert.left_shape, cert.right_shape)
        broken += not verify_certificate(g, fake, PATH_TREE)
    assert broken == len(cert.left)


def test_h22_path_tree_certificates_have_acyclic_parts():
    """Every path-tree partition of H_22: neither part holds a 4-cycle."""
    g = F.h_22().graph
    masks = g.masks
    full = (1 << g.n) - 1
    found = 0
    for left in _pykernels._same_popcount(g.n, g.n // 2):
        right = full & ~left
        for p, t in ((left, right), (right, left)):
            if _pykernels.shape_ok(masks, p, True) and _pykernels.shape_ok(masks, t, False):
                found += 1
                for part in (p, t):
                    vs = [v for v in range(g.n) if part >> v & 1]
                    assert classify_induced(g, vs) in (Shape.PATH, Shape.TREE)
                    for a, b, c, d in itertools.permutations(vs, 4):
                        if a < min(b, c, d) and b < d:
                            assert not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                                        and g.has_edge(d, a))
    assert found > 0
