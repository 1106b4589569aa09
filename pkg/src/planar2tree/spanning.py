"""Hamiltonian cycles, spanning 2-trees, k-tree and k-degeneracy recognition,
4-block decomposition, and spanning maximal 2-degenerate subgraphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .embed import EmbeddedGraph, face_sides, dual, is_maximal_planar, restrict
from .graph import Graph, GraphError, Shape, bits, classify_induced, components, \
    induced, norm_edge, popcount, reach_mask, vertex_connectivity


class SpanningError(GraphError):
    pass


class InvariantViolation(SpanningError):
    """A search failed where a theorem guarantees success."""


Edge = tuple[int, int]


# -- Hamiltonian cycles --------------------------------------------------------------

def _forced_partners(g: Graph, forced: Iterable[Sequence[int]]) -> list[list[int]] | None:
    fp: list[list[int]] = [[] for _ in range(g.n)]
    seen = set()
    for e in forced:
        u, v = norm_edge(*e)
        if not g.has_edge(u, v):
            raise SpanningError(f"forced edge {u}-{v} is not an edge of the graph")
        if (u, v) in seen:
            continue
        seen.add((u, v))
        fp[u].append(v)
        fp[v].append(u)
    if any(len(p) > 2 for p in fp):
        return None
    # forced edges must not close a cycle shorter than n
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (u, v) in enumerate(sorted(seen)):
        ru, rv = find(u), find(v)
        if ru == rv and not (len(seen) == g.n and i == len(seen) - 1):
            return None
        parent[ru] = rv
    return fp


def iter_hamiltonian_cycles(g: Graph, forced: Iterable[Sequence[int]] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every Hamiltonian cycle containing ``forced`` exactly once.

    Cycles start at vertex 0 and are oriented so that the second vertex is
    smaller than the last.
    """
    n = g.n
    if n < 3:
        return
    fp = _forced_partners(g, forced)
    if fp is None:
        return
    masks = g.masks
    full = (1 << n) - 1
    start = 0
    path = [start]

    def viable(visited: int, cur: int) -> bool:
        rest = full & ~visited
        if not rest:
            return True
        ends = (1 << cur) | (1 << start)
        for w in bits(rest):
            if popcount(masks[w] & (rest | ends)) < 2:
                return False
            for x in fp[w]:
                if (visited >> x) & 1 and x not in (cur, start):
                    return False
        low = rest & -rest
        return reach_mask(masks, low.bit_length() - 1, rest) == rest

    def extend(cur: int, prev: int, visited: int) -> Iterator[tuple[int, ...]]:
        if len(path) == n:
            if not (masks[cur] >> start) & 1:
                return
            if any(x not in (prev, start) for x in fp[cur]):
                return
            if any(x not in (path[1], cur) for x in fp[start]):
                return
            if path[1] < cur:
                yield tuple(path)
            return
        need = [x for x in fp[cur] if x != prev]
        if cur == start:
            # either forced edge at the start may be the closing one
            cands = sorted(need) if len(need) == 2 else list(g.adj[cur])
        elif len(need) > 1:
            return
        elif need:
            cands = [need[0]] if not (visited >> need[0]) & 1 else []
        else:
            cands = [w for w in g.adj[cur] if not (visited >> w) & 1]
        for w in cands:
            nv = visited | (1 << w)
            if not viable(nv, w):
                continue
            path.append(w)
            yield from extend(w, cur, nv)
            path.pop()

    if n == 3:
        if g.size == 3:
            yield (0, 1, 2)
        return
    yield from extend(start, -1, 1 << start)


def find_hamiltonian_cycle(g: Graph, forced: Iterable[Sequence[int]] = ()) -> tuple[int, ...] | None:
    return next(iter_hamiltonian_cycles(g, forced), None)


def count_hamiltonian_cycles(g: Graph) -> int:
    return sum(1 for _ in iter_hamiltonian_cycles(g))


def is_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    n = g.n
    return (len(cycle) == n and set(cycle) == set(range(n)) and n >= 3
            and all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)))


def cycle_edges(cycle: Sequence[int]) -> set[Edge]:
    n = len(cycle)
    return {norm_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)}


# -- linear Hamiltonian cycles ---------------------------------------------------------

def linear_hamiltonian_check(eg: EmbeddedGraph, cycle: Sequence[int], _dual: Graph | None = None) -> tuple[bool, bool]:
    """Whether the faces on each side of ``cycle`` have a path as their dual.

    Side 0 is the side containing face 0.
    """
    side = face_sides(eg, cycle)
    d = _dual if _dual is not None else dual(eg).graph
    out = []
    for s in (0, 1):
        part = [i for i, x in enumerate(side) if x == s]
        out.append(classify_induced(d, part) is Shape.PATH)
    return out[0], out[1]


def has_linear_hamiltonian_cycle(eg: EmbeddedGraph) -> tuple[int, ...] | None:
    d = dual(eg).graph
    for c in iter_hamiltonian_cycles(eg.graph):
        if any(linear_hamiltonian_check(eg, c, d)):
            return c
    return None


def ham_cycle_from_dual_partition(eg: EmbeddedGraph, left_faces: Sequence[int]) -> tuple[int, ...] | None:
    """Hamiltonian cycle of a triangulation from a two-tree split of its faces.

    The edges whose two faces lie on different sides are returned as a
    cycle; None if they do not form a Hamiltonian cycle.
    """
    left = set(left_faces)
    g = eg.graph
    cross = {e for e in g.edges
             if (eg.face_of_dart(*e) in left) != (eg.face_of_dart(e[1], e[0]) in left)}
    nbr: dict[int, list[int]] = {}
    for u, v in cross:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if len(cross) != g.n or len(nbr) != g.n or any(len(x) != 2 for x in nbr.values()):
        return None
    cyc = [0]
    prev = -1
    while True:
        a, b = nbr[cyc[-1]]
        nxt = a if a != prev else b
        if nxt == 0:
            break
        prev = cyc[-1]
        cyc.append(nxt)
    return tuple(cyc) if len(cyc) == g.n else None


# -- 2-tree construction sequences ------------------------------------------------------

@dataclass(frozen=True)
class TwoTreeSequence:
    """Start from the clique ``base`` (2 or 3 vertices); each step adds a new
    vertex joined to both ends of an existing edge."""
    base: tuple[int, ...]
    steps: tuple[tuple[int, Edge], ...]

    @property
    def order(self) -> tuple[int, ...]:
        return self.base + tuple(w for w, _ in self.steps)

    def edges(self) -> set[Edge]:
        es = {norm_edge(u, v) for u, v in itertools.combinations(self.base, 2)}
        for w, (a, b) in self.steps:
            es.add(norm_edge(w, a))
            es.add(norm_edge(w, b))
        return es

    def validate(self, host: Graph | None = None) -> bool:
        """Attachment edges exist when used; vertices are new; edges lie in ``host``."""
        if len(self.base) not in (2, 3) or len(set(self.base)) != len(self.base):
            return False
        have = set(self.base)
        es = {norm_edge(u, v) for u, v in itertools.combinations(self.base, 2)}
        for w, (a, b) in self.steps:
            if w in have or norm_edge(a, b) not in es:
                return False
            have.add(w)
            es.add(norm_edge(w, a))
            es.add(norm_edge(w, b))
        if host is not None:
            if any(not host.has_edge(u, v) for u, v in es):
                return False
        return len(es) == 2 * len(have) - 3

    def spans(self, g: Graph) -> bool:
        return sorted(self.order) == list(range(g.n))

    def as_graph(self, n: int) -> Graph:
        return Graph(n, self.edges())


def recognize_k_tree(g: Graph, k: int) -> tuple[tuple[int, ...], list[tuple[int, tuple[int, ...]]]] | None:
    """Construction ``(base clique, [(vertex, attachment clique), ...])`` or None.

    Repeatedly removes a degree-k vertex whose neighbourhood is a clique.
    """
    n = g.n
    if k < 1 or n < k:
        return None
    if g.size != k * n - k * (k + 1) // 2:
        return None
    alive = set(range(n))
    nbrs = [set(row) for row in g.adj]
    removed: list[tuple[int, tuple[int, ...]]] = []
    while len(alive) > k:
        pick = None
        for v in sorted(alive):
            if len(nbrs[v]) == k and all(b in nbrs[a] for a, b in itertools.combinations(nbrs[v], 2)):
                pick = v
                break
        if pick is None:
            return None
        removed.append((pick, tuple(sorted(nbrs[pick]))))
        for w in nbrs[pick]:
            nbrs[w].discard(pick)
        alive.discard(pick)
    base = tuple(sorted(alive))
    if any(b not in nbrs[a] for a, b in itertools.combinations(base, 2)):
        return None
    return base, removed[::-1]


def two_tree_sequence(g: Graph) -> TwoTreeSequence | None:
    """``g`` as a 2-tree construction sequence, or None if it is not a 2-tree."""
    rec = recognize_k_tree(g, 2)
    if rec is None:
        return None
    base, steps = rec
    return TwoTreeSequence(base, tuple((w, norm_edge(*c)) for w, c in steps))


def is_two_tree(g: Graph) -> bool:
    return recognize_k_tree(g, 2) is not None


def reroot_two_tree(t: Graph, triangle: Sequence[int]) -> TwoTreeSequence:
    """Construction sequence of the 2-tree ``t`` starting from ``triangle``."""
    if not is_two_tree(t):
        raise SpanningError("input is not a 2-tree")
    tri = tuple(triangle)
    if len(set(tri)) != 3 or any(not t.has_edge(u, v) for u, v in itertools.combinations(tri, 2)):
        raise SpanningError(f"{tri} is not a triangle of the 2-tree")
    added = set(tri)
    queue = [norm_edge(u, v) for u, v in itertools.combinations(tri, 2)]
    steps = []
    masks = t.masks
    i = 0
    while i < len(queue):
        a, b = queue[i]
        i += 1
        for w in bits(masks[a] & masks[b]):
            if w in added:
                continue
            added.add(w)
            steps.append((w, (a, b)))
            queue += [norm_edge(w, a), norm_edge(w, b)]
    seq = TwoTreeSequence(tri, tuple(steps))
    if len(added) != t.n or seq.edges() != set(t.edges):
        raise InvariantViolation("rerooting did not reproduce the 2-tree")
    return seq


def two_tree_from_ham_cycle(eg: EmbeddedGraph, cycle: Sequence[int], side: int = 0) -> TwoTreeSequence:
    """Cycle edges plus every chord lying on one side of the cycle."""
    if side not in (0, 1):
        raise SpanningError("side must be 0 or 1")
    sides = face_sides(eg, cycle)
    cyc = cycle_edges(cycle)
    keep = set(cyc)
    for f, s in enumerate(sides):
        if s != side:
            continue
        for e in eg.faces()[f].edges():
            if e not in cyc:
                keep.add(e)
    seq = two_tree_sequence(eg.graph.edge_subgraph(keep))
    if seq is None:
        raise InvariantViolation("cycle plus one side's chords is not a 2-tree")
    return seq


# -- spanning 2-trees --------------------------------------------------------------------

def triangles(g: Graph) -> list[tuple[int, int, int]]:
    masks = g.masks
    out = []
    for u, v in g.edges:
        for w in bits(masks[u] & masks[v]):
            if w > v:
                out.append((u, v, w))
    return out


class _TriangleIndex:
    def __init__(self, g: Graph):
        self.g = g
        self.tris = triangles(g)
        self.by_edge: dict[Edge, list[int]] = {}
        self.by_vertex: list[list[int]] = [[] for _ in range(g.n)]
        for i, (a, b, c) in enumerate(self.tris):
            for e in ((a, b), (a, c), (b, c)):
                self.by_edge.setdefault(e, []).append(i)
            for v in (a, b, c):
                self.by_vertex[v].append(i)


def _grow(idx: _TriangleIndex, roots: Sequence[int], forbid_before_root: bool,
          hits: Sequence[Sequence[Edge]] = (), prune: bool = False,
          counter: list[int] | None = None) -> Iterator[tuple[list[tuple[int, Edge]], frozenset]]:
    """Enumerate spanning 2-trees as sets of triangles, each exactly once.

    Grows from each root triangle in turn, adding triangles that share an
    edge with the current 2-tree and bring one new vertex. Every triangle is
    decided once per branch (taken, or excluded for the rest of the branch),
    which makes each 2-tree reachable from exactly one root by exactly one
    branch. Triangles are allowed only if not forbidden by an earlier root.

    ``hits``: each entry lists edges of which at least one must be present.
    Yields ``(steps, edge set)`` with ``steps`` the vertex additions in order.
    """
    g = idx.g
    n = g.n
    tris = idx.tris
    ntri = len(tris)
    for ri, root in enumerate(roots):
        forbidden = set(roots[:ri]) if not forbid_before_root else set(range(root))
        a, b, c = tris[root]
        covered = {a, b, c}
        edges = {(a, b), (a, c), (b, c)}
        steps: list[tuple[int, Edge]] = []
        state = [0] * ntri  # 0 free, 1 seen/candidate, 2 in tree, 3 excluded
        for t in forbidden:
            state[t] = 3
        state[root] = 2
        untried = []
        for e in edges:
            for t in idx.by_edge[e]:
                if state[t] == 0:
                    state[t] = 1
                    untried.append(t)

        def feasible() -> bool:
            for v in range(n):
                if v in covered:
                    continue
                if not any(state[t] != 3 for t in idx.by_vertex[v]):
                    return False
            for group in hits:
                ok = False
                for e in group:
                    if e in edges:
                        ok = True
                        break
                    u, v = e
                    if u in covered and v in covered:
                        continue
                    if any(state[t] != 3 for t in idx.by_edge.get(e, ())):
                        ok = True
                        break
                if not ok:
                    return False
            return True

        def rec(untried: list[int]) -> Iterator[tuple[list[tuple[int, Edge]], frozenset]]:
            if counter is not None:
                counter[0] += 1
            if len(covered) == n:
                if all(any(e in edges for e in grp) for grp in hits):
                    yield list(steps), frozenset(edges)
                return
            if prune and not feasible():
                return
            untried = list(untried)
            excluded_here = []
            while untried:
                t = untried.pop()
                x, y, z = tris[t]
                new = [v for v in (x, y, z) if v not in covered]
                if len(new) == 1:
                    w = new[0]
                    p, q = [v for v in (x, y, z) if v != w]
                    e1, e2 = norm_edge(w, p), norm_edge(w, q)
                    covered.add(w)
                    edges.add(e1)
                    edges.add(e2)
                    steps.append((w, (p, q)))
                    state[t] = 2
                    fresh = []
                    for e in (e1, e2):
                        for s in idx.by_edge[e]:
                            if state[s] == 0:
                                state[s] = 1
                                fresh.append(s)
                    yield from rec(untried + fresh)
                    for s in fresh:
                        state[s] = 0
                    steps.pop()
                    edges.discard(e1)
                    edges.discard(e2)
                    covered.discard(w)
                state[t] = 3
                excluded_here.append(t)
                if prune and not feasible():
                    break
            for t in excluded_here:
                state[t] = 1

        yield from rec(untried)


def enumerate_spanning_two_trees(g: Graph) -> Iterator[frozenset]:
    """Every spanning 2-tree of ``g`` exactly once, as a set of edges."""
    if g.n < 3:
        return
    idx = _TriangleIndex(g)
    for _, es in _grow(idx, list(range(len(idx.tris))), forbid_before_root=True):
        yield es


def count_spanning_two_trees(g: Graph) -> int:
    return sum(1 for _ in enumerate_spanning_two_trees(g))


@dataclass
class SpanningSearchStats:
    reduced: list = field(default_factory=list)  # removed vertices, in order
    core_order: int = 0
    hits: int = 0
    nodes: int = 0


def _reduce_cubic_simplicial(g: Graph) -> tuple[list[int], list[tuple[int, tuple[int, int, int]]], list[list[Edge]]]:
    """Strip degree-3 vertices whose neighbourhood is a triangle.

    A spanning 2-tree of ``g`` exists iff one of ``g - x`` exists that keeps
    an edge of ``x``'s neighbour triangle, so each removal records that
    triangle as a hitting constraint. Vertices on constrained edges are kept.
    """
    alive = set(range(g.n))
    nbrs = [set(r) for r in g.adj]
    protected: set[int] = set()
    removed: list[tuple[int, tuple[int, int, int]]] = []
    hits: list[list[Edge]] = []
    changed = True
    while changed and len(alive) > 3:
        changed = False
        for x in sorted(alive):
            if len(alive) <= 3:
                break
            if x in protected or len(nbrs[x]) != 3:
                continue
            a, b, c = sorted(nbrs[x])
            if not (b in nbrs[a] and c in nbrs[a] and c in nbrs[b]):
                continue
            removed.append((x, (a, b, c)))
            hits.append([(a, b), (a, c), (b, c)])
            protected |= {a, b, c}
            for w in (a, b, c):
                nbrs[w].discard(x)
            alive.discard(x)
            changed = True
    return sorted(alive), removed, hits


def find_spanning_two_tree(g: Graph, stats: SpanningSearchStats | None = None) -> TwoTreeSequence | None:
    """A spanning 2-tree of ``g`` or None; exhaustive.

    Degree-3 vertices with a triangular neighbourhood are stripped first and
    turned into "keep one of these three edges" constraints on the rest,
    which are enforced while the core is searched.
    """
    if g.n < 3:
        return None
    keep, removed, hits = _reduce_cubic_simplicial(g)
    sub = induced(g, keep)
    core = sub.graph
    local = sub.from_host
    local_hits = [[norm_edge(local[u], local[v]) for u, v in grp] for grp in hits]
    if stats is not None:
        stats.reduced = [x for x, _ in removed]
        stats.core_order = core.n
        stats.hits = len(hits)
    idx = _TriangleIndex(core)
    if not idx.tris:
        return None
    # every spanning 2-tree has a triangle at the vertex with fewest triangles
    pivot = min(range(core.n), key=lambda v: (len(idx.by_vertex[v]), v))
    roots = sorted(idx.by_vertex[pivot])
    counter = [0]
    found = next(_grow(idx, roots, forbid_before_root=False, hits=local_hits, prune=True,
                       counter=counter), None)
    if stats is not None:
        stats.nodes = counter[0]
    if found is None:
        return None
    steps, _ = found
    base = _base_of(core, steps)
    host = sub.to_host
    edges = {norm_edge(host[u], host[v]) for u, v in found[1]}
    seq_steps = [(host[w], norm_edge(host[p], host[q])) for w, (p, q) in steps]
    for x, (a, b, c) in reversed(removed):
        for e in ((a, b), (a, c), (b, c)):
            if e in edges:
                seq_steps.append((x, e))
                edges.add(norm_edge(x, e[0]))
                edges.add(norm_edge(x, e[1]))
                break
        else:
            raise InvariantViolation("hitting constraint not satisfied by the core 2-tree")
    seq = TwoTreeSequence(tuple(host[v] for v in base), tuple(seq_steps))
    if not (seq.validate(g) and seq.spans(g)):
        raise InvariantViolation("reconstructed spanning 2-tree does not validate")
    return seq


def _base_of(core: Graph, steps: list[tuple[int, Edge]]) -> tuple[int, int, int]:
    added = {w for w, _ in steps}
    base = tuple(v for v in range(core.n) if v not in added)
    if len(base) != 3:
        raise InvariantViolation("root triangle not recoverable")
    return base


# -- k-degeneracy ------------------------------------------------------------------------

@dataclass(frozen=True)
class DegeneracyWitness:
    order: tuple[int, ...]     # deletion order
    degrees: tuple[int, ...]   # degree of each vertex just before its deletion

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def check(self, g: Graph, k: int) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        alive = set(range(g.n))
        for v, d in zip(self.order, self.degrees):
            real = sum(1 for w in g.adj[v] if w in alive)
            if real != d or d > k:
                return False
            alive.discard(v)
        return True


def degeneracy_order(g: Graph) -> DegeneracyWitness:
    """Greedy minimum-degree deletion order (ties to the smallest id)."""
    alive = set(range(g.n))
    deg = g.degrees()
    order, degs = [], []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        degs.append(deg[v])
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return DegeneracyWitness(tuple(order), tuple(degs))


def is_k_degenerate(g: Graph, k: int) -> bool:
    return degeneracy_order(g).max_degree() <= k


def is_maximal_k_degenerate(g: Graph, k: int) -> DegeneracyWitness | None:
    """Witness if ``g`` is k-degenerate with ``kn - k(k+1)/2`` edges, else None."""
    n = g.n
    if n < k or g.size != k * n - k * (k + 1) // 2:
        return None
    w = degeneracy_order(g)
    return w if w.max_degree() <= k else None


# -- 4-block decomposition ----------------------------------------------------------------

@dataclass
class Block:
    vertices: tuple[int, ...]     # host ids; local id i is vertices[i]
    embedding: EmbeddedGraph
    glue: tuple[int, int, int] | None = None   # host triangle shared with parent
    parent: int | None = None

    @property
    def is_k4(self) -> bool:
        return len(self.vertices) == 4


@dataclass
class BlockTree:
    blocks: list[Block]

    @property
    def gluing_triangles(self) -> list[tuple[int, int, int]]:
        return [b.glue for b in self.blocks if b.glue is not None]

    def __len__(self) -> int:
        return len(self.blocks)


def _separating_triangle(g: Graph) -> tuple[int, int, int] | None:
    if g.n <= 4:
        return None
    full = (1 << g.n) - 1
    for t in triangles(g):
        rest = full & ~sum(1 << v for v in t)
        low = rest & -rest
        if reach_mask(g.masks, low.bit_length() - 1, rest) != rest:
            return t
    return None


def four_block_tree(eg: EmbeddedGraph) -> BlockTree:
    """Split a maximal planar graph along separating triangles.

    Blocks come out in attachment order: the first block is the largest, and
    each later block shares its ``glue`` triangle with an earlier one.
    """
    if not is_maximal_planar(eg):
        raise SpanningError("four_block_tree needs a maximal planar embedding")
    g = eg.graph
    pieces: list[tuple[int, ...]] = []
    stack = [tuple(range(g.n))]
    while stack:
        vs = stack.pop()
        sub = induced(g, vs)
        t = _separating_triangle(sub.graph)
        if t is None:
            pieces.append(vs)
            continue
        host_t = [sub.to_host[v] for v in t]
        for comp in components(sub.graph, removed=t):
            stack.append(tuple(sorted([sub.to_host[v] for v in comp] + host_t)))
    pieces.sort(key=lambda p: (-len(p), p))
    root = pieces[0]
    ordered = [Block(root, restrict(eg, root)[0])]
    placed = {root}
    # attach by breadth-first search over shared triangles
    i = 0
    while i < len(ordered):
        cur = set(ordered[i].vertices)
        for p in pieces:
            if p in placed:
                continue
            shared = cur.intersection(p)
            if len(shared) == 3 and all(g.has_edge(u, v) for u, v in itertools.combinations(shared, 2)):
                placed.add(p)
                ordered.append(Block(p, restrict(eg, p)[0], tuple(sorted(shared)), i))
        i += 1
    if len(ordered) != len(pieces):
        raise InvariantViolation("block pieces do not form a tree")
    for b in ordered:
        if not (b.is_k4 or len(b.vertices) == 3 or vertex_connectivity(b.embedding.graph) >= 4):
            raise InvariantViolation(f"block {b.vertices} is neither K4 nor 4-connected")
    return BlockTree(ordered)


# -- spanning maximal 2-degenerate subgraph --------------------------------------------------

@dataclass
class Max2DegResult:
    subgraph: Graph
    base: Edge
    steps: list[tuple[int, Edge]]     # (new vertex, its two earlier neighbours)
    witness: DegeneracyWitness
    blocks: int


def _block_two_tree(block: Block, glue_local: tuple[int, int, int] | None) -> TwoTreeSequence:
    """Spanning 2-tree of a 4-block, started at ``glue_local`` when given."""
    eg = block.embedding
    g = eg.graph
    if g.n == 3:
        return TwoTreeSequence((0, 1, 2), ())
    if g.n == 4:
        tri = glue_local or (0, 1, 2)
        (x,) = [v for v in range(4) if v not in tri]
        return TwoTreeSequence(tuple(tri), ((x, norm_edge(tri[0], tri[1])),))
    if glue_local is None:
        c = find_hamiltonian_cycle(g)
        if c is None:
            raise InvariantViolation("4-connected block without a Hamiltonian cycle")
        seq = two_tree_from_ham_cycle(eg, c, 0)
        base = seq.base + ((seq.steps[0][0],) if len(seq.base) == 2 else ())
        return reroot_two_tree(seq.as_graph(g.n), base[:3])
    p, q, s = glue_local
    c = find_hamiltonian_cycle(g, [(p, q), (q, s)])
    if c is None:
        raise InvariantViolation("no Hamiltonian cycle through two edges of a face of a 4-connected block")
    sides = face_sides(eg, c)
    chord = norm_edge(p, s)
    side = None
    for f, face in enumerate(eg.faces()):
        if chord in face.edges():
            side = sides[f]
            break
    seq = two_tree_from_ham_cycle(eg, c, side)
    return reroot_two_tree(seq.as_graph(g.n), (p, q, s))


def spanning_max_2_degenerate(eg: EmbeddedGraph) -> Max2DegResult:
    """Spanning maximal 2-degenerate subgraph built block by block.

    Each block contributes a spanning 2-tree that contains its gluing
    triangle; the block's vertices are then added in that 2-tree's order
    starting from the triangle, and triangle edges missing from what was
    built so far are simply not added.
    """
    if eg.n < 3 or not is_maximal_planar(eg):
        raise SpanningError("need a maximal planar embedding of order >= 3")
    tree = four_block_tree(eg)
    edges: set[Edge] = set()
    steps: list[tuple[int, Edge]] = []
    base: Edge | None = None
    for r, block in enumerate(tree.blocks):
        vs = block.vertices
        local = {h: i for i, h in enumerate(vs)}
        glue_local = None if block.glue is None else tuple(local[h] for h in block.glue)
        seq = _block_two_tree(block, glue_local)
        if r == 0:
            b = [vs[v] for v in seq.base]
            base = norm_edge(b[0], b[1])
            edges.add(base)
            if len(b) == 3:
                steps.append((b[2], base))
                edges |= {norm_edge(b[2], b[0]), norm_edge(b[2], b[1])}
        for w, (a, c) in seq.steps:
            hw, ha, hc = vs[w], vs[a], vs[c]
            steps.append((hw, norm_edge(ha, hc)))
            edges |= {norm_edge(hw, ha), norm_edge(hw, hc)}
    m = eg.graph.edge_subgraph(edges)
    witness = is_maximal_k_degenerate(m, 2)
    if witness is None or len(steps) + 2 != eg.n:
        raise InvariantViolation("constructed subgraph is not spanning maximal 2-degenerate")
    # deletion order: reverse of construction
    order = [w for w, _ in reversed(steps)] + [base[1], base[0]]
    alive = set(range(eg.n))
    degs = []
    for v in order:
        degs.append(sum(1 for w in m.adj[v] if w in alive))
        alive.discard(v)
    construction_witness = DegeneracyWitness(tuple(order), tuple(degs))
    if not construction_witness.check(m, 2):
        raise InvariantViolation("construction order is not a 2-degeneracy witness")
    return Max2DegResult(m, base, steps, construction_witness, len(tree))
