"""Constructors for the named graph families, with plane embeddings.

Vertex numbering
----------------
``g_k(k)``: ``a_i -> i``, ``b_i -> 2k + i``, ``c_i -> 4k + i`` for
``0 <= i < 2k``; the c-chords join ``c_{2j}`` and ``c_{2j+1}``, which is the
1-based pairing ``(c_1, c_2), (c_3, c_4), ...`` shifted down by one.

``h_22()``: ``a_i -> i``, ``b_i -> 8 + i`` for ``0 <= i < 8``; the six
c-vertices at positions 0, 1, 2, 3, 5, 6 get ids 16..21 in that order.
Spokes are ``a_4 b_4`` and ``a_7 b_7``.

Random generators use :class:`random.Random` (Mersenne Twister) seeded with
the given integer, so outputs are reproducible from the seed alone.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .embed import EmbeddedGraph, glue_on_face
from .graph import Graph, GraphError, complete_graph, cycle_graph, norm_edge


class FamilyError(GraphError):
    pass


def _ring(count: int, radius: float, offset: float = 0.0) -> list[tuple[float, float]]:
    return [(radius * math.cos(2 * math.pi * i / count + offset),
             radius * math.sin(2 * math.pi * i / count + offset)) for i in range(count)]


def k4() -> EmbeddedGraph:
    coords = _ring(3, 2.0) + [(0.0, 0.0)]
    return EmbeddedGraph.from_coordinates(complete_graph(4), coords)


def cycle(n: int) -> EmbeddedGraph:
    return EmbeddedGraph.from_coordinates(cycle_graph(n), _ring(n, 1.0))


def prism(r: int) -> EmbeddedGraph:
    """``C_r x K_2``: outer cycle ``0..r-1``, inner cycle ``r..2r-1``,
    spokes ``i -- r + i``."""
    if r < 3:
        raise FamilyError("prism needs r >= 3")
    edges = []
    for i in range(r):
        j = (i + 1) % r
        edges += [(i, j), (r + i, r + j), (i, r + i)]
    return EmbeddedGraph.from_coordinates(Graph(2 * r, edges), _ring(r, 2.0) + _ring(r, 1.0))


def prism_spokes(r: int) -> list[tuple[int, int]]:
    return [(i, r + i) for i in range(r)]


def cube() -> EmbeddedGraph:
    return prism(4)


def double_wheel(n: int) -> EmbeddedGraph:
    """``C_{n-2} + 2K_1``: rim ``0..n-3``, inner hub ``n-2``, outer hub ``n-1``."""
    if n < 6:
        raise FamilyError("double wheel needs n >= 6")
    m = n - 2
    hub, out = m, m + 1
    rot = []
    for i in range(m):
        rot.append(((i + 1) % m, out, (i - 1) % m, hub))
    rot.append(tuple(reversed(range(m))))
    rot.append(tuple(range(m)))
    return EmbeddedGraph.from_rotation(rot)


def octahedron() -> EmbeddedGraph:
    return double_wheel(6)


def g_k(k: int) -> EmbeddedGraph:
    """Three concentric ``2k``-rings a (inner cycle), c, b (outer cycle)."""
    if k < 2:
        raise FamilyError("G_k needs k >= 2")
    m = 2 * k
    a = list(range(m))
    b = [m + i for i in range(m)]
    c = [2 * m + i for i in range(m)]
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges += [(a[i], a[j]), (b[i], b[j]), (a[i], c[i]), (b[i], c[i])]
    for i in range(0, m, 2):
        edges.append((c[i], c[i + 1]))
    coords = _ring(m, 1.0) + _ring(m, 2.0) + _ring(m, 1.5)
    return EmbeddedGraph.from_coordinates(Graph(3 * m, edges), coords)


H22_C_POSITIONS = (0, 1, 2, 3, 5, 6)
H22_SPOKES = ((4, 12), (7, 15))


def h_22() -> EmbeddedGraph:
    a = list(range(8))
    b = [8 + i for i in range(8)]
    c = {p: 16 + i for i, p in enumerate(H22_C_POSITIONS)}
    edges = []
    for i in range(8):
        j = (i + 1) % 8
        edges += [(a[i], a[j]), (b[i], b[j])]
        if i in c:
            edges += [(a[i], c[i]), (c[i], b[i])]
        else:
            edges.append((a[i], b[i]))
    edges += [(c[0], c[1]), (c[2], c[3]), (c[5], c[6])]
    ring_c = _ring(8, 1.0)
    coords = _ring(8, 0.5) + _ring(8, 1.5) + [ring_c[p] for p in H22_C_POSITIONS]
    return EmbeddedGraph.from_coordinates(Graph(22, edges), coords)


# -- k-trees and maximal k-degenerate graphs -------------------------------------

def k_tree(k: int, sequence: Sequence[Sequence[int]] = ()) -> Graph:
    """Start from ``K_k`` on ``0..k-1``; vertex ``k + i`` is joined to the
    clique ``sequence[i]``."""
    if k < 1:
        raise FamilyError("k must be positive")
    edges = set(itertools.combinations(range(k), 2))
    n = k
    for clique in sequence:
        clique = tuple(clique)
        if len(set(clique)) != k or any(not 0 <= v < n for v in clique):
            raise FamilyError(f"step {n - k}: {clique} is not a set of {k} existing vertices")
        for u, v in itertools.combinations(clique, 2):
            if norm_edge(u, v) not in edges:
                raise FamilyError(f"step {n - k}: {clique} is not a clique")
        for v in clique:
            edges.add((v, n))
        n += 1
    return Graph(n, edges)


def random_k_tree_sequence(n: int, k: int, seed: int) -> list[tuple[int, ...]]:
    if n < k:
        raise FamilyError("need n >= k")
    rng = random.Random(seed)
    cliques = [tuple(range(k))]
    seq = []
    for v in range(k, n):
        base = rng.choice(cliques)
        seq.append(base)
        for drop in range(k):
            cliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (v,))))
    return seq


def random_k_tree(n: int, k: int, seed: int) -> Graph:
    return k_tree(k, random_k_tree_sequence(n, k, seed))


def random_maximal_k_degenerate(n: int, k: int, seed: int) -> Graph:
    """``K_k`` plus vertices each joined to ``k`` uniformly chosen earlier vertices."""
    if n < k:
        raise FamilyError("need n >= k")
    rng = random.Random(seed)
    edges = list(itertools.combinations(range(k), 2))
    for v in range(k, n):
        for u in rng.sample(range(v), k):
            edges.append((u, v))
    return Graph(n, edges)


# -- bricks ------------------------------------------------------------------

@dataclass(frozen=True)
class Brick:
    """A 6-cycle plus a chord between opposite vertices; ``cycle`` starts and
    is read from one chord end, so the chord is ``cycle[0] -- cycle[3]``."""
    cycle: tuple[int, int, int, int, int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @property
    def chord(self) -> tuple[int, int]:
        return norm_edge(self.cycle[0], self.cycle[3])


def find_bricks(g: Graph) -> list[Brick]:
    """All vertex sets inducing exactly a brick, one :class:`Brick` per set."""
    found: dict[frozenset[int], Brick] = {}
    adj = g.adj
    for x, y in g.edges:
        paths = [(p, q) for p in adj[x] if p != y for q in adj[p]
                 if q not in (x, y) and g.has_edge(q, y)]
        for (p, q), (r, s) in itertools.combinations(paths, 2):
            vs = frozenset((x, y, p, q, r, s))
            if len(vs) != 6 or vs in found:
                continue
            inner = sum(1 for u, v in itertools.combinations(vs, 2) if g.has_edge(u, v))
            if inner == 7:
                found[vs] = Brick((x, p, q, y, s, r))
    return [found[k] for k in sorted(found, key=sorted)]


def count_bricks(g: Graph) -> int:
    return len(find_bricks(g))


# -- random triangulations built from 4-blocks ----------------------------------------

def random_4block_triangulation(seed: int, max_order: int = 40) -> EmbeddedGraph:
    """A maximal planar graph grown by gluing random 4-blocks (``K_4`` or a
    random 4-connected triangulation) into random faces."""
    from .embed import dual
    from .handles import random_4mp_dual

    rng = random.Random(seed)

    def random_block(limit: int) -> EmbeddedGraph:
        if limit < 6 or rng.random() < 0.3:
            return k4()
        choice = rng.random()
        top = min(limit, 10)
        if choice < 0.5:
            return double_wheel(rng.randint(6, top))
        # dual order = (cubic order + 4) / 2
        cubic_order = 2 * rng.randint(6, top) - 4
        return dual(random_4mp_dual(cubic_order, rng.randrange(2 ** 32)))

    eg = random_block(max_order)
    while True:
        room = max_order - eg.n + 3
        if room < 4:
            return eg
        block = random_block(room)
        if eg.n + block.n - 3 > max_order:
            return eg
        eg, _ = glue_on_face(eg, rng.randrange(len(eg.faces())), block,
                             rng.randrange(len(block.faces())))
        if rng.random() < 0.15:
            return eg
