"""Combinatorial plane embeddings given by rotation systems.

Rotations list each vertex's neighbours in clockwise order. A face is traced
from the directed edge ``(u, v)`` by stepping to ``(v, w)`` where ``w``
follows ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, norm_edge, vertex_connectivity, is_cubic, \
    has_nontrivial_3_edge_cut, is_connected, induced


class EmbeddingError(GraphError):
    pass


@dataclass(frozen=True)
class Face:
    darts: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)

    @property
    def length(self) -> int:
        return len(self.darts)

    def edges(self) -> list[tuple[int, int]]:
        return [norm_edge(u, v) for u, v in self.darts]

    def __len__(self) -> int:
        return len(self.darts)


class EmbeddedGraph:
    """A connected graph with a rotation system. Immutable."""

    __slots__ = ("graph", "rotation", "_pos", "_faces", "_dart_face")

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        if len(rotation) != graph.n:
            raise EmbeddingError("rotation system has wrong number of vertices")
        rot = tuple(tuple(r) for r in rotation)
        for v, r in enumerate(rot):
            if sorted(r) != list(graph.adj[v]) or len(set(r)) != len(r):
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")
        self.graph = graph
        self.rotation = rot
        self._pos = tuple({u: i for i, u in enumerate(r)} for r in rot)
        self._faces = None
        self._dart_face = None

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> "EmbeddedGraph":
        edges = {norm_edge(u, v) for u, r in enumerate(rotation) for v in r}
        return cls(Graph(len(rotation), edges), rotation)

    @classmethod
    def from_coordinates(cls, graph: Graph, coords: Sequence[tuple[float, float]]) -> "EmbeddedGraph":
        """Rotation of a straight-line drawing: neighbours by decreasing angle."""
        rot = []
        for v in range(graph.n):
            x0, y0 = coords[v]
            rot.append(sorted(graph.adj[v],
                              key=lambda w: -math.atan2(coords[w][1] - y0, coords[w][0] - x0)))
        return cls(graph, rot)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def size(self) -> int:
        return self.graph.size

    def succ(self, v: int, u: int) -> int:
        """Neighbour following ``u`` clockwise around ``v``."""
        r = self.rotation[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def faces(self) -> list[Face]:
        if self._faces is None:
            darts = sorted((u, v) for u in range(self.n) for v in self.rotation[u])
            seen: dict[tuple[int, int], int] = {}
            faces = []
            for d in darts:
                if d in seen:
                    continue
                walk = []
                cur = d
                while cur not in seen:
                    seen[cur] = len(faces)
                    walk.append(cur)
                    u, v = cur
                    cur = (v, self.succ(v, u))
                faces.append(Face(tuple(walk)))
            self._faces = faces
            self._dart_face = seen
        return list(self._faces)

    def face_of_dart(self, u: int, v: int) -> int:
        self.faces()
        return self._dart_face[(u, v)]

    def mirror(self) -> "EmbeddedGraph":
        return EmbeddedGraph(self.graph, [tuple(reversed(r)) for r in self.rotation])

    def relabel(self, perm: Sequence[int]) -> "EmbeddedGraph":
        rot = [None] * self.n
        for v, r in enumerate(self.rotation):
            rot[perm[v]] = tuple(perm[w] for w in r)
        return EmbeddedGraph(self.graph.relabel(perm), rot)

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, size={self.size})"


def faces(eg: EmbeddedGraph) -> list[Face]:
    return eg.faces()


def check_genus_zero(eg: EmbeddedGraph) -> bool:
    if not is_connected(eg.graph):
        return False
    return eg.n - eg.size + len(eg.faces()) == 2


def dual(eg: EmbeddedGraph) -> EmbeddedGraph:
    """Planar dual; dual vertex ``i`` is face ``i`` of ``eg.faces()``.

    The dual rotation at a face lists the faces across its boundary edges in
    traversal order.
    """
    if not check_genus_zero(eg):
        raise EmbeddingError("dual requires a connected genus-zero embedding")
    fs = eg.faces()
    rot = []
    for i, f in enumerate(fs):
        across = []
        for u, v in f.darts:
            j = eg.face_of_dart(v, u)
            if j == i:
                raise EmbeddingError(f"face {i} meets itself across edge {norm_edge(u, v)} (bridge)")
            across.append(j)
        if len(set(across)) != len(across):
            dup = sorted({j for j in across if across.count(j) > 1})
            raise EmbeddingError(f"faces {i} and {dup[0]} share more than one edge")
        rot.append(tuple(reversed(across)))
    return EmbeddedGraph.from_rotation(rot)


@dataclass(frozen=True)
class HamiltonianDual:
    side_a: tuple[int, ...]  # face ids, side containing face 0
    side_b: tuple[int, ...]
    tree_a: Graph            # induced dual subgraphs, vertices in side order
    tree_b: Graph


def face_sides(eg: EmbeddedGraph, cycle: Sequence[int]) -> list[int]:
    """Side (0 or 1) of each face relative to a Hamiltonian cycle.

    Faces sharing a non-cycle edge are on the same side; faces sharing a
    cycle edge are on opposite sides. Face 0 is on side 0.
    """
    n = eg.n
    g = eg.graph
    if len(cycle) != n or len(set(cycle)) != n:
        raise EmbeddingError("not a Hamiltonian cycle: wrong vertex multiset")
    cyc = set()
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        if not g.has_edge(u, v):
            raise EmbeddingError(f"not a cycle of the graph: missing edge ({u}, {v})")
        cyc.add(norm_edge(u, v))
    fs = eg.faces()
    side = [-1] * len(fs)
    side[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for u, v in fs[i].darts:
            j = eg.face_of_dart(v, u)
            want = side[i] ^ (1 if norm_edge(u, v) in cyc else 0)
            if side[j] == -1:
                side[j] = want
                stack.append(j)
            elif side[j] != want:
                raise EmbeddingError("inconsistent face sides; cycle does not separate the plane")
    return side


def hamiltonian_dual(eg: EmbeddedGraph, cycle: Sequence[int]) -> HamiltonianDual:
    side = face_sides(eg, cycle)
    d = dual(eg).graph
    a = tuple(i for i, s in enumerate(side) if s == 0)
    b = tuple(i for i, s in enumerate(side) if s == 1)
    return HamiltonianDual(a, b, induced(d, a).graph, induced(d, b).graph)


def is_maximal_planar(eg: EmbeddedGraph) -> bool:
    if eg.n < 3 or not check_genus_zero(eg):
        return False
    return all(f.length == 3 for f in eg.faces())


def stack_all_faces(eg: EmbeddedGraph) -> EmbeddedGraph:
    """Insert a new degree-3 vertex into every (triangular) face.

    The vertex for face ``i`` gets id ``n + i``.
    """
    if not check_genus_zero(eg):
        raise EmbeddingError("stacking requires a genus-zero embedding")
    fs = eg.faces()
    for i, f in enumerate(fs):
        if f.length != 3:
            raise EmbeddingError(f"face {i} has length {f.length}, expected a triangle")
    n = eg.n
    rot = [list(r) for r in eg.rotation] + [None] * len(fs)
    # insert the new vertex after u in rot[v] for each dart (u, v)
    inserts: dict[int, dict[int, int]] = {}
    for i, f in enumerate(fs):
        x = n + i
        for u, v in f.darts:
            inserts.setdefault(v, {})[u] = x
        a, b, c = f.vertices
        rot[x] = (a, c, b)
    for v, ins in inserts.items():
        new = []
        for u in eg.rotation[v]:
            new.append(u)
            if u in ins:
                new.append(ins[u])
        rot[v] = new
    return EmbeddedGraph.from_rotation(rot)


def stack_face(eg: EmbeddedGraph, face_index: int) -> EmbeddedGraph:
    """Insert one degree-3 vertex (id ``n``) into a triangular face."""
    f = eg.faces()[face_index]
    if f.length != 3:
        raise EmbeddingError("can only stack into a triangular face")
    n = eg.n
    rot = [list(r) for r in eg.rotation]
    for u, v in f.darts:
        r = rot[v]
        r.insert(r.index(u) + 1, n)
    a, b, c = f.vertices
    rot.append([a, c, b])
    return EmbeddedGraph.from_rotation(rot)


def glue_on_face(eg: EmbeddedGraph, face_index: int, block: EmbeddedGraph,
                 block_face: int) -> tuple[EmbeddedGraph, list[int]]:
    """Identify a triangular face of ``block`` with a triangular face of ``eg``,
    filling the host face with the block's interior.

    Returns the glued embedding and the id map from block vertices to the
    result (block vertices off the shared triangle get ids ``n, n+1, ...``).
    """
    hf = eg.faces()[face_index]
    bf = block.faces()[block_face]
    if hf.length != 3 or bf.length != 3:
        raise EmbeddingError("gluing requires two triangular faces")
    mirrored = block.mirror()
    hv = hf.vertices
    bv = bf.vertices
    vmap = [-1] * block.n
    for h, b in zip(hv, bv):
        vmap[b] = h
    nxt = eg.n
    for b in range(block.n):
        if vmap[b] == -1:
            vmap[b] = nxt
            nxt += 1
    rot: list[list[int]] = [list(r) for r in eg.rotation] + [[] for _ in range(nxt - eg.n)]
    for b in range(block.n):
        if b not in bv:
            rot[vmap[b]] = [vmap[w] for w in mirrored.rotation[b]]
    for i in range(3):
        x, prev, nxt_v = hv[i], hv[i - 1], hv[(i + 1) % 3]
        p, bprev, bnext = bv[i], bv[i - 1], bv[(i + 1) % 3]
        # block arc strictly between bprev and bnext (forward) in mirrored rotation
        br = mirrored.rotation[p]
        k = br.index(bprev)
        arc = []
        j = (k + 1) % len(br)
        while br[j] != bnext:
            arc.append(vmap[br[j]])
            j = (j + 1) % len(br)
        hr = rot[x]
        # in the host, nxt_v follows prev around x; the arc goes between them
        k = hr.index(prev)
        if hr[(k + 1) % len(hr)] != nxt_v:
            raise EmbeddingError("face orientation mismatch while gluing")
        rot[x] = hr[:k + 1] + arc + hr[k + 1:]
    return EmbeddedGraph.from_rotation(rot), vmap


def is_4mp(eg: EmbeddedGraph) -> bool:
    return is_maximal_planar(eg) and vertex_connectivity(eg.graph) >= 4


def is_4mp_dual(g: Graph | EmbeddedGraph, embedding: EmbeddedGraph | None = None) -> bool:
    """Cubic, 3-connected, planar (via the supplied embedding), order at least
    8, and free of nontrivial 3-edge cuts."""
    if isinstance(g, EmbeddedGraph):
        embedding = g
        g = g.graph
    if embedding is None or embedding.graph != g:
        raise EmbeddingError("is_4mp_dual needs a rotation system for the graph")
    if not is_cubic(g) or not check_genus_zero(embedding):
        return False
    if g.n < 8:  # K_4 is self-dual but not 4-connected; the cube is the smallest
        return False
    if vertex_connectivity(g) < 3:
        return False
    return not has_nontrivial_3_edge_cut(g)


# -- rot text format -----------------------------------------------------------

def format_rot(eg: EmbeddedGraph) -> str:
    lines = [f"rot {eg.n}"]
    for v, r in enumerate(eg.rotation):
        lines.append(f"{v}: " + " ".join(str(w) for w in r))
    return "\n".join(lines) + "\n"


def parse_rot(text: str) -> EmbeddedGraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise EmbeddingError("empty rot file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "rot":
        raise EmbeddingError("line 1: expected 'rot <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise EmbeddingError("line 1: order is not an integer") from None
    if len(lines) - 1 != n:
        raise EmbeddingError(f"expected {n} rotation lines, found {len(lines) - 1}")
    rot: list = [None] * n
    for lineno, ln in enumerate(lines[1:], start=2):
        if ":" not in ln:
            raise EmbeddingError(f"line {lineno}: missing ':'")
        left, right = ln.split(":", 1)
        try:
            v = int(left)
            nbrs = [int(t) for t in right.split()]
        except ValueError:
            raise EmbeddingError(f"line {lineno}: non-integer token") from None
        if not 0 <= v < n or rot[v] is not None:
            raise EmbeddingError(f"line {lineno}: bad or repeated vertex id {v}")
        rot[v] = nbrs
    for v, r in enumerate(rot):
        for w in r:
            if not 0 <= w < n or v not in rot[w]:
                raise EmbeddingError(f"rotation of {v} lists {w} asymmetrically")
    return EmbeddedGraph.from_rotation(rot)


def restrict(eg: EmbeddedGraph, vertices: Iterable[int]) -> tuple[EmbeddedGraph, tuple[int, ...]]:
    """Embedding induced on a vertex subset (relabelled densely), with the
    map from new ids to old ids."""
    keep = sorted(set(vertices))
    idx = {v: i for i, v in enumerate(keep)}
    rot = [[idx[w] for w in eg.rotation[v] if w in idx] for v in keep]
    return EmbeddedGraph.from_rotation(rot), tuple(keep)


def embedding_code(eg: EmbeddedGraph, reflect: bool = True) -> tuple:
    """Isomorphism invariant of a connected rotation system.

    Least breadth-first relabelling over all starting darts, and over both
    orientations when ``reflect``. Equal codes mean equal embeddings up to
    relabelling (and mirroring).
    """
    best = None
    variants = [eg.rotation]
    if reflect:
        variants.append(tuple(tuple(reversed(r)) for r in eg.rotation))
    for rot in variants:
        pos = [{w: i for i, w in enumerate(r)} for r in rot]
        for u in range(eg.n):
            for v in rot[u]:
                lab = {u: 0}
                ref = {u: v}
                queue = [u]
                code = []
                i = 0
                while i < len(queue):
                    x = queue[i]
                    i += 1
                    r = rot[x]
                    k = pos[x][ref[x]]
                    row = []
                    for j in range(len(r)):
                        w = r[(k + j) % len(r)]
                        if w not in lab:
                            lab[w] = len(queue)
                            ref[w] = x
                            queue.append(w)
                        row.append(lab[w])
                    code.append(tuple(row))
                c = tuple(code)
                if best is None or c < best:
                    best = c
    return best
