"""Simple undirected graphs over dense integer vertex ids.

Graphs are immutable after construction. Adjacency lists are kept sorted so
that everything derived from them (induced subgraphs, search orders,
certificates) is deterministic.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_edges", "_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("order must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"multi-edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in self._adj[u] if u < v))
        self._masks = None
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        edges = {norm_edge(u, v) for u, row in enumerate(adj) for v in row}
        return cls(len(adj), edges)

    # -- basic accessors -------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    order = n

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks (bit ``v`` set for each neighbour ``v``)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in row) for row in self._adj)
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and (self.masks[u] >> v) & 1 == 1

    def vertices(self) -> range:
        return range(self._n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, size={self.size})"

    # -- derived graphs ----------------------------------------------------
    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self._n, list(self._edges) + [tuple(e) for e in extra])

    def remove_edges(self, drop: Iterable[Sequence[int]]) -> "Graph":
        gone = {norm_edge(*e) for e in drop}
        return Graph(self._n, (e for e in self._edges if e not in gone))

    def edge_subgraph(self, keep: Iterable[Sequence[int]]) -> "Graph":
        """Spanning subgraph with the given edges (which must belong to self)."""
        keep = {norm_edge(*e) for e in keep}
        for u, v in keep:
            if not self.has_edge(u, v):
                raise GraphError(f"edge ({u}, {v}) not in graph")
        return Graph(self._n, keep)


class InducedSubgraph:
    """An induced subgraph together with the id mapping back to the host."""

    __slots__ = ("graph", "to_host", "from_host")

    def __init__(self, graph: Graph, to_host: tuple[int, ...]):
        self.graph = graph
        self.to_host = to_host
        self.from_host = {h: i for i, h in enumerate(to_host)}

    def __repr__(self) -> str:
        return f"InducedSubgraph({self.graph!r}, to_host={self.to_host})"


def induced(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for order {g.n}")
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx]
    return InducedSubgraph(Graph(len(verts), edges), tuple(verts))


# -- traversal -------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reach_mask(masks: Sequence[int], start: int, within: int) -> int:
    """Vertices reachable from ``start`` using only vertices of ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bfs_order(g: Graph, start: int = 0) -> list[int]:
    """Breadth-first vertex order from ``start``, then any unreached vertices."""
    order: list[int] = []
    seen = [False] * g.n
    for s in itertools.chain([start], range(g.n)):
        if s >= g.n or seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def is_cubic(g: Graph) -> bool:
    return all(len(row) == 3 for row in g.adj)


# -- connectivity ------------------------------------------------------------

def _max_vertex_disjoint_paths(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths, stopping at ``cap``.

    Unit-capacity max flow on the split graph (v_in -> v_out); node ``2v`` is
    v_in and ``2v+1`` is v_out.
    """
    n = g.n
    # residual capacities keyed by (a, b)
    cap_map: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_map:
            out[a].append(b)
            out[b].append(a)
            cap_map[(a, b)] = 0
            cap_map.setdefault((b, a), 0)
        cap_map[(a, b)] += c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap_map[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap_map[(a, b)] -= 1
            cap_map[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; ``n - 1`` for complete graphs, 0 if disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            best = min(best, _max_vertex_disjoint_paths(g, u, v, best))
            if best == 0:
                return 0
    return best


def has_nontrivial_3_edge_cut(g: Graph) -> bool:
    """Whether some 3-edge cut leaves at least two vertices on each side."""
    if not is_cubic(g):
        raise GraphError("nontrivial 3-edge cuts are only defined here for cubic graphs")
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    edges = g.edges
    for triple in itertools.combinations(edges, 3):
        drop = set(triple)
        cut_masks = list(masks)
        for u, v in triple:
            cut_masks[u] &= ~(1 << v)
            cut_masks[v] &= ~(1 << u)
        comps = []
        left = full
        while left:
            start = (left & -left).bit_length() - 1
            comp = reach_mask(cut_masks, start, full)
            comps.append(comp)
            left &= ~comp
        if len(comps) < 2:
            continue
        for r in range(1, len(comps)):
            for pick in itertools.combinations(comps, r):
                side = 0
                for c in pick:
                    side |= c
                size = popcount(side)
                if size < 2 or size > n - 2:
                    continue
                boundary = [e for e in edges if ((side >> e[0]) & 1) != ((side >> e[1]) & 1)]
                if len(boundary) == 3 and set(boundary) == drop:
                    return True
    return False


# -- induced shapes ----------------------------------------------------------

class Shape(enum.Enum):
    PATH = "path"
    TREE = "tree"  # connected, acyclic, some vertex of induced degree >= 3
    CYCLIC = "cycle-containing"
    DISCONNECTED = "disconnected"
    EMPTY = "empty"


def popcount(x: int) -> int:
    return bin(x).count("1")


def classify_induced(g: Graph, s: Iterable[int]) -> Shape:
    """Shape of the subgraph induced by ``s``.

    A single vertex counts as a path. ``TREE`` means a tree that is not a path.
    Acyclic but disconnected sets report ``DISCONNECTED``; connected sets with
    a cycle report ``CYCLIC``.
    """
    sm = mask_of(s)
    if sm == 0:
        return Shape.EMPTY
    masks = g.masks
    degs = [popcount(masks[v] & sm) for v in bits(sm)]
    k = len(degs)
    m = sum(degs) // 2
    start = (sm & -sm).bit_length() - 1
    connected = reach_mask(masks, start, sm) == sm
    if not connected:
        return Shape.DISCONNECTED
    if m != k - 1:
        return Shape.CYCLIC
    return Shape.PATH if max(degs) <= 2 else Shape.TREE


# -- canonical form ----------------------------------------------------------

def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition.

    Colours are renumbered by sorting (old colour, neighbour colour multiset)
    signatures, so the result is isomorphism-invariant.
    """
    adj = g.adj
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(g.n)]
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [table[sig] for sig in sigs]
        if len(table) == ncls:
            return new
        colors, ncls = new, len(table)


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    # v goes first within its old cell; other colours shift to stay distinct
    return [2 * x + (1 if (x == c and u != v) else 0) if x <= c else 2 * x + 1
            for u, x in enumerate(colors)]


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    return canonical_labeling(g)[0]


def canonical_labeling(g: Graph) -> tuple[tuple[int, tuple[tuple[int, int], ...]], list[int]]:
    """Canonical form plus the labelling ``v -> canonical label`` producing it.

    Canonical ``(n, sorted edge list)`` under a canonical relabelling.

    Individualise/refine search over the first smallest non-singleton cell;
    the certificate is the lexicographically least relabelled edge list among
    all leaves. Automorphisms found at leaves prune sibling branches.
    """
    n = g.n
    if n == 0:
        return (0, ()), []
    best: list = [None, None]  # certificate, labelling
    autos: list[list[int]] = []

    def cert_of(colors: list[int]) -> tuple[tuple[int, int], ...]:
        # colors is discrete: colour rank gives the new label
        rank = {c: i for i, c in enumerate(sorted(colors))}
        lab = [rank[c] for c in colors]
        return tuple(sorted(norm_edge(lab[u], lab[v]) for u, v in g.edges)), lab

    def search(colors: list[int], prefix: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        nonsingle = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
        if not nonsingle:
            cert, lab = cert_of(colors)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, lab
            elif cert == best[0]:
                # lab^-1 o best gives an automorphism
                inv = [0] * n
                for v, l in enumerate(lab):
                    inv[l] = v
                autos.append([inv[best[1][v]] for v in range(n)])
            return
        _, target = min(nonsingle)
        explored: list[int] = []
        for v in cells[target]:
            if explored and _same_orbit(v, explored, prefix, autos, n):
                continue
            explored.append(v)
            search(_refine(g, _individualize(colors, v)), prefix + [v])

    search(_refine(g, [0] * n), [])
    return (n, best[0]), best[1]


def _same_orbit(v: int, explored: list[int], prefix: list[int], autos: list[list[int]], n: int) -> bool:
    """Whether ``v`` is in the orbit of an explored vertex under the known
    automorphisms that fix ``prefix`` pointwise."""
    gens = [a for a in autos if all(a[p] == p for p in prefix)]
    if not gens:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in gens:
        for x in range(n):
            rx, ry = find(x), find(a[x])
            if rx != ry:
                parent[rx] = ry
    rv = find(v)
    return any(find(u) == rv for u in explored)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.size == h.size and canonical_form(g) == canonical_form(h)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A map ``perm`` with ``g.relabel(perm) == h``, or None."""
    if g.n != h.n or g.size != h.size:
        return None
    cg, lg = canonical_labeling(g)
    ch, lh = canonical_labeling(h)
    if cg != ch:
        return None
    inv = [0] * h.n
    for v, l in enumerate(lh):
        inv[l] = v
    return [inv[lg[v]] for v in range(g.n)]


# -- graph6 ------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    masks = g.masks
    bitstream = [(masks[j] >> i) & 1 for j in range(1, n) for i in range(j)]
    while len(bitstream) % 6:
        bitstream.append(0)
    body = [
        sum(bitstream[k + t] << (5 - t) for t in range(6)) + 63
        for k in range(0, len(bitstream), 6)
    ]
    return bytes(head + body).decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 byte {b!r}", base + i)
    if not data:
        raise Graph6Error("empty graph6 string", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated order field", base + len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated order field", base + len(data))
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        off = base + min(len(data), pos + need)
        raise Graph6Error(f"expected {need} body bytes for order {n}, got {len(data) - pos}", off)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero for a bit-exact round trip
    if nbits % 6:
        last = data[pos + need - 1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, edges)


# -- small constructors used throughout ---------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))
