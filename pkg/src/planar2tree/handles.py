"""Handles on embedded cubic graphs and the 4MP-dual closure from the cube.

A handle subdivides two edges lying on a common face and joins the two
subdivision vertices through that face. New vertices get ids ``n`` and
``n + 1``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .embed import EmbeddedGraph, EmbeddingError, check_genus_zero, embedding_code, is_4mp_dual
from .families import cube, prism
from .graph import canonical_form, find_isomorphism, is_cubic, norm_edge

Edge = tuple[int, int]


class HandleError(EmbeddingError):
    pass


@dataclass(frozen=True)
class HandleSite:
    e1: Edge
    e2: Edge
    face: int | None = None   # face index in the host embedding


def common_faces(eg: EmbeddedGraph, e1: Sequence[int], e2: Sequence[int]) -> list[int]:
    a, b = norm_edge(*e1), norm_edge(*e2)
    return [i for i, f in enumerate(eg.faces()) if a in f.edges() and b in f.edges()]


def add_handle(eg: EmbeddedGraph, e1: Sequence[int], e2: Sequence[int], face: int | None = None) -> EmbeddedGraph:
    """Subdivide ``e1`` (new vertex ``n``) and ``e2`` (new vertex ``n+1``),
    then join the two new vertices inside ``face``.

    ``face`` may be omitted when the edges share exactly one face.
    """
    g = eg.graph
    e1, e2 = norm_edge(*e1), norm_edge(*e2)
    for e in (e1, e2):
        if not g.has_edge(*e):
            raise HandleError(f"{e} is not an edge")
    if e1 == e2:
        raise HandleError("a handle on a single edge would create a multi-edge")
    shared = common_faces(eg, e1, e2)
    if not shared:
        raise HandleError(f"edges {e1} and {e2} share no face")
    if face is None:
        if len(shared) > 1:
            raise HandleError(f"edges border {len(shared)} common faces; choose one of {shared}")
        face = shared[0]
    elif face not in shared:
        raise HandleError(f"face {face} does not contain both edges")
    darts = eg.faces()[face].darts
    (a, b), = [d for d in darts if norm_edge(*d) == e1]
    (c, d), = [x for x in darts if norm_edge(*x) == e2]
    n = eg.n
    y, z = n, n + 1
    rot = [list(r) for r in eg.rotation]
    for p, q, s in ((a, b, y), (b, a, y), (c, d, z), (d, c, z)):
        rot[p][rot[p].index(q)] = s
    rot.append([a, z, b])
    rot.append([c, y, d])
    out = EmbeddedGraph.from_rotation(rot)
    if not check_genus_zero(out):
        raise HandleError("handle broke planarity")  # unreachable for a valid face
    return out


def remove_handle(eg: EmbeddedGraph, y: int, z: int) -> EmbeddedGraph:
    """Delete the edge ``yz`` and suppress ``y`` and ``z`` (ids are compacted)."""
    g = eg.graph
    if not g.has_edge(y, z) or g.degree(y) != 3 or g.degree(z) != 3:
        raise HandleError("yz must be an edge between degree-3 vertices")
    rot = [list(r) for r in eg.rotation]
    new_edges = []
    for x, other in ((y, z), (z, y)):
        p, q = [w for w in rot[x] if w != other]
        if p == q or g.has_edge(p, q) or {p, q} & {y, z}:
            raise HandleError("removing the handle would create a multi-edge or loop")
        rot[p][rot[p].index(x)] = q
        rot[q][rot[q].index(x)] = p
        new_edges.append(norm_edge(p, q))
    if new_edges[0] == new_edges[1]:
        raise HandleError("removing the handle would create a multi-edge")
    keep = [v for v in range(eg.n) if v not in (y, z)]
    idx = {v: i for i, v in enumerate(keep)}
    return EmbeddedGraph.from_rotation([[idx[w] for w in rot[v]] for v in keep])


def handle_sites(eg: EmbeddedGraph) -> Iterator[HandleSite]:
    """Every (edge pair, face) with both edges on that face."""
    for i, f in enumerate(eg.faces()):
        es = sorted(set(f.edges()))
        for e1, e2 in itertools.combinations(es, 2):
            yield HandleSite(e1, e2, i)


def four_handle(eg: EmbeddedGraph, face: int, pair: int | tuple[Edge, Edge] = 0) -> EmbeddedGraph:
    """Handle between opposite edges of a length-4 face of a 4MP dual.

    ``pair`` 0 uses the face's first and third edges, 1 the second and
    fourth; an explicit edge pair is also accepted.
    """
    if not is_4mp_dual(eg):
        raise HandleError("four_handle needs a 4MP dual")
    f = eg.faces()[face]
    if f.length != 4:
        raise HandleError(f"face {face} has length {f.length}, not 4")
    es = f.edges()
    if isinstance(pair, int):
        if pair not in (0, 1):
            raise HandleError("pair index must be 0 or 1")
        e1, e2 = es[pair], es[pair + 2]
    else:
        e1, e2 = norm_edge(*pair[0]), norm_edge(*pair[1])
        if {e1, e2} not in ({es[0], es[2]}, {es[1], es[3]}):
            raise HandleError("edges are not an opposite pair of the face")
    out = add_handle(eg, e1, e2, face)
    if not is_4mp_dual(out):
        raise HandleError("4-handling did not produce a 4MP dual")
    return out


def four_handle_sites(eg: EmbeddedGraph) -> list[tuple[int, int]]:
    return [(i, p) for i, f in enumerate(eg.faces()) if f.length == 4 for p in (0, 1)]


# -- closure and families ----------------------------------------------------------

@dataclass
class Closure:
    strata: dict[int, dict[tuple, EmbeddedGraph]]

    def members(self, order: int | None = None) -> list[EmbeddedGraph]:
        orders = sorted(self.strata) if order is None else [order]
        return [self.strata[o][k] for o in orders for k in sorted(self.strata.get(o, {}))]

    def counts(self) -> dict[int, int]:
        return {o: len(s) for o, s in sorted(self.strata.items())}


def handle_closure(max_order: int) -> Closure:
    """4MP duals reachable from the cube by handles, stratified by order.

    Each stratum is generated from the previous one and filtered to 4MP
    duals; members are keyed by canonical form.
    """
    if max_order > 16:
        raise HandleError("handle_closure is limited to order 16")
    start = cube()
    strata: dict[int, dict[tuple, EmbeddedGraph]] = {}
    if max_order >= 8:
        strata[8] = {canonical_form(start.graph): start}
    order = 8
    while order + 2 <= max_order:
        nxt: dict[tuple, EmbeddedGraph] = {}
        for key in sorted(strata[order]):
            eg = strata[order][key]
            for site in handle_sites(eg):
                h = add_handle(eg, site.e1, site.e2, site.face)
                if not is_4mp_dual(h):
                    continue
                cf = canonical_form(h.graph)
                nxt.setdefault(cf, h)
        strata[order + 2] = nxt
        order += 2
    return Closure(strata)


def prism_handle_family(r: int, h: int) -> list[EmbeddedGraph]:
    """All 4MP duals from ``prism(r)`` plus ``h`` handles, one per isomorphism class."""
    if r < 4 or h not in (0, 1, 2):
        raise HandleError("need r >= 4 and h in {0, 1, 2}")
    level = {embedding_code(prism(r)): prism(r)}
    for _ in range(h):
        nxt: dict[tuple, EmbeddedGraph] = {}
        for key in sorted(level):
            eg = level[key]
            for site in handle_sites(eg):
                out = add_handle(eg, site.e1, site.e2, site.face)
                nxt.setdefault(embedding_code(out), out)
        level = nxt
    final: dict[tuple, EmbeddedGraph] = {}
    for key in sorted(level):
        eg = level[key]
        if is_4mp_dual(eg):
            final.setdefault(canonical_form(eg.graph), eg)
    return [final[k] for k in sorted(final)]


def random_4mp_dual(cubic_order: int, seed: int) -> EmbeddedGraph:
    """Random 4MP dual of the given even order >= 8, grown from the cube."""
    if cubic_order < 8 or cubic_order % 2:
        raise HandleError("order must be even and at least 8")
    rng = random.Random(seed)
    eg = cube()
    while eg.n < cubic_order:
        sites = list(handle_sites(eg))
        rng.shuffle(sites)
        for s in sites:
            out = add_handle(eg, s.e1, s.e2, s.face)
            if is_4mp_dual(out):
                eg = out
                break
        else:
            raise HandleError("no handle keeps the graph a 4MP dual")  # never seen
    return eg


# -- handle sequences from a prism -------------------------------------------------

@dataclass
class HandleSequence:
    prism_r: int
    sites: list[HandleSite]          # applied in order starting from prism(prism_r)
    graphs: list[EmbeddedGraph]      # prism, then each intermediate result


def _removable_handles(eg: EmbeddedGraph) -> Iterator[Edge]:
    g = eg.graph
    for y, z in g.edges:
        try:
            remove_handle(eg, y, z)
        except HandleError:
            continue
        yield (y, z)


def handle_sequence_from_prism(target: EmbeddedGraph, handles: int) -> HandleSequence | None:
    """Find ``prism(r)`` and ``handles`` handle sites rebuilding ``target``.

    Works backwards by removing handles until a prism appears, then replays
    the chain forwards from the library prism embedding.
    """
    if not is_cubic(target.graph):
        raise HandleError("target must be cubic")
    r = target.n // 2 - handles
    if r < 3:
        return None
    want = canonical_form(prism(r).graph)
    seen: set[tuple] = set()

    def back(eg: EmbeddedGraph, depth: int) -> list[EmbeddedGraph] | None:
        if depth == 0:
            return [eg] if canonical_form(eg.graph) == want else None
        code = embedding_code(eg)
        if (code, depth) in seen:
            return None
        seen.add((code, depth))
        for y, z in _removable_handles(eg):
            chain = back(remove_handle(eg, y, z), depth - 1)
            if chain is not None:
                return chain + [eg]
        return None

    chain = back(target, handles)
    if chain is None:
        return None
    cur = prism(r)
    graphs = [cur]
    sites = []
    for nxt in chain[1:]:
        step = None
        for site in handle_sites(cur):
            out = add_handle(cur, site.e1, site.e2, site.face)
            p = find_isomorphism(nxt.graph, out.graph)
            if p is not None:
                step = (site, out, p)
                break
        if step is None:
            raise HandleError("forward replay of the handle chain failed")
        site, cur, _ = step
        sites.append(site)
        graphs.append(cur)
    if find_isomorphism(cur.graph, target.graph) is None:
        raise HandleError("replayed chain does not rebuild the target")
    return HandleSequence(r, sites, graphs)
