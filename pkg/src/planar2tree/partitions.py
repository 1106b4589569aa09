"""Two-part vertex partitions where each side induces a path or a tree.

``find_partition`` is a pruned exhaustive search; ``oracle_find_partition``
enumerates bipartitions with no pruning beyond the equal-size law and exists
to cross-check UNSAT answers. ``verify_certificate`` re-checks any answer
using only :func:`classify_induced` and set arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .graph import Graph, GraphError, Shape, bfs_order, classify_induced, is_connected, \
    is_cubic, mask_of, bits, norm_edge


class Part(enum.Enum):
    PATH = "path"
    TREE = "tree"  # any tree, paths included


class PartitionError(GraphError):
    pass


@dataclass(frozen=True)
class PartitionSpec:
    left: Part
    right: Part
    required_internal: frozenset = frozenset()
    required_crossing: frozenset = frozenset()

    @classmethod
    def of(cls, left: str | Part, right: str | Part, internal: Iterable[Sequence[int]] = (),
           crossing: Iterable[Sequence[int]] = ()) -> "PartitionSpec":
        internal = frozenset(norm_edge(*e) for e in internal)
        crossing = frozenset(norm_edge(*e) for e in crossing)
        if internal & crossing:
            raise PartitionError("an edge cannot be both required-internal and required-crossing")
        return cls(Part(left), Part(right), internal, crossing)

    @property
    def symmetric(self) -> bool:
        # edge constraints are invariant under swapping the sides
        return self.left == self.right

    def check_edges(self, g: Graph) -> None:
        for u, v in sorted(self.required_internal | self.required_crossing):
            if not g.has_edge(u, v):
                raise PartitionError(f"constraint edge {u}-{v} is not an edge of the graph")


PATH_PATH = PartitionSpec(Part.PATH, Part.PATH)
PATH_TREE = PartitionSpec(Part.PATH, Part.TREE)
TREE_TREE = PartitionSpec(Part.TREE, Part.TREE)


@dataclass(frozen=True)
class PartitionCertificate:
    left: tuple[int, ...]
    right: tuple[int, ...]
    left_shape: Shape
    right_shape: Shape


@dataclass
class SearchResult:
    certificate: PartitionCertificate | None
    nodes: int = 0
    prunes: int = 0
    reason: str = ""
    backend: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def sat(self) -> bool:
        return self.certificate is not None

    def __bool__(self) -> bool:
        return self.sat


def _shape_fits(shape: Shape, part: Part) -> bool:
    if part is Part.PATH:
        return shape is Shape.PATH
    return shape in (Shape.PATH, Shape.TREE)


def _certificate(g: Graph, left_mask: int) -> PartitionCertificate:
    left = tuple(bits(left_mask))
    right = tuple(v for v in range(g.n) if not (left_mask >> v) & 1)
    return PartitionCertificate(left, right, classify_induced(g, left), classify_induced(g, right))


def verify_certificate(g: Graph, cert: PartitionCertificate, spec: PartitionSpec) -> bool:
    left, right = set(cert.left), set(cert.right)
    if left & right or left | right != set(range(g.n)):
        return False
    if len(left) != len(cert.left) or len(right) != len(cert.right):
        return False
    ls, rs = classify_induced(g, left), classify_induced(g, right)
    if not (_shape_fits(ls, spec.left) and _shape_fits(rs, spec.right)):
        return False
    if (ls, rs) != (cert.left_shape, cert.right_shape):
        return False
    for u, v in spec.required_internal:
        if (u in left) != (v in left):
            return False
    for u, v in spec.required_crossing:
        if (u in left) == (v in left):
            return False
    return True


def _trivially_unsat(g: Graph) -> str:
    if g.n < 2:
        return "order < 2"
    if not is_connected(g):
        return "disconnected"
    if is_cubic(g) and g.n % 2:
        return "odd order"
    return ""


def find_partition(g: Graph, spec: PartitionSpec, backend: str | None = None) -> SearchResult:
    """Exhaustive pruned search; returns a verified certificate or UNSAT.

    Vertices are assigned in breadth-first order from vertex 0, left side
    first, so single-threaded answers are deterministic. For side-symmetric
    specs vertex 0 is fixed to the left.
    """
    spec.check_edges(g)
    reason = _trivially_unsat(g)
    impl = kernels.select(backend, g.n)
    if reason:
        return SearchResult(None, reason=reason, backend=impl.IMPLEMENTATION)
    left, nodes, prunes = impl.partition_search(
        g.n, g.masks, bfs_order(g, 0), spec.left is Part.PATH, spec.right is Part.PATH,
        sorted(spec.required_internal), sorted(spec.required_crossing),
        is_cubic(g), spec.symmetric)
    if left < 0:
        return SearchResult(None, nodes, prunes, reason="exhausted", backend=impl.IMPLEMENTATION)
    cert = _certificate(g, left)
    if not verify_certificate(g, cert, spec):
        raise AssertionError("search produced a certificate that does not verify")
    return SearchResult(cert, nodes, prunes, backend=impl.IMPLEMENTATION)


ORACLE_MAX_ORDER = 26


def oracle_find_partition(g: Graph, spec: PartitionSpec, backend: str | None = None) -> SearchResult:
    """Enumerate every bipartition (balanced ones for cubic graphs)."""
    if g.n > ORACLE_MAX_ORDER:
        raise PartitionError(f"oracle limited to order <= {ORACLE_MAX_ORDER}")
    spec.check_edges(g)
    impl = kernels.select(backend, g.n)
    if g.n < 2:
        return SearchResult(None, reason="order < 2", backend=impl.IMPLEMENTATION)
    left, checked = impl.partition_oracle(
        g.n, g.masks, spec.left is Part.PATH, spec.right is Part.PATH,
        sorted(spec.required_internal), sorted(spec.required_crossing), is_cubic(g))
    if left < 0:
        return SearchResult(None, checked, reason="enumerated", backend=impl.IMPLEMENTATION)
    cert = _certificate(g, left)
    if not verify_certificate(g, cert, spec):
        raise AssertionError("oracle produced a certificate that does not verify")
    return SearchResult(cert, checked, backend=impl.IMPLEMENTATION)


def parse_edge(text: str) -> tuple[int, int]:
    try:
        u, v = text.split("-")
        return norm_edge(int(u), int(v))
    except ValueError:
        raise PartitionError(f"bad edge {text!r}, expected u-v") from None


def left_mask(cert: PartitionCertificate) -> int:
    return mask_of(cert.left)
