"""Line-oriented certificate bundles and their offline verifier.

Layout::

    planar2tree-bundle 1
    meta <key> <value>
    graph <name> <order> <size> <sha256 of graph6> <graph6>
    rotation <name> <rotation: neighbours space-separated, vertices '|'-separated>
    record <claim id>
    <key> <value>
    ...
    end

Keys inside a record keep the order in which they were added, and the
writer never emits timings, so equal runs give byte-identical files.
Verification only re-checks stored certificates; it never searches.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .embed import EmbeddedGraph, dual, is_maximal_planar, stack_all_faces
from .graph import Graph, classify_induced, graph6_decode, graph6_encode
from .partitions import PartitionCertificate, PartitionSpec, verify_certificate
from .spanning import DegeneracyWitness, TwoTreeSequence, is_maximal_k_degenerate, recognize_k_tree

HEADER = "planar2tree-bundle 1"
UNSAT_MODES = {"exhaustive-search", "oracle-enumeration", "exhaustive-enumeration"}


class BundleError(ValueError):
    pass


def digest(g: Graph) -> str:
    return hashlib.sha256(graph6_encode(g).encode()).hexdigest()


def format_rotation(eg: EmbeddedGraph) -> str:
    return "|".join(" ".join(map(str, r)) for r in eg.rotation)


def parse_rotation(text: str) -> EmbeddedGraph:
    return EmbeddedGraph.from_rotation([[int(t) for t in part.split()] for part in text.split("|")])


def ints(text: str) -> list[int]:
    return [int(t) for t in text.split()]


def format_steps(steps) -> str:
    return " ".join(f"{w}:{a}-{b}" for w, (a, b) in steps)


def parse_steps(text: str) -> list[tuple[int, tuple[int, int]]]:
    out = []
    for tok in text.split():
        w, ab = tok.split(":")
        a, b = ab.split("-")
        out.append((int(w), (int(a), int(b))))
    return out


@dataclass
class Record:
    claim: str
    fields: list[tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value: object) -> "Record":
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.fields.append((key, str(value)))
        return self

    def get(self, key: str, default: str | None = None) -> str | None:
        for k, v in self.fields:
            if k == key:
                return v
        return default


@dataclass
class Bundle:
    meta: list[tuple[str, str]] = field(default_factory=list)
    graphs: dict[str, Graph] = field(default_factory=dict)
    rotations: dict[str, EmbeddedGraph] = field(default_factory=dict)
    records: list[Record] = field(default_factory=list)

    def add_graph(self, name: str, g: Graph | EmbeddedGraph) -> None:
        if isinstance(g, EmbeddedGraph):
            self.rotations[name] = g
            g = g.graph
        self.graphs[name] = g

    def record(self, claim: str) -> Record:
        r = Record(claim)
        self.records.append(r)
        return r

    def dumps(self) -> str:
        lines = [HEADER]
        lines += [f"meta {k} {v}" for k, v in self.meta]
        for name, g in self.graphs.items():
            lines.append(f"graph {name} {g.n} {g.size} {digest(g)} {graph6_encode(g)}")
            if name in self.rotations:
                lines.append(f"rotation {name} {format_rotation(self.rotations[name])}")
        for r in self.records:
            lines.append(f"record {r.claim}")
            lines += [f"{k} {v}" for k, v in r.fields]
            lines.append("end")
        return "\n".join(lines) + "\n"


def loads(text: str) -> Bundle:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise BundleError("line 1: not a planar2tree bundle")
    b = Bundle()
    cur: Record | None = None
    for no, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        key, _, rest = ln.partition(" ")
        if cur is not None:
            if key == "end":
                cur = None
            else:
                cur.fields.append((key, rest))
            continue
        try:
            if key == "meta":
                k, _, v = rest.partition(" ")
                b.meta.append((k, v))
            elif key == "graph":
                name, n, m, sha, g6 = rest.split(" ")
                g = graph6_decode(g6)
                if g.n != int(n) or g.size != int(m):
                    raise BundleError(f"line {no}: order/size do not match graph6 for {name}")
                if digest(g) != sha:
                    raise BundleError(f"line {no}: digest mismatch for {name}")
                b.graphs[name] = g
            elif key == "rotation":
                name, _, rot = rest.partition(" ")
                eg = parse_rotation(rot)
                if name not in b.graphs or eg.graph != b.graphs[name]:
                    raise BundleError(f"line {no}: rotation of {name} does not match its graph")
                b.rotations[name] = eg
            elif key == "record":
                cur = b.record(rest)
            else:
                raise BundleError(f"line {no}: unknown line type {key!r}")
        except BundleError:
            raise
        except (ValueError, KeyError) as exc:
            raise BundleError(f"line {no}: {exc}") from None
    if cur is not None:
        raise BundleError("unterminated record at end of file")
    return b


# -- verification --------------------------------------------------------------------

def _verify_record(b: Bundle, r: Record) -> str | None:
    """Failure message, or None when the record checks out."""
    status = r.get("status")
    check = r.get("check", "")
    if status == "UNSAT":
        if r.get("mode") not in UNSAT_MODES:
            return "UNSAT record does not name a completeness mode"
        if not any(k in ("nodes", "checked", "enumerated") for k, _ in r.fields):
            return "UNSAT record has no exhaustion statistics"
        return None
    if status not in ("SAT", "TRUE"):
        return f"unknown status {status!r}"
    name = r.get("graph")
    if name not in b.graphs:
        return f"unknown graph {name!r}"
    g = b.graphs[name]
    eg = b.rotations.get(name)
    if check == "maximal-planar":
        if eg is None or not is_maximal_planar(eg):
            return "not maximal planar"
        if int(r.get("faces", "-1")) != len(eg.faces()):
            return "face count mismatch"
    elif check == "dual-of":
        src = b.rotations.get(r.get("source", ""))
        if src is None or eg is None or dual(src).rotation != eg.rotation:
            return "graph is not the dual of its source"
    elif check == "stacked-from":
        src = b.rotations.get(r.get("source", ""))
        if src is None or eg is None or stack_all_faces(src).rotation != eg.rotation:
            return "graph is not the face-stacking of its source"
    elif check == "partition":
        left, right = tuple(ints(r.get("left", ""))), tuple(ints(r.get("right", "")))
        cert = PartitionCertificate(left, right, classify_induced(g, left), classify_induced(g, right))
        spec = PartitionSpec.of(r.get("left-shape", "tree"), r.get("right-shape", "tree"))
        if not verify_certificate(g, cert, spec):
            return "partition certificate does not verify"
    elif check == "spanning-2tree":
        seq = TwoTreeSequence(tuple(ints(r.get("base", ""))), tuple(parse_steps(r.get("steps", ""))))
        if not (seq.validate(g) and seq.spans(g)):
            return "construction sequence is not a spanning 2-tree"
    elif check == "max2deg":
        sub = b.graphs.get(r.get("subgraph", ""))
        if sub is None or sub.n != g.n or any(not g.has_edge(u, v) for u, v in sub.edges):
            return "subgraph is not a spanning subgraph of the host"
        w = DegeneracyWitness(tuple(ints(r.get("deletion-order", ""))), tuple(ints(r.get("deletion-degrees", ""))))
        if not w.check(sub, 2) or is_maximal_k_degenerate(sub, 2) is None:
            return "degeneracy witness does not verify"
        if r.get("is-2-tree") == "false" and recognize_k_tree(sub, 2) is not None:
            return "subgraph unexpectedly is a 2-tree"
    else:
        return f"unknown check {check!r}"
    return None


def verify_bundle(b: Bundle) -> list[tuple[str, str | None]]:
    """``(claim id, failure or None)`` per record."""
    return [(r.claim, _verify_record(b, r)) for r in b.records]
