"""Command-line interface.

Exit codes: ``check`` returns 0 for SAT/true, 1 for UNSAT/false and 2 for
errors; every other command returns 0 on success, 1 when a certified claim
fails and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from importlib import metadata
from pathlib import Path

from . import bundle as B
from . import families as F
from .embed import EmbeddedGraph, EmbeddingError, dual, format_rot, is_4mp, is_4mp_dual, \
    is_maximal_planar, parse_rot, stack_all_faces
from .graph import Graph, GraphError, graph6_decode, graph6_encode
from .handles import HandleError, add_handle, handle_closure
from .partitions import PartitionError, PartitionSpec, find_partition, oracle_find_partition, parse_edge
from .spanning import SpanningSearchStats, count_hamiltonian_cycles, count_spanning_two_trees, \
    enumerate_spanning_two_trees, find_hamiltonian_cycle, find_spanning_two_tree, \
    has_linear_hamiltonian_cycle, is_maximal_k_degenerate, recognize_k_tree, spanning_max_2_degenerate


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return metadata.version("planar2tree")
    except metadata.PackageNotFoundError:
        return "unknown"


# -- input / output -----------------------------------------------------------------

def read_input(path: str) -> tuple[Graph, EmbeddedGraph | None]:
    """Read a graph6 or rot file (sniffed by content); ``-`` is stdin."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    stripped = text.lstrip()
    try:
        if stripped.startswith("rot"):
            eg = parse_rot(text)
            return eg.graph, eg
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError(f"{path}: empty input")
        return graph6_decode(lines[0].strip()), None
    except (GraphError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def need_embedding(eg: EmbeddedGraph | None, what: str) -> EmbeddedGraph:
    if eg is None:
        raise UsageError(f"{what} needs a rotation (.rot) input")
    return eg


def write_graph(obj: Graph | EmbeddedGraph, fmt: str, out: str | None) -> None:
    if fmt == "rot":
        if not isinstance(obj, EmbeddedGraph):
            raise UsageError("this family has no embedding; use --format g6")
        text = format_rot(obj)
    else:
        g = obj.graph if isinstance(obj, EmbeddedGraph) else obj
        text = graph6_encode(g) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def emit(lines: list[str]) -> None:
    sys.stdout.write("".join(ln + "\n" for ln in lines))


def fmt_steps(seq) -> str:
    return B.format_steps(seq.steps)


# -- gen --------------------------------------------------------------------------------

def build_family(a: argparse.Namespace) -> Graph | EmbeddedGraph:
    fam = a.family
    if fam == "k4":
        return F.k4()
    if fam == "cycle":
        return F.cycle(a.n)
    if fam == "prism":
        return F.prism(a.r)
    if fam == "cube":
        return F.cube()
    if fam == "octahedron":
        return F.octahedron()
    if fam == "double-wheel":
        return F.double_wheel(a.n)
    if fam == "gk":
        return F.g_k(a.k)
    if fam == "h22":
        return F.h_22()
    if fam == "ktree":
        return F.random_k_tree(a.n, a.k, a.seed)
    if fam == "maxkdeg":
        return F.random_maximal_k_degenerate(a.n, a.k, a.seed)
    if fam == "random-tri":
        return F.random_4block_triangulation(a.seed, a.max_order)
    if fam == "counterexample":
        return stack_all_faces(dual(F.g_k(4)))
    raise UsageError(f"unknown family {fam}")


def cmd_gen(a: argparse.Namespace) -> int:
    if a.family == "closure":
        if a.output is None:
            raise UsageError("gen closure needs -o DIR")
        outdir = Path(a.output)
        outdir.mkdir(parents=True, exist_ok=True)
        cl = handle_closure(a.max_order)
        for order, count in cl.counts().items():
            lines = [graph6_encode(eg.graph) for eg in cl.members(order)]
            (outdir / f"closure-{order:02d}.g6").write_text("".join(ln + "\n" for ln in lines))
            print(f"order {order} members {count}")
        return 0
    write_graph(build_family(a), a.format, a.output)
    return 0


# -- check ------------------------------------------------------------------------------

def cmd_check(a: argparse.Namespace) -> int:
    g, eg = read_input(a.input)
    kind = a.kind
    if kind == "partition":
        spec = PartitionSpec.of(a.left, a.right, [parse_edge(e) for e in a.internal],
                                [parse_edge(e) for e in a.cross])
        res = (oracle_find_partition if a.oracle else find_partition)(g, spec, a.backend)
        if res.sat:
            c = res.certificate
            emit(["result SAT", f"left-shape {c.left_shape.value}", f"right-shape {c.right_shape.value}",
                  "left " + " ".join(map(str, c.left)), "right " + " ".join(map(str, c.right))])
            return 0
        mode = "oracle-enumeration" if a.oracle else "exhaustive-search"
        emit(["result UNSAT", f"mode {mode}", f"reason {res.reason}",
              f"{'checked' if a.oracle else 'nodes'} {res.nodes}", f"prunes {res.prunes}",
              f"backend {res.backend}"])
        return 1
    if kind == "spanning-2tree":
        st = SpanningSearchStats()
        seq = find_spanning_two_tree(g, st)
        if seq is None:
            emit(["result UNSAT", "mode exhaustive-search", f"nodes {st.nodes}",
                  f"core-order {st.core_order}", f"reduced {len(st.reduced)}"])
            return 1
        emit(["result SAT", "base " + " ".join(map(str, seq.base)), "steps " + fmt_steps(seq)])
        return 0
    if kind == "ham":
        forced = [parse_edge(e) for e in a.force]
        for u, v in forced:
            if not g.has_edge(u, v):
                raise UsageError(f"forced edge {u}-{v} is not in the graph")
        c = find_hamiltonian_cycle(g, forced)
        if c is None:
            emit(["result UNSAT", "mode exhaustive-search"])
            return 1
        emit(["result SAT", "cycle " + " ".join(map(str, c))])
        return 0
    if kind == "linear-ham":
        c = has_linear_hamiltonian_cycle(need_embedding(eg, kind))
        if c is None:
            emit(["result UNSAT", "mode exhaustive-search"])
            return 1
        emit(["result SAT", "cycle " + " ".join(map(str, c))])
        return 0
    if kind == "ktree":
        rec = recognize_k_tree(g, a.k)
        if rec is None:
            emit(["result false"])
            return 1
        base, steps = rec
        emit(["result true", "base " + " ".join(map(str, base)),
              "steps " + " ".join(f"{w}:" + "-".join(map(str, c)) for w, c in steps)])
        return 0
    if kind == "maxkdeg":
        w = is_maximal_k_degenerate(g, a.k)
        if w is None:
            emit(["result false"])
            return 1
        emit(["result true", "deletion-order " + " ".join(map(str, w.order)),
              "deletion-degrees " + " ".join(map(str, w.degrees))])
        return 0
    if kind in ("4mp", "4mp-dual"):
        e = need_embedding(eg, kind)
        ok = is_4mp(e) if kind == "4mp" else is_4mp_dual(e)
        emit([f"result {'true' if ok else 'false'}"])
        return 0 if ok else 1
    raise UsageError(f"unknown check kind {kind}")


# -- count, dual, op, build ------------------------------------------------------------

def cmd_count(a: argparse.Namespace) -> int:
    g, _ = read_input(a.input)
    if a.what == "2trees":
        if g.n > 16:
            raise UsageError("spanning 2-tree counting is limited to order 16")
        print(count_spanning_two_trees(g))
    else:
        if g.n > 16:
            raise UsageError("Hamiltonian cycle counting is limited to order 16")
        print(count_hamiltonian_cycles(g))
    return 0


def cmd_dual(a: argparse.Namespace) -> int:
    _, eg = read_input(a.input)
    write_graph(dual(need_embedding(eg, "dual")), a.format, a.output)
    return 0


def cmd_op(a: argparse.Namespace) -> int:
    _, eg = read_input(a.input)
    eg = need_embedding(eg, "op handle")
    if len(a.edge) != 2:
        raise UsageError("op handle needs exactly two --edge arguments")
    e1, e2 = (parse_edge(e) for e in a.edge)
    write_graph(add_handle(eg, e1, e2, a.face), a.format, a.output)
    return 0


def cmd_build(a: argparse.Namespace) -> int:
    _, eg = read_input(a.input)
    res = spanning_max_2_degenerate(need_embedding(eg, "build max2deg"))
    emit(["result SAT", f"order {res.subgraph.n}", f"size {res.subgraph.size}", f"blocks {res.blocks}",
          "base " + " ".join(map(str, res.base)), "steps " + B.format_steps(res.steps),
          "deletion-order " + " ".join(map(str, res.witness.order)),
          "deletion-degrees " + " ".join(map(str, res.witness.degrees)),
          "edges " + " ".join(f"{u}-{v}" for u, v in res.subgraph.edges)])
    return 0


# -- certify / verify ---------------------------------------------------------------------

class ClaimFailed(Exception):
    def __init__(self, claim: str, detail: str):
        super().__init__(f"claim {claim} failed: {detail}")
        self.claim = claim


def certify_counterexample(tier2: bool = False, seed: int = 0, threads: int = 1,
                           backend: str | None = None, log=None) -> B.Bundle:
    """Build and check the chain from G_4 to the order-38 triangulation."""
    say = log or (lambda msg: None)
    b = B.Bundle(meta=[("command", "certify counterexample"), ("seed", str(seed)),
                       ("threads", str(threads)), ("tier2", "true" if tier2 else "false"),
                       ("version", _version())])

    def require(ok: bool, claim: str, detail: str) -> None:
        if not ok:
            raise ClaimFailed(claim, detail)

    say("step 1: build G_4")
    g4 = F.g_k(4)
    require(g4.n == 24 and is_4mp_dual(g4), "g4-is-4mp-dual", "G_4 is not a 4MP dual of order 24")
    b.add_graph("g4", g4)

    say("step 2: G_4 path-tree partition search and oracle")
    spec = PartitionSpec.of("path", "tree")
    res = find_partition(g4.graph, spec, backend)
    require(not res.sat, "g4-path-tree-unsat", "search found a path-tree partition")
    b.record("g4-path-tree-unsat-search").add("status", "UNSAT").add("graph", "g4") \
        .add("statement", "G_4 has no partition into an induced path and an induced tree") \
        .add("mode", "exhaustive-search").add("nodes", res.nodes).add("prunes", res.prunes)
    orc = oracle_find_partition(g4.graph, spec, backend)
    require(not orc.sat, "g4-path-tree-unsat", "oracle found a path-tree partition")
    b.record("g4-path-tree-unsat-oracle").add("status", "UNSAT").add("graph", "g4") \
        .add("statement", "no balanced bipartition of G_4 is path-tree") \
        .add("mode", "oracle-enumeration").add("checked", orc.nodes)

    say("step 3: dual of G_4")
    t14 = dual(g4)
    require(t14.n == 14 and t14.size == 36 and len(t14.faces()) == 24 and is_maximal_planar(t14),
            "dual-order-14", "dual is not a maximal planar graph of order 14 with 24 faces")
    b.add_graph("t14", t14)
    b.record("t14-dual-of-g4").add("status", "TRUE").add("check", "dual-of").add("graph", "t14") \
        .add("source", "g4")
    b.record("t14-maximal-planar").add("status", "TRUE").add("check", "maximal-planar") \
        .add("graph", "t14").add("faces", len(t14.faces()))

    say("step 4: spanning 2-trees of the order-14 triangulation")
    face_sets = [f.edges() for f in t14.faces()]
    total = 0
    for es in enumerate_spanning_two_trees(t14.graph):
        total += 1
        require(any(not any(e in es for e in fe) for fe in face_sets), "t14-every-2tree-misses-a-face",
                "found a spanning 2-tree meeting every facial triangle")
    b.record("t14-every-2tree-misses-a-face").add("status", "UNSAT").add("graph", "t14") \
        .add("statement", "every spanning 2-tree misses all three edges of some face") \
        .add("mode", "exhaustive-enumeration").add("enumerated", total)

    say("step 5: stack every face")
    t38 = stack_all_faces(t14)
    require(t38.n == 38 and t38.size == 108 and is_maximal_planar(t38), "t38-maximal-planar",
            "stacked graph is not maximal planar of order 38")
    b.add_graph("t38", t38)
    b.record("t38-stacked-from-t14").add("status", "TRUE").add("check", "stacked-from") \
        .add("graph", "t38").add("source", "t14")
    b.record("t38-maximal-planar").add("status", "TRUE").add("check", "maximal-planar") \
        .add("graph", "t38").add("faces", len(t38.faces()))

    if tier2:
        say("step 6: direct spanning 2-tree search on the order-38 graph")
        st = SpanningSearchStats()
        seq = find_spanning_two_tree(t38.graph, st)
        require(seq is None, "t38-no-spanning-2tree", "search found a spanning 2-tree")
        b.record("t38-no-spanning-2tree").add("status", "UNSAT").add("graph", "t38") \
            .add("statement", "the order-38 triangulation has no spanning 2-tree") \
            .add("mode", "exhaustive-search").add("nodes", st.nodes) \
            .add("core-order", st.core_order).add("hitting-constraints", st.hits)

    say("step 7: spanning maximal 2-degenerate subgraph of the order-38 graph")
    m = spanning_max_2_degenerate(t38)
    sub = m.subgraph
    require(sub.size == 2 * t38.n - 3 and recognize_k_tree(sub, 2) is None, "t38-max2deg",
            "constructed subgraph has the wrong size or is a 2-tree")
    b.add_graph("t38-max2deg", sub)
    b.record("t38-max2deg").add("status", "SAT").add("check", "max2deg").add("graph", "t38") \
        .add("subgraph", "t38-max2deg").add("blocks", m.blocks).add("is-2-tree", False) \
        .add("deletion-order", " ".join(map(str, m.witness.order))) \
        .add("deletion-degrees", " ".join(map(str, m.witness.degrees)))
    return b


def cmd_certify(a: argparse.Namespace) -> int:
    log = (lambda msg: print(msg, file=sys.stderr)) if a.verbose else None
    try:
        b = certify_counterexample(a.tier2, a.seed, a.threads, a.backend, log)
    except ClaimFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = b.dumps()
    if a.output:
        Path(a.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(a: argparse.Namespace) -> int:
    try:
        text = Path(a.bundle).read_text()
    except OSError as exc:
        raise UsageError(f"{a.bundle}: {exc.strerror}") from None
    try:
        b = B.loads(text)
    except (B.BundleError, GraphError) as exc:
        raise UsageError(f"{a.bundle}: {exc}") from None
    bad = 0
    for claim, err in B.verify_bundle(b):
        print(f"{claim} {'ok' if err is None else 'FAIL ' + err}")
        bad += err is not None
    return 1 if bad else 0


# -- parser ---------------------------------------------------------------------------------

FAMILIES = ["k4", "cycle", "prism", "cube", "octahedron", "double-wheel", "gk", "h22", "ktree",
            "maxkdeg", "random-tri", "counterexample", "closure"]
CHECKS = ["partition", "spanning-2tree", "ham", "linear-ham", "ktree", "maxkdeg", "4mp", "4mp-dual"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar2tree", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=_version())
    p.add_argument("--threads", type=int, default=1, help="worker threads (answers do not depend on it)")
    p.add_argument("--backend", choices=["python", "compiled"], default=None,
                   help="partition kernel backend (default: compiled when built)")
    sub = p.add_subparsers(dest="command", required=True)

    gp = sub.add_parser("gen", help="generate a graph family")
    gp.add_argument("family", choices=FAMILIES)
    gp.add_argument("--n", type=int, default=6)
    gp.add_argument("--r", type=int, default=4)
    gp.add_argument("--k", type=int, default=2)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--max-order", type=int, default=14)
    gp.add_argument("--format", choices=["g6", "rot"], default="g6")
    gp.add_argument("-o", "--output")
    gp.set_defaults(func=cmd_gen)

    cp = sub.add_parser("check", help="decide a property and print a certificate")
    cp.add_argument("kind", choices=CHECKS)
    cp.add_argument("input")
    cp.add_argument("--left", choices=["path", "tree"], default="path")
    cp.add_argument("--right", choices=["path", "tree"], default="tree")
    cp.add_argument("--require-internal", "--internal", dest="internal", action="append", default=[],
                    metavar="U-V")
    cp.add_argument("--require-crossing", "--cross", dest="cross", action="append", default=[],
                    metavar="U-V")
    cp.add_argument("--oracle", action="store_true", help="partition: enumerate instead of search")
    cp.add_argument("--force", action="append", default=[], metavar="U-V")
    cp.add_argument("--k", type=int, default=2)
    cp.set_defaults(func=cmd_check)

    kp = sub.add_parser("count", help="count spanning 2-trees or Hamiltonian cycles")
    kp.add_argument("what", choices=["2trees", "hamcycles"])
    kp.add_argument("input")
    kp.set_defaults(func=cmd_count)

    dp = sub.add_parser("dual", help="planar dual of an embedded graph")
    dp.add_argument("input")
    dp.add_argument("--format", choices=["g6", "rot"], default="rot")
    dp.add_argument("-o", "--output")
    dp.set_defaults(func=cmd_dual)

    op = sub.add_parser("op", help="graph operations")
    ops = op.add_subparsers(dest="op", required=True)
    hp = ops.add_parser("handle", help="add a handle between two edges of a common face")
    hp.add_argument("input")
    hp.add_argument("--edge", action="append", default=[], metavar="U-V")
    hp.add_argument("--face", type=int, default=None)
    hp.add_argument("--format", choices=["g6", "rot"], default="rot")
    hp.add_argument("-o", "--output")
    hp.set_defaults(func=cmd_op)

    bp = sub.add_parser("build", help="constructions")
    bps = bp.add_subparsers(dest="what", required=True)
    mp = bps.add_parser("max2deg", help="spanning maximal 2-degenerate subgraph of a triangulation")
    mp.add_argument("input")
    mp.set_defaults(func=cmd_build)

    xp = sub.add_parser("certify", help="run a certification pipeline")
    xps = xp.add_subparsers(dest="what", required=True)
    cx = xps.add_parser("counterexample", help="certify the order-38 triangulation chain")
    cx.add_argument("--tier2", action="store_true", help="also run the direct order-38 search")
    cx.add_argument("--seed", type=int, default=0)
    cx.add_argument("-o", "--output")
    cx.add_argument("-v", "--verbose", action="store_true")
    cx.set_defaults(func=cmd_certify)

    vp = sub.add_parser("verify", help="re-check every certificate in a bundle without searching")
    vp.add_argument("bundle")
    vp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return a.func(a)
    except (UsageError, GraphError, EmbeddingError, PartitionError, HandleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
