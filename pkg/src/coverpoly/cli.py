"""Command line interface.

Exit codes: 0 on success or a CONFIRMED/HOLDS verdict, 1 on VIOLATED or
FAILS, 2 on usage and input errors.  All numbers are printed exactly, as
``p/q`` or ``p``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .covering import CoveringMatrix, PolyhedronKind, build, parse_matrix
from .errors import CoverpolyError
from .numeric import format_point, format_rational, parse_rational, parse_vector
from .polyhedron import HRep, RankAdjacency, VRep, h_to_v, v_to_h
from .skeleton import (
    Method,
    SkeletonGraph,
    build_skeleton,
    certificate_search,
    decomposition_test,
    to_dot,
    to_json,
    trubin_check,
)
from . import verify

KINDS = [k.value for k in PolyhedronKind]


class UsageError(Exception):
    pass


def _read_matrix(args) -> CoveringMatrix:
    if getattr(args, "inline", None):
        return parse_matrix(args.inline.replace(";", "\n").replace("/", "\n"))
    if not getattr(args, "matrix", None):
        raise UsageError("a matrix file or --inline text is required")
    if args.matrix == "-":
        return parse_matrix(sys.stdin.read())
    return parse_matrix(Path(args.matrix).read_text(encoding="utf-8"))


def _vrep(p: HRep | VRep) -> VRep:
    return h_to_v(p) if isinstance(p, HRep) else p


def _pts(vs) -> list[list[str]]:
    return [[format_rational(x) for x in v] for v in vs]


def cmd_vertices(args, out) -> int:
    a = _read_matrix(args)
    v = _vrep(build(a, PolyhedronKind(args.kind)))
    if args.format == "json":
        doc = {"kind": args.kind, "dim": v.dim, "empty": v.empty,
               "vertices": _pts(v.vertices), "rays": _pts(v.rays)}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for x in v.vertices:
            out.write(format_point(x) + "\n")
        for r in v.rays:
            out.write("ray " + format_point(r) + "\n")
    return 0


def _skeleton_text(g: SkeletonGraph) -> str:
    lines = [f"{len(g.nodes)} nodes, {len(g.edges)} edges"]
    lines += ["node " + format_point(v) for v in g.nodes]
    lines += [f"edge {format_point(g.nodes[i])} -- {format_point(g.nodes[j])}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def emit_skeleton(g: SkeletonGraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return to_json(g)
    return _skeleton_text(g)


def cmd_skeleton(args, out) -> int:
    a = _read_matrix(args)
    g = build_skeleton(build(a, PolyhedronKind(args.kind)), Method(args.method))
    out.write(emit_skeleton(g, args.format))
    return 0


def cmd_adjacent(args, out) -> int:
    a = _read_matrix(args)
    p = build(a, PolyhedronKind(args.kind))
    u, w = parse_vector(args.u), parse_vector(args.v)
    if len(u) != a.n or len(w) != a.n:
        raise UsageError(f"vertices must have {a.n} coordinates")
    if args.method == "rank":
        h = p if isinstance(p, HRep) else v_to_h(p)
        adjacent = RankAdjacency(h).adjacent(u, w)
        extra = ""
    elif args.method == "vrep-lp":
        adjacent, witness = decomposition_test(_vrep(p), u, w)
        extra = ""
        if witness is not None:
            extra = (f"witness weights ({','.join(map(format_rational, witness.weights))})"
                     f" slack {format_point(witness.slack)} t {format_rational(witness.t)}\n")
    else:
        cert = certificate_search(_vrep(p), u, w)
        adjacent = cert is not None
        extra = f"certificate c={format_point(cert.c)} b={format_rational(cert.b)}\n" if cert else ""
    out.write(("adjacent" if adjacent else "not adjacent") + "\n" + extra)
    return 0


def cmd_trubin(args, out) -> int:
    a = _read_matrix(args)
    sub_g = build_skeleton(build(a, PolyhedronKind(args.sub)), Method.RANK)
    super_g = build_skeleton(build(a, PolyhedronKind(args.super)), Method.RANK)
    res = trubin_check(sub_g, super_g)
    if args.format == "json":
        doc = {"holds": res.holds, "reason": res.reason, "missing": _pts(res.missing),
               "pairs": [_pts(p) for p in res.pairs]}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    elif res.holds:
        out.write("HOLDS\n")
    else:
        out.write(f"FAILS: {res.reason}\n")
        for x in res.missing:
            out.write(f"missing {format_point(x)}\n")
        for p, q in res.pairs:
            out.write(f"pair {format_point(p)} {format_point(q)}\n")
    return 0 if res.holds else 1


def _range(text: str) -> range:
    lo, _, hi = text.partition("-")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise UsageError(f"bad seed range {text!r}") from None
    return range(lo_i, hi_i + 1)


def _instances(args) -> list[verify.Instance]:
    chosen = [x for x in (args.matrix, args.inline, args.random, args.suite, args.graph_suite) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --matrix, --inline, --random, --suite, --graph-suite")
    if args.random:
        parts = args.random.split(",")
        if len(parts) != 4:
            raise UsageError("--random expects seed,n,m,density")
        try:
            spec = verify.InstanceSpec(int(parts[0]), int(parts[1]), int(parts[2]),
                                       parse_rational(parts[3]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return [verify.Instance(verify.random_instance(spec), f"random-{spec.seed}", spec)]
    if args.suite:
        return verify.standard_suite(_range(args.suite))
    if args.graph_suite:
        return verify.graph_suite(_range(args.graph_suite))
    a = _read_matrix(args)
    name = Path(args.matrix).name if args.matrix else "inline"
    return [verify.Instance(a, name)]


def cmd_verify(args, out) -> int:
    instances = _instances(args)
    statements = [s.strip() for s in args.statement.split(",")]
    reports = verify.run_checks(instances, statements, jobs=args.jobs)
    out.write(verify.to_jsonl(reports))
    return 0 if all(r.confirmed for r in reports) else 1


DEMOS = ("circulant3",)


def demo_text(report: verify.CheckReport) -> str:
    f = report.details["facts"]
    yes = {True: "yes", False: "no"}
    lines = [
        "Covering matrix A (3x3 circulant):",
        *("  " + " ".join(r) for r in report.instance["matrix"]),
        "",
        "Vertices of Q(A) cut by the unit cube:",
        *("  (" + ",".join(v) + ")" for v in report.details["qbar_vertices"]),
        f"  matches the expected five vertices: {yes[f['qbar_vertices_match']]}",
        "",
        "Pair xi = (1,1,0), eta = (0,1,1):",
        f"  adjacent in the cut relaxation Q̄(A):   {yes[f['adjacent_in_qbar']]}",
        f"  adjacent in the relaxation Q(A):       {yes[f['adjacent_in_q']]}",
        f"  adjacent in the integer hull Q*(A):    {yes[f['adjacent_in_qstar']]}",
        "",
        "Skeleton of Q*(A) induced in skeleton of Q(A): "
        + ("holds" if f["trubin_qstar_in_q"] else "fails"),
        *("  mismatched pair (" + ",".join(p) + ") (" + ",".join(q) + ")"
          for p, q in f["trubin_failing_pairs"]),
        "",
        f"Verdict: {report.verdict.value}",
    ]
    return "\n".join(lines) + "\n"


def cmd_demo(args, out) -> int:
    report = verify.check_relaxation_counterexample()
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(demo_text(report))
    return 0 if report.confirmed else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coverpoly", description="Set covering polyhedra toolkit")
    subs = parser.add_subparsers(dest="verb", required=True)

    def matrix_cmd(name, help_):
        p = subs.add_parser(name, help=help_)
        p.add_argument("matrix", nargs="?", help="matrix file ('-' for stdin)")
        p.add_argument("--inline", help="matrix text with ';' or '/' between lines")
        return p

    p = matrix_cmd("vertices", "list vertices and rays")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_vertices)

    p = matrix_cmd("skeleton", "1-skeleton graph")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default="rank")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_skeleton)

    p = matrix_cmd("adjacent", "test adjacency of two vertices")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--u", required=True, help="vertex such as 1,1,0 or 1/2,1/2,1/2")
    p.add_argument("--v", required=True)
    p.add_argument("--method", choices=["rank", "vrep-lp", "certificate"], default="rank")
    p.set_defaults(func=cmd_adjacent)

    p = matrix_cmd("trubin", "induced-subgraph check between two skeletons")
    p.add_argument("--sub", choices=KINDS, required=True)
    p.add_argument("--super", choices=KINDS, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_trubin)

    p = subs.add_parser("verify", help="run statement checkers, JSON lines output")
    p.add_argument("--statement", default="all",
                   help="all or a comma list of: " + ",".join(verify.ORDER))
    p.add_argument("--matrix", help="matrix file")
    p.add_argument("--inline", help="matrix text with ';' or '/' between lines")
    p.add_argument("--random", help="seed,n,m,density")
    p.add_argument("--suite", help="seed range LO-HI of the standard random suite")
    p.add_argument("--graph-suite", help="seed range LO-HI of the random graph suite")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("demo", help="reproduce a worked example")
    p.add_argument("name", choices=DEMOS)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return 2
    except (CoverpolyError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def run() -> None:
    sys.exit(main())
