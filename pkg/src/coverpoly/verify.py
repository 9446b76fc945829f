"""Statement checkers, random instances and brute-force oracles.

Each checker computes both sides of a statement by separate code paths and
returns a :class:`CheckReport`.  A ``VIOLATED`` report carries a list of
atomic claims (vertex membership, adjacency, liftability) about the
instance.  :func:`recheck` evaluates those claims again with the
brute-force oracles in this module, from the report alone: if every claim
survives, the statement really fails on that instance; if not, the main
code path is at fault.

Random matrices come from MT19937 (Python's :class:`random.Random`, seeded
with the integer seed) and only its raw 32-bit outputs are used, so the
same seed gives the same matrix in any implementation of that generator.
See ``PRNG_NAME``.
"""

from __future__ import annotations

import enum
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from . import lp
from .covering import (
    CoveringMatrix,
    PolyhedronKind,
    brute_force_minimal_covers,
    build,
    circulant3,
    covering_polytope,
    covering_polytope_by_truncation,
    integer_hull,
    lift,
    lift_closure,
    minimal_covers,
    relaxation,
)
from .errors import CapExceeded, MethodDisagreement, NotVertex, RowSumNotTwo
from .numeric import (
    Order,
    QVector,
    compare_componentwise,
    format_rational,
    is_binary,
    parse_rational,
    qvec,
    unit,
)
from .polyhedron import VRep, basic_solutions, h_to_v, truncate_hypercube
from .skeleton import (
    Method,
    SkeletonGraph,
    build_skeleton,
    certificate_search,
    trubin_check,
)

PRNG_NAME = "mt19937-u32-v1"
MAX_COVER_DIM = 10
MAX_DD_DIM = 7

ZERO = Fraction(0)
ONE = Fraction(1)


class Statement(enum.Enum):
    LEM21 = "LEM21"
    PROP22 = "PROP22"
    LEM31 = "LEM31"
    THM34 = "THM34"
    COR35 = "COR35"
    COR36 = "COR36"
    THM37 = "THM37"
    CLAIM1 = "CLAIM1"
    TRUBIN_FAIL_RELAX = "TRUBIN_FAIL_RELAX"
    TRUBIN_GRAPH_CASE = "TRUBIN_GRAPH_CASE"


class Verdict(enum.Enum):
    CONFIRMED = "CONFIRMED"
    VIOLATED = "VIOLATED"


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    n: int
    m: int
    density: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "density", Fraction(self.density))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if not 0 < self.density < 1:
            raise ValueError("density must lie strictly between 0 and 1")


@dataclass(frozen=True)
class Instance:
    """A matrix plus how it was obtained, for report descriptors."""

    matrix: CoveringMatrix
    name: str = ""
    spec: InstanceSpec | None = None

    def descriptor(self) -> dict:
        d = {"name": self.name, "matrix": self.matrix.compact(), "n": self.matrix.n,
             "m": self.matrix.m, "seed": None, "density": None}
        if self.spec is not None:
            d["seed"] = self.spec.seed
            d["density"] = format_rational(self.spec.density)
        return d


@dataclass(frozen=True)
class CheckReport:
    statement: Statement
    instance: dict
    verdict: Verdict
    violation: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def confirmed(self) -> bool:
        return self.verdict is Verdict.CONFIRMED

    def to_dict(self) -> dict:
        return {
            "statement": self.statement.value,
            "instance": self.instance,
            "verdict": self.verdict.value,
            "violation": self.violation,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> CheckReport:
        d = json.loads(line)
        return cls(Statement(d["statement"]), d["instance"], Verdict(d["verdict"]),
                   d.get("violation"), d.get("details") or {})


# -- random instances --------------------------------------------------------


def _u32(rng: random.Random) -> int:
    return rng.getrandbits(32)


def _below(rng: random.Random, k: int) -> int:
    """Uniform integer in ``[0, k)`` by rejection on 32-bit draws."""
    limit = (1 << 32) - (1 << 32) % k
    while True:
        u = _u32(rng)
        if u < limit:
            return u % k


def _bernoulli(rng: random.Random, p: Fraction) -> int:
    return int(_u32(rng) * p.denominator < p.numerator << 32)


def _dedup(rows):
    seen, out = set(), []
    for r in rows:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def random_instance(spec: InstanceSpec) -> CoveringMatrix:
    """``m`` i.i.d. Bernoulli rows, each redrawn until nonzero, then deduplicated."""
    rng = random.Random(spec.seed)
    rows = []
    for _ in range(spec.m):
        while True:
            row = tuple(_bernoulli(rng, spec.density) for _ in range(spec.n))
            if any(row):
                break
        rows.append(row)
    return CoveringMatrix(tuple(_dedup(rows)), spec.n)


def random_graph_instance(seed: int, n: int, m: int) -> CoveringMatrix:
    """Edge-node incidence matrix of ``m`` uniformly drawn edges (deduplicated)."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 nodes and m >= 1 edges")
    rng = random.Random(seed)
    rows = []
    for _ in range(m):
        u = _below(rng, n)
        v = _below(rng, n - 1)
        if v >= u:
            v += 1
        rows.append(tuple(int(j in (u, v)) for j in range(n)))
    return CoveringMatrix(tuple(_dedup(rows)), n)


def suite_spec(seed: int) -> InstanceSpec:
    """Standard suite: n cycles through 3..6 and m through 3..8 as the seed grows."""
    return InstanceSpec(seed, 3 + seed % 4, 3 + (seed // 4) % 6, Fraction(1, 2))


def standard_suite(seeds: Iterable[int] = range(1, 101), include_circulant: bool = True) -> list[Instance]:
    out = [Instance(circulant3(), "circulant3")] if include_circulant else []
    for s in seeds:
        spec = suite_spec(s)
        out.append(Instance(random_instance(spec), f"random-{s}", spec))
    return out


def graph_suite(seeds: Iterable[int] = range(1, 21)) -> list[Instance]:
    out = []
    for s in seeds:
        n = 3 + s % 5
        m = 2 + s % 7
        out.append(Instance(random_graph_instance(s, n, m), f"graph-{s}",
                            InstanceSpec(s, n, m, Fraction(1, 2))))
    return out


# -- brute-force oracles -----------------------------------------------------


def brute_adjacent(p: VRep, xi, eta) -> bool:
    """Adjacency in a polytope given its complete vertex list.

    The midpoint of ``[xi, eta]`` lies in the relative interior of the
    smallest face holding both; the pair is an edge exactly when no convex
    combination of the vertices equal to that midpoint gives positive
    weight to a third vertex.
    """
    xi, eta = qvec(xi), qvec(eta)
    verts = list(p.vertices)
    if p.rays:
        raise ValueError("brute_adjacent needs a bounded polytope")
    for x in (xi, eta):
        if x not in verts:
            raise NotVertex(f"{x} is not a listed vertex")
    if xi == eta:
        raise ValueError("adjacency needs two distinct vertices")
    mid = tuple((a + b) / 2 for a, b in zip(xi, eta))
    r = len(verts)
    cons = [lp.eq([v[i] for v in verts], mid[i]) for i in range(p.dim)]
    cons.append(lp.eq([ONE] * r, ONE))
    objective = [ZERO if v in (xi, eta) else ONE for v in verts]
    out = lp.solve(lp.LinearProgram(objective, lp.Sense.MAX, cons, [ZERO] * r))
    return out.value == 0


def binary_covers(a: CoveringMatrix) -> list[QVector]:
    """Every binary ``x`` with ``Ax >= 1``, by scanning the cube."""
    return sorted(qvec(x) for x in product((0, 1), repeat=a.n) if a.covers(x))


def oracle_vertices(a: CoveringMatrix, kind: str) -> list[QVector]:
    """Vertex sets computed without double description.

    ``q`` and ``qbar`` use basic solutions; ``qstar`` uses the 2^n minimal
    cover scan; ``qstarbar`` is every binary cover (binary points are always
    extreme); ``qstar_cut`` uses basic solutions of the truncated integer hull.
    """
    if kind == "q":
        return basic_solutions(relaxation(a))
    if kind == "qbar":
        return basic_solutions(truncate_hypercube(relaxation(a)))
    if kind == "qstar":
        return brute_force_minimal_covers(a)
    if kind == "qstarbar":
        return binary_covers(a)
    if kind == "qstar_cut":
        return basic_solutions(covering_polytope_by_truncation(a))
    raise ValueError(f"unknown oracle kind {kind!r}")


_UNBOUNDED_KINDS = ("q", "qstar")


def oracle_adjacent(a: CoveringMatrix, kind: str, xi, eta) -> bool:
    """Adjacency via brute-force vertex lists.

    Bounded kinds use :func:`brute_adjacent`; the up-monotone kinds use the
    separating-certificate LP, whose answer is verified by substitution.
    """
    verts = oracle_vertices(a, kind)
    if kind in _UNBOUNDED_KINDS:
        v = VRep.canonical(verts, [unit(a.n, i) for i in range(a.n)], a.n)
        return certificate_search(v, xi, eta) is not None
    return brute_adjacent(VRep.canonical(verts, (), a.n), xi, eta)


def oracle_liftable(a: CoveringMatrix, point, from_kind: str) -> bool:
    point = qvec(point)
    return any(_lift_index(point, z) is not None for z in oracle_vertices(a, from_kind))


def _lift_index(target: QVector, z: QVector) -> frozenset[int] | None:
    idx = frozenset(i for i in range(len(z)) if target[i] != z[i])
    if all(target[i] == 1 for i in idx) and lift(idx, z) == target:
        return idx
    return None


# -- claims ------------------------------------------------------------------


def _pt(v) -> list[str]:
    return [format_rational(x) for x in v]


def _unpt(v) -> QVector:
    return tuple(parse_rational(s) for s in v)


def claim_vertex(kind: str, point, value: bool) -> dict:
    return {"fact": "vertex", "kind": kind, "point": _pt(point), "value": value}


def claim_adjacent(kind: str, xi, eta, value: bool) -> dict:
    return {"fact": "adjacent", "kind": kind, "pair": [_pt(xi), _pt(eta)], "value": value}


def claim_liftable(point, from_kind: str, value: bool) -> dict:
    return {"fact": "liftable", "from_kind": from_kind, "point": _pt(point), "value": value}


def claim_leq(u, v, value: bool) -> dict:
    return {"fact": "leq", "pair": [_pt(u), _pt(v)], "value": value}


def claim_binary(point, value: bool) -> dict:
    return {"fact": "binary", "point": _pt(point), "value": value}


def evaluate_claim(a: CoveringMatrix, claim: dict) -> bool:
    fact = claim["fact"]
    if fact == "vertex":
        got = _unpt(claim["point"]) in oracle_vertices(a, claim["kind"])
    elif fact == "adjacent":
        xi, eta = (_unpt(p) for p in claim["pair"])
        try:
            got = oracle_adjacent(a, claim["kind"], xi, eta)
        except NotVertex:
            return False
    elif fact == "liftable":
        got = oracle_liftable(a, _unpt(claim["point"]), claim["from_kind"])
    elif fact == "leq":
        u, v = (_unpt(p) for p in claim["pair"])
        got = compare_componentwise(u, v) in (Order.LE, Order.LT, Order.EQ)
    elif fact == "binary":
        got = is_binary(_unpt(claim["point"]))
    else:
        raise ValueError(f"unknown fact {fact!r}")
    return got == claim["value"]


def matrix_from_descriptor(d: dict) -> CoveringMatrix:
    rows = [tuple(int(c) for c in r) for r in d["matrix"]]
    return CoveringMatrix(tuple(rows), d["n"])


def recheck(report: CheckReport) -> bool:
    """True when every claim in a violation payload survives the oracles.

    That means the statement genuinely fails on the instance.  ``False``
    means the main computation disagrees with the oracles, i.e. a bug.
    """
    if report.violation is None:
        raise ValueError("report has no violation payload")
    a = matrix_from_descriptor(report.instance)
    claims = report.violation.get("claims", [])
    return bool(claims) and all(evaluate_claim(a, c) for c in claims)


# -- checkers ----------------------------------------------------------------


def _as_instance(a) -> Instance:
    return a if isinstance(a, Instance) else Instance(a)


def _cap(a: CoveringMatrix, dd: bool = True) -> None:
    if a.n > MAX_COVER_DIM:
        raise CapExceeded(f"n = {a.n} exceeds the cover enumeration cap {MAX_COVER_DIM}")
    if dd and a.n > MAX_DD_DIM:
        raise CapExceeded(f"n = {a.n} exceeds the double description cap {MAX_DD_DIM}")


def _report(stmt: Statement, inst: Instance, claims: list, details: dict, summary: str = "") -> CheckReport:
    if claims:
        return CheckReport(stmt, inst.descriptor(), Verdict.VIOLATED,
                           {"summary": summary, "claims": claims}, details)
    return CheckReport(stmt, inst.descriptor(), Verdict.CONFIRMED, None, details)


def _vertices(p) -> list[QVector]:
    return list(h_to_v(p).vertices) if not isinstance(p, VRep) else list(p.vertices)


def check_lem21(a) -> CheckReport:
    """No vertex of ``Q*(A)`` or ``Q(A)`` lies below another (an antichain)."""
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    claims = []
    counts = {}
    for kind, verts in (("qstar", minimal_covers(a)), ("q", _vertices(relaxation(a)))):
        counts[kind] = len(verts)
        for u in verts:
            for w in verts:
                if u != w and compare_componentwise(u, w) in (Order.LE, Order.LT):
                    claims += [claim_vertex(kind, u, True), claim_vertex(kind, w, True),
                               claim_leq(u, w, True)]
    return _report(Statement.LEM21, inst, claims, {"vertices": counts},
                   "a vertex lies componentwise below another vertex")


def check_prop22(a) -> CheckReport:
    """Rank, decomposition and certificate tests agree on every pair of ``Q*(A)``."""
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    try:
        g = build_skeleton(integer_hull(a), Method.BOTH)
    except MethodDisagreement as exc:
        xi, eta = exc.pair
        claims = [claim_adjacent("qstar", xi, eta, v) for _, v in sorted(exc.verdicts.items())]
        return _report(Statement.PROP22, inst, claims,
                       {"verdicts": {k: v for k, v in sorted(exc.verdicts.items())}},
                       "adjacency methods disagree")
    k = len(g.nodes)
    return _report(Statement.PROP22, inst, [], {"pairs": k * (k - 1) // 2, "edges": len(g.edges)})


def check_lem31(a) -> CheckReport:
    """For ``S`` inside ``T``: vertices of ``T`` in ``S`` are vertices of ``S``,
    and ``T``-adjacent ones stay adjacent in ``S``.

    Run for ``Q(A)`` over ``Q̄(A)`` and for ``Q*(A)`` over ``Q̄*(A)``.
    """
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    rel = relaxation(a)
    # in both cases the inner polyhedron is the outer one cut by the unit cube
    cases = [
        ("q", "qbar", build_skeleton(rel, Method.RANK),
         build_skeleton(truncate_hypercube(rel), Method.RANK)),
        ("qstar", "qstarbar", build_skeleton(integer_hull(a), Method.VREP_LP),
         build_skeleton(covering_polytope(a), Method.RANK)),
    ]
    claims = []
    for t_kind, s_kind, sk_t, sk_s in cases:
        inside = {x for x in sk_t.nodes if _in_cube(x)}
        s_nodes = set(sk_s.nodes)
        for x in sorted(inside - s_nodes):
            claims += [claim_vertex(t_kind, x, True), claim_vertex(s_kind, x, False)]
        s_edges = sk_s.edge_set()
        for e in sorted(sk_t.edge_set(), key=sorted):
            u, w = sorted(e)
            if u in inside and w in inside and e not in s_edges:
                claims += [claim_adjacent(t_kind, u, w, True), claim_adjacent(s_kind, u, w, False)]
    return _report(Statement.LEM31, inst, claims, {}, "vertex or edge of the outer polyhedron lost")


def _in_cube(x) -> bool:
    return all(0 <= v <= 1 for v in x)


def check_thm34(a) -> CheckReport:
    """Every vertex of ``Q̄(A)`` is a lift of some vertex of ``Q(A)``."""
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    rel = relaxation(a)
    base = _vertices(rel)
    top = _vertices(truncate_hypercube(rel))
    claims = []
    lifts = []
    for v in top:
        hit = next(((z, idx) for z in base if (idx := _lift_index(v, z)) is not None), None)
        if hit is None:
            claims += [claim_vertex("qbar", v, True), claim_liftable(v, "q", False)]
        else:
            lifts.append([_pt(v), _pt(hit[0]), sorted(hit[1])])
    return _report(Statement.THM34, inst, claims, {"lifts": lifts},
                   "vertex of the truncated relaxation is not a lift")


def check_cor35(a) -> CheckReport:
    """Vertices of ``Q*(A)`` cut by the cube equal the lift closure of the minimal covers."""
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    geometric = set(_vertices(covering_polytope_by_truncation(a)))
    lifted = set(lift_closure(minimal_covers(a)))
    claims = []
    for v in sorted(geometric - lifted):
        claims += [claim_vertex("qstar_cut", v, True), claim_liftable(v, "qstar", False)]
    for v in sorted(lifted - geometric):
        claims += [claim_vertex("qstar_cut", v, False), claim_liftable(v, "qstar", True)]
    return _report(Statement.COR35, inst, claims, {"vertices": len(geometric)},
                   "truncation vertices differ from lift closure")


def check_cor36(a) -> CheckReport:
    """Every vertex of ``Q*(A)`` cut by the cube is binary."""
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    verts = _vertices(covering_polytope_by_truncation(a))
    claims = []
    for v in verts:
        if not is_binary(v):
            claims += [claim_vertex("qstar_cut", v, True), claim_binary(v, False)]
    return _report(Statement.COR36, inst, claims, {"vertices": len(verts)},
                   "fractional vertex")


def _pair_claims(sub_kind, super_kind, sub_g: SkeletonGraph, super_g: SkeletonGraph) -> list:
    res = trubin_check(sub_g, super_g)
    if res.holds:
        return []
    claims = []
    for x in res.missing:
        claims += [claim_vertex(sub_kind, x, True), claim_vertex(super_kind, x, False)]
    sub_edges, super_edges = sub_g.edge_set(), super_g.edge_set()
    for u, w in res.pairs:
        key = frozenset((u, w))
        claims += [claim_adjacent(sub_kind, u, w, key in sub_edges),
                   claim_adjacent(super_kind, u, w, key in super_edges)]
    return claims


def check_thm37(a) -> CheckReport:
    """Pairs of vertices of ``Q*(A)`` are adjacent there iff adjacent after cutting by the cube.

    The integer hull skeleton uses the decomposition LP on the V-rep; the cut
    polytope's skeleton uses ranks on its H-rep.
    """
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    sk_r = build_skeleton(integer_hull(a), Method.VREP_LP)
    sk_p = build_skeleton(covering_polytope_by_truncation(a), Method.RANK)
    claims = _pair_claims("qstar", "qstar_cut", sk_r, sk_p)
    return _report(Statement.THM37, inst, claims,
                   {"nodes": len(sk_r.nodes), "edges": len(sk_r.edges)},
                   "adjacency changed under truncation")


def check_thm37_claim1(a) -> CheckReport:
    """Skeleton of ``Q*(A)`` (all three tests) is an induced subgraph of that of ``Q̄*(A)``.

    ``Q̄*(A)`` is taken as the hull of the binary covers, built by lifting.
    """
    inst = _as_instance(a)
    a = inst.matrix
    _cap(a)
    sk_r = build_skeleton(integer_hull(a), Method.BOTH)
    sk_s = build_skeleton(covering_polytope(a), Method.RANK)
    claims = _pair_claims("qstar", "qstarbar", sk_r, sk_s)
    return _report(Statement.CLAIM1, inst, claims,
                   {"nodes": len(sk_r.nodes), "edges": len(sk_r.edges),
                    "super_nodes": len(sk_s.nodes), "super_edges": len(sk_s.edges)},
                   "integer hull skeleton is not induced in the covering polytope skeleton")


check_claim1 = check_thm37_claim1

CIRCULANT_QBAR_VERTICES = tuple(sorted(qvec(v) for v in [
    (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
]))
CIRCULANT_PAIR = (qvec((1, 1, 0)), qvec((0, 1, 1)))


def check_relaxation_counterexample(a: CoveringMatrix | None = None) -> CheckReport:
    """The circulant instance on which the relaxation loses the Trubin property.

    With no argument the fixed 3x3 circulant is used and every fact is
    required.  Given another matrix the facts are only reported.
    """
    fixed = a is None
    inst = Instance(circulant3(), "circulant3") if fixed else _as_instance(a)
    a = inst.matrix
    _cap(a)
    xi, eta = CIRCULANT_PAIR
    rel = relaxation(a)
    sk_q = build_skeleton(rel, Method.RANK)
    sk_qbar = build_skeleton(truncate_hypercube(rel), Method.RANK)
    sk_qstar = build_skeleton(integer_hull(a), Method.BOTH)

    def edge(g, u, v):
        return u in g.nodes and v in g.nodes and g.has_edge(u, v)

    trubin = trubin_check(sk_qstar, sk_q)
    facts = {
        "qbar_vertices_match": sk_qbar.nodes == CIRCULANT_QBAR_VERTICES,
        "adjacent_in_qbar": edge(sk_qbar, xi, eta),
        "adjacent_in_q": edge(sk_q, xi, eta),
        "adjacent_in_qstar": edge(sk_qstar, xi, eta),
        "trubin_qstar_in_q": trubin.holds,
        "trubin_failing_pairs": [[_pt(u), _pt(w)] for u, w in trubin.pairs],
    }
    details = {"facts": facts, "qbar_vertices": [_pt(v) for v in sk_qbar.nodes]}
    if not fixed:
        return _report(Statement.TRUBIN_FAIL_RELAX, inst, [], details)
    claims = []
    if not facts["qbar_vertices_match"]:
        claims += [claim_vertex("qbar", v, True) for v in sk_qbar.nodes]
    if not facts["adjacent_in_qbar"]:
        claims.append(claim_adjacent("qbar", xi, eta, False))
    if facts["adjacent_in_q"]:
        claims.append(claim_adjacent("q", xi, eta, True))
    if not facts["adjacent_in_qstar"]:
        claims.append(claim_adjacent("qstar", xi, eta, False))
    named = frozenset(CIRCULANT_PAIR) in {frozenset(p) for p in trubin.pairs}
    facts["trubin_names_pair"] = named
    if not named:
        claims.append(claim_adjacent("q", xi, eta, True))
    return _report(Statement.TRUBIN_FAIL_RELAX, inst, claims, details,
                   "circulant counterexample not reproduced")


def check_graph_case(a) -> CheckReport:
    """For edge-node incidence matrices the relaxation polytope keeps the Trubin property."""
    inst = _as_instance(a)
    a = inst.matrix
    for i, r in enumerate(a.rows, 1):
        if sum(r) != 2:
            raise RowSumNotTwo(f"row {i} has {sum(r)} ones")
    _cap(a)
    sub_g = build_skeleton(covering_polytope(a), Method.RANK)
    super_g = build_skeleton(build(a, PolyhedronKind.QBAR), Method.RANK)
    claims = _pair_claims("qstarbar", "qbar", sub_g, super_g)
    return _report(Statement.TRUBIN_GRAPH_CASE, inst, claims,
                   {"nodes": len(sub_g.nodes), "edges": len(sub_g.edges),
                    "super_nodes": len(super_g.nodes), "super_edges": len(super_g.edges)},
                   "relaxation polytope skeleton does not induce the covering polytope skeleton")


CHECKERS: dict[str, Callable[..., CheckReport]] = {
    "lem21": check_lem21,
    "prop22": check_prop22,
    "lem31": check_lem31,
    "thm34": check_thm34,
    "cor35": check_cor35,
    "cor36": check_cor36,
    "thm37": check_thm37,
    "claim1": check_thm37_claim1,
    "graph-case": check_graph_case,
}

ORDER = list(CHECKERS)


def is_graph_matrix(a: CoveringMatrix) -> bool:
    return all(sum(r) == 2 for r in a.rows)


def _run_one(task) -> str:
    name, inst = task
    return CHECKERS[name](inst).to_json()


def run_checks(instances: Sequence[Instance], statements: Sequence[str] = ("all",),
               jobs: int = 1) -> list[CheckReport]:
    """Run statements over instances; output order is fixed by (statement, instance order).

    ``"all"`` expands to every checker; ``graph-case`` is skipped for
    matrices that are not edge-node incidence matrices.
    """
    names = ORDER if "all" in statements else [s for s in ORDER if s in statements]
    unknown = set(statements) - set(ORDER) - {"all"}
    if unknown:
        raise ValueError(f"unknown statements: {sorted(unknown)}")
    tasks = []
    for name in names:
        for inst in instances:
            if name == "graph-case" and not is_graph_matrix(inst.matrix):
                if "all" in statements:
                    continue
            tasks.append((name, inst))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            lines = list(pool.map(_run_one, tasks, chunksize=4))
    else:
        lines = [_run_one(t) for t in tasks]
    return [CheckReport.from_json(ln) for ln in lines]


def to_jsonl(reports: Iterable[CheckReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)
