"""Vertex adjacency and 1-skeleton graphs.

Three independent adjacency tests are available:

``rank``
    common tight constraints of an H-rep have rank ``n - 1``.
``decomposition``
    for an up-monotone V-rep: no point of ``[xi, eta]`` can be written as a
    convex combination of vertices plus a nonnegative vector unless the
    combination puts all its weight on ``xi`` and ``eta``.
``certificate``
    for an up-monotone V-rep: some ``c >= 1`` and ``b`` satisfy
    ``c.xi = c.eta = b`` and ``c.z >= b + 1`` for every other vertex ``z``.

Strict inequalities become ``>= b + 1`` and ``c > 0`` becomes ``c >= 1``;
that is exact because the system is finite and invariant under positive
scaling.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lp
from .errors import MethodDisagreement, NotUpMonotone, NotVertex
from .numeric import QVector, dot, format_point, format_rational, parse_rational, qvec
from .polyhedron import HRep, RankAdjacency, VRep, h_to_v, up_monotone, v_to_h

ZERO = Fraction(0)
ONE = Fraction(1)

RANK = "rank"
DECOMPOSITION = "decomposition"
CERTIFICATE = "certificate"


class Method(enum.Enum):
    RANK = "rank"
    VREP_LP = "vrep-lp"
    BOTH = "both"


@dataclass(frozen=True)
class Certificate:
    c: QVector
    b: Fraction


@dataclass(frozen=True)
class AdjacencyWitness:
    """A decomposition ``sum(weights[k] * vertex_k) + slack = t*xi + (1-t)*eta``."""

    weights: QVector
    slack: QVector
    t: Fraction

    def holds_for(self, vertices: Sequence[QVector], xi: QVector, eta: QVector) -> bool:
        n = len(xi)
        if any(w < 0 for w in self.weights) or sum(self.weights) != 1:
            return False
        if any(s < 0 for s in self.slack) or not ZERO <= self.t <= ONE:
            return False
        for i in range(n):
            lhs = sum((w * v[i] for w, v in zip(self.weights, vertices)), ZERO) + self.slack[i]
            if lhs != self.t * xi[i] + (1 - self.t) * eta[i]:
                return False
        return True


@dataclass(frozen=True)
class SkeletonGraph:
    """Nodes are the sorted vertex list; edges are index pairs ``(i, j)`` with ``i < j``.

    ``provenance`` maps each edge to the tests that confirmed it.
    ``unbounded`` lists ``(node, ray)`` pairs spanning unbounded edges when
    the rank test had an H-rep to work with.
    """

    nodes: tuple[QVector, ...]
    edges: tuple[tuple[int, int], ...]
    provenance: dict = field(default_factory=dict, compare=False)
    unbounded: tuple[tuple[int, QVector], ...] = field(default=(), compare=False)

    def __post_init__(self):
        nodes = tuple(qvec(v) for v in self.nodes)
        if list(nodes) != sorted(nodes) or len(set(nodes)) != len(nodes):
            raise ValueError("nodes must be distinct and sorted")
        edges = tuple(sorted(set(self.edges)))
        for i, j in edges:
            if not 0 <= i < j < len(nodes):
                raise ValueError(f"bad edge {(i, j)}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)

    def index(self, v: Sequence) -> int:
        return self.nodes.index(qvec(v))

    def has_edge(self, u: Sequence, v: Sequence) -> bool:
        i, j = sorted((self.index(u), self.index(v)))
        return (i, j) in set(self.edges)

    def edge_set(self) -> set[frozenset[QVector]]:
        return {frozenset((self.nodes[i], self.nodes[j])) for i, j in self.edges}


def _require_up_monotone(v: VRep) -> None:
    if v.empty:
        raise NotUpMonotone("empty polyhedron")
    w = up_monotone(v)
    if not w.holds:
        raise NotUpMonotone(f"direction e_{w.violating_ray_index} is not a recession direction")
    if any(x < 0 for r in v.rays for x in r):
        raise NotUpMonotone("recession cone leaves the nonnegative orthant")


def _vertex_pair(v: VRep, xi, eta) -> tuple[QVector, QVector]:
    xi, eta = qvec(xi), qvec(eta)
    verts = set(v.vertices)
    for p in (xi, eta):
        if p not in verts:
            raise NotVertex(f"{format_point(p)} is not a listed vertex")
    if xi == eta:
        raise ValueError("adjacency needs two distinct vertices")
    return xi, eta


def _decomposition_lp(vertices, n, xi, eta, weight_on) -> lp.LinearProgram:
    r = len(vertices)
    # variables: weights (r), slack (n), t (1)
    nv = r + n + 1
    cons = []
    for i in range(n):
        row = [vertices[k][i] for k in range(r)]
        row += [ONE if j == i else ZERO for j in range(n)]
        row.append(-(xi[i] - eta[i]))
        cons.append(lp.eq(row, eta[i]))
    cons.append(lp.eq([ONE] * r + [ZERO] * (n + 1), ONE))
    cons.append(lp.le([ZERO] * (nv - 1) + [ONE], ONE))
    objective = [ONE if k in weight_on else ZERO for k in range(r)] + [ZERO] * (n + 1)
    return lp.LinearProgram(objective, lp.Sense.MAX, cons, [ZERO] * nv)


def decomposition_test(v: VRep, xi, eta) -> tuple[bool, AdjacencyWitness | None]:
    """Decomposition test on an up-monotone V-rep.

    Maximizes the total weight on vertices other than ``xi`` and ``eta``;
    the pair is adjacent exactly when that maximum is zero.  Otherwise the
    optimal decomposition is returned as a witness of non-adjacency.
    """
    _require_up_monotone(v)
    xi, eta = _vertex_pair(v, xi, eta)
    verts = list(v.vertices)
    others = {k for k, z in enumerate(verts) if z != xi and z != eta}
    out = lp.solve(_decomposition_lp(verts, v.dim, xi, eta, others))
    if out.status is not lp.Status.OPTIMAL:
        raise AssertionError(f"decomposition LP returned {out.status}")
    if out.value == 0:
        return True, None
    r, n = len(verts), v.dim
    p = out.point
    witness = AdjacencyWitness(p[:r], p[r:r + n], p[r + n])
    if not witness.holds_for(verts, xi, eta):
        raise AssertionError("decomposition witness failed substitution")
    return False, witness


def adjacent_vrep(v: VRep, xi, eta) -> bool:
    return decomposition_test(v, xi, eta)[0]


def certificate_search(v: VRep, xi, eta) -> Certificate | None:
    """Separating certificate ``(c, b)`` for the pair, or ``None`` when none exists."""
    _require_up_monotone(v)
    xi, eta = _vertex_pair(v, xi, eta)
    n = v.dim
    # variables: c (n, each >= 1), b (free)
    cons = [lp.eq(list(xi) + [-ONE], ZERO), lp.eq(list(eta) + [-ONE], ZERO)]
    for z in v.vertices:
        if z != xi and z != eta:
            cons.append(lp.ge(list(z) + [-ONE], ONE))
    point = lp.feasible_point(cons, n + 1, lower_bounds=[ONE] * n + [None])
    if point is None:
        return None
    cert = Certificate(point[:n], point[n])
    if not verify_certificate(v, xi, eta, cert):
        raise AssertionError("certificate failed substitution")
    return cert


def verify_certificate(v: VRep, xi, eta, cert: Certificate) -> bool:
    xi, eta = qvec(xi), qvec(eta)
    if any(ci < 1 for ci in cert.c):
        return False
    if dot(cert.c, xi) != cert.b or dot(cert.c, eta) != cert.b:
        return False
    return all(dot(cert.c, z) >= cert.b + 1 for z in v.vertices if z != xi and z != eta)


def _pairs(k: int):
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def build_skeleton(p: HRep | VRep, method: Method = Method.RANK) -> SkeletonGraph:
    """1-skeleton of a non-empty pointed polyhedron.

    ``RANK`` works from an H-rep (converting a V-rep first).  ``VREP_LP``
    runs the decomposition test on an up-monotone V-rep (converting an H-rep
    first).  ``BOTH`` runs rank, decomposition and certificate tests on every
    pair and raises :class:`MethodDisagreement` if they differ.
    """
    method = Method(method)
    if isinstance(p, HRep):
        h = p
        v = h_to_v(h)
    else:
        v = p
        h = v_to_h(v) if method is not Method.VREP_LP else None
    if v.empty:
        raise ValueError("skeleton of an empty polyhedron")
    nodes = v.vertices
    if method is not Method.RANK:
        _require_up_monotone(v)

    oracle = RankAdjacency(h) if h is not None else None
    edges = []
    provenance = {}
    for i, j in _pairs(len(nodes)):
        xi, eta = nodes[i], nodes[j]
        verdicts = {}
        if oracle is not None:
            verdicts[RANK] = oracle.adjacent(xi, eta)
        if method is not Method.RANK:
            verdicts[DECOMPOSITION] = decomposition_test(v, xi, eta)[0]
        if method is Method.BOTH:
            verdicts[CERTIFICATE] = certificate_search(v, xi, eta) is not None
        if len(set(verdicts.values())) > 1:
            raise MethodDisagreement((xi, eta), verdicts)
        if any(verdicts.values()):
            edges.append((i, j))
            provenance[(i, j)] = tuple(sorted(verdicts))

    unbounded = []
    if oracle is not None:
        for i, x in enumerate(nodes):
            for r in v.rays:
                if oracle.unbounded_edge(x, r):
                    unbounded.append((i, r))
    return SkeletonGraph(nodes, tuple(edges), provenance, tuple(unbounded))


@dataclass(frozen=True)
class TrubinResult:
    holds: bool
    reason: str = ""
    missing: tuple[QVector, ...] = ()
    pairs: tuple[tuple[QVector, QVector], ...] = ()


def trubin_check(sub_graph: SkeletonGraph, super_graph: SkeletonGraph) -> TrubinResult:
    """Is ``sub_graph`` an induced subgraph of ``super_graph`` on shared vertex labels?"""
    super_nodes = set(super_graph.nodes)
    missing = tuple(x for x in sub_graph.nodes if x not in super_nodes)
    if missing:
        return TrubinResult(False, "missing nodes", missing=missing)
    sub_edges = sub_graph.edge_set()
    super_edges = super_graph.edge_set()
    bad = []
    for i, j in _pairs(len(sub_graph.nodes)):
        key = frozenset((sub_graph.nodes[i], sub_graph.nodes[j]))
        if (key in sub_edges) != (key in super_edges):
            bad.append((sub_graph.nodes[i], sub_graph.nodes[j]))
    if bad:
        return TrubinResult(False, "adjacency mismatch", pairs=tuple(bad))
    return TrubinResult(True)


def to_json(g: SkeletonGraph) -> str:
    """JSON document with rational strings; keys sorted, so output is byte-stable."""
    doc = {
        "nodes": [[format_rational(x) for x in v] for v in g.nodes],
        "edges": [[i, j] for i, j in g.edges],
        "provenance": {
            "edges": {f"{i},{j}": list(g.provenance.get((i, j), ())) for i, j in g.edges},
            "unbounded": [[i, [format_rational(x) for x in r]] for i, r in g.unbounded],
        },
    }
    return json.dumps(doc, sort_keys=True, indent=None, separators=(",", ":")) + "\n"


def from_json(text: str) -> SkeletonGraph:
    doc = json.loads(text)
    nodes = tuple(tuple(parse_rational(s) for s in v) for v in doc["nodes"])
    edges = tuple((int(i), int(j)) for i, j in doc["edges"])
    prov = {}
    for key, methods in doc.get("provenance", {}).get("edges", {}).items():
        i, j = key.split(",")
        prov[(int(i), int(j))] = tuple(methods)
    return SkeletonGraph(nodes, edges, prov)


def to_dot(g: SkeletonGraph) -> str:
    lines = ["graph skeleton {"]
    for i, v in enumerate(g.nodes):
        lines.append(f'  n{i} [label="{format_point(v)}"];')
    for i, j in g.edges:
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_difference(a: SkeletonGraph, b: SkeletonGraph):
    """Pairs that are edges in exactly one of the two graphs (labels compared)."""
    return a.edge_set() ^ b.edge_set()


__all__ = [
    "AdjacencyWitness", "Certificate", "Method", "SkeletonGraph", "TrubinResult",
    "adjacent_vrep", "build_skeleton", "certificate_search", "decomposition_test",
    "edge_difference", "from_json", "to_dot", "to_json", "trubin_check", "verify_certificate",
]
