"""Rational polyhedra in inequality (H) and generator (V) form.

Conversion in both directions uses the double description method on the
homogenized cone, with exact integer arithmetic.  Constraints are processed
one at a time in input order and candidate ray pairs are filtered by the
combinatorial (zero-set) adjacency test, so the output depends only on the
input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from . import lp
from .errors import DimensionError, EmptyInput, NotMember, NotPointed, NotVertex
from .numeric import QVector, dot, integer_rank, integer_row, primitive, qvec, solve, unit

ZERO = Fraction(0)


@dataclass(frozen=True)
class HRep:
    """The polyhedron ``{x : rows[i] . x >= rhs[i] for all i}``."""

    rows: tuple[QVector, ...]
    rhs: QVector
    dim: int

    def __post_init__(self):
        rows = tuple(qvec(r) for r in self.rows)
        rhs = qvec(self.rhs)
        if len(rows) != len(rhs):
            raise DimensionError("rows and rhs differ in length")
        for r in rows:
            if len(r) != self.dim:
                raise DimensionError(f"row of length {len(r)} in dimension {self.dim}")
        if len(set(zip(rows, rhs))) != len(rows):
            raise ValueError("duplicate (row, rhs) pair; use HRep.build to deduplicate")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "rhs", rhs)

    @classmethod
    def build(cls, pairs: Iterable[tuple[Sequence, object]], dim: int) -> HRep:
        """Construct from ``(row, rhs)`` pairs, dropping exact duplicates in order."""
        seen = set()
        rows, rhs = [], []
        for row, b in pairs:
            key = (qvec(row), Fraction(b))
            if key not in seen:
                seen.add(key)
                rows.append(key[0])
                rhs.append(key[1])
        return cls(tuple(rows), tuple(rhs), dim)

    def pairs(self):
        return zip(self.rows, self.rhs)

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class VRep:
    """``conv(vertices) + cone(rays)``, or the empty set when ``empty`` is set.

    Use :meth:`canonical` to build one: vertices are deduplicated and sorted,
    rays are scaled to coprime integers, deduplicated and sorted.
    """

    vertices: tuple[QVector, ...]
    rays: tuple[QVector, ...]
    dim: int
    empty: bool = False

    @classmethod
    def canonical(cls, vertices: Iterable[Sequence], rays: Iterable[Sequence] = (),
                  dim: int | None = None) -> VRep:
        verts = sorted(set(qvec(v) for v in vertices))
        rs = set()
        for r in rays:
            p = primitive(r)
            if not any(p):
                raise ValueError("zero ray")
            rs.add(tuple(Fraction(x) for x in p))
        rays_sorted = sorted(rs)
        if dim is None:
            if not verts and not rays_sorted:
                raise DimensionError("cannot infer dimension of an empty generator list")
            dim = len((verts or rays_sorted)[0])
        for g in verts + rays_sorted:
            if len(g) != dim:
                raise DimensionError(f"generator of length {len(g)} in dimension {dim}")
        return cls(tuple(verts), tuple(rays_sorted), dim, empty=not verts)

    @classmethod
    def empty_set(cls, dim: int) -> VRep:
        return cls((), (), dim, empty=True)

    @property
    def bounded(self) -> bool:
        return not self.rays


@dataclass(frozen=True)
class UpMonotoneWitness:
    """Whether every ``e_i`` lies in the recession cone.

    ``violating_ray_index`` is the first coordinate ``i`` whose direction
    ``e_i`` is missing from the cone.
    """

    holds: bool
    violating_ray_index: int | None = None


# -- double description ----------------------------------------------------


def _norm(v: Sequence[int]) -> tuple[int, ...]:
    g = gcd(*v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def double_description(constraints: Sequence[Sequence[int]], d: int):
    """Generators of the cone ``{y in Z^d : a . y >= 0 for a in constraints}``.

    Returns ``(lineality, rays)`` where ``lineality`` is a basis of the
    lineality space and ``rays`` are the extreme rays of the cone modulo that
    space, each as a primitive integer tuple.
    """
    lineality = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays: list[tuple[int, ...]] = []
    zeros: list[int] = []
    for k, a in enumerate(constraints):
        bit = 1 << k
        vals = [_idot(a, l) for l in lineality]
        pick = next((i for i, v in enumerate(vals) if v != 0), None)
        if pick is not None:
            l0 = lineality[pick]
            s = vals[pick]
            if s < 0:
                l0 = tuple(-x for x in l0)
                s = -s
            rest = []
            for i, l in enumerate(lineality):
                if i == pick:
                    continue
                v = vals[i]
                rest.append(_norm([s * x - v * y for x, y in zip(l, l0)]) if v else l)
            lineality = rest
            new_rays = []
            for r in rays:
                v = _idot(a, r)
                new_rays.append(_norm([s * x - v * y for x, y in zip(r, l0)]) if v else r)
            rays = new_rays + [_norm(l0)]
            # l0 was orthogonal to every earlier constraint
            zeros = [z | bit for z in zeros] + [bit - 1]
            continue

        vals = [_idot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        need = d - len(lineality) - 2
        created = []
        for i in pos:
            for j in neg:
                common = zeros[i] & zeros[j]
                if common.bit_count() < need:
                    continue
                if any(t != i and t != j and common & zeros[t] == common
                       for t in range(len(rays))):
                    continue
                vi, vj = vals[i], -vals[j]
                new = _norm([vi * y + vj * x for x, y in zip(rays[i], rays[j])])
                created.append((new, common | bit))
        keep = pos + zer
        keep.sort()
        rays_next = [rays[i] for i in keep]
        zeros_next = [zeros[i] | (bit if vals[i] == 0 else 0) for i in keep]
        for r, z in created:
            rays_next.append(r)
            zeros_next.append(z)
        rays, zeros = rays_next, zeros_next
    return lineality, rays


def h_to_v(h: HRep) -> VRep:
    """Vertices and extreme rays of a pointed polyhedron.

    Raises :class:`NotPointed` when the (non-empty) polyhedron contains a
    line.  An empty polyhedron gives a :class:`VRep` with ``empty`` set.
    """
    n = h.dim
    cons = [[0] * n + [1]]
    for row, b in h.pairs():
        cons.append(integer_row(list(row) + [-b]))
    lineality, rays = double_description(cons, n + 1)
    if not any(r[n] > 0 for r in rays):
        return VRep.empty_set(n)
    if lineality:
        raise NotPointed("polyhedron contains a line")
    vertices = []
    directions = []
    for r in rays:
        t = r[n]
        if t > 0:
            vertices.append(tuple(Fraction(x, t) for x in r[:n]))
        else:
            directions.append(r[:n])
    return VRep.canonical(vertices, directions, n)


def v_to_h(v: VRep) -> HRep:
    """Irredundant inequality system for ``conv(vertices) + cone(rays)``.

    Implicit equalities are emitted as pairs of opposite inequalities.
    """
    if v.empty or not v.vertices:
        raise EmptyInput("need at least one vertex")
    n = v.dim
    gens = [integer_row(list(p) + [1]) for p in v.vertices]
    gens += [integer_row(list(r) + [0]) for r in v.rays]
    lineality, rays = double_description(gens, n + 1)
    pairs = []
    for y in lineality:
        if any(y[:n]):
            pairs.append((y[:n], -y[n]))
            pairs.append((tuple(-x for x in y[:n]), y[n]))
    # Modulo the equalities, one ray may be the homogenizing facet t >= 0
    # (a trivially true inequality) in disguise; it is the ray whose span
    # together with the lineality space contains e_{n+1}.
    top = tuple(int(i == n) for i in range(n + 1))
    base = [list(l) for l in lineality]
    for y in rays:
        with_y = base + [list(y)]
        if integer_rank(with_y + [list(top)]) == integer_rank(with_y):
            continue
        pairs.append((y[:n], -y[n]))
    return HRep.build(pairs, n)


def truncate_hypercube(h: HRep) -> HRep:
    """Intersect with ``[0,1]^n`` by appending ``x_i >= 0`` and ``-x_i >= -1``."""
    n = h.dim
    extra = [(unit(n, i), 0) for i in range(n)]
    extra += [(tuple(-x for x in unit(n, i)), -1) for i in range(n)]
    return HRep.build(list(h.pairs()) + extra, n)


def contains(h: HRep, x: Sequence[Fraction]) -> bool:
    if len(x) != h.dim:
        raise DimensionError(f"point of length {len(x)} in dimension {h.dim}")
    return all(dot(row, x) >= b for row, b in h.pairs())


def tight_rows(h: HRep, x: Sequence[Fraction]) -> frozenset[int]:
    if not contains(h, x):
        raise NotMember(f"point {tuple(map(str, x))} violates the system")
    return frozenset(i for i, (row, b) in enumerate(h.pairs()) if dot(row, x) == b)


class RankAdjacency:
    """Adjacency of vertices by the rank of their common tight constraints.

    Two distinct vertices are adjacent exactly when the constraints tight at
    both have rank ``n - 1``, i.e. the smallest face containing them is a
    segment.  Tight sets and ranks are cached, so one instance can serve an
    all-pairs loop cheaply.
    """

    def __init__(self, h: HRep):
        self.h = h
        self.n = h.dim
        self._int_rows = [integer_row(r) for r in h.rows]
        self._tight: dict[QVector, int] = {}
        self._rank = lru_cache(maxsize=None)(self._rank_of_mask)

    def _rank_of_mask(self, mask: int) -> int:
        rows = [r for i, r in enumerate(self._int_rows) if mask >> i & 1]
        return integer_rank(rows)

    def tight_mask(self, x: QVector) -> int:
        x = qvec(x)
        mask = self._tight.get(x)
        if mask is None:
            mask = 0
            for i in tight_rows(self.h, x):
                mask |= 1 << i
            self._tight[x] = mask
        return mask

    def check_vertex(self, x: QVector) -> int:
        mask = self.tight_mask(x)
        if mask.bit_count() < self.n or self._rank(mask) < self.n:
            raise NotVertex(f"{tuple(map(str, x))} is not a vertex")
        return mask

    def adjacent(self, xi: QVector, eta: QVector) -> bool:
        xi, eta = qvec(xi), qvec(eta)
        if xi == eta:
            raise ValueError("adjacency needs two distinct vertices")
        common = self.check_vertex(xi) & self.check_vertex(eta)
        if common.bit_count() < self.n - 1:
            return False
        return self._rank(common) == self.n - 1

    def unbounded_edge(self, x: QVector, ray: QVector) -> bool:
        """True when ``{x + t*ray : t >= 0}`` is an edge of the polyhedron."""
        mask = self.check_vertex(x)
        for i, row in enumerate(self.h.rows):
            if mask >> i & 1 and dot(row, ray) != 0:
                mask &= ~(1 << i)
        return self._rank(mask) == self.n - 1


def adjacent_rank(h: HRep, xi: Sequence[Fraction], eta: Sequence[Fraction]) -> bool:
    return RankAdjacency(h).adjacent(qvec(xi), qvec(eta))


def up_monotone(p: HRep | VRep) -> UpMonotoneWitness:
    """Check that the recession cone contains every canonical direction."""
    n = p.dim
    if isinstance(p, HRep):
        for i in range(n):
            if any(row[i] < 0 for row in p.rows):
                return UpMonotoneWitness(False, i)
        return UpMonotoneWitness(True)
    rays = set(p.rays)
    for i in range(n):
        e = unit(n, i)
        if e in rays:
            continue
        if not p.rays or not _in_cone(e, p.rays):
            return UpMonotoneWitness(False, i)
    return UpMonotoneWitness(True)


def _in_cone(target: QVector, rays: Sequence[QVector]) -> bool:
    k = len(rays)
    cons = [lp.eq([r[i] for r in rays], target[i]) for i in range(len(target))]
    return lp.feasible_point(cons, k, lower_bounds=[ZERO] * k) is not None


def basic_solutions(h: HRep) -> list[QVector]:
    """Brute-force vertex oracle: feasible unique solutions of every n-subset of rows."""
    found = set()
    for idx in combinations(range(len(h.rows)), h.dim):
        x = solve([h.rows[i] for i in idx], [h.rhs[i] for i in idx])
        if x is not None and contains(h, x):
            found.add(x)
    return sorted(found)
