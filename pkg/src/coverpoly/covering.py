"""Set covering matrices and their four polyhedra.

For a binary matrix ``A`` with ``n`` columns:

* ``Q``        the relaxation ``{x : Ax >= 1, x >= 0}``
* ``QBAR``     ``Q`` intersected with the unit cube
* ``QSTAR``    the integer hull of ``Q`` (the dominant of the covering polytope)
* ``QSTARBAR`` the convex hull of the binary covers

``QSTAR`` is built from its vertices, the minimal binary covers, together
with the canonical directions as rays.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionError, FormatError, InfeasibleRow, NonBinaryVertex
from .numeric import QVector, is_binary, qvec, unit
from .polyhedron import HRep, VRep, truncate_hypercube, v_to_h

log = logging.getLogger(__name__)

ONE = Fraction(1)


class PolyhedronKind(enum.Enum):
    Q = "q"
    QBAR = "qbar"
    QSTAR = "qstar"
    QSTARBAR = "qstarbar"


@dataclass(frozen=True)
class CoveringMatrix:
    """Binary ``m x n`` matrix with no zero rows and no repeated rows.

    ``dropped`` records the 1-based input rows removed as duplicates; it does
    not take part in equality.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int
    dropped: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if self.n < 1:
            raise FormatError("a covering matrix needs at least one column")
        for i, r in enumerate(rows, 1):
            if len(r) != self.n:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {self.n}")
            if any(v not in (0, 1) for v in r):
                raise FormatError(f"row {i} has a non-binary entry")
            if not any(r):
                raise InfeasibleRow(i)
        if len(set(rows)) != len(rows):
            raise FormatError("duplicate rows; use CoveringMatrix.from_rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], n: int | None = None) -> CoveringMatrix:
        rows = [tuple(int(v) for v in r) for r in rows]
        if n is None:
            if not rows:
                raise FormatError("cannot infer column count of an empty matrix")
            n = len(rows[0])
        seen = set()
        kept, dropped = [], []
        for i, r in enumerate(rows, 1):
            if r in seen:
                dropped.append(i)
                continue
            seen.add(r)
            kept.append(r)
        for i, r in enumerate(kept, 1):
            if len(r) == n and not any(r):
                raise InfeasibleRow(i)
        if dropped:
            log.warning("dropped duplicate rows %s", dropped)
        return cls(tuple(kept), n, tuple(dropped))

    @property
    def m(self) -> int:
        return len(self.rows)

    def row_masks(self) -> list[int]:
        return [sum(1 << j for j, v in enumerate(r) if v) for r in self.rows]

    def covers(self, x: Sequence) -> bool:
        return all(sum(a * v for a, v in zip(r, x)) >= 1 for r in self.rows)

    def to_text(self) -> str:
        lines = [f"{self.m} {self.n}"]
        lines += [" ".join(str(v) for v in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    def compact(self) -> list[str]:
        return ["".join(str(v) for v in r) for r in self.rows]


def parse_matrix(text: str) -> CoveringMatrix:
    """Parse the matrix text format.

    The first non-comment line holds ``m n``; the next ``m`` lines hold ``n``
    tokens each, every token ``0`` or ``1``.  Lines starting with ``#`` are
    comments; blank lines are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("missing header line 'm n'")
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise FormatError(f"bad header line: {lines[0]!r}")
    m, n = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body, 1):
        toks = ln.split()
        if len(toks) != n:
            raise FormatError(f"row {i} has {len(toks)} entries, expected {n}")
        if any(t not in ("0", "1") for t in toks):
            raise FormatError(f"row {i} has a non-binary entry")
        rows.append(tuple(int(t) for t in toks))
    for i, r in enumerate(rows, 1):
        if not any(r):
            raise InfeasibleRow(i)
    return CoveringMatrix.from_rows(rows, n)


def _mask_to_vector(mask: int, n: int) -> QVector:
    return tuple(Fraction(mask >> j & 1) for j in range(n))


def minimal_covers(a: CoveringMatrix) -> list[QVector]:
    """All inclusion-minimal binary covers, sorted lexicographically.

    Ordered depth-first search over columns deciding include/exclude.  A
    branch is cut when some uncovered row can no longer be covered by the
    undecided columns, or when an included column has lost every row that
    only it covers.
    """
    n = a.n
    rows = a.row_masks()
    col_rows = [sum(1 << i for i, r in enumerate(rows) if r >> j & 1) for j in range(n)]
    all_rows = (1 << len(rows)) - 1
    # rows_from[j]: rows touched by columns j..n-1
    rows_from = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        rows_from[j] = rows_from[j + 1] | col_rows[j]

    found = []

    def private_ok(chosen: list[int]) -> bool:
        for c in chosen:
            others = 0
            for d in chosen:
                if d != c:
                    others |= col_rows[d]
            if not col_rows[c] & ~others:
                return False
        return True

    def dfs(j: int, chosen: list[int], covered: int) -> None:
        if covered == all_rows:
            if private_ok(chosen):
                found.append(sum(1 << c for c in chosen))
            return
        if j == n or (covered | rows_from[j]) != all_rows:
            return
        if col_rows[j] & ~covered:
            chosen.append(j)
            if private_ok(chosen):
                dfs(j + 1, chosen, covered | col_rows[j])
            chosen.pop()
        dfs(j + 1, chosen, covered)

    dfs(0, [], 0)
    return sorted(_mask_to_vector(m, n) for m in found)


def brute_force_minimal_covers(a: CoveringMatrix) -> list[QVector]:
    """Oracle: scan all ``2^n`` binary vectors, keep covers with no covering proper subset."""
    n = a.n
    rows = a.row_masks()
    feasible = [all(r & s for r in rows) for s in range(1 << n)]
    out = []
    for s in range(1 << n):
        if not feasible[s]:
            continue
        sub = (s - 1) & s
        minimal = True
        while sub != s:
            if feasible[sub]:
                minimal = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & s
        if minimal:
            out.append(_mask_to_vector(s, n))
    return sorted(out)


def lift(indices: Iterable[int], x: Sequence[Fraction]) -> QVector:
    """Set the coordinates listed in ``indices`` (0-based) to one."""
    x = qvec(x)
    idx = frozenset(indices)
    if any(i < 0 or i >= len(x) for i in idx):
        raise DimensionError(f"lift index out of range for dimension {len(x)}")
    return tuple(ONE if i in idx else v for i, v in enumerate(x))


def lift_closure(vertices: Iterable[Sequence[Fraction]]) -> list[QVector]:
    """Every lift of every input vertex, deduplicated and sorted.

    Inputs must be binary.  Lifting a coordinate that is already one changes
    nothing, so only subsets of the zero coordinates are enumerated.
    """
    out = set()
    for z in vertices:
        z = qvec(z)
        if not is_binary(z):
            raise NonBinaryVertex(f"{tuple(map(str, z))} is not binary")
        zero = [i for i, v in enumerate(z) if v == 0]
        for k in range(len(zero) + 1):
            for sub in combinations(zero, k):
                out.add(lift(sub, z))
    return sorted(out)


def relaxation(a: CoveringMatrix) -> HRep:
    n = a.n
    pairs = [(r, 1) for r in a.rows] + [(unit(n, i), 0) for i in range(n)]
    return HRep.build(pairs, n)


def integer_hull(a: CoveringMatrix) -> VRep:
    n = a.n
    return VRep.canonical(minimal_covers(a), [unit(n, i) for i in range(n)], n)


def covering_polytope(a: CoveringMatrix) -> VRep:
    return VRep.canonical(lift_closure(minimal_covers(a)), (), a.n)


def covering_polytope_by_truncation(a: CoveringMatrix) -> HRep:
    """Inequalities of the integer hull, cut by the unit cube."""
    return truncate_hypercube(v_to_h(integer_hull(a)))


def build(a: CoveringMatrix, kind: PolyhedronKind) -> HRep | VRep:
    """``Q`` and ``QBAR`` come back as H-reps, ``QSTAR`` and ``QSTARBAR`` as V-reps.

    For ``QSTARBAR`` the V-rep is the lift closure of the minimal covers; the
    independent cube-truncation construction is
    :func:`covering_polytope_by_truncation`.
    """
    if kind is PolyhedronKind.Q:
        return relaxation(a)
    if kind is PolyhedronKind.QBAR:
        return truncate_hypercube(relaxation(a))
    if kind is PolyhedronKind.QSTAR:
        return integer_hull(a)
    if kind is PolyhedronKind.QSTARBAR:
        return covering_polytope(a)
    raise ValueError(kind)


def circulant3() -> CoveringMatrix:
    """The 3x3 circulant matrix whose relaxation has vertex (1/2,1/2,1/2)."""
    return CoveringMatrix.from_rows([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
