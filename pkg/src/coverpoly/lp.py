"""Exact rational linear programming (two-phase tableau simplex).

Pivoting follows Bland's rule throughout, so the solver terminates on every
input, degenerate ones included, and returns the same answer every time.
Every optimal answer is checked before it is returned: the primal point by
substitution into the original constraints, and an exact dual solution by
dual feasibility plus equal objective values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError
from .numeric import QVector, dot, qvec

ZERO = Fraction(0)
ONE = Fraction(1)


class Sense(enum.Enum):
    MAX = "MAX"
    MIN = "MIN"


class Relation(enum.Enum):
    GE = "GE"
    LE = "LE"
    EQ = "EQ"


class Status(enum.Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE = "INFEASIBLE"
    UNBOUNDED = "UNBOUNDED"


@dataclass(frozen=True)
class Constraint:
    row: QVector
    relation: Relation
    rhs: Fraction

    def __init__(self, row, relation: Relation, rhs):
        object.__setattr__(self, "row", qvec(row))
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "rhs", Fraction(rhs))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = dot(self.row, x)
        if self.relation is Relation.GE:
            return lhs >= self.rhs
        if self.relation is Relation.LE:
            return lhs <= self.rhs
        return lhs == self.rhs


def ge(row, rhs) -> Constraint:
    return Constraint(row, Relation.GE, rhs)


def le(row, rhs) -> Constraint:
    return Constraint(row, Relation.LE, rhs)


def eq(row, rhs) -> Constraint:
    return Constraint(row, Relation.EQ, rhs)


@dataclass(frozen=True)
class LinearProgram:
    """Optimize ``objective . x`` subject to ``constraints``.

    ``lower_bounds[j]`` is either a rational lower bound for ``x_j`` or
    ``None`` for a free variable.  Omitting ``lower_bounds`` makes every
    variable free.
    """

    objective: QVector
    sense: Sense = Sense.MAX
    constraints: tuple[Constraint, ...] = ()
    lower_bounds: tuple[Fraction | None, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "objective", qvec(self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        n = len(self.objective)
        for c in self.constraints:
            if len(c.row) != n:
                raise DimensionError(f"constraint row has length {len(c.row)}, expected {n}")
        if self.lower_bounds is not None:
            lbs = tuple(None if b is None else Fraction(b) for b in self.lower_bounds)
            if len(lbs) != n:
                raise DimensionError("lower_bounds length differs from objective length")
            object.__setattr__(self, "lower_bounds", lbs)

    @property
    def dim(self) -> int:
        return len(self.objective)

    def bounds(self) -> tuple[Fraction | None, ...]:
        if self.lower_bounds is None:
            return (None,) * self.dim
        return self.lower_bounds


@dataclass(frozen=True)
class LpOutcome:
    """Result of :func:`solve`.

    ``dual`` holds one multiplier per constraint for the minimization form of
    the program (for ``MAX`` the objective is negated first).  It satisfies
    ``sum(y_i * row_i) <= c`` on lower-bounded variables, equality on free
    ones, ``y_i >= 0`` for GE rows and ``y_i <= 0`` for LE rows.
    """

    status: Status
    value: Fraction | None = None
    point: QVector | None = None
    dual: QVector | None = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.obj: list[Fraction] = []
        self.obj_rhs = ZERO

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            self.rows[r] = prow = [v / p for v in prow]
            self.rhs[r] /= p
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(row, prow)]
                    self.rhs[i] -= f * self.rhs[r]
        f = self.obj[c]
        if f:
            self.obj = [a - f * b for a, b in zip(self.obj, prow)]
            self.obj_rhs -= f * self.rhs[r]
        self.basis[r] = c

    def set_costs(self, cost: list[Fraction]) -> None:
        self.obj = list(cost)
        self.obj_rhs = ZERO
        for i, b in enumerate(self.basis):
            f = self.obj[b]
            if f:
                self.obj = [a - f * v for a, v in zip(self.obj, self.rows[i])]
                self.obj_rhs -= f * self.rhs[i]

    def run(self, allowed: int) -> bool:
        """Minimize with Bland's rule over columns ``< allowed``.

        Returns False when the objective is unbounded below.
        """
        while True:
            enter = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter)


def solve(lp: LinearProgram) -> LpOutcome:
    n = lp.dim
    bounds = lp.bounds()
    sign = ONE if lp.sense is Sense.MIN else -ONE
    cost = [sign * c for c in lp.objective]

    # Column map: x_j = lb_j + x'_j, or x_j = x+_j - x-_j for free x_j.
    columns: list[tuple[int, int]] = []
    for j in range(n):
        columns.append((j, 1))
        if bounds[j] is None:
            columns.append((j, -1))
    shift = [b if b is not None else ZERO for b in bounds]

    std_rows: list[list[Fraction]] = []
    std_rhs: list[Fraction] = []
    flips: list[Fraction] = []
    nslack = sum(c.relation is not Relation.EQ for c in lp.constraints)
    ncore = len(columns)
    slack_at = ncore
    for c in lp.constraints:
        row = [c.row[j] * s for j, s in columns] + [ZERO] * nslack
        if c.relation is Relation.GE:
            row[slack_at] = -ONE
            slack_at += 1
        elif c.relation is Relation.LE:
            row[slack_at] = ONE
            slack_at += 1
        rhs = c.rhs - dot(c.row, shift)
        flip = ONE
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            flip = -ONE
        std_rows.append(row)
        std_rhs.append(rhs)
        flips.append(flip)
    std_cost = [cost[j] * s for j, s in columns] + [ZERO] * nslack
    nvar = ncore + nslack
    m = len(std_rows)

    # Phase 1 with one artificial per row; artificials sit after all real columns.
    rows = [r + [ONE if k == i else ZERO for k in range(m)] for i, r in enumerate(std_rows)]
    tab = _Tableau(rows, list(std_rhs), [nvar + i for i in range(m)])
    tab.set_costs([ZERO] * nvar + [ONE] * m)
    tab.run(nvar + m)
    if -tab.obj_rhs > 0:
        return LpOutcome(Status.INFEASIBLE)

    # Drive zero-level artificials out of the basis; drop rows that are redundant.
    live = []
    for i in range(m):
        if tab.basis[i] >= nvar:
            c = next((j for j in range(nvar) if tab.rows[i][j] != 0), None)
            if c is None:
                continue
            tab.pivot(i, c)
        live.append(i)
    if len(live) < m:
        tab.rows = [tab.rows[i] for i in live]
        tab.rhs = [tab.rhs[i] for i in live]
        tab.basis = [tab.basis[i] for i in live]

    # Phase 2; artificial columns stay in the tableau to read off the dual.
    tab.set_costs(std_cost + [ZERO] * m)
    if not tab.run(nvar):
        return LpOutcome(Status.UNBOUNDED)

    xs = [ZERO] * (nvar + m)
    for i, b in enumerate(tab.basis):
        xs[b] = tab.rhs[i]
    point = list(shift)
    for k, (j, s) in enumerate(columns):
        point[j] += s * xs[k]
    point = tuple(point)

    y_std = [-tab.obj[nvar + i] for i in range(m)]
    _verify_standard_dual(std_rows, std_rhs, std_cost, xs[:nvar], y_std)
    dual = tuple(f * y for f, y in zip(flips, y_std))

    for c in lp.constraints:
        if not c.satisfied_by(point):
            raise AssertionError(f"simplex returned an infeasible point for {c}")
    for j, b in enumerate(bounds):
        if b is not None and point[j] < b:
            raise AssertionError("simplex violated a lower bound")
    value = dot(lp.objective, point)
    return LpOutcome(Status.OPTIMAL, value, point, dual)


def _verify_standard_dual(rows, rhs, cost, x, y) -> None:
    """Check ``A^T y <= c`` and ``b.y == c.x`` for ``min c.x, Ax = b, x >= 0``."""
    for j in range(len(cost)):
        if sum((y[i] * rows[i][j] for i in range(len(rows))), ZERO) > cost[j]:
            raise AssertionError(f"dual infeasible in column {j}")
    if dot(rhs, y) != dot(cost, x):
        raise AssertionError("primal and dual objective values differ")


def feasible_point(constraints: Sequence[Constraint], dim: int | None = None,
                   lower_bounds=None) -> QVector | None:
    """A point satisfying every constraint exactly, or ``None`` if there is none."""
    constraints = tuple(constraints)
    if dim is None:
        if not constraints:
            raise DimensionError("dimension needed for an empty constraint list")
        dim = len(constraints[0].row)
    lp = LinearProgram((ZERO,) * dim, Sense.MAX, constraints, lower_bounds)
    out = solve(lp)
    return out.point if out.status is Status.OPTIMAL else None
