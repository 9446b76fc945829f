from fractions import Fraction as F
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverpoly import lp
from coverpoly.covering import circulant3, minimal_covers
from coverpoly.errors import DimensionError
from coverpoly.numeric import dot, solve as linsolve


def check_dual(prog: lp.LinearProgram, out: lp.LpOutcome):
    """Verify the returned dual multipliers in the original variable space."""
    sign = 1 if prog.sense is lp.Sense.MIN else -1
    c = [sign * x for x in prog.objective]
    y = out.dual
    for yi, con in zip(y, prog.constraints):
        if con.relation is lp.Relation.GE:
            assert yi >= 0
        elif con.relation is lp.Relation.LE:
            assert yi <= 0
    total = sum((yi * con.rhs for yi, con in zip(y, prog.constraints)), F(0))
    for j, lb in enumerate(prog.bounds()):
        reduced = c[j] - sum((yi * con.row[j] for yi, con in zip(y, prog.constraints)), F(0))
        if lb is None:
            assert reduced == 0
        else:
            assert reduced >= 0
            total += lb * reduced
    assert total == sign * out.value


def brute_optimum(prog: lp.LinearProgram):
    """Best objective over all basic feasible solutions (bounded, pointed programs only)."""
    n = prog.dim
    rows = [(c.row, c.rhs) for c in prog.constraints]
    for j, lb in enumerate(prog.bounds()):
        rows.append((tuple(F(int(i == j)) for i in range(n)), lb))
    best = None
    for idx in combinations(range(len(rows)), n):
        x = linsolve([rows[i][0] for i in idx], [rows[i][1] for i in idx])
        if x is None:
            continue
        if not all(con.satisfied_by(x) for con in prog.constraints):
            continue
        if any(lb is not None and x[j] < lb for j, lb in enumerate(prog.bounds())):
            continue
        v = dot(prog.objective, x)
        if best is None or (v > best if prog.sense is lp.Sense.MAX else v < best):
            best = v
    return best


def test_bounded_max():
    prog = lp.LinearProgram([1], lp.Sense.MAX, [lp.le([1], 5)], [0])
    out = lp.solve(prog)
    assert out.status is lp.Status.OPTIMAL
    assert out.value == 5
    assert out.point == (5,)
    check_dual(prog, out)


def test_unbounded():
    out = lp.solve(lp.LinearProgram([1], lp.Sense.MAX, [lp.ge([1], 0)]))
    assert out.status is lp.Status.UNBOUNDED


def test_infeasible():
    out = lp.solve(lp.LinearProgram([0], lp.Sense.MAX, [lp.ge([1], 1), lp.le([1], 0)]))
    assert out.status is lp.Status.INFEASIBLE


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        lp.LinearProgram([1, 1], lp.Sense.MAX, [lp.le([1], 5)])


def test_feasible_point_segment():
    x = lp.feasible_point([lp.eq([1, 1], 1), lp.ge([1, 0], 0), lp.ge([0, 1], 0)])
    assert x is not None
    assert x[0] + x[1] == 1 and min(x) >= 0


def test_feasible_point_infeasible():
    assert lp.feasible_point([lp.ge([1], 1), lp.le([1], 0)]) is None


def test_free_variable_split():
    # min x subject to x >= -3 with x free
    prog = lp.LinearProgram([1], lp.Sense.MIN, [lp.ge([1], -3)])
    out = lp.solve(prog)
    assert out.value == -3
    check_dual(prog, out)


def test_redundant_equalities():
    prog = lp.LinearProgram([1, 2], lp.Sense.MAX,
                            [lp.eq([1, 1], 2), lp.eq([2, 2], 4), lp.le([1, 0], 5)], [0, 0])
    out = lp.solve(prog)
    assert out.value == 4 and out.point == (0, 2)
    check_dual(prog, out)


def test_beale_degenerate_cycling_example():
    # Cycles under the largest-coefficient rule; Bland's rule must terminate.
    prog = lp.LinearProgram(
        [F(-3, 4), 20, F(-1, 2), 6], lp.Sense.MIN,
        [lp.le([F(1, 4), -8, -1, 9], 0), lp.le([F(1, 2), -12, F(-1, 2), 3], 0), lp.le([0, 0, 1, 0], 1)],
        [0, 0, 0, 0])
    out = lp.solve(prog)
    assert out.status is lp.Status.OPTIMAL
    assert out.value == brute_optimum(prog) == F(-5, 4)
    check_dual(prog, out)


def test_kuhn_degenerate_example():
    prog = lp.LinearProgram(
        [-2, -3, 1, 12], lp.Sense.MIN,
        [lp.le([-2, -9, 1, 9], 0), lp.le([F(1, 3), 1, F(-1, 3), -2], 0), lp.le([2, 3, -1, -12], 2)],
        [0, 0, 0, 0])
    out = lp.solve(prog)
    assert out.status is lp.Status.OPTIMAL
    assert out.value == brute_optimum(prog)
    check_dual(prog, out)


def test_circulant_decomposition_system_puts_weight_on_pair_only():
    # Oracle: enumerate weights, slack-free segment points on a grid of step 1/6.
    xi, eta = (F(1), F(1), F(0)), (F(0), F(1), F(1))
    verts = minimal_covers(circulant3())
    third = next(v for v in verts if v not in (xi, eta))
    grid = [F(k, 6) for k in range(7)]
    seen_third = False
    feasible = 0
    for l1, l2, t in product(grid, grid, grid):
        l3 = 1 - l1 - l2
        if l3 < 0:
            continue
        z = [l1 * a + l2 * b + l3 * c for a, b, c in zip(xi, eta, third)]
        target = [t * a + (1 - t) * b for a, b in zip(xi, eta)]
        if all(tv - zv >= 0 for tv, zv in zip(target, z)):
            feasible += 1
            seen_third |= l3 > 0
    assert feasible > 0 and not seen_third

    # Same system through the kernel: maximize the third weight; optimum is zero.
    cons = []
    for i in range(3):
        cons.append(lp.eq([xi[i], eta[i], third[i]] + [int(j == i) for j in range(3)] + [-(xi[i] - eta[i])],
                          eta[i]))
    cons.append(lp.eq([1, 1, 1, 0, 0, 0, 0], 1))
    cons.append(lp.le([0] * 6 + [1], 1))
    prog = lp.LinearProgram([0, 0, 1, 0, 0, 0, 0], lp.Sense.MAX, cons, [0] * 7)
    out = lp.solve(prog)
    assert out.status is lp.Status.OPTIMAL and out.value == 0
    check_dual(prog, out)


small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(small, min_size=n, max_size=n),
    st.lists(st.tuples(st.lists(small, min_size=n, max_size=n),
                       st.sampled_from(list(lp.Relation)), small), max_size=4),
    st.sampled_from(list(lp.Sense)))))
def test_random_boxed_programs_match_brute_force(data):
    obj, raw, sense = data
    n = len(obj)
    cons = [lp.Constraint(r, rel, b) for r, rel, b in raw]
    cons += [lp.le([int(i == j) for i in range(n)], 5) for j in range(n)]
    prog = lp.LinearProgram(obj, sense, cons, [F(-2)] * n)
    out = lp.solve(prog)
    expected = brute_optimum(prog)
    if expected is None:
        assert out.status is lp.Status.INFEASIBLE
    else:
        assert out.status is lp.Status.OPTIMAL
        assert out.value == expected
        assert all(c.satisfied_by(out.point) for c in cons)
        check_dual(prog, out)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(small, min_size=n, max_size=n),
    st.lists(st.tuples(st.lists(small, min_size=n, max_size=n), small), max_size=4))))
def test_free_variables_deterministic(data):
    obj, raw = data
    prog = lp.LinearProgram(obj, lp.Sense.MAX, [lp.ge(r, b) for r, b in raw])
    first, second = lp.solve(prog), lp.solve(prog)
    assert first == second
    if first.status is lp.Status.OPTIMAL:
        check_dual(prog, first)
