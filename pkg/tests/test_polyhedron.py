from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverpoly.covering import circulant3, relaxation
from coverpoly.errors import EmptyInput, NotMember, NotPointed, NotVertex
from coverpoly.numeric import qvec, unit
from coverpoly.polyhedron import (
    HRep,
    RankAdjacency,
    VRep,
    adjacent_rank,
    basic_solutions,
    contains,
    h_to_v,
    tight_rows,
    truncate_hypercube,
    up_monotone,
    v_to_h,
)
from coverpoly.verify import brute_adjacent

H = F(1, 2)


def orthant(n):
    return HRep.build([(unit(n, i), 0) for i in range(n)], n)


def units(n):
    return tuple(unit(n, i) for i in range(n))


def test_orthant():
    v = h_to_v(orthant(3))
    assert v.vertices == ((0, 0, 0),)
    assert set(v.rays) == set(units(3))


def test_circulant_relaxation():
    v = h_to_v(relaxation(circulant3()))
    assert set(v.vertices) == {qvec(p) for p in [(1, 1, 0), (0, 1, 1), (1, 0, 1), (H, H, H)]}
    assert set(v.rays) == set(units(3))


def test_circulant_cut_relaxation():
    v = h_to_v(truncate_hypercube(relaxation(circulant3())))
    assert set(v.vertices) == {qvec(p) for p in [(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1), (H, H, H)]}
    assert v.bounded


def test_duplicate_rows_rejected_but_build_dedups():
    with pytest.raises(ValueError):
        HRep(((1, 0), (1, 0)), (0, 0), 2)
    assert len(HRep.build([((1, 0), 0), ((1, 0), 0)], 2)) == 1


def test_not_pointed():
    with pytest.raises(NotPointed):
        h_to_v(HRep.build([((1, 0), 0)], 2))


def test_empty_polyhedron():
    h = HRep.build([((1,), 2), ((-1,), -1)], 1)
    assert h_to_v(h).empty


def test_shifted_orthant_truncated_is_empty():
    h = HRep.build([(unit(2, i), 2) for i in range(2)], 2)
    assert h_to_v(truncate_hypercube(h)).empty


def test_v_to_h_single_point():
    h = v_to_h(VRep.canonical([(1, 1)]))
    assert h_to_v(h).vertices == ((1, 1),)
    # a point in the plane needs exactly two equalities, i.e. four inequalities
    assert len(h) == 4


def test_v_to_h_empty_raises():
    with pytest.raises(EmptyInput):
        v_to_h(VRep.empty_set(2))


def test_v_to_h_square():
    sq = VRep.canonical([(0, 0), (1, 0), (0, 1), (1, 1)])
    h = v_to_h(sq)
    assert len(h) == 4
    assert h_to_v(h) == sq


def test_v_to_h_up_monotone_hull():
    v = VRep.canonical([(1, 1, 0), (0, 1, 1), (1, 0, 1)], units(3))
    h = v_to_h(v)
    assert h_to_v(h) == v
    assert contains(h, (H, H, H + H)) and not contains(h, (H, H, H))


def test_truncation_idempotent():
    h = truncate_hypercube(relaxation(circulant3()))
    assert truncate_hypercube(h) == h


def test_contains_and_tight_rows():
    h = relaxation(circulant3())
    assert contains(h, (H, H, H))
    assert not contains(h, (0, 0, 1))
    assert tight_rows(h, (1, 1, 0)) == tight_rows(h, (1, 1, 0))
    assert len(tight_rows(h, (H, H, H))) == 3
    with pytest.raises(NotMember):
        tight_rows(h, (0, 0, 0))


def test_adjacent_rank_circulant():
    h = relaxation(circulant3())
    assert not adjacent_rank(h, (1, 1, 0), (0, 1, 1))
    assert adjacent_rank(h, (1, 1, 0), (H, H, H))
    hb = truncate_hypercube(h)
    assert adjacent_rank(hb, (1, 1, 0), (0, 1, 1))
    with pytest.raises(NotVertex):
        adjacent_rank(h, (1, 1, 1), (1, 1, 0))
    with pytest.raises(ValueError):
        adjacent_rank(h, (1, 1, 0), (1, 1, 0))


def test_unbounded_edges():
    ra = RankAdjacency(relaxation(circulant3()))
    assert ra.unbounded_edge(qvec((1, 1, 0)), unit(3, 0))
    assert not ra.unbounded_edge(qvec((H, H, H)), unit(3, 0))


def test_up_monotone():
    assert up_monotone(relaxation(circulant3())).holds
    w = up_monotone(HRep.build([((1, -1), 0)], 2))
    assert not w.holds and w.violating_ray_index == 1
    assert up_monotone(VRep.canonical([(0, 0)], [(1, 0), (1, 1), (0, 1)])).holds
    w = up_monotone(VRep.canonical([(0, 0)], [(1, 0)]))
    assert not w.holds and w.violating_ray_index == 1
    assert up_monotone(VRep.canonical([(0, 0)], [(2, 1), (0, 1)])).holds is False
    assert up_monotone(VRep.canonical([(0, 0)], [(1, -1), (0, 1)])).holds


coef = st.integers(-3, 3)


@st.composite
def boxed_systems(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    k = draw(st.integers(0, 5))
    pairs = [(draw(st.lists(coef, min_size=n, max_size=n)), draw(st.integers(-3, 3))) for _ in range(k)]
    pairs = [(r, b) for r, b in pairs if any(r)]
    return truncate_hypercube(HRep.build([(r, F(b, 2)) for r, b in pairs], n))


@settings(max_examples=120, deadline=None)
@given(boxed_systems())
def test_h_to_v_matches_basic_solutions(h):
    v = h_to_v(h)
    assert list(v.vertices) == basic_solutions(h)
    assert not v.rays


@settings(max_examples=80, deadline=None)
@given(boxed_systems())
def test_round_trip(h):
    v = h_to_v(h)
    if v.empty:
        return
    h2 = v_to_h(v)
    assert h_to_v(h2) == v
    assert all(contains(h2, x) for x in v.vertices)
    # every inequality produced is tight somewhere, so none is trivially loose
    for i in range(len(h2)):
        assert any(i in tight_rows(h2, x) for x in v.vertices)


@settings(max_examples=60, deadline=None)
@given(boxed_systems(max_dim=3))
def test_rank_adjacency_matches_midpoint_oracle(h):
    v = h_to_v(h)
    if v.empty:
        return
    ra = RankAdjacency(h)
    for a, b in combinations(v.vertices, 2):
        assert ra.adjacent(a, b) == brute_adjacent(v, a, b)
        assert ra.adjacent(a, b) == ra.adjacent(b, a)


def test_every_vertex_has_full_rank_tight_set():
    h = truncate_hypercube(relaxation(circulant3()))
    ra = RankAdjacency(h)
    for x in h_to_v(h).vertices:
        ra.check_vertex(x)
