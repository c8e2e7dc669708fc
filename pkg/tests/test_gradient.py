from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import CUBE_T3
from smallcovers.covers import Coloring, enumerate_characteristic
from smallcovers.errors import SmallCoverError
from smallcovers.gradient import (
    TowerSummary,
    atkinson_check,
    atkinson_interval,
    b1_bound_sequence,
    closed_form_limit,
    commensurable_bounds,
    rgr_ratios,
    rs_upper_bound,
)
from smallcovers.tower import build_tower


@pytest.fixture(scope="module")
def dodeca_tower():
    from smallcovers.polytope import builtin

    p = builtin("dodecahedron")
    return build_tower(p, next(enumerate_characteristic(p)), "min-face", 10)


@pytest.fixture(scope="module")
def cube_tower():
    from smallcovers.polytope import builtin

    return build_tower(builtin("cube"), Coloring(3, CUBE_T3), "round-robin", 10)


def truncate(t, depth):
    s = TowerSummary(tuple(l.V for l in t.levels), tuple(l.index_over_base for l in t.levels), tuple(t.ks))
    return TowerSummary(s.V[: depth + 1], s.index[: depth + 1], s.ks[:depth])


def test_rs_upper_bound():
    assert rs_upper_bound(10, 8) == 73
    assert rs_upper_bound(1, 1000) == 1
    assert rs_upper_bound(2, 1) == 2
    with pytest.raises(SmallCoverError):
        rs_upper_bound(0, 3)


def test_b1_bounds(dodeca_tower, cube_tower):
    assert b1_bound_sequence(dodeca_tower)[:4] == [9, 14, 24, 44]
    assert b1_bound_sequence(truncate(cube_tower, 3)) == [3, 3, 3, 3]
    assert b1_bound_sequence(truncate(dodeca_tower, 0)) == [9]


def test_commensurable(dodeca_tower, cube_tower):
    assert commensurable_bounds(truncate(dodeca_tower, 2)) == [8, 13, 23]
    assert set(commensurable_bounds(cube_tower)) == {2}
    assert commensurable_bounds(truncate(dodeca_tower, 0)) == [8]


def test_closed_form_limit():
    assert closed_form_limit(20, [5]) == 5
    assert closed_form_limit(20, [5] * 7) == 5
    assert closed_form_limit(8, [4]) == 0
    assert closed_form_limit(20, [5, 6]) == Fraction(9, 2)
    with pytest.raises(SmallCoverError):
        closed_form_limit(20, [])


@given(st.integers(10, 200).map(lambda v: 2 * v), st.lists(st.integers(3, 9), min_size=1, max_size=8))
def test_closed_form_is_the_limit_of_the_recurrence(V0, ks):
    # run the recurrence far enough that the constant tail dominates; compare exactly
    V = V0
    seq = list(ks) + [ks[-1]] * 60
    for j, k in enumerate(seq):
        V = 2 * V - 2 * k
    depth = len(seq)
    # V_j/2^j - limit*2 = 2 * k_last / 2^(depth-1) ... residual of the tail
    limit = closed_form_limit(V0, ks)
    ratio = Fraction(V - 4, 2 ** (depth + 1))
    assert abs(ratio - limit) < Fraction(1, 2**40) * (V0 + 10)


def test_dodecahedron_ratios(dodeca_tower):
    rep = rgr_ratios(dodeca_tower)
    assert rep.ratios[:4] == [8, Fraction(13, 2), Fraction(23, 4), Fraction(43, 8)]
    for r in rep.rows:
        assert r.ratio == 5 + Fraction(6, 2 ** (r.j + 1))
        assert r.paper_ratio - r.ratio == Fraction(1, 2 ** (r.j + 1))
    assert rep.converged and rep.limit_estimate == 5


def test_cube_ratios(cube_tower):
    rep = rgr_ratios(cube_tower)
    assert rep.ratios[:3] == [2, 1, Fraction(1, 2)]
    assert rep.limit_estimate == 0


def test_depth_zero_ratio(dodeca_tower):
    rep = rgr_ratios(truncate(dodeca_tower, 0))
    assert rep.ratios == [8]
    assert not rep.converged and rep.limit_estimate == 8


def test_non_constant_tail_flags():
    rep = rgr_ratios(TowerSummary((20, 30, 48), (1, 2, 4), (5, 6)))
    assert not rep.converged


def test_rs_sandwich(dodeca_tower, cube_tower):
    for t in (dodeca_tower, cube_tower):
        V0 = t.levels[0].V
        for r in range(V0 // 2 - 1, V0 // 2 + 5):
            rep = rgr_ratios(t, base_rank=r)
            for row in rep.rows:
                assert row.commensurable_b1 <= row.rs_upper - 1


def test_atkinson_dodecahedron(dodeca_tower):
    rep = atkinson_check(dodeca_tower, Fraction(5, 6))
    assert rep.precondition_ok
    assert all(l.passes and l.V == l.required for l in rep.levels)
    assert rep.rho_max == Fraction(5, 6)
    assert rep.conditional
    rep = atkinson_check(dodeca_tower, 1)
    assert not any(l.passes for l in rep.levels[1:])
    assert rep.levels[0].required == 22  # the seed itself already misses: 20 < 22
    # C and D given separately
    assert atkinson_check(dodeca_tower, 5, 6).rho == Fraction(5, 6)


def test_atkinson_cube_precondition(cube_tower):
    rep = atkinson_check(cube_tower, Fraction(1, 2))
    assert not rep.precondition_ok
    assert "not > 8" in rep.message and "realizability" in rep.message
    assert rep.rho_max is None


def test_atkinson_errors(dodeca_tower):
    with pytest.raises(SmallCoverError):
        atkinson_check(dodeca_tower, 0)
    with pytest.raises(SmallCoverError):
        atkinson_interval(20, 1, -1)


def test_atkinson_interval():
    iv = atkinson_interval(20, Fraction(1, 2), 1)
    assert (iv.lo, iv.hi) == (6, 10) and iv.consistent
    assert not atkinson_interval(8, 1, 1).consistent


def test_report_carries_atkinson(dodeca_tower, cube_tower):
    assert all(r.atkinson_pass for r in rgr_ratios(dodeca_tower, rho=Fraction(5, 6)).rows)
    rep = rgr_ratios(cube_tower, rho=Fraction(1, 2))
    assert all(r.atkinson_pass is None for r in rep.rows)
    assert rep.notes
