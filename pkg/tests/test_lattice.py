import pytest

from hilbcert import lattice
from hilbcert.errors import DomainError
from hilbcert.lattice import (DELTA, H, K, LTILDE, ZERO, DivisorClass, check_prop312, chi,
                              degree, delta_degree_obstruction, exceptional, genus,
                              h1_vanishes_skiti, pair, r_intersections)

C95 = DivisorClass.of(66, 44, 11, 11, 11, 11, 11, 11, 9, 6)
C96 = DivisorClass.of(66, 43, 11, 11, 11, 11, 11, 11, 9, 7)


def test_constants():
    assert pair(H, H) == 4
    assert pair(K, K) == 0
    assert pair(H, K) == -2
    assert pair(LTILDE, H) == 2
    assert pair(exceptional(9), K) == -1
    assert pair(exceptional(9), exceptional(9)) == -1


def test_degree_genus_r():
    assert degree(C95) == 95
    assert genus(C95) == 753
    assert r_intersections(C95) == 73
    assert degree(H) == 4 and degree(ZERO) == 0
    assert genus(exceptional(9)) == 0
    assert genus(H) == 2
    assert r_intersections(H) == 2
    assert r_intersections(K) == 0


def test_chi():
    assert chi(4 * H - LTILDE) == 29
    assert chi(ZERO) == 1
    assert chi(K) == 1


def test_delta_degree_obstruction():
    assert (4 * H - LTILDE - C95).a == -53
    assert delta_degree_obstruction(4 * H - LTILDE - C95)
    assert (7 * H - C95).a == -38
    assert delta_degree_obstruction(7 * H - C95)
    assert not delta_degree_obstruction(H)


def test_skiti():
    L = -LTILDE - 4 * H + C95
    assert L == DivisorClass.of(47, 35, 6, 6, 6, 6, 6, 6, 4, 1)
    assert h1_vanishes_skiti(L)
    assert not h1_vanishes_skiti(ZERO)
    assert h1_vanishes_skiti(DivisorClass.of(5, 2, 2, 1, 1, 1, 1, 1, 1, -1))
    # unsorted input is sorted before checking
    assert h1_vanishes_skiti(DivisorClass.of(5, -1, 1, 1, 2, 1, 1, 2, 1, 1))
    assert not h1_vanishes_skiti(DivisorClass.of(5, 2, 2, 1, 1, 1, 1, 1, 1, -2))


@pytest.mark.parametrize("D, d, g", [(C95, 95, 753), (C96, 96, 790)])
def test_existence_criterion_worked(D, d, g):
    rep = check_prop312(D)
    assert rep.all_pass
    assert (rep.d, rep.g, rep.r) == (d, g, 73)


def test_existence_criterion_violation():
    rep = check_prop312(DivisorClass.of(10, 5, 5, 5, 1, 1, 1, 1, 1, 1))
    assert not rep.cond1
    assert not rep.all_pass


def test_existence_criterion_r_matches_pairing():
    for D in (C95, C96, H, DivisorClass.of(30, 9, 8, 7, 6, 5, 4, 3, 2, 1)):
        assert check_prop312(D).r == r_intersections(D)


def test_plane_formulas_match_pairing():
    assert lattice.plane_degree_formula(C95) == degree(C95)
    assert lattice.plane_genus_formula(C96) == genus(C96)


def test_parse_and_bounds():
    assert DivisorClass.parse("66,44,11,11,11,11,11,11,9,6") == C95
    with pytest.raises(DomainError):
        DivisorClass.parse("1,2,3")
    with pytest.raises(DomainError):
        DivisorClass.of(10 ** 6 + 1, *([0] * 9))
    with pytest.raises(DomainError):
        DivisorClass(1, (0,) * 8)


def test_delta_pairing():
    assert pair(DELTA, DELTA) == 1
    assert pair(C95, DELTA) == 66
