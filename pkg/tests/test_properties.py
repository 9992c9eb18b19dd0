"""Property suites; runnable standalone with `pytest tests/test_properties.py`."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from hilbcert import lattice
from hilbcert.certificate import build_decuple
from hilbcert.genus_bounds import fd2, gmax
from hilbcert.lattice import K, ZERO, DivisorClass, chi, pair
from hilbcert.line_ideal import closed_form_vanishing, count_monomials_vanishing
from hilbcert.squares import five_squares, oracle_all_decompositions
from hilbcert.sweep import genus_range, oracle_exists

entry = st.integers(-50, 50)
divisors = st.builds(lambda a, m: DivisorClass(a, tuple(m)), entry, st.lists(entry, min_size=9, max_size=9))
scalars = st.integers(-20, 20)


def random_divisor(rng, bound=50):
    return DivisorClass(rng.randint(-bound, bound), tuple(rng.randint(-bound, bound) for _ in range(9)))


def check_bilinear(D, E, F, a, b):
    assert pair(D, E) == pair(E, D)
    assert pair(a * D + b * E, F) == a * pair(D, F) + b * pair(E, F)


def check_adjunction(D):
    assert lattice.genus(D) == lattice.plane_genus_formula(D)
    twice = (D.a - 1) * (D.a - 2) - sum(x * (x - 1) for x in D.m)
    assert 2 * lattice.genus(D) == twice


def test_bilinearity_1000_seeded():
    rng = random.Random(20260101)
    for _ in range(1000):
        check_bilinear(*(random_divisor(rng) for _ in range(3)), rng.randint(-20, 20), rng.randint(-20, 20))


def test_adjunction_1000_seeded():
    rng = random.Random(20260102)
    for _ in range(1000):
        check_adjunction(random_divisor(rng))


@settings(max_examples=300, deadline=None)
@given(divisors, divisors, divisors, scalars, scalars)
def test_bilinearity_hypothesis(D, E, F, a, b):
    check_bilinear(D, E, F, a, b)


@settings(max_examples=300, deadline=None)
@given(divisors)
def test_adjunction_and_chi_identity(D):
    check_adjunction(D)
    assert chi(D) + chi(K - D) == 2 * chi(ZERO) + pair(D, D - K)


@settings(max_examples=300, deadline=None)
@given(divisors)
def test_degree_and_r_formulas(D):
    a, m = D.a, D.m
    assert lattice.degree(D) + lattice.r_intersections(D) == (4 * a - 2 * m[0] - sum(m[1:])) + (3 * a - sum(m))
    assert lattice.degree(D) == lattice.plane_degree_formula(D)


def test_solver_agrees_with_oracle_95_to_120():
    for d in range(95, 121):
        for g in genus_range(d):
            assert oracle_exists(d, g)
            cert = build_decuple(d, g)
            assert lattice.degree(cert.divisor) == d and lattice.genus(cert.divisor) == g
        assert not oracle_exists(d, gmax(d, 8))
        assert not oracle_exists(d, genus_range(d).stop)


def test_g5_exceeds_g8():
    for d in range(95, 1001):
        assert gmax(d, 5) > gmax(d, 8)


@settings(max_examples=200, deadline=None)
@given(st.integers(5, 14).flatmap(lambda q: st.tuples(st.just(q), st.integers(0, 3 * q * q - 2 * q + 2))))
def test_five_squares_member_of_oracle(qn):
    q, n = qn
    sol = five_squares(n, q)
    assert sol in oracle_all_decompositions(n, 5, q, False)
    assert sum(x * x for x in sol) == n and all(0 <= x <= q for x in sol)


@given(st.integers(-300, 300), st.integers(-300, 300))
def test_fd2_symmetry(d, x):
    assert fd2(d, x) == fd2(d, d + 1 - x)


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n + 1))))
def test_enumeration_matches_closed_form(nk):
    assert count_monomials_vanishing(*nk) == closed_form_vanishing(*nk)
