import random
from itertools import product

import pytest
import sympy

from hilbcert.errors import DomainError
from hilbcert.poly import MultiPoly
from hilbcert.polar import (AFFINE_VARS, MAX_RETRIES, PROJECTIVE_VARS, PolarOutcome,
                            double_line_quartic, fermat, l, polar_count, polar_system,
                            random_coordinate_change, random_form, surface_for)

SYMS = sympy.symbols("x y z")


def to_sympy(p):
    return sum(c * sympy.Mul(*[s ** e for s, e in zip(SYMS, ex)]) for ex, c in p.terms.items())


def groebner_count(F):
    """Number of standard monomials of the polar ideal, or None if not zero-dimensional."""
    G = sympy.groebner([to_sympy(p) for p in polar_system(F)], *SYMS, order="grevlex")
    if not G.is_zero_dimensional:
        return None
    leads = [sympy.Poly(g, *SYMS).monoms(order="grevlex")[0] for g in G.exprs]
    bound = max(max(m) for m in leads)
    return sum(1 for e in product(range(bound + 1), repeat=3)
               if not any(all(a >= b for a, b in zip(e, m)) for m in leads))


def test_l():
    assert (l(1), l(2), l(3), l(4)) == (0, 2, 12, 36)
    assert 2 * l(4) == 72
    with pytest.raises(DomainError):
        l(0)


def test_polar_system_quadric():
    X0, X1, X2, X3 = MultiPoly.gens(PROJECTIVE_VARS)
    x, y, z = MultiPoly.gens(AFFINE_VARS)
    F0, Fy, Fz = polar_system(X0 ** 2 + X1 ** 2 + X2 ** 2 + X3 ** 2)
    assert F0 == 1 + x ** 2 + y ** 2 + z ** 2
    assert (Fy, Fz) == (2 * y, 2 * z)


def test_polar_system_degree():
    F0, _, _ = polar_system(random_form(3, random.Random(0)))
    assert F0.degree() <= 3


def test_double_line_in_polar_locus():
    F = double_line_quartic(random.Random(3))
    for p in polar_system(F):
        assert p.subs({"y": 0, "z": 0}) == 0


def test_rejects_bad_input():
    X0, X1, _, _ = MultiPoly.gens(PROJECTIVE_VARS)
    with pytest.raises(DomainError):
        polar_count(X0 ** 2 + X1, 0)
    with pytest.raises(DomainError):
        polar_count(fermat(5), 0)
    with pytest.raises(DomainError):
        surface_for(3, 0, double_line=True)


@pytest.mark.parametrize("s, seed", [(2, 0), (2, 1), (3, 0), (3, 1)])
def test_groebner_oracle_agrees(s, seed):
    F = surface_for(s, seed)
    assert groebner_count(F) == l(s)
    assert polar_count(F, seed) == PolarOutcome.finite(l(s), 0)


def test_groebner_oracle_double_line():
    F = surface_for(4, 1, double_line=True)
    assert groebner_count(F) is None
    assert polar_count(F, 1).kind == "posdim"


def test_fermat_cubic():
    F = random_coordinate_change(fermat(3), random.Random(7))
    assert groebner_count(F) == 12
    assert polar_count(fermat(3), 0).count == 12


def test_second_coordinate_change_invariance():
    for s, seed in ((2, 4), (3, 2)):
        F = surface_for(s, seed)
        a = polar_count(F, seed)
        b = polar_count(F, seed + 1000)
        assert a.kind == b.kind == "finite" and a.count == b.count == l(s)
        assert a.retries <= MAX_RETRIES and b.retries <= MAX_RETRIES


def test_outcome_dict():
    assert PolarOutcome.finite(12).to_dict(3) == {"outcome": "finite", "count": 12,
                                                  "expected": 12, "retries": 0}
    assert PolarOutcome.positive_dimensional(1).to_dict(4) == {"outcome": "posdim",
                                                               "expected": 36, "retries": 1}
