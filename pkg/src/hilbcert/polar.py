"""Polar loci of surfaces in P^3 with respect to a pencil of planes.

For a surface S = {F = 0} and the axis {X0 = X1 = 0}, the polar points are the
points of S whose tangent plane contains the axis.  In the chart X0 = 1 they
are the common zeros of F0 = F(1, x, y, z), dF0/dy and dF0/dz.  For a smooth
surface of degree s and a generic axis there are exactly l(s) = s(s-1)^2 of
them; for a quartic singular along a line the polar locus contains that line.

The count is obtained by elimination.  After a random linear change of
coordinates and the substitution x = u - b*y - c*z, two resultant chains

    E(u) = Res_y(Res_z(F0, G_1), Res_z(F0, G_2)),   G_i = dF0/dy + t_i dF0/dz

are formed for two different pairs (t_1, t_2).  Each contains the u-values of
the polar points plus unrelated spurious roots; the gcd keeps the former, and
the degree of its squarefree part is the number of distinct points.  The
univariate eliminants are recovered exactly by evaluating at integer points
and interpolating, with Sylvester matrices at fixed formal degrees so that
evaluation commutes with the resultant.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional

from .errors import DomainError
from .poly import (MultiPoly, interpolate, partial, resultant, squarefree_part, u_degree,
                   u_eval, u_gcd, u_resultant, univariate_coeffs)

PROJECTIVE_VARS = ("X0", "X1", "X2", "X3")
AFFINE_VARS = ("x", "y", "z")
ELIM_VARS = ("u", "y", "z")
MAX_RETRIES = 5
COEFF_RANGE = 9
CHANGE_RANGE = 3


def l(s: int) -> int:
    """s(s-1)^2: degree of the dual of a smooth surface of degree s."""
    if s < 1:
        raise DomainError("surface degree must be >= 1")
    return s * (s - 1) ** 2


@dataclass(frozen=True)
class PolarOutcome:
    kind: str  # "finite" | "posdim" | "degenerate"
    count: Optional[int] = None
    retries: int = 0

    @classmethod
    def finite(cls, count: int, retries: int = 0) -> "PolarOutcome":
        return cls("finite", count, retries)

    @classmethod
    def positive_dimensional(cls, retries: int = 0) -> "PolarOutcome":
        return cls("posdim", None, retries)

    @classmethod
    def degenerate(cls, retries: int) -> "PolarOutcome":
        return cls("degenerate", None, retries)

    def to_dict(self, s: Optional[int] = None) -> dict:
        out: dict = {"outcome": self.kind}
        if self.count is not None:
            out["count"] = self.count
        if s is not None:
            out["expected"] = l(s)
        out["retries"] = self.retries
        return out


# surfaces

def random_form(s: int, rng: random.Random, coeff_range: int = COEFF_RANGE) -> MultiPoly:
    """Dense homogeneous form of degree s in X0..X3 with integer coefficients."""
    terms = {}
    for combo in combinations_with_replacement(range(4), s):
        e = [0, 0, 0, 0]
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = rng.randint(-coeff_range, coeff_range)
    return MultiPoly(PROJECTIVE_VARS, terms)


def fermat(s: int) -> MultiPoly:
    X = MultiPoly.gens(PROJECTIVE_VARS)
    return sum((x ** s for x in X[1:]), X[0] ** s)


def double_line_quartic(rng: random.Random) -> MultiPoly:
    """A*X2^2 + B*X2*X3 + C*X3^2 for random quadrics A, B, C: singular along X2 = X3 = 0."""
    A, B, C = (random_form(2, rng) for _ in range(3))
    _, _, X2, X3 = MultiPoly.gens(PROJECTIVE_VARS)
    return A * X2 ** 2 + B * X2 * X3 + C * X3 ** 2


def random_coordinate_change(F: MultiPoly, rng: random.Random) -> MultiPoly:
    """F composed with a random invertible integer matrix."""
    from .poly import det_bareiss

    while True:
        M = [[rng.randint(-CHANGE_RANGE, CHANGE_RANGE) for _ in range(4)] for _ in range(4)]
        if det_bareiss(M):
            break
    X = MultiPoly.gens(PROJECTIVE_VARS)
    images = {}
    for i, name in enumerate(PROJECTIVE_VARS):
        images[name] = sum((M[i][j] * X[j] for j in range(4)), MultiPoly(PROJECTIVE_VARS))
    return F.compose(images, PROJECTIVE_VARS)


# the polar system

def _check_form(F: MultiPoly) -> int:
    if F.variables != PROJECTIVE_VARS:
        raise DomainError(f"expected a form in {PROJECTIVE_VARS}")
    if F.is_zero() or not F.is_homogeneous():
        raise DomainError("F must be a nonzero homogeneous form")
    s = F.degree()
    if s < 2:
        raise DomainError("surface degree must be >= 2")
    return s


def polar_system(F: MultiPoly) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """(F0, dF0/dy, dF0/dz) in the chart X0 = 1 for the axis X0 = X1 = 0."""
    _check_form(F)
    x, y, z = MultiPoly.gens(AFFINE_VARS)
    one = MultiPoly.const(AFFINE_VARS, 1)
    F0 = F.compose({"X0": one, "X1": x, "X2": y, "X3": z}, AFFINE_VARS)
    return F0, partial(F0, "y"), partial(F0, "z")


# elimination

class _Degenerate(Exception):
    pass


def _inner_resultant(f: MultiPoly, g: MultiPoly, s: int) -> list[list]:
    """Res_z(f, g) as a dense table: entry [j] lists the u-coefficients of y^j.

    Recovered by interpolation in u; f and g must have constant z-leading
    coefficients so that specialising u commutes with the resultant.
    """
    inner = s * (s - 1)
    for p, k in ((f, s), (g, s - 1)):
        lead = p.coefficients_in("z")
        if len(lead) != k + 1 or not lead[k].is_constant():
            raise _Degenerate("z-leading coefficient is not a nonzero constant")
    xs = _nodes(inner + 2)
    samples = []
    for u0 in xs:
        r = resultant(f.subs({"u": u0}), g.subs({"u": u0}), "z", (s, s - 1))
        if r.degree("y") > inner:
            raise _Degenerate("inner resultant exceeds its degree bound")
        row = univariate_coeffs(r, "y") if r else []
        samples.append(row + [0] * (inner + 1 - len(row)))
    table = []
    for j in range(inner + 1):
        ys = [row[j] for row in samples]
        coeffs = interpolate(xs[:-1], ys[:-1])
        if u_degree(coeffs) > inner - j or u_eval(coeffs, xs[-1]) != ys[-1]:
            raise _Degenerate("inner resultant exceeds its degree bound")
        table.append(coeffs)
    return table


def _nodes(count: int) -> list[int]:
    """Integer interpolation nodes 0, 1, -1, 2, -2, ... (small magnitudes)."""
    return [(k + 1) // 2 * (1 if k % 2 else -1) for k in range(count)]


def _specialise(table: list[list], u0: int) -> list:
    return [u_eval(c, u0) for c in table]


def _eliminant(r1: list[list], r2: list[list], s: int) -> list:
    """Dense u-coefficients of Res_y(r1, r2) taken at formal y-degree s(s-1) each."""
    inner = s * (s - 1)
    if not r1[inner] and not r2[inner]:
        raise _Degenerate("both inner resultants lost their y-leading coefficient")
    bound = inner * inner
    xs = _nodes(bound + 2)
    values = [u_resultant(_specialise(r1, u0), _specialise(r2, u0), inner, inner) for u0 in xs]
    if not any(values):
        return []
    coeffs = interpolate(xs[:-1], values[:-1])
    if u_eval(coeffs, xs[-1]) != values[-1]:
        raise _Degenerate("eliminant exceeds its degree bound")
    return coeffs


def _count_one_projection(system, s: int, rng: random.Random) -> Optional[int]:
    """Distinct polar points seen through one random linear form; None if positive-dimensional."""
    f, fy, fz = system
    b = rng.choice([k for k in range(-COEFF_RANGE, COEFF_RANGE + 1) if k])
    c = rng.choice([k for k in range(-COEFF_RANGE, COEFF_RANGE + 1) if k])
    u, y, z = MultiPoly.gens(ELIM_VARS)
    images = {"x": u - b * y - c * z, "y": y, "z": z}
    f, fy, fz = (p.compose(images, ELIM_VARS) for p in (f, fy, fz))
    t = rng.sample([k for k in range(-COEFF_RANGE, COEFF_RANGE + 1) if k], 3)
    r0, r1, r2 = (_inner_resultant(f, fy + k * fz, s) for k in t)
    e1 = _eliminant(r0, r1, s)
    e2 = _eliminant(r0, r2, s)
    if not e1 and not e2:
        return None
    if not e1 or not e2:
        raise _Degenerate("only one eliminant vanishes identically")
    common = u_gcd(e1, e2)
    return u_degree(squarefree_part(common))


def polar_count(F: MultiPoly, seed: int) -> PolarOutcome:
    """Number of polar points of {F = 0} for a seeded generic axis."""
    s = _check_form(F)
    if s > 4:
        raise DomainError("polar_count is limited to surfaces of degree <= 4")
    rng = random.Random(seed)
    for attempt in range(MAX_RETRIES):
        G = random_coordinate_change(F, rng)
        system = polar_system(G)
        try:
            first = _count_one_projection(system, s, rng)
            second = _count_one_projection(system, s, rng)
        except _Degenerate:
            continue
        if first is None and second is None:
            return PolarOutcome.positive_dimensional(attempt)
        if first is not None and first == second and first <= l(s):
            return PolarOutcome.finite(first, attempt)
    return PolarOutcome.degenerate(MAX_RETRIES)


def surface_for(s: int, seed: int, double_line: bool = False) -> MultiPoly:
    """The seeded test surface used by the command line and the acceptance suite."""
    rng = random.Random(seed)
    if double_line:
        if s != 4:
            raise DomainError("the double-line family consists of quartics")
        return double_line_quartic(rng)
    return random_form(s, rng)
