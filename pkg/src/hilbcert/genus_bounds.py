"""Maximal genus bound G(d, s), the parabola F_d, and the (d, g) regions.

All comparisons against half- or eighth-integral bounds are done on scaled
integers (2g, 8g); nothing here touches floating point.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InternalInvariant

REGION_A_MIN = 95
REGION_A_MAX = 146


class Region(str, enum.Enum):
    A = "A"
    B = "B"
    OUTSIDE = "Outside"

    @property
    def admissible(self) -> bool:
        return self is not Region.OUTSIDE


@lru_cache(maxsize=4096)
def gmax(d: int, s: int) -> int:
    """Maximal genus of a smooth connected curve of degree d not on a surface of degree s - 1.

    Valid for d > s(s - 1); raises DomainError otherwise.
    """
    if s < 2:
        raise DomainError(f"s must be >= 2, got {s}")
    if d <= s * (s - 1):
        raise DomainError(f"closed formula needs d > s(s-1) = {s * (s - 1)}, got d={d}")
    nu = d % s
    value = (Fraction(d * d, 2 * s) + Fraction((s - 4) * d, 2) + 1
             - Fraction((s - 1) * nu * (s - nu), 2 * s))
    if value.denominator != 1:
        raise InternalInvariant(f"G({d},{s}) = {value} is not an integer")
    return int(value)


def fd2(d: int, x: int) -> int:
    """Twice the parabola F_d(x) = (x - 1)(d - x)/2."""
    return (x - 1) * (d - x)


def genus_cap(d: int) -> int:
    """Largest g allowed by the region inequality for degree d (no lower bound applied)."""
    if REGION_A_MIN <= d <= REGION_A_MAX:
        return (73 * (d - 74)) // 2
    if d > REGION_A_MAX:
        return (d - 1) ** 2 // 8
    raise DomainError(f"no region contains degree {d}")


def region_of(d: int, g: int) -> Region:
    if d < REGION_A_MIN:
        return Region.OUTSIDE
    if g <= gmax(d, 8):
        return Region.OUTSIDE
    if d <= REGION_A_MAX:
        return Region.A if 2 * g <= 73 * (d - 74) else Region.OUTSIDE
    return Region.B if 8 * g <= (d - 1) ** 2 else Region.OUTSIDE
