"""Divisor classes on the plane blown up at nine points.

A class is written D = a*Delta - sum(m_i * E_i), so the multi-integer
(a; m_1, ..., m_9) is stored exactly as it is usually quoted.  The pairing has
signature (1, 9): Delta^2 = 1, E_i^2 = -1, all other products zero.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from operator import add, ge, mul, neg, sub
from typing import Sequence

from .errors import DomainError, InternalInvariant, ParityError

ENTRY_BOUND = 10**6
RANK = 10


@dataclass(frozen=True)
class DivisorClass:
    a: int
    m: tuple[int, ...]

    def __post_init__(self):
        m = self.m
        if type(m) is not tuple or not set(map(type, m)) <= {int}:
            m = tuple(int(x) for x in m)
        if len(m) != 9:
            raise DomainError(f"expected 9 multiplicities, got {len(m)}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "a", int(self.a))
        if not (-ENTRY_BOUND <= self.a <= ENTRY_BOUND and -ENTRY_BOUND <= min(m) and max(m) <= ENTRY_BOUND):
            raise DomainError(f"divisor entries must stay within +-{ENTRY_BOUND}")

    @classmethod
    def _make(cls, a: int, m: tuple[int, ...]) -> "DivisorClass":
        # arithmetic results: entries are already ints of the right length
        if not (-ENTRY_BOUND <= a <= ENTRY_BOUND and -ENTRY_BOUND <= min(m) and max(m) <= ENTRY_BOUND):
            raise DomainError(f"divisor entries must stay within +-{ENTRY_BOUND}")
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "m", m)
        return obj

    @classmethod
    def of(cls, a: int, *m: int) -> "DivisorClass":
        return cls(a, tuple(m))

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        """Parse "a,m1,...,m9"."""
        parts = [int(p) for p in text.replace(" ", "").split(",") if p]
        if len(parts) != RANK:
            raise DomainError(f"expected {RANK} comma-separated integers, got {len(parts)}")
        return cls(parts[0], tuple(parts[1:]))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass._make(self.a + other.a, tuple(map(add, self.m, other.m)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass._make(self.a - other.a, tuple(map(sub, self.m, other.m)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass._make(-self.a, tuple(map(neg, self.m)))

    def __rmul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass._make(k * self.a, tuple(k * x for x in self.m))

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a, *self.m)

    def __str__(self):
        return "(" + str(self.a) + "; " + ",".join(map(str, self.m)) + ")"


ZERO = DivisorClass(0, (0,) * 9)
DELTA = DivisorClass(1, (0,) * 9)
H = DivisorClass(4, (2, 1, 1, 1, 1, 1, 1, 1, 1))
K = DivisorClass(-3, (-1,) * 9)
LTILDE = -K
_B_SHIFT = 4 * H - LTILDE
_C_SHIFT = 7 * H
_SKITI_SHIFT = -LTILDE - 4 * H


def exceptional(i: int) -> DivisorClass:
    """Class E_i (1-based), which has multiplicity -1 in slot i."""
    m = [0] * 9
    m[i - 1] = -1
    return DivisorClass(0, tuple(m))


def pair(D: DivisorClass, E: DivisorClass) -> int:
    return D.a * E.a - sum(map(mul, D.m, E.m))


def degree(D: DivisorClass) -> int:
    """Degree of the image curve in P^3, i.e. D.H."""
    return pair(D, H)


def _twice_genus_minus_two(D: DivisorClass) -> int:
    value = pair(D, D) + pair(D, K)
    if value % 2:
        raise ParityError(f"D^2 + D.K is odd for {D}")
    return value


def genus(D: DivisorClass) -> int:
    """Arithmetic genus by adjunction."""
    return _twice_genus_minus_two(D) // 2 + 1


def r_intersections(D: DivisorClass) -> int:
    """Number of points D meets the double curve in, D.Ltilde = 3a - sum(m)."""
    return pair(D, LTILDE)


def chi(D: DivisorClass) -> int:
    """Riemann-Roch Euler characteristic 1 + (D^2 - D.K)/2."""
    value = pair(D, D) - pair(D, K)
    if value % 2:
        raise ParityError(f"D^2 - D.K is odd for {D}")
    return 1 + value // 2


def delta_degree_obstruction(D: DivisorClass) -> bool:
    """True when D.Delta < 0; Delta is nef, so D has no sections."""
    return pair(D, DELTA) < 0


def h1_vanishes_skiti(L: DivisorClass) -> bool:
    """Skiti's sufficient criterion for H^1(L) = 0 on the blown-up plane."""
    a = L.a
    b = sorted(L.m, reverse=True)
    return (a > b[0]
            and a >= b[0] + b[1] + b[2]
            and pair(L, LTILDE) > 0
            and b[8] >= -1)


def plane_genus_formula(D: DivisorClass) -> int:
    """[(a-1)(a-2) - sum m_i(m_i-1)]/2, the plane-model form of the genus."""
    value = (D.a - 1) * (D.a - 2) - sum(x * (x - 1) for x in D.m)
    if value % 2:
        raise ParityError(f"plane genus formula is half-integral for {D}")
    return value // 2


def plane_degree_formula(D: DivisorClass) -> int:
    return 4 * D.a - 2 * D.m[0] - sum(D.m[1:])


@dataclass(frozen=True)
class Prop312Report:
    """Hypotheses of the smooth-curve existence criterion and its vanishing addenda.

    cond1: a >= m1 + m2 + m3
    cond2: m1 > m2 >= ... >= m9 >= 1
    cond3: r >= 3
    condB: a > 13, so h^0(4H - Ltilde - C) = 0
    condC: a > 28, so h^0(7H - C) = 0
    condD: m9 >= 4, m1 >= m2 + 4, r >= 9, a > m1 + 10, so h^1(4H - C) = 0
    """
    cond1: bool
    cond2: bool
    cond3: bool
    condB: bool
    condC: bool
    condD: bool
    d: int
    g: int
    r: int

    @property
    def all_pass(self) -> bool:
        return all((self.cond1, self.cond2, self.cond3, self.condB, self.condC, self.condD))

    def to_dict(self) -> dict:
        return asdict(self)


def check_prop312(D: DivisorClass) -> Prop312Report:
    a, m = D.a, D.m
    r = r_intersections(D)
    cond1 = a >= m[0] + m[1] + m[2]
    cond2 = m[0] > m[1] and all(map(ge, m[1:8], m[2:])) and m[8] >= 1
    cond3 = r >= 3
    condB = delta_degree_obstruction(_B_SHIFT - D)
    condC = delta_degree_obstruction(_C_SHIFT - D)
    condD = m[8] >= 4 and m[0] >= m[1] + 4 and r >= 9 and a > m[0] + 10
    if condB != (a > 13) or condC != (a > 28):
        raise InternalInvariant(f"Delta-degree obstruction disagrees with the a-bounds for {D}")
    if cond1 and cond2 and condD:
        L = _SKITI_SHIFT + D
        if not h1_vanishes_skiti(L):
            raise InternalInvariant(f"condition (d) holds but Skiti's criterion fails on {L}")
    return Prop312Report(cond1, cond2, cond3, condB, condC, condD, degree(D), genus(D), r)


def divisor_from(values: Sequence[int]) -> DivisorClass:
    values = list(values)
    return DivisorClass(values[0], tuple(values[1:]))
