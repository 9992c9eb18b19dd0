"""Bounded sums of five squares.

Two solvers feed the certificate construction: plain squares with parts <= q
(valid whenever n < 3q^2 - 2q + 3), and odd squares with parts <= p (valid when
m = 5 mod 8 and m < 3p^2 + 2p + 1).  Both search largest-part-first with
backtracking, so the answer is the lexicographically greatest non-increasing
solution and is fully reproducible.
"""
from __future__ import annotations

from math import isqrt
from typing import Optional

from .errors import ComplexityGuard, NoSolution, PreconditionError

PARTS = 5
ORACLE_MAX_BOUND = 40


def _search(target: int, count: int, cap: int, odd: bool) -> Optional[tuple[int, ...]]:
    if count == 0:
        return () if target == 0 else None
    floor = 1 if odd else 0
    if target < count * floor:
        return None
    top = min(cap, isqrt(target))
    if odd and top % 2 == 0:
        top -= 1
    step = 2 if odd else 1
    for a in range(top, floor - 1, -step):
        rest = target - a * a
        if rest > (count - 1) * a * a:
            # parts are non-increasing, so the remaining ones cannot catch up
            break
        tail = _search(rest, count - 1, a, odd)
        if tail is not None:
            return (a, *tail)
    return None


def five_squares(n: int, q: int) -> tuple[int, ...]:
    if n < 0 or q < 1:
        raise PreconditionError(f"need n >= 0 and q >= 1, got n={n}, q={q}")
    if n >= 3 * q * q - 2 * q + 3:
        raise PreconditionError(f"n={n} is not below 3q^2-2q+3={3 * q * q - 2 * q + 3}")
    parts = _search(n, PARTS, q, odd=False)
    if parts is None:
        raise NoSolution(f"{n} is not a sum of five squares <= {q}^2")
    return parts


def five_odd_squares(m: int, p: int) -> tuple[int, ...]:
    if p < 1:
        raise PreconditionError(f"need p >= 1, got {p}")
    if m % 8 != 5:
        raise PreconditionError(f"m={m} is not 5 mod 8")
    if m >= 3 * p * p + 2 * p + 1:
        raise PreconditionError(f"m={m} is not below 3p^2+2p+1={3 * p * p + 2 * p + 1}")
    parts = _search(m, PARTS, p, odd=True)
    if parts is None:
        raise NoSolution(f"{m} is not a sum of five odd squares <= {p}^2")
    return parts


def oracle_all_decompositions(n: int, count: int, bound: int,
                              odd_only: bool = False) -> list[tuple[int, ...]]:
    """Every non-increasing tuple of `count` parts in [0, bound] whose squares sum to n.

    With odd_only the parts are positive odd integers.  Parts can never exceed
    isqrt(n), so the complexity guard applies to min(bound, isqrt(n)).
    """
    if n < 0:
        return []
    effective = min(bound, isqrt(n))
    if effective > ORACLE_MAX_BOUND:
        raise ComplexityGuard(f"exhaustive search with parts up to {effective} refused")
    values = [a for a in range(effective, -1, -1) if not odd_only or a % 2 == 1]
    found: list[tuple[int, ...]] = []

    def walk(start: int, remaining: int, left: int, prefix: list[int]):
        if left == 0:
            if remaining == 0:
                found.append(tuple(prefix))
            return
        for idx in range(start, len(values)):
            a = values[idx]
            sq = a * a
            if sq > remaining:
                continue
            if left * sq < remaining:
                break
            prefix.append(a)
            walk(idx, remaining - sq, left - 1, prefix)
            prefix.pop()

    walk(0, n, count, [])
    return found
