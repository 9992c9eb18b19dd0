"""Arithmetic witnesses for curves on a quartic surface with a double line.

Given (d, g) in region A or B, build_decuple finds an integer v and
half-integers alpha_2..alpha_9 (stored doubled, so they are plain ints), turns
them into a divisor class (delta; m_1..m_9) on the blown-up plane, and then
re-verifies every inequality from the raw pair (d, g) without trusting the
construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt
from operator import ge, le, mul

from . import lattice
from .errors import InternalInvariant, NotFound, OutOfRegion, PreconditionError
from .genus_bounds import Region, fd2, gmax, region_of
from .lattice import DivisorClass, Prop312Report
from .polar import l as polar_count_bound
from .squares import five_odd_squares, five_squares

SCHEMA_VERSION = 1
D_CAP = 10**6
DOUBLE_LINE_SURFACE_DEGREE = 4
MIN_R = 73


def v_lower(d: int) -> int:
    """ceil(d/8 + 9)."""
    return (d + 72 + 7) // 8


def v_upper(d: int, region: Region) -> int:
    if region is Region.A:
        return d - 73
    if region is Region.B:
        return (d + 1) // 2
    raise OutOfRegion(f"no v-range outside regions A/B (d={d})")


def find_v(d: int, g: int, region: Region) -> int:
    """The v with F_d(v-1) < g <= F_d(v) on the increasing branch of F_d."""
    if not region.admissible:
        raise OutOfRegion(f"({d}, {g}) is outside regions A and B")
    lo, hi = v_lower(d), v_upper(d, region)
    # fd2(x) >= 2g  <=>  x^2 - (d+1)x + d + 2g <= 0; start at the smaller root
    disc = (d + 1) ** 2 - 4 * (d + 2 * g)
    if disc < 0:
        raise NotFound(f"g={g} exceeds the maximum of F_{d}")
    v = max(lo, (d + 1 - isqrt(disc)) // 2)
    while v > lo and fd2(d, v - 1) >= 2 * g:
        v -= 1
    while v <= hi and fd2(d, v) < 2 * g:
        v += 1
    if not (lo <= v <= hi and fd2(d, v - 1) < 2 * g <= fd2(d, v)):
        raise NotFound(f"no admissible v for (d, g) = ({d}, {g}) in [{lo}, {hi}]")
    return v


def build_alphas(d: int, g: int, v: int) -> tuple[int, ...]:
    """Doubled alpha_2..alpha_9, with |alpha_2| first and the rest ascending."""
    n = fd2(d, v) + 2 - 2 * g
    if n < 2:
        raise InternalInvariant(f"n = {n} < 2 for (d, g, v) = ({d}, {g}, {v})")
    if v % 2 == 0:
        q = v // 2 - 4
        if n >= 3 * q * q - 2 * q + 3:
            raise PreconditionError(
                f"five-squares bound fails: n={n} >= 3q^2-2q+3 with q={q} (d={d}, g={g})")
        parts = sorted(five_squares(n, q))
        return (0, 0, 0, *(2 * a for a in parts))
    m, p = 4 * n - 3, v - 8
    betas = sorted(five_odd_squares(m, p))
    big_m = (sum(betas) - 1) // 2
    sign = 1 if big_m % 2 == d % 2 else -1
    return (sign, 1, 1, *betas)


@dataclass(frozen=True)
class VerificationReport:
    lemma315: tuple[bool, ...]
    v_in_range: bool
    cor316: tuple[bool, ...]
    prop312: Prop312Report
    hyp392: tuple[bool, ...]
    threshold_s: bool
    threshold_2s: bool
    consistent: bool

    @property
    def passed(self) -> bool:
        return (all(self.lemma315) and self.v_in_range and all(self.cor316)
                and self.prop312.all_pass and all(self.hyp392)
                and self.threshold_s and self.threshold_2s and self.consistent)

    def failures(self) -> list[str]:
        out = [f"lemma315({i + 1})" for i, ok in enumerate(self.lemma315) if not ok]
        if not self.v_in_range:
            out.append("v_range")
        out += [f"cor316({n})" for n, ok in zip(("i", "ii", "iii", "iv", "v", "vi"), self.cor316)
                if not ok]
        out += [f"prop312.{k}" for k in ("cond1", "cond2", "cond3", "condB", "condC", "condD")
                if not getattr(self.prop312, k)]
        out += [f"hyp392[{i}]" for i, ok in enumerate(self.hyp392) if not ok]
        if not self.threshold_s:
            out.append("threshold_s")
        if not self.threshold_2s:
            out.append("threshold_2s")
        if not self.consistent:
            out.append("consistent")
        return out

    def to_dict(self) -> dict:
        return {
            "lemma315": list(self.lemma315),
            "v_range": self.v_in_range,
            "cor316": list(self.cor316),
            "prop312": self.prop312.to_dict(),
            "hyp392": list(self.hyp392),
            "threshold_s": self.threshold_s,
            "threshold_2s": self.threshold_2s,
            "consistent": self.consistent,
        }


@dataclass(frozen=True)
class CurveCertificate:
    d: int
    g: int
    region: Region
    v: int
    two_alpha: tuple[int, ...]
    delta: int
    m: tuple[int, ...]
    r: int
    report: VerificationReport | None = field(default=None, compare=False)

    @cached_property
    def divisor(self) -> DivisorClass:
        return DivisorClass(self.delta, self.m)

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "d": self.d,
            "g": self.g,
            "region": self.region.value,
            "v": self.v,
            "two_alpha": list(self.two_alpha),
            "delta": self.delta,
            "m": list(self.m),
            "r": self.r,
        }
        report = self.report if self.report is not None else verify(self)
        out["checks"] = report.to_dict()
        return out


def _lemma315_flags(d: int, g: int, v: int, ta: tuple[int, ...]) -> tuple[bool, ...]:
    if len(ta) != 8:
        return (False,) * 6
    c1 = fd2(d, v - 1) < 2 * g <= fd2(d, v)
    c2 = abs(ta[0]) <= ta[1] and all(map(le, ta[1:7], ta[2:])) and ta[7] <= v - 8
    c3 = -ta[0] + sum(ta[1:]) <= 2 * (d - v - 8)
    c4 = not any((x - v) % 2 for x in ta)
    c5 = (2 * d - sum(ta)) % 4 == 0
    c6 = 8 * g == 4 * fd2(d, v) + 8 - sum(map(mul, ta, ta))
    return (c1, c2, c3, c4, c5, c6)


def _cor316_flags(d: int, g: int, D: DivisorClass) -> tuple[bool, ...]:
    delta, m = D.a, D.m
    c1 = all(map(ge, m[:8], m[1:])) and m[8] >= 4
    c2 = delta >= m[0] + m[1] + m[2]
    c3 = m[0] >= m[1] + 4
    c4 = 3 * delta - sum(m) >= MIN_R
    c5 = d == 4 * delta - 2 * m[0] - sum(m[1:])
    c6 = 2 * g == (delta - 1) * (delta - 2) - sum(map(mul, m, m)) + sum(m)
    return (c1, c2, c3, c4, c5, c6)


def verify(cert: CurveCertificate) -> VerificationReport:
    """Recompute every condition from (d, g) and the stored witness."""
    d, g, v, ta = cert.d, cert.g, cert.v, tuple(cert.two_alpha)
    region = region_of(d, g)
    lemma = _lemma315_flags(d, g, v, ta)
    v_ok = region.admissible and region is cert.region and v_lower(d) <= v <= v_upper(d, region)

    D = cert.divisor
    cor = _cor316_flags(d, g, D)
    prop = lattice.check_prop312(D)
    r = prop.r

    hyp = (d > 28, gmax(d, 8) < g and 8 * g <= (d - 1) ** 2, r > 2 * polar_count_bound(4))
    l4 = polar_count_bound(DOUBLE_LINE_SURFACE_DEGREE)

    consistent = len(ta) == 8 and len(cert.m) == 9
    if consistent:
        twice_delta = 2 * d + 4 * v - sum(ta)
        consistent = (twice_delta % 4 == 0 and cert.delta == twice_delta // 4
                      and cert.m[0] == cert.delta - v
                      and [2 * mi for mi in cert.m[1:]] == [v - a for a in ta]
                      and cert.r == r == d - v
                      and prop.d == d and prop.g == g)
    return VerificationReport(lemma, v_ok, cor, prop, hyp, r > l4, r > 2 * l4, consistent)


def build_decuple(d: int, g: int) -> CurveCertificate:
    if not 1 <= d <= D_CAP:
        raise OutOfRegion(f"d must lie in [1, {D_CAP}]")
    region = region_of(d, g)
    if not region.admissible:
        raise OutOfRegion(f"({d}, {g}) is outside regions A and B")
    v = find_v(d, g, region)
    ta = build_alphas(d, g, v)
    twice_delta = 2 * d + 4 * v - sum(ta)
    if twice_delta % 4:
        raise InternalInvariant(f"delta is not an integer for ({d}, {g})")
    delta = twice_delta // 4
    m = (delta - v, *((v - a) // 2 for a in ta))
    r = 3 * delta - sum(m)
    if r != d - v:
        raise InternalInvariant(f"r = {r} differs from d - v = {d - v}")
    cert = CurveCertificate(d, g, region, v, ta, delta, m, r)
    report = verify(cert)
    if not report.passed:
        raise InternalInvariant(f"certificate for ({d}, {g}) fails: {', '.join(report.failures())}")
    return CurveCertificate(d, g, region, v, ta, delta, m, r, report)
