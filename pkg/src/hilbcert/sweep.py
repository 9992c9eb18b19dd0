"""Certify every (d, g) of regions A and B over a range of degrees."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .certificate import CurveCertificate, build_decuple, v_lower, v_upper, verify
from .errors import ComplexityGuard, HilbCertError, PreconditionError
from .genus_bounds import REGION_A_MIN, fd2, genus_cap, gmax, region_of
from .squares import oracle_all_decompositions

ORACLE_MAX_DEGREE = 200


@dataclass
class SweepReport:
    d_min: int
    d_max: int
    pairs_total: int = 0
    pairs_passed: int = 0
    failures: list[tuple[int, int, str]] = field(default_factory=list)
    r_identity_holds: int = 0
    min_r: int | None = None
    wall_time: float = 0.0

    @property
    def all_passed(self) -> bool:
        return self.pairs_passed == self.pairs_total and not self.failures

    def merge(self, other: "SweepReport") -> None:
        self.pairs_total += other.pairs_total
        self.pairs_passed += other.pairs_passed
        self.failures.extend(other.failures)
        self.r_identity_holds += other.r_identity_holds
        if other.min_r is not None:
            self.min_r = other.min_r if self.min_r is None else min(self.min_r, other.min_r)

    def to_dict(self) -> dict:
        return {
            "d_range": [self.d_min, self.d_max],
            "pairs_total": self.pairs_total,
            "pairs_passed": self.pairs_passed,
            "failures": [list(f) for f in self.failures],
            "r_identity_holds": self.r_identity_holds,
            "min_r": self.min_r,
            "wall_time": round(self.wall_time, 3),
        }


def genus_range(d: int) -> range:
    """All g with G(d, 8) < g <= the region cap."""
    return range(gmax(d, 8) + 1, genus_cap(d) + 1)


def sweep_degree(d: int) -> SweepReport:
    report = SweepReport(d, d)
    for g in genus_range(d):
        report.pairs_total += 1
        try:
            cert = build_decuple(d, g)
        except HilbCertError as exc:
            report.failures.append((d, g, f"{type(exc).__name__}: {exc}"))
            continue
        report.pairs_passed += 1
        if cert.r == d - cert.v:
            report.r_identity_holds += 1
        report.min_r = cert.r if report.min_r is None else min(report.min_r, cert.r)
    return report


def sweep(d_min: int, d_max: int, workers: int = 1) -> SweepReport:
    if not REGION_A_MIN <= d_min <= d_max:
        raise PreconditionError(f"need {REGION_A_MIN} <= d_min <= d_max, got [{d_min}, {d_max}]")
    start = time.perf_counter()
    degrees = range(d_min, d_max + 1)
    if workers <= 1:
        parts = map(sweep_degree, degrees)
        total = _merge(d_min, d_max, parts)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves input order, so the merge is in d-order
            total = _merge(d_min, d_max, pool.map(sweep_degree, degrees, chunksize=4))
    total.wall_time = time.perf_counter() - start
    return total


def _merge(d_min: int, d_max: int, parts) -> SweepReport:
    total = SweepReport(d_min, d_max)
    for part in parts:
        total.merge(part)
    return total


def oracle_exists(d: int, g: int) -> bool:
    """Exhaustively look for any valid witness for (d, g), without the greedy solver."""
    if d > ORACLE_MAX_DEGREE:
        raise ComplexityGuard(f"oracle limited to d <= {ORACLE_MAX_DEGREE}")
    region = region_of(d, g)
    if not region.admissible:
        return False
    for v in range(v_lower(d), v_upper(d, region) + 1):
        if not fd2(d, v - 1) < 2 * g <= fd2(d, v):
            continue
        n = fd2(d, v) + 2 - 2 * g
        if n < 0:
            continue
        # doubled alphas: 8 parts of parity v, bounded by v - 8, squares summing to 4n
        for parts in oracle_all_decompositions(4 * n, 8, v - 8, odd_only=bool(v % 2)):
            if any((p - v) % 2 for p in parts):
                continue
            ascending = sorted(parts)
            signs = (1, -1) if ascending[0] else (1,)
            for sign in signs:
                ta = (sign * ascending[0], *ascending[1:])
                twice_delta = 2 * d + 4 * v - sum(ta)
                if twice_delta % 4:
                    continue
                delta = twice_delta // 4
                m = (delta - v, *((v - a) // 2 for a in ta))
                cert = CurveCertificate(d, g, region, v, ta, delta, m, 3 * delta - sum(m))
                if verify(cert).passed:
                    return True
    return False
