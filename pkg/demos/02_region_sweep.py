"""Certify every admissible genus for degrees 95..300."""
import sys

from hilbcert import sweep

d_max = int(sys.argv[1]) if len(sys.argv) > 1 else 300

# %% region A, then region B
for lo, hi in ((95, 146), (147, d_max)):
    if lo > hi:
        continue
    report = sweep(lo, hi, workers=1)
    print(f"d in [{lo}, {hi}]: {report.pairs_passed}/{report.pairs_total} certified, "
          f"min r = {report.min_r}, {report.wall_time:.1f}s")
    for failure in report.failures[:5]:
        print("  failure:", failure)
