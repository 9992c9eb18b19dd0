"""Polar points of surfaces in P^3 for a generic pencil of planes.

A smooth surface of degree s has s(s-1)^2 of them. A quartic that is singular
along a line carries the whole line in its polar locus.
"""
import time

from hilbcert.polar import fermat, l, polar_count, surface_for

# %% a few smooth random surfaces
for s in (2, 3):
    for seed in range(3):
        start = time.perf_counter()
        out = polar_count(surface_for(s, seed), seed)
        print(f"degree {s}, seed {seed}: {out.kind} {out.count} (expected {l(s)}) "
              f"{time.perf_counter() - start:.2f}s")

# %% the Fermat cubic
print("Fermat cubic:", polar_count(fermat(3), 0))

# %% quartics with a double line
for seed in range(3):
    print(f"double-line quartic, seed {seed}:", polar_count(surface_for(4, seed, True), seed).kind)
