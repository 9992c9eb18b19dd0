"""A curve of degree 95 and genus 753 on a quartic with a double line.

Walks through the construction step by step and then checks it against the
intersection form of the blown-up plane.
"""
from hilbcert import build_decuple, gmax, region_of
from hilbcert.certificate import find_v
from hilbcert.genus_bounds import fd2
from hilbcert import lattice

# %% where (95, 753) sits
d, g = 95, 753
print("G(95, 8) =", gmax(d, 8), " so g is above it")
print("region:", region_of(d, g).value)

# %% the bracket F_d(v-1) < g <= F_d(v); these are doubled values
v = find_v(d, g, region_of(d, g))
print(f"v = {v}:  {fd2(d, v - 1)} < {2 * g} <= {fd2(d, v)}")

# %% the witness
cert = build_decuple(d, g)
print("2*alpha =", cert.two_alpha)
print("delta =", cert.delta, " m =", cert.m, " r =", cert.r)

# %% recompute from the lattice
D = cert.divisor
print("degree", lattice.degree(D), "genus", lattice.genus(D), "r", lattice.r_intersections(D))
print("r > 72:", cert.report.threshold_2s)
print("failed checks:", cert.report.failures() or "none")
