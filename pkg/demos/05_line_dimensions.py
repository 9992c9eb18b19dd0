"""Dimension counts for a line in P^3 and its quartic neighbourhood."""
from hilbcert.lattice import H, LTILDE, chi
from hilbcert.line_ideal import dims_table, h0_line_ideal

# %% quartics through L, and singular along L
for k in range(4):
    print(f"quartics vanishing to order {k} along a line: {h0_line_ideal(4, k)}")

# %% the bookkeeping table
for name, value in dims_table().items():
    print(f"{name:<22} {value}")
print("chi(4H - Ltilde) =", chi(4 * H - LTILDE))
