"""Dimension counts for powers of the ideal of a line in P^3.

The line is L = {X0 = X1 = 0}.  A degree-n form lies in the k-th power of its
ideal exactly when every monomial X0^a X1^b X2^c X3^e has a + b >= k, so the
counts are monomial counts.
"""
from __future__ import annotations

from itertools import product
from math import comb

from .errors import DomainError, InternalInvariant

GRASSMANNIAN_LINES_DIM = 4


def count_monomials_vanishing(n: int, k: int) -> int:
    """Brute-force count of degree-n monomials in four variables with a + b >= k."""
    total = 0
    for a, b, c in product(range(n + 1), repeat=3):
        if a + b + c <= n and a + b >= k:
            total += 1
    return total


def closed_form_vanishing(n: int, k: int) -> int:
    """C(n+3, 3) minus the (j+1)(n-j+1) monomials with a + b = j, for j < k."""
    if k > n + 1:
        raise DomainError("closed form only covers k <= n + 1")
    return comb(n + 3, 3) - sum((j + 1) * (n - j + 1) for j in range(k))


def h0_line_ideal(n: int, k: int) -> int:
    """h^0 of the k-th power of the ideal sheaf of a line, twisted by n."""
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    brute = count_monomials_vanishing(n, k)
    if k <= n + 1 and brute != closed_form_vanishing(n, k):
        raise InternalInvariant(f"monomial count mismatch at n={n}, k={k}")
    return brute


def h0_conormal_twist(n: int) -> int:
    """h^0 of the conormal bundle of a line twisted by n: two copies of O_L(n - 1)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return 2 * n


def tangent_dim_Q() -> int:
    """Tangent dimension of the space of (line, quartic double along it) pairs."""
    return GRASSMANNIAN_LINES_DIM + h0_line_ideal(4, 2) - 1


def dims_table() -> dict[str, int]:
    from .lattice import H, LTILDE, chi

    return {
        "h0(J_L(4))": h0_line_ideal(4, 1),
        "h0(J_L^2(4))": h0_line_ideal(4, 2),
        "h0(N_L^v(4))": h0_conormal_twist(4),
        "dim T_(L,S) Q": tangent_dim_Q(),
        "h0(M)": chi(4 * H - LTILDE) - 4,
        "chi(4H - Ltilde)": chi(4 * H - LTILDE),
    }
