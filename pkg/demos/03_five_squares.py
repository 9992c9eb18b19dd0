"""The two bounded five-squares lemmas, checked exhaustively at small scale."""
from hilbcert.squares import five_odd_squares, five_squares, oracle_all_decompositions

# %% a single decomposition and all its rivals
print("five_squares(29, 7) =", five_squares(29, 7))
print("all:", oracle_all_decompositions(29, 5, 7, False))

# %% every n below 3q^2 - 2q + 3 works
for q in range(5, 13):
    limit = 3 * q * q - 2 * q + 3
    assert all(oracle_all_decompositions(n, 5, q, False) for n in range(limit))
    print(f"q = {q:2d}: all n < {limit} are sums of 5 squares <= q")

# %% odd version
for p in range(7, 16, 2):
    limit = 3 * p * p + 2 * p + 1
    assert all(five_odd_squares(m, p) for m in range(5, limit, 8))
    print(f"p = {p:2d}: all m = 5 mod 8 below {limit} are sums of 5 odd squares <= p")
