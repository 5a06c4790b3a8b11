"""Semiclassical limit: the classical r-matrix and the Poisson pencil on gl(m)^*."""
from hecke_rea import poisson

# r satisfies the classical Yang-Baxter equation and is the first-order term of R P at q = 1.
for m in (2, 3):
    print(f"m={m}: CYBE {poisson.cybe_check(m).ok}  R P = I + nu r + ... {poisson.r_expansion_check(m).ok}")

# The linear (Poisson-Lie) bracket and the quadratic bracket are compatible:
# every combination a {,}_PL + b {,}_r satisfies Jacobi.
L = poisson.gens(2)
pl, r = poisson.bracket_pl(2), poisson.bracket_r(2)
print("{l12, l21}_PL =", pl(L[0][1], L[1][0]))
print("{l12, l21}_r  =", r(L[0][1], L[1][0]))
for ab in [(1, 0), (0, 1), (3, -2)]:
    print("Jacobi for", ab, poisson.pencil_jacobi(3, *ab)[0])

# Half of the quadratic bracket is not Poisson on its own in rank 3
print("{,}_+ Jacobi violation (m=3):", poisson.plus_bracket_search(3))

# Restricted to sl(2), both brackets are explicit
for c in poisson.sl2_tables().checks:
    print("  ", c.status, c.name)
