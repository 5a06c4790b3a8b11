"""Poincare-Hilbert series of the R-exterior algebra and the bi-rank."""
from hecke_rea import hp_series, standard_R, super_flip, super_schur
from hecke_rea.hpseries import hook_test

# dim Lambda^k_R(V) for k = 0..K is fitted by N(t)/D(-t); deg N, deg D give the bi-rank.
for H in (standard_R(3), super_flip(2, 1), super_flip(1, 1)):
    s = hp_series(H)
    print(f"{H.name:16s} N = {s.numerator}  D = {s.denominator}  bi-rank = {s.birank}")
    print("   exterior dims", s.expand(6), " symmetric dims", s.expand_plus(6))

# From N and D alone we get the dimension of every V_lambda: a super Schur function.
s = hp_series(super_flip(2, 1))
for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
    print(lam, "in hook:", hook_test(lam, 2, 1), " dim =", super_schur(lam, s.numerator, s.denominator))
