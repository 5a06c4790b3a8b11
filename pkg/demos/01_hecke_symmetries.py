"""Hecke symmetries: build, certify, and look at the B and C operators."""
from hecke_rea import standard_R, super_flip
from hecke_rea.hecke import dual_symmetry, verify_skew_identities

# The standard U_q(gl(2)) R-matrix.  Construction certifies the braid relation,
# the quadratic Hecke condition and skew-invertibility, so H is known-good.
H = standard_R(2)
print(H.name, "N =", H.N)
print("R =")
print(H.R)

# Tr B = Tr C and B C = nu I; for gl(2) nu = q^-4
print("Tr B =", H.trace_B, "  Tr C =", H.trace_C)
print("nu =", H.nu)
print("Tr B at q = 2:", H.trace_B.eval_at(2))

# The same numbers from first principles: the skew-inverse Psi and the identity suite.
rep = verify_skew_identities(H)
print(rep.title, "->", "ok" if rep.ok else rep.failures())

# A super-flip is involutive (R^2 = I), so everything lives at q = 1.
F = super_flip(2, 1)
print(F.name, "involutive:", F.involutive, " Tr B =", F.trace_B)

# R^-1 at q^-1 is again a Hecke symmetry
D = dual_symmetry(H)
print("dual:", D.name, " Tr B =", D.trace_B, " nu =", D.nu)
