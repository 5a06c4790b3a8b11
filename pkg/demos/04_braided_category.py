"""The braided category generated by V and V*: extended braiding, pairings, R-traces."""
from hecke_rea import standard_R
from hecke_rea.swcat import category_check, r_dimension, r_trace, schur_principal

H = standard_R(2)

# R extends to V (+) V*; the extension satisfies the braid relation on every
# triple of letters.  category_check bundles that with the (co)pairing invariance.
rep = category_check(H)
for c in rep.checks:
    print(f"  {c.status:4s} {c.name}")

# The R-trace of the identity on V is the R-dimension of V.
# Note the factor q^{m-n}: the R-trace is normalized so that Tr_R(l_i^j) = delta_i^j.
print("dim_R V =", r_trace(H, H.eye(1)))

# R-dimensions of V_lambda come out as q^{|lambda|(m-n)} times a principal Schur polynomial
for lam in [(1,), (2,), (1, 1), (2, 1), (1, 1, 1)]:
    d = r_dimension(H, lam)
    print(lam, d, "  q-Schur:", schur_principal(lam, 2))
