"""The modified reflection equation algebra: projector calculus and dimension counts."""
from hecke_rea import build_rea, component_dims, standard_R, super_flip
from hecke_rea.rea import classical_symmetric_dim, rea_constants

# Constants a, b of the quadratic-linear relations, as functions of q
a, b = rea_constants()
print("a =", a, "  b =", b)

# build_rea constructs the operator Q on span{l_i^j (x) l_k^s}, its spectral projectors
# and the third-order symmetrizer, and certifies each identity exactly.
S = build_rea(standard_R(2))
print(S.report.title, "->", "ok" if S.report.ok else S.report.failures())

# At generic q the degree-k component of the REA has the classical size
for H, (m, n) in ((standard_R(2), (2, 0)), (super_flip(1, 1), (1, 1))):
    for k in (2, 3):
        gen, cl = component_dims(H, k)
        print(f"{H.name:15s} k={k}: generic {gen}  classical {cl}  formula {classical_symmetric_dim(m, n, k)}")
