"""Representations of the modified REA: basic, dual, tensor products, restrictions, sl-reduction."""
from hecke_rea import adjoint_rep, restrict, rho_basic, rho_dual, rho_tensor, sl_reduce, standard_R
from hecke_rea.reps import coproduct_checks, sl2_presentation

H = standard_R(2)
V, Vs = rho_basic(H), rho_dual(H)

# Every constructor verifies the defining relations (hbar = 1) and R-equivariance.
for name, rho in (("V", V), ("V*", Vs), ("V (x) V*", rho_tensor(V, Vs)), ("adjoint", adjoint_rep(H))):
    rep = rho.verify()
    print(f"{name:9s} dim {rho.dim:2d}  {'ok' if rep.ok else rep.failures()}")

# The braided coproduct turns tensor products into representations; the bialgebra laws hold.
print("bialgebra:", "ok" if coproduct_checks(H).ok else "fail")

# V (x) V splits along Young shapes; R-dimensions are the q-analogues of the ordinary ones.
VV = rho_tensor(V, V)
for lam in [(2,), (1, 1)]:
    sub = restrict(VV, lam)
    print(f"V_{lam}  dim {sub.dim}  dim_R {sub.r_dim()}")

# The central element ell lets us pass to the sl-type quotient: the trace of the
# generating matrix becomes zero and a single new constant chi appears.
red = sl_reduce(H, V)
print("sl-reduction of V:  chi =", red.chi, "  xi =", red.xi)

# In rank 2 this is a deformation of U(sl(2)) with generators H, E, F.
print("sl(2) presentation:", "ok" if sl2_presentation(H).ok else "fail")
