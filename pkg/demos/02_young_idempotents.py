"""Hecke algebra idempotents: Young decomposition of the tensor cube and the hook rule."""
from hecke_rea import standard_R, super_flip
from hecke_rea.heckealg import content_vector, lambda_mn, standard_tableaux, young_decomposition

# Contents of a standard tableau, and the q-contents the Jucys-Murphy elements see
t = standard_tableaux((2, 1))[0]
print("tableau", t.rows, "q-contents", [str(c) for c in content_vector(t)])

# Ranks of the primitive idempotents E^lambda_a on V^(x)3, computed exactly at
# generic sample points.  Each entry is (number of tableaux, rank of one E^lambda_a).
# For gl(2) the antisymmetrizer of three letters vanishes.
for H in (standard_R(2), super_flip(1, 1)):
    dec = young_decomposition(H, 3)
    print(H.name, {"".join(map(str, lam)): ranks for lam, ranks in dec.items()})

# The smallest shape outside the (m|n) hook
print("first shape off the hook for (1|1):", lambda_mn(1, 1))
