"""Build algebras from structure constants and certify the product identity.

Every algebra here satisfies [[a,b],c] = alpha*[a,[b,c]] + beta*[[a,c],b]
with constant coefficients: Lie algebras with (1,1), associative algebras
with (1,0), Leibniz algebras with (1,1).
"""

import numpy as np

from alglab import check_identity_uniform, make_algebra, product, solve_alpha_beta

# Heisenberg Lie algebra over F_5: basis (e, f, z) with [e,f] = z, [f,e] = -z
T = np.zeros((3, 3, 3), dtype=np.int64)
T[0, 1, 2] = 1
T[1, 0, 2] = 4
heis = make_algebra(5, 3, T, alpha=1, beta=1)

e, f, z = np.eye(3, dtype=np.int64)
print("[e, f] =", product(heis, e, f))            # -> z
print("[e+f, e] =", product(heis, (1, 1, 0), e))  # bilinear expansion

rep = check_identity_uniform(heis)
print(f"Lie identity with (1,1): {rep.ok} on {rep.checked} basis triples")

# a 2-dimensional Leibniz algebra over F_3: [e1,e1] = e2, everything else 0.
# It is not a Lie algebra ([e1,e1] != 0) but satisfies the same identity.
L = np.zeros((2, 2, 2), dtype=np.int64)
L[0, 0, 1] = 1
leib = make_algebra(3, 2, L, alpha=1, beta=1)
print("Leibniz identity with (1,1):", check_identity_uniform(leib).ok)

# per-triple coefficients: solve the 2-unknown linear system for one triple
print("(alpha, beta) for (e, f, z):", solve_alpha_beta(heis, e, f, z))

# an algebra that satisfies the identity only with beta = 0: 2x2 matrices
# under plain multiplication [x,y] = xy (associativity = the (1,0) case)
idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
M = np.zeros((4, 4, 4), dtype=np.int64)
for (a, b) in idx:
    for (c, d) in idx:
        if b == c:
            M[idx[(a, b)], idx[(c, d)], idx[(a, d)]] = 1
mats = make_algebra(2, 4, M, alpha=1, beta=0)
print("associative identity with (1,0):", check_identity_uniform(mats).ok)
