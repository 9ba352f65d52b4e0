"""From an automorphism action to a grading.

A cyclic automorphism phi of order n over a field containing an order-n root
of unity omega splits the algebra into eigenspaces L_i = ker(phi - omega^i),
and these form a Z/nZ-grading.  A second generator h with
h^-1 phi h = phi^r then permutes the components by i -> r*i mod n.
"""

import numpy as np

from alglab import (
    check_automorphism,
    check_grading,
    eigen_grading,
    fixed_subalgebra,
    frobenius_data,
    h_permutation_check,
    make_algebra,
    validate_nqr,
)

# the (n, q, r) compatibility condition: r must have order q modulo every
# divisor > 1 of n
print("(7, 3, 2):", validate_nqr(7, 3, 2))     # 2^3 = 8 = 1 mod 7
print("(6, 2, 5):", validate_nqr(6, 2, 5))     # fails at divisor 2

# Leibniz algebra over F_7 with the diagonal automorphism phi = diag(2, 4):
# 2 has order 3 mod 7, and [2*e1, 2*e1] = 4*e2 = phi(e2), so phi is an
# automorphism of order 3
T = np.zeros((2, 2, 2), dtype=np.int64)
T[0, 0, 1] = 1
leib = make_algebra(7, 2, T)
phi = np.diag([2, 4])
print("phi is an automorphism:", check_automorphism(leib, phi).ok)
print("fixed points of phi:", fixed_subalgebra(leib, [phi]).rank, "dimensional")

egr = eigen_grading(leib, phi, 3)
print("omega =", egr.omega)
print("component ranks:", [c.rank for c in egr.components])   # L_0 = 0
print("adapted degrees:", egr.grading.degrees)
print("grading law holds:", check_grading(egr.algebra, egr.grading).ok)

# the full two-generator package needs an h conjugating phi to phi^r; the
# Leibniz table has no such h, so use the abelian plane with the swap
ab = make_algebra(7, 2, np.zeros((2, 2, 2), dtype=np.int64))
fd = frobenius_data(ab, n=3, q=2, r=2, phi=np.diag([2, 4]), h=[[0, 1], [1, 0]])
egr_ab = eigen_grading(ab, fd.phi, 3)
print("h permutes components:",
      h_permutation_check(ab, egr_ab.grading, fd).ok)   # L_1 <-> L_2 (r = 2)
