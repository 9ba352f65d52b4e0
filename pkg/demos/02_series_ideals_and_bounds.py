"""Derived and lower central series, ideal closures, centralizers, and the
numeric bounds tied to them."""

import numpy as np

from alglab import (
    centralizer,
    derived_series,
    hall_bound,
    hall_verify,
    ideal_closure,
    kreknin_shalev_bound,
    lower_central_series,
    make_algebra,
    metabelian_class_bound,
    order_threshold,
    span,
)

# Heisenberg over F_5 again
T = np.zeros((3, 3, 3), dtype=np.int64)
T[0, 1, 2] = 1
T[1, 0, 2] = 4
heis = make_algebra(5, 3, T)

ds = derived_series(heis)
print("derived series ranks:", [t.rank for t in ds.terms], "-> length", ds.length)
lcs = lower_central_series(heis)
print("lower central ranks:", [t.rank for t in lcs.terms], "-> class", lcs.length)

# the ideal generated by e picks up z = [e, f] and then closes
closure = ideal_closure(heis, span([(1, 0, 0)], 5))
print("ideal closure of <e> has rank", closure.rank)

# the centralizer of L is the center: just z
print("center:", centralizer(heis, heis.full_space()).basis.tolist())

# Hall-type criterion: K an ideal with g_{c+1}(L) <= [K,K] and g_{k+1}(K) = 0
# forces g_{bound+1}(L) = 0 with bound = c*C(k+1,2) - C(k,2)
K = heis.full_space()
report = hall_verify(heis, K, c=2, k=2)
print(f"hall: bound {report.bound}, hypotheses {report.hypotheses_ok}, "
      f"conclusion {report.conclusion_ok}")
print("hall_bound(2,2) =", hall_bound(2, 2))

# the closed-form bounds; the order threshold outgrows machine words fast,
# so it is plain python integers throughout
print("derived-length bound for d = 4 components:", kreknin_shalev_bound(4))
print("metabelian class bound (m=2, q=2, c=1):", metabelian_class_bound(2, 2, 1))
print("order threshold (q=3, c=2):", order_threshold(3, 2))
print("order threshold (q=5, c=3) has", order_threshold(5, 3).bit_length(), "bits")
