"""Index-sequence dependence and what it forces in a graded algebra.

Fix (n, q, r) with r of order q modulo every divisor of n.  A sequence of
nonzero residues (a_1, ..., a_k) is r-dependent when some nonzero exponent
tuple satisfies sum(a_i) = sum(r^e_i * a_i) mod n.  In a graded algebra with
trivial zero component, selective c-nilpotency demands that component
products over r-independent (c+1)-tuples vanish.
"""

import numpy as np

from alglab import (
    Grading,
    NQRTriple,
    count_active_components,
    d_set,
    index_split_check,
    is_r_dependent,
    make_algebra,
    rigid_subsequence,
    selective_check,
)

nqr = NQRTriple(7, 3, 2)

# single entries are never dependent; pairs can be
print("(3):", is_r_dependent(nqr, [3]))
print("(1,2):", is_r_dependent(nqr, [1, 2]))     # witness (1,2): 2 + 4*2 = 3 mod 7
print("(1,1):", is_r_dependent(nqr, [1, 1]))

# the dependence set D(prefix): all j completing the prefix to a dependent
# sequence; its size is bounded by q^(k+1)
ds = d_set(nqr, [1])
print("D(1) =", sorted(ds.members), "size", ds.size, "<= q^2 =", nqr.q**2)

# a long sequence with many distinct values always contains an independent
# subsequence through its first entry
big = NQRTriple(31, 5, 2)
seq = list(range(1, 28))
print("rigid pair in 1..27:", rigid_subsequence(big, seq, 2))
# the twist orbit of 1 under r = 2 mod 7 has no independent pair at all
print("rigid pair in (1,2,4):", rigid_subsequence(nqr, [1, 2, 4], 2))

# wraparound arithmetic behind the component bookkeeping: whenever
# i + j = k mod n with all three in 1..n-1, i and j sit on the same side of k
print("index split mod 12:", index_split_check(12).ok)

# selective 1-nilpotency fails for the graded Leibniz plane mod 3: the pair
# (1,1) is independent but [L_1, L_1] = span{e2}
T = np.zeros((2, 2, 2), dtype=np.int64)
T[0, 0, 1] = 1
leib = make_algebra(3, 2, T)
G = Grading(3, (1, 2))
rep = selective_check(leib, G, 1, NQRTriple(3, 2, 2))
print("selective violations:", [v.degrees for v in rep.violations])

# under the order-4 twist mod 5 every pair is dependent, so the condition
# holds and the active-component count is reported (threshold far away)
leib5 = make_algebra(5, 2, T)
G5 = Grading(5, (1, 2))
nqr5 = NQRTriple(5, 4, 2)
print("selective (5,4,2):", selective_check(leib5, G5, 1, nqr5).ok)
count = count_active_components(leib5, G5, 1, nqr5, b=1)
print(f"components with [L_a, L_1] != 0: {count.count} "
      f"(order of 1 is {count.order_b}, threshold {count.threshold})")
