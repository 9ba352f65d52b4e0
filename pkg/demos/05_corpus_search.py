"""Exhaustive search over graded structure-constant tables.

The grading fixes which table entries may be nonzero, the identity filter
keeps the algebras that genuinely satisfy the two-parameter identity, and an
optional selective filter keeps those meeting the dependence condition.  The
bucket summary then shows the key empirical fact: with the selective filter
on, the maximal nilpotency class does not depend on the grading modulus n.
"""

from alglab.search import CorpusSpec, SelectiveFilter, search

# all Z/3Z-graded tables over F_2 with components L_1, L_2 one-dimensional:
# two admissible slots, four candidate tables, three identity survivors
res = search(CorpusSpec(p=2, n=3, component_dims=(0, 1, 1)))
print(f"{res.candidates} candidates -> {len(res.survivors)} survivors")
for s in res.survivors:
    nz = [(i + 1, j + 1, k + 1) for (i, j, k), c in
          __import__("numpy").ndenumerate(s.algebra.table) if c]
    print(f"  table {nz or 'zero'}: derived length {s.derived_length}, "
          f"class {s.nilpotency_class}")

# same components over three different moduli, now with the selective filter;
# r = n - 1 has order 2 modulo every divisor of odd n
print("\nwith the selective 1-nilpotency filter:")
for n in (3, 5, 7):
    spec = CorpusSpec(
        p=2, n=n,
        component_dims=tuple([0] + [1 if i in (1, 2) else 0 for i in range(1, n)]),
        selective=SelectiveFilter(c=1, q=2, r=n - 1),
    )
    out = search(spec)
    b = out.summary[0]
    print(f"  n={n}: survivors {b.count}, max class {b.max_nilpotency_class}")

# a seeded random sample with three chained components mod 5
spec = CorpusSpec(p=3, n=5, component_dims=(0, 1, 1, 1, 0), mode="random",
                  seed=11, samples=2000)
out = search(spec)
print(f"\nrandom mode: {out.candidates} samples -> {len(out.survivors)} "
      f"identity-passing tables")
for b in out.summary:
    print(f"  d={b.d}: count {b.count}, max derived length {b.max_derived_length}, "
          f"max class {b.max_nilpotency_class}")
