"""Rewriting arbitrary bracketings into left-normalized words.

Because alpha is invertible, [a,[b,c]] = (1/alpha)[[a,b],c] -
(beta/alpha)[[a,c],b] turns any bracketing into a combination of simple
products [x1,...,xs] = [...[[x1,x2],x3]...,xs] with the same atoms.  The
contract is semantic: evaluating a term and its normal form in any algebra
carrying the same (alpha, beta) gives the same element.
"""

import random

import numpy as np

from alglab import evaluate, make_algebra, normalize, parse
from alglab.rewrite import format_combo, normalize_in

# the Lie/Leibniz shape (alpha, beta) = (1, 1) over F_5
combo = normalize(parse("[a,[b,c]]"), alpha=1, beta=1, p=5)
print("[a,[b,c]] with (1,1):")
print(format_combo(combo))

# the associative shape (1, 0): right-nesting simply flattens
combo = normalize(parse("[a,[b,[c,d]]]"), alpha=1, beta=0, p=5)
print("\n[a,[b,[c,d]]] with (1,0):")
print(format_combo(combo))

# degree-labelled atoms: x_1 twice denotes two (possibly different)
# degree-1 elements; occurrences stay distinct variables
t = parse("[x_1,[x_2,x_1]]")
combo = normalize(t, alpha=1, beta=1, p=7)
print("\n[x_1,[x_2,x_1]] with (1,1):")
print(format_combo(combo))

# semantic soundness, checked by evaluation in the Heisenberg algebra
T = np.zeros((3, 3, 3), dtype=np.int64)
T[0, 1, 2] = 1
T[1, 0, 2] = 4
heis = make_algebra(5, 3, T)
rng = random.Random(6)
t = parse("[[a,[b,c]],[d,a]]")
assignment = {
    name: np.array([rng.randrange(5) for _ in range(3)]) for name in "abcd"
}
direct = evaluate(t, assignment, heis)
flat = evaluate(normalize_in(heis, t), assignment, heis)
print("\ndirect evaluation:", direct)
print("normalized evaluation:", flat)
print("equal:", direct.tolist() == flat.tolist())
