"""Dependence combinatorics for index sequences modulo n.

A sequence (a_1, ..., a_k) of nonzero residues mod n is r-dependent (for a
triple (n, q, r) passing validate_nqr) if

    a_1 + ... + a_k  =  r^e_1 * a_1 + ... + r^e_k * a_k   (mod n)

for some exponent tuple (e_1, ..., e_k) in {0, ..., q-1}^k that is not all
zero; otherwise it is r-independent.  Dependence is inherited by
supersequences (append exponent 0 to the new entries), which is what makes
backtracking search for independent subsequences sound.

These predicates drive the component-product checks: in a graded algebra
whose zero component vanishes, products over r-independent degree tuples are
the ones forced to vanish by the selective nilpotency condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .algebra import Algebra, left_normalized_product, subspace_product
from .errors import HypothesisError, InputError, InternalInvariantError
from .frobenius import NQRTriple
from .grading import Grading, check_grading, component, nontrivial_components
from .series import order_threshold


def _canonical_entries(nqr: NQRTriple, entries: Sequence[int]) -> tuple[int, ...]:
    out = []
    for a in entries:
        a %= nqr.n
        if a == 0:
            raise InputError("index sequences consist of nonzero residues mod n")
        out.append(a)
    if not out:
        raise InputError("index sequence must be nonempty")
    return tuple(out)


def _r_powers(nqr: NQRTriple) -> list[int]:
    return [pow(nqr.r, e, nqr.n) for e in range(nqr.q)]


@dataclass(frozen=True)
class DependenceResult:
    dependent: bool
    witness: Optional[tuple[int, ...]]  # first exponent tuple in lexicographic order

    def __bool__(self) -> bool:
        return self.dependent


def is_r_dependent(nqr: NQRTriple, entries: Sequence[int]) -> DependenceResult:
    """Exhaustive scan over the q^k - 1 nonzero exponent tuples, in
    lexicographic order; returns the first witness found."""
    seq = _canonical_entries(nqr, entries)
    n, q = nqr.n, nqr.q
    powers = _r_powers(nqr)
    total = sum(seq) % n
    for exps in iproduct(range(q), repeat=len(seq)):
        if not any(exps):
            continue
        if sum(powers[e] * a for e, a in zip(exps, seq)) % n == total:
            return DependenceResult(True, exps)
    return DependenceResult(False, None)


def is_r_independent(nqr: NQRTriple, entries: Sequence[int]) -> bool:
    return not is_r_dependent(nqr, entries).dependent


@dataclass(frozen=True)
class DSet:
    prefix: tuple[int, ...]
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


def d_set(nqr: NQRTriple, prefix: Sequence[int]) -> DSet:
    """All nonzero j making prefix + (j,) r-dependent.

    The prefix must be r-independent.  The result is certified against the
    cardinality bound q^(k+1); exceeding it would falsify a proven statement,
    so that raises InternalInvariantError rather than returning.
    """
    seq = _canonical_entries(nqr, prefix)
    if is_r_dependent(nqr, seq).dependent:
        raise InputError("d_set needs an r-independent prefix")
    n, q, k = nqr.n, nqr.q, len(seq)
    members = _d_set_members(nqr, seq)
    if len(members) > q ** (k + 1):
        raise InternalInvariantError(
            f"|D{seq}| = {len(members)} exceeds q^(k+1) = {q ** (k + 1)} "
            f"for (n,q,r)=({n},{q},{nqr.r})"
        )
    return DSet(seq, frozenset(members))


def _d_set_members(nqr: NQRTriple, seq: tuple[int, ...]) -> set[int]:
    """Vectorized exhaustive enumeration over all (j, exponent-tuple) pairs."""
    n, q = nqr.n, nqr.q
    powers = _r_powers(nqr)
    k = len(seq)
    total = sum(seq) % n
    js = np.arange(1, n, dtype=np.int64)
    if js.size == 0:
        return set()
    # twisted prefix sums for all q^k prefix exponent tuples
    prefix_sums = np.zeros(1, dtype=np.int64)
    for a in seq:
        shifts = np.array([(p * a) % n for p in powers], dtype=np.int64)
        prefix_sums = (prefix_sums[:, None] + shifts[None, :]).reshape(-1) % n
    dependent = np.zeros(js.shape, dtype=bool)
    for e_last, p_last in enumerate(powers):
        rhs = (prefix_sums[:, None] + (p_last * js)[None, :]) % n
        lhs = (total + js) % n
        hit = rhs == lhs[None, :]
        if e_last == 0:
            hit[0, :] = False  # the all-zero tuple does not count
        dependent |= hit.any(axis=0)
    return set(js[dependent].tolist())


def rigid_subsequence(
    nqr: NQRTriple, entries: Sequence[int], m: int
) -> Optional[tuple[int, ...]]:
    """An r-independent subsequence of length m that starts with the first
    entry, or None.

    Deterministic: candidate values are the distinct values of the sequence
    in first-occurrence order, and the search backtracks over them in index
    order.  Whenever the sequence contains at least q^m + m distinct values,
    a subsequence is guaranteed to exist; below that threshold the search
    still runs and may legitimately return None.
    """
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    seq = _canonical_entries(nqr, entries)
    values: list[int] = []
    seen: set[int] = set()
    for a in seq:
        if a not in seen:
            seen.add(a)
            values.append(a)
    first = seq[0]
    chosen = [first]

    def extend(start: int) -> bool:
        if len(chosen) == m:
            return True
        for idx in range(start, len(values)):
            chosen.append(values[idx])
            # dependence is inherited by supersequences: safe to prune here
            if not is_r_dependent(nqr, chosen).dependent and extend(idx + 1):
                return True
            chosen.pop()
        return False

    # values[0] == first; extensions draw from the later distinct values
    if extend(1):
        return tuple(chosen)
    return None


@dataclass(frozen=True)
class SelectiveViolation:
    degrees: tuple[int, ...]
    basis_indices: tuple[int, ...]   # one witness basis tuple with nonzero product
    value: tuple[int, ...]


@dataclass(frozen=True)
class SelectiveReport:
    ok: bool
    c: int
    tuples_checked: int
    independent_tuples: int
    violations: tuple[SelectiveViolation, ...]


def selective_check(A: Algebra, G: Grading, c: int, nqr: NQRTriple) -> SelectiveReport:
    """Check the selective nilpotency condition at level c.

    For every (c+1)-tuple of degrees from the nonzero components that is
    r-independent, the left-normalized product of the corresponding
    components must vanish; multilinearity reduces this to component
    subspace products.  Requires a valid grading with trivial zero component
    (a nonzero L_0 is a hypothesis failure, not a violation).
    """
    if c < 0:
        raise InputError(f"c must be >= 0, got {c}")
    if G.n != nqr.n:
        raise InputError(f"grading modulus {G.n} != context modulus {nqr.n}")
    grade_rep = check_grading(A, G)
    if not grade_rep.ok:
        raise InputError("selective_check needs a valid grading")
    if 0 in nontrivial_components(A, G):
        raise HypothesisError("the zero component must vanish")

    degrees = sorted(nontrivial_components(A, G))
    comps = {i: component(A, G, i) for i in degrees}
    checked = independent = 0
    violations = []
    for tup in iproduct(degrees, repeat=c + 1):
        checked += 1
        if is_r_dependent(nqr, tup).dependent:
            continue
        independent += 1
        acc = comps[tup[0]]
        for d in tup[1:]:
            acc = subspace_product(A, acc, comps[d])
            if acc.is_zero():
                break
        if not acc.is_zero():
            violations.append(_selective_witness(A, comps, tup))
    return SelectiveReport(not violations, c, checked, independent, tuple(violations))


def _selective_witness(A: Algebra, comps, tup) -> SelectiveViolation:
    """A concrete basis tuple with nonzero left-normalized product.

    One exists whenever the subspace product is nonzero, because products of
    basis tuples span the subspace product.
    """
    index_lists = []
    for d in tup:
        basis = comps[d].basis
        index_lists.append([np.flatnonzero(row)[0] for row in basis])
    for combo in iproduct(*[range(len(lst)) for lst in index_lists]):
        vecs = [comps[d].basis[c_i] for d, c_i in zip(tup, combo)]
        val = left_normalized_product(A, vecs)
        if val.any():
            idxs = tuple(int(index_lists[pos][c_i]) for pos, c_i in enumerate(combo))
            return SelectiveViolation(tuple(tup), idxs, tuple(val.tolist()))
    raise InternalInvariantError("nonzero subspace product without a basis witness")


@dataclass(frozen=True)
class IndexSplitReport:
    n: int
    checked: int
    ok: bool
    failures: tuple[tuple[int, int, int], ...]


def index_split_check(n: int) -> IndexSplitReport:
    """For 1 <= i, j <= n-1 with i + j = k mod n and 1 <= k <= n-1, both i
    and j exceed k or both are below k.  Exhaustive check; a failure would
    falsify elementary arithmetic and is reported rather than raised."""
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    failures = []
    checked = 0
    for i in range(1, n):
        for j in range(1, n):
            k = (i + j) % n
            if k == 0:
                continue
            checked += 1
            if not ((i > k and j > k) or (i < k and j < k)):
                failures.append((i, j, k))
    return IndexSplitReport(n, checked, not failures, tuple(failures))


def additive_order(b: int, n: int) -> int:
    """Order of b in the additive group Z/nZ."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return n // gcd(b % n, n) if b % n else 1


@dataclass(frozen=True)
class ActiveComponentCount:
    b: int
    c: int
    count: int                # number of a with [L_a, L_b, ..., L_b] != 0  (c copies)
    active: tuple[int, ...]
    order_b: int
    threshold: Optional[int]  # undefined for q = 1 or c = 0
    bound: Optional[int]      # q^(c+1) when the threshold applies, else None
    asserted: bool


def count_active_components(
    A: Algebra, G: Grading, c: int, nqr: NQRTriple, b: int
) -> ActiveComponentCount:
    """Count degrees a whose component survives c right-multiplications by L_b.

    When the additive order of b clears the order threshold the count is
    certified against the bound q^(c+1) (violations raise
    InternalInvariantError); below the threshold, and always for c = 0, the
    count is purely observational.
    """
    if c < 0:
        raise InputError(f"c must be >= 0, got {c}")
    rep = selective_check(A, G, c, nqr) if c >= 1 else None
    if rep is not None and not rep.ok:
        raise HypothesisError("selective nilpotency fails; the count bound says nothing here")
    b %= nqr.n
    o_b = additive_order(b, nqr.n)
    comp_b = component(A, G, b)
    active = []
    for a in range(nqr.n):
        acc = component(A, G, a)
        for _ in range(c):
            if acc.is_zero():
                break
            acc = subspace_product(A, acc, comp_b)
        if not acc.is_zero():
            active.append(a)
    threshold = order_threshold(nqr.q, c) if (nqr.q >= 2 and c >= 1) else None
    asserted = threshold is not None and o_b > threshold
    bound = nqr.q ** (c + 1) if asserted else None
    if asserted and len(active) > bound:
        raise InternalInvariantError(
            f"{len(active)} active components exceed q^(c+1) = {bound}"
        )
    return ActiveComponentCount(
        b, c, len(active), tuple(active), o_b, threshold, bound, asserted,
    )
