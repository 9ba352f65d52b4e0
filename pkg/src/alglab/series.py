"""Derived and lower central series, ideal closures, centralizers, and the
numeric bounds attached to them.

Series iterate subspace products until the terms hit zero or repeat; finite
dimension guarantees one of the two happens within dim(L)+1 steps.  A series
that stabilizes at a nonzero term has no length metric (the algebra is not
solvable / not nilpotent), which is a legal outcome, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from . import linalg
from .algebra import Algebra, product, subspace_product
from .errors import InputError
from .linalg import Subspace


@dataclass(frozen=True)
class SeriesResult:
    terms: tuple[Subspace, ...]
    stabilized: bool          # True: ended on a nonzero repeating term
    length: Optional[int]     # derived length / nilpotency class when terms reach zero

    @property
    def reached_zero(self) -> bool:
        return self.terms[-1].is_zero()


def _iterate(first: Subspace, step) -> SeriesResult:
    terms = [first]
    while not terms[-1].is_zero():
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return SeriesResult(tuple(terms), True, None)
        terms.append(nxt)
    return SeriesResult(tuple(terms), False, len(terms) - 1)


def derived_series(A: Algebra) -> SeriesResult:
    """L^(0) = L, L^(i+1) = [L^(i), L^(i)]."""
    return _iterate(A.full_space(), lambda S: subspace_product(A, S, S))


def derived_length(A: Algebra) -> Optional[int]:
    return derived_series(A).length


def lower_central_series(A: Algebra) -> SeriesResult:
    """g_1 = L, g_{k+1} = [g_k, L].

    The one-sided product suffices: [L, g_k] is contained in [g_k, L] modulo
    the rewrite of right-nested brackets, so the series computed this way
    matches the two-sided variant on every algebra satisfying the identity.
    """
    L = A.full_space()
    return _iterate(L, lambda S: subspace_product(A, S, L))


def nilpotency_class(A: Algebra) -> Optional[int]:
    return lower_central_series(A).length


def lower_central_series_two_sided(A: Algebra) -> SeriesResult:
    """g_{k+1} = [g_k, L] + [L, g_k]; cross-check target for the one-sided form."""
    L = A.full_space()

    def step(S: Subspace) -> Subspace:
        return linalg.subspace_sum(subspace_product(A, S, L), subspace_product(A, L, S))

    return _iterate(L, step)


def series_of_subalgebra(A: Algebra, K: Subspace, kind: str = "lcs") -> SeriesResult:
    """Lower central or derived series of a subalgebra K inside A."""
    if kind == "lcs":
        return _iterate(K, lambda S: subspace_product(A, S, K))
    if kind == "derived":
        return _iterate(K, lambda S: subspace_product(A, S, S))
    raise InputError(f"unknown series kind {kind!r}")


def ideal_closure(A: Algebra, S: Subspace) -> Subspace:
    """Least two-sided ideal containing S: fixpoint of I -> I + [I,L] + [L,I]."""
    L = A.full_space()
    I = S
    while True:
        nxt = linalg.subspace_sum(
            I,
            linalg.subspace_sum(subspace_product(A, I, L), subspace_product(A, L, I)),
        )
        if nxt == I:
            return I
        I = nxt


def is_ideal(A: Algebra, S: Subspace) -> bool:
    return ideal_closure(A, S) == S


def centralizer(A: Algebra, T: Subspace) -> Subspace:
    """{x : [x,t] = 0 and [t,x] = 0 for all t in T}.

    Computed as the nullspace of the multiplication maps stacked over a basis
    of T; conditions on basis elements certify all of T by bilinearity.
    """
    if T.p != A.p or T.ambient != A.dim:
        raise InputError("subspace does not live in this algebra")
    if T.is_zero() or A.dim == 0:
        return A.full_space()
    rows = []
    for t in T.basis:
        # right multiplication x -> [x, t]: row block (k, i) = [e_i, t]_k
        right = np.stack([product(A, A.basis_vector(i), t) for i in range(A.dim)])
        # left multiplication x -> [t, x]
        left = np.stack([product(A, t, A.basis_vector(i)) for i in range(A.dim)])
        rows.append(right.T)
        rows.append(left.T)
    return linalg.nullspace(np.vstack(rows), A.p)


# -- numeric bounds ----------------------------------------------------------

def hall_bound(c: int, k: int) -> int:
    """Nilpotency-class bound c*C(k+1,2) - C(k,2) for the ideal criterion below."""
    if c < 1 or k < 1:
        raise InputError("hall_bound needs c >= 1 and k >= 1")
    return c * comb(k + 1, 2) - comb(k, 2)


@dataclass(frozen=True)
class HallReport:
    bound: int
    hypotheses_ok: bool
    hypothesis_failures: tuple[str, ...]
    conclusion_ok: Optional[bool]  # None when hypotheses fail: nothing is claimed

    @property
    def ok(self) -> bool:
        return self.hypotheses_ok and bool(self.conclusion_ok)


def hall_verify(A: Algebra, K: Subspace, c: int, k: int) -> HallReport:
    """Check: if g_{c+1}(L) <= [K,K] and g_{k+1}(K) = 0 for an ideal K, then
    g_{hall_bound(c,k)+1}(L) = 0.

    Hypothesis failures and conclusion failures are reported separately: a
    falsified hypothesis makes the instance vacuous, not a counterexample.
    """
    if not is_ideal(A, K):
        raise InputError("K must be an ideal (ideal_closure(K) == K)")
    bound = hall_bound(c, k)
    failures = []

    lcs_L = lower_central_series(A)
    g_c1 = _series_term(lcs_L, c + 1, A)
    KK = subspace_product(A, K, K)
    if not linalg.is_subspace_of(g_c1, KK):
        failures.append(f"g_{c + 1}(L) is not contained in [K,K]")

    lcs_K = series_of_subalgebra(A, K, "lcs")
    g_k1_K = _series_term(lcs_K, k + 1, A)
    if not g_k1_K.is_zero():
        failures.append(f"g_{k + 1}(K) != 0")

    if failures:
        return HallReport(bound, False, tuple(failures), None)
    conclusion = _series_term(lcs_L, bound + 1, A).is_zero()
    return HallReport(bound, True, (), conclusion)


def _series_term(series: SeriesResult, index_1based: int, A: Algebra) -> Subspace:
    """g_i for i >= 1, extending past the computed terms by stationarity."""
    i = index_1based - 1
    if i < len(series.terms):
        return series.terms[i]
    return series.terms[-1]  # zero or the stable term, depending on outcome


def kreknin_shalev_bound(d: int) -> int:
    """Derived-length bound 2^d - 1 for a grading with d nonzero components
    and trivial zero component."""
    if d < 0:
        raise InputError(f"d must be >= 0, got {d}")
    return 2**d - 1


def metabelian_class_bound(m: int, q: int, c: int) -> int:
    """Nilpotency-class bound (m-1)*(q^(c+1)+c)+2 for the metabelian case."""
    if m < 1 or q < 1 or c < 0:
        raise InputError("metabelian_class_bound needs m, q >= 1 and c >= 0")
    return (m - 1) * (q ** (c + 1) + c) + 2


def order_threshold(q: int, c: int) -> int:
    """Additive-order threshold 2^(2^(2q-3)-1) * c^(2^(2q-3)).

    Above this order the active-component count bound applies.  Grows
    astronomically (python bigints keep it exact).
    """
    if q < 2 or c < 1:
        raise InputError("order_threshold needs q >= 2 and c >= 1")
    e = 2 ** (2 * q - 3)
    return 2 ** (e - 1) * c**e


def bound_value(kind: str, **params) -> int:
    """Dispatch by name; used by callers that read the bound kind from data."""
    kinds = {
        "kreknin_shalev": kreknin_shalev_bound,
        "metabelian_g": metabelian_class_bound,
        "order_threshold": order_threshold,
        "hall": hall_bound,
    }
    if kind not in kinds:
        raise InputError(f"unknown bound kind {kind!r}; expected one of {sorted(kinds)}")
    return kinds[kind](**params)
