"""Exact linear algebra over a prime field F_p.

Everything is integer numpy arrays with entries reduced to {0, ..., p-1};
no floats anywhere.  Subspaces are stored as reduced row-echelon bases, which
makes the representation canonical: two equal subspaces have bit-identical
basis matrices, so equality is an array comparison and fixpoint loops can
stop on exact repeats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .errors import InputError
from .modular import check_prime


def as_vec(v, p: int, dim: int | None = None) -> np.ndarray:
    """Coerce to a 1-d int64 coordinate vector mod p."""
    a = np.asarray(v, dtype=np.int64) % p
    if a.ndim != 1:
        raise InputError(f"expected a vector, got array of shape {a.shape}")
    if dim is not None and a.shape[0] != dim:
        raise InputError(f"vector has length {a.shape[0]}, expected {dim}")
    return a


def as_mat(m, p: int) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise InputError(f"expected a matrix, got array of shape {a.shape}")
    return a


def inv_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0")
    return pow(a, p - 2, p)


def matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) mod p; falls back to bignum arithmetic if int64 could overflow."""
    inner = A.shape[-1]
    if inner * (p - 1) ** 2 < 2**63:
        return (A @ B) % p
    return np.asarray((A.astype(object) @ B.astype(object)) % p, dtype=np.int64)


def mat_pow(A: np.ndarray, k: int, p: int) -> np.ndarray:
    n = A.shape[0]
    out = np.eye(n, dtype=np.int64)
    base = A % p
    while k > 0:
        if k & 1:
            out = matmul(out, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return out


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.  Returns (R, pivot_columns)."""
    A = (np.asarray(M, dtype=np.int64) % p).copy()
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        piv = -1
        for i in range(r, rows):
            if A[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * inv_scalar(A[r, c], p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_p^ambient, held as a canonical reduced-echelon basis.

    basis has shape (rank, ambient); rows are basis vectors with strictly
    increasing pivot columns, pivot entries 1 and pivot columns cleared
    elsewhere.  Construct through span()/nullspace(), not directly.
    """

    p: int
    ambient: int
    basis: np.ndarray = field(compare=False)

    def __post_init__(self):
        self.basis.setflags(write=False)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.rank == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, ambient={self.ambient}, rank={self.rank})"

    def contains(self, v) -> bool:
        return member(self, v)

    def vectors(self) -> Iterable[np.ndarray]:
        """All p^rank elements (small subspaces only; used by oracles and closures)."""
        if self.rank == 0:
            yield np.zeros(self.ambient, dtype=np.int64)
            return
        for digits in np.ndindex(*([self.p] * self.rank)):
            coeffs = np.asarray(digits, dtype=np.int64)
            yield matmul(coeffs.reshape(1, -1), self.basis, self.p)[0]


def zero_subspace(p: int, ambient: int) -> Subspace:
    return Subspace(p, ambient, np.zeros((0, ambient), dtype=np.int64))


def full_subspace(p: int, ambient: int) -> Subspace:
    return Subspace(p, ambient, np.eye(ambient, dtype=np.int64))


def span(vectors, p: int, ambient: int | None = None) -> Subspace:
    """Canonical echelon basis of the linear span of the given vectors.

    ambient is required when the vector list is empty.
    """
    check_prime(p)
    rows = [as_vec(v, p) for v in vectors]
    if rows:
        lengths = {r.shape[0] for r in rows}
        if len(lengths) > 1:
            raise InputError(f"mixed vector lengths {sorted(lengths)}")
        dim = lengths.pop()
        if ambient is not None and ambient != dim:
            raise InputError(f"vectors have length {dim}, expected ambient {ambient}")
    else:
        if ambient is None:
            raise InputError("empty span needs an explicit ambient dimension")
        dim = ambient
    if not rows:
        return zero_subspace(p, dim)
    R, pivots = rref(np.stack(rows), p)
    return Subspace(p, dim, R[: len(pivots)].copy())


def _check_compatible(S: Subspace, T: Subspace):
    if S.p != T.p or S.ambient != T.ambient:
        raise InputError(
            f"incompatible subspaces: F_{S.p}^{S.ambient} vs F_{T.p}^{T.ambient}"
        )


def member(S: Subspace, v) -> bool:
    """True iff v lies in S.  Reduces v against the echelon basis."""
    x = as_vec(v, S.p, S.ambient).copy()
    for row in S.basis:
        c = int(np.argmax(row != 0)) if row.any() else S.ambient
        if c < S.ambient and x[c]:
            x = (x - x[c] * row) % S.p
    return not x.any()


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _check_compatible(S, T)
    if S.is_zero():
        return T
    if T.is_zero():
        return S
    return span(np.vstack([S.basis, T.basis]), S.p)


def intersect(S: Subspace, T: Subspace) -> Subspace:
    """Intersection via the nullspace of the stacked-basis relation matrix."""
    _check_compatible(S, T)
    if S.is_zero() or T.is_zero():
        return zero_subspace(S.p, S.ambient)
    # columns: coefficients (a | b) with a*S.basis = b*T.basis
    A = np.hstack([S.basis.T, (-T.basis.T) % S.p])
    rel = nullspace(A, S.p)
    if rel.is_zero():
        return zero_subspace(S.p, S.ambient)
    coeffs = rel.basis[:, : S.rank]
    return span(matmul(coeffs, S.basis, S.p), S.p, S.ambient)


def is_subspace_of(S: Subspace, T: Subspace) -> bool:
    _check_compatible(S, T)
    return all(member(T, row) for row in S.basis)


def nullspace(A: np.ndarray, p: int) -> Subspace:
    """Right nullspace {x : A x = 0} as a canonical Subspace of F_p^ncols."""
    A = as_mat(A, p)
    m, n = A.shape
    if n == 0:
        return zero_subspace(p, 0)
    R, pivots = rref(A, p)
    piv_set = set(pivots)
    free = [j for j in range(n) if j not in piv_set]
    if not free:
        return zero_subspace(p, n)
    vecs = np.zeros((len(free), n), dtype=np.int64)
    for row_idx, f in enumerate(free):
        vecs[row_idx, f] = 1
        for r, c in enumerate(pivots):
            vecs[row_idx, c] = (-R[r, f]) % p
    return span(vecs, p, n)


class LinearSolution(NamedTuple):
    x: np.ndarray
    nullspace: Subspace


def solve(A: np.ndarray, b, p: int) -> Optional[LinearSolution]:
    """One solution of A x = b plus the solution space direction, or None.

    The particular solution sets all free variables to zero.
    """
    check_prime(p)
    A = as_mat(A, p)
    m, n = A.shape
    bb = as_vec(b, p, m)
    aug = np.hstack([A, bb.reshape(-1, 1)])
    R, pivots = rref(aug, p)
    if n in pivots:
        return None  # a pivot in the constants column: inconsistent
    x = np.zeros(n, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, n]
    return LinearSolution(x, nullspace(A, p))


def mat_inv(A: np.ndarray, p: int) -> np.ndarray:
    """Gauss-Jordan inverse over F_p; raises on singular input."""
    A = as_mat(A, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise InputError(f"expected a square matrix, got shape {A.shape}")
    R, pivots = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise InputError("matrix is singular mod p")
    return R[:, n:].copy()


def apply_to_subspace(S: Subspace, g: np.ndarray, p: int) -> Subspace:
    """Image of S under the linear map x -> g x (column-vector action)."""
    if S.is_zero():
        return S
    return span(matmul(S.basis, g.T % p, p), p, S.ambient)
