"""Structure-constant algebras and the two-parameter product identity.

An Algebra is a finite-dimensional F_p-algebra given by its multiplication
table on a fixed basis, together with coefficients (alpha, beta), alpha != 0,
for the identity

    [[a,b],c] = alpha*[a,[b,c]] + beta*[[a,c],b].

Lie algebras satisfy it with (1,1), associative algebras with (1,0), and
(right) Leibniz algebras with (1,1).  Checking it on all basis triples
certifies it for all elements, by trilinearity of both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import linalg
from .errors import InputError
from .linalg import Subspace
from .modular import check_prime


@dataclass(frozen=True)
class Algebra:
    """dim-dimensional algebra over F_p with table[i, j, :] = coords of [b_i, b_j]."""

    p: int
    dim: int
    table: np.ndarray = field(compare=False)
    alpha: int = 1
    beta: int = 1

    def __post_init__(self):
        self.table.setflags(write=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            (self.p, self.dim, self.alpha, self.beta)
            == (other.p, other.dim, other.alpha, other.beta)
            and bool(np.array_equal(self.table, other.table))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.dim, self.alpha, self.beta, self.table.tobytes()))

    def __repr__(self) -> str:
        return (
            f"Algebra(p={self.p}, dim={self.dim}, "
            f"alpha={self.alpha}, beta={self.beta})"
        )

    def basis_vector(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[i] = 1
        return e

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def full_space(self) -> Subspace:
        return linalg.full_subspace(self.p, self.dim)

    def zero_space(self) -> Subspace:
        return linalg.zero_subspace(self.p, self.dim)


def make_algebra(p: int, dim: int, table, alpha: int = 1, beta: int = 1) -> Algebra:
    """Validate and build an Algebra.  table is any (dim, dim, dim) array-like."""
    check_prime(p)
    if dim < 0:
        raise InputError(f"dim must be >= 0, got {dim}")
    T = np.asarray(table, dtype=np.int64) % p
    if T.shape != (dim, dim, dim):
        raise InputError(f"table has shape {T.shape}, expected {(dim, dim, dim)}")
    alpha %= p
    beta %= p
    if alpha == 0:
        raise InputError("alpha must be nonzero mod p")
    return Algebra(p, dim, T.copy(), alpha, beta)


def product(A: Algebra, x, y) -> np.ndarray:
    """Bilinear product of two coordinate vectors."""
    xv = linalg.as_vec(x, A.p, A.dim)
    yv = linalg.as_vec(y, A.p, A.dim)
    d, p = A.dim, A.p
    if d == 0:
        return A.zero()
    if (p - 1) ** 2 * d < 2**63:
        # z[j,k] = sum_i x_i T[i,j,k], reduced before the second contraction
        z = (xv @ A.table.reshape(d, -1)).reshape(d, d) % p
        return (yv @ z) % p
    xy = np.outer(xv, yv) % p
    acc = np.einsum("ij,ijk->k", xy.astype(object), A.table.astype(object)) % p
    return np.asarray(acc, dtype=np.int64)


def left_normalized_product(A: Algebra, elements) -> np.ndarray:
    """[x1, x2, ..., xs] folded as [...[[x1,x2],x3]...,xs]."""
    elems = list(elements)
    if not elems:
        raise InputError("need at least one element")
    acc = linalg.as_vec(elems[0], A.p, A.dim)
    for e in elems[1:]:
        acc = product(A, acc, e)
    return acc


@dataclass(frozen=True)
class IdentityFailure:
    triple: tuple[int, int, int]
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    checked: int
    failures: tuple[IdentityFailure, ...]


def check_identity_uniform(A: Algebra) -> IdentityReport:
    """Certify [[a,b],c] = alpha*[a,[b,c]] + beta*[[a,c],b] on all basis triples.

    Passing on every triple certifies the identity for all elements of the
    algebra (both sides are trilinear).  The report lists each failing triple
    with both evaluated sides.
    """
    p, d, T = A.p, A.dim, A.table
    failures = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = product(A, T[i, j], A.basis_vector(k))
                rhs = (
                    A.alpha * product(A, A.basis_vector(i), T[j, k])
                    + A.beta * product(A, T[i, k], A.basis_vector(j))
                ) % p
                if not np.array_equal(lhs, rhs):
                    failures.append(
                        IdentityFailure((i, j, k), tuple(lhs.tolist()), tuple(rhs.tolist()))
                    )
    return IdentityReport(not failures, d**3, tuple(failures))


def identity_holds_for(A: Algebra, a, b, c, alpha: int | None = None,
                       beta: int | None = None) -> bool:
    """Evaluate the identity on one concrete element triple."""
    alpha = A.alpha if alpha is None else alpha % A.p
    beta = A.beta if beta is None else beta % A.p
    lhs = product(A, product(A, a, b), c)
    rhs = (alpha * product(A, a, product(A, b, c))
           + beta * product(A, product(A, a, c), b)) % A.p
    return bool(np.array_equal(lhs, rhs))


def solve_alpha_beta(A: Algebra, a, b, c) -> Optional[tuple[int, int]]:
    """Solve [[a,b],c] = alpha*[a,[b,c]] + beta*[[a,c],b] for one triple.

    Returns the lexicographically first (alpha, beta) with alpha != 0,
    scanning alpha upward from 1 and beta upward from 0 (so (1, 0) wins
    whenever it solves the system, then (1, beta) with smallest beta, ...).
    Returns None when no solution with nonzero alpha exists.
    """
    p = A.p
    u = product(A, product(A, a, b), c)          # target
    v = product(A, a, product(A, b, c))          # alpha column
    w = product(A, product(A, a, c), b)          # beta column
    M = np.stack([v, w], axis=1)
    sol = linalg.solve(M, u, p)
    if sol is None:
        return None
    x0, null = sol.x, sol.nullspace
    if null.rank == 2:
        return (1, 0)
    if null.rank == 0:
        return (int(x0[0]), int(x0[1])) if x0[0] else None
    n = null.basis[0]
    if n[0]:
        # alpha moves along the line; alpha = 1 is reachable, with unique beta
        t = ((1 - x0[0]) * linalg.inv_scalar(int(n[0]), p)) % p
        return (1, int((x0[1] + t * n[1]) % p))
    # alpha is pinned at x0[0]; beta is free (n = (0, 1) in echelon form)
    if x0[0] == 0:
        return None
    return (int(x0[0]), 0)


def subspace_product(A: Algebra, M: Subspace, N: Subspace) -> Subspace:
    """Span of [m, n] over all m in M, n in N (basis pairs suffice, by bilinearity)."""
    if M.p != A.p or N.p != A.p or M.ambient != A.dim or N.ambient != A.dim:
        raise InputError("subspaces do not live in this algebra")
    if M.is_zero() or N.is_zero():
        return A.zero_space()
    prods = [product(A, m, n) for m in M.basis for n in N.basis]
    return linalg.span(prods, A.p, A.dim)
