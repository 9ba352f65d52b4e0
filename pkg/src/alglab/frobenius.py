"""Automorphism actions: (n, q, r) validation, eigenspace gradings, and the
permutation of components by the second generator.

Matrices act on column vectors (x -> g @ x).  The compatibility law between
the two generators is the conjugation identity h^{-1} phi h = phi^r, which is
exactly what makes h map the phi-eigenspace of omega^i onto that of
omega^{r*i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .algebra import Algebra, product
from .errors import (
    DiagonalizationError,
    InputError,
    UnsupportedFieldError,
)
from .grading import Grading, component
from .linalg import Subspace
from .modular import divisors, element_of_order, multiplicative_order


@dataclass(frozen=True)
class NQRTriple:
    """Kernel order n, complement order q, and twist exponent r."""

    n: int
    q: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.q < 1:
            raise InputError("n and q must be >= 1")
        if not (1 <= self.r <= self.n - 1):
            raise InputError(f"r must satisfy 1 <= r <= n-1, got r={self.r}, n={self.n}")


@dataclass(frozen=True)
class NQRResult:
    valid: bool
    witness: Optional[int]  # a divisor d > 1 of n where the order condition fails


def validate_nqr(n: int, q: int, r: int) -> NQRResult:
    """Check that r has multiplicative order exactly q modulo every divisor
    d > 1 of n.  The divisor d = 1 is vacuous.  On failure the witnessing
    divisor is returned."""
    NQRTriple(n, q, r)  # range validation
    for d in divisors(n):
        if d == 1:
            continue
        if multiplicative_order(r, d) != q:
            return NQRResult(False, d)
    return NQRResult(True, None)


@dataclass(frozen=True)
class AutomorphismFailure:
    pair: tuple[int, int]
    image_of_product: tuple[int, ...]
    product_of_images: tuple[int, ...]


@dataclass(frozen=True)
class AutomorphismReport:
    ok: bool
    invertible: bool
    failures: tuple[AutomorphismFailure, ...]


def check_automorphism(A: Algebra, g) -> AutomorphismReport:
    """Verify g is invertible and multiplicative on all basis pairs.

    Bilinearity extends the basis-pair certificate to all elements.
    """
    g = linalg.as_mat(g, A.p)
    if g.shape != (A.dim, A.dim):
        raise InputError(f"matrix has shape {g.shape}, expected {(A.dim, A.dim)}")
    try:
        linalg.mat_inv(g, A.p)
        invertible = True
    except InputError:
        invertible = False
    failures = []
    for i in range(A.dim):
        gi = g[:, i]  # image of b_i
        for j in range(A.dim):
            img = linalg.matmul(g, A.table[i, j].reshape(-1, 1), A.p)[:, 0]
            prod = product(A, gi, g[:, j])
            if not np.array_equal(img, prod):
                failures.append(
                    AutomorphismFailure((i, j), tuple(img.tolist()), tuple(prod.tolist()))
                )
    return AutomorphismReport(invertible and not failures, invertible, tuple(failures))


def matrix_order(g, p: int, cap: int = 10_000) -> Optional[int]:
    """Smallest k >= 1 with g^k = I, by explicit powering; None past cap."""
    g = linalg.as_mat(g, p)
    n = g.shape[0]
    eye = np.eye(n, dtype=np.int64)
    acc = g % p
    for k in range(1, cap + 1):
        if np.array_equal(acc, eye):
            return k
        acc = linalg.matmul(acc, g, p)
    return None


def fixed_subalgebra(A: Algebra, gens: Sequence) -> Subspace:
    """Common fixed points of the given automorphisms; verified multiplicatively
    closed.  Raises on inputs that are not automorphisms."""
    space = A.full_space()
    for g in gens:
        rep = check_automorphism(A, g)
        if not rep.ok:
            raise InputError("fixed_subalgebra requires automorphisms")
        g = linalg.as_mat(g, A.p)
        eye = np.eye(A.dim, dtype=np.int64)
        space = linalg.intersect(space, linalg.nullspace((g - eye) % A.p, A.p))
    from .algebra import subspace_product  # local import to avoid cycle noise

    if not linalg.is_subspace_of(subspace_product(A, space, space), space):
        raise InputError("fixed points are not closed under the product")
    return space


@dataclass(frozen=True)
class FrobeniusData:
    triple: NQRTriple
    phi: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        self.phi.setflags(write=False)
        self.h.setflags(write=False)


def frobenius_data(A: Algebra, n: int, q: int, r: int, phi, h) -> FrobeniusData:
    """Validate the full action package and freeze it.

    Checks: condition on (n, q, r); phi and h are automorphisms of exact
    orders n and q; the conjugation law h^{-1} phi h = phi^r; the field
    supports an order-n root of unity (n | p-1, which also forces p to not
    divide n).
    """
    res = validate_nqr(n, q, r)
    if not res.valid:
        raise InputError(f"(n={n}, q={q}, r={r}) fails the order condition at divisor {res.witness}")
    if (A.p - 1) % n != 0:
        raise UnsupportedFieldError(f"n={n} does not divide p-1={A.p - 1}")
    phi = linalg.as_mat(phi, A.p)
    h = linalg.as_mat(h, A.p)
    for name, g, order in (("phi", phi, n), ("h", h, q)):
        rep = check_automorphism(A, g)
        if not rep.ok:
            raise InputError(f"{name} is not an automorphism")
        got = matrix_order(g, A.p, cap=max(order, 1))
        if got != order:
            raise InputError(f"{name} must have order exactly {order}, got {got}")
    lhs = linalg.matmul(linalg.matmul(linalg.mat_inv(h, A.p), phi, A.p), h, A.p)
    rhs = linalg.mat_pow(phi, r, A.p)
    if not np.array_equal(lhs, rhs):
        raise InputError("conjugation law h^-1 phi h = phi^r fails")
    return FrobeniusData(NQRTriple(n, q, r), phi.copy(), h.copy())


@dataclass(frozen=True)
class EigenGradingResult:
    algebra: Algebra            # rebased into the adapted basis
    grading: Grading
    change_of_basis: np.ndarray  # rows = adapted basis vectors in old coordinates
    omega: int
    components: tuple[Subspace, ...]  # eigenspaces in the ORIGINAL coordinates

    def to_adapted(self, g) -> np.ndarray:
        """Transport a column-action matrix into the adapted basis."""
        p = self.algebra.p
        C = self.change_of_basis
        Cinv = linalg.mat_inv(C, p)
        # column coords transform by C^T, so maps conjugate by its inverse
        return linalg.matmul(linalg.matmul(Cinv.T % p, linalg.as_mat(g, p), p), C.T % p, p)


def eigen_grading(A: Algebra, phi, n: int) -> EigenGradingResult:
    """Split L into eigenspaces L_i = ker(phi - omega^i I) and regrade.

    omega is the smallest residue of exact multiplicative order n in F_p.
    Raises UnsupportedFieldError when no such root exists (n does not divide
    p-1) and DiagonalizationError when the eigenspaces do not fill the space.
    The result carries the rebased algebra, the induced grading, and the
    basis-change matrix (rows = new basis in old coordinates).
    """
    phi = linalg.as_mat(phi, A.p)
    if phi.shape != (A.dim, A.dim):
        raise InputError(f"matrix has shape {phi.shape}, expected {(A.dim, A.dim)}")
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    omega = element_of_order(A.p, n)
    if omega is None:
        raise UnsupportedFieldError(f"F_{A.p} has no element of order {n}")
    if not np.array_equal(linalg.mat_pow(phi, n, A.p), np.eye(A.dim, dtype=np.int64)):
        raise InputError(f"phi^{n} != identity")

    eye = np.eye(A.dim, dtype=np.int64)
    comps = []
    for i in range(n):
        ev = pow(omega, i, A.p)
        comps.append(linalg.nullspace((phi - ev * eye) % A.p, A.p))
    total = sum(c.rank for c in comps)
    if total != A.dim:
        raise DiagonalizationError(
            f"eigenspaces span rank {total} < dim {A.dim}; phi is not diagonalizable over F_{A.p}"
        )

    # the zero component is exactly the fixed space of phi
    assert comps[0] == linalg.nullspace((phi - eye) % A.p, A.p)

    if A.dim == 0:
        C = np.zeros((0, 0), dtype=np.int64)
        degrees: tuple[int, ...] = ()
    else:
        blocks = [c.basis for c in comps if c.rank > 0]
        C = np.vstack(blocks)
        degrees = tuple(i for i, c in enumerate(comps) for _ in range(c.rank))

    Cinv = linalg.mat_inv(C, A.p) if A.dim else C
    new_table = np.zeros_like(A.table)
    for a in range(A.dim):
        for b in range(A.dim):
            old = product(A, C[a], C[b])
            new_table[a, b] = linalg.matmul(old.reshape(1, -1), Cinv, A.p)[0]
    rebased = Algebra(A.p, A.dim, new_table, A.alpha, A.beta)
    G = Grading(n, degrees)

    from .grading import check_grading  # deferred: grading imports algebra only

    rep = check_grading(rebased, G)
    if not rep.ok:
        raise DiagonalizationError(
            "eigenspace decomposition violates the grading law; "
            "phi is not an automorphism of this algebra"
        )
    return EigenGradingResult(rebased, G, C, omega, tuple(comps))


@dataclass(frozen=True)
class PermutationFailure:
    source: int
    expected_target: int


@dataclass(frozen=True)
class PermutationReport:
    ok: bool
    checked: int
    failures: tuple[PermutationFailure, ...]


def h_permutation_check(A: Algebra, G: Grading, fd: FrobeniusData) -> PermutationReport:
    """Verify h maps each component L_i onto L_{r*i mod n}.

    A and G must live in the same basis as fd's matrices (use
    EigenGradingResult.to_adapted when working in the adapted basis).
    """
    n, r = fd.triple.n, fd.triple.r
    if G.n != n:
        raise InputError(f"grading modulus {G.n} != action modulus {n}")
    failures = []
    for i in range(n):
        img = linalg.apply_to_subspace(component(A, G, i), fd.h, A.p)
        target = component(A, G, (r * i) % n)
        if img != target:
            failures.append(PermutationFailure(i, (r * i) % n))
    return PermutationReport(not failures, n, tuple(failures))
