"""Z/nZ-gradings with a grading-adapted basis.

A grading assigns each basis vector a degree in Z/nZ; the component L_i is
the span of the degree-i basis vectors, so L is their direct sum by
construction and the only thing to verify is the multiplication law
[L_i, L_j] <= L_{i+j mod n}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import Algebra
from .errors import InputError
from .linalg import Subspace


@dataclass(frozen=True)
class Grading:
    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"grading modulus must be >= 1, got {self.n}")
        if any(d < 0 or d >= self.n for d in self.degrees):
            raise InputError("degrees must be canonical residues in {0,...,n-1}")

    @property
    def dim(self) -> int:
        return len(self.degrees)


def _check_dims(A: Algebra, G: Grading):
    if G.dim != A.dim:
        raise InputError(f"grading labels {G.dim} vectors, algebra has dim {A.dim}")


@dataclass(frozen=True)
class GradingViolation:
    pair: tuple[int, int]
    expected_degree: int
    stray_coords: tuple[int, ...]  # basis indices outside the expected component


@dataclass(frozen=True)
class GradingReport:
    ok: bool
    checked: int
    violations: tuple[GradingViolation, ...]


def check_grading(A: Algebra, G: Grading) -> GradingReport:
    """Verify [b_i, b_j] lands in the component of degree deg(i)+deg(j) mod n."""
    _check_dims(A, G)
    deg = np.asarray(G.degrees, dtype=np.int64)
    violations = []
    for i in range(A.dim):
        for j in range(A.dim):
            target = int((deg[i] + deg[j]) % G.n)
            vec = A.table[i, j]
            stray = [k for k in np.flatnonzero(vec).tolist() if G.degrees[k] != target]
            if stray:
                violations.append(GradingViolation((i, j), target, tuple(stray)))
    return GradingReport(not violations, A.dim**2, tuple(violations))


def component(A: Algebra, G: Grading, i: int) -> Subspace:
    """The homogeneous component L_i (span of the degree-i basis vectors)."""
    _check_dims(A, G)
    i %= G.n
    rows = [A.basis_vector(k) for k, d in enumerate(G.degrees) if d == i]
    return linalg.span(rows, A.p, A.dim)


def nontrivial_components(A: Algebra, G: Grading) -> set[int]:
    _check_dims(A, G)
    return set(G.degrees)


def component_count(A: Algebra, G: Grading) -> int:
    """Number d of nonzero homogeneous components."""
    return len(nontrivial_components(A, G))


def is_homogeneous(A: Algebra, G: Grading, H: Subspace) -> tuple[bool, list[Subspace]]:
    """Does H decompose as the direct sum of its slices H ∩ L_i?

    Returns the verdict together with the induced components, indexed 0..n-1.
    """
    _check_dims(A, G)
    if H.p != A.p or H.ambient != A.dim:
        raise InputError("subspace does not live in this algebra")
    parts = [linalg.intersect(H, component(A, G, i)) for i in range(G.n)]
    return sum(part.rank for part in parts) == H.rank, parts


def homogeneous_pairs_product_degree(G: Grading, i: int, j: int) -> int:
    return (i + j) % G.n
