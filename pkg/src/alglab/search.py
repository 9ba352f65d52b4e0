"""Corpus generation: enumerate or sample graded structure-constant tables
and filter them through the identity and selective-nilpotency checks.

The grading cuts the search space hard: a table entry [b_i, b_j] may only
touch basis vectors whose degree is deg(i) + deg(j) mod n, so the free
scalars are exactly the admissible (i, j, k) slots.  Candidates are indexed
by mixed-radix words over those slots (first slot most significant), which
makes the stream order deterministic and chunkable.

Identity filtering is vectorized over batches of candidate tables; survivors
then get exact series statistics one by one.  ALGLAB_THREADS > 1 distributes
chunks over a thread pool; chunk results are merged in index order so the
output stream does not depend on the worker count.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Union

import numpy as np

from .algebra import Algebra
from .errors import FormatError, InputError
from .formats import LoadedAlgebra, to_document
from .frobenius import NQRTriple, validate_nqr
from .grading import Grading
from .rdep import selective_check
from .series import derived_length, nilpotency_class

EXHAUSTIVE_DIM_LIMIT = 8
EXHAUSTIVE_P_LIMIT = 3
CHUNK = 4096


@dataclass(frozen=True)
class SelectiveFilter:
    c: int
    q: int
    r: int


@dataclass(frozen=True)
class CorpusSpec:
    p: int
    n: int
    component_dims: tuple[int, ...]
    alpha: int = 1
    beta: int = 1
    mode: str = "exhaustive"          # "exhaustive" | "random"
    seed: Optional[int] = None
    samples: int = 0
    identity_filter: bool = True
    grading_filter: bool = True       # sanity re-check; construction guarantees it
    selective: Optional[SelectiveFilter] = None

    @property
    def dim(self) -> int:
        return sum(self.component_dims)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(
            i for i, d in enumerate(self.component_dims) for _ in range(d)
        )


def validate_spec(spec: CorpusSpec) -> CorpusSpec:
    from .modular import check_prime

    check_prime(spec.p)
    if spec.n < 1:
        raise InputError(f"n must be >= 1, got {spec.n}")
    if len(spec.component_dims) != spec.n:
        raise InputError(
            f"component_dims has {len(spec.component_dims)} entries, expected n = {spec.n}"
        )
    if any(d < 0 for d in spec.component_dims):
        raise InputError("component dimensions must be >= 0")
    if not (0 < spec.alpha % spec.p):
        raise InputError("alpha must be nonzero mod p")
    if spec.mode == "exhaustive":
        if spec.dim > EXHAUSTIVE_DIM_LIMIT:
            raise InputError(
                f"exhaustive mode caps total dim at {EXHAUSTIVE_DIM_LIMIT}, got {spec.dim}"
            )
        if spec.p > EXHAUSTIVE_P_LIMIT:
            raise InputError(
                f"exhaustive mode caps p at {EXHAUSTIVE_P_LIMIT}, got {spec.p}"
            )
    elif spec.mode == "random":
        if spec.seed is None:
            raise InputError("random mode requires an explicit seed")
        if spec.samples < 1:
            raise InputError("random mode requires samples >= 1")
    else:
        raise InputError(f"unknown mode {spec.mode!r}")
    if spec.selective is not None:
        if spec.selective.c < 0:
            raise InputError("selective filter needs c >= 0")
        res = validate_nqr(spec.n, spec.selective.q, spec.selective.r)
        if not res.valid:
            raise InputError(
                f"selective filter triple (n={spec.n}, q={spec.selective.q}, "
                f"r={spec.selective.r}) is invalid (witness divisor {res.witness})"
            )
        if spec.component_dims[0] != 0:
            raise InputError("selective filter requires the zero component to vanish")
    return spec


def spec_from_document(doc: dict) -> CorpusSpec:
    if not isinstance(doc, dict):
        raise FormatError("<document>", "top level must be an object")
    try:
        filters = doc.get("filters", {})
        selective = None
        if filters.get("selective") is not None:
            s = filters["selective"]
            selective = SelectiveFilter(int(s["c"]), int(s["q"]), int(s["r"]))
        spec = CorpusSpec(
            p=int(doc["p"]),
            n=int(doc["n"]),
            component_dims=tuple(int(d) for d in doc["component_dims"]),
            alpha=int(doc.get("alpha", 1)),
            beta=int(doc.get("beta", 1)),
            mode=str(doc.get("mode", "exhaustive")),
            seed=None if doc.get("seed") is None else int(doc["seed"]),
            samples=int(doc.get("samples", 0)),
            identity_filter=bool(filters.get("identity", True)),
            grading_filter=bool(filters.get("grading", True)),
            selective=selective,
        )
    except KeyError as exc:
        raise FormatError(str(exc.args[0]), "missing required field") from exc
    except (TypeError, ValueError) as exc:
        raise FormatError("<document>", str(exc)) from exc
    return validate_spec(spec)


def load_spec(path: Union[str, Path]) -> CorpusSpec:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError("<document>", f"not valid JSON: {exc}") from exc
    return spec_from_document(doc)


def admissible_slots(spec: CorpusSpec) -> list[tuple[int, int, int]]:
    """Table slots (i, j, k) compatible with the grading, in lexicographic order."""
    degs = spec.degrees
    slots = []
    for i in range(spec.dim):
        for j in range(spec.dim):
            target = (degs[i] + degs[j]) % spec.n
            for k in range(spec.dim):
                if degs[k] == target:
                    slots.append((i, j, k))
    return slots


def candidate_count(spec: CorpusSpec) -> int:
    if spec.mode == "random":
        return spec.samples
    return spec.p ** len(admissible_slots(spec))


def _coeff_block(spec: CorpusSpec, slots, start: int, stop: int) -> np.ndarray:
    """Candidate coefficients for indices [start, stop) as a (stop-start, nslots) array."""
    count = stop - start
    ns = len(slots)
    out = np.zeros((count, ns), dtype=np.int64)
    if spec.mode == "exhaustive":
        idx = np.arange(start, stop, dtype=np.int64)
        for pos in range(ns - 1, -1, -1):
            out[:, pos] = idx % spec.p
            idx //= spec.p
    else:
        rng = random.Random(spec.seed)
        # reproduce the stream deterministically regardless of chunking
        flat = [rng.randrange(spec.p) for _ in range(stop * ns)]
        out[:] = np.asarray(flat[start * ns :], dtype=np.int64).reshape(count, ns)
    return out


def _batch_identity_mask(tables: np.ndarray, p: int, alpha: int, beta: int) -> np.ndarray:
    """Vectorized identity check over a batch of tables (B, d, d, d)."""
    d = tables.shape[1]
    if d == 0:
        return np.ones(tables.shape[0], dtype=bool)
    if d * (p - 1) ** 2 >= 2**63:
        from .algebra import check_identity_uniform, make_algebra

        return np.asarray(
            [check_identity_uniform(make_algebra(p, d, t, alpha, beta)).ok for t in tables]
        )
    T = tables
    lhs = np.einsum("bijm,bmkl->bijkl", T, T) % p
    rhs1 = np.einsum("bjkm,biml->bijkl", T, T) % p
    rhs2 = np.einsum("bikm,bmjl->bijkl", T, T) % p
    diff = (lhs - alpha * rhs1 - beta * rhs2) % p
    return ~diff.reshape(diff.shape[0], -1).any(axis=1)


@dataclass(frozen=True)
class Survivor:
    algebra: Algebra
    grading: Grading
    d: int
    derived_length: Optional[int]
    nilpotency_class: Optional[int]
    index: int  # position in the candidate stream

    def document(self) -> dict:
        doc = to_document(LoadedAlgebra(self.algebra, self.grading))
        doc["meta"] = {
            "expected": {
                "derived_length": self.derived_length,
                "nilpotency_class": self.nilpotency_class,
            }
        }
        return doc


@dataclass(frozen=True)
class BucketSummary:
    n: int
    q: Optional[int]
    r: Optional[int]
    c: Optional[int]
    d: int
    count: int
    max_derived_length: Optional[int]
    max_nilpotency_class: Optional[int]
    nonsolvable: int
    nonnilpotent: int


@dataclass(frozen=True)
class SearchResult:
    spec: CorpusSpec
    candidates: int
    survivors: tuple[Survivor, ...]
    summary: tuple[BucketSummary, ...]


def _threads() -> int:
    raw = os.environ.get("ALGLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _survivors_of_chunk(spec: CorpusSpec, slots, start: int, stop: int) -> list[Survivor]:
    from .grading import check_grading

    degrees = spec.degrees
    G = Grading(spec.n, degrees)
    nqr = (
        NQRTriple(spec.n, spec.selective.q, spec.selective.r)
        if spec.selective is not None
        else None
    )
    coeffs = _coeff_block(spec, slots, start, stop)
    d = spec.dim
    tables = np.zeros((coeffs.shape[0], d, d, d), dtype=np.int64)
    for pos, (i, j, k) in enumerate(slots):
        tables[:, i, j, k] = coeffs[:, pos]
    if spec.identity_filter:
        mask = _batch_identity_mask(tables, spec.p, spec.alpha % spec.p, spec.beta % spec.p)
    else:
        mask = np.ones(tables.shape[0], dtype=bool)
    out = []
    for local in np.flatnonzero(mask):
        A = Algebra(spec.p, d, tables[local].copy(), spec.alpha % spec.p, spec.beta % spec.p)
        if spec.grading_filter and not check_grading(A, G).ok:
            continue  # unreachable by construction; kept as a cheap sanity net
        if nqr is not None and not selective_check(A, G, spec.selective.c, nqr).ok:
            continue
        out.append(
            Survivor(
                A,
                G,
                d=len(set(degrees)),
                derived_length=derived_length(A),
                nilpotency_class=nilpotency_class(A),
                index=start + int(local),
            )
        )
    return out


def search(spec: CorpusSpec) -> SearchResult:
    """Run the full pipeline and collect survivors plus per-bucket maxima."""
    validate_spec(spec)
    slots = admissible_slots(spec)
    total = candidate_count(spec)
    ranges = [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    workers = _threads()
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(lambda se: _survivors_of_chunk(spec, slots, *se), ranges)
            )
    else:
        chunks = [_survivors_of_chunk(spec, slots, *se) for se in ranges]
    survivors = [s for chunk in chunks for s in chunk]
    return SearchResult(spec, total, tuple(survivors), tuple(_summarize(spec, survivors)))


def _summarize(spec: CorpusSpec, survivors) -> list[BucketSummary]:
    buckets: dict[tuple, list[Survivor]] = {}
    q = spec.selective.q if spec.selective else None
    r = spec.selective.r if spec.selective else None
    c = spec.selective.c if spec.selective else None
    for s in survivors:
        buckets.setdefault((spec.n, q, r, c, s.d), []).append(s)
    out = []
    for key in sorted(buckets, key=str):
        group = buckets[key]
        dls = [s.derived_length for s in group]
        ncs = [s.nilpotency_class for s in group]
        finite_dl = [x for x in dls if x is not None]
        finite_nc = [x for x in ncs if x is not None]
        out.append(
            BucketSummary(
                n=key[0], q=key[1], r=key[2], c=key[3], d=key[4],
                count=len(group),
                max_derived_length=max(finite_dl) if finite_dl else None,
                max_nilpotency_class=max(finite_nc) if finite_nc else None,
                nonsolvable=sum(1 for x in dls if x is None),
                nonnilpotent=sum(1 for x in ncs if x is None),
            )
        )
    return out


def iter_survivor_documents(result: SearchResult) -> Iterator[dict]:
    for s in result.survivors:
        yield s.document()
