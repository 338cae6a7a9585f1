"""Distinct Euclidean path lengths via minimal admissible multisets.

Each equal-length class of admissible multisets contains exactly one
lexicographically least member, so distinct lengths = number of
multisets M that no integer identity A (first nonzero entry negative)
takes to another admissible multiset M + A.  Only finitely many A can
matter: since identities sum to zero, M + A goes negative somewhere
unless the positive entries of A sum to at most n - 1.

The bounded set is enumerated exactly as the lattice points of the
integer identity kernel inside an L2 ball: zero-sum gives
|A|_1 = 2 * pospart(A) <= 2(n-1) and |A|_inf <= n - 1, hence
|A|_2^2 <= |A|_inf * |A|_1 <= 2 (n-1)^2, and a sphere enumeration over
the orthogonalized lattice basis is exhaustive within that radius.

The bounded set is then shrunk with the dominance relation arrow(B, A)
("whenever B eliminates a multiset, so does A"), which is a preorder;
survivors are the maximal elements, one representative per mutual-
dominance class, picked by a fixed reverse-lexicographic sweep.

The minimality scan itself partitions the admissible family by leading
count and checks block arrays against the (immutable, shared) essential
set; partial counts are summed, so ranges can run on parallel workers.
"""

from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .core import (
    constrained_divisors,
    is_admissible,
    num_types,
    sigma_d,
    validate_multiset,
)
from .enumeration import admissible_blocks, count_admissible, full_range, iter_admissible
from .identities import build_remainder_system, identity_basis, same_length


@dataclass(frozen=True)
class BoundedIdentitySet:
    """Integer identities with first nonzero entry negative and
    positive-entry sum at most n-1; `reduced` marks the essential
    (post-dominance-sweep) variant."""

    n: int
    vectors: tuple[tuple[int, ...], ...]
    reduced: bool

    def __len__(self) -> int:
        return len(self.vectors)


def positive_part(v: Sequence[int]) -> int:
    return sum(x for x in v if x > 0)


# ---------------------------------------------------------------------------
# Integer kernel of the remainder system.

def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _integer_kernel(rows: Sequence[Sequence[int]], m: int) -> list[list[int]]:
    # unimodular column reduction: returns a basis of {x in Z^m : Ax = 0}
    cols = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    active = list(range(m))
    for row in rows:
        vals = {c: sum(r * cols[c][i] for i, r in enumerate(row)) for c in active}
        nonzero = [c for c in active if vals[c]]
        while len(nonzero) > 1:
            c1, c2 = nonzero[0], nonzero[1]
            a, b = vals[c1], vals[c2]
            g, x, y = _extended_gcd(a, b)
            u1, u2 = cols[c1], cols[c2]
            new1 = [x * p + y * q for p, q in zip(u1, u2)]
            new2 = [-(b // g) * p + (a // g) * q for p, q in zip(u1, u2)]
            cols[c1], cols[c2] = new1, new2
            vals[c1], vals[c2] = g, 0
            nonzero = [c for c in nonzero if vals[c]]
        if nonzero:
            active.remove(nonzero[0])
    return [cols[c] for c in active]


def _row_hnf(vectors: list[list[int]]) -> list[tuple[int, ...]]:
    # row-style Hermite form: positive pivots, entries above reduced into
    # [0, pivot); gives a deterministic lattice basis
    mat = [list(v) for v in vectors]
    if not mat:
        return []
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            while mat[i][c]:
                q = mat[r][c] // mat[i][c]
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[i])]
                mat[r], mat[i] = mat[i], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return [tuple(row) for row in mat[:r] if any(row)]


def integer_identity_lattice(n: int) -> list[tuple[int, ...]]:
    """Basis of the lattice of all integer identity vectors."""
    system = build_remainder_system(n)
    kernel = _integer_kernel(system.rows, system.m)
    basis = _row_hnf(kernel)
    assert len(basis) == identity_basis(n).dimension
    return basis


# ---------------------------------------------------------------------------
# Bounded enumeration (sphere search over the lattice).

def _bounded_lattice_points(basis: list[tuple[int, ...]], radius_sq: int) -> Iterator[np.ndarray]:
    """All nonzero lattice points with squared L2 norm <= radius_sq.

    Orthogonalize the basis; in that frame a point is sum_i z_i b*_i
    with z_i = c_i + sum_{j>i} mu_ji c_j, and |x|^2 = sum z_i^2 |b*_i|^2,
    so each coefficient ranges over an explicit interval once the outer
    ones are fixed.  Float bounds carry a safety margin; membership in
    the ball is never needed exactly because callers refilter with the
    exact positive-part bound, which implies it.
    """
    B = np.array(basis, dtype=np.float64)
    r = len(basis)
    # Gram-Schmidt
    mu = np.zeros((r, r))
    ortho = np.zeros_like(B)
    norms = np.zeros(r)
    for i in range(r):
        v = B[i].copy()
        for j in range(i):
            mu[i, j] = np.dot(B[i], ortho[j]) / norms[j]
            v -= mu[i, j] * ortho[j]
        ortho[i] = v
        norms[i] = np.dot(v, v)
    limit = radius_sq * (1 + 1e-9) + 1e-6
    ibasis = np.array(basis, dtype=np.int64)
    coeffs = [0] * r

    def descend(level: int, partial: np.ndarray, used: float) -> Iterator[np.ndarray]:
        # center of the allowed interval for c_level given outer choices
        center = -sum(mu[j, level] * coeffs[j] for j in range(level + 1, r))
        width_sq = (limit - used) / norms[level]
        if width_sq < 0:
            return
        width = math.sqrt(width_sq)
        lo = math.ceil(center - width - 1e-9)
        hi = math.floor(center + width + 1e-9)
        if level == 0:
            if lo > hi:
                return
            span = np.arange(lo, hi + 1, dtype=np.int64)
            pts = partial[None, :] + span[:, None] * ibasis[0][None, :]
            yield from pts
            return
        for c in range(lo, hi + 1):
            coeffs[level] = c
            z = c - center
            yield from descend(
                level - 1, partial + c * ibasis[level], used + z * z * norms[level]
            )
        coeffs[level] = 0

    yield from descend(r - 1, np.zeros(len(basis[0]), dtype=np.int64), 0.0)


def enumerate_bounded_identities(n: int) -> BoundedIdentitySet:
    """Every integer identity with first nonzero entry negative whose
    positive entries sum to at most n-1, in lexicographic order."""
    basis = integer_identity_lattice(n)
    if not basis:
        return BoundedIdentitySet(n=n, vectors=(), reduced=False)
    bound = n - 1
    keep = []
    for pt in _bounded_lattice_points(basis, 2 * bound * bound):
        lead = 0
        for x in pt:
            if x:
                lead = x
                break
        if lead >= 0:
            continue
        pos = int(pt[pt > 0].sum())
        if pos <= bound:
            keep.append(tuple(int(x) for x in pt))
    keep.sort()
    return BoundedIdentitySet(n=n, vectors=tuple(keep), reduced=False)


# ---------------------------------------------------------------------------
# Dominance reduction.

def arrow(b: Sequence[int], a: Sequence[int], n: int) -> bool:
    """Dominance B -> A: whatever B eliminates, A eliminates too.

    (a) every a_j is >= 0 or >= b_j, so M + A stays nonnegative whenever
        M + B does; (b) for each constrained divisor d the position sum
        of A is <= 0 or <= that of B, so divisor bounds survive as well.
    """
    for aj, bj in zip(a, b):
        if aj < 0 and aj < bj:
            return False
    for d in constrained_divisors(n):
        sa = sigma_d(a, d)
        if sa > 0 and sa > sigma_d(b, d):
            return False
    return True


def _dominance_arrays(vectors: Sequence[Sequence[int]], n: int):
    arr = np.array(vectors, dtype=np.int32)
    neg = np.minimum(arr, 0)
    divs = constrained_divisors(n)
    sig = np.zeros((len(arr), len(divs)), dtype=np.int32)
    for i, d in enumerate(divs):
        sig[:, i] = arr[:, d - 1 :: d].sum(axis=1)
    # arrow(b, a) iff neg[a] >= neg[b] entrywise and sig[a] <= max(sig[b], 0)
    return neg, sig, np.maximum(sig, 0)


def _pareto_front(vectors: tuple[tuple[int, ...], ...], n: int) -> list[int]:
    """Indices of vectors not strictly dominated by any other vector.

    arrow is reflexive and transitive, so strict dominance (arrow holds
    one way only) is a strict partial order and the front is exactly
    the union of the maximal mutual-dominance classes.
    """
    if not vectors:
        return []
    neg, sig, sig_cap = _dominance_arrays(vectors, n)
    core: list[int] = []
    chunk = 8192
    order = np.argsort([positive_part(v) for v in vectors], kind="stable")
    for start in range(0, len(order), chunk):
        block = order[start : start + chunk]
        alive = np.ones(len(block), dtype=bool)
        for ci in core:
            # arrow(block member, core member): core's negatives sit above,
            # core's divisor sums sit below the capped block sums
            fwd = (neg[ci] >= neg[block]).all(axis=1) & (
                sig[ci] <= sig_cap[block]
            ).all(axis=1)
            if not fwd.any():
                continue
            back = (neg[block] >= neg[ci]).all(axis=1) & (
                sig[block] <= sig_cap[ci]
            ).all(axis=1)
            alive &= ~(fwd & ~back)
        for idx in block[alive]:
            # insert unless strictly dominated by the core; evict core
            # members this vector strictly dominates
            dominated = False
            for ci in list(core):
                fwd = arrow(vectors[idx], vectors[ci], n)
                back = arrow(vectors[ci], vectors[idx], n)
                if fwd and not back:
                    dominated = True
                    break
                if back and not fwd:
                    core.remove(ci)
            if not dominated:
                core.append(int(idx))
    return core


def essential_identities(n: int) -> BoundedIdentitySet:
    """Dominance-reduced elimination set.

    Strictly dominated identities go first (order-independent by
    transitivity); mutual-dominance ties are then broken by scanning
    the survivors in reverse lexicographic order and removing each one
    dominated by a distinct remaining survivor, repeated to a fixed
    point.
    """
    full = enumerate_bounded_identities(n)
    front = [full.vectors[i] for i in _pareto_front(full.vectors, n)]
    front.sort(reverse=True)
    survivors = list(front)
    changed = True
    while changed:
        changed = False
        for b in list(survivors):
            if any(a != b and arrow(b, a, n) for a in survivors):
                survivors.remove(b)
                changed = True
    survivors.sort()
    return BoundedIdentitySet(n=n, vectors=tuple(survivors), reduced=True)


def eliminates(a: Sequence[int], counts: Sequence[int], n: int) -> bool:
    """True iff adding the identity lands on another admissible multiset."""
    ms = validate_multiset(counts, n)
    cand = [x + y for x, y in zip(ms, a)]
    if any(x < 0 for x in cand):
        return False
    return is_admissible(cand, n)


# ---------------------------------------------------------------------------
# Distinct-length counting.

def _scan_chunk(n: int, prefix_values: tuple[int, ...], ess: tuple[tuple[int, ...], ...]) -> int:
    divs = constrained_divisors(n)
    adds = np.array(ess, dtype=np.int16)
    total = 0
    for rows in admissible_blocks(n, prefix_values):
        if not len(rows):
            continue
        base = rows.astype(np.int16)
        alive = np.ones(len(base), dtype=bool)
        for a in adds:
            cand = base + a
            hit = (cand >= 0).all(axis=1)
            for d in divs:
                if not hit.any():
                    break
                hit &= cand[:, d - 1 :: d].sum(axis=1, dtype=np.int32) <= n - d
            alive &= ~hit
        total += int(alive.sum())
    return total


def count_distinct_lengths(
    n: int,
    essential: Sequence[Sequence[int]] | None = None,
    workers: int = 1,
) -> int:
    """Number of distinct path lengths over the admissible multisets.

    Counts the multisets no essential identity eliminates.  With no
    identities at all, every admissible multiset is its own length
    class.  The scan is partitioned by leading count; `workers` > 1
    spreads partitions over processes.
    """
    if essential is None:
        essential = essential_identities(n).vectors
    ess = tuple(tuple(int(x) for x in v) for v in essential)
    if not ess:
        return count_admissible(n)
    values = list(range(n))
    if workers <= 1:
        return _scan_chunk(n, tuple(values), ess)
    buckets = [tuple(values[i::workers]) for i in range(workers)]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_scan_chunk, [n] * workers, buckets, [ess] * workers)
    return sum(parts)


def count_distinct_lengths_scalar(
    n: int, essential: Sequence[Sequence[int]] | None = None
) -> int:
    """Reference implementation of the minimality scan, one multiset at
    a time; used to cross-check the vectorized path at small n."""
    if essential is None:
        essential = essential_identities(n).vectors
    if not essential:
        return count_admissible(n)
    total = 0
    for _, ms in iter_admissible(full_range(n)):
        if not any(eliminates(a, ms, n) for a in essential):
            total += 1
    return total


class PrecisionError(RuntimeError):
    """Numeric grouping contradicted exact adjudication."""


def count_distinct_lengths_numeric(n: int, precision_bits: int = 256) -> int:
    """Distinct lengths by sorting high-precision values, with every
    adjacent pair adjudicated exactly.

    Floats only propose equalities: adjacent sorted lengths closer than
    2^-(precision_bits//2) are candidate equals, and each adjacent pair
    (grouped or not) is confirmed by the exact identity test.  Any
    disagreement raises PrecisionError with a precision hint.
    """
    import mpmath

    from .core import chord_lengths_numeric

    with mpmath.workprec(precision_bits):
        sines = chord_lengths_numeric(n, precision_bits)
        items = []
        for _, ms in iter_admissible(full_range(n)):
            items.append((mpmath.fsum(c * s for c, s in zip(ms, sines) if c), ms))
        items.sort(key=lambda pair: pair[0])
        threshold = mpmath.mpf(2) ** (-(precision_bits // 2))
        groups = 1 if items else 0
        for (len1, ms1), (len2, ms2) in zip(items, items[1:]):
            gap = len2 - len1
            numeric_same = gap < threshold
            exact_same = same_length(ms1, ms2, n)
            if numeric_same != exact_same:
                need = int(-mpmath.log(gap, 2) * 2 + 64) if gap > 0 else 2 * precision_bits
                raise PrecisionError(
                    f"numeric grouping at {precision_bits} bits disagrees with "
                    f"exact test for n={n}; retry with precision_bits >= {need}"
                )
            if not exact_same:
                groups += 1
        return groups
