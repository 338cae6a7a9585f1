"""Chord types, multisets and paths on n equally spaced circle points.

Points are numbered 0..n-1 around the circle.  The chord between points
i and j has type min(|i-j|, n-|i-j|), an integer in 1..m with m = n//2.
A Hamiltonian path visits each point once, so it induces a multiset of
n-1 chord types.  A multiset is stored as a count vector: counts[t-1]
is the number of chords of type t (the arithmetic is 1-indexed, the
storage is a plain tuple).

A multiset is *admissible* when, for every divisor d of n with
2 <= d <= m, the entries at positions divisible by d sum to at most
n - d.  Multiplication of the circle by a unit k (gcd(k, n) = 1) acts
on chord types by t -> fold(k*t mod n) with fold(x) = min(x, n - x);
this action preserves both admissibility and path-realizability, which
is what makes orbit-level search worthwhile.

All functions here are pure over immutable values and safe to call from
any number of threads.

Text forms: a multiset is written as comma-separated counts ("2,3,1,2"),
a path as comma-separated point indices ("0,4,1,5,2,6,3,7").
"""

from __future__ import annotations

import functools
import math
from typing import Iterator, Sequence

Multiset = tuple[int, ...]
Path = tuple[int, ...]


class InvalidChordError(ValueError):
    """Chord endpoints coincide or lie outside 0..n-1."""


class InvalidPathError(ValueError):
    """Point sequence is not a permutation of 0..n-1."""


class InvalidMultisetError(ValueError):
    """Count vector has the wrong length, a negative entry, or a bad total."""


def num_types(n: int) -> int:
    """Number m of distinct chord types for n points."""
    if n < 3:
        raise ValueError(f"need at least 3 points, got n={n}")
    return n // 2


def chord_type(i: int, j: int, n: int) -> int:
    """Type of the chord between points i and j: min(|i-j|, n-|i-j|)."""
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidChordError(f"points must lie in 0..{n - 1}, got ({i}, {j})")
    if i == j:
        raise InvalidChordError(f"no chord from point {i} to itself")
    d = abs(i - j)
    return min(d, n - d)


def validate_path(points: Sequence[int], n: int) -> Path:
    path = tuple(points)
    if len(path) != n or sorted(path) != list(range(n)):
        raise InvalidPathError(f"not a permutation of 0..{n - 1}: {path}")
    return path


def validate_multiset(counts: Sequence[int], n: int) -> Multiset:
    m = num_types(n)
    ms = tuple(counts)
    if len(ms) != m:
        raise InvalidMultisetError(f"expected {m} counts for n={n}, got {len(ms)}")
    if any(c < 0 for c in ms):
        raise InvalidMultisetError(f"negative count in {ms}")
    if sum(ms) != n - 1:
        raise InvalidMultisetError(f"counts must sum to {n - 1}, got {sum(ms)}")
    return ms


def path_multiset(points: Sequence[int], n: int) -> Multiset:
    """Count vector of the chord types along a Hamiltonian path."""
    path = validate_path(points, n)
    m = n // 2
    counts = [0] * m
    for a, b in zip(path, path[1:]):
        counts[chord_type(a, b, n) - 1] += 1
    return tuple(counts)


def constrained_divisors(n: int) -> tuple[int, ...]:
    """Divisors d of n with 2 <= d <= m; the ones admissibility checks.

    d = 1 always passes (the full sum is n-1) and d > m indexes an
    empty sum, so only these divisors can reject a multiset.
    """
    m = n // 2
    return tuple(d for d in range(2, m + 1) if n % d == 0)


def sigma_d(entries: Sequence, d: int) -> object:
    """Sum of the entries whose 1-based position is divisible by d."""
    m = len(entries)
    if not 2 <= d <= m:
        raise ValueError(f"d must lie in 2..{m}, got {d}")
    return sum(entries[j - 1] for j in range(d, m + 1, d))


def admissibility_violation(counts: Sequence[int], n: int) -> int | None:
    """Smallest divisor d whose constraint the multiset violates, or None."""
    ms = validate_multiset(counts, n)
    for d in constrained_divisors(n):
        if sigma_d(ms, d) > n - d:
            return d
    return None


def is_admissible(counts: Sequence[int], n: int) -> bool:
    return admissibility_violation(counts, n) is None


@functools.lru_cache(maxsize=None)
def _type_action(n: int, k: int) -> tuple[int, ...]:
    # _type_action(n, k)[t-1] is fold(k*t mod n), the image of type t.
    m = n // 2
    out = []
    for t in range(1, m + 1):
        x = (k * t) % n
        out.append(min(x, n - x))
    return tuple(out)


def coprime_units(n: int) -> tuple[int, ...]:
    """Units modulo n, one per pair {k, n-k} (both act identically on types)."""
    return tuple(k for k in range(1, n // 2 + 1) if math.gcd(k, n) == 1)


def coprime_transform(counts: Sequence[int], k: int, n: int) -> Multiset:
    """Image of a multiset under multiplication of the circle by k.

    Type t maps to fold(k*t mod n); the count at each image type is the
    sum of the counts of its preimages, so the total n-1 is preserved.
    """
    if math.gcd(k, n) != 1:
        raise ValueError(f"k={k} is not coprime to n={n}")
    ms = validate_multiset(counts, n)
    action = _type_action(n, k % n)
    out = [0] * (n // 2)
    for t, c in enumerate(ms, start=1):
        out[action[t - 1] - 1] += c
    return tuple(out)


def canonical_rep(counts: Sequence[int], n: int) -> Multiset:
    """Lexicographically least multiset in the coprime-action orbit."""
    ms = validate_multiset(counts, n)
    return min(coprime_transform(ms, k, n) for k in coprime_units(n))


def compositions(s: int, t: int) -> int:
    """Number of length-t nonnegative integer vectors summing to s."""
    if t == 0:
        return 1 if s == 0 else 0
    return math.comb(s + t - 1, t - 1)


def rank(counts: Sequence[int], n: int) -> int:
    """Position of a multiset in the lexicographic order of all multisets.

    Computed with binomial prefix sums: the values below counts[i] at
    position i contribute C(s+t, t) - C(s-counts[i]+t, t) ranks, where
    s is the remaining total and t the number of later positions.
    """
    ms = validate_multiset(counts, n)
    m = len(ms)
    r = 0
    s = n - 1
    for i, c in enumerate(ms):
        t = m - i - 1
        r += math.comb(s + t, t) - math.comb(s - c + t, t)
        s -= c
    return r


def unrank(r: int, n: int) -> Multiset:
    """Inverse of rank(): the multiset at lexicographic position r."""
    m = num_types(n)
    total = compositions(n - 1, m)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total}) for n={n}")
    out = []
    s = n - 1
    for i in range(m):
        t = m - i - 1
        # smallest c with C(s+t,t) - C(s-c+t,t) > r, by binary search
        lo, hi = 0, s
        base = math.comb(s + t, t)
        while lo < hi:
            mid = (lo + hi) // 2
            if base - math.comb(s - mid - 1 + t, t) > r:
                hi = mid
            else:
                lo = mid + 1
        c = lo
        r -= base - math.comb(s - c + t, t)
        out.append(c)
        s -= c
    return tuple(out)


def path_length_numeric(counts: Sequence[int], n: int, precision_bits: int = 256):
    """Euclidean length of any path with this multiset, radius-1 circle.

    A chord of type j has length 2*sin(j*pi/n); the result is the count-
    weighted sum, evaluated with at least precision_bits of working
    precision.  Returns an mpmath mpf.
    """
    ms = validate_multiset(counts, n)
    sines = chord_lengths_numeric(n, precision_bits)
    import mpmath

    with mpmath.workprec(precision_bits):
        return mpmath.fsum(c * s for c, s in zip(ms, sines) if c)


def chord_lengths_numeric(n: int, precision_bits: int = 256) -> tuple:
    """Chord lengths (2*sin(j*pi/n) for j = 1..m) at the given precision."""
    if precision_bits < 53:
        raise ValueError(f"precision_bits must be >= 53, got {precision_bits}")
    import mpmath

    with mpmath.workprec(precision_bits):
        pi_n = mpmath.pi / n
        return tuple(2 * mpmath.sin(j * pi_n) for j in range(1, n // 2 + 1))


def parse_multiset(text: str, n: int) -> Multiset:
    """Parse the comma-separated text form, e.g. "2,3,1,2"."""
    try:
        counts = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidMultisetError(f"cannot parse multiset {text!r}") from exc
    return validate_multiset(counts, n)


def format_multiset(counts: Sequence[int]) -> str:
    return ",".join(str(c) for c in counts)


def parse_path(text: str, n: int) -> Path:
    """Parse the comma-separated text form, e.g. "0,4,1,5,2,6,3,7"."""
    try:
        points = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidPathError(f"cannot parse path {text!r}") from exc
    return validate_path(points, n)


def format_path(points: Sequence[int]) -> str:
    return ",".join(str(p) for p in points)


def iter_orbit(counts: Sequence[int], n: int) -> Iterator[Multiset]:
    """Distinct images of a multiset under the coprime action."""
    seen = set()
    for k in coprime_units(n):
        img = coprime_transform(counts, k, n)
        if img not in seen:
            seen.add(img)
            yield img
