"""Exact computation of the vector space of chord-length identities.

A rational vector (a_1..a_m) is an *identity* when

    sum_j a_j * sin(j*pi/n) = 0      (the sine relation)
    sum_j a_j = 0                    (the zero-sum relation)

Two multisets have equal Euclidean path length exactly when their
difference is an identity.  With z = exp(i*pi/n), the sine relation is
equivalent to P(z) = 0 for the integer-linear-form polynomial

    P(x) = sum_j a_j x^(m+j)  -  sum_j a_j x^(m-j),

and since the cyclotomic polynomial of order 2n is the minimal
polynomial of z, P(z) = 0 holds iff the remainder of P modulo that
cyclotomic polynomial vanishes identically.  Dividing symbolically
(coefficients are integer vectors in the a_j) turns the sine relation
into phi(2n) integer linear constraints; adding the all-ones row gives
a system whose exact rational nullspace is the identity space.

Everything is exact: polynomials are dense integer (or integer-vector)
coefficient tuples, lowest degree first; elimination runs over
fractions.Fraction.  Pure functions over immutable data, thread-safe.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import num_types, validate_multiset

IntPolynomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# Dense polynomial helpers (coefficients lowest degree first).

def poly_trim(coeffs: Sequence[int]) -> IntPolynomial:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntPolynomial:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_exact_div(num: Sequence[int], den: Sequence[int]) -> IntPolynomial:
    """Quotient of num by den, which must divide exactly over the integers."""
    num = list(num)
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dn, dd = len(num) - 1, len(den) - 1
    lead = den[-1]
    quo = [0] * (dn - dd + 1)
    for k in range(dn, dd - 1, -1):
        c = num[k]
        if c % lead != 0:
            raise ValueError("division is not exact")
        q = c // lead
        quo[k - dd] = q
        if q:
            for i, di in enumerate(den):
                num[k - dd + i] -= q * di
    if any(num):
        raise ValueError("division is not exact")
    return poly_trim(quo)


def format_polynomial(coeffs: Sequence[int], var: str = "x") -> str:
    """Human form, highest-degree term first, e.g. "x^8 + x^7 - x^5 + 1"."""
    coeffs = poly_trim(coeffs)
    if not coeffs:
        return "0"
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            x = var if deg == 1 else f"{var}^{deg}"
            body = x if mag == 1 else f"{mag}{x}"
        terms.append((sign, body))
    head_sign, head = terms[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


@functools.lru_cache(maxsize=None)
def totient(k: int) -> int:
    if k < 1:
        raise ValueError("totient needs k >= 1")
    result = k
    x = k
    p = 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPolynomial:
    """Cyclotomic polynomial of order k, from x^k - 1 = prod_{d|k} of them."""
    if k < 1:
        raise ValueError("cyclotomic needs k >= 1")
    if k == 1:
        return (-1, 1)
    num = [-1] + [0] * (k - 1) + [1]
    poly = poly_trim(num)
    for d in range(1, k):
        if k % d == 0:
            poly = poly_exact_div(poly, cyclotomic(d))
    return poly


def _neg(x):
    if isinstance(x, tuple):
        return tuple(-e for e in x)
    return -x


def _sym_coeff(coeffs: Sequence, i: int):
    if 0 <= i < len(coeffs):
        return coeffs[i]
    if coeffs and isinstance(coeffs[0], tuple):
        return (0,) * len(coeffs[0])
    return 0


def is_palindromic(coeffs: Sequence, k: int) -> bool:
    """coefficient(k - j) == coefficient(j) for all j (degree at most k)."""
    if len(poly_like_trim(coeffs)) - 1 > k:
        return False
    return all(_sym_coeff(coeffs, k - j) == _sym_coeff(coeffs, j) for j in range(k + 1))


def is_antipalindromic(coeffs: Sequence, k: int) -> bool:
    """coefficient(k - j) == -coefficient(j) for all j (degree at most k)."""
    if len(poly_like_trim(coeffs)) - 1 > k:
        return False
    return all(
        _sym_coeff(coeffs, k - j) == _neg(_sym_coeff(coeffs, j)) for j in range(k + 1)
    )


def poly_like_trim(coeffs: Sequence) -> list:
    zero = (0,) * len(coeffs[0]) if coeffs and isinstance(coeffs[0], tuple) else 0
    c = list(coeffs)
    while c and c[-1] == zero:
        c.pop()
    return c


# ---------------------------------------------------------------------------
# The remainder system and its nullspace.

@dataclass(frozen=True)
class LinearSystem:
    """Integer constraint rows over the unknowns a_1..a_m.

    The first phi(2n) rows are the remainder coefficients of the
    symbolic division, lowest degree first; the last row is all ones
    (the zero-sum relation).
    """

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]


def _vector_division(n: int):
    """Divide the symbolic length polynomial by the order-2n cyclotomic.

    Coefficients are length-m integer tuples: entry j-1 is the
    multiplier of a_j.  Returns (quotient, remainder) coefficient
    lists, both lowest degree first; the remainder list always has
    exactly phi(2n) entries.
    """
    m = num_types(n)
    zero = (0,) * m
    work = [list(zero) for _ in range(2 * m + 1)]
    for j in range(1, m + 1):
        work[m + j][j - 1] += 1
        work[m - j][j - 1] -= 1
    phi = cyclotomic(2 * n)
    deg_phi = len(phi) - 1  # = totient(2n); phi is monic
    quo = [zero] * (2 * m - deg_phi + 1)
    for k in range(2 * m, deg_phi - 1, -1):
        c = tuple(work[k])
        quo[k - deg_phi] = c
        if any(c):
            for i, pi in enumerate(phi):
                if pi:
                    row = work[k - deg_phi + i]
                    for idx in range(m):
                        row[idx] -= c[idx] * pi
    rem = [tuple(work[i]) for i in range(deg_phi)]
    return quo, rem


def build_remainder_system(n: int) -> LinearSystem:
    """Linear system whose nullspace is the space of identities."""
    m = num_types(n)
    _, rem = _vector_division(n)
    rows = tuple(rem) + ((1,) * m,)
    return LinearSystem(n=n, m=m, rows=rows)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    # reduced row echelon form in place; returns (matrix, pivot columns)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _nullspace(rows: Sequence[Sequence[int]], m: int) -> list[tuple[Fraction, ...]]:
    mat = [[Fraction(x) for x in row] for row in rows]
    mat, pivots = _rref(mat)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -mat[prow][f]
        basis.append(tuple(v))
    return basis


def _primitive_rows(vectors: list[Sequence[Fraction]]) -> list[tuple[int, ...]]:
    # scale each row to primitive integers with positive leading entry
    out = []
    for v in vectors:
        denom = 1
        for x in v:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ints = [int(x * denom) for x in v]
        g = 0
        for x in ints:
            g = _gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        lead = next((x for x in ints if x != 0), 0)
        if lead < 0:
            ints = [-x for x in ints]
        out.append(tuple(ints))
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class IdentityBasis:
    """Integer basis of the identity space, reduced echelon as rows,
    primitive, first nonzero entry of each vector positive."""

    n: int
    vectors: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def identity_basis(n: int) -> IdentityBasis:
    """Exact nullspace of the remainder system, deterministically normalized."""
    system = build_remainder_system(n)
    raw = _nullspace(system.rows, system.m)
    if not raw:
        return IdentityBasis(n=n, vectors=())
    # reduce the stacked basis rows themselves to echelon form
    mat = [list(v) for v in raw]
    mat, _ = _rref(mat)
    mat = [row for row in mat if any(row)]
    mat.sort(key=lambda row: next(i for i, x in enumerate(row) if x != 0))
    return IdentityBasis(n=n, vectors=tuple(_primitive_rows(mat)))


def dimension_formula(n: int) -> int:
    """Dimension of the identity space: max(0, m - phi(2n)/2 - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n // 2
    return max(0, m - totient(2 * n) // 2 - 1)


def satisfies_sine_relation(entries: Sequence, n: int) -> bool:
    """Exact test of sum_j a_j sin(j*pi/n) = 0 via the cyclotomic remainder."""
    m = num_types(n)
    v = [Fraction(x) for x in entries]
    if len(v) != m:
        raise ValueError(f"expected {m} entries for n={n}, got {len(v)}")
    work = [Fraction(0)] * (2 * m + 1)
    for j in range(1, m + 1):
        work[m + j] += v[j - 1]
        work[m - j] -= v[j - 1]
    phi = cyclotomic(2 * n)
    deg_phi = len(phi) - 1
    for k in range(2 * m, deg_phi - 1, -1):
        c = work[k]
        if c:
            for i, pi in enumerate(phi):
                if pi:
                    work[k - deg_phi + i] -= c * pi
    return not any(work[:deg_phi])


def is_identity(entries: Sequence, n: int) -> bool:
    """True iff the vector satisfies both the sine and zero-sum relations."""
    v = [Fraction(x) for x in entries]
    if sum(v) != 0:
        return False
    return satisfies_sine_relation(v, n)


def same_length(m1: Sequence[int], m2: Sequence[int], n: int) -> bool:
    """Exactly equal Euclidean path lengths: the difference is an identity."""
    a = validate_multiset(m1, n)
    b = validate_multiset(m2, n)
    diff = [y - x for x, y in zip(a, b)]
    assert sum(diff) == 0
    return satisfies_sine_relation(diff, n)


# ---------------------------------------------------------------------------
# Improper identities (sine relation holds, zero-sum fails).

def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    x = n
    p = 2
    while p * p <= x:
        while x % p == 0:
            out[p] = out.get(p, 0) + 1
            x //= p
        p += 1
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def _improper_construction(n0: int) -> IntPolynomial | None:
    """Multiplier polynomial for the three base shapes, else None."""
    fac = _factorize(n0)
    primes = sorted(fac)
    if len(fac) == 2 and primes[0] == 2 and fac[2] == 1 and fac[primes[1]] == 1:
        # twice an odd prime: x^2 - 1
        return (-1, 0, 1)
    if len(fac) == 1 and primes[0] != 2 and fac[primes[0]] == 2:
        # odd prime squared: x^(t/2-1) - x^(t/2+1) with t = p - 1
        p = primes[0]
        t = p - 1
        coeffs = [0] * (t // 2 + 2)
        coeffs[t // 2 - 1] = 1
        coeffs[t // 2 + 1] = -1
        return tuple(coeffs)
    if len(fac) == 2 and primes[0] != 2 and all(e == 1 for e in fac.values()):
        # product of two distinct odd primes: x^((q-3)/2) (x - 1) (x^p + 1)
        p, q = primes
        shift = [0] * ((q - 3) // 2) + [1]
        return poly_mul(poly_mul(shift, (-1, 1)), (1,) + (0,) * (p - 1) + (1,))
    return None


def improper_identity(n: int) -> tuple[int, ...]:
    """A vector satisfying the sine relation whose entries sum to +-1.

    Built from an explicit multiple of the cyclotomic polynomial for n
    of the shape 2p, p^2 or pq (p, q odd primes), then spread by
    a'[k*j] = a[j] when only a proper divisor of n has such a shape.
    """
    for n0 in sorted((d for d in range(6, n + 1) if n % d == 0), reverse=True):
        mult = _improper_construction(n0)
        if mult is None:
            continue
        prod = poly_mul(mult, cyclotomic(2 * n0))
        m0 = n0 // 2
        base = [_sym_coeff(prod, m0 + j) for j in range(1, m0 + 1)]
        k = n // n0
        m = n // 2
        out = [0] * m
        for j in range(1, m0 + 1):
            out[k * j - 1] = base[j - 1]
        return tuple(out)
    raise ValueError(
        f"n={n} has no divisor of shape 2p, p^2 or pq with p, q odd primes"
    )
