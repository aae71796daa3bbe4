"""Closed-form exact counts for each family, on plain Python integers.

Everything here is exact end to end.  The lattice-path determinant runs
fraction-free elimination so no rationals ever appear, and the two closed
forms that divide a binomial assert divisibility instead of rounding.  Each
count is checked against its brute-force listing by the ``verify`` suites.
"""

from __future__ import annotations

import math
from typing import Sequence

from .core import ParkingInstance, _as_int_tuple, standard_order_bounds

__all__ = [
    "binomial",
    "count_inv_constant",
    "count_inv_strictly_increasing",
    "count_inv_two_block",
    "count_ips_constant",
    "count_ips_determinant",
    "count_ps_product",
    "count_sps",
    "count_sps_k",
    "count_u_pf_arithmetic",
    "fuss_catalan",
    "rising_factorial",
]


def _positive(value: int, what: str) -> int:
    out = _as_int_tuple((value,), what)[0]
    return out


def binomial(a: int, b: int) -> int:
    """C(a, b), with the convention C(a, b) = 0 for b < 0 or b > a.

    The zero convention covers sub-diagonal determinant entries where the
    lower index goes negative.  ``a`` must be nonnegative.
    """
    if a < 0:
        raise ValueError(f"upper index must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def count_ps_product(lengths: Sequence[int], trailer_z: int) -> int:
    """z * (z + y_1 + n - 1) * (z + y_1 + y_2 + n - 2) * ... * (z + y_1 + ... + y_{n-1} + 1)."""
    instance = ParkingInstance(lengths, trailer_z)
    n = instance.car_count
    total = instance.trailer_z
    acc = instance.trailer_z
    for i in range(1, n):
        acc += instance.lengths[i - 1]
        total *= acc + n - i
    return total


def _bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free elimination; every division is exact on integer input."""
    a = [list(row) for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return sign * a[-1][-1]


def count_ips_determinant(lengths: Sequence[int], trailer_z: int) -> int:
    """Number of nondecreasing members, as det[C(b_i, j - i + 1)].

    Here b_1 = z and b_i = z + y_1 + ... + y_{i-1}: the strict right boundary
    of the matching lattice paths, whose count this determinant is.
    """
    instance = ParkingInstance(lengths, trailer_z)
    bounds = standard_order_bounds(instance)
    n = instance.car_count
    rows = [
        [binomial(bounds[i - 1], j - i + 1) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    det = _bareiss_determinant(rows)
    if det < 0:
        raise ArithmeticError(f"path count came out negative ({det}); this is a bug")
    return det


def count_ips_constant(size: int, n: int, trailer_z: int) -> int:
    """Nondecreasing-member count for constant lengths (k, ..., k).

    Evaluates z / (z + n(k+1)) * C(z + n(k+1), n); the division is asserted
    exact rather than rounded.
    """
    size = _positive(size, "car length")
    n = _positive(n, "car count")
    z = _positive(trailer_z, "trailer parameter")
    m = z + n * (size + 1)
    num = z * binomial(m, n)
    if num % m:
        raise ArithmeticError(f"{num} is not divisible by {m}; this is a bug")
    return num // m


def fuss_catalan(size: int, n: int) -> int:
    """C((k+1)n, n) / (kn + 1); counts nondecreasing members for lengths (k^n), z = 1."""
    size = _positive(size, "order")
    n = _positive(n, "index")
    den = size * n + 1
    num = binomial((size + 1) * n, n)
    if num % den:
        raise ArithmeticError(f"{num} is not divisible by {den}; this is a bug")
    return num // den


def count_inv_strictly_increasing(n: int, trailer_z: int) -> int:
    """Invariant-member count z^n for strictly increasing lengths."""
    n = _positive(n, "car count")
    z = _positive(trailer_z, "trailer parameter")
    return z**n


def count_inv_constant(n: int, trailer_z: int) -> int:
    """Invariant-member count z(n+z)^(n-1) for constant lengths, any size."""
    n = _positive(n, "car count")
    z = _positive(trailer_z, "trailer parameter")
    return z * (n + z) ** (n - 1)


def count_inv_two_block(n: int, r: int, trailer_z: int) -> int:
    """Invariant-member count for lengths (a^r, b^(n-r)) with a < b.

    The sum over j of C(n, j)(r - j) r^(j-1) z^(n-j) for 0 <= j <= r - 1;
    the j = 0 term collapses to z^n, so the value never depends on a or b.
    """
    n = _positive(n, "car count")
    z = _positive(trailer_z, "trailer parameter")
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < {n}, got {r}")
    total = z**n
    for j in range(1, r):
        total += binomial(n, j) * (r - j) * r ** (j - 1) * z ** (n - j)
    return total


def count_sps(lengths: Sequence[int], trailer_z: int) -> int:
    """Count of sequences parking under every rearrangement of the lengths.

    Constant lengths fall back on the plain product count (every
    rearrangement is the same vector); otherwise the count is
    z * prod(z + partial sums of the sorted lengths).
    """
    ordered = tuple(sorted(_as_int_tuple(lengths, "car lengths")))
    z = _positive(trailer_z, "trailer parameter")
    if len(set(ordered)) == 1:
        return count_ps_product(ordered, z)
    total = z
    acc = z
    for size in ordered[:-1]:
        acc += size
        total *= acc
    return total


def rising_factorial(base: int, steps: int) -> int:
    """z(z+1)...(z+k-1); equals 1 when steps == 0."""
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")
    return math.prod(range(base, base + steps))


def count_sps_k(total: int, k: int, trailer_z: int) -> int:
    """Count of length-k sequences parking every composition of ``total``.

    Rising factorial z(z+1)...(z+k-1) for k < n; the unit-car case k = n is
    the vector-parking-function count z(n+z)^(n-1) instead.
    """
    total = _positive(total, "street weight")
    z = _positive(trailer_z, "trailer parameter")
    if not 1 <= k <= total:
        raise ValueError(f"need 1 <= k <= {total}, got {k}")
    if k == total:
        return z * (total + z) ** (total - 1)
    return rising_factorial(z, k)


def count_u_pf_arithmetic(trailer_z: int, n: int) -> int:
    """Vector parking functions for the boundary (z, z+1, ..., z+n-1): z(z+n)^(n-1)."""
    z = _positive(trailer_z, "trailer parameter")
    n = _positive(n, "length")
    return z * (z + n) ** (n - 1)
