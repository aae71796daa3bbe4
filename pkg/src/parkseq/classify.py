"""Membership tests for the parking-sequence families.

Every family has a defining test that runs the simulator (over rearrangement
sweeps where the definition asks for them).  Families with a closed
characterization get that form too; the ``verify`` command and the test suite
keep both forms in agreement on exhaustive desk-scale grids.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .core import (
    ParkingInstance,
    _as_int_tuple,
    _parks,
    _street_mask,
    check_preferences,
    order_statistics,
    simulate,
    standard_order_bounds,
)

__all__ = [
    "check_boundary",
    "compositions",
    "distinct_permutations",
    "is_increasing_ps",
    "is_k_strong",
    "is_parking_sequence",
    "is_permutation_invariant",
    "is_strong_ps",
    "is_u_parking_function",
    "necessary_condition",
    "parks_in_standard_order",
    "perm_invariant_characterized",
]


def distinct_permutations(values: Sequence[int]) -> list[tuple[int, ...]]:
    """All distinct rearrangements of a multiset, sorted lexicographically.

    Deduplicating up front means repeated entries are never re-simulated.
    """
    return sorted(set(itertools.permutations(values)))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` positive parts, lex order."""
    if parts < 1 or parts > total:
        raise ValueError(f"need 1 <= parts <= {total}, got {parts}")
    for cuts in itertools.combinations(range(1, total), parts - 1):
        edges = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(edges, edges[1:]))


def check_boundary(bounds: Iterable[int]) -> tuple[int, ...]:
    """Validate a nondecreasing vector of positive integers."""
    out = _as_int_tuple(bounds, "boundary")
    if not out:
        raise ValueError("boundary must not be empty")
    if any(a > b for a, b in zip(out, out[1:])):
        raise ValueError(f"boundary must be nondecreasing, got {out}")
    return out


def is_parking_sequence(instance: ParkingInstance, prefs: Sequence[int]) -> bool:
    """Do all cars park under these preferences?"""
    return simulate(instance, prefs).success


def necessary_condition(instance: ParkingInstance, prefs: Sequence[int]) -> bool:
    """Counting bounds every parking sequence satisfies but that do not suffice.

    At least one preference must be at most z, and for each t at least t + 1
    preferences must be at most z plus the sum of the t largest car lengths
    (otherwise the top of the street cannot be fully covered).  With lengths
    (2, 2) and z = 1 the preference (2, 1) passes here yet fails to park.
    """
    prefs = check_preferences(instance, prefs)
    z = instance.trailer_z
    if not any(c <= z for c in prefs):
        return False
    bound = z
    largest_first = sorted(instance.lengths, reverse=True)
    for t in range(1, instance.car_count):
        bound += largest_first[t - 1]
        if sum(1 for c in prefs if c <= bound) < t + 1:
            return False
    return True


def is_increasing_ps(instance: ParkingInstance, prefs: Sequence[int]) -> bool:
    """Nondecreasing sequences that park: c_i <= z + y_1 + ... + y_{i-1}.

    The bound alone is equivalent to (nondecreasing and parks); the test
    suite asserts the equivalence against the simulator exhaustively.
    """
    prefs = check_preferences(instance, prefs)
    if any(a > b for a, b in zip(prefs, prefs[1:])):
        return False
    return all(c <= b for c, b in zip(prefs, standard_order_bounds(instance)))


def parks_in_standard_order(instance: ParkingInstance, prefs: Sequence[int]) -> bool:
    """Does the sequence park the cars in index order right behind the trailer?

    Defined through the simulator; agrees with the per-car caps from
    :func:`parkseq.core.standard_order_bounds` (also pinned by the tests).
    """
    outcome = simulate(instance, prefs)
    return outcome.success and outcome.configuration == tuple(
        range(1, instance.car_count + 1)
    )


def is_permutation_invariant(instance: ParkingInstance, prefs: Sequence[int]) -> bool:
    """Every rearrangement of the preferences (the sequence included) parks."""
    prefs = check_preferences(instance, prefs)
    street = _street_mask(instance.street_length)
    return all(
        _parks(instance.lengths, instance.trailer_z, rearranged, street)
        for rearranged in distinct_permutations(prefs)
    )


def _constant_invariant_ok(n: int, size: int, z: int, prefs: tuple[int, ...]) -> bool:
    # order statistic i capped at z + (i-1)k, and every entry at most z or on
    # the grid z + k, z + 2k, ..., z + (n-1)k
    stats = order_statistics(prefs)
    if any(c > z + (i - 1) * size for i, c in enumerate(stats, start=1)):
        return False
    return all(
        c <= z or ((c - z) % size == 0 and (c - z) // size <= n - 1) for c in prefs
    )


def _two_block_invariant_ok(n: int, r: int, small: int, z: int, prefs: tuple[int, ...]) -> bool:
    # the n-r+1 smallest order statistics sit at or below z; the j-th largest
    # beyond them may also sit on the grid z + small, ..., z + (j-1) * small
    stats = order_statistics(prefs)
    if any(c > z for c in stats[: n - r + 1]):
        return False
    for j in range(2, r + 1):
        c = stats[n - r + j - 1]
        if c <= z:
            continue
        if (c - z) % small or (c - z) // small > j - 1:
            return False
    return True


def perm_invariant_characterized(
    instance: ParkingInstance, prefs: Sequence[int]
) -> bool | None:
    """Closed-form invariance verdict for the characterized length families.

    Matched against the literal arrangement of the lengths:

    * strictly increasing lengths: invariant iff every entry is at most z;
    * constant lengths (k, ..., k): order statistics capped at z + (i-1)k and
      every entry in {1..z} or on the grid z + k, z + 2k, ..., z + (n-1)k;
    * (a, ..., a, b, ..., b) with a < b: the two-block order-statistic rule;
    * (a, 1, ..., 1) with a > 1: vector parking function for (z, ..., z+n-1).

    Returns None when the lengths match none of these; callers fall back to
    :func:`is_permutation_invariant`.  The dispatch is deliberately literal:
    for example (1, 2) is the strictly increasing case with invariant set
    [z]^2, while the rearranged (2, 1) is the one-big-car case with a strictly
    larger invariant set, so sorting the lengths first would be wrong.
    """
    prefs = check_preferences(instance, prefs)
    lengths = instance.lengths
    n = instance.car_count
    z = instance.trailer_z
    if all(a < b for a, b in zip(lengths, lengths[1:])):
        return all(c <= z for c in prefs)
    if len(set(lengths)) == 1:
        return _constant_invariant_ok(n, lengths[0], z, prefs)
    run = 1
    while run < n and lengths[run] == lengths[0]:
        run += 1
    if len(set(lengths[run:])) == 1 and lengths[0] < lengths[run]:
        return _two_block_invariant_ok(n, run, lengths[0], z, prefs)
    if lengths[0] > 1 and all(v == 1 for v in lengths[1:]):
        return is_u_parking_function(tuple(range(z, z + n)), prefs)
    return None


def is_strong_ps(
    lengths: Sequence[int],
    trailer_z: int,
    prefs: Sequence[int],
    *,
    definitional: bool = False,
) -> bool:
    """Parks under every rearrangement of the length vector.

    Characterized form: plain membership when the lengths are constant,
    otherwise parking the sorted lengths in standard order.  With
    ``definitional=True`` the rearrangements are swept instead (slow; kept
    for cross-checks).
    """
    lengths = _as_int_tuple(lengths, "car lengths")
    if definitional:
        return all(
            is_parking_sequence(ParkingInstance(arrangement, trailer_z), prefs)
            for arrangement in distinct_permutations(lengths)
        )
    if len(set(lengths)) == 1:
        return is_parking_sequence(ParkingInstance(lengths, trailer_z), prefs)
    return parks_in_standard_order(
        ParkingInstance(tuple(sorted(lengths)), trailer_z), prefs
    )


def is_k_strong(
    total: int,
    k: int,
    trailer_z: int,
    prefs: Sequence[int],
    *,
    definitional: bool = False,
) -> bool:
    """Parks every multiset of k car lengths totalling ``total`` behind the trailer.

    The street has z + total - 1 spots.  The binding composition is
    (1, ..., 1, total - k + 1), so the check reduces to a strong-sequence test
    against it; ``definitional=True`` sweeps every composition instead.
    """
    if not 1 <= k <= total:
        raise ValueError(f"need 1 <= k <= {total}, got {k}")
    if definitional:
        return all(
            is_parking_sequence(ParkingInstance(parts, trailer_z), prefs)
            for parts in compositions(total, k)
        )
    witness = (1,) * (k - 1) + (total - k + 1,)
    return is_strong_ps(witness, trailer_z, prefs)


def is_u_parking_function(bounds: Sequence[int], values: Sequence[int]) -> bool:
    """Order statistics bounded by the vector: x_(i) <= u_i for every i."""
    bounds = check_boundary(bounds)
    values = _as_int_tuple(values, "values")
    if len(values) != len(bounds):
        raise ValueError(f"expected {len(bounds)} values, got {len(values)}")
    return all(x <= u for x, u in zip(sorted(values), bounds))
