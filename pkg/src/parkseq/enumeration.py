"""Brute-force listings of the parking-sequence families.

These sweeps are the ground truth that the closed-form counts and the
characterizations are verified against, so they stay deliberately naive:
every candidate in a justified search space is tested with the defining
predicate.  A preference above the street length M can never park, which
bounds the space for a length-n instance at M^n candidates; a budget guard
refuses sweeps whose candidate space exceeds it rather than truncating.

All listings come back lexicographically sorted so output is reproducible
and diffable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .classify import (
    check_boundary,
    compositions,
    distinct_permutations,
    is_u_parking_function,
    necessary_condition,
)
from .core import ParkingInstance, _as_int_tuple, _parks, _street_mask, _trailer_mask, standard_order_bounds

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "FamilyListing",
    "enum_ips",
    "enum_lattice_paths",
    "enum_ps",
    "enum_ps_inv",
    "enum_sps",
    "enum_sps_k",
    "enum_u_pf",
]

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Candidate space larger than the configured enumeration budget."""

    def __init__(self, candidates: int, budget: int):
        super().__init__(
            f"enumeration would sweep {candidates} candidates, budget is {budget}"
        )
        self.candidates = candidates
        self.budget = budget


def _guard(candidates: int, budget: int) -> None:
    if candidates > budget:
        raise BudgetExceededError(candidates, budget)


@dataclass(frozen=True)
class FamilyListing:
    """A fully enumerated family, members strictly increasing lexicographically."""

    family: str
    params: dict[str, object] = field(compare=False)
    members: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be strictly increasing lexicographically")

    @property
    def cardinality(self) -> int:
        return len(self.members)


def enum_ps(instance: ParkingInstance, budget: int = DEFAULT_BUDGET) -> FamilyListing:
    """Every preference sequence in [1..M]^n under which all cars park.

    Depth-first over prefixes: a partial sequence is only extended while its
    cars still park, which prunes most of the space while keeping the sweep
    exhaustive over [1..M]^n.
    """
    spots = instance.street_length
    n = instance.car_count
    _guard(spots**n, budget)
    street = _street_mask(spots)
    lengths = instance.lengths
    last = n - 1
    members: list[tuple[int, ...]] = []
    prefix = [0] * n

    def extend(depth: int, occupied: int) -> None:
        size = lengths[depth]
        unit = (1 << size) - 1
        free = street & ~occupied
        blocked = ~free
        for pref in range(1, spots + 1):
            tail = free >> pref
            if not tail:
                break  # nothing empty at or past pref, so larger prefs fail too
            start = pref + ((tail & -tail).bit_length() - 1)
            piece = unit << start
            if piece & blocked:
                continue
            prefix[depth] = pref
            if depth != last:
                extend(depth + 1, occupied | piece)
            else:
                members.append(tuple(prefix))

    extend(0, _trailer_mask(instance.trailer_z))
    return FamilyListing(
        "ps",
        {"lengths": lengths, "trailer": instance.trailer_z},
        tuple(members),
    )


def enum_ips(
    instance: ParkingInstance,
    budget: int = DEFAULT_BUDGET,
    method: str = "bounds",
) -> FamilyListing:
    """The nondecreasing members of the family.

    ``method="bounds"`` (default) generates them straight from the prefix-sum
    caps c_1 <= ... <= c_n, c_i <= z + y_1 + ... + y_{i-1}, with no
    simulation.  ``method="filter"`` keeps the nondecreasing members of
    :func:`enum_ps` instead.  Both routes agree; the tests pin that.
    """
    params = {"lengths": instance.lengths, "trailer": instance.trailer_z}
    if method == "filter":
        base = enum_ps(instance, budget)
        members = tuple(
            m for m in base.members if all(a <= b for a, b in zip(m, m[1:]))
        )
        return FamilyListing("ips", params, members)
    if method != "bounds":
        raise ValueError(f"unknown method {method!r}; use 'bounds' or 'filter'")
    bounds = standard_order_bounds(instance)
    _guard(math.prod(bounds), budget)
    n = instance.car_count
    members: list[tuple[int, ...]] = []
    prefix = [0] * n

    def extend(depth: int, lowest: int) -> None:
        for pref in range(lowest, bounds[depth] + 1):
            prefix[depth] = pref
            if depth + 1 != n:
                extend(depth + 1, pref)
            else:
                members.append(tuple(prefix))

    extend(0, 1)
    return FamilyListing("ips", params, tuple(members))


def enum_ps_inv(instance: ParkingInstance, budget: int = DEFAULT_BUDGET) -> FamilyListing:
    """Members whose every rearrangement also parks.

    Invariance only depends on the multiset of preferences, so the sweep
    visits one nondecreasing representative per orbit and admits or rejects
    the whole orbit at once.  Representatives failing the cheap counting
    bounds are dropped before any rearrangement is simulated.
    """
    spots = instance.street_length
    n = instance.car_count
    _guard(spots**n, budget)
    street = _street_mask(spots)
    lengths, z = instance.lengths, instance.trailer_z
    members: list[tuple[int, ...]] = []
    for base in itertools.combinations_with_replacement(range(1, spots + 1), n):
        if base[0] > z:
            break  # smallest entry already too large, and it only grows from here
        if not necessary_condition(instance, base):
            continue
        orbit = distinct_permutations(base)
        if all(_parks(lengths, z, prefs, street) for prefs in orbit):
            members.extend(orbit)
    members.sort()
    return FamilyListing(
        "inv",
        {"lengths": lengths, "trailer": z},
        tuple(members),
    )


def enum_sps(
    lengths: Sequence[int],
    trailer_z: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "definition",
) -> FamilyListing:
    """Sequences that park under every rearrangement of the length vector.

    ``method="definition"`` intersects the simulation sweeps over all distinct
    rearrangements, starting from the sorted arrangement because it admits the
    fewest sequences.  ``method="bounds"`` emits the characterized set
    directly: the plain family for constant lengths, otherwise the
    standard-order box on the sorted lengths.  The set depends only on the
    multiset of lengths, so the listing records them sorted.
    """
    ordered = tuple(sorted(_as_int_tuple(lengths, "car lengths")))
    instance = ParkingInstance(ordered, trailer_z)
    params = {"lengths": ordered, "trailer": instance.trailer_z}
    if method == "definition":
        base = enum_ps(instance, budget)
        others = [a for a in distinct_permutations(ordered) if a != ordered]
        street = _street_mask(instance.street_length)
        members = tuple(
            prefs
            for prefs in base.members
            if all(_parks(arr, instance.trailer_z, prefs, street) for arr in others)
        )
        return FamilyListing("strong", params, members)
    if method != "bounds":
        raise ValueError(f"unknown method {method!r}; use 'definition' or 'bounds'")
    if len(set(ordered)) == 1:
        base = enum_ps(instance, budget)
        return FamilyListing("strong", params, base.members)
    bounds = standard_order_bounds(instance)
    _guard(math.prod(bounds), budget)
    members = tuple(itertools.product(*(range(1, b + 1) for b in bounds)))
    return FamilyListing("strong", params, members)


def enum_sps_k(
    total: int,
    k: int,
    trailer_z: int,
    budget: int = DEFAULT_BUDGET,
    definitional: bool = False,
) -> FamilyListing:
    """Length-k sequences parking every multiset of k car lengths totalling ``total``.

    The street has z + total - 1 spots, which also caps useful preferences.
    The default route uses the characterization through the binding
    composition (1, ..., 1, total - k + 1); ``definitional=True`` instead
    intersects plain membership over every composition of ``total`` into k
    parts (the compositions are closed under reordering, so that intersection
    is the definition).
    """
    if not 1 <= k <= total:
        raise ValueError(f"need 1 <= k <= {total}, got {k}")
    ceiling = trailer_z + total - 1
    _guard(ceiling**k, budget)
    params = {"n": total, "k": k, "trailer": trailer_z}
    if definitional:
        street = _street_mask(ceiling)
        parts_list = list(compositions(total, k))
        members = tuple(
            prefs
            for prefs in itertools.product(range(1, ceiling + 1), repeat=k)
            if all(_parks(parts, trailer_z, prefs, street) for parts in parts_list)
        )
        return FamilyListing("kstrong", params, members)
    if k == total:
        bounds = tuple(range(trailer_z, trailer_z + total))
        members = tuple(
            prefs
            for prefs in itertools.product(range(1, ceiling + 1), repeat=k)
            if is_u_parking_function(bounds, prefs)
        )
        return FamilyListing("kstrong", params, members)
    members = tuple(
        itertools.product(*(range(1, trailer_z + j + 1) for j in range(k)))
    )
    return FamilyListing("kstrong", params, members)


def enum_u_pf(bounds: Sequence[int], budget: int = DEFAULT_BUDGET) -> FamilyListing:
    """All vector parking functions for a nondecreasing boundary."""
    bounds = check_boundary(bounds)
    n = len(bounds)
    _guard(bounds[-1] ** n, budget)
    members = tuple(
        values
        for values in itertools.product(range(1, bounds[-1] + 1), repeat=n)
        if all(x <= u for x, u in zip(sorted(values), bounds))
    )
    return FamilyListing("upf", {"boundary": bounds}, members)


def enum_lattice_paths(
    boundary: Sequence[int],
    width: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list["LatticePath"]:
    """Nondecreasing x_1 <= ... <= x_q with 0 <= x_i < b_i, in lex order.

    ``width`` is the number of east steps of the enclosing rectangle; it
    defaults to the largest possible north-step coordinate.
    """
    from .biject import LatticePath

    boundary = check_boundary(boundary)
    _guard(math.prod(boundary), budget)
    if width is None:
        width = boundary[-1] - 1
    q = len(boundary)
    paths: list[LatticePath] = []
    steps = [0] * q

    def extend(depth: int, lowest: int) -> None:
        for x in range(lowest, boundary[depth]):
            steps[depth] = x
            if depth + 1 != q:
                extend(depth + 1, x)
            else:
                paths.append(LatticePath(tuple(steps), boundary, width))

    extend(0, 0)
    return paths
