"""Simulator for the parking process with car lengths and a trailer.

A street has ``M = z - 1 + y_1 + ... + y_n`` numbered spots (1-based) and a
trailer occupies spots ``1 .. z-1`` (no trailer when ``z == 1``).  Cars enter
one at a time.  Car ``i`` drives to the first empty spot ``j >= c_i`` and
parks on ``[j, j + y_i - 1]`` when that whole interval is empty and on the
street.  If there is no empty spot at or past ``c_i`` the car leaves without
parking; if the interval is blocked or runs off the end of the street the car
also leaves.  A blocked car never keeps searching past the blocking interval.
That single rule is the easiest one to get wrong, and the test suite pins it
with the smallest counterexample (lengths (2, 2), preferences (2, 1)).

Occupancy is tracked as a bitmask (bit ``j`` set when spot ``j`` is taken) so
that the exhaustive sweeps in :mod:`parkseq.enumeration` stay cheap.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "FailureReason",
    "ParkOutcome",
    "ParkingInstance",
    "check_preferences",
    "order_statistics",
    "simulate",
    "standard_order_bounds",
]


def _as_int_tuple(values: Iterable[int], what: str, minimum: int = 1) -> tuple[int, ...]:
    """Coerce to a tuple of true integers, rejecting floats and small values."""
    try:
        out = tuple(operator.index(v) for v in values)
    except TypeError as exc:
        raise ValueError(f"{what} must be integers") from exc
    if any(v < minimum for v in out):
        raise ValueError(f"{what} must all be >= {minimum}, got {out}")
    return out


class FailureReason(str, enum.Enum):
    """Why the first failing car could not park."""

    OFF_STREET = "off_street"  # no empty spot at or past the preference
    COLLISION = "collision"  # target interval blocked, or past the street end


@dataclass(frozen=True)
class ParkingInstance:
    """Car lengths plus the trailer parameter ``z`` (spots ``1 .. z-1`` taken)."""

    lengths: tuple[int, ...]
    trailer_z: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", _as_int_tuple(self.lengths, "car lengths"))
        if not self.lengths:
            raise ValueError("an instance needs at least one car")
        z = _as_int_tuple((self.trailer_z,), "trailer parameter")[0]
        object.__setattr__(self, "trailer_z", z)

    @property
    def car_count(self) -> int:
        return len(self.lengths)

    @property
    def street_length(self) -> int:
        """Number of spots: z - 1 trailer spots plus the total car length."""
        return self.trailer_z - 1 + sum(self.lengths)


@dataclass(frozen=True)
class ParkOutcome:
    """Result of one run of the parking process.

    ``placements[i]`` is the closed spot interval taken by car ``i + 1``.  On
    success ``configuration`` lists the car indices by increasing start spot.
    On failure the trailing fields identify the first car that could not park
    (later cars are never simulated) and ``placements`` covers only the cars
    parked before it.
    """

    success: bool
    placements: tuple[tuple[int, int], ...] = ()
    configuration: tuple[int, ...] = ()
    failed_car: int | None = None
    reason: FailureReason | None = None
    attempted_start: int | None = None
    blocked_spot: int | None = None


def order_statistics(prefs: Sequence[int]) -> tuple[int, ...]:
    """The nondecreasing rearrangement of a sequence; the input is untouched."""
    return tuple(sorted(_as_int_tuple(prefs, "preferences")))


def check_preferences(instance: ParkingInstance, prefs: Sequence[int]) -> tuple[int, ...]:
    """Validate a preference sequence against an instance, returning a tuple.

    Entries above the street length stay legal; such a car just cannot park.
    """
    out = _as_int_tuple(prefs, "preferences")
    if len(out) != instance.car_count:
        raise ValueError(f"expected {instance.car_count} preferences, got {len(out)}")
    return out


def _street_mask(spots: int) -> int:
    """Bits 1..spots set."""
    return (1 << (spots + 1)) - 2


def _trailer_mask(trailer_z: int) -> int:
    """Bits 1..z-1 set."""
    return (1 << trailer_z) - 2


def _parks(lengths: Sequence[int], trailer_z: int, prefs: Sequence[int], street: int) -> bool:
    """Success-only version of :func:`simulate` for hot enumeration loops.

    ``street`` is the precomputed mask from :func:`_street_mask`.
    """
    occupied = (1 << trailer_z) - 2
    for pref, size in zip(prefs, lengths):
        tail = (street & ~occupied) >> pref
        if not tail:
            return False
        start = pref + ((tail & -tail).bit_length() - 1)
        block = ((1 << size) - 1) << start
        if block & (occupied | ~street):
            return False
        occupied |= block
    return True


def simulate(instance: ParkingInstance, prefs: Sequence[int]) -> ParkOutcome:
    """Run the parking process; deterministic, one pass over the cars."""
    prefs = check_preferences(instance, prefs)
    spots = instance.street_length
    street = _street_mask(spots)
    occupied = _trailer_mask(instance.trailer_z)
    placements: list[tuple[int, int]] = []
    for car, (pref, size) in enumerate(zip(prefs, instance.lengths), start=1):
        tail = (street & ~occupied) >> pref
        if not tail:
            return ParkOutcome(
                False,
                tuple(placements),
                failed_car=car,
                reason=FailureReason.OFF_STREET,
            )
        start = pref + ((tail & -tail).bit_length() - 1)
        end = start + size - 1
        block = ((1 << size) - 1) << start
        if end > spots or occupied & block:
            blocked = next(
                (s for s in range(start + 1, min(end, spots) + 1) if occupied >> s & 1),
                None,
            )
            return ParkOutcome(
                False,
                tuple(placements),
                failed_car=car,
                reason=FailureReason.COLLISION,
                attempted_start=start,
                blocked_spot=blocked,
            )
        occupied |= block
        placements.append((start, end))
    order = sorted(range(1, instance.car_count + 1), key=lambda car: placements[car - 1][0])
    return ParkOutcome(True, tuple(placements), tuple(order))


def standard_order_bounds(instance: ParkingInstance) -> tuple[int, ...]:
    """Per-car preference caps for the gap-free outcome: z, z + y_1, z + y_1 + y_2, ...

    Car ``k`` ends up directly behind car ``k - 1`` (trailer at the far left,
    no gaps anywhere) exactly when every ``c_k`` is at most the ``k``-th value
    returned here.  Shifted down by one, the same vector is the strict right
    boundary of the lattice paths matched to the nondecreasing sequences.
    """
    bounds = []
    position = instance.trailer_z
    for size in instance.lengths:
        bounds.append(position)
        position += size
    return tuple(bounds)
