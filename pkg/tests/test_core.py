"""Simulator behaviour, pinned example runs, and process invariants."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkseq import (
    FailureReason,
    ParkingInstance,
    order_statistics,
    simulate,
    standard_order_bounds,
)


def test_street_length_fig1_instance():
    assert ParkingInstance((1, 2, 2, 3), 4).street_length == 11


def test_street_length_single_unit_car():
    assert ParkingInstance((1,), 1).street_length == 1


def test_street_length_two_pairs_no_trailer():
    assert ParkingInstance((2, 2), 1).street_length == 4


def test_fig1_run_places_every_car():
    outcome = simulate(ParkingInstance((1, 2, 2, 3), 4), (3, 7, 5, 3))
    assert outcome.success
    assert outcome.placements == ((4, 4), (7, 8), (5, 6), (9, 11))
    assert outcome.configuration == (1, 3, 2, 4)


def test_swapped_pair_collides():
    outcome = simulate(ParkingInstance((2, 2), 1), (2, 1))
    assert not outcome.success
    assert outcome.failed_car == 2
    assert outcome.reason is FailureReason.COLLISION
    assert outcome.blocked_spot == 2
    assert outcome.placements == ((2, 3),)


def test_big_car_last_succeeds_but_sorted_does_not():
    instance = ParkingInstance((1, 1, 4), 1)
    assert simulate(instance, (5, 6, 1)).success
    rearranged = simulate(instance, (1, 5, 6))
    assert not rearranged.success
    assert rearranged.failed_car == 3
    assert rearranged.reason is FailureReason.COLLISION


def test_off_street_when_no_empty_spot_remains():
    outcome = simulate(ParkingInstance((1,), 1), (2,))
    assert outcome.reason is FailureReason.OFF_STREET
    assert outcome.failed_car == 1


def test_collision_past_street_end_reports_no_blocked_spot():
    # car 2 lands on spot 3 but would need spots 3-4 on a 3-spot street
    outcome = simulate(ParkingInstance((1, 2), 1), (2, 3))
    assert outcome.reason is FailureReason.COLLISION
    assert outcome.blocked_spot is None
    assert outcome.attempted_start == 3


def test_order_statistics_sorts_without_mutating():
    prefs = [3, 7, 5, 3]
    assert order_statistics(prefs) == (3, 3, 5, 7)
    assert prefs == [3, 7, 5, 3]
    assert order_statistics((1, 1)) == (1, 1)
    assert order_statistics((5, 6, 1)) == (1, 5, 6)


def test_preference_length_must_match():
    with pytest.raises(ValueError):
        simulate(ParkingInstance((1, 2), 1), (1,))


def test_rejects_nonpositive_values():
    with pytest.raises(ValueError):
        ParkingInstance((1, 0), 1)
    with pytest.raises(ValueError):
        ParkingInstance((1,), 0)
    with pytest.raises(ValueError):
        simulate(ParkingInstance((1,), 1), (0,))


def test_rejects_float_lengths():
    with pytest.raises(ValueError):
        ParkingInstance((1.5, 2), 1)


def test_standard_order_bounds_are_prefix_sums():
    assert standard_order_bounds(ParkingInstance((1, 2, 2, 3), 4)) == (4, 5, 7, 9)
    assert standard_order_bounds(ParkingInstance((2, 2), 1)) == (1, 3)


def _exact_cover(instance, outcome):
    taken = set(range(1, instance.trailer_z))
    for start, end in outcome.placements:
        span = set(range(start, end + 1))
        if taken & span:
            return False
        taken |= span
    return taken == set(range(1, instance.street_length + 1))


def _small_instances():
    for n in (1, 2, 3):
        for lengths in itertools.product((1, 2, 3), repeat=n):
            for z in (1, 2):
                yield ParkingInstance(lengths, z)


def test_success_covers_the_street_exactly():
    for instance in _small_instances():
        spots = instance.street_length
        for prefs in itertools.product(range(1, spots + 1), repeat=instance.car_count):
            outcome = simulate(instance, prefs)
            if outcome.success:
                assert _exact_cover(instance, outcome)
                assert sorted(outcome.configuration) == list(
                    range(1, instance.car_count + 1)
                )
            else:
                assert outcome.configuration == ()
                assert len(outcome.placements) == outcome.failed_car - 1


def test_preferences_within_trailer_park_in_index_order():
    for instance in _small_instances():
        identity = tuple(range(1, instance.car_count + 1))
        for prefs in itertools.product(
            range(1, instance.trailer_z + 1), repeat=instance.car_count
        ):
            outcome = simulate(instance, prefs)
            assert outcome.success
            assert outcome.configuration == identity


def test_nondecreasing_success_parks_in_index_order():
    for instance in _small_instances():
        spots = instance.street_length
        identity = tuple(range(1, instance.car_count + 1))
        for prefs in itertools.combinations_with_replacement(
            range(1, spots + 1), instance.car_count
        ):
            outcome = simulate(instance, prefs)
            if outcome.success:
                assert outcome.configuration == identity


@st.composite
def _instance_and_prefs(draw):
    lengths = tuple(draw(st.lists(st.integers(1, 4), min_size=1, max_size=5)))
    z = draw(st.integers(1, 4))
    prefs = tuple(
        draw(st.lists(st.integers(1, 30), min_size=len(lengths), max_size=len(lengths)))
    )
    return ParkingInstance(lengths, z), prefs


@given(_instance_and_prefs())
@settings(deadline=None)
def test_replay_is_bit_identical_and_covers_on_success(case):
    instance, prefs = case
    first = simulate(instance, prefs)
    again = simulate(instance, list(prefs))
    assert first == again
    if first.success:
        assert _exact_cover(instance, first)
