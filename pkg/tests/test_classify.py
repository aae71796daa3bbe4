"""Family membership predicates: pinned examples and definition/characterization agreement."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkseq import (
    ParkingInstance,
    compositions,
    distinct_permutations,
    is_increasing_ps,
    is_k_strong,
    is_parking_sequence,
    is_permutation_invariant,
    is_strong_ps,
    is_u_parking_function,
    necessary_condition,
    parks_in_standard_order,
    perm_invariant_characterized,
    simulate,
    standard_order_bounds,
)


def _grid(max_n=3, max_y=3, zs=(1, 2)):
    for n in range(1, max_n + 1):
        for lengths in itertools.product(range(1, max_y + 1), repeat=n):
            for z in zs:
                yield ParkingInstance(lengths, z)


def _all_prefs(instance):
    spots = instance.street_length
    return itertools.product(range(1, spots + 1), repeat=instance.car_count)


class TestIsParkingSequence:
    def test_fig1(self):
        assert is_parking_sequence(ParkingInstance((1, 2, 2, 3), 4), (3, 7, 5, 3))

    def test_swapped_pair(self):
        assert not is_parking_sequence(ParkingInstance((2, 2), 1), (2, 1))

    def test_small_family_member(self):
        assert is_parking_sequence(ParkingInstance((1, 2), 1), (3, 1))


class TestNecessaryCondition:
    def test_not_sufficient(self):
        assert necessary_condition(ParkingInstance((2, 2), 1), (2, 1))
        assert not is_parking_sequence(ParkingInstance((2, 2), 1), (2, 1))

    def test_needs_one_preference_at_most_z(self):
        assert not necessary_condition(ParkingInstance((1, 2), 1), (3, 3))

    def test_fig1_prefs(self):
        assert necessary_condition(ParkingInstance((1, 2, 2, 3), 4), (3, 7, 5, 3))

    def test_implied_by_membership(self):
        for instance in _grid():
            for prefs in _all_prefs(instance):
                if is_parking_sequence(instance, prefs):
                    assert necessary_condition(instance, prefs)


class TestIncreasing:
    def test_examples(self):
        assert is_increasing_ps(ParkingInstance((2, 2), 1), (1, 3))
        assert not is_increasing_ps(ParkingInstance((2, 2), 1), (2, 2))
        assert not is_increasing_ps(ParkingInstance((1, 1, 4), 1), (1, 5, 6))

    def test_matches_nondecreasing_membership(self):
        for instance in _grid():
            for prefs in _all_prefs(instance):
                expected = all(
                    a <= b for a, b in zip(prefs, prefs[1:])
                ) and is_parking_sequence(instance, prefs)
                assert is_increasing_ps(instance, prefs) == expected


class TestStandardOrder:
    def test_fig1_is_not_standard(self):
        assert not parks_in_standard_order(ParkingInstance((1, 2, 2, 3), 4), (3, 7, 5, 3))

    def test_within_trailer_is_standard(self):
        instance = ParkingInstance((3, 1, 2), 2)
        for prefs in itertools.product((1, 2), repeat=3):
            assert parks_in_standard_order(instance, prefs)

    def test_gap_free_pair(self):
        assert parks_in_standard_order(ParkingInstance((2, 2), 1), (1, 3))

    def test_equals_the_prefix_caps(self):
        for instance in _grid():
            caps = standard_order_bounds(instance)
            for prefs in _all_prefs(instance):
                expected = all(c <= cap for c, cap in zip(prefs, caps))
                assert parks_in_standard_order(instance, prefs) == expected


class TestPermutationInvariant:
    def test_two_car_examples(self):
        instance = ParkingInstance((1, 2), 1)
        assert is_permutation_invariant(instance, (1, 1))
        assert not is_permutation_invariant(instance, (1, 2))

    def test_depends_on_length_gaps_not_just_order(self):
        assert is_permutation_invariant(ParkingInstance((4, 3, 1), 1), (1, 5, 1))
        assert not is_permutation_invariant(ParkingInstance((4, 3, 2), 1), (1, 5, 1))

    def test_closed_under_rearrangement(self):
        instance = ParkingInstance((2, 2, 1), 1)
        for prefs in _all_prefs(instance):
            if is_permutation_invariant(instance, prefs):
                for other in distinct_permutations(prefs):
                    assert is_permutation_invariant(instance, other)
                break


class TestCharacterizedInvariance:
    def test_strictly_increasing(self):
        instance = ParkingInstance((1, 2, 3), 2)
        assert perm_invariant_characterized(instance, (2, 2, 2)) is True
        assert perm_invariant_characterized(instance, (1, 2, 3)) is False

    def test_constant(self):
        instance = ParkingInstance((2, 2), 1)
        assert perm_invariant_characterized(instance, (1, 3)) is True
        assert perm_invariant_characterized(instance, (1, 2)) is False

    def test_one_big_car_is_classical(self):
        instance = ParkingInstance((3, 1, 1), 1)
        assert perm_invariant_characterized(instance, (1, 2, 3)) is True

    def test_uncharacterized_lengths_return_none(self):
        instance = ParkingInstance((4, 3, 1), 1)
        assert perm_invariant_characterized(instance, (1, 1, 1)) is None

    def test_literal_dispatch_keeps_orderings_apart(self):
        # (1, 2) is the strictly increasing case, its rearrangement (2, 1) the
        # one-big-car case; the two verdicts must differ on (1, 2).
        assert perm_invariant_characterized(ParkingInstance((1, 2), 1), (1, 2)) is False
        assert perm_invariant_characterized(ParkingInstance((2, 1), 1), (1, 2)) is True

    def test_agrees_with_the_sweep(self):
        for instance in _grid():
            for prefs in itertools.combinations_with_replacement(
                range(1, instance.street_length + 1), instance.car_count
            ):
                verdict = perm_invariant_characterized(instance, prefs)
                if verdict is not None:
                    assert verdict == is_permutation_invariant(instance, prefs), (
                        instance,
                        prefs,
                    )


class TestStrong:
    def test_pair_box(self):
        assert is_strong_ps((1, 2), 1, (1, 2))
        assert not is_strong_ps((1, 2), 1, (1, 3))

    def test_constant_lengths_reduce_to_membership(self):
        assert is_strong_ps((2, 2), 2, (4, 1))

    def test_mixed_pairs(self):
        assert is_strong_ps((1, 1, 2, 2), 1, (1, 2, 2, 1))

    def test_characterization_equals_definition(self):
        for instance in _grid(max_n=3):
            lengths, z = instance.lengths, instance.trailer_z
            for prefs in _all_prefs(instance):
                assert is_strong_ps(lengths, z, prefs) == is_strong_ps(
                    lengths, z, prefs, definitional=True
                )


class TestKStrong:
    def test_listed_sets_for_three_unit_weights(self):
        members = [
            prefs
            for prefs in itertools.product((1, 2, 3), repeat=2)
            if is_k_strong(3, 2, 1, prefs)
        ]
        assert members == [(1, 1), (1, 2)]
        assert [p for p in itertools.product((1, 2, 3), repeat=1) if is_k_strong(3, 1, 1, p)] == [
            (1,)
        ]

    def test_full_length_case_is_permutation_closed(self):
        assert is_k_strong(3, 3, 1, (3, 2, 1))

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            is_k_strong(3, 4, 1, (1, 1, 1, 1))

    def test_characterization_equals_definition(self):
        for n in range(1, 5):
            for k in range(1, n + 1):
                for z in (1, 2):
                    for prefs in itertools.product(range(1, z + n), repeat=k):
                        assert is_k_strong(n, k, z, prefs) == is_k_strong(
                            n, k, z, prefs, definitional=True
                        )


class TestUParkingFunction:
    def test_classical_examples(self):
        assert is_u_parking_function((1, 2, 3, 4), (1, 2, 4, 1))
        assert not is_u_parking_function((1, 2, 3, 4), (2, 2, 4, 2))

    def test_boundary_equality(self):
        assert is_u_parking_function((3, 3, 3), (3, 3, 3))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_u_parking_function((1, 2), (1, 1, 1))

    @given(st.permutations([1, 1, 2, 4]))
    def test_invariant_under_rearrangement(self, shuffled):
        assert is_u_parking_function((1, 2, 3, 4), shuffled) == is_u_parking_function(
            (1, 2, 3, 4), (1, 1, 2, 4)
        )


def test_compositions_cover_and_sum():
    parts = list(compositions(4, 2))
    assert parts == [(1, 3), (2, 2), (3, 1)]
    assert all(sum(p) == 6 for p in compositions(6, 3))
    with pytest.raises(ValueError):
        list(compositions(3, 4))


def test_nondecreasing_members_park_standard():
    # nondecreasing and successful implies index order, hence the prefix caps
    instance = ParkingInstance((1, 3, 2), 2)
    for prefs in itertools.combinations_with_replacement(
        range(1, instance.street_length + 1), 3
    ):
        if simulate(instance, prefs).success:
            assert parks_in_standard_order(instance, prefs)
