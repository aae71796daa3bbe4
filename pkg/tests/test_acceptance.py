"""End-to-end acceptance run: every pinned result, exact, one line per criterion.

Run ``pytest -s tests/test_acceptance.py`` to see the PASS/FAIL lines.  Each
criterion is exact (tolerance zero); most delegate to the named ``verify``
suites so the command line gate checks the same things.
"""

import pytest

from parkseq import (
    ParkingInstance,
    is_parking_sequence,
    necessary_condition,
    simulate,
)
from parkseq.verify import run_suite


def _criterion(tag, records):
    failures = [record for record in records if not record.passed]
    status = "FAIL" if failures else "PASS"
    print(f"{status} {tag}: {len(records) - len(failures)}/{len(records)} checks")
    assert not failures, f"{tag}: {len(failures)} failed, first: {failures[:3]}"


def _boolean(tag, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} {tag}")
    assert ok, f"{tag} {detail}"


@pytest.fixture(scope="module")
def inv_records():
    return run_suite("inv-characterizations")


def test_criterion_01_figure_replay():
    outcome = simulate(ParkingInstance((1, 2, 2, 3), 4), (3, 7, 5, 3))
    ok = (
        outcome.success
        and outcome.placements == ((4, 4), (7, 8), (5, 6), (9, 11))
        and outcome.configuration == (1, 3, 2, 4)
    )
    _boolean("criterion 1 (four-car replay)", ok, f"got {outcome}")


def test_criterion_02_product_count_vs_sweep():
    _criterion("criterion 2 (product count on the full grid)", run_suite("eq3"))


def test_criterion_03_two_big_car_table():
    _criterion("criterion 3 (pinned invariant counts)", run_suite("table1"))


def test_criterion_04_catalan_and_fuss():
    _criterion(
        "criterion 4 (Catalan and Fuss-Catalan)",
        run_suite("catalan") + run_suite("fuss"),
    )


def test_criterion_05_determinant():
    _criterion("criterion 5 (boundary determinant)", run_suite("determinant"))


def test_criterion_06_invariance_characterizations(inv_records):
    _criterion("criterion 6 (invariance characterizations)", inv_records)


def test_criterion_07_strong_sequences():
    _criterion("criterion 7 (rearranged length vectors)", run_suite("strong"))


def test_criterion_08_k_strong():
    _criterion("criterion 8 (fixed street weight)", run_suite("sps-k"))


def test_criterion_09_bijection_round_trips(inv_records):
    images = [record for record in inv_records if record.check.endswith("-image")]
    _criterion("criterion 9 (round trips and images)", run_suite("bijections") + images)


def test_criterion_10_counterexample_pinning():
    swapped = is_parking_sequence(ParkingInstance((2, 2), 1), (2, 1))
    sorted_large = is_parking_sequence(ParkingInstance((1, 1, 4), 1), (1, 5, 6))
    large_last = is_parking_sequence(ParkingInstance((1, 1, 4), 1), (5, 6, 1))
    necessary = necessary_condition(ParkingInstance((2, 2), 1), (2, 1))
    ok = (not swapped) and (not sorted_large) and large_last and necessary
    _boolean(
        "criterion 10 (counterexample pinning)",
        ok,
        f"swapped={swapped} sorted_large={sorted_large} large_last={large_last} necessary={necessary}",
    )
