"""Named cross-check suites: formulas against sweeps, pinned values, round trips.

Each suite returns :class:`ReportRecord` rows; a record passes only when the
expected and computed values match exactly.  The ``all`` suite chains every
suite and is the repository's gate: ``parkseq verify --suite all``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .biject import (
    arithmetic_boundary,
    from_vector_parking_function,
    instance_boundary,
    ips_to_lattice_path,
    lattice_path_to_ips,
    to_vector_parking_function,
    two_block_boundary,
)
from .classify import perm_invariant_characterized
from .core import ParkingInstance
from .count import (
    count_inv_constant,
    count_inv_strictly_increasing,
    count_inv_two_block,
    count_ips_constant,
    count_ips_determinant,
    count_ps_product,
    count_sps,
    count_sps_k,
    count_u_pf_arithmetic,
    fuss_catalan,
)
from .enumeration import (
    DEFAULT_BUDGET,
    enum_ips,
    enum_lattice_paths,
    enum_ps,
    enum_ps_inv,
    enum_sps,
    enum_sps_k,
    enum_u_pf,
)

__all__ = ["DEFAULT_SEED", "ReportRecord", "SUITE_NAMES", "run_suite"]

DEFAULT_SEED = 1729

# Pinned reference values, reproduced exactly by the sweeps below.
_CATALAN = (1, 2, 5, 14, 42, 132)  # n = 1..6
_FUSS_ORDER2 = (1, 3, 12, 55, 273)  # n = 1..5
_TWO_BIG_CAR_COUNTS = {2: (3, 7, 31, 171), 3: (3, 7, 13, 51)}
_KSTRONG_N3 = {
    1: ((1,),),
    2: ((1, 1), (1, 2)),
    3: (
        (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (1, 2, 2), (1, 2, 3),
        (1, 3, 1), (1, 3, 2), (2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1),
        (2, 3, 1), (3, 1, 1), (3, 1, 2), (3, 2, 1),
    ),
}


@dataclass(frozen=True)
class ReportRecord:
    """One named comparison; passes only on exact equality."""

    check: str
    params: dict[str, object]
    expected: object
    computed: object
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


def _length_grid(max_n, max_y=3, min_n=1):
    for n in range(min_n, max_n + 1):
        for lengths in itertools.product(range(1, max_y + 1), repeat=n):
            yield lengths


def _characterized_set(instance):
    """All sequences the closed invariance conditions admit, built without simulation."""
    spots = instance.street_length
    return tuple(
        prefs
        for prefs in itertools.product(range(1, spots + 1), repeat=instance.car_count)
        if perm_invariant_characterized(instance, prefs)
    )


def _suite_eq3(max_n, seed, budget):
    max_n = 4 if max_n is None else max_n
    records = []
    for lengths in _length_grid(max_n):
        for z in (1, 2, 3):
            instance = ParkingInstance(lengths, z)
            records.append(
                ReportRecord(
                    "ps-product-vs-enum",
                    {"lengths": lengths, "trailer": z},
                    count_ps_product(lengths, z),
                    enum_ps(instance, budget).cardinality,
                    "product count formula against the exhaustive sweep",
                )
            )
    return records


def _suite_table1(max_n, seed, budget):
    records = []
    for size, row in _TWO_BIG_CAR_COUNTS.items():
        for extra, expected in enumerate(row):
            lengths = (size, size) + (1,) * extra
            records.append(
                ReportRecord(
                    "inv-two-big-cars-count",
                    {"lengths": lengths, "trailer": 1},
                    expected,
                    enum_ps_inv(ParkingInstance(lengths, 1), budget).cardinality,
                    "pinned reference count",
                )
            )
    return records


def _suite_catalan(max_n, seed, budget):
    max_n = 6 if max_n is None else max_n
    records = []
    for n in range(1, max_n + 1):
        computed = enum_ips(ParkingInstance((1,) * n, 1), budget).cardinality
        records.append(
            ReportRecord(
                "catalan-formula-vs-enum",
                {"n": n},
                fuss_catalan(1, n),
                computed,
                "Catalan number",
            )
        )
        if n <= len(_CATALAN):
            records.append(
                ReportRecord(
                    "catalan-pinned",
                    {"n": n},
                    _CATALAN[n - 1],
                    computed,
                    "pinned reference value",
                )
            )
    return records


def _suite_fuss(max_n, seed, budget):
    max_n = 5 if max_n is None else max_n
    records = []
    for n in range(1, max_n + 1):
        computed = enum_ips(ParkingInstance((2,) * n, 1), budget).cardinality
        expected = fuss_catalan(2, n)
        records.append(
            ReportRecord(
                "fuss-formula-vs-enum",
                {"n": n},
                expected,
                computed,
                "Fuss-Catalan number, order 2",
            )
        )
        records.append(
            ReportRecord(
                "fuss-vs-constant-count",
                {"n": n},
                expected,
                count_ips_constant(2, n, 1),
                "two closed forms for the same count",
            )
        )
        if n <= len(_FUSS_ORDER2):
            records.append(
                ReportRecord(
                    "fuss-pinned",
                    {"n": n},
                    _FUSS_ORDER2[n - 1],
                    computed,
                    "pinned reference value",
                )
            )
    return records


def _suite_determinant(max_n, seed, budget):
    max_n = 4 if max_n is None else max_n
    records = []
    for lengths in _length_grid(max_n):
        for z in (1, 2, 3):
            instance = ParkingInstance(lengths, z)
            records.append(
                ReportRecord(
                    "ips-determinant-vs-enum",
                    {"lengths": lengths, "trailer": z},
                    count_ips_determinant(lengths, z),
                    enum_ips(instance, budget).cardinality,
                    "boundary determinant against the direct sweep",
                )
            )
            if instance.car_count <= 3:
                records.append(
                    ReportRecord(
                        "ips-methods-agree",
                        {"lengths": lengths, "trailer": z},
                        True,
                        enum_ips(instance, budget).members
                        == enum_ips(instance, budget, method="filter").members,
                        "bound generation equals filtering the simulation sweep",
                    )
                )
    rng = random.Random(seed)
    for index in range(20):
        lengths = tuple(rng.randint(1, 4) for _ in range(5))
        z = rng.randint(1, 3)
        records.append(
            ReportRecord(
                "ips-determinant-vs-enum",
                {"lengths": lengths, "trailer": z, "sample": index},
                count_ips_determinant(lengths, z),
                enum_ips(ParkingInstance(lengths, z), budget).cardinality,
                f"seeded sample (seed {seed})",
            )
        )
    return records


def _suite_inv_characterizations(max_n, seed, budget):
    max_n = 4 if max_n is None else max_n
    records = []

    def set_and_count(instance, tag, expected_members, expected_count):
        inv = enum_ps_inv(instance, budget)
        params = {"lengths": instance.lengths, "trailer": instance.trailer_z}
        records.append(
            ReportRecord(
                f"{tag}-set",
                params,
                True,
                inv.members == expected_members,
                "sweep equals the characterized set",
            )
        )
        records.append(
            ReportRecord(
                f"{tag}-count", params, expected_count, inv.cardinality, "count formula"
            )
        )
        return inv

    # strictly increasing lengths: the invariant set is the full box [z]^n
    for n in range(1, max_n + 1):
        for lengths in itertools.combinations(range(1, 5), n):
            for z in (1, 2, 3):
                box = tuple(itertools.product(range(1, z + 1), repeat=n))
                set_and_count(
                    ParkingInstance(lengths, z),
                    "inv-increasing",
                    box,
                    count_inv_strictly_increasing(n, z),
                )

    # constant lengths
    for size in (1, 2, 3):
        for n in range(1, max_n + 1):
            for z in (1, 2, 3):
                instance = ParkingInstance((size,) * n, z)
                set_and_count(
                    instance,
                    "inv-constant",
                    _characterized_set(instance),
                    count_inv_constant(n, z),
                )

    # two-block lengths (a^r, b^(n-r)) with a < b, plus the contraction image
    for small, large in ((1, 2), (1, 3), (2, 3)):
        for n in range(2, max_n + 1):
            for r in range(1, n):
                for z in (1, 2, 3):
                    instance = ParkingInstance((small,) * r + (large,) * (n - r), z)
                    inv = set_and_count(
                        instance,
                        "inv-two-block",
                        _characterized_set(instance),
                        count_inv_two_block(n, r, z),
                    )
                    image = tuple(
                        sorted(
                            to_vector_parking_function(z, small, prefs)
                            for prefs in inv.members
                        )
                    )
                    target = enum_u_pf(two_block_boundary(z, n, r), budget)
                    records.append(
                        ReportRecord(
                            "inv-two-block-image",
                            {"lengths": instance.lengths, "trailer": z},
                            True,
                            image == target.members,
                            "contraction maps the sweep onto the boundary family",
                        )
                    )

    # one big car ahead of unit cars
    for size in (2, 3):
        for n in range(2, max_n + 1):
            for z in (1, 2, 3):
                instance = ParkingInstance((size,) + (1,) * (n - 1), z)
                target = enum_u_pf(arithmetic_boundary(z, n), budget)
                set_and_count(
                    instance,
                    "inv-one-big-car",
                    target.members,
                    count_u_pf_arithmetic(z, n),
                )
    return records


def _suite_strong(max_n, seed, budget):
    max_n = 4 if max_n is None else max_n
    records = []
    for n in range(2, max_n + 1):
        for lengths in itertools.combinations_with_replacement((1, 2, 3), n):
            if len(set(lengths)) == 1:
                continue
            for z in (1, 2):
                params = {"lengths": lengths, "trailer": z}
                swept = enum_sps(lengths, z, budget)
                boxed = enum_sps(lengths, z, budget, method="bounds")
                records.append(
                    ReportRecord(
                        "strong-definition-vs-bounds",
                        params,
                        True,
                        swept.members == boxed.members,
                        "rearrangement intersection equals the standard-order box",
                    )
                )
                records.append(
                    ReportRecord(
                        "strong-count",
                        params,
                        count_sps(lengths, z),
                        swept.cardinality,
                        "partial-sum product formula",
                    )
                )
                if n == 2:
                    box = tuple(
                        itertools.product(
                            range(1, z + 1), range(1, z + lengths[0] + 1)
                        )
                    )
                    records.append(
                        ReportRecord(
                            "strong-pair-box",
                            params,
                            box,
                            swept.members,
                            "two cars: box [z] x [z + smaller length]",
                        )
                    )
    return records


def _suite_sps_k(max_n, seed, budget):
    max_n = 5 if max_n is None else max_n
    records = []
    for k, expected in _KSTRONG_N3.items():
        records.append(
            ReportRecord(
                "kstrong-listing",
                {"n": 3, "k": k, "trailer": 1},
                expected,
                enum_sps_k(3, k, 1, budget).members,
                "pinned reference listing",
            )
        )
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for z in (1, 2, 3):
                params = {"n": n, "k": k, "trailer": z}
                listing = enum_sps_k(n, k, z, budget)
                records.append(
                    ReportRecord(
                        "kstrong-count",
                        params,
                        count_sps_k(n, k, z),
                        listing.cardinality,
                        "rising factorial, or the unit-car count when k = n",
                    )
                )
                if n <= 4:
                    records.append(
                        ReportRecord(
                            "kstrong-definition-vs-characterization",
                            params,
                            True,
                            enum_sps_k(n, k, z, budget, definitional=True).members
                            == listing.members,
                            "composition intersection equals the characterized set",
                        )
                    )
    return records


def _suite_bijections(max_n, seed, budget):
    max_n = 4 if max_n is None else max_n
    records = []
    for lengths in _length_grid(max_n):
        for z in (1, 2, 3):
            instance = ParkingInstance(lengths, z)
            params = {"lengths": lengths, "trailer": z}
            members = enum_ips(instance, budget).members
            paths = [ips_to_lattice_path(instance, prefs) for prefs in members]
            records.append(
                ReportRecord(
                    "ips-path-roundtrip",
                    params,
                    True,
                    all(
                        lattice_path_to_ips(instance, path) == prefs
                        for prefs, path in zip(members, paths)
                    ),
                    "shift there and back is the identity",
                )
            )
            records.append(
                ReportRecord(
                    "ips-path-image",
                    params,
                    True,
                    tuple(path.xs for path in paths)
                    == tuple(
                        path.xs
                        for path in enum_lattice_paths(
                            instance_boundary(instance), instance.street_length, budget
                        )
                    ),
                    "image is exactly the bounded-path family",
                )
            )

    def contraction_records(instance, step, boundary, tag):
        z = instance.trailer_z
        domain = _characterized_set(instance)
        image = tuple(
            sorted(to_vector_parking_function(z, step, prefs) for prefs in domain)
        )
        params = {"lengths": instance.lengths, "trailer": z}
        records.append(
            ReportRecord(
                f"{tag}-roundtrip",
                params,
                True,
                all(
                    from_vector_parking_function(
                        z, step, to_vector_parking_function(z, step, prefs)
                    )
                    == prefs
                    for prefs in domain
                ),
                "contraction then expansion is the identity",
            )
        )
        records.append(
            ReportRecord(
                f"{tag}-image",
                params,
                True,
                image == enum_u_pf(boundary, budget).members,
                "characterized set maps onto the boundary family",
            )
        )

    for size in (1, 2, 3):
        for n in range(1, max_n + 1):
            for z in (1, 2, 3):
                contraction_records(
                    ParkingInstance((size,) * n, z),
                    size,
                    arithmetic_boundary(z, n),
                    "contraction-constant",
                )
    for small, large in ((1, 2), (1, 3), (2, 3)):
        for n in range(2, max_n + 1):
            for r in range(1, n):
                for z in (1, 2, 3):
                    contraction_records(
                        ParkingInstance((small,) * r + (large,) * (n - r), z),
                        small,
                        two_block_boundary(z, n, r),
                        "contraction-two-block",
                    )
    return records


_SUITES = {
    "eq3": _suite_eq3,
    "table1": _suite_table1,
    "catalan": _suite_catalan,
    "fuss": _suite_fuss,
    "determinant": _suite_determinant,
    "inv-characterizations": _suite_inv_characterizations,
    "strong": _suite_strong,
    "sps-k": _suite_sps_k,
    "bijections": _suite_bijections,
}

SUITE_NAMES = ("all",) + tuple(_SUITES)


def run_suite(
    name: str,
    max_n: int | None = None,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
) -> list[ReportRecord]:
    """Run one named suite (or every suite for ``all``) and return its records."""
    if name == "all":
        records = []
        for suite in _SUITES.values():
            records.extend(suite(max_n, seed, budget))
        return records
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choices are {', '.join(SUITE_NAMES)}")
    return _SUITES[name](max_n, seed, budget)
