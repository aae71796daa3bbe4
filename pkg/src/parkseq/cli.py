"""Command-line front end: simulate, check, enumerate, count, verify, render.

Exit codes: 0 success or predicate true, 1 predicate false (a failed parking
counts), 2 usage error, 3 verification mismatch, 4 enumeration budget
exceeded.  ``--json`` swaps the text output for one stable document with
top-level fields ``command``, ``params``, ``result`` and, for verify,
``records``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classify import (
    is_increasing_ps,
    is_k_strong,
    is_parking_sequence,
    is_permutation_invariant,
    is_strong_ps,
    is_u_parking_function,
)
from .core import FailureReason, ParkingInstance, ParkOutcome, simulate
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
    BudgetExceededError,
    FamilyListing,
    enum_ips,
    enum_lattice_paths,
    enum_ps,
    enum_ps_inv,
    enum_sps,
    enum_sps_k,
    enum_u_pf,
)
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4

_FAMILIES = ("ps", "ips", "inv", "strong", "kstrong", "upf", "paths")
_FORMULAS = (
    "ps",
    "ips-det",
    "ips-const",
    "fuss",
    "inv-inc",
    "inv-const",
    "inv-two-block",
    "sps",
    "sps-k",
    "upf",
)


def _ints_csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _jsonable(value):
    if isinstance(value, FailureReason):
        return value.value
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _emit_json(command: str, params: dict, result: dict, records=None) -> None:
    doc = {"command": command, "params": _jsonable(params), "result": _jsonable(result)}
    if records is not None:
        doc["records"] = _jsonable(records)
    print(json.dumps(doc, indent=2))


def render_street(instance: ParkingInstance, prefs: Sequence[int]) -> list[str]:
    """Fixed-width text diagram of the street after the process stops.

    One cell per spot: the trailer as T, parked cars as C1, C2, ... and empty
    spots as dots, with the spot numbers beneath.  A failed run gets a marker
    under the blocking spot plus a one-line explanation.
    """
    outcome = simulate(instance, prefs)
    spots = instance.street_length
    labels = [""] * (spots + 1)
    for spot in range(1, instance.trailer_z):
        labels[spot] = "T"
    for car, (start, end) in enumerate(outcome.placements, start=1):
        for spot in range(start, end + 1):
            labels[spot] = f"C{car}"
    width = max(2, len(str(spots)), 1 + len(str(instance.car_count)))
    cells = "|" + "|".join((labels[s] or ".").rjust(width) for s in range(1, spots + 1)) + "|"
    numbers = "|" + "|".join(str(s).rjust(width) for s in range(1, spots + 1)) + "|"
    lines = [cells, numbers]
    if not outcome.success:
        car = outcome.failed_car
        pref = prefs[car - 1]
        if outcome.reason is FailureReason.OFF_STREET:
            marker = min(pref, spots)
            message = f"car {car} cannot park: no empty spot at or past {pref}"
        elif outcome.blocked_spot is not None:
            marker = outcome.blocked_spot
            message = f"car {car} cannot park: collision at spot {marker}"
        else:
            marker = outcome.attempted_start
            end = marker + instance.lengths[car - 1] - 1
            message = (
                f"car {car} cannot park: needs spots {marker}-{end}"
                f" but the street ends at {spots}"
            )
        lines.append(" " * (1 + (marker - 1) * (width + 1)) + "^" * width)
        lines.append(message)
    return lines


def _outcome_result(instance: ParkingInstance, outcome: ParkOutcome) -> dict:
    result = {
        "street_length": instance.street_length,
        "success": outcome.success,
        "placements": outcome.placements,
    }
    if outcome.success:
        result["configuration"] = outcome.configuration
    else:
        result["failed_car"] = outcome.failed_car
        result["reason"] = outcome.reason
        result["blocked_spot"] = outcome.blocked_spot
    return result


def _describe_outcome(instance: ParkingInstance, prefs, outcome: ParkOutcome) -> list[str]:
    lines = []
    if instance.trailer_z > 1:
        lines.append(f"spots 1-{instance.trailer_z - 1}: trailer")
    for car, (start, end) in enumerate(outcome.placements, start=1):
        lines.append(f"car {car} -> spots {start}-{end}")
    if outcome.success:
        order = ["T"] if instance.trailer_z > 1 else []
        order += [f"C{car}" for car in outcome.configuration]
        lines.append("configuration: " + " ".join(order))
    else:
        car = outcome.failed_car
        reason = "collision" if outcome.reason is FailureReason.COLLISION else "off street"
        detail = f" at spot {outcome.blocked_spot}" if outcome.blocked_spot else ""
        lines.append(f"car {car} cannot park: {reason}{detail} (preference {prefs[car - 1]})")
    return lines


def _cmd_simulate(args) -> int:
    instance = ParkingInstance(args.lengths, args.trailer)
    outcome = simulate(instance, args.prefs)
    params = {"lengths": args.lengths, "trailer": args.trailer, "prefs": args.prefs}
    diagram = render_street(instance, args.prefs) if (args.render or args.command == "render") else None
    if args.json:
        result = _outcome_result(instance, outcome)
        if diagram is not None:
            result["diagram"] = diagram
        _emit_json(args.command, params, result)
    else:
        if diagram is not None:
            print("\n".join(diagram))
        else:
            print("\n".join(_describe_outcome(instance, args.prefs, outcome)))
    return EXIT_OK if outcome.success else EXIT_FALSE


def _cmd_check(args) -> int:
    family = args.family
    prefs = args.prefs
    params = {"family": family, "prefs": prefs, "trailer": args.trailer}
    if family == "upf":
        if args.boundary is None:
            raise ValueError("--family upf needs --boundary")
        params["boundary"] = args.boundary
        value = is_u_parking_function(args.boundary, prefs)
    elif family == "kstrong":
        if args.n is None:
            raise ValueError("--family kstrong needs --n")
        k = args.k if args.k is not None else len(prefs)
        params.update(n=args.n, k=k)
        value = is_k_strong(args.n, k, args.trailer, prefs, definitional=args.definitional)
    elif family == "strong":
        if args.lengths is None:
            raise ValueError("--family strong needs --lengths")
        params["lengths"] = args.lengths
        value = is_strong_ps(args.lengths, args.trailer, prefs, definitional=args.definitional)
    elif family in ("ps", "ips", "inv"):
        if args.lengths is None:
            raise ValueError(f"--family {family} needs --lengths")
        params["lengths"] = args.lengths
        instance = ParkingInstance(args.lengths, args.trailer)
        predicate = {
            "ps": is_parking_sequence,
            "ips": is_increasing_ps,
            "inv": is_permutation_invariant,
        }[family]
        value = predicate(instance, prefs)
    else:
        raise ValueError(f"--family {family} cannot be checked, only enumerated")
    if args.json:
        _emit_json("check", params, {"value": value})
    else:
        print("true" if value else "false")
    return EXIT_OK if value else EXIT_FALSE


def _listing_for(args) -> FamilyListing:
    family = args.family
    if family in ("ps", "ips", "inv"):
        if args.lengths is None:
            raise ValueError(f"--family {family} needs --lengths")
        instance = ParkingInstance(args.lengths, args.trailer)
        if family == "ps":
            return enum_ps(instance, args.budget)
        if family == "ips":
            return enum_ips(instance, args.budget)
        return enum_ps_inv(instance, args.budget)
    if family == "strong":
        if args.lengths is None:
            raise ValueError("--family strong needs --lengths")
        return enum_sps(args.lengths, args.trailer, args.budget)
    if family == "kstrong":
        if args.n is None or args.k is None:
            raise ValueError("--family kstrong needs --n and --k")
        return enum_sps_k(args.n, args.k, args.trailer, args.budget, definitional=args.definitional)
    if family == "upf":
        if args.boundary is None:
            raise ValueError("--family upf needs --boundary")
        return enum_u_pf(args.boundary, args.budget)
    if args.boundary is None:
        raise ValueError("--family paths needs --boundary")
    paths = enum_lattice_paths(args.boundary, args.width, args.budget)
    return FamilyListing(
        "paths",
        {"boundary": tuple(args.boundary), "width": paths[0].width if paths else args.width},
        tuple(path.xs for path in paths),
    )


def _cmd_enumerate(args) -> int:
    listing = _listing_for(args)
    params = dict(listing.params, family=listing.family)
    result = {"cardinality": listing.cardinality}
    if not args.count_only:
        result["members"] = listing.members
    if args.out:
        _write_listing(args.out, listing, params, result)
        print(f"wrote {listing.cardinality} members to {args.out}")
        return EXIT_OK
    if args.json:
        _emit_json("enumerate", params, result)
    elif args.count_only:
        print(listing.cardinality)
    else:
        for member in listing.members:
            print(",".join(str(v) for v in member))
    return EXIT_OK


def _write_listing(path: str, listing: FamilyListing, params: dict, result: dict) -> None:
    if path.endswith(".json"):
        doc = {"command": "enumerate", "params": _jsonable(params), "result": _jsonable(result)}
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, indent=2)
            handle.write("\n")
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        for member in listing.members:
            handle.write(",".join(str(v) for v in member) + "\n")


def _cmd_count(args) -> int:
    formula = args.formula

    def need(**required):
        missing = [flag for flag, value in required.items() if value is None]
        if missing:
            pretty = ", ".join(f"--{name.replace('_', '-')}" for name in missing)
            raise ValueError(f"--formula {formula} needs {pretty}")

    if formula == "ps":
        need(lengths=args.lengths)
        value = count_ps_product(args.lengths, args.trailer)
        params = {"lengths": args.lengths, "trailer": args.trailer}
    elif formula == "ips-det":
        need(lengths=args.lengths)
        value = count_ips_determinant(args.lengths, args.trailer)
        params = {"lengths": args.lengths, "trailer": args.trailer}
    elif formula == "ips-const":
        need(k=args.k, n=args.n)
        value = count_ips_constant(args.k, args.n, args.trailer)
        params = {"k": args.k, "n": args.n, "trailer": args.trailer}
    elif formula == "fuss":
        need(k=args.k, n=args.n)
        value = fuss_catalan(args.k, args.n)
        params = {"k": args.k, "n": args.n}
    elif formula == "inv-inc":
        need(n=args.n)
        value = count_inv_strictly_increasing(args.n, args.trailer)
        params = {"n": args.n, "trailer": args.trailer}
    elif formula == "inv-const":
        need(n=args.n)
        value = count_inv_constant(args.n, args.trailer)
        params = {"n": args.n, "trailer": args.trailer}
    elif formula == "inv-two-block":
        need(n=args.n, r=args.r)
        value = count_inv_two_block(args.n, args.r, args.trailer)
        params = {"n": args.n, "r": args.r, "trailer": args.trailer}
    elif formula == "sps":
        need(lengths=args.lengths)
        value = count_sps(args.lengths, args.trailer)
        params = {"lengths": args.lengths, "trailer": args.trailer}
    elif formula == "sps-k":
        need(n=args.n, k=args.k)
        value = count_sps_k(args.n, args.k, args.trailer)
        params = {"n": args.n, "k": args.k, "trailer": args.trailer}
    else:
        need(n=args.n)
        value = count_u_pf_arithmetic(args.trailer, args.n)
        params = {"trailer": args.trailer, "n": args.n}
    if args.json:
        _emit_json("count", dict(params, formula=formula), {"value": value})
    else:
        print(value)
    return EXIT_OK


def _cmd_verify(args) -> int:
    records = run_suite(args.suite, max_n=args.max_n, seed=args.seed, budget=args.budget)
    failed = [record for record in records if not record.passed]
    if args.json:
        _emit_json(
            "verify",
            {"suite": args.suite, "max_n": args.max_n, "seed": args.seed},
            {"total": len(records), "passed": len(records) - len(failed), "failed": len(failed)},
            [
                {
                    "check": record.check,
                    "params": record.params,
                    "expected": record.expected,
                    "computed": record.computed,
                    "pass": record.passed,
                    "note": record.note,
                }
                for record in records
            ],
        )
    else:
        for record in records:
            tag = "PASS" if record.passed else "FAIL"
            params = " ".join(f"{key}={value}" for key, value in record.params.items())
            line = f"{tag}  {record.check}  {params}"
            if not record.passed:
                line += f"  expected={record.expected} computed={record.computed}"
            print(line)
        print(
            f"suite {args.suite}: {len(records)} checks,"
            f" {len(records) - len(failed)} passed, {len(failed)} failed"
        )
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkseq",
        description="Exact tools for parking sequences of cars with lengths behind a trailer.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def instance_args(sub, with_prefs: bool, lengths_required: bool = True):
        sub.add_argument(
            "--lengths",
            type=_ints_csv,
            required=lengths_required,
            help="comma-separated car lengths, e.g. 1,2,2,3",
        )
        sub.add_argument(
            "--trailer",
            "--z",
            type=int,
            default=1,
            help="trailer parameter z; spots 1..z-1 start occupied (default 1)",
        )
        if with_prefs:
            sub.add_argument(
                "--prefs",
                type=_ints_csv,
                required=True,
                help="comma-separated preferred spots, one per car",
            )

    def common_flags(sub):
        sub.add_argument("--json", action="store_true", help="machine-readable output")

    sub = commands.add_parser("simulate", help="run the parking process once")
    instance_args(sub, with_prefs=True)
    sub.add_argument("--render", action="store_true", help="include the text diagram")
    common_flags(sub)
    sub.set_defaults(func=_cmd_simulate)

    sub = commands.add_parser("render", help="text diagram of the street")
    instance_args(sub, with_prefs=True)
    common_flags(sub)
    sub.set_defaults(func=_cmd_simulate, render=True)

    sub = commands.add_parser("check", help="test one sequence against a family")
    sub.add_argument("--family", choices=_FAMILIES[:-1], required=True)
    instance_args(sub, with_prefs=True, lengths_required=False)
    sub.add_argument("--n", type=int, help="total car length (kstrong)")
    sub.add_argument("--k", type=int, help="car count (kstrong; defaults to len(prefs))")
    sub.add_argument("--boundary", type=_ints_csv, help="nondecreasing bounds (upf)")
    sub.add_argument(
        "--definitional",
        action="store_true",
        help="sweep every rearrangement or composition instead of the characterization",
    )
    common_flags(sub)
    sub.set_defaults(func=_cmd_check)

    sub = commands.add_parser("enumerate", help="list a family exhaustively")
    sub.add_argument("--family", choices=_FAMILIES, required=True)
    instance_args(sub, with_prefs=False, lengths_required=False)
    sub.add_argument("--n", type=int, help="total car length (kstrong)")
    sub.add_argument("--k", type=int, help="car count (kstrong)")
    sub.add_argument("--boundary", type=_ints_csv, help="bounds (upf) or path boundary (paths)")
    sub.add_argument("--width", type=int, help="east steps of the path rectangle (paths)")
    sub.add_argument("--count-only", action="store_true", help="print only the cardinality")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="candidate-space cap")
    sub.add_argument("--definitional", action="store_true", help="kstrong: sweep all compositions")
    sub.add_argument("--out", help="write the listing to FILE (.json, else CSV rows)")
    common_flags(sub)
    sub.set_defaults(func=_cmd_enumerate)

    sub = commands.add_parser("count", help="evaluate a closed-form count")
    sub.add_argument("--formula", choices=_FORMULAS, required=True)
    instance_args(sub, with_prefs=False, lengths_required=False)
    sub.add_argument("--n", type=int)
    sub.add_argument("--k", type=int)
    sub.add_argument("--r", type=int, help="leading block length (inv-two-block)")
    common_flags(sub)
    sub.set_defaults(func=_cmd_count)

    sub = commands.add_parser("verify", help="run formula-versus-sweep cross-checks")
    sub.add_argument("--suite", choices=SUITE_NAMES, required=True)
    sub.add_argument("--max-n", type=int, default=None, help="cap the sweep size where applicable")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="candidate-space cap")
    common_flags(sub)
    sub.set_defaults(func=_cmd_verify)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse and execute; returns the exit code instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
