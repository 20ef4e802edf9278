"""
cli.py
------

Description:
    Command-line front end for the Cayley spectra toolkit.

This program:
    spectrum   prints the closed-form spectrum of X_S(G)
    nullity    prints the maximum-nullity / minimum-rank bound, optionally
               audited against the oracle (--verify)
    verify     compares the closed form (or a spectrum JSON file given with
               --closed) with the brute-force oracle; exit 3 on mismatch
    ramanujan  prints C(r, n) for r = 0..n-1
    chartable  prints the character table of a group

    Output is an aligned table by default, or JSON / CSV with --format.
    Progress messages go to stderr so stdout holds exactly one document.

    Exit codes: 0 success, 2 input error, 3 verification mismatch,
    4 unsupported shape, 5 numerical failure.

Usage:
    python -m src.cli spectrum --group cyclic:12 --connection unitary
    python -m src.cli nullity --group cyclic:12 --connection unitary --verify
    python -m src.cli verify --group "cyclic:3 x dihedral:5" --connection "explicit:1,2 ; explicit:r1,r4"
"""

import argparse
import json
import sys

from src import config
from src.cayley import CYCLIC, parse_connection, parse_group
from src.characters import character_table
from src.errors import CayleyError, TooLargeForDenseOracle
from src.nullity import bound_for, check_bound_against_oracle, unitary_cyclic_bound
from src.numtheory import ramanujan_table
from src.oracle import verify_spectrum
from src.report import (
    FORMATS,
    bound_divisor_frame,
    bound_frame,
    character_frame,
    ramanujan_frame,
    render,
    save_frame,
    spectrum_frame,
    verification_frame,
)
from src.spectrum import Spectrum, closed_form_spectrum, unitary_cyclic_spectrum

MISMATCH_EXIT = 3


def progress(message):
    print(message, file=sys.stderr)


def _emit(args, document, frame):
    print(render(document, frame, args.format))
    if args.save:
        path = save_frame(frame, args.command)
        progress(f"Saved {args.command} report to {path}")


def _check_oracle_cap(group, max_order):
    if group.order > max_order:
        raise TooLargeForDenseOracle(
            f"group {group} has {group.order} elements, above the dense oracle cap of {max_order}"
        )


def _unitary_cyclic(group, connection):
    """n when the input is cyclic:n with the unitary set, so the divisor formulas apply without building S."""
    if len(group.factors) == 1 and group.factors[0].kind == CYCLIC and group.factors[0].n > 1:
        if connection.strip().lower() == "unitary":
            return group.factors[0].n
    return None


def cmd_spectrum(args):
    group = parse_group(args.group)
    n = _unitary_cyclic(group, args.connection)
    if n is not None:
        spec = unitary_cyclic_spectrum(n)
    else:
        spec = closed_form_spectrum(group, parse_connection(group, args.connection), exact=args.exact, tol=args.group_tol)
    _emit(args, spec.to_dict(), spectrum_frame(spec))
    return 0


def cmd_nullity(args):
    group = parse_group(args.group)
    n = _unitary_cyclic(group, args.connection)
    if args.verify:
        _check_oracle_cap(group, args.max_order)
    if n is not None and not args.verify:
        report = unitary_cyclic_bound(n)
    else:
        S = parse_connection(group, args.connection)
        report = bound_for(group, S)
        if args.verify:
            progress(f"Auditing claimed bound {report.claimed} on {group.order} vertices...")
            report = check_bound_against_oracle(
                group, S, report.claimed, base=report, gap_tol=args.group_tol, max_order=args.max_order
            )
    document = report.to_dict(per_divisor=args.per_divisor)
    if args.per_divisor and report.per_divisor:
        _emit(args, document, bound_divisor_frame(report))
    else:
        _emit(args, document, bound_frame(report))
    return 0


def cmd_verify(args):
    group = parse_group(args.group)
    _check_oracle_cap(group, args.max_order)
    S = parse_connection(group, args.connection)
    if args.closed:
        try:
            with open(args.closed) as f:
                closed = Spectrum.from_dict(json.load(f))
        except (OSError, json.JSONDecodeError) as e:
            print(f"Error: cannot read closed spectrum {args.closed}: {e}", file=sys.stderr)
            return 2
    else:
        closed = closed_form_spectrum(group, S, tol=args.group_tol)
    progress(f"Building adjacency matrix for {group.order} vertices and eigensolving...")
    report = verify_spectrum(closed, group, S, tol=args.tol, gap_tol=args.group_tol, max_order=args.max_order)
    _emit(args, report.to_dict(), verification_frame(report))
    progress("Verification matched." if report.matched else
             f"Verification MISMATCH: max value error {report.max_value_error:.3e}, "
             f"{len(report.multiplicity_mismatches)} multiplicity mismatches.")
    return 0 if report.matched else MISMATCH_EXIT


def cmd_ramanujan(args):
    rows = ramanujan_table(args.n, direct=args.direct)
    document = {"n": args.n, "rows": rows}
    _emit(args, document, ramanujan_frame(rows))
    return 0


def cmd_chartable(args):
    table = character_table(parse_group(args.group))
    _emit(args, table.to_dict(), character_frame(table))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cayley-spectra",
        description="Closed-form spectra and maximum-nullity bounds of Cayley graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table", help="output format (default: table)")
    common.add_argument("--tol", type=float, default=config.VALUE_TOL, help="eigenvalue comparison tolerance")
    common.add_argument("--group-tol", type=float, default=config.GROUP_TOL, help="multiplicity grouping gap")
    common.add_argument("--max-order", type=int, default=config.MAX_ORDER, help="dense oracle vertex cap")
    common.add_argument("--save", action="store_true", help="also save a timestamped CSV under the reports folder")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--group", required=True, help="e.g. cyclic:6, dihedral:5, 'cyclic:3 x dihedral:5'")
    graph.add_argument("--connection", required=True, help="e.g. unitary, gcdclass:2, explicit:1,5 ; explicit:r1,r4")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, graph], help="closed-form spectrum")
    p.add_argument("--exact", action="store_true", help="only accept integer closed forms")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("nullity", parents=[common, graph], help="maximum-nullity bound")
    p.add_argument("--verify", action="store_true", help="audit the bound against the oracle")
    p.add_argument("--per-divisor", action="store_true", help="include the per-divisor bound table")
    p.set_defaults(func=cmd_nullity)

    p = sub.add_parser("verify", parents=[common, graph], help="closed form vs oracle")
    p.add_argument("--closed", help="JSON spectrum file to verify instead of the closed form")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ramanujan", parents=[common], help="table of Ramanujan sums C(r, n)")
    p.add_argument("n", type=int)
    p.add_argument("--direct", action="store_true", help="add the direct root-of-unity sums")
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("chartable", parents=[common], help="character table")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_chartable)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CayleyError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
