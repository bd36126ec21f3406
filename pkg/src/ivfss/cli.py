"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .decision import decide, kendall_tau
from .energy import energy
from .errors import IvfssError, NumericalError
from .fixtures import FIXTURES, run_fixture
from .io import load, serialize_csv, serialize_json
from .report import render_comparison, render_report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _source(args):
    if args.fixture:
        return run_fixture(args.fixture)
    return load(args.file, args.input_format)


def cmd_validate(args) -> bytes:
    ds = _source(args)
    s = ds.ivfss
    if args.format == "json":
        doc = {"valid": True, "name": ds.name, "objects": s.n, "parameters": s.m, "baselines": sorted(ds.baselines)}
        return (json.dumps(doc, indent=2) + "\n").encode()
    return f"ok: {ds.name or args.file} ({s.n} objects x {s.m} parameters)\n".encode()


def cmd_energy(args) -> bytes:
    ds = _source(args)
    return render_report(energy(ds.ivfss), args.format, name=ds.name)


def cmd_rank(args) -> bytes:
    ds = _source(args)
    return render_report(decide(ds.ivfss, args.tie_tol), args.format, name=ds.name)


def cmd_compare(args) -> bytes:
    ds = _source(args)
    result = decide(ds.ivfss, args.tie_tol)
    ours = result.grouped_ranking()
    taus = {method: kendall_tau(ours, ranking) for method, ranking in ds.baselines.items()}
    return render_comparison(result, ds.baselines, taus, args.format, name=ds.name)


def cmd_fixture(args) -> bytes:
    ds = run_fixture(args.name)
    return serialize_json(ds) if args.format == "json" else serialize_csv(ds)


def _non_negative(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError("must be a non-negative number")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format (default: text)")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("file", nargs="?", help="dataset file (.json or .csv)")
    data.add_argument("--fixture", metavar="NAME", help=f"use an embedded dataset instead ({', '.join(FIXTURES)})")
    data.add_argument("--input-format", choices=("json", "csv"), help="override format detection by file suffix")

    tie = argparse.ArgumentParser(add_help=False)
    tie.add_argument("--tie-tol", type=_non_negative, default=1e-9, help="energies this close count as tied")

    parser = argparse.ArgumentParser(prog="ivfss", description="Energies and decisions for interval-valued fuzzy soft sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common, data], help="check a dataset file")
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("energy", parents=[common, data], help="singular values and energies")
    p.set_defaults(func=cmd_energy)
    p = sub.add_parser("rank", parents=[common, data, tie], help="leave-one-out energy ranking")
    p.set_defaults(func=cmd_rank)
    p = sub.add_parser("compare", parents=[common, data, tie], help="compare the energy ranking with baselines")
    p.set_defaults(func=cmd_compare)
    p = sub.add_parser("fixture", parents=[common], help="dump an embedded dataset (text: CSV, json: JSON)")
    p.add_argument("name")
    p.set_defaults(func=cmd_fixture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "fixture" and (args.file is None) == (args.fixture is None):
        parser.error("give exactly one of FILE or --fixture NAME")
    try:
        out = args.func(args)
    except IvfssError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
