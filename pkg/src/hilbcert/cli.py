"""Command line front end.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 domain or
region rejection, 2 internal invariant violation, 3 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import certificate, genus_bounds, lattice, line_ideal, polar
from .errors import DomainError, HilbCertError, InternalInvariant

EXIT_OK, EXIT_DOMAIN, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2, 3
SCHEMA_VERSION = 1
DEFAULT_POLAR_SEED = 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def envelope(command: str, payload, started: float) -> str:
    return json.dumps({
        "schema": SCHEMA_VERSION,
        "command": command,
        "payload": payload,
        "elapsed_ms": int((time.perf_counter() - started) * 1000),
    }, sort_keys=True)


def _cmd_gmax(args, started) -> int:
    print(genus_bounds.gmax(args.d, args.s))
    return EXIT_OK


def _cmd_lattice(args, started) -> int:
    D = lattice.DivisorClass.parse(args.divisor)
    payload = {
        "divisor": list(D.as_tuple()),
        "degree": lattice.degree(D),
        "genus": lattice.genus(D),
        "r": lattice.r_intersections(D),
        "chi": lattice.chi(D),
        "prop312": lattice.check_prop312(D).to_dict(),
    }
    print(envelope("lattice", payload, started))
    return EXIT_OK


def _cmd_dims(args, started) -> int:
    table = line_ideal.dims_table()
    if args.json:
        print(envelope("dims", table, started))
    else:
        width = max(map(len, table))
        for key, value in table.items():
            print(f"{key:<{width}}  {value}")
    return EXIT_OK


def _cmd_certify(args, started) -> int:
    cert = certificate.build_decuple(args.d, args.g)
    if args.json:
        print(envelope("certify", cert.to_dict(), started))
    else:
        print(f"(d, g) = ({cert.d}, {cert.g})  region {cert.region.value}")
        print(f"v = {cert.v}  2*alpha = {list(cert.two_alpha)}")
        print(f"delta = {cert.delta}  m = {list(cert.m)}  r = {cert.r}")
        print("all checks pass")
    return EXIT_OK


def _cmd_sweep(args, started) -> int:
    from .sweep import sweep

    report = sweep(args.d_min, args.d_max, args.workers)
    print(f"d in [{args.d_min}, {args.d_max}]: {report.pairs_passed}/{report.pairs_total} certified"
          f" in {report.wall_time:.2f}s")
    for d, g, reason in report.failures[:20]:
        print(f"FAIL ({d}, {g}): {reason}", file=sys.stderr)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(envelope("sweep", report.to_dict(), started) + "\n")
    return EXIT_OK if report.all_passed else EXIT_INTERNAL


def _cmd_polar(args, started) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("HC_SEED", DEFAULT_POLAR_SEED))
    F = polar.surface_for(args.degree, seed, args.double_line)
    outcome = polar.polar_count(F, seed)
    payload = outcome.to_dict(args.degree)
    payload["seed"] = seed
    print(envelope("polar", payload, started))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gmax", help="maximal genus G(d, s)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_gmax)

    p = sub.add_parser("lattice", help="intersection numbers of a divisor class")
    p.add_argument("--divisor", required=True, help='"delta,m1,...,m9"')
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("dims", help="dimension counts for a line in P^3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("certify", help="build and verify a witness for (d, g)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("sweep", help="certify every (d, g) for d in a range")
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("polar", help="count polar points of a seeded random surface")
    p.add_argument("--degree", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--double-line", action="store_true")
    p.set_defaults(func=_cmd_polar)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except InternalInvariant as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DomainError, HilbCertError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
