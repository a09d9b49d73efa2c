"""Command-line front end.

Exit codes: 0 success, 1 theorem violation, 2 input error (including
resource limits), 3 cross-check mismatch between independent routes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from .emd import emd, emd_bfs_oracle
from .errors import ConsistencyError, InvalidInputError, ResourceLimitError
from .gini import gini_general, lorenz_curve, weighted_total
from .kostka import graded_multiplicity_report, kostka_foulkes_charge, kostka_foulkes_kostant, verify_theorem1
from .partitions import Composition, Partition, flat_partition
from .qpoly import degree

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3

MAX_VERIFY_N = 6


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv_text(rows, header=None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=False) + "\n"


def cmd_gini(args) -> int:
    lam = Partition(args.lam)
    n = args.n if args.n is not None else len(lam)
    lam = lam.padded(n)
    k = args.k
    if k is None:
        if sum(lam) % n:
            raise InvalidInputError(f"total {sum(lam)} is not a multiple of n={n}; pass --k")
        k = sum(lam) // n
    g = gini_general(lam, n, k)
    b_lam, b_flat = weighted_total(lam), weighted_total(flat_partition(k, n))
    if args.format == "json":
        out = _dump({"lambda": list(lam), "n": n, "k": k, "gini": g,
                     "b_lambda": b_lam, "b_flat": b_flat})
    elif args.format == "csv":
        out = _csv_text([(g, b_lam, b_flat)], ("gini", "b_lambda", "b_flat") if args.header else None)
    else:
        out = f"gini: {g}\nb(lambda): {b_lam}\nb(k^n): {b_flat}\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_lorenz(args) -> int:
    curve = lorenz_curve(Partition(args.lam))
    if args.format == "json":
        out = curve.to_json() + "\n"
    elif args.format == "csv":
        out = curve.to_csv(header=args.header)
    else:
        out = "".join(f"{j} {v}\n" for j, v in curve.samples)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_kf(args) -> int:
    lam, mu = Partition(args.lam), Partition(args.mu)
    routes = {}
    if args.algorithm in ("kostant", "both"):
        routes["kostant"] = kostka_foulkes_kostant(lam, mu)
    if args.algorithm in ("charge", "both"):
        routes["charge"] = kostka_foulkes_charge(lam, mu)
    poly = next(iter(routes.values()))
    agreement = None
    if args.algorithm == "both":
        agreement = routes["kostant"] == routes["charge"]
    deg = degree(poly)

    if args.format == "json":
        doc = {"lambda": list(lam), "mu": list(mu), "algorithm": args.algorithm,
               "polynomial": str(poly), "coefficients": list(poly.coeffs), "degree": deg}
        if agreement is not None:
            doc["agreement"] = agreement
            doc["charge_coefficients"] = list(routes["charge"].coeffs)
        out = _dump(doc)
    elif args.format == "csv":
        header = ("degree", "coefficient") if args.header else None
        out = _csv_text(list(enumerate(poly.coeffs)), header)
    else:
        out = f"{poly}\ndegree: {'null' if deg is None else deg}\n"
        if agreement is not None:
            out += f"agreement: {str(agreement).lower()}\n"
    sys.stdout.write(out)
    if agreement is False:
        print(f"error: kostant route {routes['kostant']} != charge route {routes['charge']}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _report_row(r) -> tuple:
    return (" ".join(map(str, r.lam)), " ".join(map(str, r.alpha)),
            " ".join(map(str, r.polynomial.coeffs)),
            "" if r.degree is None else r.degree, r.gini, str(r.theorem1_holds).lower())


_REPORT_HEADER = ("lambda", "alpha", "coefficients", "degree", "gini", "holds")


def cmd_graded_mult(args) -> int:
    report = graded_multiplicity_report(args.alpha, args.k)
    if args.format == "json":
        doc = report.to_dict()
        doc["polynomial"] = str(report.polynomial)
        out = _dump(doc)
    elif args.format == "csv":
        out = _csv_text([_report_row(report)], _REPORT_HEADER if args.header else None)
    else:
        deg = "null" if report.degree is None else report.degree
        out = (f"m(q): {report.polynomial}\ndegree: {deg}\nk: {report.k}\n"
               f"lambda: {','.join(map(str, report.lam))}\ngini: {report.gini}\n"
               f"holds: {str(report.theorem1_holds).lower()}\n")
    sys.stdout.write(out)
    return EXIT_OK


def cmd_emd(args) -> int:
    result = emd(Composition(args.mu), Composition(args.lam))
    oracle = emd_bfs_oracle(result.mu, result.lam) if args.oracle else None
    agreement = None if oracle is None else oracle == result.distance
    if args.format == "json":
        doc = result.to_dict()
        if oracle is not None:
            doc["oracle_distance"] = oracle
            doc["agreement"] = agreement
        out = _dump(doc)
    elif args.format == "csv":
        header = ("distance", "oracle_distance") if args.header else None
        out = _csv_text([(result.distance, "" if oracle is None else oracle)], header)
    else:
        out = f"{result.distance}\n"
        if oracle is not None:
            out += f"oracle: {oracle}\nagreement: {str(agreement).lower()}\n"
    sys.stdout.write(out)
    if agreement is False:
        print(f"error: diagram distance {result.distance} != oracle {oracle}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n > MAX_VERIFY_N:
        raise ResourceLimitError(f"n={args.n} exceeds the sweep limit {MAX_VERIFY_N} (n! terms per query)")
    workers = args.parallel if args.parallel else None
    reports = verify_theorem1(args.n, args.k, workers=workers)
    nonzero = [r for r in reports if not r.polynomial.is_zero()]
    failures = [r for r in nonzero if not r.theorem1_holds]
    summary = {"records": len(reports), "nonzero": len(nonzero), "holds": len(nonzero) - len(failures),
               "violations": len(failures)}

    if args.format == "json":
        out = _dump({"n": args.n, "k": args.k, "records": [r.to_dict() for r in reports],
                     "summary": summary})
    elif args.format == "csv":
        out = _csv_text([_report_row(r) for r in reports], _REPORT_HEADER if args.header else None)
    else:
        lines = []
        for r in reports:
            deg = "null" if r.degree is None else r.degree
            lines.append(f"lambda={','.join(map(str, r.lam))} m(q)={r.polynomial} "
                         f"degree={deg} gini={r.gini} holds={str(r.theorem1_holds).lower()}")
        lines.append(f"summary: {summary['records']} records, {summary['holds']} hold, "
                     f"{summary['violations']} violations")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_VIOLATION if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginirep",
        description="Discrete Gini index, Kostka-Foulkes polynomials and 1-D earth mover's distance.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--header", action="store_true", help="add a header row to CSV output")

    p = sub.add_parser("gini", help="generalized Gini index g_{nk,n}")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    common(p)
    p.set_defaults(func=cmd_gini)

    p = sub.add_parser("lorenz", help="discrete Lorenz curve samples")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    common(p)
    p.set_defaults(func=cmd_lorenz)

    p = sub.add_parser("kf", help="Kostka-Foulkes polynomial K_{lambda,mu}(q)")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    p.add_argument("--mu", type=_ints, required=True)
    p.add_argument("--algorithm", choices=("kostant", "charge", "both"), default="kostant")
    common(p)
    p.set_defaults(func=cmd_kf)

    p = sub.add_parser("graded-mult", help="graded multiplicity m_alpha(q)")
    p.add_argument("--alpha", type=_ints, required=True)
    p.add_argument("--k", type=int)
    common(p)
    p.set_defaults(func=cmd_graded_mult)

    p = sub.add_parser("emd", help="one-dimensional earth mover's distance")
    p.add_argument("--mu", type=_ints, required=True)
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the BFS move-count oracle")
    common(p)
    p.set_defaults(func=cmd_emd)

    p = sub.add_parser("verify", help="degree(m_alpha) = Gini sweep over partitions of nk")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parallel", type=int, nargs="?", const=0, default=None, metavar="WORKERS",
                   help="evaluate partitions in a process pool (default: CPU count)")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "parallel", None) == 0:
        args.parallel = os.cpu_count() or 1
    try:
        return args.func(args)
    except (InvalidInputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
