"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .kronecker import kronecker_coefficient, kronecker_product
from .partitions import PartitionError, fmt, parse
from .reduced import murnaghan_expansion, reduced_coefficient
from .stability import compare_bounds, stab_product_empirical
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _part(text: str):
    try:
        return parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="kronstab",
        description="Kronecker and reduced Kronecker coefficients. "
                    "Partitions are written 4,3,2 or [4,3,2]; [] is empty.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="Schur expansion of s_MU * s_NU")
    p.add_argument("mu", type=_part)
    p.add_argument("nu", type=_part)

    p = sub.add_parser("coeff", parents=[common], help="Kronecker coefficient g^LAMBDA_{MU,NU}")
    p.add_argument("lam", metavar="LAMBDA", type=_part)
    p.add_argument("mu", type=_part)
    p.add_argument("nu", type=_part)

    p = sub.add_parser("reduced", parents=[common], help="reduced Kronecker coefficient")
    p.add_argument("alpha", type=_part)
    p.add_argument("beta", type=_part)
    p.add_argument("gamma", type=_part)
    p.add_argument("--method", choices=("stable", "littlewood"), default="stable")

    p = sub.add_parser("support", parents=[common], help="stable expansion of alpha, beta")
    p.add_argument("alpha", type=_part)
    p.add_argument("beta", type=_part)

    p = sub.add_parser("bounds", parents=[common], help="all stabilization bounds for a triple")
    p.add_argument("alpha", type=_part)
    p.add_argument("beta", type=_part)
    p.add_argument("gamma", type=_part)

    p = sub.add_parser("stab", parents=[common], help="stabilization degree of the product")
    p.add_argument("alpha", type=_part)
    p.add_argument("beta", type=_part)

    p = sub.add_parser("verify", parents=[common], help="replay the example and identity checks")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--max-weight", type=int, default=4, metavar="W")
    return parser


def _run(args) -> tuple[object, str, int]:
    """Returns (json payload, text, exit code)."""
    cmd = args.command
    if cmd == "product":
        if sum(args.mu) != sum(args.nu):
            raise UsageError("product needs two partitions of the same weight")
        f = kronecker_product(args.mu, args.nu)
        return f.to_json(), str(f), 0
    if cmd == "coeff":
        g = kronecker_coefficient(args.lam, args.mu, args.nu)
        return {"value": g}, str(g), 0
    if cmd == "reduced":
        g = reduced_coefficient(args.alpha, args.beta, args.gamma, method=args.method)
        return {"value": g, "method": args.method}, str(g), 0
    if cmd == "support":
        table = murnaghan_expansion(args.alpha, args.beta)
        lines = [f"{c}\t{fmt(g)}" for g, c in table.items()]
        return table.to_json(), "\n".join(lines), 0
    if cmd == "bounds":
        report = compare_bounds(args.alpha, args.beta, args.gamma)
        data = report.to_json()
        text = " ".join(f"{k}={data[k]}" for k in ("reduced", "stab", "N1", "N2", "NB", "NV"))
        return data, text, 0
    if cmd == "stab":
        formula = bounds.stab_product(args.alpha, args.beta)
        empirical = stab_product_empirical(args.alpha, args.beta)
        return ({"formula": formula, "empirical": empirical},
                f"formula={formula} empirical={empirical}", 0)
    if cmd == "verify":
        if args.max_weight < 0:
            raise UsageError("--max-weight must be nonnegative")
        results = run_suite(args.suite, args.max_weight)
        failed = sum(not r.passed for r in results)
        lines = [f"{'PASS' if r.passed else 'FAIL'}  [{r.suite}] {r.name}: {r.detail}" for r in results]
        lines.append(f"{len(results) - failed}/{len(results)} checks passed")
        payload = {"results": [r.to_json() for r in results], "failed": failed}
        return payload, "\n".join(lines), 1 if failed else 0
    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = _run(args)
    except (UsageError, PartitionError) as exc:
        print(f"kronstab: error: {exc}", file=sys.stderr)
        return 2
    output = json.dumps(payload, indent=2) if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(output + "\n")
    else:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
