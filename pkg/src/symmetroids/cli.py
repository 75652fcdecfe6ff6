"""Command line: ``verify``, ``analyze`` and ``list-examples``.

Exit codes: 0 when every check passes, 1 when any check does not,
2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .errors import ParseError, PositiveDimensionalError, SymmetroidError
from .pencil import SymmetricPencil, cone_test, parse_pencil, rank_at
from .registry import example_ids, get_example, verify_example
from .report import FAIL, PARTIAL, PASS, CheckResult, VerificationReport, emit_report
from .singular import fmt_point
from .spectra import pd_search
from .web import web_base_locus

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _timed(claim, fn) -> CheckResult:
    t0 = time.perf_counter()
    status, witness, warnings, summary = fn()
    return CheckResult(f"{claim}: {summary}", status, witness, round(time.perf_counter() - t0, 6), warnings)


def analyze_pencil(P: SymmetricPencil, seed: int = 0, budget: int = 500, name: str = "pencil") -> VerificationReport:
    """Claim-free pipeline: quartic, cone test, base locus, sampled ranks, PD search."""
    report = VerificationReport(name, seed=seed)

    def quartic():
        f = P.quartic
        return PASS, {"quartic": str(f), "terms": len(f.terms)}, [], f"nonzero, {len(f.terms)} terms"

    def cone():
        v = cone_test(P)
        dirs = ["[" + ":".join(fmt_point(d)) + "]" for d in v]
        summary = "vertices " + ", ".join(dirs) if v else "not a cone"
        return PASS, {"is_cone": bool(v), "vertex_directions": dirs}, [], summary

    def base():
        try:
            bl = web_base_locus(P)
        except PositiveDimensionalError as exc:
            return PARTIAL, {"positive_dimensional": True, "alarm": str(exc)}, [str(exc)], "ALARM"
        pts = ["[" + ":".join(fmt_point(p)) + "]" for p in bl.points]
        return (
            PASS,
            {
                "points": ["[" + ":".join(fmt_point(p)) + "]" for p in bl.points],
                "multiplicities": bl.multiplicities,
                "total_length": bl.total_length,
                "residual": bl.residual,
            },
            [],
            (f"{len(pts)} point(s) " + ", ".join(pts) if pts else "empty") + f"; total length {bl.total_length}"
            + (" (residual factors)" if bl.residual else ""),
        )

    def ranks():
        rng = random.Random(seed)
        pts = []
        while len(pts) < 5:
            p = [rng.randint(-5, 5) for _ in P.names]
            if any(p):
                pts.append(p)
        rk = [rank_at(P, p) for p in pts]
        return PASS, {"points": pts, "ranks": rk}, [], "ranks " + " ".join(map(str, rk))

    def spectrahedral():
        if not P.real_flag:
            return PASS, {"pd_search": "skipped"}, ["pencil is not real"], "skipped"
        r = pd_search(P, budget=budget, seed=seed)
        wit = {"pd_search": r.status, "tries": r.tries}
        if r.found:
            wit["point"] = fmt_point(r.point)
            return PASS, wit, [], "spectrahedral, positive definite at [" + ":".join(wit["point"]) + "]"
        return PASS, wit, [], f"unknown after {r.tries} tries"

    for claim, fn in [
        ("det A(x)", quartic),
        ("cone test", cone),
        ("base locus of the web", base),
        ("rank at sampled points", ranks),
        ("positive definite point search", spectrahedral),
    ]:
        try:
            report.add(_timed(claim, fn))
        except SymmetroidError as exc:
            report.add(CheckResult(claim, FAIL, {"error": str(exc)}))
    return report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symmetroids", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the registered claims of an example")
    v.add_argument("example_id")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("human", "json"), default="human")
    a = sub.add_parser("analyze", help="claim-free analysis of a pencil file")
    a.add_argument("file")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--budget", type=int, default=500, help="positive definite search budget")
    a.add_argument("--format", choices=("human", "json"), default="human")
    sub.add_parser("list-examples", help="print the registered example ids")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "list-examples":
        for eid in example_ids():
            print(f"{eid:<20} {get_example(eid).description}")
        return EXIT_OK
    if args.command == "verify":
        try:
            get_example(args.example_id)
        except (KeyError, ValueError):
            print(f"error: unknown example id {args.example_id!r}; see list-examples", file=sys.stderr)
            return EXIT_USAGE
        report = verify_example(args.example_id, args.seed)
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        try:
            P = parse_pencil(text)
        except ParseError as exc:
            print(f"error: {args.file}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        report = analyze_pencil(P, args.seed, args.budget, args.file)
    print(emit_report(report, args.format))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
