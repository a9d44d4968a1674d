"""Command-line surface.

Commands: search, oracle, verify-identities, classify, emit-plot.
Exit codes are the only success/failure channel:
    0  success
    2  invalid flags, IO failure, or schema mismatch
    3  a search hit failed verification (anomaly signal)
    4  an exact identity failed (arithmetic bug signal)
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import identity, records, svgplot
from .coprime import check_coprimality_propagation, exponent_orientation, exponent_restriction
from .errors import (BealsearchError, BoundTooLarge, NoRealRoot, NotAdditiveTriple,
                     ZeroDenominator)
from .exact_arith import Radical
from .intervals import DEFAULT_PRECISION_BITS, IntervalValue
from .reparam import Plane, canonical_alpha_beta, scalar_m
from .search import SearchConfig, brute_force_oracle, search_solutions
from .slopes import slope_set, smallest_lattice_point
from .triples import BealTriple


def _int_flag(text: str) -> int:
    """Parse an integer flag, allowing 10^12 / 1e12 / 1_000_000 spellings."""
    t = text.strip().replace("_", "")
    if "^" in t:
        base, _, exp = t.partition("^")
        return int(base) ** int(exp)
    lower = t.lower()
    if "e" in lower and "." not in lower:
        base, _, exp = lower.partition("e")
        return (int(base) if base else 1) * 10 ** int(exp)
    return int(t)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1,
                        help="parallel workers for the search pair scan")
    common.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS,
                        help="working precision for interval evaluations")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized suites and factorization")

    parser = argparse.ArgumentParser(
        prog="bealsearch",
        description="Exact search and verification for A^X + B^Y = C^Z.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", parents=[common],
                              help="bounded exhaustive search (indexed pair scan)")
    p_search.add_argument("--bound", type=_int_flag, required=True,
                          help="maximum C^Z (accepts 10^12 / 1e12 spellings)")
    p_search.add_argument("--min-x", type=int, default=3)
    p_search.add_argument("--min-y", type=int, default=3)
    p_search.add_argument("--min-z", type=int, default=3)
    p_search.add_argument("--out", required=True, help="CSV output path")
    p_search.add_argument("--report", help="optional JSON report path")
    p_search.add_argument("--modular-filter", action="store_true",
                          help="enable the residue pre-filter (off by default)")
    p_search.set_defaults(func=cmd_search)

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="naive triple-enumeration oracle (bound <= 10^7)")
    p_oracle.add_argument("--bound", type=_int_flag, required=True)
    p_oracle.add_argument("--min-x", type=int, default=3)
    p_oracle.add_argument("--min-y", type=int, default=3)
    p_oracle.add_argument("--min-z", type=int, default=3)
    p_oracle.add_argument("--out", required=True, help="CSV output path")
    p_oracle.add_argument("--report", help="optional JSON report path")
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify-identities", parents=[common],
                              help="randomized exact-identity suite")
    p_verify.add_argument("--cases", type=int, default=1000)
    p_verify.set_defaults(func=cmd_verify_identities)

    p_classify = sub.add_parser("classify", parents=[common],
                                help="full classification bundle for one triple")
    p_classify.add_argument("--triple", required=True, metavar="A,X,B,Y,C,Z")
    p_classify.set_defaults(func=cmd_classify)

    p_plot = sub.add_parser("emit-plot", parents=[common],
                            help="2-D SVG scatter from a hits CSV")
    p_plot.add_argument("--in", dest="infile", required=True)
    p_plot.add_argument("--out", required=True)
    p_plot.add_argument("--axes", choices=sorted(svgplot.AXIS_CHOICES), default="axbycz")
    p_plot.add_argument("--log", action="store_true", help="log10 scale")
    p_plot.set_defaults(func=cmd_emit_plot)

    return parser


def _write_outputs(report, out_path: str, report_path: str | None) -> None:
    records.write_csv(records.records_from_report(report), out_path)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as handle:
            handle.write(records.emit_json(report))


def cmd_search(args) -> int:
    config = SearchConfig(
        bound=args.bound,
        min_x=args.min_x, min_y=args.min_y, min_z=args.min_z,
        workers=args.workers, seed=args.seed,
        modular_filter=args.modular_filter,
    )
    report = search_solutions(config)
    _write_outputs(report, args.out, args.report)
    failures = [hit for hit in report.hits if not hit.verification.passed]
    print(f"search: bound={config.bound} hits={len(report.hits)} "
          f"pairs_tested={report.counts['pairs_tested']} "
          f"wall={report.wall_time_s:.2f}s -> {args.out}")
    if failures:
        for hit in failures:
            print(f"VERIFICATION FAILED for {hit.triple}: "
                  f"{hit.verification.failed_checks()}", file=sys.stderr)
        return 3
    return 0


def cmd_oracle(args) -> int:
    report = brute_force_oracle(args.bound, (args.min_x, args.min_y, args.min_z))
    _write_outputs(report, args.out, args.report)
    print(f"oracle: bound={args.bound} hits={len(report.hits)} "
          f"wall={report.wall_time_s:.2f}s -> {args.out}")
    return 3 if any(not hit.verification.passed for hit in report.hits) else 0


def cmd_verify_identities(args) -> int:
    if args.cases < 1:
        raise ValueError(f"--cases must be >= 1, got {args.cases}")
    failures = identity.run_random_suite(args.cases, args.seed)
    checked = args.cases
    if failures:
        for description in failures[:10]:
            print(f"IDENTITY FAILED: {description}", file=sys.stderr)
        print(f"verify-identities: {len(failures)}/{checked} instances FAILED")
        return 4
    print(f"verify-identities: {checked} instances held exactly (seed={args.seed})")
    return 0


def _fraction_str(value) -> str:
    return str(Fraction(value))


def _radical_obj(radical: Radical) -> dict:
    cls = radical.classification
    return {
        "sign": radical.sign,
        "radicand": _fraction_str(radical.radicand),
        "degree": radical.degree,
        "class": cls.kind,
        "value": _fraction_str(cls.value) if cls.value is not None else None,
    }


def _slope_obj(value) -> dict:
    if isinstance(value, Fraction):
        x, y = smallest_lattice_point(value) if value > 0 else (None, None)
        return {"class": "rational", "value": str(value),
                "smallest_lattice_point": [x, y] if x is not None else None}
    obj = _radical_obj(value)
    obj.pop("sign")
    obj["smallest_lattice_point"] = None
    return obj


def _coprimality_obj(triple: BealTriple) -> dict | None:
    if not triple.equation_holds:
        return None
    report = check_coprimality_propagation(triple.ax, triple.by, triple.cz)
    shared = {
        pair: None if factors is None else [[str(p), m] for p, m in factors]
        for pair, factors in report.shared_primes.items()
    }
    return {
        "gcd_ab": str(report.gcd_ab),
        "gcd_ac": str(report.gcd_ac),
        "gcd_bc": str(report.gcd_bc),
        "gcd_abc": str(report.gcd_abc),
        "pairwise_all_one": report.pairwise_all_one,
        "shared_primes": shared,
    }


def _scalar_obj(triple: BealTriple, pair, precision_bits: int) -> dict:
    try:
        m = scalar_m(triple, pair, precision_bits)
    except (NoRealRoot, ZeroDenominator) as exc:
        return {"estimate": None, "exact": None, "error": str(exc)}
    if isinstance(m, IntervalValue):
        return {"estimate": m.decimal(30), "exact": None, "error": None}
    return {"estimate": _fraction_str(m), "exact": _fraction_str(m), "error": None}


def classify_obj(triple: BealTriple, precision_bits: int = DEFAULT_PRECISION_BITS) -> dict:
    """The full classification bundle for one triple, JSON-serializable."""
    pair_cb = canonical_alpha_beta(triple, Plane.CB)
    pair_ca = canonical_alpha_beta(triple, Plane.CA)
    slopes = slope_set(triple)
    exponents_ok = min(triple.X, triple.Y, triple.Z) >= 3
    return {
        "triple": {name: str(getattr(triple, name)) for name in ("A", "X", "B", "Y", "C", "Z")},
        "powers": {
            "A_pow_X": str(triple.ax),
            "B_pow_Y": str(triple.by),
            "C_pow_Z": str(triple.cz),
        },
        "equation_holds": triple.equation_holds,
        "gcd_abc": str(triple.gcd_abc),
        "coprimality": _coprimality_obj(triple),
        "exponent_restriction": (
            exponent_restriction(triple.X, triple.Y, triple.Z).value if exponents_ok else None),
        "exponent_orientation": (
            exponent_orientation(triple.X, triple.Y, triple.Z).value if exponents_ok else None),
        "alpha": _radical_obj(pair_cb.alpha),
        "beta": _radical_obj(pair_cb.beta),
        "alpha_ca": _radical_obj(pair_ca.alpha),
        "beta_ca": _radical_obj(pair_ca.beta),
        "scalar_m": _scalar_obj(triple, pair_cb, precision_bits),
        "slopes": {
            "m_cb": _slope_obj(slopes.m_cb),
            "m_ca": _slope_obj(slopes.m_ca),
            "m_ba": _slope_obj(slopes.m_ba),
        },
    }


def cmd_classify(args) -> int:
    triple = BealTriple.parse(args.triple)
    print(json.dumps(classify_obj(triple, args.precision_bits), indent=2))
    return 0


def cmd_emit_plot(args) -> int:
    hit_records = records.read_csv(args.infile)
    svgplot.write_scatter(hit_records, args.out, axes=args.axes, log_scale=args.log,
                          title=f"{len(hit_records)} hits")
    print(f"emit-plot: {len(hit_records)} markers -> {args.out}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (BoundTooLarge, NotAdditiveTriple, records.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BealsearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
