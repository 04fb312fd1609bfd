"""Command-line interface.

Exit codes: 0 success, 1 verification found oracle-level anomalies,
2 invalid input, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import errors, harness, morphisms
from .errors import DomainError, SizeError, ZmError
from .reidemeister import exact_spectrum, report, spectrum
from .zmgroup import ZmParams, conjugacy_classes, validate

EXIT_OK, EXIT_ANOMALY, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3
FORMATS = ("plain", "json", "csv")


def _params(args) -> ZmParams:
    return validate(args.m, args.n, args.r)


def _params_json(p: ZmParams) -> dict:
    return {"m": p.m, "n": p.n, "r": p.r, "d": p.d}


def _fmt_set(values) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def cmd_spectrum(args, out) -> int:
    p = _params(args)
    if args.exact:
        res = exact_spectrum(p, args.mode)
        rows = [{"y": y, "x1": x1, "R": value} for y, x1, value in res.per_class]
        if args.format == "json":
            json.dump({"params": _params_json(p), "mode": res.mode, "per_class": rows, "spectrum": res.spectrum}, out)
            out.write("\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["m", "n", "r", "d", "y", "x1", "R"])
            for row in rows:
                writer.writerow([p.m, p.n, p.r, p.d, row["y"], row["x1"], row["R"]])
        else:
            out.write(f"{p} d={p.d} mode={res.mode} (x1-aware)\n")
            for row in rows:
                out.write(f"  y={row['y']} x1={row['x1']}: R={row['R']}\n")
            out.write(f"spectrum {_fmt_set(res.spectrum)}\n")
        return EXIT_OK

    res = spectrum(p, args.mode)
    if args.format == "json":
        json.dump({
            "params": _params_json(p), "mode": res.mode,
            "per_y": [list(item) for item in res.per_y], "spectrum": res.spectrum,
        }, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["m", "n", "r", "d", "y", "R"])
        for y, value in res.per_y:
            writer.writerow([p.m, p.n, p.r, p.d, y, value])
    else:
        out.write(f"{p} d={p.d} mode={res.mode}\n")
        for y, value in res.per_y:
            out.write(f"  y={y}: R={value}\n")
        out.write(f"spectrum {_fmt_set(res.spectrum)}\n")
    return EXIT_OK


def cmd_reidemeister(args, out) -> int:
    p = _params(args)
    f = morphisms.make_triple(p, args.x1, args.x2, args.y)
    brute = p.order <= errors.brute_limit()
    rep = report(p, f, brute=brute)
    row = {
        "m": p.m, "n": p.n, "r": p.r, "d": p.d,
        "triple": list(f), "r_formula": rep.r_formula, "r_orbit": rep.r_orbit,
        "r_burnside": rep.r_burnside, "r_exact": rep.r_exact, "agree": rep.agree,
        "bijective": rep.bijective,
    }
    if args.format == "json":
        json.dump(row, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=list(row), lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    else:
        skipped = "skipped"
        out.write(f"{p} {f}\n")
        out.write(f"  r_formula  = {rep.r_formula}\n")
        out.write(f"  r_orbit    = {skipped if rep.r_orbit is None else rep.r_orbit}\n")
        out.write(f"  r_burnside = {skipped if rep.r_burnside is None else rep.r_burnside}\n")
        out.write(f"  r_exact    = {rep.r_exact}\n")
        verdict = {True: "agree", False: "DISAGREE", None: "oracles skipped"}[rep.agree]
        out.write(f"  {verdict}\n")
    return EXIT_OK


def cmd_classes(args, out) -> int:
    p = _params(args)
    classes = conjugacy_classes(p)
    if args.format == "json":
        json.dump({"params": _params_json(p), "count": len(classes),
                   "classes": [[list(g) for g in cls] for cls in classes]}, out)
        out.write("\n")
    else:
        out.write(f"{p}: {len(classes)} conjugacy classes\n")
        for cls in classes:
            out.write("  {" + ", ".join(map(str, cls)) + "}\n")
    return EXIT_OK


def cmd_autos(args, out) -> int:
    p = _params(args)
    triples = morphisms.enumerate_triples(p, args.mode)
    counts = {
        "paper": morphisms.aut_count_paper(p),
        "strict": len(morphisms.enumerate_triples(p, "strict")),
    }
    if args.format == "json":
        json.dump({"params": _params_json(p), "mode": args.mode, "counts": counts,
                   "triples": [list(t) for t in triples]}, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["x1", "x2", "y"])
        writer.writerows(triples)
    else:
        out.write(f"{p} d={p.d}: paper count {counts['paper']}, strict count {counts['strict']}\n")
        for t in triples:
            out.write(f"  {tuple(t)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    path: Optional[Path] = args.out
    skip: set = set()
    try:
        if path is not None:
            if args.fresh and path.exists():
                path.unlink()
            skip = harness.read_keys(path)
            path.open("a", encoding="utf-8").close()
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO

    records = harness.sweep(
        args.max_order, brute_cap=args.brute_cap, exhaustive_cap=args.exhaustive_cap,
        skip=skip, workers=args.workers,
    )
    try:
        written = harness.write_records(records, path=path, stream=out if path is None else None)
    except OSError as exc:
        print(f"error: writing records failed: {exc}", file=sys.stderr)
        return EXIT_IO

    failed = [rec for rec in written if rec.failed()]
    diverged = sum(any(a["tag"] == "mode-divergence" for a in rec.anomalies) for rec in written)
    print(
        f"verify: {len(written)} records written ({len(skip)} skipped as present), "
        f"{diverged} with mode divergence, {len(failed)} with oracle-level anomalies",
        file=sys.stderr,
    )
    return EXIT_ANOMALY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zmspectrum",
        description="Reidemeister numbers and spectra of ZM(m,n,r).",
        epilog=f"Global size bound on m*n: ${errors.MAX_ORDER_ENV} (default {errors.DEFAULT_MAX_ORDER}); "
               f"brute-force bound: ${errors.BRUTE_LIMIT_ENV} (default {errors.DEFAULT_BRUTE_LIMIT}).",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p, formats=FORMATS):
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("r", type=int)
        p.add_argument("--format", choices=formats, default="plain")

    p = sub.add_parser("spectrum", help="closed-form Reidemeister spectrum")
    group_args(p)
    p.add_argument("--mode", choices=morphisms.MODES, default="strict")
    p.add_argument("--exact", action="store_true", help="use the x1-aware closed form, one value per (y, x1)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("reidemeister", help="R of one morphism triple, computed three ways")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("x1", type=int)
    p.add_argument("x2", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_reidemeister)

    p = sub.add_parser("classes", help="ordinary conjugacy classes")
    group_args(p, ("plain", "json"))
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("autos", help="list morphism triples and counts")
    group_args(p)
    p.add_argument("--mode", choices=morphisms.MODES, default="strict")
    p.set_defaults(func=cmd_autos)

    p = sub.add_parser("verify", help="sweep and cross-validate all triples up to an order bound")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--brute-cap", type=int, default=harness.DEFAULT_BRUTE_CAP)
    p.add_argument("--exhaustive-cap", type=int, default=harness.DEFAULT_EXHAUSTIVE_CAP)
    p.add_argument("--out", type=Path, default=None, help="JSONL file; existing keys are skipped")
    p.add_argument("--fresh", action="store_true", help="truncate --out before sweeping")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DomainError, ZmError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
