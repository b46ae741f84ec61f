"""Command-line front end.

Subcommands: bott, iso, scan, table, oracle, verify-paper.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 resource-limit
truncation.  Progress for long scans goes to stderr; reports go to stdout.
The BOTTCALC_THREADS environment variable caps the scan fan-out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import acceptance
from . import bott_isotropic as iso
from . import reference_tables
from .bott_grassmannian import (
    BundleSpec,
    bott_evaluate,
    o_bundle,
    scan_vanishing,
    theta_bundle,
)
from .cotangent_oracle import PlueckerOracle, slice_predictions
from .weights import parse_weight, render_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNCATED = 0, 1, 2, 3


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BOTTCALC_THREADS", "1")))
    except ValueError:
        return 1


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_bott(args) -> int:
    n, r = args.n, args.r
    if args.bundle:
        if args.bundle == "O":
            spec = o_bundle(n, r, args.twist)
        elif args.bundle == "theta":
            spec = theta_bundle(n, r, args.twist)
        else:
            raise SystemExit(EXIT_USAGE)
    else:
        if args.alpha is None or args.beta is None:
            print("error: need either --bundle or both --alpha and --beta", file=sys.stderr)
            return EXIT_USAGE
        spec = BundleSpec(parse_weight(args.alpha), parse_weight(args.beta), args.twist)
    try:
        ans = bott_evaluate(spec, n, r)
    except ValueError as exc:
        print(f"error (bott_grassmannian): {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ans.vanishes:
        _emit(args, ans.to_jsonable(), ["vanishes in all degrees"])
    else:
        _emit(
            args,
            ans.to_jsonable(),
            [f"H^{ans.degree} = S_({render_weight(ans.weight)}), dim {ans.dimension}"],
        )
    return EXIT_OK


_FAMILY_ALIASES = {
    "LG": "LG", "OGeven": "OG_even", "OGodd": "OG_odd",
    "OG_even": "OG_even", "OG_odd": "OG_odd",
}
_BUNDLE_ALIASES = {
    "d2": "D2RStar", "wedge2": "Wedge2RStar", "rq": "RStarTensorQuot",
    "O": "StructureSheaf", "o": "StructureSheaf",
}


def cmd_iso(args) -> int:
    try:
        X = iso.IsoGrassmannian(_FAMILY_ALIASES[args.family], args.r, args.n)
        bundle = _BUNDLE_ALIASES[args.bundle]
        if not iso.bundle_valid(X, bundle):
            print(f"error (bott_isotropic): {bundle} is not a bundle on {X.describe()}",
                  file=sys.stderr)
            return EXIT_USAGE
    except (KeyError, ValueError) as exc:
        print(f"error (bott_isotropic): {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.m is not None:
        st = iso.status(X, bundle, args.m)
        module = iso.module_of(X, bundle, args.m)
        payload = {
            "space": X.describe(), "bundle": bundle, "m": args.m,
            "result": {"vanishes": True} if st is None else
            {"vanishes": False, "index": st, **module},
        }
        text = (
            [f"{X.describe()}, {bundle}(m={args.m}): vanishes (singular weight)"]
            if st is None
            else [
                f"{X.describe()}, {bundle}(m={args.m}): index {st}, "
                f"weight {tuple(module['weight_coords'])}, dim {module['dimension']}"
            ]
        )
        _emit(args, payload, text)
        return EXIT_OK
    report = iso.cohomology_indices(X, bundle)
    lines = [f"{X.describe()}, {bundle}: twist ranges (generator units, "
             f"ambient polarization = {report['plucker_step']} unit(s))"]
    for rng in report["ranges"]:
        lines.append(f"  m in [{rng['m_lo']}, {rng['m_hi']}]: {rng['status']}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_scan(args) -> int:
    top = args.r * (args.n - args.r)
    i_lo = args.i_lo if args.i_lo is not None else 1
    i_hi = args.i_hi if args.i_hi is not None else top - 1
    print(f"scanning G({args.r},{args.n}), degrees {i_lo}..{i_hi}", file=sys.stderr)
    try:
        report = scan_vanishing(args.n, args.r, i_lo, i_hi)
    except ValueError as exc:
        print(f"error (bott_grassmannian): {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = [f"G({args.r},{args.n}): exceptions in degrees [{i_lo}, {i_hi}]:"]
    for exc_ in report["exceptions"]:
        lines.append(f"  H^{exc_['i']}({exc_['bundle']}({exc_['m']})) != 0, dim {exc_['dim']}")
    if not report["exceptions"]:
        lines.append("  none")
    lines.append(f"certified range: {report['certified_range']}")
    lines.append(f"note: {report['note']}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.r is not None and args.n is not None:
        cases = [(args.r, args.n)]
        rows = [reference_tables.find_row(args.bundle, args.g, args.r, args.n)]
        if rows[0] is None:
            print("error (reference_tables): case not in the catalog", file=sys.stderr)
            return EXIT_USAGE
    else:
        matches = [row for row in reference_tables.ROWS
                   if row.bundle == args.bundle and row.family == args.g
                   and (args.r_case is None or row.label == args.r_case)]
        if not matches:
            print("error (reference_tables): no matching rows", file=sys.stderr)
            return EXIT_USAGE
        cases, rows = [], []
        for row in matches:
            for other, r, n in reference_tables.all_cases(args.n_max):
                if other is row:
                    cases.append((r, n))
                    rows.append(row)
    results = []
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        futures = [
            pool.submit(reference_tables.verify_row, row.bundle, row.family, r, n)
            for row, (r, n) in zip(rows, cases)
        ]
        results = [f.result() for f in futures]
    results.sort(key=lambda res: (res["label"], res["n"], res["r"]))
    ok = all(res["match"] for res in results)
    lines = []
    for res in results:
        lines.append(
            f"{res['bundle']}/{res['family']} [{res['label']}] r={res['r']} n={res['n']}: "
            f"singles m+{res['singles']['computed']}, "
            f"max2 {('2m+' + str(res['max2']['computed'])) if res['max2']['computed'] is not None else '-'} "
            f"-> {'ok' if res['match'] else 'MISMATCH'}"
            + ("" if res["conventions_agree"] else " [coroot values differ]")
        )
    _emit(args, {"rows": results, "ok": ok}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    oracle = PlueckerOracle(args.r, args.n)
    t_max = args.deg if args.deg is not None else args.deg_max
    print(f"building slices for G({args.r},{args.n}) up to degree {t_max}",
          file=sys.stderr)
    rows = oracle.local_cohomology_dims(t_max, max_slice=args.max_slice)
    if args.dump_dir:
        for t in range(0, t_max + 1):
            oracle.dump_slice(t, args.dump_dir)
    truncated = any(row.get("truncated") for row in rows)
    lines = []
    for row in rows:
        if row.get("truncated"):
            lines.append(f"t={row['t']}: truncated (weight-zero size {row['weight_zero_size']})")
        else:
            lines.append(
                f"dim H0_m(Omega)_{row['t']} = {row['h1']}, "
                f"dim H1_m(Omega)_{row['t']} = {row['h2']}"
                f" (slice dims {row['dims']})"
            )
    payload = {
        "r": args.r, "n": args.n, "rows": rows,
        "predictions": {t: slice_predictions(args.r, args.n, t) for t in range(t_max + 1)},
    }
    _emit(args, payload, lines)
    return EXIT_TRUNCATED if truncated else EXIT_OK


def cmd_verify_paper(args) -> int:
    only = args.only.split(",") if args.only else None
    results = acceptance.run_all(only)
    payload = {"criteria": [r.to_jsonable() for r in results],
               "passed": all(r.passed for r in results)}
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"[{status}] criterion {res.ident}: {res.name} ({res.elapsed:.2f}s)")
        if not res.passed:
            for d in res.documented_defects:
                lines.append(f"    documented defect: {d}")
            if args.verbose:
                for d in res.details:
                    lines.append(f"    {d}")
    lines.append("overall: " + ("PASS" if payload["passed"] else "FAIL"))
    _emit(args, payload, lines)
    return EXIT_OK if payload["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bottcalc")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bott", help="one cohomology evaluation on G(r,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--bundle", choices=["O", "theta"])
    p.add_argument("--alpha", help="weight string, e.g. '0,-1'")
    p.add_argument("--beta")
    p.add_argument("--twist", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("iso", help="index/vanishing on an isotropic Grassmannian")
    p.add_argument("--family", choices=sorted(_FAMILY_ALIASES), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bundle", choices=sorted(_BUNDLE_ALIASES), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("scan", help="twist scan of O and Theta on G(r,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i-lo", type=int, dest="i_lo")
    p.add_argument("--i-hi", type=int, dest="i_hi")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", help="verify catalog rows of pairing values")
    p.add_argument("--g", choices=list(reference_tables.FAMILIES), required=True)
    p.add_argument("--bundle", choices=list(reference_tables.BUNDLES), required=True)
    p.add_argument("--r-case", dest="r_case", help="row label, e.g. '2=r=n'")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int, default=8, dest="n_max")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="local cohomology of Omega_A by exact rank")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", type=int, help="single maximal degree")
    p.add_argument("--deg-max", type=int, default=3, dest="deg_max")
    p.add_argument("--max-slice", type=int, default=250_000, dest="max_slice")
    p.add_argument("--dump-dir", dest="dump_dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify-paper", help="run the acceptance suite")
    p.add_argument("--only", help="comma-separated criterion ids")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
