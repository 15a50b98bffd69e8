"""Command-line entry point: ``macdetect <subcommand> ...``.

Exit codes: 0 verified/computed, 1 an assertion failed (details in the
report), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cyclotomic import CycloNum, cyclo_to_json, format_rational
from .detect import default_workers, probe_lemmas, scan_ap, scan_cube
from .expansion import (
    InconsistentSystem,
    LinearCombination,
    appendix_basis,
    fit_expansion,
    independence_rank,
    odd_symmetric_basis,
    verify_fstar,
    verify_gstar,
)
from .macmahon import ExponentVector, macmahon_series
from .qseries import QSeries
from .quasimodular import DetectorParams, build_f, build_g, ramanujan_check

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _value(x):
    """JSON-safe exact value: decimal/fraction strings or a cyclotomic dict."""
    if isinstance(x, CycloNum):
        return format_rational(x.coeffs[0]) if x.is_rational() else cyclo_to_json(x)
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    return x


def _csv_value(x) -> str:
    v = _value(x)
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


def parse_form(text: str) -> DetectorParams:
    kind, _, rest = text.partition(":")
    try:
        nums = [int(x) for x in rest.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad form {text!r}") from exc
    if kind == "g" and len(nums) == 2:
        return DetectorParams(*nums)
    if kind == "f" and len(nums) == 4:
        return DetectorParams(*nums)
    raise UsageError(f"form must be g:k,l or f:k,l,r,t, got {text!r}")


def _build(params: DetectorParams, order: int) -> QSeries:
    return build_f(params, order) if params.is_ap else build_g(params, order)


def _series_rows(series: QSeries, start: int = 0) -> list[tuple[int, object]]:
    return [(n, series[n]) for n in range(start, series.order + 1)]


# -- subcommand handlers; each returns (exit code, json payload, csv rows) --

def cmd_macmahon(args):
    vec = ExponentVector.parse(args.vector)
    series = macmahon_series(vec, args.max_n)
    rows = _series_rows(series, 1)
    payload = {"vector": list(vec.entries), "max_n": args.max_n,
               "rows": [{"n": n, "value": _value(v)} for n, v in rows]}
    return EXIT_OK, payload, (["n", "value"], rows)


def cmd_form(args):
    if args.kind == "g":
        if args.r is not None or args.t is not None:
            raise UsageError("form g takes no --r/--t")
        params = DetectorParams(args.k, args.l)
    else:
        if args.r is None or args.t is None:
            raise UsageError("form f needs --r and --t")
        params = DetectorParams(args.k, args.l, args.r, args.t)
    series = _build(params, args.max_n)
    rows = _series_rows(series, 0)
    payload = {"form": args.kind, "params": _params_json(params), "max_n": args.max_n,
               "rows": [{"n": n, "value": _value(v)} for n, v in rows]}
    return EXIT_OK, payload, (["n", "coefficient"], rows)


def _params_json(p: DetectorParams) -> dict:
    out = {"k": p.k, "l": p.l}
    if p.is_ap:
        out.update(r=p.r, t=p.t)
    return out


def cmd_scan(args):
    if args.kind == "cubes":
        params = DetectorParams(args.k, args.l)
        rep = scan_cube(args.k, args.l, args.max_n, workers=args.workers)
        first = rep.mismatches[0].to_json() if rep.mismatches else None
        payload = {"params": _params_json(params), "max_n": args.max_n, "ok": rep.ok,
                   "zero_set": rep.zero_set, "mismatches": [m.to_json() for m in rep.mismatches],
                   "first_failure": first}
        rows = [(n, "zero") for n in rep.zero_set]
        return (EXIT_OK if rep.ok else EXIT_FAIL), payload, (["n", "zero"], rows)
    if args.r is None or args.t is None:
        raise UsageError("scan ap needs --r and --t")
    params = DetectorParams(args.k, args.l, args.r, args.t)
    rep = scan_ap(args.k, args.l, args.r, args.t, args.max_n, workers=args.workers)
    first = None
    if rep.negatives:
        first = {"n": rep.negatives[0], "expected": "non-negative", "actual": "negative"}
    elif not rep.ok:
        n = min(rep.missing + rep.spurious)
        first = {"n": n, "expected": "zero" if n in rep.missing else "nonzero",
                 "actual": "nonzero" if n in rep.missing else "zero"}
    payload = {"params": _params_json(params), "max_n": args.max_n, "ok": rep.ok,
               "value_at_one": _value(rep.value_at_one), "zero_set": rep.zero_set,
               "expected_zero_set": rep.expected_zero_set, "negatives": rep.negatives,
               "missing": rep.missing, "spurious": rep.spurious, "first_failure": first}
    rows = [(n, "zero") for n in rep.zero_set]
    return (EXIT_OK if rep.ok else EXIT_FAIL), payload, (["n", "zero"], rows)


def cmd_probe(args):
    params = DetectorParams(args.k, args.l)
    rep = probe_lemmas(args.k, args.l, args.max_n, workers=args.workers)
    payload = {"params": _params_json(params), "max_n": args.max_n, "ok": rep.ok,
               "pairs_checked": rep.pairs_checked,
               "violations": [v.to_json() for v in rep.violations],
               "first_failure": rep.violations[0].to_json() if rep.violations else None}
    return (EXIT_OK if rep.ok else EXIT_FAIL), payload, None


def cmd_check(args):
    rep = ramanujan_check(args.order)
    names = ("DG2 = -2G2^2 + 5/6 G4", "DG4 = -8G2G4 + 7/10 G6", "DG6 = -12G2G6 + 400/7 G4^2")
    payload = {"order": args.order, "ok": rep.all_zero,
               "identities": [{"identity": name, "max_nonzero_index": top, "all_zero": top is None}
                              for name, top in zip(names, rep.max_nonzero)]}
    return (EXIT_OK if rep.all_zero else EXIT_FAIL), payload, None


def cmd_verify(args):
    fn = verify_gstar if args.which == "gstar" else verify_fstar
    rep = fn(args.max_n, require_unit_scale=args.exact_scale)
    first = None
    if rep.first_mismatch:
        fm = rep.first_mismatch
        first = {"n": fm["n"], "expected": _value(fm["expected"]), "actual": _value(fm["actual"])}
    payload = {"which": rep.which, "max_n": rep.max_n, "ok": rep.ok, "scale": _value(rep.scale),
               "value_at_one": _value(rep.value_at_one), "target_at_one": _value(rep.target_at_one),
               "zero_set": rep.zero_set, "mismatch_count": len(rep.mismatches),
               "mismatches": rep.mismatches, "first_failure": first}
    return (EXIT_OK if rep.ok else EXIT_FAIL), payload, None


def _load_basis(args) -> list[LinearCombination]:
    if args.basis_file:
        data = json.loads(Path(args.basis_file).read_text())
        atoms = []
        if not isinstance(data, list) or not data:
            raise UsageError("basis file must hold a non-empty JSON list")
        for item in data:
            # an atom is one term, or a list / {"terms": [...]} of terms summed into one atom
            if isinstance(item, dict):
                terms = item["terms"] if "terms" in item else [item]
            elif isinstance(item, list):
                terms = item
            else:
                raise UsageError(f"bad basis entry {item!r}")
            try:
                atoms.append(LinearCombination.from_json(terms))
            except (KeyError, TypeError, AttributeError) as exc:
                raise UsageError(f"bad basis entry {item!r}") from exc
        ts = {a.t for a in atoms}
        if len(ts) > 1:
            t = max(ts)
            atoms = [LinearCombination.from_json(a.to_json(), t=t) for a in atoms]
        return atoms
    name = args.basis
    if name in ("gstar", "fstar"):
        return appendix_basis(name)
    if name in ("gstar-grouped", "fstar-grouped"):
        return appendix_basis(name.split("-")[0], grouped=True)
    if name.startswith("odd:"):
        parts = name.split(":")
        weight = int(parts[1])
        t = int(parts[2]) if len(parts) > 2 else 1
        return odd_symmetric_basis(weight, t)
    raise UsageError(f"unknown basis {name!r}")


def cmd_fit(args):
    if not args.basis_file and not args.basis:
        raise UsageError("fit needs --basis-file or --basis")
    params = parse_form(args.target)
    basis = _load_basis(args)
    fit_k = args.fit_k if args.fit_k is not None else len(basis) + 10
    verify_k = args.verify_k if args.verify_k is not None else 2 * fit_k
    target = _build(params, verify_k)
    t = basis[0].t
    if t > 1:
        target = target.embed(t)
    base = {"target": args.target, "basis_size": len(basis), "fit_k": fit_k, "verify_k": verify_k}
    try:
        res = fit_expansion(target, basis, fit_k, verify_k)
    except InconsistentSystem as exc:
        payload = dict(base, ok=False, consistent=False, error=str(exc),
                       first_failure={"n": None, "expected": "solvable system", "actual": "inconsistent"})
        return EXIT_FAIL, payload, None
    payload = dict(base, ok=res.verified, consistent=True, nullspace_dim=res.nullspace_dim,
                   verify_mismatches=res.verify_mismatches,
                   coefficients=[{"atom": atom.to_json(), "c": _value(c)}
                                 for atom, c in zip(basis, res.coefficients) if c != 0],
                   first_failure=({"n": res.verify_mismatches[0], "expected": "target coefficient",
                                   "actual": "fitted value differs"} if res.verify_mismatches else None))
    return (EXIT_OK if res.verified else EXIT_FAIL), payload, None


def cmd_rank(args):
    params = [parse_form(f) for f in args.forms]
    forms = [_build(p, args.window) for p in params]
    r = independence_rank(forms, args.window)
    ok = r == len(forms)
    payload = {"forms": args.forms, "window": args.window, "rank": r, "count": len(forms), "ok": ok,
               "first_failure": None if ok else {"n": args.window, "expected": len(forms), "actual": r}}
    return (EXIT_OK if ok else EXIT_FAIL), payload, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="macdetect", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write the report here instead of stdout")
    parser.add_argument("--workers", type=int, default=None,
                        help=f"scan worker processes (default: $MACDETECT_WORKERS or CPU count = {default_workers()})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("macmahon", help="MacMahonesque values M_a(n)")
    p.add_argument("--vector", required=True, help="comma-separated exponents, e.g. 1,1,3")
    p.add_argument("--max-n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_macmahon)

    p = sub.add_parser("form", help="coefficients of g_{k,l} or f_{k,l}^{r,t}")
    p.add_argument("kind", choices=("g", "f"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--max-n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("scan", help="detection scans")
    p.add_argument("kind", choices=("cubes", "ap"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--max-n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("probe", help="sign and bound checks on a_{k,l}(n, d)")
    p.add_argument("kind", choices=("lemmas",))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("check", help="Ramanujan derivative identities")
    p.add_argument("kind", choices=("ramanujan",))
    p.add_argument("--order", type=int, default=200)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="check a published expansion against its form")
    p.add_argument("kind", choices=("appendix",))
    p.add_argument("--which", choices=("gstar", "fstar"), required=True)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--exact-scale", action="store_true",
                   help="require literal equality instead of equality up to one rational factor")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", help="fit a form against a basis of MacMahonesque atoms")
    p.add_argument("--target", required=True, help="g:k,l or f:k,l,r,t")
    p.add_argument("--basis-file", help="JSON list of {j, vector, s, c} atoms")
    p.add_argument("--basis", help="built-in basis: gstar, gstar-grouped, fstar, odd:<weight>[:<t>]")
    p.add_argument("--fit-k", type=int)
    p.add_argument("--verify-k", type=int)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("rank", help="exact rank of forms on a coefficient window")
    p.add_argument("--forms", nargs="+", required=True)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(func=cmd_rank)
    return parser


def _emit(payload: dict, table, fmt: str) -> str:
    if fmt == "csv" and table is not None:
        header, rows = table
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for n, v in rows:
            writer.writerow([n, _csv_value(v)])
        return buf.getvalue()
    return json.dumps(payload, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if getattr(args, "max_n", 1) is not None and getattr(args, "max_n", 1) < 1:
        parser.print_usage(sys.stderr)
        print("macdetect: error: --max-n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, payload, table = args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"macdetect: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    command = args.command + (f" {args.kind}" if hasattr(args, "kind") else "")
    payload = {"schema": SCHEMA, "command": command, **payload}
    text = _emit(payload, table, getattr(args, "format", "json"))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
