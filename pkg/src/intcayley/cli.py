"""Command-line front end.

Exit codes: 0 success, 1 error (parse failure, method disagreement,
verification mismatch), 2 criterion not applicable to the given set.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Callable

from .characters import get_table
from .errors import CayleyError, NotApplicableError
from .group import ConnectionSet
from .oracle import numeric_spectrum, oracle_spectrum
from .setlang import from_json, parse_set, to_obj
from .spectrum import (
    IntegralityVerdict,
    Spectrum,
    check_integral_theorem3,
    check_integral_theorem4,
    check_integral_theorem5,
    compute_spectrum,
    corollary_sets,
    corollary_spectra,
    enumerate_integral_normal,
)

EXIT_OK, EXIT_ERROR, EXIT_NOT_APPLICABLE = 0, 1, 2


class CommandFailed(Exception):
    def __init__(self, message: str, code: int = EXIT_ERROR):
        super().__init__(message)
        self.code = code


def _report(args, n: int | None, S: ConnectionSet | None, result, started: float) -> dict:
    return {
        "command": args.command_line,
        "n": n,
        "connection_set": to_obj(S) if S is not None else None,
        "result": result,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def _emit(obj, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _load_set(args) -> ConnectionSet:
    if args.set_json is not None:
        text = sys.stdin.read() if args.set_json == "-" else open(args.set_json).read()
        S = from_json(text)
        if args.n is not None and args.n != S.n:
            raise CommandFailed(f"--n {args.n} disagrees with n={S.n} in the JSON set")
    else:
        if args.set is None or args.n is None:
            raise CommandFailed("give --n and --set, or --set-json")
        S = parse_set(args.set, args.n)
    if args.symmetrize:
        S = S.symmetrized()
    return S


def _oracle_or_numeric(S: ConnectionSet) -> Spectrum:
    exact = oracle_spectrum(S)
    return exact if exact is not None else numeric_spectrum(S)


def _spectra_agree(a: Spectrum, b: Spectrum) -> bool:
    if a.exact and b.exact:
        return a == b
    return a.close_to(b, 1e-6)


def cmd_spectrum(args, out) -> int:
    started = time.perf_counter()
    S = _load_set(args)
    S.require_symmetric()
    result: dict = {}
    found = None
    if args.method in ("character", "both"):
        found = compute_spectrum(get_table(S.n), S)
        result["character"] = found.to_json()
    if args.method in ("oracle", "both"):
        other = _oracle_or_numeric(S)
        result["oracle"] = other.to_json()
        if found is None:
            found = other
        elif not _spectra_agree(found, other):
            raise CommandFailed(f"character spectrum {found} disagrees with oracle {other}")
    result["integral"] = found.exact
    if args.format == "json":
        _emit(_report(args, S.n, S, result, started), out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["value", "multiplicity"])
        w.writerows(found.entries)
    else:
        out.write(f"{found}\n")
    return EXIT_OK


def _oracle_verdict(S: ConnectionSet) -> IntegralityVerdict:
    ok = oracle_spectrum(S) is not None
    failures = [] if ok else [("characteristic polynomial splits over Z", "charpoly")]
    return IntegralityVerdict(ok, "oracle", failures)


CHECKERS: dict[str, Callable] = {
    "theorem3": check_integral_theorem3,
    "theorem4": check_integral_theorem4,
    "theorem5": check_integral_theorem5,
}


def cmd_check(args, out) -> int:
    started = time.perf_counter()
    S = _load_set(args)
    tbl = get_table(S.n)
    verdicts: list[IntegralityVerdict] = []
    skipped: dict[str, str] = {}
    if args.method == "oracle":
        verdicts.append(_oracle_verdict(S))
    elif args.method == "all":
        for name, fn in CHECKERS.items():
            try:
                verdicts.append(fn(tbl, S))
            except NotApplicableError as exc:
                skipped[name] = str(exc)
        verdicts.append(_oracle_verdict(S))
    else:
        try:
            verdicts.append(CHECKERS[args.method](tbl, S))
        except NotApplicableError as exc:
            raise CommandFailed(f"{args.method} not applicable: {exc}", EXIT_NOT_APPLICABLE)
    outcomes = {v.integral for v in verdicts}
    result = {
        "integral": verdicts[0].integral,
        "verdicts": [v.to_json() for v in verdicts],
        "not_applicable": skipped,
    }
    if args.format == "json":
        _emit(_report(args, S.n, S, result, started), out)
    else:
        for v in verdicts:
            state = "integral" if v.integral else "not integral"
            out.write(f"{v.method}: {state}\n")
            for cond, subj in v.failures:
                out.write(f"  fails {cond} [{subj}]\n")
        for name, why in skipped.items():
            out.write(f"{name}: not applicable ({why})\n")
    if len(outcomes) > 1:
        raise CommandFailed("criteria disagree: " + ", ".join(f"{v.method}={v.integral}" for v in verdicts))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.family != "normal":
        raise CommandFailed(f"unknown family {args.family!r}")
    enum = enumerate_integral_normal(args.n, args.limit)
    for S in enum.sets:
        if args.verify and oracle_spectrum(S) is None:
            raise CommandFailed(f"oracle rejects enumerated set {json.dumps(to_obj(S))}")
        _emit(to_obj(S), out)
    if enum.truncated:
        sys.stderr.write(f"truncated: stopped after {len(enum.sets)} sets (--limit {args.limit})\n")
    return EXIT_OK


def chartable_json(n: int) -> dict:
    tbl = get_table(n)
    classes = tbl.group.conjugacy_classes
    return {
        "n": n,
        "conductor": tbl.ctx.L,
        "classes": [
            {"label": c.label(), "representative": [c.representative.r, c.representative.j], "size": len(c)}
            for c in classes
        ],
        "characters": [
            {
                "id": cid.label(),
                "degree": cid.degree,
                "values": [
                    {"coeffs": list(v.coeffs), "approx": [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]}
                    for v in row
                    for z in [v.to_complex()]
                ],
            }
            for cid, row in zip(tbl.ids, tbl.class_values)
        ],
    }


def cmd_chartable(args, out) -> int:
    data = chartable_json(args.n)
    if args.format == "json":
        _emit(data, out)
        return EXIT_OK
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["character", "degree"] + [c["label"] for c in data["classes"]])
    for ch in data["characters"]:
        cells = []
        for v in ch["values"]:
            re_, im = v["approx"]
            cells.append("[" + ";".join(map(str, v["coeffs"])) + f"] ~ {re_:.6f}{im:+.6f}i")
        w.writerow([ch["id"], ch["degree"]] + cells)
    return EXIT_OK


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return range(a, b + 1)


def cmd_verify_corollaries(args, out) -> int:
    rows = []
    for n in args.n_range:
        started = time.perf_counter()
        sets = corollary_sets(n)
        expected = corollary_spectra(n)
        tbl = get_table(n)
        for name, S in sets.items():
            by_char = compute_spectrum(tbl, S)
            by_oracle = oracle_spectrum(S)
            rows.append(
                {
                    "n": n,
                    "corollary": name,
                    "expected": str(expected[name]),
                    "character_ok": by_char == expected[name],
                    "oracle_ok": by_oracle == expected[name],
                }
            )
        ms = round((time.perf_counter() - started) * 1000, 3)
        for row in rows[-len(sets):]:
            row["elapsed_ms_for_n"] = ms
    all_ok = all(r["character_ok"] and r["oracle_ok"] for r in rows)
    if args.format == "json":
        _emit({"command": args.command_line, "rows": rows, "all_pass": all_ok}, out)
    else:
        out.write(f"{'n':>3}  {'set':<9} {'character':<9} {'oracle':<6} {'ms/n':>9}  expected\n")
        for r in rows:
            ch = "pass" if r["character_ok"] else "FAIL"
            orc = "pass" if r["oracle_ok"] else "FAIL"
            out.write(f"{r['n']:>3}  {r['corollary']:<9} {ch:<9} {orc:<6} {r['elapsed_ms_for_n']:>9.1f}  {r['expected']}\n")
    return EXIT_OK if all_ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intcayley", description="Integral Cayley graphs over T_{8n}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def set_args(p):
        p.add_argument("--n", type=int, help="group parameter (order 8n)")
        p.add_argument("--set", help="connection-set expression, e.g. 'coset(1)+coset(3)'")
        p.add_argument("--set-json", metavar="FILE", help="connection set as JSON ('-' for stdin)")
        p.add_argument("--symmetrize", action="store_true", help="add inverses of all members")

    p = sub.add_parser("spectrum", help="spectrum of Cay(T_8n, S)")
    set_args(p)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--method", choices=["character", "oracle", "both"], default="character")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="decide integrality")
    set_args(p)
    p.add_argument("--method", choices=["theorem3", "theorem4", "theorem5", "oracle", "all"], default="theorem3")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list integral normal connection sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", default="normal", choices=["normal"])
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--verify", action="store_true", help="oracle-check each set before printing it")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("chartable", help="export the character table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("verify-corollaries", help="check the three closed-form spectra")
    p.add_argument("--n-range", type=_parse_range, default=range(1, 9), metavar="A..B")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify_corollaries)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    args.command_line = " ".join(["intcayley"] + argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        sys.stderr.write("error: --n must be >= 1\n")
        return EXIT_ERROR
    try:
        return args.func(args, out)
    except CommandFailed as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except (CayleyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
