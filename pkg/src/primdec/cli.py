"""Command-line front end: search, verification, certificates, identity
self-tests, Weil-bound sampling, and raw character sums, with JSON/CSV/text
output.

Exit codes: 0 on success, 2 when a verification, certificate, identity, or
bound check fails (a mathematical red flag), 1 for usage or resource errors.
JSON output is canonical (compact separators, fixed key order, no
timestamps), so identical flags and seed reproduce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import decomp as dc
from .arith import divisors
from .characters import (CharacterSpec, random_weil_instance, sum_a, sum_b,
                         sum_c, weil_check)
from .correlation import (check_inner_identity, check_quadruple_bound,
                          check_shkredov_identity, random_complex_function,
                          random_integer_function)
from .errors import BudgetExceeded, PrimdecError
from .field import build_field, quadratic_character
from .rng import SplitMix64

BOUND_SLACK = 1e-6
MAX_REPORTED_FAILURES = 5
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    """Bad flags or malformed values; maps to exit code 1."""


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: the subcommand plus its shared, validated knobs."""

    command: str
    p: int
    fmt: str
    seed: int = 0
    budget_ms: int | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we want 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="primdec", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, seed=False):
        sp.add_argument("--p", type=int, required=True, help="odd prime modulus")
        sp.add_argument("--format", choices=FORMATS, default="json")
        if seed:
            sp.add_argument("--seed", type=int, required=True,
                            help="64-bit seed for the documented generator")

    sp = sub.add_parser("search", help="enumerate normalized B candidates")
    common(sp)
    sp.add_argument("--k", type=int, required=True, help="|B|")
    sp.add_argument("--span", type=int, default=None,
                    help="largest allowed element of B (default p-1)")
    sp.add_argument("--budget-ms", type=int, default=None)

    sp = sub.add_parser("verify", help="check A + B = P_p exactly")
    common(sp)
    sp.add_argument("--a", required=True, help="comma-separated residues")
    sp.add_argument("--b", required=True, help="comma-separated residues")
    sp.add_argument("--normalize", action="store_true",
                    help="translate so min(B) = 0 before reporting")

    sp = sub.add_parser("certify", help="emit H- and r-certificates for a pair")
    common(sp)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    sp = sub.add_parser("bounds", help="numeric bound report at one prime")
    common(sp)
    sp.add_argument("--theorem", choices=list(dc.THEOREMS), required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--a", type=int, default=None)

    sp = sub.add_parser("identity", help="seeded randomized identity checks")
    common(sp, seed=True)
    sp.add_argument("--which", choices=("shkredov", "inner", "quadruple"),
                    required=True)
    sp.add_argument("--k", type=int, default=2,
                    help="grid order for the shkredov check")
    sp.add_argument("--trials", type=int, required=True)

    sp = sub.add_parser("weil", help="seeded random Weil-bound instances")
    common(sp, seed=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=4)

    sp = sub.add_parser("charsum", help="one character sum of the A/B/C family")
    common(sp)
    sp.add_argument("--d", type=int, required=True, help="character order")
    sp.add_argument("--r", type=int, required=True, help="character exponent")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--sumA", action="store_true")
    group.add_argument("--sumB", action="store_true")
    group.add_argument("--sumC", action="store_true")
    sp.add_argument("--b1", type=int, default=None)
    sp.add_argument("--shifts", default=None, help="comma-separated residues")

    return parser


# ------------------------------------------------------------------ output

def canonical_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"), allow_nan=False)


def _complex_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _flatten(payload, prefix=""):
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, f"{name}.")
        else:
            yield name, value


def _emit(payload: dict, fmt: str, csv_rows=None) -> None:
    if fmt == "json":
        print(canonical_json(payload))
        return
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        if csv_rows is not None:
            for row in csv_rows:
                writer.writerow(row)
        else:
            pairs = list(_flatten(payload))
            writer.writerow([k for k, _ in pairs])
            writer.writerow([_scalar_text(v) for _, v in pairs])
        sys.stdout.write(out.getvalue())
        return
    for key, value in _flatten(payload):
        print(f"{key}: {_scalar_text(value)}")


def _scalar_text(value) -> str:
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    return str(value)


def _parse_residues(text: str, p: int, flag: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from exc
    if not values:
        raise UsageError(f"{flag}: empty list")
    for v in values:
        if not 0 <= v < p:
            raise UsageError(f"{flag}: residue {v} outside [0, {p})")
    return values


# ---------------------------------------------------------------- handlers

def _cmd_search(args) -> int:
    field = build_field(args.p)
    span = args.span if args.span is not None else field.p - 1
    complete = True
    try:
        entries = dc.search(field, args.k, span=span, budget_ms=args.budget_ms)
    except BudgetExceeded as exc:
        entries = exc.partial
        complete = False
        print(f"warning: {exc}", file=sys.stderr)
    candidates = [{
        "b": list(e.b),
        "a_max_size": e.a_max_size,
        "covers": e.covers,
        "a_max": e.a_max_elements() if e.covers else None,
    } for e in entries]
    payload = {
        "command": "search", "p": field.p, "k": args.k, "span": span,
        "complete": complete,
        "hits": [list(e.b) for e in entries if e.covers],
        "candidates": candidates,
    }
    rows = [("p", "B", "a_max_size", "covers")]
    rows += [(field.p, ";".join(map(str, e.b)), e.a_max_size, e.covers)
             for e in entries]
    _emit(payload, args.format, csv_rows=rows)
    return 0 if complete else 1


def _cmd_verify(args) -> int:
    field = build_field(args.p)
    a = _parse_residues(args.a, field.p, "--a")
    b = _parse_residues(args.b, field.p, "--b")
    pair = dc.Decomposition.from_elements(field, a, b)
    if args.normalize:
        pair = dc.normalize(pair)
    verified = dc.verify(pair)
    payload = {
        "command": "verify", "p": field.p,
        "a": pair.a_elements(), "b": pair.b_elements(),
        "normalized": pair.normalized,
        "conjecture_relevant": pair.conjecture_relevant,
        "verified": verified,
    }
    _emit(payload, args.format)
    return 0 if verified else 2


def _cmd_certify(args) -> int:
    field = build_field(args.p)
    a = _parse_residues(args.a, field.p, "--a")
    b = _parse_residues(args.b, field.p, "--b")
    doc = dc.certificate_document(field, a, b)
    payload = {"command": "certify", **doc}
    _emit(payload, args.format)
    return 0 if doc["verified"] else 2


def _cmd_bounds(args) -> int:
    field = build_field(args.p)
    report = dc.bound_report(args.theorem, field, k=args.k,
                             epsilon=args.epsilon, a=args.a)
    payload = {"command": "bounds", **report.to_dict()}
    _emit(payload, args.format)
    return 2 if report.verdict == dc.VERDICT_BOUND_VIOLATED else 0


def _cmd_identity(args) -> int:
    field = build_field(args.p)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    rng = SplitMix64(args.seed)
    passed = exact_passed = 0
    failures = []
    for trial in range(args.trials):
        if args.which == "shkredov":
            f = random_integer_function(field, rng)
            g = random_integer_function(field, rng)
            res = check_shkredov_identity(f, g, args.k)
            exact = (round(res.lhs.real) == round(res.rhs.real)
                     and abs(res.lhs.imag) < 1e-6 and abs(res.rhs.imag) < 1e-6)
            ok = res.ok and exact
            exact_passed += exact
        elif args.which == "inner":
            f = random_complex_function(field, rng)
            g = random_complex_function(field, rng)
            res = check_inner_identity(f, g)
            ok = res.ok
        else:
            if field.p < 5:
                raise UsageError("quadruple check needs p >= 5")
            shifts = rng.distinct(4, field.p)
            res = check_quadruple_bound(field, *shifts)
            ok = res.ok
        if ok:
            passed += 1
        elif len(failures) < MAX_REPORTED_FAILURES:
            failures.append({"trial": trial})
    payload = {
        "command": "identity", "which": args.which, "p": field.p,
        "k": args.k if args.which == "shkredov" else None,
        "trials": args.trials, "seed": args.seed,
        "passed": passed,
        "exact_passed": exact_passed if args.which == "shkredov" else None,
        "failures": failures,
    }
    _emit(payload, args.format)
    return 0 if passed == args.trials else 2


def _cmd_weil(args) -> int:
    field = build_field(args.p)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.max_degree < 1:
        raise UsageError("--max-degree must be >= 1")
    rng = SplitMix64(args.seed)
    failures = []
    failed = 0
    max_ratio = 0.0
    for trial in range(args.trials):
        psi, f, a = random_weil_instance(field, rng, args.max_degree)
        res = weil_check(field, psi, f, a)
        if res.bound > 0:
            max_ratio = max(max_ratio, abs(res.sum) / res.bound)
        if not res.ok:
            failed += 1
            if len(failures) < MAX_REPORTED_FAILURES:
                failures.append({
                    "trial": trial, "order": psi.d, "exponent": psi.r,
                    "f": list(f.coefficients), "a": a,
                    "abs_sum": abs(res.sum), "bound": res.bound,
                })
    payload = {
        "command": "weil", "p": field.p, "trials": args.trials,
        "seed": args.seed, "max_degree": args.max_degree,
        "failed": failed,
        "max_ratio": max_ratio,
        "failures": failures,
    }
    _emit(payload, args.format)
    return 0 if failed == 0 else 2


def _cmd_charsum(args) -> int:
    field = build_field(args.p)
    p = field.p
    try:
        chi = CharacterSpec(field, args.d, args.r)
    except (PrimdecError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    shifts = (_parse_residues(args.shifts, p, "--shifts")
              if args.shifts is not None else None)
    b1 = args.b1
    if b1 is not None and not 0 <= b1 < p:
        raise UsageError(f"--b1: residue {b1} outside [0, {p})")

    expected = bound = None
    if args.sumA:
        if b1 is None:
            raise UsageError("--sumA needs --b1")
        kind = "A"
        value = sum_a(field, chi, b1)
        if chi.d == 1:
            expected = float(-quadratic_character(field, b1))
        elif chi.d == 2:
            expected = float(p - 1) if b1 == 0 else -1.0
        else:
            bound = math.sqrt(p)
    elif args.sumB:
        if shifts is None:
            raise UsageError("--sumB needs --shifts")
        kind = "B"
        value = sum_b(field, chi, shifts)
        bound = len(shifts) * math.sqrt(p)
    else:
        if b1 is None or shifts is None:
            raise UsageError("--sumC needs --b1 and --shifts")
        kind = "C"
        value = sum_c(field, chi, b1, shifts)
        if len(shifts) == 1 and chi.d == 1 and (shifts[0] + b1) % p == 0:
            # complete sum of chi2(x+b1)**2 over x != 0: p-2 terms when b1 != 0
            expected = float(p - 2) if b1 != 0 else float(p - 1)
        else:
            bound = (len(shifts) + 1) * math.sqrt(p)

    if expected is not None:
        ok = abs(value - expected) <= BOUND_SLACK
    else:
        ok = abs(value) <= bound + BOUND_SLACK
    payload = {
        "command": "charsum", "kind": kind, "p": p, "d": args.d, "r": args.r,
        "b1": b1, "shifts": shifts,
        "value": _complex_json(value), "abs": abs(value),
        "expected": expected, "bound": bound, "ok": ok,
    }
    _emit(payload, args.format)
    return 0 if ok else 2


_HANDLERS = {
    "search": _cmd_search,
    "verify": _cmd_verify,
    "certify": _cmd_certify,
    "bounds": _cmd_bounds,
    "identity": _cmd_identity,
    "weil": _cmd_weil,
    "charsum": _cmd_charsum,
}


def run(argv: list[str]) -> int:
    """Parse argv, execute, and return the exit code (no sys.exit)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PrimdecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return int(code) if isinstance(code, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
