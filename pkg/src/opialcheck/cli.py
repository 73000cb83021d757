"""Command-line front end.

Reads sequence files shaped like

    {"u": [[0, 0], [1, 2], ["1/2", "3/4"]], "v": [...], "base_index": 0}

where endpoints are integers, exact decimal literals, or "p/q" strings.
Floats that cannot be stated exactly must be rewritten as strings; the
parser never rounds.

Exit codes: 0 the checked inequality holds (or the command simply
succeeded), 1 an in-hypotheses verdict failed (the output carries the
witness), 2 preconditions unsatisfied, 3 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .intervals import Interval, InvalidBounds
from .oracle import (
    BudgetExceeded,
    FuzzConfig,
    fuzz,
    input_to_jsonable,
    ratio_scan,
    reproduce_examples,
)
from .rationals import NonRational, as_rational
from .sequences import IntervalSequence, NotDecomposable, synchronous
from .theorems import check_pair, check_single, lookup, registry


class SchemaError(ValueError):
    """Input document does not match the expected schema."""


_ALLOWED_KEYS = {"u", "v", "base_index"}


def _json_loads_exact(text):
    def reject(name):
        raise SchemaError(f"non-finite number {name} is not accepted")

    try:
        # parse_float sees the literal digits, so decimal notation stays exact
        return json.loads(text, parse_float=Fraction, parse_constant=reject)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _endpoint(value, path):
    try:
        return as_rational(value)
    except NonRational as exc:
        raise type(exc)(f"{path}: {exc}") from None
    except ValueError as exc:
        raise SchemaError(f"{path}: {exc}") from None


def _parse_items(raw, key):
    if not isinstance(raw, list):
        raise SchemaError(f"{key}: expected a list of [lo, hi] pairs")
    items = []
    for j, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError(f"{key}[{j}]: expected a two-element [lo, hi] pair")
        lo = _endpoint(entry[0], f"{key}[{j}][0]")
        hi = _endpoint(entry[1], f"{key}[{j}][1]")
        try:
            items.append(Interval(lo, hi))
        except InvalidBounds as exc:
            raise SchemaError(f"{key}[{j}]: {exc}") from None
    return tuple(items)


def parse_sequence(document):
    """Build a sequence, or a (u, v) pair, from a JSON document.

    Accepts the raw JSON text or an already-parsed dict. Unknown keys
    are rejected so typos fail loudly instead of being ignored.
    """
    doc = _json_loads_exact(document) if isinstance(document, str) else document
    if not isinstance(doc, dict):
        raise SchemaError("top level: expected an object")
    unknown = set(doc) - _ALLOWED_KEYS
    if unknown:
        raise SchemaError(
            f"unknown keys: {sorted(unknown)} (allowed: u, v, base_index)"
        )
    if "u" not in doc:
        raise SchemaError("missing required key: u")
    base = doc.get("base_index", 0)
    if isinstance(base, bool) or not isinstance(base, int):
        raise SchemaError(f"base_index: expected an integer, got {base!r}")
    u = IntervalSequence(_parse_items(doc["u"], "u"), base)
    if "v" in doc:
        v = IntervalSequence(_parse_items(doc["v"], "v"), base)
        return (u, v)
    return u


def sequence_to_jsonable(built):
    """Inverse of parse_sequence up to lowest-terms normalization."""
    return input_to_jsonable(built)


# -- output -------------------------------------------------------------------


def _tableize(payload, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key, val in payload.items():
            if isinstance(val, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_tableize(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {val}")
    elif isinstance(payload, list):
        for val in payload:
            if isinstance(val, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_tableize(val, indent + 1))
            else:
                lines.append(f"{pad}- {val}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(lines)


def _emit(payload, fmt):
    if fmt == "table":
        print(_tableize(payload))
    else:
        print(json.dumps(payload, indent=2))


# -- commands -------------------------------------------------------------


def _read_input(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sequence(fh.read())


def _parse_window(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--window expects n,m, got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValueError(f"--window expects two integers, got {text!r}") from None


def _run_one(spec, built, args, window):
    pair = isinstance(built, tuple)
    if spec.arity == 2 and not pair:
        raise ValueError(f"{spec.id.value} takes a pair; the input has no v")
    if spec.arity == 1 and pair:
        raise ValueError(f"{spec.id.value} takes a single sequence; drop v")
    if spec.arity == 1:
        if args.alt_boundary:
            raise ValueError("--alt-boundary applies only to T3_10")
        return check_single(built, args.l1, args.l2, spec.id, window=window)
    u, v = built
    return check_pair(u, v, spec.id, window=window, alt_boundary=args.alt_boundary)


def _cmd_check(args):
    built = _read_input(args.path)
    window = _parse_window(args.window) if args.window else None
    if args.theorem:
        spec = lookup(args.theorem)
        verdict = _run_one(spec, built, args, window)
        payload = {
            "input": sequence_to_jsonable(built),
            "verdict": verdict.to_jsonable(),
        }
        if not verdict.in_hypotheses:
            payload["summary"] = "preconditions unsatisfied"
            _emit(payload, args.format)
            return 2
        if not verdict.holds:
            payload["summary"] = "inequality FAILED under satisfied preconditions"
            payload["witness"] = sequence_to_jsonable(built)
            _emit(payload, args.format)
            return 1
        payload["summary"] = "inequality holds"
        _emit(payload, args.format)
        return 0
    # discovery: try everything of matching arity, report all verdicts
    if args.alt_boundary:
        raise ValueError("--alt-boundary needs an explicit --theorem T3_10")
    pair = isinstance(built, tuple)
    verdicts = []
    skipped = []
    for spec in registry():
        if spec.arity != (2 if pair else 1):
            continue
        if spec.windowed and window is None:
            skipped.append({"theorem": spec.id.value, "reason": "needs --window"})
            continue
        w = window if (spec.windowed or spec.window_optional) else None
        try:
            verdicts.append(_run_one(spec, built, args, w))
        except (ValueError, TypeError, ArithmeticError) as exc:
            skipped.append({"theorem": spec.id.value, "reason": str(exc)})
    conforming = [v for v in verdicts if v.in_hypotheses]
    failed = [v for v in conforming if not v.holds]
    payload = {
        "input": sequence_to_jsonable(built),
        "verdicts": [v.to_jsonable() for v in verdicts],
        "skipped": skipped,
        "summary": f"{len(conforming)} of {len(verdicts)} applicable, "
                   f"{len(failed)} failed",
    }
    if not conforming:
        payload["summary"] = "no statement's preconditions are satisfied"
        _emit(payload, args.format)
        return 2
    if failed:
        payload["witness"] = sequence_to_jsonable(built)
        _emit(payload, args.format)
        return 1
    _emit(payload, args.format)
    return 0


def _cmd_classify(args):
    built = _read_input(args.path)
    pair = isinstance(built, tuple)
    seqs = built if pair else (built,)
    payload = {}
    for name, s in zip(("u", "v"), seqs):
        entry = s.classify(strict=args.strict).to_jsonable()
        try:
            entry["segments"] = s.alternate_segments().to_jsonable()
        except (NotDecomposable, ValueError) as exc:
            entry["segments"] = None
            entry["segments_error"] = str(exc)
        payload[name] = entry
    if pair:
        try:
            payload["synchrony"] = synchronous(built[0], built[1]).value
        except ValueError as exc:
            payload["synchrony"] = None
            payload["synchrony_error"] = str(exc)
    _emit(payload, args.format)
    return 0


def _cmd_fuzz(args):
    relax = frozenset(
        part for part in (s.strip() for s in (args.relax or "").split(",")) if part
    )
    config = FuzzConfig(
        lookup(args.theorem).id, trials=args.trials, seed=args.seed, relax=relax
    )
    report = fuzz(config)
    _emit(report.to_jsonable(), args.format)
    return 1 if report.violations else 0


def _cmd_scan(args):
    report = ratio_scan(
        lookup(args.theorem).id, args.l1, args.l2,
        length=args.length, bound=args.bound, budget=args.budget,
    )
    _emit(report.to_jsonable(), args.format)
    return 1 if report.violations else 0


def _cmd_examples(args):
    _emit([r.to_jsonable() for r in reproduce_examples()], args.format)
    return 0


def _add_format(sub):
    sub.add_argument("--format", choices=("json", "table"), default="json",
                     help="output rendering (default json)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="opialcheck",
        description="Exact checking of Opial-type inequalities on interval sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    chk = sub.add_parser("check", help="evaluate one statement, or every applicable one")
    chk.add_argument("--in", dest="path", required=True,
                     help="JSON file with u (and optionally v)")
    chk.add_argument("--theorem", help="statement id such as T3_5; omit to discover")
    chk.add_argument("--l1", type=int, default=1, help="first exponent (default 1)")
    chk.add_argument("--l2", type=int, default=1, help="second exponent (default 1)")
    chk.add_argument("--window", help="window as n,m for the windowed statements")
    chk.add_argument("--alt-boundary", dest="alt_boundary", action="store_true",
                     help="T3_10 variant anchored at the first element")
    _add_format(chk)

    cls = sub.add_parser("classify", help="monotonicity profile and segmentation")
    cls.add_argument("--in", dest="path", required=True)
    cls.add_argument("--strict", action="store_true",
                     help="use strict orders instead of the default non-strict ones")
    _add_format(cls)

    fz = sub.add_parser("fuzz", help="seeded random trials of one statement")
    fz.add_argument("--theorem", required=True)
    fz.add_argument("--trials", type=int, default=1000)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--relax", default="",
                    help="comma-separated precondition names to violate on purpose")
    _add_format(fz)

    sc = sub.add_parser("scan", help="exhaustive small-grid worst-ratio search")
    sc.add_argument("--theorem", required=True)
    sc.add_argument("--l1", type=int, default=1)
    sc.add_argument("--l2", type=int, default=1)
    sc.add_argument("--length", type=int, required=True, help="element count")
    sc.add_argument("--bound", type=int, required=True,
                    help="endpoints range over integers 0..bound")
    sc.add_argument("--budget", type=int, default=200_000,
                    help="refuse scans needing more checks than this")
    _add_format(sc)

    ex = sub.add_parser("examples", help="re-run the bundled worked examples")
    _add_format(ex)

    return parser


_HANDLERS = {
    "check": _cmd_check,
    "classify": _cmd_classify,
    "fuzz": _cmd_fuzz,
    "scan": _cmd_scan,
    "examples": _cmd_examples,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        code = exc.code if isinstance(exc.code, int) else 0
        return 0 if code == 0 else 3
    try:
        return _HANDLERS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SchemaError, NonRational) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
