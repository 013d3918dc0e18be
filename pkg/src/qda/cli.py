"""Command-line entry point: ``qda <command> <spec.json> [options]``.

Exit codes: 0 all checks passed, 1 some check failed, 2 input error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from qda.commands import COMMANDS, BudgetExceeded, check_budget, run, threads
from qda.quadalg import InclusionError
from qda.specio import SpecError, load_spec

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qda",
        description="Exact checks for quadratic algebras defined by an R-matrix.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("spec", help="algebra spec file (JSON)")
    ap.add_argument("--max-degree", type=_nonneg, default=4, metavar="N",
                    help="truncation degree (default 4)")
    ap.add_argument("--bigraded", action="store_true",
                    help="hilbert: also tabulate the bigraded components")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    ap.add_argument("--budget", type=_nonneg, metavar="CELLS",
                    help="refuse to run if the largest matrix would exceed CELLS entries")
    ap.add_argument("--timings", action="store_true",
                    help="append wall-clock timings (makes output non-reproducible)")
    return ap


def to_json(payload):
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _scalar_text(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        return f"{v['re']} + {v['im']}i"
    return str(v)


def _is_record_list(v):
    return isinstance(v, list) and v and all(isinstance(x, dict) for x in v)


def _render(value, indent, out):
    pad = "  " * indent
    for key, v in value.items():
        if isinstance(v, dict) and not (set(v) == {"re", "im"}):
            out.append(f"{pad}{key}:")
            _render(v, indent + 1, out)
        elif _is_record_list(v):
            out.append(f"{pad}{key}:")
            for rec in v:
                cells = ", ".join(f"{k}={_text_cell(x)}" for k, x in rec.items())
                out.append(f"{pad}  {cells}")
        elif isinstance(v, list):
            out.append(f"{pad}{key}: [{', '.join(_text_cell(x) for x in v)}]")
        else:
            out.append(f"{pad}{key}: {_scalar_text(v)}")


def _text_cell(x):
    if isinstance(x, list):
        if _is_record_list(x):
            return "[" + "; ".join(" ".join(f"{k}={_text_cell(y)}" for k, y in r.items()) for r in x) + "]"
        return "[" + ", ".join(_text_cell(y) for y in x) + "]"
    return _scalar_text(x)


def to_text(payload):
    lines = []
    _render(payload, 0, lines)
    return "\n".join(lines) + "\n"


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        threads()
        spec = load_spec(args.spec)
        check_budget(args.command, spec, args.max_degree, args.bigraded, args.budget)
        payload = run(args.command, spec, args.max_degree, args.bigraded, args.timings)
    except (SpecError, BudgetExceeded) as e:
        print(f"qda: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InclusionError as e:
        print(f"qda: internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    text = to_json(payload) if args.format == "json" else to_text(payload)
    try:
        _emit(text, args.out)
    except OSError as e:
        print(f"qda: error: cannot write {args.out}: {e.strerror}", file=sys.stderr)
        return EXIT_INPUT
    if args.command == "dual":
        return EXIT_OK
    return EXIT_OK if payload["passed"] else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
