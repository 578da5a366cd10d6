"""Command-line entry point: ``domkit <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, TextIO

from . import golden
from .domination import solve
from .exceptions import DomkitError, FamilySpecError
from .formulas import prism_formula
from .graph_core import build_family, to_dot
from .indices import composite_report, reports_to_csv
from .prism_words import check_structure, count_min_words, enumerate_min_words
from .verify import (
    DiffReport,
    cross_check,
    verify_explicit_sets,
    verify_prism_table,
    verify_robustness_tables,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _budget(args) -> Optional[int]:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get("DOMKIT_BUDGET")
    return int(raw) if raw else None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget", type=_positive_int, default=None,
        help="max subset tests for brute force (fallback: $DOMKIT_BUDGET)",
    )
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")

    p = _Parser(prog="domkit", description="Exact domination toolkit for prisms and small graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gamma", parents=[common], help="domination number by brute force")
    s.add_argument("spec")

    s = sub.add_parser("zeta", parents=[common], help="domination number and dominion")
    s.add_argument("spec")
    s.add_argument("--list", action="store_true", help="print every minimum dominating set")

    s = sub.add_parser("words", parents=[common], help="minimum column words of prism:n via DP")
    s.add_argument("n", type=int)
    s.add_argument("--list", action="store_true")

    s = sub.add_parser("structure", parents=[common], help="structural checks over minimum words")
    s.add_argument("n", type=int)

    s = sub.add_parser("indices", parents=[common], help="robustness report for one graph")
    s.add_argument("spec")
    s.add_argument("--csv", action="store_true")

    s = sub.add_parser("formula", parents=[common], help="closed-form gamma and zeta")
    s.add_argument("family", choices=["prism"])
    s.add_argument("n", type=int)

    s = sub.add_parser("tables", parents=[common], help="reproduce the published tables")
    s.add_argument("which", choices=["prisms", "n5", "n6"])
    s.add_argument("--csv", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="golden-data verification harness")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="every check (default)")
    mode.add_argument("--tables", action="store_true", help="prism table and robustness tables")
    mode.add_argument("--sets", action="store_true", help="explicit minimum dominating set lists")
    mode.add_argument("--cross", action="store_true", help="brute force vs DP vs formulas + structure")
    s.add_argument("--max-brute", type=int, default=14)
    s.add_argument("--max-dp", type=int, default=200)
    s.add_argument("--max-struct", type=int, default=30)
    s.add_argument("--verbose", "-v", action="store_true", help="list passing cells too")

    s = sub.add_parser("dot", parents=[common], help="Graphviz DOT export")
    s.add_argument("spec")
    return p


def _emit(out: TextIO, args, payload: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        out.write(text + "\n")


def _cmd_gamma(args, out) -> int:
    g = build_family(args.spec)
    r = solve(g, budget=_budget(args))
    _emit(out, args, {"graph": g.family_tag, "gamma": r.gamma}, f"gamma={r.gamma}")
    return 0


def _cmd_zeta(args, out) -> int:
    g = build_family(args.spec)
    r = solve(g, budget=_budget(args))
    payload = {"graph": g.family_tag, "gamma": r.gamma, "zeta": r.zeta}
    text = f"gamma={r.gamma} zeta={r.zeta}"
    if args.list:
        labeled = [g.format_set(s) for s in r.sets]
        payload["sets"] = labeled
        text += "\n" + "\n".join(labeled)
    _emit(out, args, payload, text)
    return 0


def _cmd_words(args, out) -> int:
    gamma, zeta = count_min_words(args.n)
    payload = {"n": args.n, "gamma": gamma, "zeta": zeta}
    text = f"gamma={gamma} zeta={zeta}"
    if args.list:
        words = enumerate_min_words(args.n)
        payload["words"] = words
        text += "\n" + "\n".join(words)
    _emit(out, args, payload, text)
    return 0


def _cmd_structure(args, out) -> int:
    rep = check_structure(args.n)
    lines = [f"n={rep.n} zeta={rep.zeta} d_words={rep.d_word_count}"]
    for name, ok in rep.checks.items():
        state = "n/a" if ok is None else ("pass" if ok else "FAIL")
        extra = f"  counterexample={rep.counterexamples[name]}" if name in rep.counterexamples else ""
        lines.append(f"  {name:<28} {state}{extra}")
    if rep.anchored_count is not None:
        lines.append(f"  anchored_count={rep.anchored_count}")
    if rep.gap_pair_counts:
        pairs = " ".join(f"{k}:{v}" for k, v in sorted(rep.gap_pair_counts.items()))
        lines.append(f"  size-2 gap letters: {pairs}")
    _emit(out, args, rep.as_dict(), "\n".join(lines))
    return 0 if rep.passed else 1


def _report_table(reports, labels=None) -> str:
    header = ("graph", "gamma", "zeta", "eta", "E", "rho", "lambda2", "SFI", "omega", "RRI", "tau", "LDI")
    rows = [header]
    for i, r in enumerate(reports):
        row = r.csv_row()
        if labels:
            row[0] = labels[i]
        rows.append(tuple(row))
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) if c == 0 else cell.rjust(w) for c, (cell, w) in enumerate(zip(row, widths)))
        for row in rows
    )


def _cmd_indices(args, out) -> int:
    r = composite_report(args.spec, budget=_budget(args))
    if args.csv:
        out.write(reports_to_csv([r]))
    elif args.json:
        out.write(r.to_json() + "\n")
    else:
        lines = [f"{k:<10} {v:.6f}" if isinstance(v, float) else f"{k:<10} {v}" for k, v in r.to_dict().items()]
        out.write("\n".join(lines) + "\n")
    return 0


def _cmd_formula(args, out) -> int:
    f = prism_formula(args.n)
    _emit(out, args, {"n": f.n, "gamma": f.gamma, "zeta": f.zeta, "regime": f.regime},
          f"gamma={f.gamma} zeta={f.zeta}")
    return 0


def _cmd_tables(args, out) -> int:
    if args.which == "prisms":
        rows = []
        for n in sorted(golden.PRISM_TABLE):
            r = solve(build_family(f"prism:{n}"), budget=_budget(args))
            rows.append({"n": n, "gamma": r.gamma, "zeta": r.zeta})
        if args.json:
            out.write(json.dumps(rows, indent=2) + "\n")
        elif args.csv:
            out.write("n,gamma,zeta\n" + "".join(f"{r['n']},{r['gamma']},{r['zeta']}\n" for r in rows))
        else:
            out.write("n      " + " ".join(f"{r['n']:>4}" for r in rows) + "\n")
            out.write("gamma  " + " ".join(f"{r['gamma']:>4}" for r in rows) + "\n")
            out.write("zeta   " + " ".join(f"{r['zeta']:>4}" for r in rows) + "\n")
        return 0
    table = golden.ROBUSTNESS_N5 if args.which == "n5" else golden.ROBUSTNESS_N6
    reports = [composite_report(spec, budget=_budget(args)) for _, spec, _ in table]
    if args.json:
        out.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    elif args.csv:
        out.write(reports_to_csv(reports))
    else:
        out.write(_report_table(reports, [label for label, _, _ in table]) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    rep = DiffReport()
    everything = not (args.tables or args.sets or args.cross)
    if everything or args.tables:
        rep.extend(verify_prism_table())
        rep.extend(verify_robustness_tables())
    if everything or args.sets:
        rep.extend(verify_explicit_sets())
    if everything or args.cross:
        rep.extend(cross_check(args.max_brute, args.max_dp, args.max_struct))
    out.write((rep.to_json() if args.json else rep.to_text(verbose=args.verbose)) + "\n")
    return 0 if rep.passed else 1


def _cmd_dot(args, out) -> int:
    out.write(to_dot(build_family(args.spec)))
    return 0


_COMMANDS = {
    "gamma": _cmd_gamma,
    "zeta": _cmd_zeta,
    "words": _cmd_words,
    "structure": _cmd_structure,
    "indices": _cmd_indices,
    "formula": _cmd_formula,
    "tables": _cmd_tables,
    "verify": _cmd_verify,
    "dot": _cmd_dot,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """Run the CLI; returns 0 on success, 1 on failed verification or runtime error, 2 on usage error."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except (FamilySpecError, ValueError) as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2
    except DomkitError as exc:
        err.write(f"{parser.prog} {args.command}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
