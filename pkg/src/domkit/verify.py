"""Golden-data harness: tables and set lists vs brute force, word DP and closed forms."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from . import golden
from .domination import solve
from .formulas import gamma_formula, zeta_formula
from .graph_core import build_family
from .indices import composite_report
from .prism_words import check_structure, count_min_words

TABLE_TOL = 5e-4


@dataclass(frozen=True)
class Cell:
    section: str
    key: str
    expected: Any
    actual: Any
    tolerance: Optional[float]
    passed: bool


@dataclass
class DiffReport:
    cells: list[Cell] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.passed]

    def add(self, section: str, key: str, expected, actual, tolerance: Optional[float] = None) -> Cell:
        if tolerance is None:
            ok = expected == actual
        else:
            ok = abs(float(expected) - float(actual)) <= tolerance
        cell = Cell(section, key, expected, actual, tolerance, bool(ok))
        self.cells.append(cell)
        return cell

    def extend(self, other: "DiffReport") -> "DiffReport":
        self.cells.extend(other.cells)
        return self

    def to_json(self) -> str:
        payload = {
            "passed": self.passed,
            "n_cells": len(self.cells),
            "n_failed": len(self.failures),
            "cells": [asdict(c) for c in self.cells],
        }
        return json.dumps(payload, indent=2, sort_keys=True, default=str)

    def to_text(self, verbose: bool = False) -> str:
        lines = []
        for c in self.cells:
            if c.passed and not verbose:
                continue
            mark = "ok  " if c.passed else "FAIL"
            tol = "exact" if c.tolerance is None else f"tol={c.tolerance:g}"
            lines.append(
                f"{mark} {c.section:<10} {c.key:<28} expected={c.expected!s:<12} "
                f"actual={c.actual!s:<12} {tol}"
            )
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"{status}: {len(self.cells) - len(self.failures)}/{len(self.cells)} cells passed")
        return "\n".join(lines)


def verify_prism_table(expected: Optional[dict[int, tuple[int, int]]] = None) -> DiffReport:
    """One cell per (n, quantity); it passes when all three engines agree with the table."""
    expected = golden.PRISM_TABLE if expected is None else expected
    rep = DiffReport()
    for n, (gamma, zeta) in sorted(expected.items()):
        brute = solve(build_family(f"prism:{n}"))
        dp = count_min_words(n)
        engines = {
            "gamma": {"brute": brute.gamma, "dp": dp[0], "formula": gamma_formula(n)},
            "zeta": {"brute": brute.zeta, "dp": dp[1], "formula": zeta_formula(n)},
        }
        for name, want in (("gamma", gamma), ("zeta", zeta)):
            got = engines[name]
            actual = got["brute"] if len(set(got.values())) == 1 else got
            rep.add("table1", f"n={n} {name}", want, actual)
    return rep


def verify_explicit_sets(expected: Optional[dict[int, list[str]]] = None) -> DiffReport:
    expected = golden.EXPLICIT_SETS if expected is None else expected
    rep = DiffReport()
    for n, listed in sorted(expected.items()):
        g = build_family(f"prism:{n}")
        got = sorted(g.format_set(s) for s in solve(g).sets)
        rep.add("sets", f"n={n}", sorted(listed), got)
    return rep


def verify_robustness_tables(tol: float = TABLE_TOL) -> DiffReport:
    rep = DiffReport()
    for table, rows in (("table2", golden.ROBUSTNESS_N5), ("table3", golden.ROBUSTNESS_N6)):
        for label, spec, values in rows:
            r = composite_report(spec)
            for col, want in zip(golden.ROBUSTNESS_COLUMNS, values):
                got = getattr(r, col)
                exact = col in golden.EXACT_COLUMNS
                rep.add(table, f"{label} {col}", want, got, None if exact else tol)
    return rep


def cross_check(max_brute_n: int = 14, max_dp_n: int = 200, max_structure_n: int = 30) -> DiffReport:
    """Brute force vs DP, DP vs closed forms, and the structural rule suite.

    Structural checks enumerate every minimum word, which grows like ``n**3``
    in the quadratic regime, so they run only up to ``max_structure_n``.
    """
    if not 3 <= max_brute_n <= 15:
        raise ValueError("max_brute_n must lie in 3..15")
    if max_dp_n > 200:
        raise ValueError("max_dp_n must be <= 200")
    rep = DiffReport()
    dp_cache: dict[int, tuple[int, int]] = {}

    def dp(n: int) -> tuple[int, int]:
        if n not in dp_cache:
            dp_cache[n] = count_min_words(n)
        return dp_cache[n]

    for n in range(3, max_brute_n + 1):
        r = solve(build_family(f"prism:{n}"))
        rep.add("brute-dp", f"n={n}", (r.gamma, r.zeta), dp(n))
    for n in range(3, max_dp_n + 1):
        rep.add("dp-formula", f"n={n}", (gamma_formula(n), zeta_formula(n)), dp(n))
    for n in range(3, min(max_dp_n, max_structure_n) + 1):
        s = check_structure(n)
        actual = "pass" if s.passed else "fail: " + ", ".join(
            f"{k}[{s.counterexamples.get(k, '')}]" for k in s.failures
        )
        rep.add("structure", f"n={n}", "pass", actual)
    return rep


def verify_all(max_brute_n: int = 14, max_dp_n: int = 200, max_structure_n: int = 30) -> DiffReport:
    rep = DiffReport()
    rep.extend(verify_prism_table())
    rep.extend(verify_explicit_sets())
    rep.extend(verify_robustness_tables())
    rep.extend(cross_check(max_brute_n, max_dp_n, max_structure_n))
    return rep
