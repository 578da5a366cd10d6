"""Closed forms for the domination number and dominion of prism graphs."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PrismFormulaResult:
    n: int
    gamma: int
    zeta: int
    regime: str  # mod0, odd, mod2, exceptional3 or exceptional6


def _check(n: int) -> None:
    if n < 3:
        raise ValueError(f"prism parameter must be >= 3, got {n}")


def gamma_formula(n: int) -> int:
    _check(n)
    r = n % 4
    if r == 0:
        return n // 2
    if r == 2:
        return n // 2 + 1
    return (n + 1) // 2


def regime(n: int) -> str:
    _check(n)
    if n == 3:
        return "exceptional3"
    if n == 6:
        return "exceptional6"
    if n % 4 == 0:
        return "mod0"
    if n % 2 == 1:
        return "odd"
    return "mod2"


def zeta_formula(n: int) -> int:
    # exceptions first, then congruence dispatch
    kind = regime(n)
    if kind == "exceptional3":
        return 9
    if kind == "exceptional6":
        return 51
    if kind == "mod0":
        return 4
    if kind == "odd":
        return 2 * n
    return n * (n + 2)


def prism_formula(n: int) -> PrismFormulaResult:
    return PrismFormulaResult(n, gamma_formula(n), zeta_formula(n), regime(n))
