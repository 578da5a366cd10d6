"""Flexibility parameters and composite robustness indices built on the dominion."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields

from .domination import DominionResult, load_profile, min_overlap, solve
from .exceptions import DisconnectedGraphError
from .graph_core import Graph, build_family, is_connected
from .spectra import algebraic_connectivity, vertex_connectivity

CSV_COLUMNS = (
    "graph", "gamma", "zeta", "eta", "cal_e", "rho",
    "lambda2", "sfi", "omega", "rri", "tau", "ldi",
)


@dataclass(frozen=True)
class RobustnessReport:
    family: str
    n_vertices: int
    gamma: int
    zeta: int
    eta: float
    cal_e: float
    rho: float
    p_gamma: float
    kappa_v: int
    cri: float
    lambda2: float
    sfi: float
    omega: float
    rri: float
    tau: int
    ldi: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> "RobustnessReport":
        names = {f.name for f in fields(cls)}
        missing = names - data.keys()
        extra = data.keys() - names
        if missing or extra:
            raise ValueError(f"bad report fields: missing={sorted(missing)} extra={sorted(extra)}")
        return cls(**data)

    def csv_row(self, digits: int | None = 3) -> list[str]:
        row = []
        for col in CSV_COLUMNS:
            value = self.family if col == "graph" else getattr(self, col)
            if isinstance(value, float) and digits is not None:
                value = f"{value:.{digits}f}"
            row.append(str(value))
        return row


def flexibility(gamma: int, zeta: int, n_vertices: int) -> tuple[float, float, float]:
    """Return ``(eta, cal_e, rho)``: ``log2(zeta)/gamma``, ``zeta**(1/gamma)``, ``zeta/|V|``."""
    if gamma < 1 or zeta < 1 or n_vertices < 1:
        raise ValueError("gamma, zeta and n_vertices must be positive")
    return math.log2(zeta) / gamma, zeta ** (1.0 / gamma), zeta / n_vertices


def p_gamma(zeta: int, n_vertices: int, gamma: int) -> float:
    """Fraction of all ``gamma``-subsets that dominate."""
    if not 0 <= gamma <= n_vertices:
        raise ValueError("gamma must lie in [0, n_vertices]")
    return zeta / math.comb(n_vertices, gamma)


def report_from_result(
    g: Graph, result: DominionResult, kappa_v: int, lambda2: float
) -> RobustnessReport:
    eta, cal_e, rho = flexibility(result.gamma, result.zeta, g.n_vertices)
    p = p_gamma(result.zeta, g.n_vertices, result.gamma)
    omega = min_overlap(result)
    tau = load_profile(result, g.n_vertices).tau
    return RobustnessReport(
        family=g.family_tag,
        n_vertices=g.n_vertices,
        gamma=result.gamma,
        zeta=result.zeta,
        eta=eta,
        cal_e=cal_e,
        rho=rho,
        p_gamma=p,
        kappa_v=kappa_v,
        cri=kappa_v * p,
        lambda2=lambda2,
        sfi=lambda2 * eta,
        omega=float(omega),
        rri=float(1 - omega) * cal_e,
        tau=tau,
        ldi=result.zeta / tau,
    )


def composite_report(g: Graph | str, budget: int | None = None) -> RobustnessReport:
    if isinstance(g, str):
        g = build_family(g)
    if not is_connected(g):
        raise DisconnectedGraphError(f"{g.family_tag or 'graph'} is not connected")
    kappa = vertex_connectivity(g) if g.n_vertices > 1 else 0
    return report_from_result(g, solve(g, budget=budget), kappa, algebraic_connectivity(g))


def reports_to_csv(reports: list[RobustnessReport], digits: int | None = 3) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.csv_row(digits))
    return buf.getvalue()
