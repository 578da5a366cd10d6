"""Exact domination numbers, dominions and robustness indices for prisms and small graphs."""

from .domination import DominionResult, is_dominating, load_profile, min_overlap, solve
from .estimators import DominionCounter, MinimumDominatingSets, RobustnessTransformer
from .formulas import gamma_formula, prism_formula, zeta_formula
from .graph_core import Graph, build_family, closed_neighborhood, parse_family, to_dot
from .indices import RobustnessReport, composite_report, flexibility, p_gamma
from .prism_words import (
    check_structure,
    count_min_words,
    decode,
    encode,
    end_set,
    enumerate_min_words,
    gap_profile,
    rotate,
    satisfies_constraints,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "DominionCounter",
    "DominionResult",
    "Graph",
    "MinimumDominatingSets",
    "RobustnessReport",
    "RobustnessTransformer",
    "build_family",
    "check_structure",
    "closed_neighborhood",
    "composite_report",
    "count_min_words",
    "decode",
    "encode",
    "end_set",
    "enumerate_min_words",
    "flexibility",
    "gamma_formula",
    "gap_profile",
    "is_dominating",
    "load_profile",
    "min_overlap",
    "p_gamma",
    "parse_family",
    "prism_formula",
    "rotate",
    "satisfies_constraints",
    "solve",
    "to_dot",
    "weight",
    "zeta_formula",
]
