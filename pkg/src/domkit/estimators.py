"""scikit-learn style wrappers so dominion computations drop into pipelines."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .domination import load_profile, min_overlap, solve
from .indices import CSV_COLUMNS, composite_report
from .prism_words import count_min_words
from .validation import check_budget, check_graph, check_graphs, check_vertex_set

REPORT_FEATURES = tuple(c for c in CSV_COLUMNS if c != "graph") + ("p_gamma", "kappa_v", "cri")


class MinimumDominatingSets(BaseEstimator):
    """Enumerate the minimum dominating sets of one graph.

    ``fit`` takes a single graph (family string, :class:`~domkit.graph_core.Graph`
    or networkx graph).  ``predict`` then tells, for each candidate vertex set,
    whether it is one of the minimum dominating sets.
    """

    def __init__(self, budget=None):
        self.budget = budget

    def fit(self, X, y=None):
        g = check_graph(X)
        result = solve(g, budget=check_budget(self.budget))
        self.graph_ = g
        self.result_ = result
        self.gamma_ = result.gamma
        self.zeta_ = result.zeta
        self.sets_ = list(result.sets)
        profile = load_profile(result, g.n_vertices)
        self.load_ = np.asarray(profile.per_vertex)
        self.tau_ = profile.tau
        self.omega_ = float(min_overlap(result))
        return self

    def predict(self, X):
        check_is_fitted(self, "result_")
        known = set(self.sets_)
        return np.array([check_vertex_set(self.graph_, s) in known for s in X], dtype=bool)

    def labeled_sets(self) -> list[str]:
        check_is_fitted(self, "result_")
        return [self.graph_.format_set(s) for s in self.sets_]


class DominionCounter(TransformerMixin, BaseEstimator):
    """Map graphs to ``[gamma, zeta]`` rows.

    With ``method="auto"`` prism graphs go through the column-word DP, which
    scales far beyond brute force; every other graph is solved exactly by
    subset search.  ``method="brute"`` forces subset search everywhere.
    """

    def __init__(self, method="auto", budget=None):
        self.method = method
        self.budget = budget

    def fit(self, X, y=None):
        if self.method not in ("auto", "brute"):
            raise ValueError(f"method must be 'auto' or 'brute', got {self.method!r}")
        check_graphs(X)
        return self

    def transform(self, X):
        rows = []
        for g in check_graphs(X):
            if self.method == "auto" and g.is_prism():
                rows.append(count_min_words(g.n_vertices // 2))
            else:
                r = solve(g, budget=check_budget(self.budget))
                rows.append((r.gamma, r.zeta))
        return np.array(rows, dtype=object if any(z > 2**62 for _, z in rows) else np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.array(["gamma", "zeta"], dtype=object)


class RobustnessTransformer(TransformerMixin, BaseEstimator):
    """Map connected graphs to rows of robustness indices.

    ``features`` selects and orders columns; the default is every numeric
    report field.
    """

    def __init__(self, features=None, budget=None):
        self.features = features
        self.budget = budget

    def _features(self):
        feats = REPORT_FEATURES if self.features is None else tuple(self.features)
        unknown = set(feats) - set(REPORT_FEATURES)
        if unknown:
            raise ValueError(f"unknown features: {sorted(unknown)}")
        return feats

    def fit(self, X, y=None):
        self._features()
        check_graphs(X)
        return self

    def transform(self, X):
        feats = self._features()
        budget = check_budget(self.budget)
        reports = [composite_report(g, budget=budget) for g in check_graphs(X)]
        return np.array([[float(getattr(r, f)) for f in feats] for r in reports])

    def get_feature_names_out(self, input_features=None):
        return np.array(self._features(), dtype=object)
