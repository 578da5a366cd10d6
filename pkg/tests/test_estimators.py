import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from domkit.estimators import DominionCounter, MinimumDominatingSets, RobustnessTransformer
from domkit.exceptions import BudgetExceededError


def test_minimum_dominating_sets():
    est = MinimumDominatingSets().fit("prism:4")
    assert (est.gamma_, est.zeta_, est.tau_) == (2, 4, 1)
    assert est.labeled_sets() == ["{b_0,t_2}", "{b_1,t_3}", "{b_2,t_0}", "{b_3,t_1}"]
    assert est.predict([["b_0", "t_2"], [0, 1], 0b00100100]).tolist() == [True, False, False]
    assert est.load_.sum() == est.gamma_ * est.zeta_


def test_predict_before_fit():
    with pytest.raises(NotFittedError):
        MinimumDominatingSets().predict([[0]])


def test_params_and_clone():
    est = MinimumDominatingSets(budget=10)
    assert est.get_params() == {"budget": 10}
    assert clone(est).budget == 10
    with pytest.raises(BudgetExceededError):
        est.fit("prism:12")


def test_networkx_input():
    est = MinimumDominatingSets().fit(nx.circular_ladder_graph(5))
    assert (est.gamma_, est.zeta_) == (3, 10)


def test_dominion_counter_methods_agree():
    specs = ["prism:5", "prism:10", "house", "cycle:6"]
    auto = DominionCounter().fit_transform(specs)
    brute = DominionCounter(method="brute").fit_transform(specs)
    assert np.array_equal(auto, brute)
    assert auto.tolist() == [[3, 10], [6, 120], [2, 7], [2, 3]]
    with pytest.raises(ValueError):
        DominionCounter(method="ilp").fit(specs)


def test_dominion_counter_scales_on_prisms():
    assert DominionCounter().fit_transform(["prism:30"]).tolist() == [[16, 960]]


def test_robustness_transformer():
    t = RobustnessTransformer(features=["zeta", "ldi", "lambda2"])
    X = t.fit_transform(["prism:3", "cycle:5"])
    assert X.shape == (2, 3)
    assert X[0].tolist() == pytest.approx([9, 3, 2])
    assert t.get_feature_names_out().tolist() == ["zeta", "ldi", "lambda2"]
    with pytest.raises(ValueError):
        RobustnessTransformer(features=["nope"]).fit(["house"])


def test_in_pipeline():
    pipe = make_pipeline(RobustnessTransformer(), StandardScaler())
    out = pipe.fit_transform(["prism:3", "house", "kbipartite:3,3"])
    assert out.shape == (3, len(RobustnessTransformer().get_feature_names_out()))


def test_bad_inputs():
    with pytest.raises(TypeError):
        RobustnessTransformer().fit(42)
    with pytest.raises(ValueError):
        RobustnessTransformer().fit([])
    with pytest.raises(TypeError):
        MinimumDominatingSets().fit(nx.DiGraph([(0, 1)]))
