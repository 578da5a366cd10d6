import warnings

import networkx as nx
import numpy as np
import pytest

from domkit.exceptions import ConvergenceError
from domkit.graph_core import Graph, build_family
from domkit.spectra import SymMatrix, eigenvalues, laplacian, vertex_connectivity

SPECS = [
    "prism:3", "prism:8", "cycle:5", "path:6", "ladder:3", "complete:6", "star:5",
    "wheel:6", "fan:5", "kbipartite:3,3", "house", "bintree:6", "path:2", "prism:20",
]


@pytest.mark.parametrize("spec, expected", [("cycle:3", [0, 3, 3]), ("path:2", [0, 2])])
def test_small_spectra(spec, expected):
    assert np.allclose(eigenvalues(laplacian(build_family(spec))).eigenvalues, expected, atol=1e-9)


@pytest.mark.parametrize("spec", SPECS)
def test_laplacian_against_numpy(spec):
    g = build_family(spec)
    lap = laplacian(g)
    assert np.array_equal(lap.entries.sum(axis=1), np.zeros(g.n_vertices))
    assert lap.trace == 2 * g.n_edges
    spec_ = eigenvalues(lap)
    ref = np.linalg.eigvalsh(lap.entries)
    assert np.allclose(spec_.eigenvalues, ref, atol=1e-8)
    assert abs(sum(spec_.eigenvalues) - lap.trace) < 1e-8
    assert abs(spec_.eigenvalues[0]) < 1e-9
    assert list(spec_.eigenvalues) == sorted(spec_.eigenvalues)


@pytest.mark.parametrize(
    "spec, lambda2",
    [("path:6", 0.268), ("kbipartite:3,3", 3.0), ("prism:3", 2.0), ("path:5", 0.382),
     ("cycle:5", 1.382), ("wheel:6", 2.382)],
)
def test_fiedler_values(spec, lambda2):
    assert abs(eigenvalues(laplacian(build_family(spec))).algebraic_connectivity - lambda2) < 5e-4


def test_disconnected_has_zero_lambda2():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert abs(eigenvalues(laplacian(g)).eigenvalues[1]) < 1e-9


def test_random_symmetric_matrices():
    rng = np.random.default_rng(3)
    for n in (2, 5, 12):
        a = rng.normal(size=(n, n))
        a = a + a.T
        got = eigenvalues(SymMatrix(n, a)).eigenvalues
        assert np.allclose(got, np.linalg.eigvalsh(a), atol=1e-8)


def test_sweep_cap_raises():
    a = np.array([[1.0, 2.0, 3.0], [2.0, 0.0, 1.0], [3.0, 1.0, 5.0]])
    with pytest.raises(ConvergenceError):
        eigenvalues(SymMatrix(3, a), max_rotations=1)


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        SymMatrix(2, np.array([[0.0, 1.0], [2.0, 0.0]]))


@pytest.mark.parametrize("spec, kappa", [("complete:6", 5), ("path:5", 1), ("prism:3", 3)])
def test_vertex_connectivity_examples(spec, kappa):
    assert vertex_connectivity(build_family(spec)) == kappa


@pytest.mark.parametrize("spec", SPECS)
def test_vertex_connectivity_against_networkx(spec):
    g = build_family(spec)
    kappa = vertex_connectivity(g)
    assert kappa == nx.node_connectivity(g.to_networkx())
    if any(d < g.n_vertices - 1 for d in g.degrees()):
        assert kappa <= min(g.degrees())


def test_vertex_connectivity_disconnected_flagged():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert vertex_connectivity(g) == 0
    assert caught
