"""Laplacian spectra by classical Jacobi rotation, and exhaustive vertex connectivity."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exceptions import ConvergenceError
from .graph_core import Graph, is_connected, mask_of

OFF_DIAGONAL_TOL = 1e-10


@dataclass(frozen=True)
class SymMatrix:
    order: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.shape != (self.order, self.order):
            raise ValueError(f"expected {self.order}x{self.order} matrix, got {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    rotations: int = 0

    @property
    def algebraic_connectivity(self) -> float:
        return self.eigenvalues[1] if len(self.eigenvalues) > 1 else 0.0


def laplacian(g: Graph) -> SymMatrix:
    n = g.n_vertices
    m = np.zeros((n, n))
    for u, v in g.edges():
        m[u, v] = m[v, u] = -1.0
    m[np.diag_indices(n)] = g.degrees()
    return SymMatrix(n, m)


def eigenvalues(m: SymMatrix, tol: float = OFF_DIAGONAL_TOL, max_rotations: int | None = None) -> Spectrum:
    """All eigenvalues of a symmetric matrix, ascending.

    Each step zeroes the largest off-diagonal entry with a plane rotation,
    until the off-diagonal Frobenius norm drops to ``tol``.  The number of
    rotations is capped at ``100 * order**2``.
    """
    a = np.array(m.entries, dtype=float)
    n = m.order
    if n == 1:
        return Spectrum((float(a[0, 0]),))
    cap = 100 * n * n if max_rotations is None else max_rotations
    iu = np.triu_indices(n, 1)
    rotations = 0
    while True:
        off = a[iu]
        norm = math.sqrt(2.0 * float(off @ off))
        if norm <= tol:
            break
        if rotations >= cap:
            raise ConvergenceError(
                f"Jacobi did not converge after {cap} rotations (off-diagonal norm {norm:.3e})"
            )
        k = int(np.argmax(np.abs(off)))
        p, q = int(iu[0][k]), int(iu[1][k])
        apq = a[p, q]
        theta = (a[q, q] - a[p, p]) / (2.0 * apq)
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
        c = 1.0 / math.sqrt(t * t + 1.0)
        s = t * c
        col_p = a[:, p].copy()
        col_q = a[:, q].copy()
        a[:, p] = c * col_p - s * col_q
        a[:, q] = s * col_p + c * col_q
        a[p, :] = a[:, p]
        a[q, :] = a[:, q]
        a[p, p] = col_p[p] - t * apq
        a[q, q] = col_q[q] + t * apq
        a[p, q] = a[q, p] = 0.0
        rotations += 1
    return Spectrum(tuple(sorted(float(x) for x in np.diag(a))), rotations)


def algebraic_connectivity(g: Graph) -> float:
    return eigenvalues(laplacian(g)).algebraic_connectivity


def vertex_connectivity(g: Graph) -> int:
    """Fewest vertex deletions that disconnect ``g`` (``n - 1`` for complete graphs).

    Searches deletion sets by increasing size up to the minimum degree.
    A disconnected input yields 0 with a warning.
    """
    n = g.n_vertices
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        warnings.warn(f"{g.family_tag or 'graph'} is disconnected; vertex connectivity is 0")
        return 0
    degrees = g.degrees()
    if all(d == n - 1 for d in degrees):
        return n - 1
    delta = min(degrees)
    for size in range(1, delta + 1):
        for cut in combinations(range(n), size):
            if not is_connected(g, mask_of(cut)):
                return size
    return delta
