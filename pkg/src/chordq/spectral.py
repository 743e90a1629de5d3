"""Graph matrices, the dense symmetric eigensolver and exact radius comparisons."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import PreconditionError, SolverError
from .exact import (
    Comparison,
    IntPolynomial,
    QuadraticSurd,
    Threshold,
    as_surd,
    char_poly as _char_poly,
    compare_largest_root,
)
from .graph import Graph, is_connected

DEFAULT_TOL = 1e-9
COMPARE_TOL = 1e-6
BOUNDARY_BAND = 3 * COMPARE_TOL


@dataclass(frozen=True)
class SymmetricIntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, r in enumerate(self.rows):
            if len(r) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if r[j] != self.rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.order))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=float).reshape(self.order, self.order)


def _matrix(g: Graph, diag_sign: int, off: int) -> SymmetricIntMatrix:
    rows = []
    for u in range(g.n):
        row = [0] * g.n
        for v in g.neighbors(u):
            row[v] = off
        row[u] = diag_sign * g.degree(u)
        rows.append(tuple(row))
    return SymmetricIntMatrix(tuple(rows))


def adjacency(g: Graph) -> SymmetricIntMatrix:
    return _matrix(g, 0, 1)


def laplacian(g: Graph) -> SymmetricIntMatrix:
    return _matrix(g, 1, -1)


def signless_laplacian(g: Graph) -> SymmetricIntMatrix:
    return _matrix(g, 1, 1)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float
    dominant_vector: Optional[tuple[float, ...]] = field(default=None, compare=False)

    @property
    def largest(self) -> float:
        return self.eigenvalues[0]

    def to_dict(self) -> dict:
        out = {"eigenvalues": list(self.eigenvalues), "tolerance": self.tolerance}
        if self.dominant_vector is not None:
            out["dominant_vector"] = list(self.dominant_vector)
        return out


def _eigh(a: np.ndarray, tol: float, vectors: bool):
    n = a.shape[0]
    w, v, sweeps, off, ok = kernels.jacobi_eigh(a, tol, 100 * max(n, 1), vectors)
    if not ok:
        raise SolverError(f"Jacobi exceeded {100 * n} sweeps", off)
    order = np.argsort(-w, kind="stable")
    return w[order], (v[:, order] if v is not None else None)


def full_spectrum(m: SymmetricIntMatrix, tol: float = DEFAULT_TOL, vectors: bool = False) -> Spectrum:
    """All eigenvalues, sorted descending, each within ``tol``.

    With ``vectors=True`` the eigenvector of the largest eigenvalue is attached,
    sign-normalised so that its entry sum is nonnegative.
    """
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    w, v = _eigh(m.to_numpy(), tol, vectors)
    dom = None
    if vectors and m.order:
        x = v[:, 0]
        if x.sum() < 0:
            x = -x
        dom = tuple(float(t) for t in x / np.linalg.norm(x))
    return Spectrum(tuple(float(t) for t in w), tol, dom)


def _radius(m: SymmetricIntMatrix, tol: float) -> float:
    if m.order < 1:
        raise PreconditionError("graph must have at least one vertex")
    return full_spectrum(m, tol).largest


def q_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return _radius(signless_laplacian(g), tol)


def a_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return _radius(adjacency(g), tol)


def l_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return _radius(laplacian(g), tol)


def perron_vector(g: Graph, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Unit positive eigenvector of Q(g) for q(g); ``g`` must be connected."""
    if g.n < 2:
        raise PreconditionError("perron_vector needs n >= 2")
    if not is_connected(g):
        raise PreconditionError("perron_vector needs a connected graph")
    m = signless_laplacian(g)
    a = m.to_numpy()
    w, v = _eigh(a, tol * 1e-3, True)
    x = v[:, 0]
    x = x / np.linalg.norm(x)
    if x.sum() < 0:
        x = -x
    resid = float(np.linalg.norm(a @ x - w[0] * x))
    if resid > tol or x.min() <= 0:
        raise SolverError("Perron vector not resolved to tolerance", resid)
    return x


def char_poly(m) -> IntPolynomial:
    rows = m.rows if isinstance(m, SymmetricIntMatrix) else m
    return _char_poly(rows)


def radius_verdict(m: SymmetricIntMatrix, threshold: Threshold, numeric: Optional[float] = None,
                   tol: float = COMPARE_TOL) -> tuple[Comparison, bool]:
    """Trichotomy of the largest eigenvalue of ``m`` against ``threshold``.

    Returns ``(verdict, exact_path_taken)``.  Outside the boundary band of
    ``3 * tol`` the numeric eigenvalue decides; inside it the integer
    characteristic polynomial decides via Sturm counts.
    """
    t = as_surd(threshold)
    value = _radius(m, tol) if numeric is None else numeric
    tf = float(t)
    if abs(value - tf) > 3 * tol:
        return Comparison.of(value, tf), False
    return compare_largest_root(char_poly(m).coeffs, t), True


def compare_q_to_int(g: Graph, t: int) -> Comparison:
    return radius_verdict(signless_laplacian(g), t)[0]


def compare_q_to(g: Graph, t: Threshold) -> Comparison:
    return radius_verdict(signless_laplacian(g), t)[0]


def compare_a_to(g: Graph, t: Threshold) -> Comparison:
    return radius_verdict(adjacency(g), t)[0]


def spectra_match(x: Sequence[float], y: Sequence[float], tol: float) -> bool:
    return len(x) == len(y) and all(abs(a - b) <= tol for a, b in zip(sorted(x), sorted(y)))


__all__ = [
    "BOUNDARY_BAND", "COMPARE_TOL", "DEFAULT_TOL", "Comparison", "IntPolynomial",
    "QuadraticSurd", "Spectrum", "SymmetricIntMatrix", "a_radius", "adjacency",
    "char_poly", "compare_a_to", "compare_q_to", "compare_q_to_int", "full_spectrum",
    "l_radius", "laplacian", "perron_vector", "q_radius", "radius_verdict",
    "signless_laplacian", "spectra_match",
]
