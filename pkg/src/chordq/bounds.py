"""Degree-based upper bounds on q(G), the Laplacian order bound, and the
Perron rotation G - vw + uw."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PreconditionError, RotationPreconditionError
from .graph import Graph, add_edge, classify_regularity, complement, is_connected, Neither, remove_edge
from .spectral import DEFAULT_TOL, l_radius, perron_vector


@dataclass(frozen=True)
class BoundReport:
    bound_value: Fraction
    witness: Union[tuple[int], tuple[int, int]]
    equality_case_holds: bool

    def to_dict(self) -> dict:
        return {
            "bound": float(self.bound_value),
            "bound_exact": str(self.bound_value),
            "witness": list(self.witness),
            "equality": self.equality_case_holds,
        }


def _equality_case(g: Graph) -> bool:
    return is_connected(g) and not isinstance(classify_regularity(g), Neither)


def degree_average(g: Graph, u: int) -> Fraction:
    """d(u) + (sum of neighbour degrees) / d(u), exactly."""
    d = g.degree(u)
    return Fraction(d) + Fraction(sum(g.degree(v) for v in g.neighbors(u)), d)


def degree_average_bound(g: Graph) -> BoundReport:
    degs = g.degrees()
    if not degs or min(degs) == 0:
        raise PreconditionError("degree-average bound needs a graph without isolated vertices")
    best, arg = max((degree_average(g, u), -u) for u in range(g.n))
    return BoundReport(best, (-arg,), _equality_case(g))


def edge_degree_sum_bound(g: Graph) -> BoundReport:
    edges = g.edges()
    if not edges:
        raise PreconditionError("edge degree-sum bound needs at least one edge")
    degs = g.degrees()
    best = max(degs[u] + degs[v] for u, v in edges)
    edge = next(e for e in edges if degs[e[0]] + degs[e[1]] == best)
    return BoundReport(Fraction(best), edge, _equality_case(g))


@dataclass(frozen=True)
class LaplacianOrderReport:
    bound: int
    equality_holds: bool
    mu: float

    def to_dict(self) -> dict:
        return {"bound": self.bound, "equality": self.equality_holds, "mu": self.mu}


def laplacian_order_bound(g: Graph, tol: float = DEFAULT_TOL) -> LaplacianOrderReport:
    """mu(G) <= n, with equality exactly when the complement is disconnected."""
    if g.n < 2:
        raise PreconditionError("Laplacian order bound needs n >= 2")
    return LaplacianOrderReport(g.n, not is_connected(complement(g)), l_radius(g, tol))


def perron_rotate(g: Graph, u: int, v: int, w: int, tol: float = DEFAULT_TOL) -> Graph:
    """G - vw + uw, valid when x_u >= x_v for the Q-Perron vector x.

    Ties within ``tol`` are admitted.
    """
    if not all(0 <= z < g.n for z in (u, v, w)):
        raise RotationPreconditionError("vertices", "u, v, w must be vertices of g")
    if u == w:
        raise RotationPreconditionError("uw-nonedge", "u = w, so uw cannot be a non-edge")
    if g.has_edge(u, w):
        raise RotationPreconditionError("uw-nonedge", f"uw = ({u}, {w}) is already an edge")
    if not g.has_edge(v, w):
        raise RotationPreconditionError("vw-edge", f"vw = ({v}, {w}) is not an edge")
    if not is_connected(g):
        raise RotationPreconditionError("connected", "g must be connected")
    x = perron_vector(g, tol)
    if x[u] < x[v] - tol:
        raise RotationPreconditionError(
            "perron-order", f"x_u = {x[u]:.12g} < x_v = {x[v]:.12g}"
        )
    return add_edge(remove_edge(g, v, w), u, w)
