"""Named graph families, equitable partitions and quotient matrices.

Canonical labelings (stable; graph6 snapshots depend on them):

* ``Star(n)``: centre 0, leaves 1..n-1.
* ``CompleteBipartite(a, b)``: side of size ``a`` is 0..a-1.
* ``F(n, c)``: hub 0, matched leaf pairs (1,2), (3,4), ..., (2c-1, 2c), then
  the lone leaves 2c+1..n-1.  ``Fmax(n)`` is ``F(n, (n-1)//2)``.
* ``H(n, a1, a2, b1, b2)``: triangle u=0, v=1, w=2; then u's a1 pendants,
  u's a2 pendant triangles (consecutive pairs), v's b1 pendants, v's b2
  pendant triangles.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import FamilyParameterError, PreconditionError, SolverError
from .exact import QuadraticSurd
from .graph import Graph, complete_bipartite_graph, star_graph
from .spectral import signless_laplacian


@dataclass(frozen=True)
class Star:
    n: int

    def __str__(self) -> str:
        return f"Star:{self.n}"


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def __str__(self) -> str:
        return f"Kb:{self.a},{self.b}"


@dataclass(frozen=True)
class F:
    n: int
    c: int

    def __str__(self) -> str:
        return f"F:n={self.n},c={self.c}"


@dataclass(frozen=True)
class Fmax:
    n: int

    def __str__(self) -> str:
        return f"Fmax:{self.n}"


@dataclass(frozen=True)
class H:
    n: int
    a1: int
    a2: int
    b1: int
    b2: int

    def __str__(self) -> str:
        return f"H:n={self.n},a1={self.a1},a2={self.a2},b1={self.b1},b2={self.b2}"


FamilySpec = Union[Star, CompleteBipartite, F, Fmax, H]


def validate(spec: FamilySpec) -> None:
    if isinstance(spec, Star):
        if spec.n < 2:
            raise FamilyParameterError(f"Star needs n >= 2, got n={spec.n}")
    elif isinstance(spec, CompleteBipartite):
        if spec.a < 1 or spec.b < 1:
            raise FamilyParameterError(f"K_(a,b) needs a, b >= 1, got a={spec.a}, b={spec.b}")
    elif isinstance(spec, (F, Fmax)):
        if spec.n < 3:
            raise FamilyParameterError(f"F needs n >= 3, got n={spec.n}")
        if isinstance(spec, F) and not 0 <= spec.c <= (spec.n - 1) // 2:
            raise FamilyParameterError(
                f"F needs 0 <= c <= floor((n-1)/2) = {(spec.n - 1) // 2}, got c={spec.c}"
            )
    elif isinstance(spec, H):
        if min(spec.a1, spec.a2, spec.b1, spec.b2) < 0:
            raise FamilyParameterError("H parameters must be nonnegative")
        if spec.a1 + spec.a2 < 1:
            raise FamilyParameterError("H needs a1 + a2 >= 1")
        if spec.b1 + spec.b2 < 1:
            raise FamilyParameterError("H needs b1 + b2 >= 1")
        if spec.n != 3 + spec.a1 + 2 * spec.a2 + spec.b1 + 2 * spec.b2:
            raise FamilyParameterError(
                f"H needs n = 3 + a1 + 2*a2 + b1 + 2*b2 "
                f"= {3 + spec.a1 + 2 * spec.a2 + spec.b1 + 2 * spec.b2}, got n={spec.n}"
            )
    else:
        raise TypeError(f"unknown family spec {spec!r}")


def construct(spec: FamilySpec) -> Graph:
    validate(spec)
    if isinstance(spec, Star):
        return star_graph(spec.n)
    if isinstance(spec, CompleteBipartite):
        return complete_bipartite_graph(spec.a, spec.b)
    if isinstance(spec, Fmax):
        return construct(F(spec.n, (spec.n - 1) // 2))
    if isinstance(spec, F):
        edges = [(0, v) for v in range(1, spec.n)]
        edges += [(2 * i + 1, 2 * i + 2) for i in range(spec.c)]
        return Graph.from_edges(spec.n, edges)
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for hub, pend, tri in ((0, spec.a1, spec.a2), (1, spec.b1, spec.b2)):
        for _ in range(pend):
            edges.append((hub, nxt))
            nxt += 1
        for _ in range(tri):
            edges += [(hub, nxt), (hub, nxt + 1), (nxt, nxt + 1)]
            nxt += 2
    return Graph.from_edges(spec.n, edges)


def enumerate_H_family(n: int) -> list[H]:
    """Every (a1, a2, b1, b2) with a1+a2 >= 1, b1+b2 >= 1 and n = 3+a1+2a2+b1+2b2.

    Mirror-image tuples (u and v swapped) are both listed.
    """
    if n < 5:
        raise FamilyParameterError(f"the H family is defined for n >= 5, got n={n}")
    out = []
    rest = n - 3
    for a2 in range(rest // 2 + 1):
        for a1 in range(rest - 2 * a2 + 1):
            if a1 + a2 < 1:
                continue
            left = rest - a1 - 2 * a2
            for b2 in range(left // 2 + 1):
                b1 = left - 2 * b2
                if b1 + b2 >= 1:
                    out.append(H(n, a1, a2, b1, b2))
    return out


# --- partitions and quotients ---------------------------------------------

@dataclass(frozen=True)
class VertexPartition:
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Sequence[Sequence[int]]) -> "VertexPartition":
        return cls(tuple(tuple(c) for c in cells if len(c)))

    def check(self, n: int) -> None:
        seen = [v for c in self.cells for v in c]
        if any(len(c) == 0 for c in self.cells):
            raise PreconditionError("partition cells must be nonempty")
        if sorted(seen) != list(range(n)):
            raise PreconditionError("cells must partition the vertex set 0..n-1")


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.entries for x in r)

    def int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("quotient matrix has non-integer entries")
        return [[int(x) for x in r] for r in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.entries]).reshape(self.order, self.order)


def _block_row_sums(g: Graph, p: VertexPartition) -> list[list[list[int]]]:
    q = signless_laplacian(g)
    return [[[sum(q[u, v] for v in cj) for u in ci] for cj in p.cells] for ci in p.cells]


def is_equitable(g: Graph, p: VertexPartition) -> bool:
    p.check(g.n)
    return all(len(set(sums)) == 1 for row in _block_row_sums(g, p) for sums in row)


def quotient_matrix(g: Graph, p: VertexPartition) -> QuotientMatrix:
    p.check(g.n)
    blocks = _block_row_sums(g, p)
    return QuotientMatrix(tuple(
        tuple(Fraction(sum(sums), len(ci)) for sums in row)
        for row, ci in zip(blocks, p.cells)
    ))


def canonical_partition(spec: FamilySpec) -> VertexPartition:
    """The equitable partition that matches each family's canonical labeling."""
    validate(spec)
    if isinstance(spec, Star):
        return VertexPartition.of([[0], range(1, spec.n)])
    if isinstance(spec, CompleteBipartite):
        return VertexPartition.of([range(spec.a), range(spec.a, spec.a + spec.b)])
    if isinstance(spec, Fmax):
        spec = F(spec.n, (spec.n - 1) // 2)
    if isinstance(spec, F):
        return VertexPartition.of([[0], range(1, 2 * spec.c + 1), range(2 * spec.c + 1, spec.n)])
    cells = [[0], [1], [2]]
    nxt = 3
    for size in (spec.a1, 2 * spec.a2, spec.b1, 2 * spec.b2):
        cells.append(list(range(nxt, nxt + size)))
        nxt += size
    return VertexPartition.of(cells)


def quotient_radius(b: QuotientMatrix, tol: float = 1e-12, max_iter: int = 1_000_000) -> float:
    """Largest eigenvalue of a nonnegative irreducible matrix.

    Power iteration from the all-ones vector, stopped when the Collatz-Wielandt
    bracket ``min (Bx)_i/x_i <= r <= max (Bx)_i/x_i`` is narrower than ``tol``.
    A diagonal shift keeps the iteration primitive without moving the bracket.
    """
    a = b.to_numpy()
    if (a < 0).any():
        raise PreconditionError("quotient_radius needs a nonnegative matrix")
    m = a.shape[0]
    if m == 1:
        return float(a[0, 0])
    shift = 1.0
    s = a + shift * np.eye(m)
    x = np.ones(m)
    gap = math.inf
    for _ in range(max_iter):
        y = s @ x
        ratios = y / x
        lo, hi = ratios.min(), ratios.max()
        gap = hi - lo
        if gap <= tol:
            return float((lo + hi) / 2 - shift)
        x = y / np.linalg.norm(y)
        if (x <= 0).any():
            raise SolverError("power iteration left the positive cone", float(gap))
    raise SolverError("power iteration did not converge", float(gap))


# --- closed forms ----------------------------------------------------------

def fn_threshold(n: int) -> QuadraticSurd:
    """q(F_n) as an exact quadratic surd."""
    if n < 3:
        raise FamilyParameterError(f"q(F_n) closed form needs n >= 3, got n={n}")
    if n % 2:
        return QuadraticSurd.make(Fraction(n + 2, 2), Fraction(1, 2), (n - 2) ** 2 + 8)
    return QuadraticSurd.make(Fraction(n + 1, 2), Fraction(1, 2), (n - 1) ** 2 + 8)


def q_Fn_closed_form(n: int) -> float:
    if n < 3:
        raise FamilyParameterError(f"q(F_n) closed form needs n >= 3, got n={n}")
    if n % 2:
        return (n + 2 + math.sqrt((n - 2) ** 2 + 8)) / 2
    return (n + 1 + math.sqrt((n - 1) ** 2 + 8)) / 2


def h0a10_spec(n: int) -> H:
    """H(n; 0, (n-4)/2, 1, 0) for even n >= 6."""
    if n < 6 or n % 2:
        raise FamilyParameterError(f"needs even n >= 6, got n={n}")
    return H(n, 0, (n - 4) // 2, 1, 0)


def h0a10_partition(n: int) -> VertexPartition:
    """Cells {u}, V1 (triangle vertices at u), {w}, {v}, {v'}."""
    spec = h0a10_spec(n)
    return VertexPartition.of([[0], range(3, 3 + 2 * spec.a2), [2], [1], [n - 1]])


def h0a10_quintic(n: int) -> tuple[int, ...]:
    """Coefficients of the quintic whose largest root is q(H(n; 0, (n-4)/2, 1, 0))."""
    return (1, -(n + 7), 8 * n + 11, -(21 * n - 11), 21 * n - 32, 12 - 6 * n)


# --- spec strings ----------------------------------------------------------

_KEYS = {
    "Star": ("n",), "S": ("n",),
    "Kb": ("a", "b"), "K": ("a", "b"),
    "F": ("n", "c"),
    "Fmax": ("n",), "Fn": ("n",),
    "H": ("n", "a1", "a2", "b1", "b2"),
}


def parse_family(text: str) -> FamilySpec:
    """Parse strings such as ``F:n=9,c=3``, ``F:5,2``, ``Kb:2,7``, ``Fmax:7``,
    ``Star:5`` or ``H:n=8,a1=0,a2=1,b1=1,b2=1``."""
    m = re.fullmatch(r"\s*([A-Za-z][A-Za-z0-9]*)\s*:\s*(.*?)\s*", text)
    if not m or m.group(1) not in _KEYS:
        raise FamilyParameterError(f"unrecognised family spec {text!r}")
    name, body = m.groups()
    keys = _KEYS[name]
    values: dict[str, int] = {}
    parts = [p.strip() for p in body.split(",")] if body else []
    for i, part in enumerate(parts):
        if "=" in part:
            k, _, v = part.partition("=")
            k = k.strip()
        else:
            if i >= len(keys):
                raise FamilyParameterError(f"too many parameters in {text!r}")
            k, v = keys[i], part
        if k not in keys:
            raise FamilyParameterError(f"unknown parameter {k!r} for family {name}")
        try:
            values[k] = int(v)
        except ValueError:
            raise FamilyParameterError(f"parameter {k} must be an integer, got {v!r}") from None
    if name == "H" and "n" not in values and all(k in values for k in keys[1:]):
        values["n"] = 3 + values["a1"] + 2 * values["a2"] + values["b1"] + 2 * values["b2"]
    missing = [k for k in keys if k not in values]
    if missing:
        raise FamilyParameterError(f"missing parameters {missing} in {text!r}")
    args = [values[k] for k in keys]
    cls = {"Star": Star, "S": Star, "Kb": CompleteBipartite, "K": CompleteBipartite,
           "F": F, "Fmax": Fmax, "Fn": Fmax, "H": H}[name]
    spec = cls(*args)
    validate(spec)
    return spec
