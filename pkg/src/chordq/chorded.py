"""Chorded cycles: flow-based detection with certificates, a brute-force
oracle, and the classical Posa / Czipser sufficient conditions.

A chorded cycle exists iff some edge xy admits two internally
vertex-disjoint x-y paths in G - xy; the two paths close into a cycle of
length >= 4 and xy is its chord.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import _pykernels, kernels
from .errors import CapacityError, PreconditionError
from .graph import Graph

BRUTE_FORCE_MAX_ORDER = 12


@dataclass(frozen=True)
class ChordCertificate:
    cycle: tuple[int, ...]
    chord: tuple[int, int]

    def to_dict(self) -> dict:
        return {"cycle": list(self.cycle), "chord": list(self.chord)}


def normalize(cycle: Sequence[int], chord: tuple[int, int]) -> ChordCertificate:
    """Rotate the smallest vertex to the front, oriented toward its smaller neighbour."""
    cyc = list(cycle)
    k = cyc.index(min(cyc))
    cyc = cyc[k:] + cyc[:k]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    x, y = chord
    return ChordCertificate(tuple(cyc), (min(x, y), max(x, y)))


def verify_certificate(g: Graph, cert: ChordCertificate) -> bool:
    cyc = cert.cycle
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    if any(not (0 <= v < g.n) for v in cyc):
        return False
    if not all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
        return False
    x, y = cert.chord
    if x == y or x not in cyc or y not in cyc or not g.has_edge(x, y):
        return False
    i, j = cyc.index(x), cyc.index(y)
    return (i - j) % k not in (1, k - 1)


def find_chorded_cycle(g: Graph) -> Optional[ChordCertificate]:
    """First certificate over edges in lexicographic order, or None."""
    rows = g.adj
    deg = g.degrees()
    for x, y in g.edges():
        if deg[x] < 3 or deg[y] < 3:
            continue
        paths = _pykernels.disjoint_paths(rows, g.n, x, y)
        if paths is None:
            continue
        p1, p2 = paths
        return normalize(p1 + p2[-2:0:-1], (x, y))
    return None


def has_chorded_cycle(g: Graph) -> bool:
    """Existence verdict only, from the selected kernel backend."""
    return kernels.chorded_flow(g.adj, g.n)


def brute_force_chorded(g: Graph) -> Optional[ChordCertificate]:
    """Enumerate cycles by DFS and return the first one that has a chord."""
    if g.n > BRUTE_FORCE_MAX_ORDER:
        raise CapacityError(f"brute-force cycle enumeration limited to n <= {BRUTE_FORCE_MAX_ORDER}")
    cycle = _pykernels.brute_chorded_cycle(g.adj, g.n)
    if cycle is None:
        return None
    k = len(cycle)
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1) and g.has_edge(cycle[i], cycle[j]):
                return normalize(cycle, (cycle[i], cycle[j]))
    raise AssertionError("brute-force cycle reported without a chord")


def posa_hypothesis(g: Graph) -> bool:
    """At least 2n - 3 edges (meaningful for n >= 4)."""
    if g.n < 4:
        raise PreconditionError("Posa's condition needs n >= 4")
    return g.num_edges() >= 2 * g.n - 3


def czipser_hypothesis(g: Graph) -> bool:
    """Minimum degree at least 3."""
    return g.n > 0 and min(g.degrees()) >= 3
