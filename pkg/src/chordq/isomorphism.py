"""Isomorphism testing for small graphs by refinement plus backtracking."""

from __future__ import annotations

from typing import Optional

from .errors import CapacityError
from .graph import Graph, bits

MAX_ORDER = 12


def _refine(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Joint colour refinement started from degrees.

    Colours are canonical across both graphs, so differing colour histograms
    prove non-isomorphism.
    """
    cg, ch = g.degrees(), h.degrees()
    while True:
        sig_g = [(cg[u], tuple(sorted(cg[v] for v in bits(g.adj[u])))) for u in range(g.n)]
        sig_h = [(ch[u], tuple(sorted(ch[v] for v in bits(h.adj[u])))) for u in range(h.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
        ng = [palette[s] for s in sig_g]
        nh = [palette[s] for s in sig_h]
        if len(set(ng)) == len(set(cg)) and len(set(nh)) == len(set(ch)):
            return ng, nh
        cg, ch = ng, nh


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or None."""
    if g.n > MAX_ORDER or h.n > MAX_ORDER:
        raise CapacityError(f"isomorphism testing limited to n <= {MAX_ORDER}")
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, ch = _refine(g, h)
    if sorted(cg) != sorted(ch):
        return None
    n = g.n
    # rarest colours first, then most-constrained by already-placed neighbours
    order = sorted(range(n), key=lambda u: (cg.count(cg[u]), -g.degree(u), u))
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(ch[v], []).append(v)
    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        u = order[i]
        for v in by_colour[cg[u]]:
            if used >> v & 1:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if g.has_edge(u, w) != h.has_edge(v, phi[w]):
                    ok = False
                    break
            if not ok:
                continue
            phi[u] = v
            used |= 1 << v
            if extend(i + 1):
                return True
            used &= ~(1 << v)
            phi[u] = -1
        return False

    return list(phi) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
