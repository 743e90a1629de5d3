"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module, which is
preferred at import time when it has been built.  Adjacency is passed as a
sequence of int bitrows.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Optional, Sequence

import numpy as np

from .errors import SolverError

_EPS = np.finfo(float).eps


def _offnorm(a: np.ndarray) -> float:
    upper = np.triu(a, 1)
    return math.sqrt(2.0 * float(np.sum(upper * upper)))


def jacobi_eigh(a, tol: float, max_sweeps: int, vectors: bool):
    """Cyclic Jacobi on a dense symmetric matrix.

    Returns ``(diagonal, V or None, sweeps, offnorm, converged)``; eigenvalues
    come out unsorted.  The Frobenius norm of the remaining off-diagonal part
    bounds the eigenvalue error.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n) if vectors else None
    target = max(tol * 1e-2, 8 * _EPS * math.sqrt(float(np.sum(a * a))))
    off = _offnorm(a)
    sweeps = 0
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        sweeps += 1
        off = _offnorm(a)
    return np.diag(a).copy(), v, sweeps, off, off <= target


def disjoint_paths(rows: Sequence[int], n: int, x: int, y: int) -> Optional[list[list[int]]]:
    """Two internally vertex-disjoint x-y paths avoiding the edge xy, or None.

    Unit-capacity max flow on the vertex-split digraph: vertex v becomes
    ``in = 2v`` and ``out = 2v + 1``; source is out(x), sink is in(y).
    """
    cap: dict[int, dict[int, int]] = {i: {} for i in range(2 * n)}

    def arc(a: int, b: int) -> None:
        cap[a][b] = 1
        cap[b].setdefault(a, 0)

    for v in range(n):
        if v != x and v != y:
            arc(2 * v, 2 * v + 1)
    for a in range(n):
        r = rows[a]
        while r:
            low = r & -r
            b = low.bit_length() - 1
            r ^= low
            if (a == x and b == y) or (a == y and b == x):
                continue
            arc(2 * a + 1, 2 * b)
    orig = {a: dict(cap[a]) for a in cap}
    s, t = 2 * x + 1, 2 * y
    for _ in range(2):
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            return None
        w = t
        while w != s:
            u = parent[w]
            cap[u][w] -= 1
            cap[w][u] += 1
            w = u
    paths = []
    used = set()
    for _ in range(2):
        path = [x]
        node = s
        while node != t:
            w = next(
                w for w, c0 in orig[node].items()
                if c0 > 0 and cap[node][w] == 0 and (node, w) not in used
            )
            used.add((node, w))
            node = w
            if node % 2 == 0:
                path.append(node // 2)
                if node != t:
                    used.add((node, node + 1))
                    node += 1
        paths.append(path)
    return paths


def chorded_flow(rows: Sequence[int], n: int) -> bool:
    deg = [r.bit_count() for r in rows]
    for x in range(n):
        if deg[x] < 3:
            continue
        r = rows[x] >> (x + 1)
        y = x
        while r:
            step = (r & -r).bit_length()
            y += step
            r >>= step
            if deg[y] >= 3 and disjoint_paths(rows, n, x, y) is not None:
                return True
    return False


def brute_chorded_cycle(rows: Sequence[int], n: int) -> Optional[list[int]]:
    """First cycle (DFS order, smallest vertex first) that has a chord."""
    full = (1 << n) - 1
    for s in range(n):
        higher = full & ~((1 << (s + 1)) - 1)
        path = [s]
        pset = 1 << s
        cand = [rows[s] & higher]
        while cand:
            c = cand[-1]
            if not c:
                cand.pop()
                pset &= ~(1 << path.pop())
                continue
            low = c & -c
            cand[-1] = c ^ low
            w = low.bit_length() - 1
            path.append(w)
            pset |= low
            if len(path) >= 4 and rows[w] >> s & 1:
                inner = sum((rows[u] & pset).bit_count() for u in path) // 2
                if inner > len(path):
                    return list(path)
            cand.append(rows[w] & higher & ~pset)
    return None


def brute_chorded(rows: Sequence[int], n: int) -> bool:
    return brute_chorded_cycle(rows, n) is not None


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _decode(mask: int, n: int, pairs) -> list[int]:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return rows


def scan_spectral(n: int, lo: int, hi: int, kind: int, threshold: float, band: float,
                  prune: bool, tol: float, max_sweeps: int):
    """Scan masks ``[lo, hi)`` for chord-free graphs whose radius reaches
    ``threshold - band``.

    ``kind`` 0 selects the signless Laplacian, 1 the adjacency matrix.
    Returns ``(counts, candidates)`` with candidates as ``(mask, radius)``.
    """
    pairs = _pairs(n)
    pruned = posa = czipser = flow = chord_free = 0
    candidates = []
    for mask in range(lo, hi):
        rows = _decode(mask, n, pairs)
        deg = [r.bit_count() for r in rows]
        m = sum(deg) // 2
        if prune:
            best = 0
            mm = mask
            k = 0
            while mm:
                if mm & 1:
                    i, j = pairs[k]
                    if deg[i] + deg[j] > best:
                        best = deg[i] + deg[j]
                mm >>= 1
                k += 1
            if best < threshold:
                pruned += 1
                continue
        if n >= 4 and m >= 2 * n - 3:
            posa += 1
            continue
        if n and min(deg) >= 3:
            czipser += 1
            continue
        if chorded_flow(rows, n):
            flow += 1
            continue
        chord_free += 1
        a = np.zeros((n, n))
        for i, j in pairs:
            if rows[i] >> j & 1:
                a[i, j] = a[j, i] = 1.0
        if kind == 0:
            a[np.diag_indices(n)] = deg
        w, _, sweeps, off, ok = jacobi_eigh(a, tol, max_sweeps, False)
        if not ok:
            raise SolverError(f"Jacobi did not converge on mask {mask}", off)
        value = float(np.max(w)) if n else 0.0
        if value >= threshold - band:
            candidates.append((mask, value))
    counts = {
        "examined": hi - lo,
        "pruned_edge_bound": pruned,
        "posa_shortcut": posa,
        "czipser_shortcut": czipser,
        "flow_chorded": flow,
        "chord_free": chord_free,
    }
    return counts, candidates


def scan_chords(n: int, lo: int, hi: int):
    """Flow detector vs brute-force oracle, plus the Posa/Czipser predicates."""
    pairs = _pairs(n)
    flow_yes = brute_yes = posa_hyp = czipser_hyp = 0
    disagreements, posa_viol, czipser_viol = [], [], []
    for mask in range(lo, hi):
        rows = _decode(mask, n, pairs)
        f = chorded_flow(rows, n)
        b = brute_chorded(rows, n)
        flow_yes += f
        brute_yes += b
        if f != b:
            disagreements.append(mask)
        m = mask.bit_count()
        if n >= 4 and m >= 2 * n - 3:
            posa_hyp += 1
            if not f:
                posa_viol.append(mask)
        if n and min(r.bit_count() for r in rows) >= 3:
            czipser_hyp += 1
            if not f:
                czipser_viol.append(mask)
    counts = {
        "examined": hi - lo,
        "flow_chorded": flow_yes,
        "brute_chorded": brute_yes,
        "posa_hypothesis": posa_hyp,
        "czipser_hypothesis": czipser_hyp,
    }
    return counts, disagreements, posa_viol, czipser_viol
