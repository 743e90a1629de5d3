# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; mirrors ``chordq._pykernels`` call for call."""

import numpy as np

from libc.math cimport sqrt, fabs, copysign
from libc.string cimport memset

from chordq.errors import SolverError

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef double _EPS = 2.220446049250313e-16


cdef inline int _pop(u64 x) nogil:
    return __builtin_popcountll(x)


cdef double _offnorm(double* a, int n) nogil:
    cdef double s = 0.0
    cdef int i, j
    for i in range(n):
        for j in range(i + 1, n):
            s += a[i * n + j] * a[i * n + j]
    return sqrt(2.0 * s)


cdef int _jacobi(double* a, double* v, int n, double tol, int max_sweeps,
                 double* off_out, double* target_out) nogil:
    """Returns sweeps used; converged iff ``off_out[0] <= target_out[0]``."""
    cdef int p, q, k, sweeps = 0
    cdef double apq, theta, t, c, s, x, y, frob = 0.0, target, off
    for k in range(n * n):
        frob += a[k] * a[k]
    target = tol * 1e-2
    if 8 * _EPS * sqrt(frob) > target:
        target = 8 * _EPS * sqrt(frob)
    off = _offnorm(a, n)
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if apq == 0.0:
                    continue
                theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    x = a[k * n + p]
                    y = a[k * n + q]
                    a[k * n + p] = c * x - s * y
                    a[k * n + q] = s * x + c * y
                for k in range(n):
                    x = a[p * n + k]
                    y = a[q * n + k]
                    a[p * n + k] = c * x - s * y
                    a[q * n + k] = s * x + c * y
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
                if v != NULL:
                    for k in range(n):
                        x = v[k * n + p]
                        y = v[k * n + q]
                        v[k * n + p] = c * x - s * y
                        v[k * n + q] = s * x + c * y
        sweeps += 1
        off = _offnorm(a, n)
    off_out[0] = off
    target_out[0] = target
    return sweeps


def jacobi_eigh(a, double tol, int max_sweeps, bint vectors):
    arr = np.array(a, dtype=np.float64, order="C", copy=True)
    cdef int n = arr.shape[0]
    cdef double[:, ::1] A = arr
    cdef double[:, ::1] V
    cdef double off = 0.0, target = 0.0
    cdef int sweeps
    if n == 0:
        return np.zeros(0), (np.zeros((0, 0)) if vectors else None), 0, 0.0, True
    if vectors:
        vec = np.eye(n)
        V = vec
        sweeps = _jacobi(&A[0, 0], &V[0, 0], n, tol, max_sweeps, &off, &target)
    else:
        vec = None
        sweeps = _jacobi(&A[0, 0], NULL, n, tol, max_sweeps, &off, &target)
    return np.diag(arr).copy(), vec, sweeps, off, off <= target


cdef bint _two_paths(const u64* rows, int n, int x, int y, unsigned char* cap,
                     int* parent, int* queue) nogil:
    cdef int N = 2 * n, v, a, b, u, w, head, tail, rnd
    cdef u64 r
    memset(cap, 0, N * N)
    for v in range(n):
        if v != x and v != y:
            cap[(2 * v) * N + 2 * v + 1] = 1
    for a in range(n):
        r = rows[a]
        while r:
            b = __builtin_ctzll(r)
            r &= r - 1
            if (a == x and b == y) or (a == y and b == x):
                continue
            cap[(2 * a + 1) * N + 2 * b] = 1
    cdef int s = 2 * x + 1, t = 2 * y
    for rnd in range(2):
        for v in range(N):
            parent[v] = -1
        parent[s] = s
        queue[0] = s
        head = 0
        tail = 1
        while head < tail and parent[t] < 0:
            u = queue[head]
            head += 1
            for w in range(N):
                if cap[u * N + w] and parent[w] < 0:
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
        if parent[t] < 0:
            return False
        w = t
        while w != s:
            u = parent[w]
            cap[u * N + w] -= 1
            cap[w * N + u] += 1
            w = u
    return True


cdef bint _chorded_flow(const u64* rows, int n, unsigned char* cap, int* parent,
                        int* queue) nogil:
    cdef int x, y
    cdef u64 r
    for x in range(n):
        if _pop(rows[x]) < 3:
            continue
        r = rows[x] >> (x + 1) if x < 63 else 0
        while r:
            y = x + 1 + __builtin_ctzll(r)
            r &= r - 1
            if _pop(rows[y]) >= 3 and _two_paths(rows, n, x, y, cap, parent, queue):
                return True
    return False


cdef bint _brute_chorded(const u64* rows, int n) nogil:
    cdef int path[64]
    cdef u64 cand[64]
    cdef int s, depth, w, i, inner
    cdef u64 full, higher, pset, c
    full = (<u64>1 << n) - 1 if n < 64 else ~(<u64>0)
    for s in range(n):
        higher = full & ~((<u64>1 << (s + 1)) - 1) if s < 63 else 0
        path[0] = s
        pset = <u64>1 << s
        cand[0] = rows[s] & higher
        depth = 1
        while depth > 0:
            c = cand[depth - 1]
            if c == 0:
                depth -= 1
                pset &= ~(<u64>1 << path[depth])
                continue
            w = __builtin_ctzll(c)
            cand[depth - 1] = c & (c - 1)
            path[depth] = w
            pset |= <u64>1 << w
            depth += 1
            if depth >= 4 and (rows[w] >> s) & 1:
                inner = 0
                for i in range(depth):
                    inner += _pop(rows[path[i]] & pset)
                if inner // 2 > depth:
                    return True
            cand[depth - 1] = rows[w] & higher & ~pset
    return False


cdef void _load_rows(rows_in, u64* rows, int n) except *:
    cdef int i
    for i in range(n):
        rows[i] = <u64>rows_in[i]


def chorded_flow(rows_in, int n):
    cdef u64 rows[64]
    cdef unsigned char cap[128 * 128]
    cdef int parent[128]
    cdef int queue[128]
    _load_rows(rows_in, rows, n)
    return bool(_chorded_flow(rows, n, cap, parent, queue))


def brute_chorded(rows_in, int n):
    cdef u64 rows[64]
    _load_rows(rows_in, rows, n)
    return bool(_brute_chorded(rows, n))


cdef void _decode(u64 mask, int n, int* pi, int* pj, u64* rows) nogil:
    cdef int k
    for k in range(n):
        rows[k] = 0
    while mask:
        k = __builtin_ctzll(mask)
        mask &= mask - 1
        rows[pi[k]] |= <u64>1 << pj[k]
        rows[pj[k]] |= <u64>1 << pi[k]


cdef int _pairs(int n, int* pi, int* pj) nogil:
    cdef int i, j, k = 0
    for j in range(1, n):
        for i in range(j):
            pi[k] = i
            pj[k] = j
            k += 1
    return k


def scan_spectral(int n, u64 lo, u64 hi, int kind, double threshold, double band,
                  bint prune, double tol, int max_sweeps):
    if n > 8:
        raise ValueError("compiled scan supports n <= 8")
    cdef int pi[28]
    cdef int pj[28]
    cdef u64 rows[8]
    cdef int deg[8]
    cdef double a[64]
    cdef unsigned char cap[16 * 16]
    cdef int parent[16]
    cdef int queue[16]
    cdef u64 mask, mm
    cdef int i, j, k, m, best, mindeg, sweeps
    cdef double off, target, value
    cdef long long pruned = 0, posa = 0, czipser = 0, flow = 0, chord_free = 0
    _pairs(n, pi, pj)
    candidates = []
    mask = lo
    while mask < hi:
        _decode(mask, n, pi, pj, rows)
        m = _pop(mask)
        mindeg = n
        for i in range(n):
            deg[i] = _pop(rows[i])
            if deg[i] < mindeg:
                mindeg = deg[i]
        if prune:
            best = 0
            mm = mask
            while mm:
                k = __builtin_ctzll(mm)
                mm &= mm - 1
                if deg[pi[k]] + deg[pj[k]] > best:
                    best = deg[pi[k]] + deg[pj[k]]
            if best < threshold:
                pruned += 1
                mask += 1
                continue
        if n >= 4 and m >= 2 * n - 3:
            posa += 1
            mask += 1
            continue
        if n > 0 and mindeg >= 3:
            czipser += 1
            mask += 1
            continue
        if _chorded_flow(rows, n, cap, parent, queue):
            flow += 1
            mask += 1
            continue
        chord_free += 1
        for i in range(n * n):
            a[i] = 0.0
        for i in range(n):
            for j in range(n):
                if (rows[i] >> j) & 1:
                    a[i * n + j] = 1.0
            if kind == 0:
                a[i * n + i] = deg[i]
        sweeps = _jacobi(a, NULL, n, tol, max_sweeps, &off, &target)
        if off > target:
            raise SolverError(f"Jacobi did not converge on mask {mask}", off)
        value = a[0] if n > 0 else 0.0
        for i in range(1, n):
            if a[i * n + i] > value:
                value = a[i * n + i]
        if value >= threshold - band:
            candidates.append((int(mask), float(value)))
        mask += 1
    counts = {
        "examined": int(hi - lo),
        "pruned_edge_bound": pruned,
        "posa_shortcut": posa,
        "czipser_shortcut": czipser,
        "flow_chorded": flow,
        "chord_free": chord_free,
    }
    return counts, candidates


def scan_chords(int n, u64 lo, u64 hi):
    if n > 8:
        raise ValueError("compiled scan supports n <= 8")
    cdef int pi[28]
    cdef int pj[28]
    cdef u64 rows[8]
    cdef unsigned char cap[16 * 16]
    cdef int parent[16]
    cdef int queue[16]
    cdef u64 mask
    cdef int i, m, mindeg, d
    cdef bint f, b
    cdef long long flow_yes = 0, brute_yes = 0, posa_hyp = 0, czipser_hyp = 0
    _pairs(n, pi, pj)
    disagreements, posa_viol, czipser_viol = [], [], []
    mask = lo
    while mask < hi:
        _decode(mask, n, pi, pj, rows)
        f = _chorded_flow(rows, n, cap, parent, queue)
        b = _brute_chorded(rows, n)
        flow_yes += f
        brute_yes += b
        if f != b:
            disagreements.append(int(mask))
        m = _pop(mask)
        if n >= 4 and m >= 2 * n - 3:
            posa_hyp += 1
            if not f:
                posa_viol.append(int(mask))
        mindeg = n
        for i in range(n):
            d = _pop(rows[i])
            if d < mindeg:
                mindeg = d
        if n > 0 and mindeg >= 3:
            czipser_hyp += 1
            if not f:
                czipser_viol.append(int(mask))
        mask += 1
    counts = {
        "examined": int(hi - lo),
        "flow_chorded": flow_yes,
        "brute_chorded": brute_yes,
        "posa_hypothesis": posa_hyp,
        "czipser_hypothesis": czipser_hyp,
    }
    return counts, disagreements, posa_viol, czipser_viol
