"""The compiled kernels and the pure-Python fallback must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest

from chordq import _pykernels, kernels
from chordq.errors import SolverError
from chordq.graph import Graph
from chordq.spectral import signless_laplacian

from conftest import random_graph

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


@pytest.mark.parametrize("backend", [_pykernels, compiled], ids=["python", "cython"])
def test_jacobi_matches_numpy(backend, rng):
    if backend is None:
        pytest.skip("compiled extension not built")
    for n in (1, 2, 5, 12, 30):
        a = rng.normal(size=(n, n))
        a = a + a.T
        w, v, sweeps, off, ok = backend.jacobi_eigh(a, 1e-12, 100 * n, True)
        assert ok
        assert np.allclose(np.sort(w), np.linalg.eigvalsh(a), atol=1e-10)
        assert np.allclose(a @ v, v * w, atol=1e-9)


def test_jacobi_reports_nonconvergence():
    a = np.random.default_rng(0).normal(size=(10, 10))
    a = a + a.T
    w, v, sweeps, off, ok = _pykernels.jacobi_eigh(a, 1e-14, 0, False)
    assert not ok and off > 0


@needs_compiled
def test_chord_kernels_agree(rng):
    for _ in range(300):
        n = int(rng.integers(1, 13))
        g = random_graph(rng, n, float(rng.uniform(0.05, 0.6)))
        assert compiled.chorded_flow(g.adj, g.n) == _pykernels.chorded_flow(g.adj, g.n)
        assert compiled.brute_chorded(g.adj, g.n) == _pykernels.brute_chorded(g.adj, g.n)


@needs_compiled
@pytest.mark.parametrize("n", [4, 5, 6])
def test_scans_agree(n):
    total = 1 << (n * (n - 1) // 2)
    for kind, threshold in ((0, float(n)), (1, (2 * (n - 2)) ** 0.5)):
        # the unpruned adjacency scan is slow in pure Python; sample its first block at n = 6
        hi = total if kind == 0 or n < 6 else 4096
        a = _pykernels.scan_spectral(n, 0, hi, kind, threshold, 3e-6, kind == 0, 1e-9, 100 * n)
        b = compiled.scan_spectral(n, 0, hi, kind, threshold, 3e-6, kind == 0, 1e-9, 100 * n)
        assert a[0] == b[0]
        assert [m for m, _ in a[1]] == [m for m, _ in b[1]]
        assert np.allclose([x for _, x in a[1]], [x for _, x in b[1]], atol=1e-9)
    assert _pykernels.scan_chords(n, 0, total) == compiled.scan_chords(n, 0, total)


@needs_compiled
def test_compiled_scan_rejects_large_order():
    with pytest.raises((ValueError, SolverError)):
        compiled.scan_chords(9, 0, 1)


def test_fallback_selected_by_environment():
    env = dict(os.environ, CHORDQ_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from chordq import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_selected_backend_on_graph():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert kernels.chorded_flow(g.adj, g.n)
    w = kernels.jacobi_eigh(signless_laplacian(g).to_numpy(), 1e-12, 400, False)[0]
    assert abs(max(w) - np.linalg.eigvalsh(signless_laplacian(g).to_numpy()).max()) < 1e-10
