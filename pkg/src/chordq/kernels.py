"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise, or
when ``CHORDQ_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_pykernels`` module is used.  Both expose the same functions.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("CHORDQ_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

jacobi_eigh = backend.jacobi_eigh
chorded_flow = backend.chorded_flow
brute_chorded = backend.brute_chorded
scan_spectral = backend.scan_spectral
scan_chords = backend.scan_chords
