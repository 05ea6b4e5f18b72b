"""Hot-loop kernels, compiled when available.

``BACKEND`` is ``"cython"`` if the extension imported, ``"python"`` otherwise.
Both implementations are importable directly for benchmarking and
cross-checking.
"""

from __future__ import annotations

from . import _kernels_py as python_backend

try:
    from . import _kernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

if compiled_backend is not None:
    lattice_sum = compiled_backend.lattice_sum
    int_convolve = compiled_backend.int_convolve
    BACKEND = "cython"
else:
    lattice_sum = python_backend.lattice_sum
    int_convolve = python_backend.int_convolve
    BACKEND = "python"

__all__ = ["BACKEND", "compiled_backend", "int_convolve", "lattice_sum", "python_backend"]
