"""Kernel selection: compiled extension when available, pure Python otherwise.

Set IQUOTIENTS_PURE_KERNELS=1 to force the pure backend (used by the
benchmark and the backend-agreement tests).
"""

import os

from . import _pure

if os.environ.get("IQUOTIENTS_PURE_KERNELS"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speed as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

find_nonassociative_triple = _impl.find_nonassociative_triple
enumerate_tables = _impl.enumerate_tables
canonical_table = _impl.canonical_table
rstar_matrix = _impl.rstar_matrix

__all__ = [
    "BACKEND",
    "canonical_table",
    "enumerate_tables",
    "find_nonassociative_triple",
    "rstar_matrix",
]
