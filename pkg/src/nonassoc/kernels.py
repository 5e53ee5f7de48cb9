"""Finite-field kernels, compiled when available.

The Cython extension ``_kernels`` is used if it was built; otherwise the
pure-Python ``_pykernels`` is used.  Set ``NONASSOC_PURE_PYTHON=1`` to force
the fallback.  ``BACKEND`` names the implementation in use.
"""

import os
from array import array

from . import _pykernels

if os.environ.get("NONASSOC_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"


def pack_table(values):
    """Flat residue table in the layout both backends accept."""
    return array("q", values)


multiply = _impl.multiply
enumerate_idempotents = _impl.enumerate_idempotents
power_witness = _impl.power_witness
first_power_failure = _impl.first_power_failure
first_flexible_failure = _impl.first_flexible_failure
first_ncj_failure = _impl.first_ncj_failure


def backend(name: str):
    """Kernel module by name (``"python"`` or ``"cython"``), for benchmarks and tests."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")
