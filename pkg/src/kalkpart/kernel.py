"""Kernel backend selection.

The compiled kernel (``_kernel_c``, built from Cython) is preferred when it
imported successfully; otherwise the pure-Python kernel is used.  The
``KALKPART_KERNEL`` environment variable ("c" or "python") pins a backend at
import time, and :func:`set_backend` switches at runtime (used by the
benchmark and the differential tests).  Both backends implement the same
interface and produce identical results.
"""

import os

from . import _kernel_py

_backends = {"python": _kernel_py}

try:
    from . import _kernel_c

    _backends["c"] = _kernel_c
except ImportError:
    _kernel_c = None


def available():
    return tuple(sorted(_backends))


def _initial():
    name = os.environ.get("KALKPART_KERNEL", "").strip().lower()
    if name:
        if name not in _backends:
            raise RuntimeError(
                f"KALKPART_KERNEL={name!r} but available backends are "
                f"{available()}")
        return _backends[name]
    return _backends.get("c", _kernel_py)


_active = _initial()


def active():
    """The module implementing the current kernel backend."""
    return _active


def backend_name() -> str:
    return _active.IMPL


def set_backend(name: str):
    """Switch backends; affects computations started afterwards."""
    global _active
    if name not in _backends:
        raise ValueError(f"unknown backend {name!r}; available: {available()}")
    _active = _backends[name]
    return _active
