"""Kernel backend selection.

The numba backend is used when numba imports cleanly, unless the environment
variable ``FTPIE_PURE_NUMPY`` is set to a non-empty value other than ``0``.
"""
import contextlib
import os

from . import numpy_impl

try:
    from . import numba_impl
except ImportError:  # numba missing or broken
    numba_impl = None

BACKENDS = {"numpy": numpy_impl}
if numba_impl is not None:
    BACKENDS["numba"] = numba_impl

_flag = os.environ.get("FTPIE_PURE_NUMPY", "")
_active = "numpy" if (_flag not in ("", "0") or numba_impl is None) else "numba"


def active():
    return BACKENDS[_active]


def active_name():
    return _active


def set_backend(name):
    global _active
    if name not in BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}")
    _active = name


@contextlib.contextmanager
def use_backend(name):
    previous = _active
    set_backend(name)
    try:
        yield BACKENDS[name]
    finally:
        set_backend(previous)
