"""Kernel backend selection.

The hot structures exist twice: a Cython extension (``heaplab._core``) and a
pure-Python twin (``heaplab._pure``) with identical classes, results and
counters.  By default the compiled module is used when importable and the
pure one otherwise; ``HEAPLAB_BACKEND=pure|compiled|auto`` overrides, and
every entry point that builds structures also takes an explicit backend
name so the two can be benchmarked against each other.
"""

import os

_VALID = ("auto", "compiled", "pure")


def load(name=None):
    """Return the kernel module for ``name`` (or the environment default)."""
    if name is None:
        name = os.environ.get("HEAPLAB_BACKEND", "auto")
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name in ("auto", "compiled"):
        try:
            from . import _core
            return _core
        except ImportError:
            if name == "compiled":
                raise
    from . import _pure
    return _pure


def backend_name(module) -> str:
    return getattr(module, "BACKEND_NAME", "unknown")
