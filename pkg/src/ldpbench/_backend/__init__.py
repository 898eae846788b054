"""Kernel backend selection.

The per-user perturbation loops and the report-matching loops dominate
runtime, so they live in a compiled extension (``_native``, Cython) with a
pure-numpy fallback (``_pykernels``).  Both backends consume the same
counter-based random streams and return bit-identical outputs; the compiled
one releases the GIL so worker threads actually run in parallel.

Selection happens on first use: the extension if importable, the fallback
otherwise.  ``LDPBENCH_BACKEND=native|python`` forces a choice, and
:func:`select` switches at runtime (used by the backend benchmark).
"""

import os

_ENV_VAR = "LDPBENCH_BACKEND"
_active = None


def _load(name: str):
    if name == "native":
        try:
            from ldpbench._backend import _native
        except ImportError as exc:
            raise ImportError(
                "native kernel backend requested but the compiled extension "
                "is not importable; rebuild the package or use the 'python' backend"
            ) from exc
        return _native
    if name == "python":
        from ldpbench._backend import _pykernels

        return _pykernels
    raise ValueError(f"unknown backend {name!r}; expected 'native', 'python', or 'auto'")


def select(name: str | None = None):
    """Activate a backend by name ('auto' picks native when available)."""
    global _active
    if name in (None, "", "auto"):
        try:
            _active = _load("native")
        except ImportError:
            _active = _load("python")
    else:
        _active = _load(name)
    return _active


def active():
    """The currently selected kernel module."""
    if _active is None:
        select(os.environ.get(_ENV_VAR, "auto").strip().lower())
    return _active


def backend_name() -> str:
    return active().BACKEND_NAME


def has_native() -> bool:
    try:
        _load("native")
    except ImportError:
        return False
    return True
