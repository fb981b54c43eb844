"""Kernel backend selection.

Hot kernels ship in two variants: a loop form compiled with numba and a
vectorized pure-numpy form.  The active variant is chosen by the
``LMCONVEX_BACKEND`` environment variable ("numba" or "numpy"); when the
variable is unset the numba path is used if numba imports, otherwise the
numpy path.
"""

from __future__ import annotations

import os

ENV_VAR = "LMCONVEX_BACKEND"
CHOICES = ("numba", "numpy")

_active: str | None = None


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def backend_name() -> str:
    """Return the active backend, resolving the environment on first use."""
    global _active
    if _active is None:
        raw = os.environ.get(ENV_VAR, "").strip().lower()
        if raw:
            if raw not in CHOICES:
                raise ValueError(
                    f"{ENV_VAR}={raw!r} is not valid; expected one of {CHOICES}"
                )
            if raw == "numba" and not numba_available():
                raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
            _active = raw
        else:
            _active = "numba" if numba_available() else "numpy"
    return _active


def set_backend(name: str | None) -> None:
    """Force a backend ("numba"/"numpy"); None re-resolves from the environment."""
    global _active
    if name is None:
        _active = None
        return
    if name not in CHOICES:
        raise ValueError(f"unknown backend {name!r}; expected one of {CHOICES}")
    if name == "numba" and not numba_available():
        raise RuntimeError("numba backend requested but numba is not importable")
    _active = name
