"""Character kernel selection.

The compiled kernel is used when it imports and ``n`` is within its range;
setting ``KRONSTAB_PURE_PYTHON=1`` forces the Python kernel everywhere.
"""

from __future__ import annotations

import os

from . import mn_py

try:
    if os.environ.get("KRONSTAB_PURE_PYTHON"):
        raise ImportError("pure-Python kernel requested")
    from . import mn_cy
except ImportError:
    mn_cy = None

_MODULES = {"python": mn_py}
if mn_cy is not None:
    _MODULES["cython"] = mn_cy

DEFAULT_BACKEND = "cython" if mn_cy is not None else "python"


def available_backends() -> list[str]:
    return list(_MODULES)


def make_kernel(n: int, backend: str | None = None):
    """A character kernel for ``S_n``; ``backend=None`` picks the fastest that fits."""
    if backend is None:
        backend = DEFAULT_BACKEND
        if backend == "cython" and n > mn_cy.MAX_N:
            backend = "python"
    try:
        module = _MODULES[backend]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {backend!r}") from None
    return module.CharacterKernel(n)
