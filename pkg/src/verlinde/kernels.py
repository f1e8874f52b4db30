"""Kernel dispatch: numba-compiled elimination with a pure-numpy fallback.

VERLINDE_KERNELS=numpy forces the fallback; VERLINDE_KERNELS=numba forces
the compiled path (ImportError if numba is missing).  Default: numba when
importable, numpy otherwise.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy

_BACKENDS = {"numpy": _kernels_numpy}

try:
    from . import _kernels_numba

    _BACKENDS["numba"] = _kernels_numba
    _DEFAULT = "numba"
except ImportError:  # pragma: no cover - numba is a declared dependency
    _DEFAULT = "numpy"

_active = os.environ.get("VERLINDE_KERNELS", _DEFAULT)
if _active not in _BACKENDS:
    raise RuntimeError(
        f"VERLINDE_KERNELS={_active!r} not available; choose from {sorted(_BACKENDS)}"
    )


def set_backend(name: str) -> None:
    """Switch the active kernel implementation (used by tests and benchmarks)."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_BACKENDS)}")
    _active = name


def active_backend() -> str:
    return _active


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return a.copy(), np.zeros(0, dtype=np.int64)
    return _BACKENDS[_active].rref_mod(a, p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[0] == 0 or a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    return _BACKENDS[_active].matmul_mod(a, b, p)
