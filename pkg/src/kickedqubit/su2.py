"""SU(2) building blocks: Pauli matrices, axis exponentials, composition.

Everything here works on dense 2x2 complex128 arrays with hbar = 1.  Propagators
are plain ``numpy.ndarray`` objects; no wrapper class is imposed.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

_AXIS_TOL = 1e-9


def su2_exponential(phi: float, axis: Sequence[float]) -> np.ndarray:
    """Exponential ``exp(i * phi * (sigma . u))`` for a unit axis ``u``.

    Parameters
    ----------
    phi : float
        Real exponent angle.
    axis : array_like
        Real 3-vector ``(ux, uy, uz)`` of unit norm.

    Returns
    -------
    numpy.ndarray
        ``cos(phi) * I + i * sin(phi) * (sigma . u)``, a 2x2 unitary.

    Raises
    ------
    ValueError
        If the axis is not a 3-vector of unit norm.
    """
    u = np.asarray(axis, dtype=float)
    if u.shape != (3,):
        raise ValueError(f"axis must be a real 3-vector, got shape {u.shape}")
    norm = float(np.linalg.norm(u))
    if abs(norm - 1.0) > _AXIS_TOL:
        raise ValueError(f"axis must be a unit vector; |axis| = {norm}")
    sigma_u = u[0] * SIGMA_X + u[1] * SIGMA_Y + u[2] * SIGMA_Z
    return np.cos(phi) * IDENTITY + 1j * np.sin(phi) * sigma_u


def compose(factors: Iterable[np.ndarray]) -> np.ndarray:
    """Multiply propagators in application order.

    The first element of ``factors`` acts first, so the result is
    ``factors[-1] @ ... @ factors[0]``.

    Raises
    ------
    ValueError
        If ``factors`` is empty.
    """
    mats = [np.asarray(m, dtype=complex) for m in factors]
    if not mats:
        raise ValueError("compose() requires at least one factor")
    out = mats[0].copy()
    for m in mats[1:]:
        out = m @ out
    return out


def occupation_probabilities(state: Sequence[complex]) -> tuple[float, ...]:
    """Return ``|a_i|^2`` for each amplitude of a state vector."""
    a = np.asarray(state, dtype=complex)
    return tuple(float(p) for p in np.abs(a) ** 2)


def unitarity_defect(u: np.ndarray) -> float:
    """Max-norm of ``U^dagger U - I``; zero for an exactly unitary matrix."""
    u = np.asarray(u, dtype=complex)
    eye = np.eye(u.shape[0], dtype=complex)
    return float(np.max(np.abs(u.conj().T @ u - eye)))
