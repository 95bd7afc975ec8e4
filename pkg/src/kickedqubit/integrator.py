"""Fixed-step RK4 integration of small driven quantum systems.

Two paths share one entry point, :func:`integrate`:

* models carrying a ``_run_kernel`` method (the pulse-backed 2-state model
  here, the hydrogen model in :mod:`kickedqubit.hydrogen`) run through the
  compiled kernels in :mod:`kickedqubit._kernels`;
* any other object with ``dimension`` and ``evaluate(t) -> matrix`` runs
  through a plain Python RK4 loop, so arbitrary Hamiltonian callables work.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .pulses import AXIS_CODES, SHAPE_CODES, KickSequence, field_at

#: which backend the kernels run on ("numba" or "numpy"); selected by the
#: KICKEDQUBIT_BACKEND environment variable at import time.
BACKEND = _kernels.BACKEND


class IntegrationDivergedError(RuntimeError):
    """The integration produced non-finite amplitudes."""


@dataclass
class HamiltonianModel:
    """A time-dependent Hamiltonian: a dimension and an evaluator ``t -> matrix``."""

    dimension: int
    evaluate: Callable[[float], np.ndarray]

    def __post_init__(self) -> None:
        if self.dimension not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {self.dimension}")


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution: times, complex states, per-level probabilities, norms."""

    times: np.ndarray
    states: np.ndarray
    probabilities: np.ndarray
    norms: np.ndarray

    @classmethod
    def from_states(cls, times: np.ndarray, states: np.ndarray) -> "Trajectory":
        probs = np.abs(states) ** 2
        return cls(times=np.asarray(times, dtype=float), states=states,
                   probabilities=probs, norms=probs.sum(axis=1))


def _pack_pulses(seq: KickSequence):
    n = len(seq.pulses)
    shapes = np.empty(n, dtype=np.int64)
    axes = np.empty(n, dtype=np.int64)
    alphas = np.empty(n, dtype=float)
    centers = np.empty(n, dtype=float)
    taus = np.empty(n, dtype=float)
    for i, p in enumerate(seq.pulses):
        shapes[i] = SHAPE_CODES[p.shape]
        axes[i] = AXIS_CODES[p.axis]
        alphas[i] = p.alpha
        centers[i] = p.t_k
        taus[i] = p.tau
    return shapes, axes, alphas, centers, taus


class TwoStatePulseModel:
    """Kernel-backed two-state model ``H = -(delta_e/2) sz + Vx sx + Vy sy``.

    The drive is the summed field of a :class:`~kickedqubit.pulses.KickSequence`
    of finite-width pulses.  Ideal kicks carry no field to integrate and are
    rejected; use the closed forms for those.
    """

    dimension = 2

    def __init__(self, seq: KickSequence):
        for i, p in enumerate(seq.pulses):
            if p.shape == "ideal":
                raise ValueError(
                    f"pulse {i} is an ideal kick; integration needs finite-width pulses")
        self.seq = seq
        self._packed = _pack_pulses(seq)
        self.min_tau = min((p.tau for p in seq.pulses), default=None)

    def evaluate(self, t: float) -> np.ndarray:
        vx, vy = field_at(self.seq, t)
        half = 0.5 * self.seq.delta_e
        return np.array([[-half, vx - 1j * vy], [vx + 1j * vy, half]])

    def _run_kernel(self, y0, t0, dt, n_steps, sample_every):
        shapes, axes, alphas, centers, taus = self._packed
        return _kernels.rk4_two_state(
            self.seq.delta_e, shapes, axes, alphas, centers, taus,
            np.asarray(y0, dtype=complex), t0, dt, n_steps, sample_every)


def rk4_step(model, state: np.ndarray, t: float, dt: float) -> np.ndarray:
    """One classical Runge-Kutta step of ``i dy/dt = H(t) y``."""
    y = np.asarray(state, dtype=complex)
    h_a = model.evaluate(t)
    h_mid = model.evaluate(t + 0.5 * dt)
    h_b = model.evaluate(t + dt)
    k1 = -1j * (h_a @ y)
    k2 = -1j * (h_mid @ (y + 0.5 * dt * k1))
    k3 = -1j * (h_mid @ (y + 0.5 * dt * k2))
    k4 = -1j * (h_b @ (y + dt * k3))
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate(model, state0, t0: float, t1: float, dt: float,
              sample_every: int = 1) -> Trajectory:
    """Integrate ``i dy/dt = H(t) y`` from ``t0`` to ``t1`` with fixed steps.

    The step is adjusted to the nearest value that divides the span exactly.
    Samples are taken every ``sample_every`` steps and always include both
    endpoints.  Pulse-backed models whose ``dt`` exceeds ``min_tau / 20``
    trigger an accuracy warning (not an error).

    Raises
    ------
    ValueError
        Non-positive ``dt``/``sample_every`` or an empty span.
    IntegrationDivergedError
        A sampled state stopped being finite.
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if sample_every < 1:
        raise ValueError(f"sample_every must be >= 1, got {sample_every}")
    span = t1 - t0
    if span <= 0:
        raise ValueError(f"need t1 > t0, got t0 = {t0}, t1 = {t1}")
    n_steps = max(1, round(span / dt))
    h = span / n_steps

    min_tau = getattr(model, "min_tau", None)
    if min_tau is not None and h > min_tau / 20.0 * (1.0 + 1e-12):
        warnings.warn(
            f"dt = {h:g} exceeds tau/20 = {min_tau / 20.0:g}; "
            f"pulse sampling may be too coarse", stacklevel=2)

    y0 = np.asarray(state0, dtype=complex)
    if y0.shape != (model.dimension,):
        raise ValueError(
            f"initial state has shape {y0.shape}, expected ({model.dimension},)")

    if hasattr(model, "_run_kernel"):
        # a blow-up is detected by the kernel itself and reported below, so
        # the intermediate overflow warnings carry no extra information
        with np.errstate(over="ignore", invalid="ignore"):
            times, states, ok = model._run_kernel(y0, t0, h, n_steps,
                                                  sample_every)
        if not ok:
            raise IntegrationDivergedError(
                f"state went non-finite near t = {times[-1]:g}")
        return Trajectory.from_states(times, states)

    n_samples = n_steps // sample_every + 1
    if n_steps % sample_every != 0:
        n_samples += 1
    times = np.empty(n_samples)
    states = np.empty((n_samples, model.dimension), dtype=complex)
    times[0] = t0
    states[0] = y0
    y = y0
    idx = 1
    for step in range(1, n_steps + 1):
        y = rk4_step(model, y, t0 + (step - 1) * h, h)
        if step % sample_every == 0 or step == n_steps:
            t_here = t0 + step * h
            if not np.all(np.isfinite(y.view(float))):
                raise IntegrationDivergedError(
                    f"state went non-finite near t = {t_here:g}")
            times[idx] = t_here
            states[idx] = y
            idx += 1
    return Trajectory.from_states(times[:idx], states[:idx])


def norm_drift(traj: Trajectory) -> float:
    """Largest deviation of the total norm from its initial value."""
    return float(np.max(np.abs(traj.norms - traj.norms[0])))
