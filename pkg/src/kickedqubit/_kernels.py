"""RK4 stepping kernels for the pulse-driven 2- and 3-state models.

The kernels are written as scalar loops so numba can compile them; with
``KICKEDQUBIT_BACKEND=numpy`` (or when numba is unavailable) the same
functions run uncompiled as the pure-NumPy/Python fallback.  Pulse trains
arrive as parallel parameter arrays (shape code, axis code, area, center,
width) matching ``pulses.SHAPE_CODES`` / ``pulses.AXIS_CODES``.
"""
from __future__ import annotations

import math
import os

import numpy as np

_SQRT_PI = math.sqrt(math.pi)
_SQRT2 = math.sqrt(2.0)
_GAUSS_SUPPORT = 8.0  # keep in sync with pulses.GAUSSIAN_SUPPORT

_requested = os.environ.get("KICKEDQUBIT_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(
        f"KICKEDQUBIT_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba":
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _njit = None
else:
    _njit = None

BACKEND = "numba" if _njit is not None else "numpy"


def _maybe_jit(func):
    if _njit is not None:
        return _njit(cache=True)(func)
    return func


@_maybe_jit
def _field_xy(t, eta, shapes, axes, alphas, centers, taus):
    """Summed drive at time t, split by axis: returns (v_x, v_y).

    ``eta`` is a signed nudge used only to classify which side of a hard
    (rectangular) edge the sample belongs to; the evaluation time itself is
    unchanged.  Stepping code passes +eta for a stage at the start of a step
    and -eta for a stage at its end, so each step sees the one-sided limit
    of the field from its own interior and a jump aligned with the grid
    never leaks into the neighbouring step.
    """
    vx = 0.0
    vy = 0.0
    for i in range(shapes.shape[0]):
        v = 0.0
        if shapes[i] == 1:  # gaussian, truncated at 8 tau
            u = (t - centers[i]) / taus[i]
            if -_GAUSS_SUPPORT <= u <= _GAUSS_SUPPORT:
                v = alphas[i] / (_SQRT_PI * taus[i]) * math.exp(-u * u)
        elif shapes[i] == 2:  # rectangular, [t_k - tau/2, t_k + tau/2)
            ts = t + eta
            if centers[i] - 0.5 * taus[i] <= ts < centers[i] + 0.5 * taus[i]:
                v = alphas[i] / taus[i]
        if axes[i] == 0:
            vx += v
        else:
            vy += v
    return vx, vy


@_maybe_jit
def rk4_two_state(delta_e, shapes, axes, alphas, centers, taus,
                  y0, t0, dt, n_steps, sample_every):
    """RK4 over n_steps for H = -(delta_e/2) sz + Vx sx + Vy sy.

    Samples every ``sample_every`` steps plus both endpoints.  Returns
    (times, states, ok); ok flips to False if a sampled state goes
    non-finite, and the arrays are truncated at the last good sample.
    """
    n_samples = n_steps // sample_every + 1
    if n_steps % sample_every != 0:
        n_samples += 1
    times = np.empty(n_samples)
    states = np.empty((n_samples, 2), np.complex128)
    a = y0[0] + 0j
    b = y0[1] + 0j
    half = 0.5 * delta_e
    times[0] = t0
    states[0, 0] = a
    states[0, 1] = b
    idx = 1
    ok = True
    eta = 1e-6 * dt
    for step in range(1, n_steps + 1):
        t = t0 + (step - 1) * dt
        vx1, vy1 = _field_xy(t, eta, shapes, axes, alphas, centers, taus)
        vx2, vy2 = _field_xy(t + 0.5 * dt, 0.0,
                             shapes, axes, alphas, centers, taus)
        vx3, vy3 = _field_xy(t + dt, -eta, shapes, axes, alphas, centers, taus)

        c1 = complex(vx1, -vy1)
        d1 = complex(vx1, vy1)
        k1a = -1j * (-half * a + c1 * b)
        k1b = -1j * (d1 * a + half * b)

        a2 = a + 0.5 * dt * k1a
        b2 = b + 0.5 * dt * k1b
        c2 = complex(vx2, -vy2)
        d2 = complex(vx2, vy2)
        k2a = -1j * (-half * a2 + c2 * b2)
        k2b = -1j * (d2 * a2 + half * b2)

        a3 = a + 0.5 * dt * k2a
        b3 = b + 0.5 * dt * k2b
        k3a = -1j * (-half * a3 + c2 * b3)
        k3b = -1j * (d2 * a3 + half * b3)

        a4 = a + dt * k3a
        b4 = b + dt * k3b
        c3 = complex(vx3, -vy3)
        d3 = complex(vx3, vy3)
        k4a = -1j * (-half * a4 + c3 * b4)
        k4b = -1j * (d3 * a4 + half * b4)

        a = a + dt / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        b = b + dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)

        if step % sample_every == 0 or step == n_steps:
            times[idx] = t0 + step * dt
            states[idx, 0] = a
            states[idx, 1] = b
            if not (math.isfinite(a.real) and math.isfinite(a.imag)
                    and math.isfinite(b.real) and math.isfinite(b.imag)):
                ok = False
                idx += 1
                break
            idx += 1
    return times[:idx], states[:idx], ok


@_maybe_jit
def rk4_three_state(delta_e, e_fs, gamma, basis_code, drive_scale,
                    shapes, axes, alphas, centers, taus,
                    y0, t0, dt, n_steps, sample_every):
    """RK4 for the three-state 2s-2p system.

    basis_code 0: angular-momentum basis (2s, 2p_1/2, 2p_3/2) with couplings
    (-V, -sqrt(2) V); basis_code 1: coupled basis (2s, 2p, 2p') where the
    drive touches only 2s<->2p and the fine structure mixes 2p<->2p'.
    ``drive_scale`` multiplies the raw pulse field before it enters H.
    """
    n_samples = n_steps // sample_every + 1
    if n_steps % sample_every != 0:
        n_samples += 1
    times = np.empty(n_samples)
    states = np.empty((n_samples, 3), np.complex128)
    y1 = y0[0] + 0j
    y2 = y0[1] + 0j
    y3 = y0[2] + 0j
    times[0] = t0
    states[0, 0] = y1
    states[0, 1] = y2
    states[0, 2] = y3
    idx = 1
    ok = True

    decay = -0.5j * gamma
    e_p = (2.0 / 3.0) * e_fs + decay      # coupled-basis 2p energy
    e_pp = (1.0 / 3.0) * e_fs + decay     # coupled-basis 2p' energy
    mix = (_SQRT2 / 3.0) * e_fs           # coupled-basis 2p<->2p' coupling
    e_half = decay                        # j-basis 2p_1/2 (energy 0, width gamma)
    e_three = e_fs + decay                # j-basis 2p_3/2

    eta = 1e-6 * dt
    for step in range(1, n_steps + 1):
        t = t0 + (step - 1) * dt
        ya, yb, yc = y1, y2, y3
        acc1 = 0j
        acc2 = 0j
        acc3 = 0j
        for stage in range(4):
            if stage == 0:
                ts = t
                side = eta
                w = dt / 6.0
            elif stage == 1:
                ts = t + 0.5 * dt
                side = 0.0
                w = dt / 3.0
            elif stage == 2:
                ts = t + 0.5 * dt
                side = 0.0
                w = dt / 3.0
            else:
                ts = t + dt
                side = -eta
                w = dt / 6.0
            vx, vy = _field_xy(ts, side, shapes, axes, alphas, centers, taus)
            vx *= drive_scale
            vy *= drive_scale
            cv = complex(vx, -vy)
            dv = complex(vx, vy)
            if basis_code == 0:
                da = -1j * (delta_e * ya - cv * yb - _SQRT2 * cv * yc)
                db = -1j * (-dv * ya + e_half * yb)
                dc = -1j * (-_SQRT2 * dv * ya + e_three * yc)
            else:
                da = -1j * (delta_e * ya + cv * yb)
                db = -1j * (dv * ya + e_p * yb + mix * yc)
                dc = -1j * (mix * yb + e_pp * yc)
            acc1 += w * da
            acc2 += w * db
            acc3 += w * dc
            if stage == 0 or stage == 1:
                ya = y1 + 0.5 * dt * da
                yb = y2 + 0.5 * dt * db
                yc = y3 + 0.5 * dt * dc
            elif stage == 2:
                ya = y1 + dt * da
                yb = y2 + dt * db
                yc = y3 + dt * dc
        y1 = y1 + acc1
        y2 = y2 + acc2
        y3 = y3 + acc3

        if step % sample_every == 0 or step == n_steps:
            times[idx] = t0 + step * dt
            states[idx, 0] = y1
            states[idx, 1] = y2
            states[idx, 2] = y3
            if not (math.isfinite(y1.real) and math.isfinite(y1.imag)
                    and math.isfinite(y2.real) and math.isfinite(y2.imag)
                    and math.isfinite(y3.real) and math.isfinite(y3.imag)):
                ok = False
                idx += 1
                break
            idx += 1
    return times[:idx], states[:idx], ok
