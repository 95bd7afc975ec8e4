"""Timing comparison of the compiled RK4 kernels against the pure-Python path.

Run as ``python -m kickedqubit.bench``.  Two workloads: the two-state
figure-1 pulse pair and the three-state hydrogen figure-5 run, both at the
default dt = tau/20.  With the numba backend active, each kernel is timed
jitted and through its ``.py_func``; with KICKEDQUBIT_BACKEND=numpy only the
pure path exists.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from . import _kernels
from .experiments import (
    _hydrogen_params,
    config_sequence,
    default_config,
    default_end_time,
)
from .hydrogen import HydrogenModel
from .integrator import TwoStatePulseModel


def _time_call(fn, args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def _report(label: str, fn, args, repeats: int) -> None:
    plain = fn.py_func if hasattr(fn, "py_func") else fn
    jitted = fn if hasattr(fn, "py_func") else None
    t_plain = _time_call(plain, args, repeats)
    n_steps = args[-2]
    print(f"{label} ({n_steps} steps)")
    print(f"  pure python : {t_plain * 1e3:9.2f} ms")
    if jitted is not None:
        jitted(*args)  # compile outside the timed region
        t_jit = _time_call(jitted, args, repeats)
        print(f"  numba       : {t_jit * 1e3:9.2f} ms   (x{t_plain / t_jit:.0f})")
    else:
        print("  numba       : unavailable (backend is numpy)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        description="Benchmark the RK4 kernels on both backends.")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repetitions, best-of (default %(default)s)")
    parser.add_argument("--steps", type=int, default=None,
                        help="override the step count of each workload")
    args = parser.parse_args(argv)

    print(f"backend selected at import: {_kernels.BACKEND}")

    cfg = default_config("figure1")
    seq = config_sequence(cfg, "forward")
    model = TwoStatePulseModel(seq)
    dt = min(p.tau for p in seq.pulses) / 20.0
    span = default_end_time(seq)
    n = args.steps or max(1, round(span / dt))
    y0 = np.array([1.0, 0.0], dtype=complex)
    shapes, axes, alphas, centers, taus = model._packed
    _report("two-state pulse pair", _kernels.rk4_two_state,
            (seq.delta_e, shapes, axes, alphas, centers, taus,
             y0, 0.0, span / n, n, n),
            args.repeats)

    cfg = default_config("figure5")
    params = _hydrogen_params(cfg)
    seq = config_sequence(cfg, "forward", delta_e=params.delta_e)
    model = HydrogenModel(params, seq)
    dt = min(p.tau for p in seq.pulses) / 20.0
    span = default_end_time(seq)
    n = args.steps or max(1, round(span / dt))
    y0 = np.array([1.0, 0.0, 0.0], dtype=complex)
    shapes, axes, alphas, centers, taus = model._packed
    _report("three-state hydrogen", _kernels.rk4_three_state,
            (params.delta_e, params.e_fs, params.gamma,
             model._basis_code, model._drive_scale,
             shapes, axes, alphas, centers, taus,
             y0, 0.0, span / n, n, n),
            args.repeats)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
