"""Pulse descriptions: ideal kicks and finite-width gaussian/rectangular pulses.

A pulse is characterised by its shape, drive axis (x or y), signed area
``alpha = integral of V(t) dt``, center ``t_k`` and width ``tau``.  The three
profiles share the same area normalisation:

* ``ideal``        -- a delta function ``alpha * delta(t - t_k)`` (``tau == 0``),
* ``gaussian``     -- ``(alpha / (sqrt(pi) * tau)) * exp(-((t - t_k) / tau)**2)``,
  truncated to zero outside ``|t - t_k| > 8 * tau``,
* ``rectangular``  -- ``alpha / tau`` on ``[t_k - tau/2, t_k + tau/2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

GAUSSIAN_SUPPORT = 8.0  # truncation of the gaussian profile, in units of tau

SHAPES = ("ideal", "gaussian", "rectangular")
AXES = ("x", "y")

# integer codes shared with the integration kernels
SHAPE_CODES = {"ideal": 0, "gaussian": 1, "rectangular": 2}
AXIS_CODES = {"x": 0, "y": 1}


@dataclass(frozen=True)
class PulseSpec:
    """One pulse of a kick sequence.

    Attributes
    ----------
    shape : str
        One of ``"ideal"``, ``"gaussian"``, ``"rectangular"``.
    axis : str
        Drive axis, ``"x"`` or ``"y"``.
    alpha : float
        Signed pulse area, the integral of the coupling over the pulse.
    t_k : float
        Pulse center.
    tau : float
        Width parameter; must be 0 exactly for ``"ideal"`` and positive
        otherwise.
    """

    shape: str
    axis: str
    alpha: float
    t_k: float
    tau: float = 0.0

    def __post_init__(self) -> None:
        if self.shape not in SHAPES:
            raise ValueError(f"unknown pulse shape {self.shape!r}; expected one of {SHAPES}")
        if self.axis not in AXES:
            raise ValueError(f"unknown pulse axis {self.axis!r}; expected one of {AXES}")
        if self.shape == "ideal":
            if self.tau != 0.0:
                raise ValueError("an ideal kick must have tau == 0")
        elif self.tau <= 0.0:
            raise ValueError(f"a {self.shape} pulse needs tau > 0, got {self.tau}")

    def value(self, t: float) -> float:
        """Field value of this pulse alone at time ``t`` (0 for an ideal kick)."""
        if self.shape == "gaussian":
            u = (t - self.t_k) / self.tau
            if abs(u) > GAUSSIAN_SUPPORT:
                return 0.0
            return self.alpha / (math.sqrt(math.pi) * self.tau) * math.exp(-u * u)
        if self.shape == "rectangular":
            if self.t_k - 0.5 * self.tau <= t < self.t_k + 0.5 * self.tau:
                return self.alpha / self.tau
            return 0.0
        return 0.0

    def support(self) -> tuple[float, float]:
        """Interval outside which the pulse field vanishes identically."""
        if self.shape == "gaussian":
            h = GAUSSIAN_SUPPORT * self.tau
        elif self.shape == "rectangular":
            h = 0.5 * self.tau
        else:
            h = 0.0
        return (self.t_k - h, self.t_k + h)


@dataclass(frozen=True)
class KickSequence:
    """An ordered tuple of pulses driving a two-state system with splitting ``delta_e``."""

    pulses: tuple[PulseSpec, ...]
    delta_e: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "pulses", tuple(self.pulses))
        if not self.pulses:
            raise ValueError("a kick sequence needs at least one pulse")


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" | "warning"
    message: str


def pulse_area(pulse: PulseSpec) -> float:
    """Integral of the pulse field over all time.

    All supported profiles are normalised so this equals ``alpha`` exactly
    (the truncated gaussian differs from its full integral by ~1.6e-28
    relative, far below double precision).
    """
    return pulse.alpha


def beta_angle(pulse: PulseSpec, delta_e: float) -> float:
    """Width angle ``beta = tau * delta_e / 2`` (0 for an ideal kick)."""
    return 0.5 * pulse.tau * delta_e


def field_at(seq: KickSequence, t: float) -> tuple[float, float]:
    """Total drive at time ``t``, reported per axis as ``(v_x, v_y)``."""
    vx = 0.0
    vy = 0.0
    for p in seq.pulses:
        v = p.value(t)
        if p.axis == "x":
            vx += v
        else:
            vy += v
    return (vx, vy)


def validate_sequence(seq: KickSequence) -> list[Diagnostic]:
    """Check a sequence and return a list of error/warning diagnostics.

    Errors: pulse centers not strictly increasing.
    Warnings: pulses closer than 4*(tau_i + tau_j) center-to-center (their
    profiles overlap appreciably) and width angles ``beta > 0.1`` (the sudden
    approximation degrades).
    """
    out: list[Diagnostic] = []
    pulses = seq.pulses
    for i in range(1, len(pulses)):
        if pulses[i].t_k <= pulses[i - 1].t_k:
            out.append(Diagnostic(
                "error",
                f"pulse centers must be strictly increasing; pulse {i} at "
                f"t={pulses[i].t_k} does not follow t={pulses[i - 1].t_k}"))
        gap = pulses[i].t_k - pulses[i - 1].t_k
        reach = 4.0 * (pulses[i].tau + pulses[i - 1].tau)
        if gap > 0 and reach > 0 and gap < reach:
            out.append(Diagnostic(
                "warning",
                f"pulses {i - 1} and {i} overlap: center gap {gap:g} < {reach:g}"))
    for i, p in enumerate(pulses):
        beta = beta_angle(p, seq.delta_e)
        if abs(beta) > 0.1:
            out.append(Diagnostic(
                "warning",
                f"pulse {i} has width angle beta = {beta:.3g} > 0.1; "
                f"finite-width corrections are no longer small"))
    return out


def raise_on_errors(diagnostics: list[Diagnostic]) -> None:
    errors = [d.message for d in diagnostics if d.level == "error"]
    if errors:
        raise ValueError("; ".join(errors))
