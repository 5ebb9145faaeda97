"""The two inequivalent axial potential definitions and their asymptotics.

Both definitions integrate the same saturated axial field; they differ only
in the anchor point.  Definition 1 anchors at +infinity (and fails to vanish
at -infinity); definition 2 anchors at the inter-charge midpoint r/2 and
splits the far-end offset evenly between the two ends of the axis.  Line
integrals are split into panels at the charge coordinates t = 0 and t = r,
where the integrand jumps between its saturation bounds +/- 1/beta^2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .fields import AxialConfig, axial_field, integrand_inner, integrand_outer
from .quadrature import Tolerance, integrate_finite, integrate_semi_infinite
from .specfun import C_BETA_QUARTER

__all__ = [
    "PotentialKind",
    "PotentialSample",
    "phi_at_electron",
    "phi_tilde_at_electron",
    "phi_minus_infinity",
    "phi_def1_axial",
    "phi_def2_axial",
    "single_particle_potential",
    "effective_potential",
]


class PotentialKind(enum.Enum):
    """The four effective-potential curves."""

    DEF1 = "def1"
    DEF2 = "def2"
    COULOMB = "coulomb"
    SINGLE = "single"


@dataclass(frozen=True)
class PotentialSample:
    """One radial sample of an effective potential."""

    r: float
    value: float

    def __post_init__(self) -> None:
        if not self.r > 0.0:
            raise ValueError(f"r must be > 0, got {self.r!r}")
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value!r}")


def phi_at_electron(cfg: AxialConfig, tol: Tolerance = Tolerance()) -> float:
    """Definition-1 potential at the electron: (r/beta^2) * integral of the
    outer integrand over [1, inf).  Always negative."""
    rho = cfg.rho()
    tail = integrate_semi_infinite(lambda x: integrand_outer(x, rho), 1.0, tol)
    return (cfg.r / (cfg.beta * cfg.beta)) * tail.value


def phi_tilde_at_electron(cfg: AxialConfig, tol: Tolerance = Tolerance()) -> float:
    """Definition-2 potential at the electron: -(r/beta^2) * integral of the
    inner integrand over [1/2, 1].  Always negative."""
    rho = cfg.rho()
    mid = integrate_finite(lambda x: integrand_inner(x, rho), 0.5, 1.0, tol)
    return -(cfg.r / (cfg.beta * cfg.beta)) * mid.value


def phi_minus_infinity(cfg: AxialConfig, tol: Tolerance = Tolerance()) -> float:
    """Far-end value of the definition-1 potential: (2r/beta^2) times the sum
    of the outer and inner integrals.  Nonzero for every finite r > 0."""
    rho = cfg.rho()
    tail = integrate_semi_infinite(lambda x: integrand_outer(x, rho), 1.0, tol)
    mid = integrate_finite(lambda x: integrand_inner(x, rho), 0.5, 1.0, tol)
    return (2.0 * cfg.r / (cfg.beta * cfg.beta)) * (tail.value + mid.value)


def _axial_panels(cfg: AxialConfig, lo: float, hi: float, tol: Tolerance) -> float:
    """Integral of the saturated axial field over [lo, hi], split at the
    charge coordinates so every panel interior is smooth."""
    if hi <= lo:
        return 0.0
    breaks = [lo] + [c for c in (0.0, cfg.r) if lo < c < hi] + [hi]
    total = 0.0
    for a, b in zip(breaks[:-1], breaks[1:]):
        total += integrate_finite(lambda t: axial_field(t, cfg), a, b, tol).value
    return total


def _axial_tail(cfg: AxialConfig, lo: float, tol: Tolerance) -> float:
    """Integral of the saturated axial field over [lo, inf), lo >= r."""
    return integrate_semi_infinite(lambda t: axial_field(t, cfg), lo, tol).value


def phi_def1_axial(cfg: AxialConfig, s: float, tol: Tolerance = Tolerance()) -> float:
    """Definition-1 potential at axial coordinate s: field integral from s to
    +infinity.  Vanishes at +infinity by construction; tends to
    phi_minus_infinity as s -> -infinity."""
    if s >= cfg.r:
        return _axial_tail(cfg, s, tol)
    return _axial_panels(cfg, s, cfg.r, tol) + _axial_tail(cfg, cfg.r, tol)


def phi_def2_axial(cfg: AxialConfig, s: float, tol: Tolerance = Tolerance()) -> float:
    """Definition-2 potential at axial coordinate s: minus the field integral
    from the midpoint r/2 to s.  Zero at s = r/2; tends to
    -/+ phi_minus_infinity/2 as s -> +/- infinity."""
    half = 0.5 * cfg.r
    if s == half:
        return 0.0
    if s > half:
        return -_axial_panels(cfg, half, s, tol)
    return _axial_panels(cfg, s, half, tol)


def single_particle_potential(beta: float, s: float, tol: Tolerance = Tolerance()) -> float:
    """Isolated-charge saturated potential: integral of dt / sqrt(t^4 + beta^4)
    over [s, inf).  Finite at s = 0, where it equals C/(4 beta)."""
    if not beta > 0.0:
        raise ValueError(f"beta must be > 0, got {beta!r}")
    if not s >= 0.0:
        raise ValueError(f"s must be >= 0, got {s!r}")

    def decay(t: float) -> float:
        # Written region-wise so t^4 never overflows for large t.
        if t > beta:
            q = beta / t
            return 1.0 / (t * t * math.sqrt(1.0 + q * q * q * q))
        q = t / beta
        return 1.0 / (beta * beta * math.sqrt(1.0 + q * q * q * q))

    return integrate_semi_infinite(decay, s, tol).value


def effective_potential(kind: PotentialKind, cfg: AxialConfig, tol: Tolerance = Tolerance()) -> float:
    """Radial curve fed to the eigen-solver, dimensionless via the beta factor.

    DEF1/DEF2 carry the C/4 shift that cancels the isolated-charge
    self-potential, so all curves decay to zero like -beta/r at large
    separation.
    """
    quarter_c = 0.25 * C_BETA_QUARTER.value
    if kind is PotentialKind.DEF1:
        return -(cfg.beta * phi_at_electron(cfg, tol) + quarter_c)
    if kind is PotentialKind.DEF2:
        return -(cfg.beta * phi_tilde_at_electron(cfg, tol) + quarter_c)
    if kind is PotentialKind.COULOMB:
        return -cfg.beta / cfg.r
    if kind is PotentialKind.SINGLE:
        return -cfg.beta * single_particle_potential(cfg.beta, cfg.r, tol)
    raise ValueError(f"unknown potential kind: {kind!r}")
