"""Two-charge Born-Infeld field maps and the finite-difference curl probe.

Geometry convention: positive unit charge (proton) at the origin, negative
unit charge (electron) at (0, 0, r), so the inter-charge axis is the z-axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "AxialConfig",
    "FieldVector",
    "Point3",
    "SingularityError",
    "f_bi",
    "d_c",
    "axial_field",
    "integrand_outer",
    "integrand_inner",
    "curl_probe",
    "curl_probe_richardson",
    "default_curl_step",
]


class SingularityError(ValueError):
    """Field evaluation requested at (or stencil touching) a charge location."""


@dataclass(frozen=True)
class AxialConfig:
    """Born parameter beta and charge separation r (both lengths, > 0)."""

    beta: float
    r: float

    def __post_init__(self) -> None:
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be finite and > 0, got {self.beta!r}")
        if not (self.r > 0.0 and math.isfinite(self.r)):
            raise ValueError(f"r must be finite and > 0, got {self.r!r}")

    def rho(self) -> float:
        """Scale-free separation r / beta."""
        return self.r / self.beta


@dataclass(frozen=True)
class FieldVector:
    """A 3-component field/displacement value (charge / length^2)."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"non-finite field components ({self.x!r}, {self.y!r}, {self.z!r})")

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)


@dataclass(frozen=True)
class Point3:
    """A spatial point; the proton sits at the origin, the electron at (0, 0, r)."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"non-finite coordinates ({self.x!r}, {self.y!r}, {self.z!r})")


_STRICT_SHAVE = 1.0 - 1e-15


def _saturation_factor(norm_sq: float, beta: float) -> float:
    """1 / sqrt(1 + beta^4 |Z|^2), safe against overflow of beta^4 |Z|^2.

    Deep in saturation the rounded factor is shaved by ~5 ulp so the strict
    magnitude bound |f_bi| < 1/beta^2 survives floating-point evaluation.
    """
    b2 = beta * beta
    if norm_sq > 1e140 / (b2 * b2):
        # |Z| so large the direct square overflows; saturated regime.
        s = 1.0 / (b2 * math.sqrt(norm_sq) * math.sqrt(1.0 + 1.0 / (b2 * b2 * norm_sq)))
    else:
        s = 1.0 / math.sqrt(1.0 + b2 * b2 * norm_sq)
    if s * s * norm_sq * (b2 * b2) >= _STRICT_SHAVE * _STRICT_SHAVE:
        s = _STRICT_SHAVE / (b2 * math.sqrt(norm_sq))
    return s


def f_bi(Z: FieldVector, beta: float) -> FieldVector:
    """Saturating constitutive map Z -> Z / sqrt(1 + beta^4 |Z|^2).

    Total function: preserves the direction of Z and bounds the magnitude
    strictly below 1/beta^2.
    """
    if not beta > 0.0:
        raise ValueError(f"beta must be > 0, got {beta!r}")
    norm_sq = Z.x * Z.x + Z.y * Z.y + Z.z * Z.z
    if norm_sq == 0.0:
        return FieldVector(0.0, 0.0, 0.0)
    s = _saturation_factor(norm_sq, beta)
    return FieldVector(Z.x * s, Z.y * s, Z.z * s)


def d_c(s: Point3, cfg: AxialConfig) -> FieldVector:
    """Linear-superposition displacement of the +/- pair: monopole at the
    origin minus monopole at the electron position (0, 0, r)."""
    dp_sq = s.x * s.x + s.y * s.y + s.z * s.z
    dz_e = s.z - cfg.r
    de_sq = s.x * s.x + s.y * s.y + dz_e * dz_e
    if dp_sq == 0.0 or de_sq == 0.0:
        raise SingularityError(f"field evaluated at a charge location: ({s.x}, {s.y}, {s.z})")
    ip = 1.0 / (dp_sq * math.sqrt(dp_sq))
    ie = 1.0 / (de_sq * math.sqrt(de_sq))
    return FieldVector(s.x * ip - s.x * ie, s.y * ip - s.y * ie, s.z * ip - dz_e * ie)


def axial_field(t: float, cfg: AxialConfig) -> float:
    """z-component of f_bi(d_c) at the on-axis point (0, 0, t).

    Bounded by 1/beta^2 everywhere, with jump discontinuities at the two
    charge coordinates t = 0 and t = r (which raise SingularityError).
    """
    field = f_bi(d_c(Point3(0.0, 0.0, t), cfg), cfg.beta)
    return field.z


def integrand_outer(x: float, rho: float) -> float:
    """Dimensionless axial integrand beyond the electron, x >= 1.

    (1 - 2x) / sqrt(rho^4 x^4 (x-1)^4 + (1 - 2x)^2), in [-1, 0).
    """
    if not x >= 1.0:
        raise ValueError(f"integrand_outer requires x >= 1, got {x!r}")
    if not rho > 0.0:
        raise ValueError(f"rho must be > 0, got {rho!r}")
    num = 1.0 - 2.0 * x
    core = rho * rho * x * x * (x - 1.0) * (x - 1.0)
    return num / math.sqrt(core * core + num * num)


def integrand_inner(x: float, rho: float) -> float:
    """Dimensionless axial integrand between midpoint and electron, 1/2 <= x <= 1.

    (2x^2 - 2x + 1) / sqrt(rho^4 x^4 (x-1)^4 + (2x^2 - 2x + 1)^2), in (0, 1].
    """
    if not 0.5 <= x <= 1.0:
        raise ValueError(f"integrand_inner requires 1/2 <= x <= 1, got {x!r}")
    if not rho > 0.0:
        raise ValueError(f"rho must be > 0, got {rho!r}")
    num = 2.0 * x * x - 2.0 * x + 1.0
    core = rho * rho * x * x * (x - 1.0) * (x - 1.0)
    return num / math.sqrt(core * core + num * num)


def default_curl_step(s: Point3, cfg: AxialConfig) -> float:
    """Probe step 1e-4 * min(r, distance to either charge): balances
    truncation against cancellation near the charges."""
    dp = math.sqrt(s.x * s.x + s.y * s.y + s.z * s.z)
    dz_e = s.z - cfg.r
    de = math.sqrt(s.x * s.x + s.y * s.y + dz_e * dz_e)
    h = 1e-4 * min(cfg.r, dp, de)
    if h <= 0.0:
        raise SingularityError(f"probe point coincides with a charge: ({s.x}, {s.y}, {s.z})")
    return h


def curl_probe(s: Point3, cfg: AxialConfig, h: float | None = None) -> FieldVector:
    """Second-order central-difference curl of s -> f_bi(d_c(s)) at s."""
    if h is None:
        h = default_curl_step(s, cfg)
    if not h > 0.0:
        raise ValueError(f"h must be > 0, got {h!r}")

    def field(x: float, y: float, z: float) -> FieldVector:
        return f_bi(d_c(Point3(x, y, z), cfg), cfg.beta)

    fxp = field(s.x + h, s.y, s.z)
    fxm = field(s.x - h, s.y, s.z)
    fyp = field(s.x, s.y + h, s.z)
    fym = field(s.x, s.y - h, s.z)
    fzp = field(s.x, s.y, s.z + h)
    fzm = field(s.x, s.y, s.z - h)
    inv2h = 0.5 / h
    return FieldVector(
        (fyp.z - fym.z) * inv2h - (fzp.y - fzm.y) * inv2h,
        (fzp.x - fzm.x) * inv2h - (fxp.z - fxm.z) * inv2h,
        (fxp.y - fxm.y) * inv2h - (fyp.x - fym.x) * inv2h,
    )


def curl_probe_richardson(s: Point3, cfg: AxialConfig, h: float | None = None) -> FieldVector:
    """Richardson-extrapolated curl probe: (4 curl(h/2) - curl(h)) / 3."""
    if h is None:
        h = default_curl_step(s, cfg)
    coarse = curl_probe(s, cfg, h)
    fine = curl_probe(s, cfg, 0.5 * h)
    third = 1.0 / 3.0
    return FieldVector(
        (4.0 * fine.x - coarse.x) * third,
        (4.0 * fine.y - coarse.y) * third,
        (4.0 * fine.z - coarse.z) * third,
    )
