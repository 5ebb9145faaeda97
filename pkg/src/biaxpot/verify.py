"""Cross-check suite: the library's identities evaluated on fixed grids.

Each check returns its headline residual, the threshold it must stay under,
and a detail string locating the worst offender.  The `perturb` hook exists
only to prove the suite can fail: it injects an offset into one quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fields import (
    AxialConfig,
    FieldVector,
    Point3,
    curl_probe,
    curl_probe_richardson,
    d_c,
    default_curl_step,
    f_bi,
)
from .potentials import (
    PotentialKind,
    effective_potential,
    phi_at_electron,
    phi_def1_axial,
    phi_def2_axial,
    phi_minus_infinity,
    phi_tilde_at_electron,
    single_particle_potential,
)
from .quadrature import Tolerance

__all__ = ["CheckResult", "run_checks", "CHECK_NAMES"]

_PERTURB_TARGETS = ("def1", "def2", "inf")

CHECK_NAMES = (
    "difference_identity",
    "asymptotic_split",
    "scale_covariance",
    "curl_dichotomy",
    "saturation_bounds",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    threshold: float
    passed: bool
    detail: str


def _offsets(perturb: tuple[str, float] | None) -> dict[str, float]:
    off = {t: 0.0 for t in _PERTURB_TARGETS}
    if perturb is not None:
        target, amount = perturb
        if target not in _PERTURB_TARGETS:
            raise ValueError(f"unknown perturb target {target!r}; use one of {_PERTURB_TARGETS}")
        off[target] = float(amount)
    return off


def check_difference_identity(
    perturb: tuple[str, float] | None = None, tol: Tolerance = Tolerance()
) -> CheckResult:
    """phi - phi_tilde - phi_inf/2 on the 5 x 7 (beta, rho) grid."""
    off = _offsets(perturb)
    threshold = 1e-8
    worst = -1.0
    where = ""
    for b in (0.5, 1.0, 2.0, 4.0, 8.0):
        for rho in np.geomspace(0.1, 100.0, 7):
            cfg = AxialConfig(b, b * float(rho))
            phi = phi_at_electron(cfg, tol) + off["def1"]
            phit = phi_tilde_at_electron(cfg, tol) + off["def2"]
            phiinf = phi_minus_infinity(cfg, tol) + off["inf"]
            resid = abs(phi - phit - 0.5 * phiinf)
            if resid > worst:
                worst = resid
                where = f"beta={b:g}, r={cfg.r:g}"
    return CheckResult(
        "difference_identity", worst, threshold, worst < threshold, f"worst at {where}"
    )


def check_asymptotic_split(tol: Tolerance = Tolerance()) -> CheckResult:
    """phi_def2_axial(+/-S) -> -/+ phi_inf/2, with the gap falling ~4x per doubling."""
    threshold = 1e-3
    cfg = AxialConfig(1.0, 1.0)
    target = 0.5 * phi_minus_infinity(cfg, tol)
    s_ref = 1e3 * cfg.beta

    def gap(s_value: float) -> float:
        plus = abs(phi_def2_axial(cfg, s_value, tol) + target)
        minus = abs(phi_def2_axial(cfg, -s_value, tol) - target)
        return max(plus, minus)

    g1 = gap(s_ref)
    g2 = gap(2.0 * s_ref)
    rate_ok = g2 < 0.35 * g1
    passed = g1 < threshold and rate_ok
    return CheckResult(
        "asymptotic_split",
        g1,
        threshold,
        passed,
        f"gap(S)={g1:.3e}, gap(2S)={g2:.3e} at S={s_ref:g}",
    )


def check_scale_covariance(tol: Tolerance = Tolerance()) -> CheckResult:
    """beta * op(beta, beta*rho) must be beta-independent for every operation."""
    threshold = 1e-9
    worst = -1.0
    where = ""
    rhos = (0.5, 1.0, 2.0)
    betas = (0.5, 2.0, 4.0)

    def record(value: float, ref: float, label: str) -> None:
        nonlocal worst, where
        resid = abs(value - ref)
        if resid > worst:
            worst = resid
            where = label

    for rho in rhos:
        ref_cfg = AxialConfig(1.0, rho)
        refs = {
            "phi_at_electron": phi_at_electron(ref_cfg, tol),
            "phi_tilde_at_electron": phi_tilde_at_electron(ref_cfg, tol),
            "phi_minus_infinity": phi_minus_infinity(ref_cfg, tol),
            "single_particle_potential": single_particle_potential(1.0, rho, tol),
            "phi_def1_axial": phi_def1_axial(ref_cfg, -0.75 * rho, tol),
            "phi_def2_axial": phi_def2_axial(ref_cfg, 2.5 * rho, tol),
            "effective_potential_def1": effective_potential(PotentialKind.DEF1, ref_cfg, tol),
        }
        for b in betas:
            cfg = AxialConfig(b, b * rho)
            record(b * phi_at_electron(cfg, tol), refs["phi_at_electron"],
                   f"phi_at_electron beta={b:g} rho={rho:g}")
            record(b * phi_tilde_at_electron(cfg, tol), refs["phi_tilde_at_electron"],
                   f"phi_tilde_at_electron beta={b:g} rho={rho:g}")
            record(b * phi_minus_infinity(cfg, tol), refs["phi_minus_infinity"],
                   f"phi_minus_infinity beta={b:g} rho={rho:g}")
            record(b * single_particle_potential(b, b * rho, tol),
                   refs["single_particle_potential"],
                   f"single_particle_potential beta={b:g} rho={rho:g}")
            record(b * phi_def1_axial(cfg, -0.75 * b * rho, tol), refs["phi_def1_axial"],
                   f"phi_def1_axial beta={b:g} rho={rho:g}")
            record(b * phi_def2_axial(cfg, 2.5 * b * rho, tol), refs["phi_def2_axial"],
                   f"phi_def2_axial beta={b:g} rho={rho:g}")
            record(effective_potential(PotentialKind.DEF1, cfg, tol),
                   refs["effective_potential_def1"],
                   f"effective_potential(DEF1) beta={b:g} rho={rho:g}")
    return CheckResult(
        "scale_covariance", worst, threshold, worst < threshold, f"worst: {where}"
    )


def check_curl_dichotomy() -> CheckResult:
    """Zero curl on the charge axis, nonzero azimuthal curl off it."""
    cfg = AxialConfig(1.0, 1.0)
    on_threshold = 1e-6
    h = 1e-4

    on_axis_worst = -1.0
    where = ""
    for z in np.linspace(-3.0, 4.0, 20):
        p = Point3(0.0, 0.0, float(z))
        mag = curl_probe(p, cfg, h).norm()
        if mag > on_axis_worst:
            on_axis_worst = mag
            where = f"z={z:.4f}"

    off_points = (Point3(0.5, 0.0, 0.5), Point3(0.8, 0.0, 0.3), Point3(0.3, 0.0, 1.5))
    off_ok = True
    off_detail = []
    for p in off_points:
        scale = f_bi(d_c(p, cfg), cfg.beta).norm()
        c1 = curl_probe_richardson(p, cfg)
        c2 = curl_probe_richardson(p, cfg, 0.5 * default_curl_step(p, cfg))
        mag = c1.norm()
        stable = abs(c1.norm() - c2.norm()) <= 1e-4 * max(c1.norm(), c2.norm())
        # Azimuthal structure: with the probe in the x-z plane the curl must
        # point along +/- y; in-plane components vanish up to discretization.
        plane = math.hypot(c1.x, c1.z)
        azimuthal = plane <= 1e-5 * mag if mag > 0 else False
        big_enough = mag >= 1e-2 * scale
        off_ok = off_ok and stable and azimuthal and big_enough
        off_detail.append(f"|curl|={mag:.3e} (field {scale:.3e}) at ({p.x:g},{p.y:g},{p.z:g})")

    passed = on_axis_worst < on_threshold and off_ok
    return CheckResult(
        "curl_dichotomy",
        on_axis_worst,
        on_threshold,
        passed,
        f"on-axis worst at {where}; off-axis: " + "; ".join(off_detail),
    )


def check_saturation_bounds() -> CheckResult:
    """|f_bi(Z, beta)| < 1/beta^2 for 10^4 random Z per beta."""
    rng = np.random.default_rng(20260810)
    magnitudes = 10.0 ** rng.uniform(-6.0, 12.0, 10_000)
    directions = rng.normal(size=(10_000, 3))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    worst = -math.inf
    where = ""
    for b in (0.5, 1.0, 2.0):
        bound = 1.0 / (b * b)
        for mag, d in zip(magnitudes, directions):
            z = FieldVector(mag * d[0], mag * d[1], mag * d[2])
            excess = f_bi(z, b).norm() - bound
            if excess > worst:
                worst = excess
                where = f"beta={b:g}, |Z|={mag:.3e}"
    return CheckResult(
        "saturation_bounds", worst, 0.0, worst < 0.0, f"max(|f_bi| - 1/beta^2) at {where}"
    )


def run_checks(
    perturb: tuple[str, float] | None = None, tol: Tolerance = Tolerance()
) -> list[CheckResult]:
    """The full suite, in fixed order."""
    return [
        check_difference_identity(perturb, tol),
        check_asymptotic_split(tol),
        check_scale_covariance(tol),
        check_curl_dichotomy(),
        check_saturation_bounds(),
    ]
