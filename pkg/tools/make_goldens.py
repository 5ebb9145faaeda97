#!/usr/bin/env python3
"""Regenerate the oracle-produced golden data under tests/data/.

High-precision scalars come from mpmath (tanh-sinh quadrature at 30+ digits
of the same closed forms), the boundary-layer value is cross-checked against
a 10^7-panel composite Simpson evaluation, and the spectrum goldens come
from dense finite-difference diagonalization.  Golden CSV files are produced
by the CLI itself and endorsed row-by-row against the mpmath references
before being written.

Usage:  python tools/make_goldens.py
"""

from __future__ import annotations

import json
import os
import sys
import tempfile

import mpmath as mp
import numpy as np

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = os.path.join(REPO, "tests", "data")
sys.path.insert(0, REPO)

from tests.oracles import fd_levels_richardson, outer_integral_simpson  # noqa: E402

from biaxpot.cli import main as cli_main  # noqa: E402
from biaxpot.potentials import PotentialKind  # noqa: E402
from biaxpot.spectrum import build_potential_table, default_r_max  # noqa: E402

mp.mp.dps = 30


def outer_integral_mp(rho):
    rho = mp.mpf(rho)

    def f(x):
        num = 1 - 2 * x
        return num / mp.sqrt(rho**4 * x**4 * (x - 1) ** 4 + num**2)

    pts = [1, 1 + 1 / rho, 1 + 10 / rho, 2, 10, 100, mp.inf]
    pts = sorted(set(p for p in pts if p == mp.inf or p >= 1))
    return mp.quad(f, pts)


def inner_integral_mp(rho):
    rho = mp.mpf(rho)

    def f(x):
        num = 2 * x * x - 2 * x + 1
        return num / mp.sqrt(rho**4 * x**4 * (x - 1) ** 4 + num**2)

    return mp.quad(f, [mp.mpf(1) / 2, 1])


def single_particle_mp(beta, s):
    beta = mp.mpf(beta)
    s = mp.mpf(s)
    return mp.quad(lambda t: 1 / mp.sqrt(t**4 + beta**4), [s, s + beta, 10 * beta, mp.inf])


def effective_mp(kind, r, c_quarter):
    r = mp.mpf(r)
    if kind == "def1":
        return -(r * outer_integral_mp(r) + c_quarter)
    if kind == "def2":
        return -(-r * inner_integral_mp(r) + c_quarter)
    if kind == "coulomb":
        return -1 / r
    if kind == "single":
        return -single_particle_mp(1, r)
    raise ValueError(kind)


def main() -> int:
    os.makedirs(DATA_DIR, exist_ok=True)
    goldens: dict = {
        "_note": "Oracle-produced reference values; regenerate with python tools/make_goldens.py"
    }

    # -- special functions ------------------------------------------------
    gamma_quarter = mp.gamma(mp.mpf(1) / 4)
    c_const = gamma_quarter**2 / mp.sqrt(mp.pi)
    # independent route for Gamma(1/4): integral of t^(-3/4) e^(-t),
    # evaluated through t = u^4 so the quadrature sees a smooth integrand
    gamma_quarter_quad = mp.quad(lambda u: 4 * mp.exp(-(u**4)), [0, 1, 3, mp.inf])
    assert abs(gamma_quarter_quad - gamma_quarter) < mp.mpf("1e-25"), "Gamma(1/4) cross-check"
    goldens["gamma_quarter"] = float(gamma_quarter)
    goldens["log_gamma_quarter"] = float(mp.log(gamma_quarter))
    goldens["c_beta_quarter"] = float(c_const)
    goldens["quarter_c"] = float(c_const / 4)

    # -- dimensionless integrals ------------------------------------------
    i_inner_1 = inner_integral_mp(1)
    i_outer_1 = outer_integral_mp(1)
    goldens["inner_integral_rho1"] = float(i_inner_1)
    goldens["outer_integral_rho1"] = float(i_outer_1)

    i_bl_mp = outer_integral_mp(1000)
    i_bl_simpson = outer_integral_simpson(1000.0)
    rel = abs(i_bl_simpson / float(i_bl_mp) - 1.0)
    assert rel < 1e-10, f"Simpson vs mpmath boundary-layer disagreement: {rel:.3e}"
    goldens["outer_integral_rho1e3_simpson"] = i_bl_simpson
    goldens["outer_integral_rho1e3_mp"] = float(i_bl_mp)

    goldens["integrand_inner_x0p75_rho1"] = float(
        (mp.mpf(2) * 9 / 16 - mp.mpf(3) / 2 + 1)
        / mp.sqrt((mp.mpf(3) / 4) ** 4 * (mp.mpf(1) / 4) ** 4
                  + (mp.mpf(2) * 9 / 16 - mp.mpf(3) / 2 + 1) ** 2)
    )

    # -- potentials at beta = 1 -------------------------------------------
    goldens["phi_at_electron_beta1_r1"] = float(i_outer_1)
    goldens["phi_tilde_at_electron_beta1_r1"] = float(-i_inner_1)
    goldens["phi_minus_infinity_beta1_r1"] = float(2 * (i_outer_1 + i_inner_1))
    goldens["phi_minus_infinity_by_rho"] = {
        str(rho): float(2 * rho * (outer_integral_mp(rho) + inner_integral_mp(rho)))
        for rho in (0.5, 1.0, 2.0)
    }
    goldens["single_particle_beta1_s0"] = float(c_const / 4)
    goldens["single_particle_beta1_s1"] = float(single_particle_mp(1, 1))
    goldens["effective_beta1_r1"] = {
        kind: float(effective_mp(kind, 1, c_const / 4))
        for kind in ("def1", "def2", "coulomb", "single")
    }

    # two-monopole field at the off-axis probe (1, 0, 0), r = 1: restated
    # from scratch: (s - s_p)/|s - s_p|^3 - (s - s_e)/|s - s_e|^3
    inv = 1 / (mp.sqrt(2) * 2)
    goldens["d_c_at_1_0_0_r1"] = [float(1 - inv), 0.0, float(inv)]

    # -- spectrum goldens (dense-diagonalization oracle) -------------------
    beta = 0.2
    grid = np.geomspace(1e-4, max(100.0 * beta, 50.0), 192)
    r_max = default_r_max(-0.5 * beta * beta)
    oracle_levels = {}
    for kind in (PotentialKind.DEF1, PotentialKind.DEF2):
        table = build_potential_table(kind, beta, grid)
        oracle_levels[kind.value] = fd_levels_richardson(table, 0, 1e-4, r_max, 20_000, 2)
    goldens["spread_beta0p2_oracle"] = {
        "e_def1": [float(e) for e in oracle_levels["def1"]],
        "e_def2": [float(e) for e in oracle_levels["def2"]],
        "delta": [float(a - b) for a, b in zip(oracle_levels["def1"], oracle_levels["def2"])],
    }

    with open(os.path.join(DATA_DIR, "goldens.json"), "w", newline="\n") as fh:
        json.dump(goldens, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print("wrote goldens.json")

    # -- golden CSVs via the CLI, endorsed against mpmath ------------------
    with tempfile.TemporaryDirectory() as tmp:
        fig1_path = os.path.join(tmp, "fig1.csv")
        rc = cli_main(["fig1", "--out", fig1_path, "--no-plot", "--workers", "1"])
        assert rc == 0
        rows = np.genfromtxt(fig1_path, delimiter=",", names=True)
        for idx in (0, 40, 100, 199):
            r = float(rows["r"][idx])
            ref = float(2 * mp.mpf(r) * (outer_integral_mp(r) + inner_integral_mp(r)))
            assert abs(rows["phi_minus_infinity"][idx] - ref) < 1e-8, (idx, r)
        with open(fig1_path, "rb") as src, open(
            os.path.join(DATA_DIR, "fig1_golden.csv"), "wb"
        ) as dst:
            dst.write(src.read())
        print("wrote fig1_golden.csv (endorsed at 4 rows)")

        fig2_path = os.path.join(tmp, "fig2.csv")
        rc = cli_main(["fig2", "--out", fig2_path, "--no-plot", "--workers", "1"])
        assert rc == 0
        rows = np.genfromtxt(fig2_path, delimiter=",", names=True)
        c_quarter = c_const / 4
        for idx in (0, 9, 123, 250, 499):
            r = float(rows["r"][idx])
            for kind in ("def1", "def2", "coulomb", "single"):
                ref = float(effective_mp(kind, r, c_quarter))
                assert abs(rows[kind][idx] - ref) < 1e-8, (idx, r, kind)
        with open(fig2_path, "rb") as src, open(
            os.path.join(DATA_DIR, "fig2_golden.csv"), "wb"
        ) as dst:
            dst.write(src.read())
        print("wrote fig2_golden.csv (endorsed at 5 rows x 4 curves)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
