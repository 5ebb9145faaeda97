"""Radial bound states over the tabulated effective potentials.

Solves -(1/2) u'' + [l(l+1)/(2 r^2) + V(r)] u = E u on a uniform mesh with
u(r_min) ~ r^(l+1) and u(r_max) -> 0, using a fourth-order (Numerov)
propagator.  Energies are located by node-counting bisection and refined by
a logarithmic-derivative mismatch at the outer classical turning point.
Units are scale-free: mass = coupling = 1, so V = -1/r gives E_n = -1/(2 n^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from .fields import AxialConfig
from .potentials import PotentialKind, effective_potential
from .quadrature import Tolerance

try:  # pragma: no cover - exercised implicitly when numba is installed
    from numba import njit as _njit
except ImportError:  # pragma: no cover
    def _njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(fn):
            return fn

        return deco

__all__ = [
    "PotentialTable",
    "RadialProblem",
    "EigenLevel",
    "LevelSpread",
    "BoundStateShortfallError",
    "BracketingError",
    "build_potential_table",
    "solve_levels",
    "spectrum_spread",
    "default_r_max",
]

_RESCALE_LIMIT = 1e250


class BoundStateShortfallError(RuntimeError):
    """Fewer bound states exist on the mesh than were requested."""

    def __init__(self, requested: int, available: int):
        super().__init__(
            f"requested {requested} bound states but the mesh supports only {available}"
        )
        self.requested = requested
        self.available = available


class BracketingError(RuntimeError):
    """The eigenvalue search failed to bracket a level."""


class PotentialTable:
    """Monotone radial grid of effective-potential samples.

    Cubic interpolation between nodes, analytic Coulomb form -beta/r beyond
    the last node.  Construction fails when the tail does not match the last
    sampled value within 5%.
    """

    def __init__(self, grid: Sequence[float], values: Sequence[float], beta: float):
        grid_arr = np.asarray(grid, dtype=float)
        values_arr = np.asarray(values, dtype=float)
        if grid_arr.ndim != 1 or grid_arr.size < 16:
            raise ValueError(f"grid needs at least 16 nodes, got {grid_arr.size}")
        if values_arr.shape != grid_arr.shape:
            raise ValueError("grid and values must have matching shapes")
        if not grid_arr[0] > 0.0:
            raise ValueError(f"grid must be positive, starts at {grid_arr[0]!r}")
        if not np.all(np.diff(grid_arr) > 0.0):
            raise ValueError("grid must be strictly increasing")
        if not np.all(np.isfinite(values_arr)):
            raise ValueError("potential values must be finite")
        if not beta > 0.0:
            raise ValueError(f"beta must be > 0, got {beta!r}")

        tail_value = -beta / grid_arr[-1]
        mismatch = abs(tail_value - values_arr[-1])
        if mismatch > 0.05 * abs(values_arr[-1]):
            raise ValueError(
                f"analytic tail -beta/r = {tail_value:.6g} deviates from the last "
                f"node value {values_arr[-1]:.6g} by more than 5%; extend the grid"
            )

        self.grid = grid_arr
        self.values = values_arr
        self.beta = beta
        self._spline = CubicSpline(grid_arr, values_arr)

    def __call__(self, r):
        r_arr = np.asarray(r, dtype=float)
        scalar = r_arr.ndim == 0
        r_arr = np.atleast_1d(r_arr)
        if np.any(r_arr < self.grid[0] * (1.0 - 1e-12)):
            raise ValueError(
                f"radius below the table domain [{self.grid[0]!r}, inf): min {r_arr.min()!r}"
            )
        out = np.where(r_arr <= self.grid[-1], self._spline(r_arr), -self.beta / r_arr)
        return float(out[0]) if scalar else out


@dataclass(frozen=True)
class RadialProblem:
    """One radial eigenvalue problem: potential, angular momentum, mesh."""

    potential: PotentialTable | Callable[[float], float]
    l: int = 0
    r_min: float = 1e-4
    r_max: float = 50.0
    mesh_points: int = 20_000

    def __post_init__(self) -> None:
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if not 0.0 < self.r_min < self.r_max:
            raise ValueError(f"require 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.mesh_points < 1000:
            raise ValueError(f"mesh_points must be >= 1000, got {self.mesh_points}")


@dataclass(frozen=True)
class EigenLevel:
    """One bound state: radial node count, angular momentum, energy."""

    nodes: int
    l: int
    energy: float


@dataclass(frozen=True)
class LevelSpread:
    """Per-level energy difference between the two potential definitions."""

    n: int
    e_def1: float
    e_def2: float
    delta: float


def default_r_max(e_est: float) -> float:
    """Outer mesh radius for an estimated binding energy."""
    return max(50.0, 30.0 / math.sqrt(2.0 * abs(e_est)))


def build_potential_table(
    kind: PotentialKind,
    beta: float,
    grid: Sequence[float],
    tol: Tolerance = Tolerance(),
) -> PotentialTable:
    """Sample effective_potential(kind) on the grid and wrap it as a table."""
    values = [effective_potential(kind, AxialConfig(beta, float(r)), tol) for r in grid]
    return PotentialTable(grid, values, beta)


@_njit(cache=True)
def _count_nodes(f: np.ndarray, u0: float, u1: float) -> int:
    """Sign changes of the outward Numerov solution across the whole mesh."""
    n = f.shape[0]
    nodes = 0
    p = u0
    c = u1
    if (p > 0.0 and c < 0.0) or (p < 0.0 and c > 0.0):
        nodes += 1
    for i in range(1, n - 1):
        nxt = ((12.0 - 10.0 * f[i]) * c - f[i - 1] * p) / f[i + 1]
        if (c > 0.0 and nxt < 0.0) or (c < 0.0 and nxt > 0.0):
            nodes += 1
        p = c
        c = nxt
        ac = abs(c)
        if ac > _RESCALE_LIMIT:
            p /= ac
            c /= ac
    return nodes


@_njit(cache=True)
def _match_triples(
    f: np.ndarray, u0: float, u1: float, v_end: float, v_end2: float, m: int
) -> tuple[float, float, float, float, float, float]:
    """Propagate outward to m+1 and inward to m-1; return both local triples."""
    p = u0
    c = u1
    out_lo = u0
    out_mid = u1
    out_hi = 0.0
    for i in range(1, m + 1):
        nxt = ((12.0 - 10.0 * f[i]) * c - f[i - 1] * p) / f[i + 1]
        if i == m:
            out_lo = p
            out_mid = c
            out_hi = nxt
            break
        p = c
        c = nxt
        ac = abs(c)
        if ac > _RESCALE_LIMIT:
            p /= ac
            c /= ac

    n = f.shape[0]
    q = v_end
    c = v_end2
    in_lo = 0.0
    in_mid = v_end2
    in_hi = v_end
    for i in range(n - 2, m - 1, -1):
        nxt = ((12.0 - 10.0 * f[i]) * c - f[i + 1] * q) / f[i - 1]
        if i == m:
            in_lo = nxt
            in_mid = c
            in_hi = q
            break
        q = c
        c = nxt
        ac = abs(c)
        if ac > _RESCALE_LIMIT:
            q /= ac
            c /= ac

    return out_lo, out_mid, out_hi, in_lo, in_mid, in_hi


class _Shooter:
    """Numerov machinery for one RadialProblem, reused across trial energies."""

    def __init__(self, problem: RadialProblem):
        self.problem = problem
        self.r = np.linspace(problem.r_min, problem.r_max, problem.mesh_points)
        self.h = self.r[1] - self.r[0]
        v = _potential_on_mesh(problem.potential, self.r)
        self.v_eff = v + problem.l * (problem.l + 1) / (2.0 * self.r * self.r)
        # Series start u ~ r^(l+1) (1 - Z r/(l+1)) with Z read off the
        # potential; Z ~ 0 for potentials regular at the origin.
        z0 = -float(v[0]) * self.r[0]
        slope = -z0 / (problem.l + 1)
        self.u0 = self.r[0] ** (problem.l + 1) * (1.0 + slope * self.r[0])
        self.u1 = self.r[1] ** (problem.l + 1) * (1.0 + slope * self.r[1])

    def _fcoef(self, energy: float) -> np.ndarray:
        k2 = 2.0 * (energy - self.v_eff)
        return 1.0 + (self.h * self.h / 12.0) * k2

    def count_nodes(self, energy: float) -> int:
        return _count_nodes(self._fcoef(energy), self.u0, self.u1)

    def log_derivative_mismatch(self, energy: float) -> float:
        """(u'/u)|outward - (u'/u)|inward at the outer classical turning point."""
        f = self._fcoef(energy)
        classical = np.nonzero(self.v_eff <= energy)[0]
        m = int(classical[-1]) if classical.size else 2
        m = min(max(m, 2), self.v_eff.size - 3)

        kappa = math.sqrt(max(2.0 * (self.v_eff[-1] - energy), 0.0))
        v_end = 1e-120
        v_end2 = v_end * math.exp(kappa * self.h)
        out_lo, out_mid, out_hi, in_lo, in_mid, in_hi = _match_triples(
            f, self.u0, self.u1, v_end, v_end2, m
        )
        if out_mid == 0.0 or in_mid == 0.0:
            return math.inf
        two_h = 2.0 * self.h
        return (out_hi - out_lo) / (two_h * out_mid) - (in_hi - in_lo) / (two_h * in_mid)


def _potential_on_mesh(potential, r: np.ndarray) -> np.ndarray:
    if isinstance(potential, PotentialTable):
        return potential(r)
    try:
        v = np.asarray(potential(r), dtype=float)
        if v.shape == r.shape:
            return v
    except (TypeError, ValueError):
        pass
    return np.array([float(potential(float(x))) for x in r])


def _solve_one(shooter: _Shooter, n_target: int, e_lo: float, n_lo: int,
               e_hi: float, n_hi: int) -> float:
    """Locate the eigenvalue with n_target radial nodes inside [e_lo, e_hi]."""
    span = e_hi - e_lo
    lo, hi = e_lo, e_hi
    nl, nh = n_lo, n_hi
    for _ in range(300):
        width = hi - lo
        if nl == n_target and nh == n_target + 1 and width < span * 2.0**-8:
            d_lo = shooter.log_derivative_mismatch(lo)
            d_hi = shooter.log_derivative_mismatch(hi)
            if math.isfinite(d_lo) and math.isfinite(d_hi) and d_lo * d_hi < 0.0:
                return brentq(
                    shooter.log_derivative_mismatch, lo, hi, xtol=1e-12, rtol=8.9e-16
                )
        if width < 1e-11 * max(1.0, abs(lo)):
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        nm = shooter.count_nodes(mid)
        if nm <= n_target:
            lo, nl = mid, nm
        else:
            hi, nh = mid, nm
    raise BracketingError(
        f"no bracket for the level with {n_target} nodes in [{e_lo!r}, {e_hi!r}]"
    )


def solve_levels(problem: RadialProblem, count: int) -> list[EigenLevel]:
    """The `count` lowest bound states of the problem, ordered by node count.

    Raises BoundStateShortfallError when the mesh supports fewer states than
    requested (states are countable up to the mesh-edge potential value).
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    shooter = _Shooter(problem)
    e_min = float(np.min(shooter.v_eff))
    e_edge = float(shooter.v_eff[-1])
    if not e_edge > e_min:
        raise BracketingError("potential admits no classically bound region on the mesh")
    e_probe = e_edge - 1e-9 * max(1.0, abs(e_edge))
    available = shooter.count_nodes(e_probe)
    if available < count:
        raise BoundStateShortfallError(requested=count, available=available)

    levels = []
    for n in range(count):
        energy = _solve_one(shooter, n, e_min, 0, e_probe, available)
        levels.append(EigenLevel(nodes=n, l=problem.l, energy=energy))
    return levels


def spectrum_spread(
    beta: float,
    levels: int,
    kind_def1: PotentialKind = PotentialKind.DEF1,
    kind_def2: PotentialKind = PotentialKind.DEF2,
    l: int = 0,
    mesh_points: int = 20_000,
    table_nodes: int = 192,
    tol: Tolerance = Tolerance(),
) -> list[LevelSpread]:
    """Per-level energy differences between the two potential definitions.

    Both sides share one mesh and one table grid, so discretization bias
    largely cancels in the differences.
    """
    if not beta > 0.0:
        raise ValueError(f"beta must be > 0, got {beta!r}")
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    r_min = 1e-4
    r_max = default_r_max(-0.5 * beta * beta)
    grid = np.geomspace(r_min, max(100.0 * beta, 50.0), table_nodes)

    solved = []
    for kind in (kind_def1, kind_def2):
        table = build_potential_table(kind, beta, grid, tol)
        problem = RadialProblem(
            potential=table, l=l, r_min=r_min, r_max=r_max, mesh_points=mesh_points
        )
        solved.append(solve_levels(problem, levels))

    rows = []
    for n in range(levels):
        e1 = solved[0][n].energy
        e2 = solved[1][n].energy
        rows.append(LevelSpread(n=n + 1, e_def1=e1, e_def2=e2, delta=e1 - e2))
    return rows
