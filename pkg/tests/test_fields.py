import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from biaxpot.fields import (
    AxialConfig,
    FieldVector,
    Point3,
    SingularityError,
    axial_field,
    curl_probe,
    curl_probe_richardson,
    d_c,
    default_curl_step,
    f_bi,
    integrand_inner,
    integrand_outer,
)

CFG = AxialConfig(1.0, 1.0)


class TestTypes:
    def test_axial_config_validation(self):
        with pytest.raises(ValueError):
            AxialConfig(0.0, 1.0)
        with pytest.raises(ValueError):
            AxialConfig(1.0, -2.0)
        with pytest.raises(ValueError):
            AxialConfig(math.inf, 1.0)
        assert AxialConfig(2.0, 3.0).rho() == 1.5

    def test_vectors_require_finite_components(self):
        with pytest.raises(ValueError):
            FieldVector(math.nan, 0.0, 0.0)
        with pytest.raises(ValueError):
            Point3(0.0, math.inf, 0.0)
        assert FieldVector(3.0, 0.0, 4.0).norm() == 5.0


class TestFBi:
    def test_zero_maps_to_zero(self):
        out = f_bi(FieldVector(0.0, 0.0, 0.0), 1.0)
        assert (out.x, out.y, out.z) == (0.0, 0.0, 0.0)

    def test_unit_field(self):
        out = f_bi(FieldVector(1.0, 0.0, 0.0), 1.0)
        assert abs(out.x - 1.0 / math.sqrt(2.0)) <= 1e-15
        assert out.y == 0.0 and out.z == 0.0

    def test_saturation_limit(self):
        out = f_bi(FieldVector(1e6, 0.0, 0.0), 1.0)
        assert out.x < 1.0
        assert abs(out.x - 1.0) <= 1e-12

    def test_saturation_bound_random_sweep(self):
        rng = np.random.default_rng(20260810)
        mags = 10.0 ** rng.uniform(-6.0, 12.0, 10_000)
        dirs = rng.normal(size=(10_000, 3))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        for b in (0.5, 1.0, 2.0):
            bound = 1.0 / (b * b)
            for m, d in zip(mags, dirs):
                z = FieldVector(m * d[0], m * d[1], m * d[2])
                assert f_bi(z, b).norm() < bound

    def test_linear_regime_taylor_bound(self):
        # meaningful in floats for |Z| beta^2 in [1e-6, 1e-3], where the
        # cubic term dominates representation noise
        for b in (0.5, 1.0, 2.0):
            for s in np.geomspace(1e-6, 1e-3, 25):
                mag = float(s) / (b * b)
                z = FieldVector(mag, 0.0, 0.0)
                diff = abs(f_bi(z, b).x - mag)
                assert diff <= 0.505 * b**4 * mag**3 + 4e-16 * mag

    @given(
        mag=st.floats(1e-4, 1e3),
        step=st.floats(1.001, 10.0),
        direction=st.tuples(
            st.floats(-1.0, 1.0), st.floats(-1.0, 1.0), st.floats(-1.0, 1.0)
        ).filter(lambda d: math.hypot(*d) > 1e-2),
    )
    def test_monotone_in_magnitude(self, mag, step, direction):
        n = math.hypot(*direction)
        d = tuple(c / n for c in direction)
        small = f_bi(FieldVector(mag * d[0], mag * d[1], mag * d[2]), 1.0).norm()
        big = f_bi(
            FieldVector(mag * step * d[0], mag * step * d[1], mag * step * d[2]), 1.0
        ).norm()
        assert big > small

    @given(
        zx=st.floats(-1e3, 1e3),
        zy=st.floats(-1e3, 1e3),
        zz=st.floats(-1e3, 1e3),
    )
    def test_direction_preserved(self, zx, zy, zz):
        z = FieldVector(zx, zy, zz)
        out = f_bi(z, 1.0)
        # cross product vanishes, dot product is non-negative
        cross = (
            z.y * out.z - z.z * out.y,
            z.z * out.x - z.x * out.z,
            z.x * out.y - z.y * out.x,
        )
        scale = max(z.norm() * out.norm(), 1e-300)
        assert max(abs(c) for c in cross) <= 1e-12 * scale
        assert z.x * out.x + z.y * out.y + z.z * out.z >= 0.0


class TestDC:
    def test_midpoint_superposition(self):
        out = d_c(Point3(0.0, 0.0, 0.5), CFG)
        assert (out.x, out.y) == (0.0, 0.0)
        assert abs(out.z - 8.0) <= 1e-12

    def test_far_side_on_axis(self):
        out = d_c(Point3(0.0, 0.0, -1.0), CFG)
        assert abs(out.z - (-0.75)) <= 1e-15

    def test_off_axis_against_restated_formula(self, goldens):
        out = d_c(Point3(1.0, 0.0, 0.0), CFG)
        ref = goldens["d_c_at_1_0_0_r1"]
        assert abs(out.x - ref[0]) <= 1e-15
        assert abs(out.y - ref[1]) <= 1e-15
        assert abs(out.z - ref[2]) <= 1e-15

    def test_singularity_at_charges(self):
        with pytest.raises(SingularityError):
            d_c(Point3(0.0, 0.0, 0.0), CFG)
        with pytest.raises(SingularityError):
            d_c(Point3(0.0, 0.0, 1.0), CFG)


class TestAxialIntegrands:
    def test_outer_forced_values(self):
        for rho in (1e-3, 1.0, 1e3):
            assert integrand_outer(1.0, rho) == -1.0
        assert abs(integrand_outer(2.0, 1.0) - (-0.6)) <= 1e-15

    def test_outer_tail_order(self):
        # tail ~ -2/(rho^2 x^3)
        for rho in (1.0, 10.0):
            x = 1e4
            val = integrand_outer(x, rho)
            assert abs(val * rho * rho * x**3 / (-2.0) - 1.0) <= 1e-3

    def test_inner_forced_values(self, goldens):
        for rho in (1e-3, 1.0, 1e3):
            assert integrand_inner(1.0, rho) == 1.0
        assert 1.0 - integrand_inner(0.5, 1e-2) <= 1e-9  # rho -> 0 limit
        got = integrand_inner(0.75, 1.0)
        assert abs(got - goldens["integrand_inner_x0p75_rho1"]) <= 1e-15

    @given(
        x=st.floats(1.0, 1e6),
        log_rho=st.floats(-3.0, 3.0),
    )
    def test_outer_bounds(self, x, log_rho):
        val = integrand_outer(x, 10.0**log_rho)
        assert -1.0 <= val < 0.0

    @given(
        x=st.floats(0.5, 1.0),
        log_rho=st.floats(-3.0, 3.0),
    )
    def test_inner_bounds(self, x, log_rho):
        val = integrand_inner(x, 10.0**log_rho)
        assert 0.0 < val <= 1.0

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            integrand_outer(0.5, 1.0)
        with pytest.raises(ValueError):
            integrand_inner(0.2, 1.0)
        with pytest.raises(ValueError):
            integrand_inner(0.75, 0.0)


class TestAxialField:
    def test_saturates_next_to_charges(self):
        assert abs(axial_field(1e-9, CFG) - 1.0) <= 1e-12
        assert abs(axial_field(-1e-9, CFG) - (-1.0)) <= 1e-12
        assert abs(axial_field(1.0 - 1e-9, CFG) - 1.0) <= 1e-12
        assert abs(axial_field(1.0 + 1e-9, CFG) - (-1.0)) <= 1e-12

    def test_matches_vector_route(self):
        for t in (-2.0, 0.3, 0.5, 1.7, 25.0):
            vec = f_bi(d_c(Point3(0.0, 0.0, t), CFG), CFG.beta)
            assert axial_field(t, CFG) == vec.z
            assert vec.x == 0.0 and vec.y == 0.0


class TestCurlProbe:
    def test_on_axis_curl_vanishes(self):
        for z in np.linspace(-3.0, 4.0, 20):
            mag = curl_probe(Point3(0.0, 0.0, float(z)), CFG, 1e-4).norm()
            assert mag <= 1e-6

    def test_off_axis_curl_nonzero_and_richardson_stable(self):
        p = Point3(0.5, 0.0, 0.5)
        scale = f_bi(d_c(p, CFG), CFG.beta).norm()
        c1 = curl_probe_richardson(p, CFG)
        c2 = curl_probe_richardson(p, CFG, 0.5 * default_curl_step(p, CFG))
        assert c1.norm() >= 1e-2 * scale
        assert abs(c1.norm() - c2.norm()) <= 1e-6 * c1.norm()

    def test_curl_is_azimuthal_off_plane(self):
        # at (x, y, z) the curl must align with (-y, x, 0)/|..|
        p = Point3(0.3, 0.4, 0.7)
        c = curl_probe_richardson(p, CFG)
        mag = c.norm()
        assert mag > 0.0
        rad = math.hypot(p.x, p.y)
        radial = (c.x * p.x + c.y * p.y) / rad
        assert abs(radial) <= 1e-5 * mag
        assert abs(c.z) <= 1e-5 * mag

    def test_stencil_touching_charge_raises(self):
        with pytest.raises(SingularityError):
            curl_probe(Point3(0.0, 0.0, 1e-3), CFG, 1e-3)

    def test_default_step_scales_with_geometry(self):
        p = Point3(0.0, 0.0, 2.0)
        assert default_curl_step(p, CFG) == pytest.approx(1e-4, rel=1e-12)
        near = Point3(0.0, 0.0, 1.001)
        assert default_curl_step(near, CFG) == pytest.approx(1e-7, rel=1e-9)
