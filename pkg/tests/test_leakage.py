"""Leakage factor: direct sum, series forms, bounds, classification."""

import cmath
import math

import numpy as np
import pytest

from arrayfp.arrays import (
    AngleOfArrival,
    UcaGeometry,
    UclaGeometry,
    UlaGeometry,
    steering_uca_2d,
    steering_uca_3d,
    steering_ucla,
    steering_ula_vertical,
    uca_radius,
)
from arrayfp.leakage import (
    Expansion,
    FpCondition,
    alpha_direct,
    alpha_series_2d,
    alpha_series_3d,
    alpha_ucla_factored,
    alpha_ula,
    deltas_3d,
    fp_classify,
    leakage_bound,
    min_antennas,
    min_antennas_uniform,
    predicted_limit_shrinking,
    truncation_k,
)
from oracles import series_j, series_j_float

TWO_PI = 2.0 * math.pi
J0_PI_ABS = 0.3042421776440938293467080114867348632403


def _rand_aoa(rng, planar=False):
    el = math.pi / 2 if planar else float(rng.uniform(0.05, math.pi - 0.05))
    return AngleOfArrival(float(rng.uniform(0, TWO_PI)), el)


class TestAlphaDirect:
    def test_self_correlation(self):
        h = steering_uca_2d(UcaGeometry(8, 0.5), 0.4)
        assert alpha_direct(h, h) == pytest.approx(1.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            alpha_direct(np.ones(4, complex), np.ones(5, complex))

    def test_roots_of_unity_sift(self):
        """(1/N) sum e^{j 2 pi n m / N} is 1 if N | m else 0."""
        n = 16
        ones = np.ones(n, complex)
        for m in range(1, n):
            spin = np.exp(2j * math.pi * np.arange(n) * m / n)
            assert abs(alpha_direct(ones, spin)) < 1e-13
        assert alpha_direct(ones, np.exp(2j * math.pi * np.arange(n) * n / n)) \
            == pytest.approx(1.0)

    def test_hermitian_symmetry(self):
        g = UcaGeometry(32, 0.5)
        h1 = steering_uca_2d(g, 0.0)
        h2 = steering_uca_2d(g, 2.2)
        a = alpha_direct(h1, h2)
        b = alpha_direct(h2, h1)
        assert a == pytest.approx(b.conjugate())

    def test_magnitude_capped(self):
        rng = np.random.default_rng(42)
        g = UcaGeometry(64, 1.0)
        for _ in range(50):
            a = alpha_direct(steering_uca_3d(g, _rand_aoa(rng)),
                             steering_uca_3d(g, _rand_aoa(rng)))
            assert abs(a) <= 1.0 + 1e-12


class TestDeltas:
    def test_identical_aoas(self):
        g = UcaGeometry(8, 0.5)
        a = AngleOfArrival(1.0, 1.2)
        dd = deltas_3d(a, a, g)
        assert dd.d1 == dd.d2 == dd.delta == dd.z == 0.0

    def test_plane_opposite(self):
        g = UcaGeometry(8, 0.5)
        dd = deltas_3d(AngleOfArrival(0.0), AngleOfArrival(math.pi), g)
        assert dd.d1 == pytest.approx(-2.0)
        assert dd.d2 == pytest.approx(0.0, abs=1e-15)
        assert dd.delta == pytest.approx(2.0)

    def test_supplementary_elevations_same_azimuth(self):
        g = UcaGeometry(8, 0.5)
        dd = deltas_3d(AngleOfArrival(0.9, math.pi / 4),
                       AngleOfArrival(0.9, 3 * math.pi / 4), g)
        assert dd.delta < 1e-15

    def test_2d_specialization_of_z(self):
        g = UcaGeometry(16, 0.5)
        for phi in (0.3, 1.7, math.pi, 5.0):
            dd = deltas_3d(AngleOfArrival(0.0), AngleOfArrival(phi), g)
            want = 2 * TWO_PI * uca_radius(g) * abs(math.sin(phi / 2))
            assert dd.z == pytest.approx(want, abs=1e-12)

    def test_beta_principal_range(self):
        rng = np.random.default_rng(42)
        g = UcaGeometry(8, 0.5)
        for _ in range(100):
            dd = deltas_3d(_rand_aoa(rng), _rand_aoa(rng), g)
            assert -math.pi < dd.beta <= math.pi


class TestSeries2d:
    def test_zero_relative_azimuth(self):
        assert alpha_series_2d(UcaGeometry(8, 0.5), 0.0) == 1.0 + 0.0j

    def test_matches_direct_spec_points(self):
        g = UcaGeometry(16, 0.5)
        for phi in (TWO_PI / 10, TWO_PI / 16):
            direct = alpha_direct(steering_uca_2d(g, 0.0), steering_uca_2d(g, phi))
            assert abs(alpha_series_2d(g, phi) - direct) < 1e-10

    def test_matches_direct_random(self):
        rng = np.random.default_rng(42)
        for _ in range(60):
            n = int(rng.choice([4, 8, 16, 32, 64]))
            d = float(rng.choice([0.25, 0.5, 1.0]))
            phi = float(rng.uniform(-TWO_PI, TWO_PI))
            g = UcaGeometry(n, d)
            direct = alpha_direct(steering_uca_2d(g, 0.0), steering_uca_2d(g, phi))
            assert abs(alpha_series_2d(g, phi) - direct) < 1e-10

    def test_tol_must_be_positive(self):
        with pytest.raises(ValueError):
            alpha_series_2d(UcaGeometry(8, 0.5), 1.0, tol=0.0)

    def test_z_sandwich(self):
        """2 N d |sin(phi/2)| <= |z| <= N pi d for every computed z."""
        rng = np.random.default_rng(42)
        for _ in range(100):
            n = int(rng.integers(2, 200))
            d = float(rng.uniform(0.1, 2.0))
            phi = float(rng.uniform(-math.pi, math.pi))
            z = 2 * TWO_PI * uca_radius(UcaGeometry(n, d)) * math.sin(phi / 2)
            assert 2 * n * d * abs(math.sin(phi / 2)) <= abs(z) * (1 + 1e-12)
            assert abs(z) <= n * math.pi * d * (1 + 1e-12)


class TestSeries3d:
    def test_coincident_projection_returns_one(self):
        g = UcaGeometry(8, 0.5)
        dd = deltas_3d(AngleOfArrival(0.9, math.pi / 4),
                       AngleOfArrival(0.9, 3 * math.pi / 4), g)
        # delta underflows to exactly zero here
        assert alpha_series_3d(g, dd) == 1.0 + 0.0j

    def test_reduces_to_2d_in_plane(self):
        g = UcaGeometry(16, 0.5)
        for phi in (0.4, 1.3, 4.4):
            dd = deltas_3d(AngleOfArrival(0.0), AngleOfArrival(phi), g)
            assert abs(alpha_series_3d(g, dd) - alpha_series_2d(g, phi)) < 1e-12

    def test_matches_direct_random(self):
        rng = np.random.default_rng(42)
        for _ in range(60):
            n = int(rng.choice([4, 8, 16, 32, 64]))
            d = float(rng.choice([0.25, 0.5, 1.0]))
            g = UcaGeometry(n, d)
            a1, a2 = _rand_aoa(rng), _rand_aoa(rng)
            direct = alpha_direct(steering_uca_3d(g, a1), steering_uca_3d(g, a2))
            got = alpha_series_3d(g, deltas_3d(a1, a2, g))
            assert abs(got - direct) < 1e-10


class TestAlphaUla:
    def test_equal_elevations(self):
        assert alpha_ula(UlaGeometry(8, 0.4), 1.1, 1.1) == 1.0 + 0.0j

    def test_half_wavelength_null(self):
        # N_c=2, d_v=0.5, cos difference 1: (1 + e^{j pi})/2 = 0
        a = alpha_ula(UlaGeometry(2, 0.5), math.pi / 2, 0.0)
        assert abs(a) < 1e-15

    def test_matches_direct_random(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            nc = int(rng.integers(1, 40))
            dv = float(rng.uniform(0.05, 1.5))
            g = UlaGeometry(nc, dv)
            t1 = float(rng.uniform(0, math.pi))
            t2 = float(rng.uniform(0, math.pi))
            direct = alpha_direct(steering_ula_vertical(g, t1),
                                  steering_ula_vertical(g, t2))
            assert abs(alpha_ula(g, t1, t2) - direct) < 1e-13

    def test_grating_alias_returns_one(self):
        """d_v = 1: endfire-to-endfire aliases to zero phase progression."""
        g = UlaGeometry(8, 1.0)
        a = alpha_ula(g, 0.0, math.pi)  # cos difference -2 -> u = -4 pi
        assert a == pytest.approx(1.0 + 0.0j)
        direct = alpha_direct(steering_ula_vertical(g, 0.0),
                              steering_ula_vertical(g, math.pi))
        assert abs(a - direct) < 1e-12


class TestUclaFactored:
    def test_coincident(self):
        g = UclaGeometry(UcaGeometry(8, 0.5), UlaGeometry(4, 0.4))
        a = AngleOfArrival(0.3, 1.0)
        assert alpha_ucla_factored(g, a, a) == pytest.approx(1.0 + 0.0j)

    def test_matches_full_vector(self):
        g = UclaGeometry(UcaGeometry(16, 0.5), UlaGeometry(8, 0.5))
        rng = np.random.default_rng(42)
        for _ in range(30):
            a1, a2 = _rand_aoa(rng), _rand_aoa(rng)
            full = alpha_direct(steering_ucla(g, a1), steering_ucla(g, a2))
            assert abs(alpha_ucla_factored(g, a1, a2) - full) < 1e-12

    def test_product_bound(self):
        g = UclaGeometry(UcaGeometry(16, 0.5), UlaGeometry(8, 0.5))
        rng = np.random.default_rng(7)
        for _ in range(50):
            a1, a2 = _rand_aoa(rng), _rand_aoa(rng)
            ah = alpha_direct(steering_uca_3d(g.uca, a1), steering_uca_3d(g.uca, a2))
            av = alpha_ula(g.ula, a1.elevation, a2.elevation)
            a = alpha_ucla_factored(g, a1, a2)
            assert abs(a) <= min(abs(ah), abs(av)) + 1e-15


class TestLeakageBound:
    def test_head_order_examples(self):
        assert leakage_bound(UcaGeometry(8, 0.5), 1.0).k1 == 5
        assert leakage_bound(UcaGeometry(8, 0.25), 1.0).k1 == 3

    def test_tail_is_dust_at_n64(self):
        bb = leakage_bound(UcaGeometry(64, 0.5), TWO_PI / 10)
        assert bb.a2 < 1e-90
        assert bb.total == bb.a1 + bb.a2

    def test_bound_dominates_direct(self):
        g = UcaGeometry(64, 0.5)
        a = abs(alpha_direct(steering_uca_2d(g, 0.0),
                             steering_uca_2d(g, TWO_PI / 10)))
        assert a <= leakage_bound(g, TWO_PI / 10).total

    def test_deltas_and_phi_paths_agree(self):
        g = UcaGeometry(32, 0.5)
        phi = 1.1
        via_phi = leakage_bound(g, phi)
        via_dd = leakage_bound(g, deltas_3d(AngleOfArrival(0.0),
                                            AngleOfArrival(phi), g))
        assert via_phi.total == pytest.approx(via_dd.total, rel=1e-12)

    def test_zero_separation_rejected(self):
        with pytest.raises(ValueError):
            leakage_bound(UcaGeometry(8, 0.5), 0.0)
        g = UcaGeometry(8, 0.5)
        a = AngleOfArrival(0.3, 1.0)
        with pytest.raises(ValueError):
            leakage_bound(g, deltas_3d(a, a, g))

    def test_geometric_ratio_at_most_half(self):
        """q = e pi d / (2 ceil(e pi d)) <= 1/2 for every d > 0."""
        rng = np.random.default_rng(42)
        for d in np.concatenate([rng.uniform(1e-3, 30.0, 200), [0.25, 0.5, 1.0]]):
            k1 = math.ceil(math.e * math.pi * d)
            q = math.e * math.pi * d / (2 * k1)
            assert q <= 0.5 + 1e-15

    def test_k_max_at_least_k1(self):
        bb = leakage_bound(UcaGeometry(8, 1.0), 2.0)
        assert bb.k_max >= bb.k1


class TestTruncationK:
    def test_huge_tolerance_floors_at_k1(self):
        assert truncation_k(UcaGeometry(8, 0.5), 1.0) == 5
        assert truncation_k(UcaGeometry(64, 0.5), 1e-12) == 5

    def test_monotone_in_tolerance(self):
        g = UcaGeometry(4, 0.5)
        ks = [truncation_k(g, t) for t in (1.0, 1e-12, 1e-30, 1e-60)]
        assert ks == sorted(ks)

    def test_scan_result_certified_by_oracle(self):
        """Beyond K the actual |J_{kN}(z)| tail really is below tol."""
        g = UcaGeometry(4, 0.5)
        k = truncation_k(g, 1e-30)
        assert k == 21
        z = 2 * TWO_PI * uca_radius(g)  # largest attainable |z| for this circle
        tail = math.fsum(2.0 * abs(series_j_float(4 * kk, z, target_dps=40))
                         for kk in range(k + 1, k + 30))
        assert tail < 1e-30

    def test_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            truncation_k(UcaGeometry(8, 0.5), 0.0)
        with pytest.raises(ValueError):
            truncation_k(UcaGeometry(8, 0.5), math.inf)


class TestFpClassify:
    def test_planar_distinct_holds(self):
        v = fp_classify(UcaGeometry(8, 0.5),
                        [AngleOfArrival(0.0), AngleOfArrival(math.pi)])
        assert v.holds and v.violated_condition is None

    def test_supplementary_elevation_pair_violates(self):
        v = fp_classify(UcaGeometry(8, 0.5),
                        [AngleOfArrival(0.9, math.pi / 4),
                         AngleOfArrival(0.9, 3 * math.pi / 4)])
        assert not v.holds
        assert v.violated_condition is FpCondition.DELTA_ZERO_3D
        assert v.violating_user_indices == (1,)

    def test_ucla_vertical_distinct_elevations_hold(self):
        g = UclaGeometry(UcaGeometry(8, 0.5), UlaGeometry(4, 0.4))
        v = fp_classify(g, [AngleOfArrival(0.0, math.pi / 3),
                            AngleOfArrival(0.0, math.pi / 4)],
                        Expansion.VERTICAL)
        assert v.holds

    def test_vertical_spacing_edge(self):
        """d_v = 0.5 is rejected, 0.4 accepted, elevations distinct."""
        aoas = [AngleOfArrival(0.0, math.pi / 3), AngleOfArrival(0.0, math.pi / 4)]
        bad = UclaGeometry(UcaGeometry(8, 0.5), UlaGeometry(4, 0.5))
        good = UclaGeometry(UcaGeometry(8, 0.5), UlaGeometry(4, 0.4))
        v_bad = fp_classify(bad, aoas, Expansion.VERTICAL)
        assert not v_bad.holds
        assert v_bad.violated_condition is FpCondition.VERTICAL_SPACING_TOO_LARGE
        assert fp_classify(good, aoas, Expansion.VERTICAL).holds

    def test_vertical_same_elevation(self):
        g = UclaGeometry(UcaGeometry(8, 0.5), UlaGeometry(4, 0.4))
        v = fp_classify(g, [AngleOfArrival(0.0, 1.0), AngleOfArrival(2.0, 1.0)],
                        Expansion.VERTICAL)
        assert not v.holds
        assert v.violated_condition is FpCondition.VERTICAL_SAME_ELEVATION
        assert v.violating_user_indices == (1,)

    def test_planar_coincident_azimuth(self):
        v = fp_classify(UcaGeometry(8, 0.5),
                        [AngleOfArrival(1.0), AngleOfArrival(1.0 + TWO_PI),
                         AngleOfArrival(2.0)])
        assert not v.holds
        assert v.violated_condition is FpCondition.SAME_AZIMUTH_2D
        assert v.violating_user_indices == (1,)

    def test_on_axis_pair(self):
        v = fp_classify(UcaGeometry(8, 0.5),
                        [AngleOfArrival(0.3, 0.0), AngleOfArrival(2.0, math.pi)])
        assert not v.holds
        assert v.violated_condition is FpCondition.ON_AXIS_PAIR

    def test_single_on_axis_user_holds_with_note(self):
        """On-axis interferer, off-axis main: delta > 0, leakage vanishes."""
        v = fp_classify(UcaGeometry(8, 0.5),
                        [AngleOfArrival(0.3, math.pi / 2), AngleOfArrival(2.0, 0.0)])
        assert v.holds
        assert v.notes and "on-axis" in v.notes[0]

    def test_ucla_horizontal_uses_delta(self):
        g = UclaGeometry(UcaGeometry(8, 0.5), UlaGeometry(4, 0.4))
        v = fp_classify(g, [AngleOfArrival(0.9, math.pi / 4),
                            AngleOfArrival(0.9, 3 * math.pi / 4)],
                        Expansion.HORIZONTAL)
        assert not v.holds
        assert v.violated_condition is FpCondition.DELTA_ZERO_3D

    def test_holds_iff_no_condition(self):
        rng = np.random.default_rng(42)
        g = UcaGeometry(8, 0.5)
        for _ in range(50):
            aoas = [_rand_aoa(rng) for _ in range(int(rng.integers(1, 5)))]
            v = fp_classify(g, aoas)
            assert v.holds == (v.violated_condition is None)

    def test_errors(self):
        with pytest.raises(ValueError):
            fp_classify(UcaGeometry(8, 0.5), [])
        with pytest.raises(ValueError):
            fp_classify(UcaGeometry(8, 0.5), [AngleOfArrival(0.0)],
                        Expansion.VERTICAL)


class TestPredictedLimit:
    def test_half_wavelength(self):
        assert predicted_limit_shrinking(0.5) == pytest.approx(J0_PI_ABS, abs=1e-13)

    def test_null_spacing_kills_the_limit(self):
        """At 2 pi d = first null of J_0 the residual leakage vanishes too."""
        lo, hi = 2.0, 3.0  # J_0 changes sign in here
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if series_j_float(0, mid, target_dps=30) > 0:
                lo = mid
            else:
                hi = mid
        null = 0.5 * (lo + hi)
        assert null == pytest.approx(2.40482555769577276862163187933, abs=1e-12)
        assert predicted_limit_shrinking(null / TWO_PI) < 1e-12

    def test_tiny_spacing_gives_one(self):
        assert predicted_limit_shrinking(1e-12) == pytest.approx(1.0)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            predicted_limit_shrinking(0.0)


class TestShrinkingIdentity:
    def test_constant_z_across_n(self):
        """phi_2 = 2 pi / N makes z = 2 pi d independent of N."""
        for d in (0.25, 0.5, 1.0):
            for n in (8, 17, 64, 1023, 4096):
                g = UcaGeometry(n, d)
                dd = deltas_3d(AngleOfArrival(0.0), AngleOfArrival(TWO_PI / n), g)
                assert abs(dd.z - TWO_PI * d) < 1e-12

    def test_coincident_never_converges(self):
        a = AngleOfArrival(1.3)
        for n in (8, 64, 512):
            g = UcaGeometry(n, 0.5)
            h = steering_uca_2d(g, 1.3)
            assert abs(alpha_direct(h, h)) == pytest.approx(1.0)


class TestMinAntennas:
    def test_opposite_user_example(self):
        aoas = [AngleOfArrival(0.0), AngleOfArrival(math.pi)]
        with pytest.warns(UserWarning):  # two users, five head terms
            assert min_antennas(aoas, 0.5, 10.0) == 20

    def test_margin_one_boundary(self):
        aoas = [AngleOfArrival(0.0), AngleOfArrival(1.0)]
        want = math.ceil(1.0 / (0.5 * abs(math.sin(0.5))))
        with pytest.warns(UserWarning):
            assert min_antennas(aoas, 0.5, 1.0) == want

    def test_uniform_shortcut_close_to_general(self):
        m, d, margin = 10, 0.5, 10.0
        aoas = [AngleOfArrival(TWO_PI * i / m) for i in range(m)]
        general = min_antennas(aoas, d, margin)
        shortcut = min_antennas_uniform(m, d, margin)
        assert general == 65 and shortcut == 64
        assert abs(general - shortcut) <= 1

    def test_coincident_azimuth_rejected(self):
        with pytest.raises(ValueError):
            min_antennas([AngleOfArrival(0.0), AngleOfArrival(0.0)], 0.5, 10.0)

    def test_margin_below_one_rejected(self):
        with pytest.raises(ValueError):
            min_antennas([AngleOfArrival(0.0), AngleOfArrival(1.0)], 0.5, 0.5)

    def test_wide_spacing_warns(self):
        """e pi d >= M: more head terms than users, guidance is loose."""
        aoas = [AngleOfArrival(0.0), AngleOfArrival(math.pi)]
        with pytest.warns(UserWarning):
            min_antennas(aoas, 2.0, 10.0)
        with pytest.warns(UserWarning):
            min_antennas_uniform(2, 2.0, 10.0)

    def test_narrow_spacing_does_not_warn(self):
        import warnings
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            min_antennas_uniform(100, 0.5, 10.0)
