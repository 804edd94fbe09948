# unit_test_neck.py
import math
import unittest
from unittest.mock import patch

import numpy as np

from z2harmonic import neck
from z2harmonic.commons import InvalidInputError, NumericalError
from z2harmonic.neck import BvpConfig, NeckModel2D, OdeSolveConfig


class TestWeights(unittest.TestCase):
    """权重窗口与核维数测试"""

    def test_unit_kernel_d1(self):
        """测试 d = 1 时 (-1/2, 1/2) 内核维数为 1"""
        for mu in (-0.4, -0.2, 0.0, 0.2, 0.4):
            self.assertEqual(neck.mode_kernel_dimension(1, mu), (1, 0))

    def test_forbidden_weights_d1(self):
        """测试 d = 1 的非 Fredholm 权重恰为 Z + 1/2"""
        for mu in (-1.5, -0.5, 0.5, 1.5):
            self.assertTrue(neck.is_forbidden_weight(1, mu))
            with self.assertRaises(InvalidInputError) as ctx:
                neck.mode_kernel_dimension(1, mu)
            self.assertIn("non-Fredholm", str(ctx.exception))
        for mu in (-1.0, 0.0, 0.49, 1.0):
            self.assertFalse(neck.is_forbidden_weight(1, mu))

    def test_d2_windows(self):
        """测试 d = 2：0 是非 Fredholm 权重，(0, 1) 内核为 3 维"""
        self.assertEqual(neck.mode_kernel_dimension(2, -0.9)[0], 1)
        self.assertEqual(neck.mode_kernel_dimension(2, 0.9)[0], 3)
        with self.assertRaises(InvalidInputError):
            neck.mode_kernel_dimension(2, 0.0)

    def test_non_finite_weight(self):
        for mu in (math.nan, math.inf):
            with self.assertRaises(InvalidInputError):
                neck.mode_kernel_dimension(1, mu)

    def test_cokernel_below_window(self):
        window = neck.fredholm_window(1, -0.6)
        self.assertEqual((window.lower, window.upper), (-1.5, -0.5))
        self.assertEqual((window.kernel, window.cokernel), (0, 1))

    def test_spectral_flow_d1(self):
        report = neck.spectral_flow(1)
        self.assertEqual(report.start_spectrum, "Z + 1/2")
        self.assertEqual(report.end_spectrum, "Z + 1/2")
        self.assertEqual(report.forbidden_weights, "Z + 1/2")
        self.assertTrue(report.window_checks[0]["consistent"])
        # two modes enter at each forbidden weight crossed upwards
        kernels = [w.kernel for w in report.windows if w.lower >= -0.5]
        self.assertEqual(kernels, [1, 3, 5])

    def test_spectral_flow_d2_reports_inconsistency(self):
        """测试 d = 2 时 (-1, 1) 不是单一窗口，报告不一致"""
        with self.assertLogs("z2harmonic.neck", level="WARNING"):
            report = neck.spectral_flow(2)
        check = report.window_checks[0]
        self.assertFalse(check["consistent"])
        self.assertEqual(check["computed_kernels"], [1, 3])
        self.assertEqual(report.forbidden_weights, "Z")

    def test_slice_potential(self):
        self.assertAlmostEqual(neck.slice_potential(1, 0.0), 0.0)
        self.assertAlmostEqual(neck.slice_potential(2, 1e8), 1.0)


class TestModeOde(unittest.TestCase):
    """模式常微分方程数值积分测试"""

    def test_exponent_sweep(self):
        """测试 |k| <= 5 的拟合指数在 0.02 以内，与解析解相对误差 1e-8 以内"""
        cfg = OdeSolveConfig(s_max=20.0)
        for k in range(-5, 6):
            fit = neck.integrate_mode_ode(1, k, cfg)
            self.assertAlmostEqual(fit.rate_plus, k - 0.5, delta=0.02)
            self.assertAlmostEqual(fit.rate_minus, -(k + 0.5), delta=0.02)
            self.assertEqual((fit.expected_plus, fit.expected_minus), neck.analytic_exponents(1, k))
            self.assertLess(fit.max_rel_deviation, 1e-8)
            self.assertGreater(fit.r_squared, 0.999)

    def test_exponent_sweep_other_twists(self):
        """测试 d = 0, 2 的拟合指数与解析解一致，包括增长率为 0 的模式"""
        cfg = OdeSolveConfig(s_max=20.0)
        for d in (0, 2):
            for k in range(-3, 4):
                fit = neck.integrate_mode_ode(d, k, cfg)
                expected_plus, expected_minus = neck.analytic_exponents(d, k)
                self.assertAlmostEqual(fit.rate_plus, expected_plus, delta=0.02, msg=f"d={d} k={k}")
                self.assertAlmostEqual(fit.rate_minus, expected_minus, delta=0.02, msg=f"d={d} k={k}")
                self.assertLess(fit.max_rel_deviation, 1e-8)

    def test_kernel_count_matches_fitted_modes(self):
        """测试核维数等于拟合指数在权重 mu 下两端可积的模式数"""
        cfg = OdeSolveConfig(s_max=20.0)
        weights = (-1.2, -0.8, -0.25, 0.0, 0.3, 0.9, 1.2, 2.1)
        for d in (0, 1, 2):
            fits = [neck.integrate_mode_ode(d, k, cfg) for k in range(-4, 5)]
            for mu in weights:
                if neck.is_forbidden_weight(d, mu):
                    continue
                integrable = sum(1 for f in fits if f.rate_plus < mu and f.rate_minus < mu)
                self.assertEqual(neck.mode_kernel_dimension(d, mu)[0], integrable, msg=f"d={d} mu={mu}")

    def test_closed_form(self):
        s = np.array([-1.0, 0.0, 2.0])
        np.testing.assert_allclose(neck.mode_closed_form(1, 2, s),
                                   np.exp(2 * s) / np.sqrt(np.cosh(s)))

    def test_short_interval_rejected(self):
        with self.assertRaises(InvalidInputError):
            neck.integrate_mode_ode(1, 0, OdeSolveConfig(s_max=2.0))

    def test_bad_fit_rejected(self):
        """测试拟合优度不足时报数值错误"""
        with patch("z2harmonic.neck.fit_line", return_value=(0.0, 0.0, 0.5)):
            with self.assertRaises(NumericalError):
                neck.integrate_mode_ode(1, 0)

    def test_config_validation(self):
        with self.assertRaises(InvalidInputError):
            OdeSolveConfig(fit_fraction=0.0)
        with self.assertRaises(InvalidInputError):
            OdeSolveConfig(rel_tol=-1.0)

    def test_config_from_hparams(self):
        cfg = OdeSolveConfig.from_hparams({"s_max": 15.0, "unknown": 1})
        self.assertEqual(cfg.s_max, 15.0)
        self.assertEqual(cfg.fit_window, (11.25, 15.0))
        self.assertEqual(BvpConfig.from_hparams(None), BvpConfig())


class TestFiniteCylinder(unittest.TestCase):
    """有限圆柱边值问题测试"""

    def test_condition_i(self):
        """测试条件 (i) 下核与余核均为 0"""
        for R0 in (20.0, 50.0, 100.0):
            result = neck.finite_cylinder_bvp(NeckModel2D(1, R0=R0), "i")
            self.assertEqual((result.kernel_dim, result.cokernel_dim), (0, 0))
            self.assertGreaterEqual(result.singular_gap, 1e6)

    def test_condition_ii(self):
        """测试条件 (ii) 下核与余核均为 2"""
        for R0 in (20.0, 50.0, 100.0):
            result = neck.finite_cylinder_bvp(NeckModel2D(1, R0=R0), "ii")
            self.assertEqual((result.kernel_dim, result.cokernel_dim), (2, 2))
            self.assertGreaterEqual(result.singular_gap, 1e6)
            self.assertEqual(set(result.kernel_modes), {"alpha_-1", "beta_1"})

    def test_kernel_boundary_decay(self):
        """测试核元素在边界处按 <R0>^{-1/2} 衰减"""
        result = neck.finite_cylinder_bvp(NeckModel2D(1, R0=100.0), "ii")
        for profile in result.profiles:
            self.assertTrue(math.isclose(profile.boundary_ratio, profile.expected_ratio, rel_tol=1e-2))

    def test_weight_checked(self):
        """测试有限柱面拒绝非 Fredholm 权重与 (-1/2, 0] 之外的权重"""
        for mu in (0.5, -0.5):
            with self.assertRaises(InvalidInputError) as ctx:
                neck.finite_cylinder_bvp(NeckModel2D(1, mu=mu, R0=50.0), "i")
            self.assertIn("non-Fredholm", str(ctx.exception))
        for mu in (0.25, -0.75):
            with self.assertRaises(InvalidInputError):
                neck.finite_cylinder_bvp(NeckModel2D(1, mu=mu, R0=50.0), "i")
        with self.assertRaises(InvalidInputError):
            NeckModel2D(1, mu=math.nan)
        result = neck.finite_cylinder_bvp(NeckModel2D(1, mu=-0.25, R0=50.0), "i")
        self.assertEqual((result.kernel_dim, result.cokernel_dim), (0, 0))

    def test_invalid_inputs(self):
        with self.assertRaises(InvalidInputError):
            neck.finite_cylinder_bvp(NeckModel2D(1, R0=50.0), "iii")
        with self.assertRaises(InvalidInputError):
            neck.finite_cylinder_bvp(NeckModel2D(2, R0=50.0), "i")
        with self.assertRaises(InvalidInputError):
            neck.finite_cylinder_bvp(NeckModel2D(1, R0=0.5), "i")

    def test_ambiguous_gap(self):
        """测试奇异值间隙不足时报数值错误"""
        cfg = BvpConfig(min_gap=1e300)
        with self.assertRaises(NumericalError):
            neck.finite_cylinder_bvp(NeckModel2D(1, R0=20.0), "ii", cfg=cfg)


class TestCokernelProfile(unittest.TestCase):
    """余核元素加权范数测试"""

    def test_norm_bounded(self):
        """测试归一化范数对 R0 一致有界"""
        for mu in (0.0, -0.25):
            norms = [neck.cokernel_norm_profile(mu, R0).norm for R0 in (100.0, 1000.0, 10000.0)]
            for value in norms:
                self.assertGreater(value, 1.0)
                self.assertLess(value, 10.0)
            self.assertLess(abs(norms[-1] - norms[-2]) / norms[-1], 0.05)

    def test_norms_agree_across_scales(self):
        """测试 R0 = 10, 100, 1000 时归一化范数相差不超过 20%"""
        for mu in (0.0, -0.25):
            norms = [neck.cokernel_norm_profile(mu, R0).norm for R0 in (10.0, 100.0, 1000.0)]
            for value in norms:
                self.assertLess(abs(value - norms[-1]) / norms[-1], 0.2)

    def test_neck_inside_core(self):
        """测试 R0 不超过核心半径时外部质量比例为 0"""
        profile = neck.cokernel_norm_profile(0.0, 10.0)
        self.assertEqual(profile.outer_fraction, 0.0)
        self.assertAlmostEqual(profile.norm, math.sqrt(4 * math.pi), places=8)
        self.assertAlmostEqual(profile.half_fraction, 0.5, places=8)

    def test_mass_leaves_core(self):
        """测试大 R0 时质量集中在核心区域之外"""
        for mu in (0.0, -0.25):
            profile = neck.cokernel_norm_profile(mu, 10000.0)
            self.assertGreater(profile.outer_fraction, 0.9)
        self.assertAlmostEqual(neck.cokernel_norm_profile(0.0, 1000.0).half_fraction, 0.5, places=6)

    def test_zero_weight_norm(self):
        self.assertAlmostEqual(neck.cokernel_norm_profile(0.0, 500.0).norm, math.sqrt(4 * math.pi), places=8)

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            neck.cokernel_norm_profile(0.1, 100.0)
        with self.assertRaises(InvalidInputError):
            neck.cokernel_norm_profile(0.0, 0.0)


if __name__ == "__main__":
    unittest.main()
