# unit_test_torus.py
import math
import unittest

import numpy as np
from scipy import special

from z2harmonic import torus
from z2harmonic.commons import InvalidInputError, fit_line
from z2harmonic.torus import ModeProblem3D

ELLS = [64, 128, 256, 512, 1024]


class TestIndex(unittest.TestCase):
    """环面颈部指标测试"""

    def test_delta_tenth(self):
        count = torus.index_3d(0.1)
        self.assertEqual((count.L, count.index, count.constraints), (10, -42, 42))

    def test_log_grid(self):
        """测试 index = -(4L+2)，约束数 2(2L+1)"""
        for delta, L in ((1.0, 1), (0.5, 2), (0.3, 3), (0.07, 14), (0.01, 100), (0.001, 1000)):
            count = torus.index_3d(delta)
            self.assertEqual(count.L, L)
            self.assertEqual(count.index, -(4 * L + 2))
            self.assertEqual(count.constraints, 2 * (2 * L + 1))

    def test_invalid_delta(self):
        for delta in (0.0, -0.1, 1.5):
            with self.assertRaises(InvalidInputError):
                torus.index_3d(delta)


class TestBesselModes(unittest.TestCase):
    """Bessel 余核元素测试"""

    def test_residual(self):
        """测试一阶方程组残差小于 1e-9"""
        radii = [0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0]
        for k in range(0, 4):
            for ell in (-5, 5, 40):
                solution = torus.bessel_mode_solution(ModeProblem3D(k, ell, 0.1), radii)
                self.assertLess(solution.residual, 1e-9, msg=f"k={k} ell={ell}")

    def test_values(self):
        solution = torus.bessel_mode_solution(ModeProblem3D(2, -3, 0.1), [1.0, 10.0])
        for sample in solution.samples:
            x = 0.3 * sample.R
            self.assertEqual(sample.log_scale, 0.0)
            self.assertTrue(math.isclose(sample.alpha, special.iv(2, x), rel_tol=1e-10))
            self.assertTrue(math.isclose(sample.beta, special.iv(3, x), rel_tol=1e-10))

    def test_scaled_samples(self):
        """测试超过阈值时返回缩放值"""
        solution = torus.bessel_mode_solution(ModeProblem3D(0, 10, 0.1), [1000.0])
        sample = solution.samples[0]
        self.assertEqual(sample.log_scale, 1000.0)
        self.assertTrue(math.isclose(sample.alpha, special.ive(0, 1000.0), rel_tol=1e-10))

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            torus.bessel_mode_solution(ModeProblem3D(0, 0, 0.1), [1.0])
        with self.assertRaises(InvalidInputError):
            torus.bessel_mode_solution(ModeProblem3D(0, 1, 0.1), [0.0])
        with self.assertRaises(InvalidInputError):
            ModeProblem3D(0, 1, 0.1, mu=0.3)


class TestAsymptotics(unittest.TestCase):
    """余核元素渐近行为测试"""

    def test_ratio_converges(self):
        """测试比值趋于 1，偏差按 O(1/ell) 衰减"""
        deviations = []
        for ell in ELLS:
            result = torus.cokernel_asymptotics(ModeProblem3D(0, ell, 0.1), 10.0, -1.0)
            self.assertIsNone(result.advisory)
            deviations.append(result.deviation)
        self.assertTrue(all(b < a for a, b in zip(deviations, deviations[1:])))
        slope, _, _ = fit_line(np.log(ELLS), np.log(deviations))
        self.assertAlmostEqual(slope, -1.0, delta=0.1)

    def test_matches_scaled_bessel_for_any_weight(self):
        """测试比值与 scipy 缩放 Bessel 函数一致，且与权重 mu 无关"""
        for ell, R in ((64, -1.0), (512, 0.5), (1024, -10.0)):
            p = 0.1 * ell * abs(R)
            expected = math.sqrt(math.pi * p) * math.hypot(special.ive(0, p), special.ive(1, p))
            for mu in (-0.2, 0.0, 0.2):
                result = torus.cokernel_asymptotics(ModeProblem3D(0, ell, 0.1, mu), 10.0, R)
                self.assertTrue(math.isclose(result.bessel_ratio, expected, rel_tol=1e-9), msg=f"ell={ell}")
        with self.assertLogs("z2harmonic.torus", level="WARNING"):
            small = torus.cokernel_asymptotics(ModeProblem3D(0, 1, 0.1), 10.0, -1.0)
        expected = math.sqrt(math.pi * 0.1) * math.hypot(special.ive(0, 0.1), special.ive(1, 0.1))
        self.assertTrue(math.isclose(small.bessel_ratio, expected, rel_tol=1e-9))

    def test_advisory(self):
        """测试未进入渐近区时给出提示"""
        with self.assertLogs("z2harmonic.torus", level="WARNING"):
            result = torus.cokernel_asymptotics(ModeProblem3D(0, 1, 0.1), 10.0, -1.0)
        self.assertIn("asymptotic regime", result.advisory)

    def test_invalid_radius(self):
        with self.assertRaises(InvalidInputError):
            torus.cokernel_asymptotics(ModeProblem3D(0, 1, 0.1), 10.0, 0.0)
        with self.assertRaises(InvalidInputError):
            torus.cokernel_asymptotics(ModeProblem3D(0, 1, 0.1), 10.0, 11.0)


class TestPairing(unittest.TestCase):
    """阻碍配对测试"""

    def test_slope(self):
        """测试配对大小的双对数斜率为 -1/2"""
        magnitudes = [torus.obstruction_pairing(ell, 0.1, 10.0, 1, 1, (1, 0)).magnitude for ell in ELLS]
        slope, _, _ = fit_line(np.log(ELLS), np.log(magnitudes))
        self.assertAlmostEqual(slope, -0.5, delta=0.05)

    def test_matrix(self):
        """测试行列式 -2i S^2 conj(c) conj(d)"""
        c, d = 1 + 1j, 2.0
        M, det, invertible = torus.pairing_matrix(64, 0.1, 10.0, c, d)
        S = torus.pairing_scale(64.0)
        self.assertTrue(invertible)
        self.assertTrue(abs(det - (-2j * S * S * np.conj(c) * np.conj(d))) < 1e-12 * S * S)
        result = torus.obstruction_pairing(64, 0.1, 10.0, c, d, (0.3, -0.7))
        np.testing.assert_allclose(M @ np.array([0.3, -0.7]), [result.psi, result.psi_bar])

    def test_singular_when_constant_vanishes(self):
        _, _, invertible = torus.pairing_matrix(64, 0.1, 10.0, 0, 1)
        self.assertFalse(invertible)

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            torus.obstruction_pairing(64, 0.1, 10.0, 0, 0, (1, 0))
        with self.assertRaises(InvalidInputError):
            torus.obstruction_pairing(0, 0.1, 10.0, 1, 1, (1, 0))
        with self.assertRaises(InvalidInputError):
            torus.pairing_scale(10.0, window=(0.5, 1.0))


if __name__ == "__main__":
    unittest.main()
