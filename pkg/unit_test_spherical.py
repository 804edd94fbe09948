# unit_test_spherical.py
import math
import unittest

import numpy as np

from z2harmonic import spherical
from z2harmonic.commons import InvalidInputError


class TestS2Spectra(unittest.TestCase):
    """S^2 颈部谱测试"""

    def test_laplacian_spectra(self):
        """测试函数谱 {0,2,6,...} 与余恰当 1-形式谱 {1,5,11,...}"""
        spectra = spherical.s2_neck_spectra(4)
        self.assertEqual(spectra.functions, (0, 2, 6, 12, 20))
        self.assertEqual(spectra.oneforms, (1, 5, 11, 19))

    def test_flow_discriminants(self):
        spectra = spherical.s2_neck_spectra(2)
        self.assertEqual([f.lambda_sq for f in spectra.flows], [0, 1, 2, 5, 6])
        self.assertEqual([f.discriminant for f in spectra.flows], [1, 5, 9, 21, 25])

    def test_flow_against_matrix(self):
        """测试流特征值与 2x2 矩阵特征值一致"""
        for lambda_sq in (0, 1, 2, 5, 6):
            for H in (-1.0, -0.3, 0.0, 0.7, 1.0):
                lam = math.sqrt(lambda_sq)
                expected = np.linalg.eigvalsh(np.array([[0.0, lam], [lam, H]]))
                np.testing.assert_allclose(spherical.flow_eigenvalues(lambda_sq, H), expected, atol=1e-12)

    def test_flow_curve_limits(self):
        lower, upper = spherical.flow_curve(1, [-1e9, 1e9])
        np.testing.assert_allclose(lower, [-0.5 - math.sqrt(1.25), 0.5 - math.sqrt(1.25)])
        np.testing.assert_allclose(upper, [-0.5 + math.sqrt(1.25), 0.5 + math.sqrt(1.25)])

    def test_invalid_level(self):
        with self.assertRaises(InvalidInputError):
            spherical.s2_neck_spectra(0)


class TestS2Window(unittest.TestCase):
    """S^2 颈部权重窗口测试"""

    def test_window(self):
        """测试 mu0 在 (0, 1/2) 内且 0 严格在窗口内部"""
        window = spherical.s2_fredholm_window()
        self.assertGreater(window.mu0, 0.0)
        self.assertLess(window.mu0, 0.5)
        self.assertAlmostEqual(window.mu0, (math.sqrt(5) - 2) / 2, places=12)
        self.assertLess(-window.mu0, 0.0)

    def test_window_against_endpoint_oracle(self):
        """测试窗口与端点谱的直接计算一致"""
        forbidden = []
        for lambda_sq in (0, 1, 2, 5, 6, 11, 12, 19, 20):
            lam = math.sqrt(lambda_sq)
            for H in (-1.0, 1.0):
                forbidden.extend(np.linalg.eigvalsh(np.array([[0.0, lam], [lam, H]])) + 0.5)
        window = spherical.s2_fredholm_window(4)
        self.assertAlmostEqual(window.mu0, min(abs(f) for f in forbidden), places=12)
        for f in forbidden:
            self.assertGreater(abs(f), window.mu0 - 1e-12)

    def test_stable_in_level(self):
        self.assertEqual(spherical.s2_fredholm_window(2).mu0, spherical.s2_fredholm_window(6).mu0)


if __name__ == "__main__":
    unittest.main()
