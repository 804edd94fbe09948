# unit_test_bessel.py
import math
import unittest

import numpy as np
from scipy import special

from z2harmonic import bessel
from z2harmonic.commons import InvalidInputError

ARGUMENTS = [0.01, 0.5, 1.0, 5.0, 10.0, 24.9, 25.1, 30.0, 50.0, 100.0, 300.0, 1000.0]


class TestScaledBessel(unittest.TestCase):
    """指数缩放修正 Bessel 函数测试（以 scipy.special 为对照）"""

    def test_small_orders_against_scipy(self):
        """测试级数与 Miller 递推区间"""
        for n in range(0, bessel.UNIFORM_ORDER):
            for x in ARGUMENTS:
                expected = special.ive(n, x)
                if expected < 1e-250:
                    continue
                self.assertTrue(math.isclose(bessel.ive(n, x), expected, rel_tol=1e-10),
                                msg=f"n={n} x={x}: {bessel.ive(n, x)} vs {expected}")

    def test_large_orders_against_scipy(self):
        """测试大阶数的 Debye 一致展开"""
        for n in (50, 64, 128, 512, 1024):
            for x in ARGUMENTS:
                expected = special.ive(n, x)
                if expected < 1e-250:
                    continue
                self.assertTrue(math.isclose(bessel.ive(n, x), expected, rel_tol=1e-7),
                                msg=f"n={n} x={x}")

    def test_negative_order_symmetry(self):
        for n in range(1, 6):
            self.assertEqual(bessel.ive(-n, 3.0), bessel.ive(n, 3.0))

    def test_zero_argument(self):
        self.assertEqual(bessel.ive(0, 0.0), 1.0)
        self.assertEqual(bessel.ive(3, 0.0), 0.0)

    def test_invalid_argument(self):
        with self.assertRaises(InvalidInputError):
            bessel.ive(0, -1.0)
        with self.assertRaises(InvalidInputError):
            bessel.ive(0, float("nan"))

    def test_sequence_matches_pointwise(self):
        """测试序列求值与逐点求值一致"""
        for x in (0.0, 3.0, 40.0, 400.0):
            seq = bessel.ive_sequence(60, x)
            self.assertEqual(len(seq), 61)
            for n in (0, 1, 10, 49, 50, 60):
                expected = special.ive(n, x)
                if expected < 1e-250:
                    continue
                self.assertTrue(math.isclose(seq[n], expected, rel_tol=1e-7), msg=f"n={n} x={x}")

    def test_recurrence(self):
        """测试三项递推 I_{n-1} - I_{n+1} = (2n/x) I_n"""
        x = 37.5
        seq = bessel.ive_sequence(40, x)
        for n in range(1, 40):
            lhs = seq[n - 1] - seq[n + 1]
            rhs = 2.0 * n / x * seq[n]
            self.assertTrue(math.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-300))


class TestUnscaled(unittest.TestCase):
    """未缩放值与溢出处理测试"""

    def test_iv(self):
        np.testing.assert_allclose(bessel.iv(2, 10.0), special.iv(2, 10.0), rtol=1e-10)

    def test_overflow(self):
        with self.assertRaises(OverflowError):
            bessel.iv(0, 800.0)

    def test_iv_scaled(self):
        value, log_scale = bessel.iv_scaled(1, 800.0)
        self.assertEqual(log_scale, 800.0)
        self.assertTrue(math.isclose(value, special.ive(1, 800.0), rel_tol=1e-10))
        value, log_scale = bessel.iv_scaled(1, 5.0)
        self.assertEqual(log_scale, 0.0)
        self.assertTrue(math.isclose(value, special.iv(1, 5.0), rel_tol=1e-10))


if __name__ == "__main__":
    unittest.main()
