# unit_test_rates.py
import math
import unittest

from z2harmonic import rates
from z2harmonic.commons import InvalidInputError
from z2harmonic.rates import RateRegime


class TestPredictions(unittest.TestCase):
    """误差界预测测试"""

    def test_spinor_neck(self):
        prediction = rates.error_rate("spinor_neck_stretch", 100.0, 0.0)
        self.assertAlmostEqual(prediction.predicted_norm_bound, 0.01)
        self.assertEqual(prediction.exponent, -1.0)
        self.assertTrue(prediction.vanishes)

    def test_oneform_pinch(self):
        """测试 1-形式收缩区的指数 1 - mu"""
        prediction = rates.error_rate(RateRegime.ONEFORM_PINCH, 0.01, 0.25, constant=2.0)
        self.assertAlmostEqual(prediction.exponent, 0.75)
        self.assertAlmostEqual(prediction.predicted_norm_bound, 2.0 * 0.01 ** 0.75)
        self.assertTrue(prediction.vanishes)
        self.assertFalse(rates.error_rate("oneform_pinch", 0.01, 1.5).vanishes)

    def test_torus_pinch(self):
        """测试 mu > 0 时环面收缩区误差不趋于零并给出警告"""
        with self.assertLogs("z2harmonic.rates", level="WARNING"):
            prediction = rates.error_rate("torus_pinch", 0.001, 0.1)
        self.assertFalse(prediction.vanishes)
        negative = rates.error_rate("torus_pinch", 0.001, -0.1)
        self.assertTrue(negative.vanishes)
        self.assertAlmostEqual(negative.predicted_norm_bound, 0.001 ** 0.05 / math.log(1000.0))

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            rates.error_rate("neck", 0.1, 0.0)
        with self.assertRaises(InvalidInputError):
            rates.error_rate("spinor_neck_stretch", 0.0, 0.0)
        with self.assertRaises(InvalidInputError):
            rates.error_rate("spinor_neck_stretch", math.inf, 0.0)
        with self.assertRaises(InvalidInputError):
            rates.error_rate("oneform_pinch", 0.01, math.nan)
        with self.assertRaises(InvalidInputError):
            rates.error_rate("oneform_pinch", 1.5, 0.0)


class TestScalingChecks(unittest.TestCase):
    """截断误差数值标度测试"""

    def test_spinor_cutoff(self):
        """测试颈长 T 时误差按 1/T 衰减"""
        fit = rates.error_rate_check("spinor_neck_stretch", [1000.0, 10.0, 100.0], 0.0)
        self.assertEqual(fit.parameters, (10.0, 100.0, 1000.0))
        self.assertAlmostEqual(fit.fitted_exponent, -1.0, delta=0.01)
        self.assertTrue(fit.vanishes_numerically)
        self.assertAlmostEqual(fit.values[0], math.sqrt(1.2) / 10.0, places=6)

    def test_oneform_exponent(self):
        """测试 1-形式收缩区拟合指数在 1 - mu 的 0.1 以内"""
        deltas = [1e-2, 1e-3, 1e-4, 1e-5]
        for mu in (-0.5, 0.0, 0.5):
            fit = rates.error_rate_check("oneform_pinch", deltas, mu)
            self.assertAlmostEqual(fit.fitted_exponent, 1.0 - mu, delta=0.1)
            self.assertEqual(fit.predicted_exponent, 1.0 - mu)
            self.assertTrue(fit.vanishes_numerically)

    def test_torus_vanishing(self):
        """测试环面收缩区：mu < 0 时误差随 delta 减小，mu > 0 时增大"""
        deltas = [1e-4, 1e-6, 1e-8, 1e-10, 1e-12]
        self.assertTrue(rates.error_rate_check("torus_pinch", deltas, -0.125).vanishes_numerically)
        self.assertFalse(rates.error_rate_check("torus_pinch", deltas, 0.5).vanishes_numerically)

    def test_too_few_points(self):
        with self.assertRaises(InvalidInputError):
            rates.error_rate_check("spinor_neck_stretch", [10.0], 0.0)


if __name__ == "__main__":
    unittest.main()
