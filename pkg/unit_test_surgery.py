# unit_test_surgery.py
import random
import unittest

from z2harmonic import surgery
from z2harmonic.commons import FormulaNotProvidedError, InvalidInputError
from z2harmonic.surgery import CoverProfile


class TestCohomology(unittest.TestCase):
    """反不变上同调 H^1_- 测试"""

    def test_both_nonempty_adds_one(self):
        """测试两个奇异集都非空时多出一维"""
        rng = random.Random(3)
        for _ in range(100):
            d1, d2 = rng.randrange(0, 50), rng.randrange(0, 50)
            self.assertEqual(surgery.h1_minus_connected_sum(CoverProfile(d1), CoverProfile(d2)), d1 + d2 + 1)

    def test_one_side_empty(self):
        p1 = CoverProfile(h1_minus=4)
        p2 = CoverProfile(z_nonempty=False, b1=2)
        self.assertEqual(surgery.h1_minus_connected_sum(p1, p2), 6)
        self.assertEqual(surgery.h1_minus_connected_sum(p2, p1), 6)

    def test_both_empty(self):
        """测试两个奇异集都为空时没有公式"""
        empty = CoverProfile(z_nonempty=False, b1=1)
        with self.assertRaises(FormulaNotProvidedError):
            surgery.h1_minus_connected_sum(empty, empty)

    def test_zero_surgery(self):
        self.assertEqual(surgery.h1_minus_zero_surgery(3), 4)
        with self.assertRaises(FormulaNotProvidedError):
            surgery.h1_minus_zero_surgery(3, null_homologous=False)

    def test_moduli_dimension(self):
        self.assertEqual(surgery.moduli_dimension(CoverProfile(5)), 5)
        self.assertEqual(surgery.moduli_dimension(CoverProfile(z_nonempty=False, b1=2)), 2)

    def test_negative_dimension(self):
        with self.assertRaises(InvalidInputError):
            CoverProfile(h1_minus=-1)


class TestGluedCovers(unittest.TestCase):
    """粘合分歧双覆盖测试"""

    def test_glued_genus(self):
        """测试粘合覆盖亏格 4(g1+g2)-5"""
        for g1 in range(2, 8):
            for g2 in range(2, 8):
                self.assertEqual(surgery.glued_cover_genus(g1, g2), 4 * (g1 + g2) - 5)

    def test_genus_one_warns(self):
        with self.assertLogs("z2harmonic.surgery", level="WARNING"):
            self.assertEqual(surgery.glued_cover_genus(1, 2), 7)

    def test_zero_profile(self):
        """测试零点分布：4(g1+g2)-8 个单零点加 4 个偶重零点"""
        profile = surgery.glued_zero_profile(2, 3)
        self.assertEqual(profile.simple_zeros, 12)
        self.assertEqual(profile.even_zero_multiplicity, 4)
        self.assertEqual(profile.total_with_multiplicity, 16)

    def test_zero_profile_rejects_genus_one(self):
        with self.assertRaises(InvalidInputError):
            surgery.glued_zero_profile(1, 3)

    def test_branched_cover_genus(self):
        """测试 Riemann-Hurwitz 公式"""
        self.assertEqual(surgery.branched_cover_genus(2, 4), 5)
        self.assertEqual(2 - 2 * surgery.branched_cover_genus(2, 4), 2 * (2 - 2 * 2) - 4)
        with self.assertRaises(InvalidInputError):
            surgery.branched_cover_genus(2, 3)


class TestDimensionCounts(unittest.TestCase):
    """表示簇维数测试"""

    def test_dimension_identity(self):
        self.assertEqual(surgery.representation_dim_sum(0, 0), 6)
        self.assertEqual(surgery.representation_dim_sum(4, 10), 20)

    def test_stratum_gap(self):
        """测试粘合层比顶层低两维"""
        for k1 in range(5):
            for k2 in range(5):
                gap = surgery.stratum_gap(k1, k2)
                self.assertEqual(gap.gap, 2)
                self.assertEqual(gap.hypothesis, surgery.STRATUM_HYPOTHESIS)

    def test_cable(self):
        cable = surgery.cable_descriptor(3)
        self.assertEqual(cable.descriptor, "(6,0)-cable of K")
        self.assertEqual(cable.components, 6)
        with self.assertRaises(InvalidInputError):
            surgery.cable_descriptor(0)


if __name__ == "__main__":
    unittest.main()
