# unit_test_orbifold.py
import itertools
import random
import unittest
from fractions import Fraction

from z2harmonic import orbifold
from z2harmonic.commons import InvalidInputError
from z2harmonic.orbifold import OrbifoldLineBundle, OrbifoldSurface, SectionCount


def surfaces(max_genus=5, max_points=6, orders=range(2, 8)):
    for genus in range(max_genus + 1):
        for n in range(max_points + 1):
            for cone_orders in itertools.combinations_with_replacement(orders, n):
                yield OrbifoldSurface(genus, cone_orders)


def random_bundle(rng, surface):
    betas = tuple(rng.randrange(-30, 30) for _ in range(surface.n))
    return OrbifoldLineBundle(surface, rng.randrange(-10, 10), betas)


class TestOrbifoldSurface(unittest.TestCase):
    """轨形曲面测试"""

    def test_order_one_points_dropped(self):
        """测试阶为 1 的锥点被忽略"""
        surface = OrbifoldSurface(1, (1, 3, 1))
        self.assertEqual(surface.cone_orders, (3,))
        self.assertEqual(surface.n, 1)

    def test_euler_characteristic(self):
        """测试轨形欧拉示性数"""
        self.assertEqual(orbifold.orb_euler_characteristic(OrbifoldSurface(0, (2, 3, 5))), Fraction(1, 30))
        self.assertEqual(orbifold.orb_euler_characteristic(OrbifoldSurface(2)), -2)

    def test_invalid_genus(self):
        """测试负亏格报错"""
        with self.assertRaises(InvalidInputError):
            OrbifoldSurface(-1)

    def test_str(self):
        self.assertEqual(str(OrbifoldSurface(0, (2, 3))), "(0; 2,3)")


class TestLineBundleArithmetic(unittest.TestCase):
    """线丛算术测试"""

    def setUp(self):
        self.rng = random.Random(20240501)

    def test_normalization_preserves_degree(self):
        """测试规范化时 beta 溢出进位到 b"""
        surface = OrbifoldSurface(0, (3,))
        L = OrbifoldLineBundle(surface, 0, (7,))
        self.assertEqual((L.b, L.betas), (2, (1,)))
        self.assertEqual(orbifold.degree(L), Fraction(7, 3))
        neg = OrbifoldLineBundle(surface, 0, (-1,))
        self.assertEqual((neg.b, neg.betas), (-1, (2,)))

    def test_length_mismatch(self):
        """测试局部不变量个数不匹配"""
        with self.assertRaises(InvalidInputError):
            OrbifoldLineBundle(OrbifoldSurface(0, (2, 3)), 0, (1,))

    def test_canonical_degree_is_minus_euler_characteristic(self):
        """测试 deg K = -chi^orb（穷举）"""
        for surface in surfaces(orders=range(2, 12)):
            K = orbifold.canonical_bundle(surface)
            self.assertEqual(orbifold.degree(K), -orbifold.orb_euler_characteristic(surface))

    def test_degree_additivity_and_inverse(self):
        """测试次数可加性与逆元律"""
        for surface in surfaces(max_genus=2, max_points=4, orders=range(2, 12)):
            L1 = random_bundle(self.rng, surface)
            L2 = random_bundle(self.rng, surface)
            product = orbifold.tensor(L1, L2)
            self.assertEqual(orbifold.degree(product), orbifold.degree(L1) + orbifold.degree(L2))
            for beta, a in zip(product.betas, surface.cone_orders):
                self.assertTrue(0 <= beta < a)
            self.assertTrue(orbifold.is_trivial(orbifold.tensor(L1, orbifold.inverse(L1))))

    def test_inverse_law_all_exponents(self):
        """测试 |m| <= 12 时 L^m 与 L^{-m} 的张量积平凡（随机）"""
        for surface in surfaces(max_genus=2, max_points=3, orders=range(2, 12)):
            L = random_bundle(self.rng, surface)
            for m in range(-12, 13):
                product = orbifold.tensor(orbifold.power(L, m), orbifold.power(L, -m))
                self.assertTrue(orbifold.is_trivial(product), msg=f"{surface} {L} m={m}")
                self.assertEqual(orbifold.degree(orbifold.power(L, m)), m * orbifold.degree(L))

    def test_tensor_commutative_and_associative(self):
        """测试张量积的交换律与结合律（随机）"""
        for surface in surfaces(max_genus=2, max_points=4, orders=range(2, 12)):
            L1, L2, L3 = (random_bundle(self.rng, surface) for _ in range(3))
            self.assertEqual(orbifold.tensor(L1, L2), orbifold.tensor(L2, L1))
            self.assertEqual(orbifold.tensor(orbifold.tensor(L1, L2), L3),
                             orbifold.tensor(L1, orbifold.tensor(L2, L3)))
            self.assertEqual(orbifold.tensor(L1, orbifold.trivial_bundle(surface)), L1)

    def test_worked_examples(self):
        """测试 (2,3,5) 上的张量积、负幂与 K^2 的手算结果"""
        surface = OrbifoldSurface(0, (2, 3, 5))
        product = orbifold.tensor(OrbifoldLineBundle(surface, -2, (1, 2, 4)),
                                  OrbifoldLineBundle(surface, -1, (0, 1, 4)))
        self.assertEqual((product.b, product.betas), (-1, (1, 0, 3)))
        self.assertEqual(orbifold.degree(product), Fraction(1, 10))
        power = orbifold.power(OrbifoldLineBundle(surface, -1, (1, 1, 1)), -4)
        self.assertEqual((power.b, power.betas), (-1, (0, 2, 1)))
        self.assertEqual(orbifold.degree(power), Fraction(-2, 15))
        for s in surfaces(max_genus=3, max_points=4):
            K = orbifold.canonical_bundle(s)
            K2 = orbifold.tensor(K, K)
            self.assertEqual(K2.b, 4 * s.genus - 4 + s.n)
            self.assertEqual(K2.betas, tuple(a - 2 for a in s.cone_orders))

    def test_power_matches_repeated_tensor(self):
        """测试幂与重复张量积一致"""
        surface = OrbifoldSurface(1, (2, 5, 7))
        for _ in range(50):
            L = random_bundle(self.rng, surface)
            m = self.rng.randrange(0, 6)
            expected = orbifold.trivial_bundle(surface)
            for _ in range(m):
                expected = orbifold.tensor(expected, L)
            self.assertEqual(orbifold.power(L, m), expected)

    def test_tensor_different_surfaces(self):
        """测试不同曲面上的线丛不能张量"""
        L1 = orbifold.trivial_bundle(OrbifoldSurface(0, (2,)))
        L2 = orbifold.trivial_bundle(OrbifoldSurface(0, (3,)))
        with self.assertRaises(InvalidInputError):
            orbifold.tensor(L1, L2)

    def test_dual_and_riemann_roch(self):
        surface = OrbifoldSurface(2, (3,))
        L = OrbifoldLineBundle(surface, 4, (1,))
        dual = orbifold.dual_bundle(L)
        self.assertEqual(orbifold.degree(dual), orbifold.degree(orbifold.canonical_bundle(surface)) - orbifold.degree(L))
        self.assertEqual(orbifold.riemann_roch_rhs(L), 1 - 2 + 4)


class TestSections(unittest.TestCase):
    """全纯截面维数测试"""

    def test_trivial_bundle(self):
        surface = OrbifoldSurface(3, (2, 2))
        self.assertEqual(orbifold.h0_dim(orbifold.trivial_bundle(surface)), SectionCount.exact(1))

    def test_negative_degree(self):
        """测试负次数线丛没有截面"""
        surface = OrbifoldSurface(0, (5,))
        L = OrbifoldLineBundle(surface, -1, (2,))
        self.assertEqual(orbifold.h0_dim(L), SectionCount.exact(0))

    def test_quadratic_differentials(self):
        """测试 dim H0(K^2) = 3g - 3 + n（4g - 4 + n >= 2g 时）"""
        for surface in surfaces():
            genus, n = surface.genus, surface.n
            if 4 * genus - 4 + n < 2 * genus:
                continue
            K = orbifold.canonical_bundle(surface)
            count = orbifold.h0_dim(orbifold.tensor(K, K))
            self.assertTrue(count.is_exact, msg=str(surface))
            self.assertEqual(count.value, 3 * genus - 3 + n, msg=str(surface))

    def test_riemann_roch_symmetry(self):
        """测试两侧维数都确定时 h0(L) - h0(L^{-1} K) = 1 - g + deg|L|（随机）"""
        rng = random.Random(7)
        checked = 0
        for surface in surfaces(max_genus=3, max_points=3, orders=range(2, 8)):
            for _ in range(4):
                L = random_bundle(rng, surface)
                count = orbifold.h0_dim(L)
                dual_count = orbifold.h0_dim(orbifold.dual_bundle(L))
                if not (count.is_exact and dual_count.is_exact):
                    continue
                checked += 1
                self.assertEqual(count.value - dual_count.value,
                                 1 - surface.genus + orbifold.desingularized_degree(L), msg=f"{surface} {L}")
        self.assertGreater(checked, 100)

    def test_indeterminate_range(self):
        """测试介于 0 与 deg K 之间时结果不确定"""
        surface = OrbifoldSurface(3)
        L = orbifold.smooth_bundle(surface, 2)
        count = orbifold.h0_dim(L)
        self.assertFalse(count.is_exact)
        self.assertEqual(count.value, 0)
        self.assertIn("indeterminate", str(count))


if __name__ == "__main__":
    unittest.main()
