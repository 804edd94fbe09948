# unit_test_seifert.py
import functools
import json
import math
import os
import random
import shutil
import tempfile
import unittest
from fractions import Fraction

from z2harmonic import catalog, orbifold, seifert
from z2harmonic.commons import InvalidInputError
from z2harmonic.seifert import SeifertManifold

POINCARE = "0,-1,2:1,3:1,5:1"


def random_seifert(rng):
    pairs = []
    for _ in range(rng.randrange(0, 5)):
        a = rng.randrange(2, 10)
        beta = rng.choice([x for x in range(1, a) if math.gcd(a, x) == 1])
        pairs.append((a, beta))
    return seifert.validate_seifert(rng.randrange(0, 4), rng.randrange(-4, 5), pairs)


class TestSeifertData(unittest.TestCase):
    """Seifert 数据解析测试"""

    def test_parse(self):
        Y = seifert.parse_seifert(POINCARE)
        self.assertEqual(Y, SeifertManifold(0, -1, ((2, 1), (3, 1), (5, 1))))
        self.assertEqual(str(Y), POINCARE)

    def test_beta_carry(self):
        """测试 beta 超出范围时进位到 b"""
        Y = seifert.parse_seifert("0,0,2:3")
        self.assertEqual((Y.b, Y.pairs), (1, ((2, 1),)))

    def test_non_smooth_total_space(self):
        """测试 gcd(a, beta) != 1 报错"""
        with self.assertRaises(InvalidInputError) as ctx:
            seifert.parse_seifert("0,0,4:2")
        self.assertIn("non-smooth", str(ctx.exception))

    def test_malformed(self):
        for text in ("", "0", "a,b", "0,1,2-1"):
            with self.assertRaises(InvalidInputError):
                seifert.parse_seifert(text)

    def test_euler_number(self):
        """测试 Poincaré 同调球的欧拉数为 -1/30"""
        Y = seifert.parse_seifert(POINCARE)
        self.assertEqual(seifert.euler_number(Y), Fraction(-1, 30))
        self.assertTrue(seifert.is_homology_sphere(Y))
        self.assertFalse(seifert.is_homology_sphere(seifert.parse_seifert("0,0")))


class TestBrieskorn(unittest.TestCase):
    """Brieskorn 球测试"""

    def test_poincare_sphere(self):
        Y = seifert.brieskorn_to_seifert((2, 3, 5))
        self.assertEqual(Y, SeifertManifold(0, -1, ((2, 1), (3, 1), (5, 1))))

    def test_2_3_7(self):
        Y = seifert.brieskorn_to_seifert((2, 3, 7))
        self.assertEqual(Y, SeifertManifold(0, -2, ((2, 1), (3, 2), (7, 6))))
        self.assertEqual(seifert.euler_number(Y), Fraction(-1, 42))

    def test_random_tuples_are_homology_spheres(self):
        """测试随机互素指数都给出同调球，且 1-形式存在当且仅当 n >= 4"""
        rng = random.Random(7)
        primes = [2, 3, 5, 7, 11, 13, 17, 19]
        for _ in range(40):
            exponents = sorted(rng.sample(primes, rng.randrange(3, 7)))
            Y = seifert.brieskorn_to_seifert(exponents)
            self.assertTrue(seifert.is_homology_sphere(Y))
            self.assertEqual(seifert.euler_number(Y), Fraction(-1, math.prod(exponents)))
            self.assertEqual(seifert.oneform_existence(Y).exists, len(exponents) >= 4)

    def test_invalid_exponents(self):
        with self.assertRaises(InvalidInputError):
            seifert.brieskorn_to_seifert((2, 4, 5))
        with self.assertRaises(InvalidInputError):
            seifert.brieskorn_to_seifert((2, 3))


class TestSpinorExistence(unittest.TestCase):
    """Z2 调和旋量存在性判据测试"""

    def test_berger_sphere(self):
        """测试 S^3：奇异集为 2k 分支 Hopf 链环"""
        report = seifert.spinor_existence(seifert.parse_seifert("0,1"), 2, 1)
        self.assertTrue(report.exists)
        self.assertEqual(report.N, 4)
        self.assertEqual(report.dim_sections.value, 5)
        self.assertEqual(report.singular_set.descriptor, "4-component Hopf link")
        self.assertEqual(report.metric.volume, Fraction(1, 2))
        self.assertEqual(report.metric.xi, 2)

    def test_product_manifold(self):
        """测试 S^1 x S^2：平凡丛分支给出 2k 个点"""
        report = seifert.spinor_existence(seifert.parse_seifert("0,0"), 2, 1)
        self.assertTrue(report.exists)
        self.assertEqual(report.N, 4)
        self.assertEqual(report.singular_set.descriptor, "S¹ × {4 points}")
        self.assertEqual(report.metric.xi, 0)

    def test_poincare_sphere_both_conventions(self):
        """测试 Σ(2,3,5) 在 k = -2 时两种约定下都得到 N = -1"""
        Y = seifert.parse_seifert(POINCARE)
        for convention in seifert.CONVENTIONS:
            report = seifert.spinor_existence(Y, -2, 0, convention=convention)
            self.assertEqual(report.N, -1)
            self.assertFalse(report.exists)

    def test_degenerate_twist(self):
        with self.assertRaises(InvalidInputError):
            seifert.spinor_existence(seifert.parse_seifert("0,1"), 0)

    def test_trivial_branch_allows_zero_twist(self):
        """测试 c1(L) = 0 时 k = 0 合法且体积不受约束"""
        report = seifert.spinor_existence(seifert.parse_seifert("0,0"), 0, 2)
        self.assertEqual(report.N, 2)
        self.assertIsNone(report.metric.volume)

    def test_twist_growth_in_k(self):
        """测试 deg L > 0 时 N 每隔 A = lcm(a_i) 增加 2A deg L，2b + sum floor(2 beta/a) >= 0 时逐步不减（随机）"""
        rng = random.Random(23)
        checked = 0
        while checked < 200:
            Y = random_seifert(rng)
            L = seifert.euler_bundle(Y, "plus")
            if orbifold.degree(L) <= 0:
                continue
            checked += 1
            period = functools.reduce(lambda x, y: x * y // math.gcd(x, y), Y.cone_orders, 1)
            step_floor = 2 * L.b + sum(2 * beta // a for beta, a in zip(L.betas, L.surface.cone_orders))
            previous = seifert.spinor_degree(L, 1, 0)
            for k in range(1, 25):
                N = seifert.spinor_degree(L, k, 0)
                self.assertEqual(seifert.spinor_degree(L, k + period, 0) - N,
                                 2 * period * orbifold.degree(L), msg=str(Y))
                if step_floor >= 0:
                    self.assertGreaterEqual(N, previous, msg=f"{Y} k={k}")
                previous = N

    def test_single_step_can_decrease(self):
        """测试有例外纤维时 N 在相邻 k 之间可能减小"""
        Y = seifert.parse_seifert("0,-1,3:1,5:2,7:3")
        L = seifert.euler_bundle(Y, "plus")
        self.assertEqual(orbifold.degree(L), Fraction(17, 105))
        self.assertEqual((seifert.spinor_degree(L, 14, 0), seifert.spinor_degree(L, 15, 0)), (4, 3))
        self.assertLess(seifert.spinor_degree(L, 15, 0), seifert.spinor_degree(L, 15 + 105, 0))

    def test_floor_formula_matches_tensor_chain(self):
        """测试取整公式与张量积链一致（随机）"""
        rng = random.Random(11)
        for _ in range(300):
            Y = random_seifert(rng)
            k = rng.choice([x for x in range(-5, 6) if x != 0])
            aux = rng.randrange(-2, 3)
            for convention in seifert.CONVENTIONS:
                L = seifert.euler_bundle(Y, convention)
                if orbifold.is_trivial(L):
                    continue
                N = seifert.spinor_degree(L, k, aux)
                chained = seifert.spinor_bundle_chain(L, k, aux)
                self.assertEqual(orbifold.desingularized_degree(chained), N)
                report = seifert.spinor_existence(Y, k, aux, convention=convention)
                self.assertEqual(report.N, N)
                if report.exists:
                    self.assertGreaterEqual(N, 2 * Y.genus)
                    self.assertEqual(report.dim_sections.value, N + 1 - Y.genus)

    def test_non_spin_base_advisory(self):
        """测试偶数阶锥点给出提示"""
        Y = seifert.parse_seifert("0,1,2:1")
        with self.assertLogs("z2harmonic.seifert", level="WARNING"):
            report = seifert.spinor_existence(Y, 2, 1)
        self.assertTrue(any("spin" in note for note in report.advisories))

    def test_nonpositive_volume(self):
        report = seifert.spinor_existence(seifert.parse_seifert("0,-1"), 1, 0)
        self.assertFalse(report.metric.valid)
        self.assertTrue(report.advisories)

    def test_spinc(self):
        report = seifert.spinc_existence(seifert.parse_seifert("0,1"), 2, 1)
        self.assertTrue(report.exists)
        self.assertEqual(report.N, 6)
        self.assertEqual(report.dim_sections, orbifold.SectionCount.exact(7))

    def test_spinc_nonpositive_volume_logged(self):
        """测试 spin^c 情形体积系数非正时记录警告"""
        with self.assertLogs("z2harmonic.seifert", level="WARNING") as logs:
            report = seifert.spinc_existence(seifert.parse_seifert("0,-1"), 1, 0)
        self.assertFalse(report.metric.valid)
        self.assertEqual(len(report.advisories), 1)
        self.assertIn("not positive", logs.output[0])

    def test_sweep_conventions(self):
        """测试约定扫描只返回命中目标 N 的组合"""
        Y = seifert.parse_seifert("0,1")
        hits = seifert.sweep_conventions(Y, 4, range(-5, 6), aux_degree=1)
        self.assertIn({"convention": "plus", "k": 2, "N": 4, "dim": 5}, hits)
        self.assertIn({"convention": "minus", "k": -2, "N": 4, "dim": 5}, hits)
        self.assertTrue(all(hit["N"] == 4 for hit in hits))

    def test_describe_singular_set(self):
        Y = seifert.parse_seifert("1,3")
        self.assertEqual(seifert.describe_singular_set(Y, 1, False).descriptor, "single fiber")
        self.assertEqual(seifert.describe_singular_set(Y, 6, False).descriptor, "union of 6 fibers")


class TestOneForms(unittest.TestCase):
    """Z2 调和 1-形式测试"""

    def test_criterion_matches_classification(self):
        """测试不等式判据与三种情形分类一致（穷举 g <= 10, n <= 20）"""
        for genus in range(11):
            for n in range(21):
                Y = seifert.validate_seifert(genus, 0, [(3, 1)] * n)
                self.assertEqual(seifert.oneform_existence(Y).exists,
                                 seifert.oneform_case_classification(genus, n),
                                 msg=f"g={genus} n={n}")

    def test_poincare_sphere(self):
        report = seifert.oneform_existence(seifert.parse_seifert(POINCARE))
        self.assertFalse(report.exists)
        self.assertIsNone(report.dim_sections)

    def test_four_fibered_sphere(self):
        report = seifert.oneform_existence(seifert.brieskorn_to_seifert((2, 3, 5, 7)))
        self.assertTrue(report.exists)
        self.assertEqual(report.dim_sections.value, 1)
        self.assertEqual(report.singular_set.descriptor, "empty")


class TestCatalog(unittest.TestCase):
    """样例目录测试"""

    def setUp(self):
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def write_catalog(self, records):
        path = os.path.join(self.test_dir, "catalog.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(records, f)
        return path

    def test_default_catalog(self):
        entries = catalog.load_catalog()
        names = [e.name for e in entries]
        self.assertEqual(len(names), len(set(names)))
        self.assertIn("sigma-2-3-5", names)
        self.assertTrue(all(e.citation for e in entries))

    def test_verify_default_catalog(self):
        """测试目录校验：S^3 与 S^1 x S^2 通过，Σ(2,3,5) 报告差异而非静默通过"""
        checks = {c.name: c for c in catalog.verify_catalog()}
        for name in ("S3-berger", "S1xS2", "brieskorn-2-3-5-7", "brieskorn-2-3-5", "brieskorn-2-3-7"):
            self.assertEqual(checks[name].status, catalog.STATUS_OK, msg=name)
        poincare = checks["sigma-2-3-5"]
        self.assertEqual(poincare.status, catalog.STATUS_DISCREPANCY)
        self.assertEqual(poincare.expected["N"], 1)
        self.assertEqual(poincare.computed["N"], -1)
        self.assertTrue(all(hit["N"] == 1 for hit in poincare.sweep))

    def test_other_convention_fallback(self):
        """测试默认约定失败时尝试另一约定"""
        path = self.write_catalog([{
            "name": "s3-negative-twist", "kind": "spinor", "seifert": "0,1",
            "k": -2, "aux_degree": 1,
            "expected": {"exists": True, "N": 4},
            "citation": "test entry",
        }])
        check, = catalog.verify_catalog(catalog.load_catalog(path))
        self.assertEqual(check.status, catalog.STATUS_OK)
        self.assertEqual(check.computed["convention"], "minus")

    def test_duplicate_names(self):
        record = {"name": "x", "kind": "oneform", "seifert": "0,0", "expected": {}}
        path = self.write_catalog([record, record])
        with self.assertRaises(InvalidInputError):
            catalog.load_catalog(path)

    def test_missing_manifold(self):
        path = self.write_catalog([{"name": "x", "kind": "spinor"}])
        with self.assertRaises(InvalidInputError):
            catalog.load_catalog(path)

    def test_catalog_tuples(self):
        """测试目录条目给出期望的存在性报告"""
        rows = catalog.catalog()
        name, manifold, expected = rows[0]
        self.assertEqual(name, "S3-berger")
        self.assertEqual(manifold, SeifertManifold(0, 1, ()))
        self.assertIsInstance(expected, seifert.ExistenceReport)
        self.assertEqual((expected.kind, expected.exists, expected.N, expected.twist_k), ("spinor", True, 4, 2))
        self.assertEqual(expected.dim_sections, orbifold.SectionCount.exact(5))
        self.assertEqual(expected.singular_set.descriptor, "4-component Hopf link")
        poincare = {row[0]: row[2] for row in rows}["sigma-2-3-5"]
        self.assertEqual((poincare.twist_k, poincare.singular_set.descriptor), (-2, "single fiber"))

    def test_expected_report_partial_record(self):
        path = self.write_catalog([{"name": "x", "kind": "oneform", "seifert": "0,0",
                                    "expected": {"exists": False}}])
        (_, _, expected), = catalog.catalog(path)
        self.assertFalse(expected.exists)
        self.assertIsNone(expected.N)
        self.assertIsNone(expected.dim_sections)
        self.assertIsNone(expected.singular_set)


if __name__ == "__main__":
    unittest.main()
