import io
import json
import logging
import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

import config
from app import (EXIT_DISCREPANCY, EXIT_INVALID_INPUT, EXIT_NUMERICAL, EXIT_OK,
                 parse_profile, run)
from z2harmonic import reports, surgery
from z2harmonic.commons import InvalidInputError

POINCARE = "0,-1,2:1,3:1,5:1"


class TestCommandLine(unittest.TestCase):
    """命令行入口测试"""

    def setUp(self):
        """在每个测试前运行的设置"""
        # 创建临时测试目录
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        """在每个测试后运行的清理"""
        logger = logging.getLogger("z2harmonic")
        for h in list(logger.handlers):
            if isinstance(h, logging.FileHandler) and h.baseFilename.startswith(self.test_dir):
                logger.removeHandler(h)
                h.close()
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def invoke(self, *argv):
        """运行命令并返回 (退出码, 标准输出)"""
        with patch("sys.stdout", new_callable=io.StringIO) as out:
            code = run(list(argv))
        return code, out.getvalue()

    def invoke_json(self, *argv):
        code, text = self.invoke("--format", "json", *argv)
        return code, json.loads(text)

    def write_config(self, **overrides):
        with open(config.DEFAULT_CONFIG_PATH, "r", encoding="utf-8") as f:
            hps = json.load(f)
        for name, values in overrides.items():
            hps[name].update(values)
        path = os.path.join(self.test_dir, "config.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(hps, f)
        return path

    # 测试黄金文件
    def test_golden_reports(self):
        """测试结构化报告与黄金文件逐字节一致"""
        cases = {
            "neck_index_delta_0.1.json": ["neck", "index", "--delta", "0.1"],
            "brieskorn_2_3_5.json": ["brieskorn", "2,3,5"],
            "sum_genus_2_3.json": ["sum", "genus", "--g1", "2", "--g2", "3"],
            "exists_oneform_poincare.json": ["exists", "oneform", "--seifert", POINCARE],
        }
        for name, argv in cases.items():
            path = os.path.join(self.test_dir, name)
            code, _ = self.invoke("--output", path, *argv)
            self.assertEqual(code, EXIT_OK, msg=name)
            with open(path, "rb") as f, open(os.path.join(config.GOLDEN_DIR, name), "rb") as g:
                self.assertEqual(f.read(), g.read(), msg=name)

    def test_deterministic_output(self):
        """测试相同输入得到逐字节相同的报告"""
        first = self.invoke("--format", "json", "exists", "spinor", "--seifert", "0,1", "--k", "2", "--aux", "1")
        second = self.invoke("--format", "json", "exists", "spinor", "--seifert", "0,1", "--k", "2", "--aux", "1")
        self.assertEqual(first, second)

    # 测试存在性命令
    def test_exists_oneform_poincare(self):
        """测试 Σ(2,3,5) 上没有 1-形式（n = 3）"""
        code, doc = self.invoke_json("exists", "oneform", "--seifert", POINCARE)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["status"], reports.STATUS_CRITERION_FAILED)
        self.assertFalse(doc["outputs"]["exists"])

    def test_exists_spinor(self):
        code, doc = self.invoke_json("exists", "spinor", "--seifert", "0,1", "--k", "2", "--aux", "1")
        self.assertEqual(code, EXIT_OK)
        outputs = doc["outputs"]
        self.assertEqual(outputs["N"], 4)
        self.assertEqual(outputs["dim_sections"], {"kind": "exact", "value": 5})
        self.assertEqual(outputs["singular_set"], "4-component Hopf link")
        self.assertEqual(outputs["volume_over_pi"], "1/2")

    def test_convention_flag(self):
        code, doc = self.invoke_json("exists", "spinor", "--seifert", "0,1", "--k", "-2", "--aux", "1",
                                     "--convention", "minus")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(doc["outputs"]["exists"])
        self.assertEqual(doc["inputs"]["convention"], "minus")

    def test_invariants(self):
        code, doc = self.invoke_json("invariants", "--genus", "0", "--cones", "2,3,5",
                                     "--bundle-b", "-1", "--bundle-betas", "1,1,1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["outputs"]["orb_euler_characteristic"], "1/30")
        self.assertEqual(doc["outputs"]["degree"], "1/30")

    # 测试连通和命令
    def test_sum_commands(self):
        self.assertEqual(self.invoke_json("sum", "h1", "--p1", "2", "--p2", "3")[1]["outputs"]["h1_minus"], 6)
        self.assertEqual(self.invoke_json("sum", "dims", "--d1", "1", "--d2", "2")[1]["outputs"]["representation_dim"], 9)
        self.assertEqual(self.invoke_json("sum", "gap", "--k1", "1", "--k2", "1")[1]["outputs"]["gap"], 2)
        zeros = self.invoke_json("sum", "zeros", "--g1", "2", "--g2", "2")[1]["outputs"]
        self.assertEqual(zeros["simple_zeros"], 8)
        self.assertEqual(self.invoke_json("sum", "cable", "--k", "2")[1]["outputs"]["descriptor"], "(4,0)-cable of K")

    def test_sum_both_empty(self):
        """测试两个奇异集都为空时报无效输入"""
        code, doc = self.invoke_json("sum", "h1", "--p1", "empty:1", "--p2", "empty:0")
        self.assertEqual(code, EXIT_INVALID_INPUT)
        self.assertEqual(doc["status"], reports.STATUS_INVALID_INPUT)
        self.assertIn("formula not provided", doc["outputs"]["error"])

    def test_parse_profile(self):
        self.assertEqual(parse_profile("4"), surgery.CoverProfile(4))
        self.assertEqual(parse_profile("empty:2"), surgery.CoverProfile(0, False, 2))
        with self.assertRaises(InvalidInputError):
            parse_profile("x")

    # 测试颈部命令
    def test_neck_index(self):
        code, doc = self.invoke_json("neck", "index", "--delta", "0.1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["outputs"]["index"], -42)

    def test_neck_kernel_forbidden_weight(self):
        code, doc = self.invoke_json("neck", "kernel", "--d", "1", "--mu", "0.5")
        self.assertEqual(code, EXIT_INVALID_INPUT)
        self.assertIn("non-Fredholm", doc["outputs"]["error"])

    def test_neck_flow_d2_discrepancy(self):
        code, doc = self.invoke_json("neck", "flow", "--d", "2")
        self.assertEqual(code, EXIT_DISCREPANCY)
        self.assertEqual(doc["status"], reports.STATUS_DISCREPANCY)

    def test_neck_ode(self):
        code, doc = self.invoke_json("neck", "ode", "--d", "1", "--k", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(doc["outputs"]["rate_plus"], 1.5, delta=0.02)

    def test_neck_ode_sweep(self):
        code, doc = self.invoke_json("neck", "ode", "--sweep", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([row["k"] for row in doc["outputs"]["modes"]], [-2, -1, 0, 1, 2])

    def test_neck_bvp(self):
        code, doc = self.invoke_json("neck", "bvp", "--condition", "ii", "--r0", "20")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual((doc["outputs"]["kernel_dim"], doc["outputs"]["cokernel_dim"]), (2, 2))
        code, doc = self.invoke_json("neck", "bvp", "--mu", "0.5")
        self.assertEqual(code, EXIT_INVALID_INPUT)
        self.assertEqual(doc["status"], reports.STATUS_INVALID_INPUT)

    def test_neck_cokernel_small_neck(self):
        """测试颈长不超过核心半径时仍给出范数"""
        code, doc = self.invoke_json("neck", "cokernel", "--mu", "0", "--r0", "10")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["outputs"]["outer_fraction"], 0.0)
        self.assertAlmostEqual(doc["outputs"]["norm"], 3.5449077, places=5)

    def test_numerical_error(self):
        """测试数值问题返回退出码 3"""
        path = self.write_config(bvp={"min_gap": 1e300})
        code, doc = self.invoke_json("-c", path, "neck", "bvp", "--condition", "ii", "--r0", "20")
        self.assertEqual(code, EXIT_NUMERICAL)
        self.assertEqual(doc["status"], reports.STATUS_NUMERICAL_ERROR)

    def test_neck_s2(self):
        code, doc = self.invoke_json("neck", "s2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["outputs"]["functions"][:3], [0, 2, 6])

    def test_neck_pairing(self):
        code, doc = self.invoke_json("neck", "pairing", "--ell", "64", "--delta", "0.1", "--r0", "10",
                                     "--spinor-c", "1+1j", "--spinor-d", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(doc["outputs"]["invertible"])
        self.assertEqual(set(doc["outputs"]["psi"]), {"re", "im"})

    def test_neck_rates(self):
        code, doc = self.invoke_json("neck", "rates", "--regime", "torus_pinch", "--param", "0.001", "--mu", "0.1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["status"], reports.STATUS_CRITERION_FAILED)
        self.assertEqual(doc["outputs"]["flag"], "error does not vanish")

    def test_neck_rates_check(self):
        code, doc = self.invoke_json("neck", "rates", "--regime", "oneform_pinch", "--param", "0.01",
                                     "--mu", "0.0", "--check", "0.01,0.001,0.0001")
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(doc["outputs"]["fitted_exponent"], 1.0, delta=0.1)

    def test_neck_bessel(self):
        code, doc = self.invoke_json("neck", "bessel", "--k", "1", "--ell", "5", "--radii", "1,10,100")
        self.assertEqual(code, EXIT_OK)
        self.assertLess(doc["outputs"]["residual"], 1e-9)

    # 测试目录校验
    def test_catalog_verify(self):
        """测试目录校验发现差异时返回退出码 4"""
        code, doc = self.invoke_json("catalog", "verify")
        self.assertEqual(code, EXIT_DISCREPANCY)
        records = {r["name"]: r for r in doc["outputs"]["records"]}
        self.assertEqual(records["S3-berger"]["status"], "ok")
        self.assertEqual(records["sigma-2-3-5"]["status"], "discrepancy")
        self.assertIn("expected", records["sigma-2-3-5"])
        self.assertIn("computed", records["sigma-2-3-5"])

    def test_catalog_verify_clean(self):
        path = os.path.join(self.test_dir, "catalog.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump([{"name": "S3", "kind": "spinor", "seifert": "0,1", "k": 2, "aux_degree": 1,
                        "expected": {"N": 4}, "citation": "Hopf link"}], f)
        code, doc = self.invoke_json("catalog", "verify", "--catalog", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["citations"], ["Hopf link"])

    def test_catalog_list(self):
        """测试列出目录条目及其期望结果"""
        code, doc = self.invoke_json("catalog", "list")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["command"], "catalog list")
        records = {r["name"]: r for r in doc["outputs"]["records"]}
        self.assertEqual(records["sigma-2-3-5"]["seifert"], POINCARE)
        self.assertEqual(records["sigma-2-3-5"]["k"], -2)
        self.assertEqual(records["S3-berger"]["expected"]["descriptor"], "4-component Hopf link")

    # 测试错误处理与输出格式
    def test_invalid_seifert(self):
        code, doc = self.invoke_json("exists", "spinor", "--seifert", "0,0,4:2")
        self.assertEqual(code, EXIT_INVALID_INPUT)
        self.assertIn("non-smooth", doc["outputs"]["error"])

    def test_unknown_command(self):
        with patch("sys.stderr", new_callable=io.StringIO):
            code, _ = self.invoke("frobnicate")
        self.assertEqual(code, EXIT_INVALID_INPUT)

    def test_missing_config(self):
        code, _ = self.invoke("-c", os.path.join(self.test_dir, "missing.json"), "neck", "index")
        self.assertEqual(code, EXIT_INVALID_INPUT)

    def test_plain_and_csv(self):
        code, text = self.invoke("brieskorn", "2,3,5")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("euler_number", text)
        self.assertIn("-1/30", text)
        code, text = self.invoke("--format", "csv", "brieskorn", "2,3,5")
        self.assertTrue(text.startswith("section,key,value\n"))
        self.assertIn("outputs,euler_number,-1/30", text)

    def test_output_csv_file(self):
        path = os.path.join(self.test_dir, "out.csv")
        code, _ = self.invoke("--output", path, "--output-format", "csv", "neck", "index")
        self.assertEqual(code, EXIT_OK)
        with open(path, "r", encoding="utf-8") as f:
            self.assertIn("outputs,index,-42", f.read())

    def test_log_dir(self):
        """测试 --log-dir 写入日志文件"""
        log_dir = os.path.join(self.test_dir, "logs")
        code, _ = self.invoke("--log-dir", log_dir, "catalog", "verify")
        self.assertEqual(code, EXIT_DISCREPANCY)
        with open(os.path.join(log_dir, "z2harmonic.log"), "r", encoding="utf-8") as f:
            self.assertIn("sigma-2-3-5", f.read())


if __name__ == "__main__":
    unittest.main()
