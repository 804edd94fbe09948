# unit_test_reports.py
import csv
import io
import json
import random
import string
import unittest
from fractions import Fraction

import numpy as np

from z2harmonic import reports
from z2harmonic.commons import InvalidInputError
from z2harmonic.reports import Report


def random_value(rng, depth=0):
    kind = rng.randrange(8 if depth < 2 else 6)
    if kind == 0:
        return rng.randrange(-1000, 1000)
    if kind == 1:
        return rng.uniform(-1e6, 1e6)
    if kind == 2:
        return Fraction(rng.randrange(-500, 500), rng.randrange(1, 200))
    if kind == 3:
        return rng.choice([True, False, None])
    if kind == 4:
        if rng.random() < 0.3:
            return rng.choice(["", "'"]) + f"{rng.randrange(-50, 50)}/{rng.randrange(1, 50)}"
        return "".join(rng.choice(string.ascii_letters + " /'" + string.digits)
                       for _ in range(rng.randrange(0, 12)))
    if kind == 5:
        return complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
    if kind == 6:
        return [random_value(rng, depth + 1) for _ in range(rng.randrange(0, 4))]
    return random_mapping(rng, depth + 1)


def random_mapping(rng, depth=0):
    keys = {"".join(rng.choice("abcdefgh") for _ in range(3)) for _ in range(rng.randrange(0, 5))}
    return {key: random_value(rng, depth) for key in sorted(keys)}


class TestEmit(unittest.TestCase):
    """报告序列化测试"""

    def setUp(self):
        self.report = Report("brieskorn", {"exponents": [2, 3, 5]},
                             {"euler_number": Fraction(-1, 30), "half": Fraction(1, 2)},
                             ["Brieskorn sphere"])

    def test_rational_in_all_formats(self):
        """测试有理数在所有格式中写成 p/q"""
        for fmt in reports.FORMATS:
            self.assertIn("-1/30", reports.emit(self.report, fmt).decode("utf-8"))
        doc = json.loads(reports.emit(self.report, "json"))
        self.assertEqual(doc["outputs"]["euler_number"], "-1/30")

    def test_integral_fraction_keeps_denominator(self):
        doc = json.loads(reports.emit(Report("x", outputs={"q": Fraction(4)}), "json"))
        self.assertEqual(doc["outputs"]["q"], "4/1")

    def test_field_order(self):
        doc = json.loads(reports.emit(self.report, "json"))
        self.assertEqual(list(doc), ["command", "status", "inputs", "outputs", "citations"])

    def test_empty_outputs(self):
        """测试空输出仍是合法文档"""
        report = Report("neck index")
        doc = json.loads(reports.emit(report, "json"))
        self.assertEqual(doc["outputs"], {})
        self.assertIn("(none)", reports.emit(report, "plain").decode("utf-8"))
        rows = list(csv.reader(io.StringIO(reports.emit(report, "csv").decode("utf-8"))))
        self.assertEqual(rows[0], ["section", "key", "value"])

    def test_csv_rows(self):
        rows = list(csv.reader(io.StringIO(reports.emit(self.report, "csv").decode("utf-8"))))
        self.assertIn(["outputs", "euler_number", "-1/30"], rows)
        self.assertIn(["inputs", "exponents", "[2, 3, 5]"], rows)
        self.assertIn(["citations", "0", "Brieskorn sphere"], rows)

    def test_citations_verbatim(self):
        citation = "S¹ × S², 2k points: \"quoted\""
        report = Report("x", citations=[citation])
        doc = json.loads(reports.emit(report, "json"))
        self.assertEqual(doc["citations"], [citation])

    def test_deterministic(self):
        self.assertEqual(reports.emit(self.report, "json"), reports.emit(self.report, "json"))

    def test_numpy_values(self):
        report = Report("x", outputs={"n": np.int64(3), "v": np.array([1.5, 2.0])})
        doc = json.loads(reports.emit(report, "json"))
        self.assertEqual(doc["outputs"], {"n": 3, "v": [1.5, 2.0]})

    def test_unknown_format(self):
        with self.assertRaises(InvalidInputError):
            reports.emit(self.report, "xml")


class TestParse(unittest.TestCase):
    """报告解析测试"""

    def test_round_trip_random(self):
        """测试 parse(emit(r)) == r（随机报告）"""
        rng = random.Random(1234)
        statuses = [reports.STATUS_OK, reports.STATUS_CRITERION_FAILED, reports.STATUS_DISCREPANCY,
                    reports.STATUS_NUMERICAL_ERROR, reports.STATUS_INVALID_INPUT]
        for _ in range(200):
            report = Report(command=rng.choice(["exists spinor", "neck ode", "sum h1"]),
                            inputs=random_mapping(rng),
                            outputs=random_mapping(rng),
                            citations=[f"ref {i}" for i in range(rng.randrange(0, 3))],
                            status=rng.choice(statuses))
            self.assertEqual(reports.parse(reports.emit(report, "json")), report)

    def test_rational_restored(self):
        report = reports.parse('{"command": "x", "outputs": {"e": "-1/30"}}')
        self.assertEqual(report.outputs["e"], Fraction(-1, 30))
        self.assertEqual(report.status, reports.STATUS_OK)

    def test_rational_shaped_text(self):
        """测试形如 p/q 的文本不会被读回成有理数"""
        report = Report("x", inputs={"label": "1/2", "quoted": "'a"}, outputs={"half": Fraction(1, 2)})
        doc = json.loads(reports.emit(report, "json"))
        self.assertEqual(doc["inputs"], {"label": "'1/2", "quoted": "''a"})
        self.assertEqual(doc["outputs"]["half"], "1/2")
        restored = reports.parse(reports.emit(report, "json"))
        self.assertEqual(restored.inputs["label"], "1/2")
        self.assertIsInstance(restored.inputs["label"], str)
        self.assertEqual(restored, report)

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            reports.parse(b"not json")
        with self.assertRaises(InvalidInputError):
            reports.parse(b"", "csv")


if __name__ == "__main__":
    unittest.main()
