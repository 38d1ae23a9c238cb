import os
import sys
import unittest
from fractions import Fraction
from unittest import mock
from .. import liealg, verify
from ..errors import InvariantViolated, OrderTooLarge, ShapeMismatch, \
    UnknownSuite
from ..liealg import G, L
from ..pbw import UeaElement
from ..scalars import scalar
from ..tensor import TensorElement
from ..tseries import TSeries
from ..verify import SUITES, SUMMARIES, Failure, Report, SuiteSpec, \
    diff_report, run_suite, suite_cases

SLOW = bool(os.environ.get("SVT_SLOW_TESTS"))


def gen(g, coeff=1):
    return UeaElement.from_generator(g, coeff)


def small(suite_id, **kwargs):
    options = dict(m_values=(1,), i_range=(-1, 1), k2_range=(-1, 1),
                   order=1, a_values=(0, Fraction(1, 2)), max_power=2)
    options.update(kwargs)
    return SuiteSpec(suite_id, **options)


_structure_constant = liealg.structure_constant


def _off_by_one(u, v):
    coeff, target = _structure_constant(u, v)
    if target is None:
        return coeff, None
    return coeff + 1, target


class SuiteSpecTest(unittest.TestCase):
    __tags__ = ["verify"]

    def test_grid(self):
        spec = small("relations")
        self.assertEqual(spec.i_values, [-1, 0, 1])
        self.assertEqual(spec.k_values,
                         [Fraction(-1, 2), Fraction(0), Fraction(1, 2)])
        self.assertEqual(spec.generators(),
                         [L(-1), L(0), L(1), G(Fraction(-1, 2)), G(0),
                          G(Fraction(1, 2))])

    def test_invalid(self):
        self.assertRaises(UnknownSuite, SuiteSpec, "nosuch")
        self.assertRaises(OrderTooLarge, SuiteSpec, "xy", order=6)
        self.assertEqual(SuiteSpec("xy", order=6, unsafe_order=True).order, 6)
        self.assertRaises(ValueError, SuiteSpec, "xy", i_range=(2, 1))
        self.assertRaises(ValueError, SuiteSpec, "xy", m_values=(0,))
        self.assertRaises(ValueError, SuiteSpec, "xy", m_values=())
        self.assertRaises(ValueError, SuiteSpec, "xy", jobs=0)
        self.assertRaises(TypeError, SuiteSpec, "xy", a_values=("x",))
        self.assertRaises(TypeError, run_suite, "xy")

    def test_suites(self):
        self.assertEqual(len(SUITES), 12)
        self.assertEqual(sorted(SUMMARIES), sorted(SUITES))
        self.assertNotIn("all", SUITES)


class DiffReportTest(unittest.TestCase):
    __tags__ = ["verify"]

    def test_elements(self):
        same = diff_report(gen(L(1)), gen(L(1)))
        self.assertTrue(same.is_empty)
        self.assertEqual(str(same), "no difference")
        other = diff_report(gen(L(1)) + gen(L(0)), gen(L(0)))
        self.assertFalse(other.is_empty)
        self.assertEqual(other.delta, gen(L(1)))
        self.assertEqual(other.first, "L_1")
        self.assertEqual(str(other), "first difference: L_1")

    def test_series_and_scalars(self):
        x = TSeries(1, [UeaElement.one(), gen(L(1))])
        y = TSeries(1, [UeaElement.one()])
        self.assertEqual(diff_report(x, y).first, "t^1 L_1")
        self.assertTrue(diff_report(x, x).is_empty)
        self.assertEqual(diff_report(scalar(2), 1).first, "1")
        self.assertTrue(diff_report(Fraction(0), scalar(0)).is_empty)

    def test_shape_mismatch(self):
        self.assertRaises(ShapeMismatch, diff_report, gen(L(1)),
                          TensorElement.one(2))
        self.assertRaises(ShapeMismatch, diff_report,
                          TSeries(1, [UeaElement.one()]),
                          TSeries(2, [UeaElement.one()]))
        self.assertRaises(ShapeMismatch, diff_report, "a", "a")


class ReportTest(unittest.TestCase):
    __tags__ = ["verify"]

    def test_passed(self):
        report = Report("xy", 4, [], 0.5)
        self.assertTrue(report.passed)
        self.assertEqual(report.to_json(), {
            "suite": "xy", "cases": 4, "counts": {"xy": 4}, "passed": True,
            "wall_time": 0.5, "failures": []})
        self.assertEqual(report.to_text(),
                         "xy: 4 cases, 0 failures (0.50s)\nPASSED")

    def test_failed(self):
        difference = diff_report(gen(L(1)), gen(L(0)))
        failure = Failure((("check", "Y"), ("m", 1)), gen(L(1)), gen(L(0)),
                          difference)
        report = Report("xy", 4, [failure], 0.25)
        self.assertFalse(report.passed)
        data = report.to_json()
        self.assertEqual(data["failures"][0]["case"],
                         {"check": "Y", "m": "1"})
        self.assertEqual(data["failures"][0]["left"]["rank"], 1)
        self.assertEqual(data["failures"][0]["difference"], str(difference))
        lines = report.to_text().splitlines()
        self.assertEqual(lines[1], "FAIL check=Y, m=1")
        self.assertEqual(lines[-1], "FAILED")


class RunSuiteTest(unittest.TestCase):
    __tags__ = ["verify"]

    def test_xy(self):
        report = run_suite(SuiteSpec("xy", m_values=(1, 2, -1, -2, 3),
                                     order=0))
        self.assertEqual(report.cases_run, 20)
        self.assertTrue(report.passed, report.to_text())

    def test_suite_cases(self):
        spec = small("xy")
        self.assertEqual(len(suite_cases(spec)), 4)
        self.assertEqual(len(suite_cases(spec, "combinatorial")),
                         4 * (3 + 3) * 4)
        self.assertRaises(UnknownSuite, suite_cases, spec, "nosuch")

    def test_small_grids(self):
        for suite in SUITES:
            with self.subTest(suite=suite):
                report = run_suite(small(suite))
                self.assertTrue(report.cases_run > 0)
                self.assertTrue(report.passed, report.to_text())

    def test_second_m(self):
        for suite in ("lemma35", "closed-forms", "twist-axioms"):
            with self.subTest(suite=suite):
                report = run_suite(small(suite, m_values=(2,)))
                self.assertTrue(report.passed, report.to_text())

    def test_broken_bracket(self):
        with mock.patch.object(liealg, "structure_constant", _off_by_one):
            report = run_suite(small("relations"))
        self.assertFalse(report.passed)
        self.assertTrue(len(report.failures) >= 1)
        cases = [dict(f.case) for f in report.failures]
        self.assertIn({"check": "bracket", "u": L(0), "v": L(1)}, cases)
        self.assertTrue(report.to_text().endswith("FAILED"))

    def test_errors_become_failures(self):
        broken = mock.Mock(side_effect=InvariantViolated("broken"))
        with mock.patch.object(verify, "build_xy", broken):
            report = run_suite(small("xy"))
        self.assertEqual(len(report.failures), 4)
        self.assertTrue(report.failures[0].difference.startswith(
            "InvariantViolated"))
        self.assertEqual(report.to_json()["failures"][0]["left"], "broken")

    def test_jobs(self):
        serial = run_suite(small("relations"))
        parallel = run_suite(small("relations", jobs=2))
        self.assertEqual(serial.cases_run, parallel.cases_run)
        self.assertTrue(parallel.passed)
        with mock.patch.object(liealg, "structure_constant", _off_by_one):
            serial = run_suite(small("relations"))
            parallel = run_suite(small("relations", jobs=2))
        self.assertEqual([f.case for f in serial.failures],
                         [f.case for f in parallel.failures])

    @unittest.skipUnless(SLOW, "slow, set SVT_SLOW_TESTS")
    def test_all(self):
        report = run_suite(SuiteSpec("all"))
        self.assertEqual(sorted(report.counts), sorted(SUITES))
        self.assertEqual(report.cases_run, sum(report.counts.values()))
        self.assertEqual(report.cases_run, 13734)
        self.assertTrue(report.passed, report.to_text())
    test_all.__tags__ = ["slow"]

    @unittest.skipUnless(SLOW, "slow, set SVT_SLOW_TESTS")
    def test_adjoint_powers_wide(self):
        report = run_suite(SuiteSpec("lemma31", m_values=(1, 2),
                                     i_range=(-5, 5), k2_range=(-5, 5),
                                     max_power=4))
        self.assertEqual(report.cases_run, 440)
        self.assertTrue(report.passed, report.to_text())
    test_adjoint_powers_wide.__tags__ = ["slow"]

    @unittest.skipUnless(SLOW, "slow, set SVT_SLOW_TESTS")
    def test_twist_products_order4(self):
        a_values = (0, 1, -1, Fraction(1, 2), Fraction(-3, 2))
        report = run_suite(SuiteSpec("lemma34", m_values=(1, 2), order=4,
                                     a_values=a_values))
        self.assertEqual(report.cases_run, 140)
        self.assertTrue(report.passed, report.to_text())
    test_twist_products_order4.__tags__ = ["slow"]

    @unittest.skipUnless(SLOW, "slow, set SVT_SLOW_TESTS")
    def test_twist_axioms_order5(self):
        report = run_suite(SuiteSpec("twist-axioms", m_values=(1, 2),
                                     order=5))
        self.assertEqual(report.cases_run, 10)
        self.assertTrue(report.passed, report.to_text())
    test_twist_axioms_order5.__tags__ = ["slow"]


if __name__ == '__main__':
    sys.exit(unittest.main())
