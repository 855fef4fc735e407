"""
Every verification suite passes exhaustively on small windows
"""

import unittest

from pfaffschub.verify import SUITES, SuiteOptions, run_suite

SIZES = {
    "main-ss": SuiteOptions(n=4),
    "groebner-basis-ss": SuiteOptions(n=4),
    "primary-decomposition-ss": SuiteOptions(n=5),
    "primary-decomposition-classical": SuiteOptions(n=3, m=3),
    "transition-ss": SuiteOptions(n=4),
    "classical-initial": SuiteOptions(n=3, m=3),
    "grothendieck-ss": SuiteOptions(n=4),
    "subword-ss": SuiteOptions(n=3),
    "bruhat-ss": SuiteOptions(n=4),
}


class TestSuites(unittest.TestCase):
    def test_every_suite_is_covered(self):
        self.assertEqual(sorted(SIZES), sorted(SUITES))

    def test_suites_pass(self):
        for name, options in SIZES.items():
            with self.subTest(suite=name):
                report = run_suite(name, options)
                self.assertTrue(report.results)
                self.assertEqual([r.key for r in report.failed], [])

    def test_classical_initial_antidiagonal_lex(self):
        report = run_suite("classical-initial", SuiteOptions(n=3, m=3, order="antidiag-lex"))
        self.assertTrue(report.ok)

    def test_main_ss_records_order(self):
        report = run_suite("main-ss", SuiteOptions(n=2, order="antidiag-lex"))
        self.assertEqual(report.options.term_order.name, "antidiag-lex")
        self.assertEqual(len(report.results), 2)

    def test_classical_rectangle(self):
        report = run_suite("primary-decomposition-classical", SuiteOptions(n=3, m=2))
        self.assertTrue(report.ok)
        self.assertEqual(len(report.results), 13)
