"""
Unit tests for the verification runner, sampling and replay files
"""

import json
import os
import tempfile
import unittest
from unittest import mock

from pfaffschub.errors import BudgetError, UsageError
from pfaffschub.suites.main_ss import MainSSSuite
from pfaffschub.verify import (SuiteOptions, get_suite, replay, run_suite, select_instances,
                               summary_table, write_replays)


class TestSelection(unittest.TestCase):
    def test_unknown_suite(self):
        with self.assertRaisesRegex(UsageError, "Unknown suite 'main'"):
            get_suite("main", SuiteOptions(n=2))

    def test_exhaustive_below_cap(self):
        options = SuiteOptions(n=3, cap=4, sample=2)
        self.assertEqual(len(select_instances(get_suite("main-ss", options), options)), 4)

    def test_sample_at_cap(self):
        options = SuiteOptions(n=3, cap=3, sample=2, seed=5)
        first = select_instances(get_suite("main-ss", options), options)
        second = select_instances(get_suite("main-ss", options), options)
        self.assertEqual(len(first), 2)
        self.assertEqual(first, second)

    def test_exhaustive_at_cap(self):
        options = SuiteOptions(n=3, cap=3, sample=2, exhaustive=True)
        self.assertEqual(len(select_instances(get_suite("main-ss", options), options)), 4)

    def test_above_cap(self):
        options = SuiteOptions(n=4, cap=3)
        with self.assertRaisesRegex(UsageError, "above the configured cap 3"):
            select_instances(get_suite("main-ss", options), options)


class TestRunner(unittest.TestCase):
    def test_report(self):
        report = run_suite("main-ss", SuiteOptions(n=3))
        self.assertTrue(report.ok)
        self.assertEqual(report.passed, 4)
        data = report.to_json()
        self.assertEqual((data["suite"], data["instances"], data["failed"]), ("main-ss", 4, 0))
        self.assertEqual([r["key"] for r in data["results"]],
                         sorted(r["key"] for r in data["results"]))

    def test_parallel_matches_serial(self):
        serial = run_suite("main-ss", SuiteOptions(n=3))
        parallel = run_suite("main-ss", SuiteOptions(n=3), jobs=2)
        self.assertEqual([r.to_json() for r in parallel.results],
                         [r.to_json() for r in serial.results])

    def test_summary_table(self):
        report = run_suite("main-ss", SuiteOptions(n=2))
        lines = summary_table([report]).split("\n")
        self.assertEqual(lines[0].split(),
                         ["suite", "n", "instances", "passed", "failed", "seconds"])
        self.assertEqual(lines[1].split()[:5], ["main-ss", "2", "2", "2", "0"])

    def test_budget_failures(self):
        with mock.patch.object(MainSSSuite, "check",
                               side_effect=BudgetError("critical pair queue", 1)):
            report = run_suite("main-ss", SuiteOptions(n=2))
        self.assertFalse(report.ok)
        self.assertTrue(report.budget_exceeded)
        self.assertIn("critical pair queue", report.failed[0].error)


class TestReplay(unittest.TestCase):
    def test_failure_roundtrip(self):
        with mock.patch.object(MainSSSuite, "check", return_value=(False, {"forced": True})):
            report = run_suite("main-ss", SuiteOptions(n=2, seed=9))
        self.assertEqual(len(report.failed), 2)
        with tempfile.TemporaryDirectory() as tmp_dir:
            paths = write_replays(report, tmp_dir)
            self.assertEqual(len(paths), 2)
            with open(paths[0], encoding="utf-8") as stream:
                stored = json.load(stream)
            self.assertEqual(stored["suite"], "main-ss")
            self.assertEqual(stored["options"]["seed"], 9)
            rerun = replay(paths[0], SuiteOptions(n=0))
        self.assertTrue(rerun.ok)
        self.assertEqual(rerun.options.n, 2)
        self.assertEqual(rerun.results[0].key, stored["instance"]["key"])

    def test_missing_file(self):
        with self.assertRaisesRegex(UsageError, "Can't read replay file"):
            replay("/nonexistent/replay.json", SuiteOptions(n=0))

    def test_bad_schema(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "replay.json")
            with open(path, "w", encoding="utf-8") as stream:
                json.dump({"schema": 99}, stream)
            with self.assertRaisesRegex(UsageError, "Unsupported replay schema"):
                replay(path, SuiteOptions(n=0))
