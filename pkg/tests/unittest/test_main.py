"""
Unit tests for the command line front end
"""

import io
import json
import os
import tempfile
import unittest
from unittest import mock

from pfaffschub.errors import UsageError
from pfaffschub.main import parse_cells, run
from pfaffschub.suites.main_ss import MainSSSuite


def run_captured(argv):
    with mock.patch("sys.stdout", new_callable=io.StringIO) as stdout:
        code = run(argv)
    return code, stdout.getvalue()


class TestParseCells(unittest.TestCase):
    def test_cells(self):
        self.assertEqual(set(parse_cells("3,1; 4,2;")), {(3, 1), (4, 2)})

    def test_empty(self):
        self.assertEqual(len(parse_cells("")), 0)

    def test_malformed(self):
        with self.assertRaisesRegex(UsageError, "Malformed cell"):
            parse_cells("3;1")
        with self.assertRaisesRegex(UsageError, "Malformed cell"):
            parse_cells("3,1,2")

    def test_not_positive(self):
        with self.assertRaisesRegex(UsageError, "positive coordinates"):
            parse_cells("0,1")


class TestRun(unittest.TestCase):
    def test_version(self):
        code, out = run_captured(["--version"])
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("pfaffschub "))

    def test_kpoly_text(self):
        code, out = run_captured(
            ["kpoly", "--fpf", "()", "--n", "2", "--format", "text", "--no-cache"])
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "1")

    def test_kpoly_json_carries_text(self):
        code, out = run_captured(["kpoly", "--fpf", "()", "--n", "2", "--no-cache"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["text"], "1")
        self.assertEqual(data["value_at_one"], 1)

    def test_dreams_json(self):
        code, out = run_captured(["dreams", "--fpf", "(1,2)(3,6)(4,5)", "--n", "6", "--no-cache"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["count"], 4)
        self.assertEqual(len(data["dreams"]), 4)

    def test_monomial_ideal_text(self):
        code, out = run_captured(["monomial-ideal", "--fpf", "(1,2)(3,6)(4,5)", "--n", "6",
                                  "--format", "text"])
        self.assertEqual(code, 0)
        self.assertEqual(out.split(),
                         ["u[3,2]*u[4,1]", "u[3,2]*u[5,1]", "u[3,1]*u[4,2]*u[5,1]"])

    def test_rank_table_of_cells(self):
        code, out = run_captured(["rank-table", "--cells", "2,1", "--n", "2"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["table"], [[0, 1], [1, 2]])
        self.assertIsNotNone(data["realization"])

    def test_malformed_cycles(self):
        code, _ = run_captured(["diagram", "--fpf", "(1,2", "--n", "4"])
        self.assertEqual(code, 2)

    def test_window_mismatch(self):
        code, _ = run_captured(["diagram", "--fpf", "(1,4)(2,3)", "--n", "2"])
        self.assertEqual(code, 2)

    def test_missing_subject(self):
        code, _ = run_captured(["ideal", "--n", "4"])
        self.assertEqual(code, 2)

    def test_exclusive_subjects(self):
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            code, _ = run_captured(["ideal", "--fpf", "()", "--perm", "2 1", "--n", "2"])
        self.assertEqual(code, 2)

    def test_budget_from_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "pfaffschub.yaml")
            with open(path, "w", encoding="utf-8") as stream:
                stream.write("budget:\n  reductions: 1\n")
            code, _ = run_captured([
                "groebner", "--fpf", "(1,4)(2,6)(3,5)", "--n", "6", "--no-cache", "--config",
                path
            ])
        self.assertEqual(code, 3)

    def test_verify_passes(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, out = run_captured([
                "verify", "--suite", "main-ss", "--n", "2", "--no-cache", "--format", "text",
                "--replay-dir", tmp
            ])
            self.assertEqual(os.listdir(tmp), [])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0].split()[0], "suite")

    def test_verify_failure_writes_replays(self):
        with tempfile.TemporaryDirectory() as tmp, \
                mock.patch.object(MainSSSuite, "check", return_value=(False, {})):
            code, out = run_captured(
                ["verify", "--suite", "main-ss", "--n", "2", "--no-cache", "--replay-dir", tmp])
            replays = sorted(os.listdir(tmp))
        self.assertEqual(code, 1)
        self.assertEqual(len(replays), 2)
        self.assertTrue(all(name.startswith("replay-main-ss-") for name in replays))
        self.assertEqual(json.loads(out)["reports"][0]["failed"], 2)

    def test_verify_needs_suite(self):
        code, _ = run_captured(["verify", "--n", "2"])
        self.assertEqual(code, 2)
