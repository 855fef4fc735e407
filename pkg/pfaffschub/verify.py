# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Verification suites runner: instance generation, sampling, parallel
execution, reports and replay files
"""

import json
import logging
import os.path
import random
import re
from concurrent.futures import ProcessPoolExecutor
from importlib import import_module
from time import time
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

from pfaffschub.cache import GroebnerCache, disabled_cache
from pfaffschub.errors import BudgetError, PfaffschubError, UsageError
from pfaffschub.groebner import Budget
from pfaffschub.polyring import REVLEX, TermOrder, get_order

log = logging.getLogger(__name__)

SUITES = (
    "main-ss",
    "groebner-basis-ss",
    "primary-decomposition-ss",
    "primary-decomposition-classical",
    "transition-ss",
    "classical-initial",
    "grothendieck-ss",
    "subword-ss",
    "bruhat-ss",
)

REPLAY_SCHEMA = 1


class SuiteOptions(NamedTuple):
    "Everything a suite needs; must stay picklable for worker processes"
    n: int
    m: Optional[int] = None
    seed: int = 2022
    exhaustive: bool = False
    sample: int = 20
    cap: int = 6
    budget: Budget = Budget()
    order: str = REVLEX.name
    cache_dir: str = ""
    cache_enabled: bool = False
    paranoid: bool = True
    essential_only: bool = False

    @property
    def term_order(self) -> TermOrder:
        "Resolved term order"
        return get_order(self.order)

    def make_cache(self) -> GroebnerCache:
        "Cache configured for this run"
        if not self.cache_enabled or not self.cache_dir:
            return disabled_cache()
        return GroebnerCache(self.cache_dir, self.paranoid)


class Instance(NamedTuple):
    "One checkable case; data must be JSON-serializable"
    key: str
    data: Dict[str, Any]


class InstanceResult(NamedTuple):
    "Outcome of checking one instance"
    key: str
    data: Dict[str, Any]
    passed: bool
    details: Dict[str, Any]
    seconds: float
    error: Optional[str] = None
    budget_exceeded: bool = False

    def to_json(self) -> Dict[str, Any]:
        "Serialize without timing so reports stay deterministic"
        return {
            "key": self.key,
            "instance": self.data,
            "passed": self.passed,
            "details": self.details,
            "error": self.error,
        }


class VerificationReport:
    "Results of one suite run, sorted by instance key"

    def __init__(self, suite: str, options: SuiteOptions, results: Sequence[InstanceResult],
                 seconds: float):
        self.suite = suite
        self.options = options
        self.results = sorted(results, key=lambda r: r.key)
        self.seconds = seconds

    @property
    def passed(self) -> int:
        "Number of passing instances"
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> List[InstanceResult]:
        "Failing instances"
        return [r for r in self.results if not r.passed]

    @property
    def ok(self) -> bool:
        "True when nothing failed"
        return not self.failed

    @property
    def budget_exceeded(self) -> bool:
        "True when every failure is a budget failure"
        return bool(self.failed) and all(r.budget_exceeded for r in self.failed)

    def to_json(self) -> Dict[str, Any]:
        "Deterministic report body"
        return {
            "suite": self.suite,
            "n": self.options.n,
            "m": self.options.m,
            "seed": self.options.seed,
            "exhaustive": self.options.exhaustive,
            "instances": len(self.results),
            "passed": self.passed,
            "failed": len(self.failed),
            "results": [r.to_json() for r in self.results],
        }

    def summary_row(self) -> List[str]:
        "Row for summary_table"
        n = f"{self.options.m}x{self.options.n}" if self.options.m else str(self.options.n)
        return [
            self.suite, n,
            str(len(self.results)),
            str(self.passed),
            str(len(self.failed)), f"{self.seconds:.2f}"
        ]


def summary_table(reports: Sequence[VerificationReport]) -> str:
    "Human readable table: suite  n  instances  passed  failed  seconds"
    header = ["suite", "n", "instances", "passed", "failed", "seconds"]
    rows = [header] + [report.summary_row() for report in reports]
    widths = [max(len(row[col]) for row in rows) for col in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
             for row in rows]
    return "\n".join(lines)


def get_suite(name: str, options: SuiteOptions):
    "Load suite plugin by its registered name"
    if name not in SUITES:
        raise UsageError(f"Unknown suite '{name}'. Available suites: {', '.join(SUITES)}")
    module = import_module(f".suites.{name.replace('-', '_')}", __package__)
    return module.get_suite(options)


def select_instances(suite, options: SuiteOptions) -> List[Instance]:
    """
    Exhaustive list below the cap, a seeded sample at the cap unless
    exhaustive was requested
    """
    size = max(options.n, options.m or 0)
    if size > options.cap:
        raise UsageError(f"Suite size {size} is above the configured cap {options.cap}")
    instances = sorted(suite.instances(), key=lambda inst: inst.key)
    if size == options.cap and not options.exhaustive and len(instances) > options.sample:
        rng = random.Random(options.seed)
        instances = sorted(rng.sample(instances, options.sample), key=lambda inst: inst.key)
        log.info("Sampled %d instances with seed %d", len(instances), options.seed)
    return instances


def check_instance(name: str, options: SuiteOptions, instance: Instance) -> InstanceResult:
    "Run one instance; safe to call in a worker process"
    suite = get_suite(name, options)
    start = time()
    try:
        passed, details = suite.check(instance)
        error = None
        budget = False
    except BudgetError as err:
        passed, details, error, budget = False, {}, str(err), True
    except PfaffschubError as err:
        passed, details, error, budget = False, {}, str(err), False
    seconds = time() - start
    log.debug("%s %s: %s in %.3fs", name, instance.key, "pass" if passed else "FAIL", seconds)
    return InstanceResult(instance.key, instance.data, passed, details, seconds, error, budget)


def run_suite(name: str, options: SuiteOptions, jobs: int = 1) -> VerificationReport:
    "Check every selected instance of a suite"
    suite = get_suite(name, options)
    instances = select_instances(suite, options)
    log.info("Running suite %s on %d instances", name, len(instances))
    start = time()
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(check_instance, name, options, inst) for inst in instances]
            results = [future.result() for future in futures]
    else:
        results = [check_instance(name, options, inst) for inst in instances]
    report = VerificationReport(name, options, results, time() - start)
    log.info("Suite %s: %d passed, %d failed", name, report.passed, len(report.failed))
    return report


def _safe_key(key: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", key).strip("_.")


def write_replays(report: VerificationReport, directory: str) -> List[str]:
    "Write one replay file per failing instance and return their paths"
    paths = []
    for result in report.failed:
        path = os.path.join(directory, f"replay-{report.suite}-{_safe_key(result.key)}.json")
        replay = {
            "schema": REPLAY_SCHEMA,
            "suite": report.suite,
            "options": {
                "n": report.options.n,
                "m": report.options.m,
                "seed": report.options.seed,
                "order": report.options.order,
                "essential_only": report.options.essential_only,
            },
            "instance": {
                "key": result.key,
                "data": result.data
            },
        }
        with open(path, "w", encoding="utf-8") as stream:
            json.dump(replay, stream, indent=1, sort_keys=True)
        log.info("Wrote replay file %s", path)
        paths.append(path)
    return paths


def replay(path: str, options: SuiteOptions) -> VerificationReport:
    "Re-run exactly the instance stored in a replay file"
    try:
        with open(path, encoding="utf-8") as stream:
            data = json.load(stream)
        if data.get("schema") != REPLAY_SCHEMA:
            raise UsageError(f"Unsupported replay schema in {path}")
        name = data["suite"]
        stored = data["options"]
        instance = Instance(data["instance"]["key"], data["instance"]["data"])
    except OSError as err:
        raise UsageError(f"Can't read replay file {path}: {err.strerror}") from err
    except (ValueError, KeyError, TypeError) as err:
        raise UsageError(f"Malformed replay file {path}: {err}") from err
    options = options._replace(n=stored["n"],
                               m=stored.get("m"),
                               seed=stored.get("seed", options.seed),
                               order=stored.get("order", options.order),
                               essential_only=stored.get("essential_only", False))
    start = time()
    result = check_instance(name, options, instance)
    return VerificationReport(name, options, [result], time() - start)
