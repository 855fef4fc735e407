# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
init(I^ss_z) = J^ss_z for every z ∈ FPF_n(I_n)
"""

import logging

from pfaffschub.schubert_ideals import ssi_generators, ssj_generators
from pfaffschub.suites import fpf_data, fpf_instances
from pfaffschub.verify import Instance, SuiteOptions

log = logging.getLogger(__name__)


def get_suite(options: SuiteOptions):
    """Return configured main-ss suite"""
    return MainSSSuite(options)


class MainSSSuite:
    """
    Runs Buchberger on the Pfaffian generators of I^ss_z and compares the
    initial ideal with J^ss_z. Unless essential_only is set, also checks that
    the essential-set Pfaffians generate the same ideal.
    """

    name = "main-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options
        self.cache = options.make_cache()

    def instances(self):
        "All z ∈ FPF_n(I_n)"
        return fpf_instances(self.options.n)

    def check(self, instance: Instance):
        "Compare init(I^ss_z) with J^ss_z"
        z, n = fpf_data(instance)
        order = self.options.term_order
        budget = self.options.budget
        generators = ssi_generators(z, n, self.options.essential_only)
        basis = self.cache.groebner(generators, order, budget)
        initial = basis.initial_ideal()
        expected = ssj_generators(z, n)
        passed = initial == expected
        details = {
            "generators": len(generators),
            "initial_ideal": initial.to_text(),
            "expected": expected.to_text(),
            "stats": basis.stats,
        }
        if not self.options.essential_only:
            essential = self.cache.groebner(ssi_generators(z, n, True), order, budget)
            details["essential_agrees"] = essential == basis
            passed = passed and essential == basis
        return passed, details
