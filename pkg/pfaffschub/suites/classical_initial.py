# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
init(I_w) = J_w for the minors defining classical matrix Schubert varieties
"""

from pfaffschub.schubert_ideals import classical_generators
from pfaffschub.suites import classical_data, classical_instances
from pfaffschub.verify import Instance, SuiteOptions


def get_suite(options: SuiteOptions):
    """Return configured classical-initial suite"""
    return ClassicalInitialSuite(options)


class ClassicalInitialSuite:
    """Buchberger on the minors of I_w, initial ideal compared with J_w"""

    name = "classical-initial"

    def __init__(self, options: SuiteOptions):
        self.options = options
        self.cache = options.make_cache()

    def instances(self):
        "All w ∈ S^(m,n); m defaults to n"
        return classical_instances(self.options.m or self.options.n, self.options.n)

    def check(self, instance: Instance):
        "Compare init(I_w) with J_w"
        w, m, n = classical_data(instance)
        generators, expected = classical_generators(w, m, n)
        basis = self.cache.groebner(generators, self.options.term_order, self.options.budget)
        initial = basis.initial_ideal()
        return initial == expected, {
            "generators": len(generators),
            "initial_ideal": initial.to_text(),
            "expected": expected.to_text(),
        }
