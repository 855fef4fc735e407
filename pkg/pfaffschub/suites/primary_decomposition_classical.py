# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
J_w as the intersection of the variable ideals of its reduced pipe dreams
"""

from pfaffschub.groebner import intersect_all, monomial_ideal_of_cells
from pfaffschub.pipedreams import enumerate_rp
from pfaffschub.polyring import GENERAL
from pfaffschub.schubert_ideals import classical_generators
from pfaffschub.suites import classical_data, classical_instances
from pfaffschub.verify import Instance, SuiteOptions


def get_suite(options: SuiteOptions):
    """Return configured primary-decomposition-classical suite"""
    return PrimaryDecompositionClassicalSuite(options)


class PrimaryDecompositionClassicalSuite:
    """J_w = ∩ (u_ij : (i,j) ∈ D) over D ∈ RP(w), w ∈ S^(m,n)"""

    name = "primary-decomposition-classical"

    def __init__(self, options: SuiteOptions):
        self.options = options

    def instances(self):
        "All w ∈ S^(m,n); m defaults to n"
        return classical_instances(self.options.m or self.options.n, self.options.n)

    def check(self, instance: Instance):
        "Compare monomial ideals"
        w, m, n = classical_data(instance)
        _, expected = classical_generators(w, m, n)
        dreams = enumerate_rp(w, m, n)
        intersection = intersect_all(
            [monomial_ideal_of_cells(d.cells, GENERAL) for d in dreams], GENERAL)
        return intersection == expected, {
            "dreams": [d.to_json() for d in dreams],
            "intersection": intersection.to_text(),
            "expected": expected.to_text(),
        }
