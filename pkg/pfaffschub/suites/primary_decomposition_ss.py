# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
J^ss_z as the intersection of the variable ideals of its pipe dreams
"""

from pfaffschub.groebner import intersect_all, monomial_ideal_of_cells
from pfaffschub.pipedreams import enumerate_fp
from pfaffschub.schubert_ideals import ssj_generators
from pfaffschub.suites import fpf_data, fpf_instances
from pfaffschub.verify import Instance, SuiteOptions


def get_suite(options: SuiteOptions):
    """Return configured primary-decomposition-ss suite"""
    return PrimaryDecompositionSSSuite(options)


class PrimaryDecompositionSSSuite:
    """J^ss_z = ∩ (u_ij : (i,j) ∈ D) over D ∈ FP(z)"""

    name = "primary-decomposition-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options

    def instances(self):
        "All z ∈ FPF_n(I_n)"
        return fpf_instances(self.options.n)

    def check(self, instance: Instance):
        "Compare monomial ideals"
        z, n = fpf_data(instance)
        dreams = enumerate_fp(z, n)
        intersection = intersect_all([monomial_ideal_of_cells(d.cells) for d in dreams])
        expected = ssj_generators(z, n)
        return intersection == expected, {
            "dreams": [d.to_json() for d in dreams],
            "intersection": intersection.to_text(),
            "expected": expected.to_text(),
        }
