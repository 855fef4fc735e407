# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Symplectic Grothendieck polynomials: pipe dream sum against K-polynomial
"""

from pfaffschub.coxeter import fpf_length, in_fpf_image, is_fpf_dominant
from pfaffschub.grothendieck import (evaluate_at_one, groth_sp_dominant, groth_sp_dreams,
                                     groth_sp_inclusion_exclusion, groth_sp_kpoly,
                                     groth_sp_stability, kpoly_to_text, lowest_x_degree)
from pfaffschub.pipedreams import enumerate_fp
from pfaffschub.suites import fpf_data, fpf_instances
from pfaffschub.verify import Instance, SuiteOptions

INCLUSION_EXCLUSION_LIMIT = 12
STABILITY_WINDOW_LIMIT = 4


def get_suite(options: SuiteOptions):
    """Return configured grothendieck-ss suite"""
    return GrothendieckSSSuite(options)


class GrothendieckSSSuite:
    """
    Route equality, value at a = 1, lowest x-degree, product formula for
    fpf-dominant z, and for small windows inclusion-exclusion and stability
    """

    name = "grothendieck-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options

    def instances(self):
        "All z ∈ FPF_n(I_n)"
        return fpf_instances(self.options.n)

    def check(self, instance: Instance):
        "Compare every available route for one z"
        z, n = fpf_data(instance)
        ell = fpf_length(z)
        kpoly = groth_sp_kpoly(z, n)
        checks = {
            "routes_agree": groth_sp_dreams(z, n) == kpoly,
            "value_at_one": evaluate_at_one(kpoly) == (1 if ell == 0 else 0),
            "lowest_x_degree": lowest_x_degree(kpoly) == ell,
        }
        if is_fpf_dominant(z, n):
            checks["dominant_product"] = groth_sp_dominant(z, n) == kpoly
        if len(enumerate_fp(z, n)) <= INCLUSION_EXCLUSION_LIMIT:
            checks["inclusion_exclusion"] = \
                groth_sp_inclusion_exclusion(z, n, INCLUSION_EXCLUSION_LIMIT) == kpoly
        if n <= STABILITY_WINDOW_LIMIT and in_fpf_image(z, n + 2):
            checks["stability"] = groth_sp_stability(z, n, n + 2)
        return all(checks.values()), {"polynomial": kpoly_to_text(kpoly), "checks": checks}
