# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
The untwisted f_AB form a Gröbner basis of I^ss_z
"""

from pfaffschub.groebner import MonomialIdeal, is_groebner_basis
from pfaffschub.schubert_ideals import groebner_generators_ss, ssi_generators, ssj_generators
from pfaffschub.suites import fpf_data, fpf_instances
from pfaffschub.verify import Instance, SuiteOptions


def get_suite(options: SuiteOptions):
    """Return configured groebner-basis-ss suite"""
    return GroebnerBasisSSSuite(options)


class GroebnerBasisSSSuite:
    """Buchberger criterion on the f_AB family plus ideal equality with I^ss_z"""

    name = "groebner-basis-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options
        self.cache = options.make_cache()

    def instances(self):
        "All z ∈ FPF_n(I_n)"
        return fpf_instances(self.options.n)

    def check(self, instance: Instance):
        "Run the three comparisons for one z"
        z, n = fpf_data(instance)
        order = self.options.term_order
        budget = self.options.budget
        family = list(groebner_generators_ss(z, n))
        criterion = is_groebner_basis(family, order, budget)
        same_ideal = self.cache.groebner(family, order, budget) == \
            self.cache.groebner(ssi_generators(z, n), order, budget)
        leading = MonomialIdeal(g.leading(order)[0] for g in family)
        initial_terms = leading == ssj_generators(z, n)
        return criterion and same_ideal and initial_terms, {
            "generators": len(family),
            "is_groebner_basis": criterion,
            "same_ideal": same_ideal,
            "initial_terms_generate_j": initial_terms,
        }
