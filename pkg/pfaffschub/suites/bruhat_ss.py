# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Bruhat order on FPF_n(I_n): rank tables against covers, transitions
against Bruhat-minimal elements, and the exchange property
"""

from pfaffschub.coxeter import (bruhat_closure_leq, bruhat_leq, bruhat_minimal_dominating,
                                dominant_component, fpf_involutions_standardized,
                                ijr_prime_holds_fpf, transitions_psi)
from pfaffschub.suites import fpf_data, fpf_instances
from pfaffschub.verify import Instance, SuiteOptions


def get_suite(options: SuiteOptions):
    """Return configured bruhat-ss suite"""
    return BruhatSSSuite(options)


class BruhatSSSuite:
    """Order oracles compared for one z against the whole of FPF_n(I_n)"""

    name = "bruhat-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options

    def instances(self):
        "All z ∈ FPF_n(I_n)"
        return fpf_instances(self.options.n)

    def check(self, instance: Instance):
        "Compare order oracles for one z"
        z, n = fpf_data(instance)
        limit = 2 * n
        mismatches = [
            str(v) for v in fpf_involutions_standardized(n)
            if bruhat_leq(z, v, n=n) != bruhat_closure_leq(v, z, limit)
        ]
        _, corners = dominant_component(z)
        psi_mismatches = [[p, q] for p, q in corners
                          if n >= p > q and
                          transitions_psi(z, p) != bruhat_minimal_dominating(z, p, q, n)]
        exchange = ijr_prime_holds_fpf(z, max(z.window, n))
        return not mismatches and not psi_mismatches and exchange, {
            "order_mismatches": mismatches,
            "transition_mismatches": psi_mismatches,
            "exchange": exchange,
        }
