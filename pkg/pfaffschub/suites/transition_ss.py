# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Transition identities at the outer corners of dom(z)
"""

import logging

from pfaffschub.coxeter import dominant_component, in_fpf_image, rank_table, transitions_psi
from pfaffschub.groebner import intersect_all
from pfaffschub.pipedreams import transition_bijection_check
from pfaffschub.polyring import Monomial
from pfaffschub.schubert_ideals import (bruhat_minimal_intersection_check, corner_rank_table,
                                        ssj_generators)
from pfaffschub.suites import fpf_data, fpf_instances
from pfaffschub.verify import Instance, SuiteOptions

log = logging.getLogger(__name__)


def get_suite(options: SuiteOptions):
    """Return configured transition-ss suite"""
    return TransitionSSSuite(options)


class TransitionSSSuite:
    """
    For every corner (p,q) with n >= p > q:
    J^ss_z + (u_pq) = ∩ J^ss_v over v ∈ Ψ(z,p) = J^ss of min(r_z, r_pq),
    Ψ(z,p) ⊆ FPF_n(I_n) and the pipe dream bijection D -> D ⊔ {(p,q)}.
    """

    name = "transition-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options

    def instances(self):
        "All z ∈ FPF_n(I_n)"
        return fpf_instances(self.options.n)

    def check(self, instance: Instance):
        "Check all corners of one z"
        z, n = fpf_data(instance)
        base = ssj_generators(z, n)
        table = rank_table(z, n, n)
        _, corners = dominant_component(z)
        passed = True
        per_corner = []
        for p, q in corners:
            if not n >= p > q:
                continue
            psi = transitions_psi(z, p)
            lhs = base.add_monomial(Monomial.of((p, q)))
            rhs = intersect_all([ssj_generators(v, n) for v in psi])
            lowered = table.minimum(corner_rank_table(p, q, n))
            result = {
                "corner": [p, q],
                "psi": [str(v) for v in psi],
                "psi_in_window": all(in_fpf_image(v, n) for v in psi),
                "sum_is_intersection": lhs == rhs,
                "sum_is_min_table": lhs == ssj_generators(lowered),
                "minimal_intersection": bruhat_minimal_intersection_check(lowered, n),
                "bijection": transition_bijection_check(z, p, q, n),
            }
            if not all(value for key, value in result.items() if key not in ("corner", "psi")):
                log.info("Transition check failed for %s at (%d,%d)", z, p, q)
                passed = False
            per_corner.append(result)
        return passed, {"corners": per_corner}
