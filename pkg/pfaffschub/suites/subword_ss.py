# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Subword complexes Σ(z,Q): purity, links, deletions, vertex decompositions,
Euler characteristics and Stanley-Reisner ideals
"""

import itertools
import random
from typing import List

from pfaffschub.complexes import (codimension_one_check, is_vertex_decomposable,
                                  reduced_euler_characteristic, stanley_reisner, subword_complex,
                                  subword_deletion_rule)
from pfaffschub.coxeter import (Diagram, Permutation, fpf_involutions_standardized, fpf_length,
                                staircase)
from pfaffschub.pipedreams import delta_fpf, reading_word
from pfaffschub.schubert_ideals import ssj_generators
from pfaffschub.verify import Instance, SuiteOptions

EXHAUSTIVE_WINDOW_LIMIT = 4
RANDOM_SUBSETS = 4


def get_suite(options: SuiteOptions):
    """Return configured subword-ss suite"""
    return SubwordSSSuite(options)


class SubwordSSSuite:
    """
    Instances are pairs (z, Q): every Q ⊆ ▽_n for small n, otherwise ▽_n
    itself plus a few seeded random subsets per z
    """

    name = "subword-ss"

    def __init__(self, options: SuiteOptions):
        self.options = options

    def _subsets(self, z: Permutation) -> List[Diagram]:
        full = staircase(self.options.n)
        if self.options.n <= EXHAUSTIVE_WINDOW_LIMIT:
            return [
                Diagram(cells) for size in range(len(full) + 1)
                for cells in itertools.combinations(full.cells, size)
            ]
        rng = random.Random(f"{self.options.seed}:{z}")
        picked = {full}
        for _ in range(RANDOM_SUBSETS):
            picked.add(Diagram(cell for cell in full if rng.random() < 0.5))
        return sorted(picked)

    def instances(self):
        "Pairs (z, Q)"
        n = self.options.n
        result = []
        for z in fpf_involutions_standardized(n):
            for cells in self._subsets(z):
                key = f"{z}|{';'.join(f'{i},{j}' for i, j in cells)}"
                result.append(Instance(key, {"z": z.to_json(), "n": n, "cells": cells.to_json()}))
        return result

    def check(self, instance: Instance):
        "Run every complex-level property on one (z, Q)"
        z = Permutation.from_json(instance.data["z"])
        n = int(instance.data["n"])
        cells = Diagram(tuple(c) for c in instance.data["cells"])
        ell = fpf_length(z)
        complex_ = subword_complex(z, cells, n)
        rng = random.Random(f"{self.options.seed}:{instance.key}")
        removed = Diagram(c for c in cells if rng.random() < 0.5)
        in_plus = delta_fpf(reading_word(cells)) == z
        euler = reduced_euler_characteristic(complex_)
        sign = -1 if (len(cells) - ell - 1) % 2 else 1
        expected_euler = sign if in_plus else 0
        checks = {
            "pure": complex_.is_empty() or
            (complex_.is_pure() and complex_.dimension() == len(cells) - ell - 1),
            "link": complex_.link(removed) == subword_complex(z, cells - removed, n),
            "vertex_decomposable": is_vertex_decomposable(complex_)[0],
            "deletion_rule": subword_deletion_rule(z, cells, n),
            "euler": euler == expected_euler,
            "codimension_one": codimension_one_check(complex_, sphere=in_plus),
        }
        if cells == staircase(n):
            checks["stanley_reisner"] = stanley_reisner(complex_) == ssj_generators(z, n)
        return all(checks.values()), {"euler": euler, "extended": in_plus, "checks": checks}
