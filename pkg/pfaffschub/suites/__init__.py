# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Verification suite plugins. Every module exposes get_suite(options)
returning an object with instances() and check(instance).
"""

from typing import List, Tuple

from pfaffschub.coxeter import Permutation, fpf_involutions_standardized, window_permutations
from pfaffschub.verify import Instance


def fpf_instances(n: int) -> List[Instance]:
    "One instance per element of FPF_n(I_n)"
    return [Instance(str(z), {"z": z.to_json(), "n": n}) for z in fpf_involutions_standardized(n)]


def classical_instances(m: int, n: int) -> List[Instance]:
    "One instance per element of S^(m,n)"
    return [
        Instance(",".join(map(str, w.one_line(max(m, n)))), {
            "w": w.to_json(),
            "m": m,
            "n": n
        }) for w in window_permutations(m, n)
    ]


def fpf_data(instance: Instance) -> Tuple[Permutation, int]:
    "Decode an fpf instance"
    return Permutation.from_json(instance.data["z"]), int(instance.data["n"])


def classical_data(instance: Instance) -> Tuple[Permutation, int, int]:
    "Decode a classical instance"
    data = instance.data
    return Permutation.from_json(data["w"]), int(data["m"]), int(data["n"])
