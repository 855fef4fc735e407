# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Growth diagrams, rank tables of monomials and realization of rank tables
by (fixed-point-free) permutations
"""

import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

from pfaffschub.coxeter import (Cell, Permutation, RankTable, fpf_standardize, from_cycles,
                                from_partial_permutation, rank_table)
from pfaffschub.errors import PermutationError, RankTableError, UsageError
from pfaffschub.polyring import Monomial

log = logging.getLogger(__name__)

Partition = Tuple[int, ...]
IntMatrix = Sequence[Sequence[int]]

CLASSICAL = "classical"
FPF = "fpf"


def _part(shape: Partition, k: int) -> int:
    return shape[k] if k < len(shape) else 0


def grow(rho: Partition, mu: Partition, nu: Partition, carry: int) -> Partition:
    """
    Local growth rule: starting with CARRY = X_ij, set
    λ_k = max(μ_k, ν_k) + CARRY, stop at the first zero part, otherwise
    continue with CARRY = min(μ_k, ν_k) - ρ_k.
    """
    parts = []
    k = 0
    while True:
        mu_k = _part(mu, k)
        nu_k = _part(nu, k)
        part = max(mu_k, nu_k) + carry
        if part == 0:
            return tuple(parts)
        parts.append(part)
        carry = min(mu_k, nu_k) - _part(rho, k)
        k += 1


class GrowthDiagram:
    """Array of partitions λ(i,j), 0 <= i <= m, 0 <= j <= n"""

    def __init__(self, shapes: List[List[Partition]]):
        self.shapes = shapes
        self.m = len(shapes) - 1
        self.n = len(shapes[0]) - 1

    def __call__(self, i: int, j: int) -> Partition:
        return self.shapes[i][j]

    def length(self, i: int, j: int) -> int:
        "Number of parts of λ(i,j)"
        return len(self.shapes[i][j])

    def local_conditions_hold(self) -> bool:
        """
        Check that ℓ(μ)-ℓ(ρ) and ℓ(ν)-ℓ(ρ) lie in {0,1} and that both being 1
        forces ℓ(λ) = ℓ(ρ)+2, at every cell
        """
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                rho = self.length(i - 1, j - 1)
                mu = self.length(i - 1, j)
                nu = self.length(i, j - 1)
                lam = self.length(i, j)
                if mu - rho not in (0, 1) or nu - rho not in (0, 1):
                    return False
                if mu == nu == rho + 1 and lam != rho + 2:
                    return False
        return True

    def to_json(self) -> List[List[List[int]]]:
        "Shapes as nested lists"
        return [[list(shape) for shape in row] for row in self.shapes]


def growth_diagram(matrix: IntMatrix) -> GrowthDiagram:
    "Run the growth rules over a nonnegative integer matrix"
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    for row in matrix:
        if len(row) != n or any(x < 0 for x in row):
            raise UsageError("Growth diagrams need a rectangular nonnegative integer matrix")
    shapes: List[List[Partition]] = [[() for _ in range(n + 1)] for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            shapes[i][j] = grow(shapes[i - 1][j - 1], shapes[i - 1][j], shapes[i][j - 1],
                                matrix[i - 1][j - 1])
    return GrowthDiagram(shapes)


def greene_statistic(matrix: IntMatrix, i: int, j: int) -> int:
    """
    Longest sequence of nonzero positions in the northwest i x j part with
    rows strictly decreasing while columns strictly increase
    """
    cells = sorted(((a, b) for a in range(1, i + 1) for b in range(1, j + 1)
                    if matrix[a - 1][b - 1]),
                   key=lambda c: (-c[0], c[1]))
    best: List[int] = []
    for pos, (a, b) in enumerate(cells):
        chain = 1
        for prev in range(pos):
            pa, pb = cells[prev]
            if pa > a and pb < b:
                chain = max(chain, best[prev] + 1)
        best.append(chain)
    return max(best, default=0)


def support_matrix(mono: Monomial, m: int, n: int) -> List[List[int]]:
    "0/1 matrix marking variables u_ij dividing the monomial inside [m]x[n]"
    matrix = [[0] * n for _ in range(m)]
    for i, j in mono.variables():
        if i <= m and j <= n:
            matrix[i - 1][j - 1] = 1
    return matrix


def rank_table_of_monomial(mono: Monomial, m: int, n: int) -> RankTable:
    "r_M(i,j): largest r with u_AB | M for (A,B) of size r inside [i]x[j]"
    growth = growth_diagram(support_matrix(mono, m, n))
    return RankTable([[growth.length(i, j) for j in range(n + 1)] for i in range(m + 1)])


def dbl(mono: Monomial) -> Monomial:
    "Image of M under u_ij -> u_ij * u_ji"
    return mono * Monomial(((j, i), e) for (i, j), e in mono.exps)


def ss_rank_table_of_monomial(mono: Monomial, n: int) -> RankTable:
    "r^ss_M(i,j): largest r with u^ss_AB | M, computed through dbl(M)"
    for i, j in mono.variables():
        if i <= j:
            raise UsageError(f"Variable u[{i},{j}] of {mono} is not strictly below the diagonal")
    return rank_table_of_monomial(dbl(mono), n, n)


class Violation(NamedTuple):
    """A failed rank-table condition at one cell"""
    condition: str
    cell: Optional[Cell]


def check_rank_conditions(table: RankTable, mode: str = CLASSICAL) -> List[Violation]:
    """
    Collect the failures of conditions (a) and (b) characterizing rank
    tables of permutations, plus symmetry and even diagonal for fpf mode
    """
    if mode not in (CLASSICAL, FPF):
        raise UsageError(f"Unknown realization mode '{mode}'")
    violations = []
    if mode == FPF:
        if not table.is_symmetric():
            violations.append(Violation("symmetric", None))
        else:
            violations.extend(
                Violation("even-diagonal", (i, i))
                for i in range(1, table.n + 1)
                if table(i, i) % 2)
    for i in range(1, table.m + 1):
        for j in range(1, table.n + 1):
            if table(i, j) - table(i, j - 1) not in (0, 1) or \
               table(i, j) - table(i - 1, j) not in (0, 1):
                violations.append(Violation("a", (i, j)))
            elif table(i - 1, j) - table(i - 1, j - 1) == 1 and \
                    table(i, j) - table(i, j - 1) != 1:
                violations.append(Violation("b", (i, j)))
    return violations


def marked_cells(table: RankTable) -> List[Cell]:
    "Cells where the rank increases along the row but not in the row above"
    return [(i, j) for i in range(1, table.m + 1) for j in range(1, table.n + 1)
            if table(i, j) - table(i, j - 1) == 1 and table(i - 1, j) - table(i - 1, j - 1) == 0]


def realize_rank_table(table: RankTable, mode: str = CLASSICAL) -> Permutation:
    """
    Return the permutation whose rank table is the given one.

    classical: the unique w ∈ S^{m,n}_infinity whose m x n partial permutation
    matrix has ones in the marked cells.
    fpf: FPF_n(y) where y pairs i with j for every marked off-diagonal cell.
    """
    violations = check_rank_conditions(table, mode)
    if violations:
        first = violations[0]
        where = f" at {first.cell}" if first.cell else ""
        raise RankTableError(f"Rank table violates condition ({first.condition}){where}",
                             first.condition, first.cell)
    marked = marked_cells(table)
    try:
        perm = from_partial_permutation(marked, table.m, table.n)
    except PermutationError as err:
        raise RankTableError(f"Marked cells are not a partial permutation: {err}", "a") from err
    if mode == CLASSICAL:
        return perm
    n = table.n
    pairs = sorted(set(tuple(sorted(cell)) for cell in marked))
    if any(i == j for i, j in pairs):
        raise RankTableError("Marked cell on the diagonal", "even-diagonal")
    try:
        z = fpf_standardize(from_cycles(pairs, n), n)
    except PermutationError as err:
        raise RankTableError(f"Marked cells do not form an involution: {err}", "symmetric") from err
    if rank_table(z, n, n) != table:
        raise RankTableError("No element of FPF_n(I_n) has this rank table", "fpf")
    log.debug("Realized %s by %s", table, z)
    return z


def min_table(first: RankTable, second: RankTable) -> RankTable:
    "Pointwise minimum of two rank tables"
    return first.minimum(second)


def odd_column_counts(matrix: IntMatrix) -> List[int]:
    "Number of odd-length columns of λ(i,i) for i = 1..n, for symmetric input"
    size = len(matrix)
    if any(len(row) != size for row in matrix) or \
       any(matrix[i][j] != matrix[j][i] for i in range(size) for j in range(i)):
        raise UsageError("odd_column_counts expects a symmetric square matrix")
    growth = growth_diagram(matrix)
    counts = []
    for i in range(1, size + 1):
        shape = growth(i, i)
        columns = [sum(1 for part in shape if part >= k) for k in range(1, _part(shape, 0) + 1)]
        counts.append(sum(1 for height in columns if height % 2))
    return counts
