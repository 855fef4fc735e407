"""
Unit tests for growth diagrams and rank table realization
"""

import itertools
import random
import unittest

from pfaffschub import tableaux
from pfaffschub.coxeter import (RankTable, fpf_involutions_standardized, identity, one_fpf,
                                parse_one_line, permutations, rank_table, window_permutations)
from pfaffschub.errors import RankTableError, UsageError
from pfaffschub.polyring import Monomial
from pfaffschub.schubert_ideals import u_AB
from pfaffschub.tableaux import (check_rank_conditions, dbl, greene_statistic, growth_diagram,
                                 min_table, odd_column_counts, rank_table_of_monomial,
                                 realize_rank_table, ss_rank_table_of_monomial, support_matrix)


def antidiagonal_rank(mono, i, j):
    "Largest size of an antidiagonal u_AB dividing mono inside [i]x[j]"
    best = 0
    for size in range(1, min(i, j) + 1):
        for a in itertools.combinations(range(1, i + 1), size):
            for b in itertools.combinations(range(1, j + 1), size):
                if u_AB(a, b).divides(mono):
                    best = size
    return best


class TestGrowth(unittest.TestCase):
    def test_lengths_match_greene(self):
        rng = random.Random(11)
        for _ in range(1000):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            matrix = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
            growth = growth_diagram(matrix)
            self.assertTrue(growth.local_conditions_hold())
            for i in range(rows + 1):
                for j in range(cols + 1):
                    self.assertEqual(growth.length(i, j), greene_statistic(matrix, i, j))

    def test_bad_matrix(self):
        with self.assertRaisesRegex(UsageError, "rectangular nonnegative"):
            growth_diagram([[1, 0], [1]])

    def test_odd_columns_need_symmetry(self):
        with self.assertRaisesRegex(UsageError, "symmetric square"):
            odd_column_counts([[0, 1], [0, 0]])

    def test_odd_columns(self):
        self.assertEqual(odd_column_counts([[0] * 3 for _ in range(3)]), [0, 0, 0])
        identity_matrix = [[int(i == j) for j in range(3)] for i in range(3)]
        self.assertEqual(odd_column_counts(identity_matrix), [1, 2, 3])

    def test_odd_columns_follow_trace(self):
        rng = random.Random(13)
        for _ in range(200):
            size = rng.randint(1, 6)
            matrix = [[0] * size for _ in range(size)]
            for i in range(size):
                for j in range(i + 1):
                    matrix[i][j] = matrix[j][i] = rng.randint(0, 1)
            traces = [sum(matrix[k][k] for k in range(i)) for i in range(1, size + 1)]
            self.assertEqual(odd_column_counts(matrix), traces, matrix)

    def test_zero_diagonal_gives_even_lengths(self):
        rng = random.Random(19)
        for _ in range(50):
            size = rng.randint(2, 6)
            matrix = [[0] * size for _ in range(size)]
            for i in range(size):
                for j in range(i):
                    matrix[i][j] = matrix[j][i] = rng.randint(0, 1)
            growth = growth_diagram(matrix)
            self.assertEqual(odd_column_counts(matrix), [0] * size)
            self.assertTrue(all(growth.length(i, i) % 2 == 0 for i in range(size + 1)))


class TestMonomialTables(unittest.TestCase):
    def test_column_monomial(self):
        mono = Monomial.of((2, 1), (3, 1))
        self.assertEqual(support_matrix(mono, 3, 3), [[0, 0, 0], [1, 0, 0], [1, 0, 0]])
        table = rank_table_of_monomial(mono, 3, 3)
        self.assertEqual(table.rows(), [[0, 0, 0], [1, 1, 1], [1, 1, 1]])
        self.assertEqual(realize_rank_table(table).one_line(), [4, 1, 5, 2, 3])

    def test_skew_monomial(self):
        table = ss_rank_table_of_monomial(Monomial.of((2, 1)), 2)
        self.assertEqual(table.rows(), [[0, 1], [1, 2]])
        self.assertEqual(realize_rank_table(table, tableaux.FPF), one_fpf())

    def test_skew_monomial_below_diagonal(self):
        with self.assertRaisesRegex(UsageError, "strictly below the diagonal"):
            ss_rank_table_of_monomial(Monomial.of((1, 2)), 2)

    def test_tables_match_antidiagonal_scan(self):
        rng = random.Random(29)
        for _ in range(150):
            m = rng.randint(1, 4)
            n = rng.randint(1, 4)
            cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
            mono = Monomial.of(*rng.sample(cells, rng.randint(0, len(cells))))
            table = rank_table_of_monomial(mono, m, n)
            for i in range(m + 1):
                for j in range(n + 1):
                    self.assertEqual(table(i, j), antidiagonal_rank(mono, i, j), (mono, i, j))

    def test_skew_tables_through_dbl(self):
        rng = random.Random(31)
        cells = [(i, j) for i in range(2, 7) for j in range(1, i)]
        for _ in range(50):
            mono = Monomial.of(*rng.sample(cells, rng.randint(0, 6)))
            self.assertEqual(ss_rank_table_of_monomial(mono, 6),
                             rank_table_of_monomial(dbl(mono), 6, 6))


class TestRealization(unittest.TestCase):
    def test_classical_tables(self):
        for w in window_permutations(3, 3):
            self.assertEqual(realize_rank_table(rank_table(w, 3, 3)), w)

    def test_permutation_tables(self):
        for w in permutations(4):
            self.assertEqual(realize_rank_table(rank_table(w, 4, 4)), w)

    def test_fpf_tables(self):
        for n in range(2, 6):
            for z in fpf_involutions_standardized(n):
                table = rank_table(z, n, n)
                self.assertEqual(check_rank_conditions(table, tableaux.FPF), [])
                self.assertEqual(realize_rank_table(table, tableaux.FPF), z)
        self.assertEqual(len(fpf_involutions_standardized(5)), 26)

    def test_min_table(self):
        swap = rank_table(parse_one_line("2 1"), 2, 2)
        self.assertEqual(min_table(rank_table(identity(), 2, 2), swap), swap)
        self.assertEqual(swap.rows(), [[0, 1], [1, 2]])

    def test_condition_a(self):
        with self.assertRaises(RankTableError) as ctx:
            realize_rank_table(RankTable.from_rows([[2]]))
        self.assertEqual(ctx.exception.condition, "a")
        self.assertEqual(ctx.exception.cell, (1, 1))

    def test_condition_b(self):
        with self.assertRaisesRegex(RankTableError, r"condition \(b\)"):
            realize_rank_table(RankTable.from_rows([[0, 1], [1, 1]]))

    def test_symmetry(self):
        with self.assertRaisesRegex(RankTableError, "symmetric"):
            realize_rank_table(RankTable.from_rows([[0, 1], [0, 1]]), tableaux.FPF)

    def test_odd_diagonal(self):
        with self.assertRaises(RankTableError) as ctx:
            realize_rank_table(RankTable.from_rows([[1, 1], [1, 2]]), tableaux.FPF)
        self.assertEqual(ctx.exception.condition, "even-diagonal")

    def test_unknown_mode(self):
        with self.assertRaisesRegex(UsageError, "Unknown realization mode"):
            check_rank_conditions(rank_table(one_fpf(), 2, 2), "skew")
