"""
Unit tests for Pfaffian generators, antidiagonal ideals and untwisting
"""

import itertools
import random
import unittest

from pfaffschub.coxeter import (fpf_involutions_standardized, parse_fpf_cycles, parse_one_line,
                                rank_table, z_square)
from pfaffschub.errors import PermutationError, UsageError
from pfaffschub.groebner import buchberger, ideal_equal, is_groebner_basis
from pfaffschub.polyring import SKEW, Monomial, Polynomial
from pfaffschub.schubert_ideals import (antidiagonal_monomial, bruhat_minimal_intersection_check,
                                        classical_generators, epsilon, f_AB, g_AB,
                                        groebner_generators_ss, is_untwisted, odot, ominus,
                                        skew_pfaffian, ssi_generators, ssj_generators, u_AB,
                                        u_ss_AB, untwist)
from pfaffschub.tableaux import min_table, ss_rank_table_of_monomial

EXAMPLE = parse_fpf_cycles("(1,2)(3,6)(4,5)")


def equal_size_pairs(limit):
    for size in range(1, limit + 1):
        for a in itertools.combinations(range(1, limit + 1), size):
            for b in itertools.combinations(range(1, limit + 1), size):
                yield a, b


def pf(indices):
    return skew_pfaffian(indices) if indices else Polynomial.constant(1, SKEW)


def block_expansion(a, b):
    "Sum of signed products pf(A - S) * pf(B + S) over S inside A - B"
    total = Polynomial.zero(SKEW)
    rest = [x for x in a if x not in b]
    for size in range(len(rest) + 1):
        for s in itertools.combinations(rest, size):
            remaining = tuple(x for x in a if x not in s)
            if (len(b) + size) % 2 or len(remaining) % 2:
                continue
            joined = tuple(sorted(b + s))
            sign = (-1)**(len(remaining) // 2) * epsilon(a, s) * epsilon(joined, s)
            total = total + pf(remaining) * pf(joined) * sign
    return total


class TestIndexSets(unittest.TestCase):
    def test_odot(self):
        self.assertEqual(odot((1, 2, 3), (1, 2, 3)), [(1, 3), (2, 2), (3, 1)])
        self.assertEqual(u_AB((1, 2, 3), (1, 2, 3)), Monomial.of((1, 3), (2, 2), (3, 1)))
        self.assertEqual(antidiagonal_monomial((1, 2), (1, 2)), Monomial.of((1, 2), (2, 1)))
        with self.assertRaisesRegex(UsageError, "sets of equal size"):
            odot((1, 2), (1, ))

    def test_skew_antidiagonal(self):
        self.assertIsNone(u_ss_AB((1, 2, 3), (1, 2, 3)))
        self.assertEqual(u_ss_AB((3, 4), (1, 2)), Monomial.of((3, 2), (4, 1)))

    def test_epsilon(self):
        self.assertEqual(epsilon((1, 2, 3), (1, )), 1)
        self.assertEqual(epsilon((1, 2, 3), (2, )), -1)

    def test_ominus(self):
        self.assertEqual(ominus((1, 2), (1, 2)), ())
        self.assertEqual(ominus((3, 4), (1, 2)), (3, 4))

    def test_untwist(self):
        rows, cols = untwist((2, 3, 4, 5), (1, 3, 4, 6))
        self.assertEqual((rows, cols), ((1, 3, 4, 6), (2, 3, 4, 5)))
        self.assertTrue(is_untwisted(rows, cols))
        self.assertEqual(u_ss_AB(rows, cols), u_ss_AB((2, 3, 4, 5), (1, 3, 4, 6)))

    def test_untwist_all_small_pairs(self):
        for a, b in equal_size_pairs(6):
            top, bottom = untwist(a, b)
            self.assertTrue(is_untwisted(top, bottom), (a, b))
            self.assertEqual(u_ss_AB(top, bottom), u_ss_AB(a, b))
            self.assertLessEqual(max(bottom), max(b))
            self.assertLessEqual(max(top), max(a + b))

    def test_untwisted_input_unchanged(self):
        self.assertEqual(untwist((1, 2), (3, 4)), ((1, 2), (3, 4)))
        self.assertEqual(untwist((5, ), (2, )), ((5, ), (2, )))


class TestSkewIdeals(unittest.TestCase):
    def test_small_pfaffian(self):
        self.assertEqual(str(skew_pfaffian((1, 2))), "-u[2,1]")

    def test_block_pfaffian(self):
        self.assertEqual(g_AB((1, ), (2, )).to_text(), "u[2,1]")
        block = g_AB((3, 4), (1, 2))
        self.assertEqual(block.to_text(), "u[3,2]*u[4,1] - u[3,1]*u[4,2]")
        self.assertEqual(block.leading()[0], u_ss_AB((3, 4), (1, 2)))
        with self.assertRaisesRegex(UsageError, "g_AB needs"):
            g_AB((1, 2), (3, ))

    def test_block_pfaffian_expansion(self):
        rng = random.Random(17)
        for _ in range(60):
            size_b = rng.randint(1, 6)
            size_a = rng.randint(0, min(size_b, 8 - size_b))
            a = tuple(sorted(rng.sample(range(1, 8), size_a)))
            b = tuple(sorted(rng.sample(range(1, 8), size_b)))
            self.assertEqual(g_AB(a, b), block_expansion(a, b), (a, b))

    def test_twisted_block(self):
        poly = f_AB((2, 3, 4, 5), (1, 3, 4, 6))
        mono, coeff = poly.leading()
        self.assertEqual(mono, Monomial.of((4, 2), (5, 3), (6, 1)))
        self.assertEqual(coeff, 1)
        self.assertNotEqual(mono, u_ss_AB((2, 3, 4, 5), (1, 3, 4, 6)))

    def test_untwisted_block(self):
        poly = f_AB((1, 3, 4, 6), (2, 3, 4, 5))
        expected = Polynomial.monomial(u_ss_AB((1, 3, 4, 6), (2, 3, 4, 5)), 1, SKEW)
        self.assertEqual(poly.initial_term(), expected)
        self.assertEqual(expected.to_text(), "u[4,3]*u[5,1]*u[6,2]")

    def test_odd_block_vanishes(self):
        self.assertFalse(g_AB((1, ), (2, 3)))
        self.assertFalse(f_AB((1, 2, 3), (1, 2, 3)))
        self.assertIsNone(u_ss_AB((1, 2, 3), (1, 2, 3)))

    def test_untwisted_initial_terms(self):
        for a, b in equal_size_pairs(6):
            if not is_untwisted(a, b):
                continue
            poly = f_AB(a, b)
            expected = u_ss_AB(a, b)
            if expected is None:
                self.assertFalse(poly, (a, b))
                continue
            mono, coeff = poly.leading()
            self.assertEqual(mono, expected, (a, b))
            self.assertEqual(abs(coeff), 1)

    def test_antidiagonal_ideal(self):
        self.assertEqual(ssj_generators(EXAMPLE, 6).to_text(),
                         ["u[3,2]*u[4,1]", "u[3,2]*u[5,1]", "u[3,1]*u[4,2]*u[5,1]"])

    def test_monomial_outside_its_own_ideal(self):
        rng = random.Random(23)
        cells = [(i, j) for i in range(2, 6) for j in range(1, i)]
        for _ in range(100):
            mono = Monomial.of(*rng.sample(cells, rng.randint(1, 5)))
            table = ss_rank_table_of_monomial(mono, 5)
            self.assertFalse(ssj_generators(table).contains(mono), mono)

    def test_minimum_of_tables_gives_sum(self):
        tables = [rank_table(z, 4, 4) for z in fpf_involutions_standardized(4)]
        for first in tables:
            for second in tables:
                self.assertEqual(ssj_generators(min_table(first, second)),
                                 ssj_generators(first) + ssj_generators(second))

    def test_initial_ideal(self):
        basis = buchberger(ssi_generators(EXAMPLE, 6))
        self.assertEqual(basis.initial_ideal(), ssj_generators(EXAMPLE, 6))

    def test_essential_cells_suffice(self):
        full = list(ssi_generators(EXAMPLE, 6))
        essential = ssi_generators(EXAMPLE, 6, essential_only=True)
        self.assertLessEqual(len(essential), len(full))
        self.assertTrue(ideal_equal(full, list(essential)))

    def test_f_ab_form_a_groebner_basis(self):
        gens = groebner_generators_ss(EXAMPLE, 6)
        self.assertTrue(is_groebner_basis(list(gens)))
        self.assertTrue(ideal_equal(list(gens), list(ssi_generators(EXAMPLE, 6))))

    def test_provenance(self):
        gens = ssi_generators(parse_fpf_cycles("(1,4)(2,6)(3,5)"), 6)
        for pos, poly in enumerate(gens):
            self.assertEqual(gens.rebuild(pos), poly)
        data = gens.to_json()
        self.assertEqual(data["context"]["kind"], "ssi")
        self.assertEqual(len(data["generators"]), len(data["provenance"]))

    def test_window_check(self):
        with self.assertRaisesRegex(PermutationError, "is not an element of FPF_2"):
            ssi_generators(z_square(3), 2)

    def test_minimal_intersection_of_permutation_tables(self):
        for z in fpf_involutions_standardized(4):
            self.assertTrue(bruhat_minimal_intersection_check(rank_table(z, 4, 4), 4))


class TestClassicalIdeals(unittest.TestCase):
    def test_2143(self):
        gens, monomials = classical_generators(parse_one_line("2 1 4 3"), 3, 3)
        self.assertEqual(monomials.to_text(), ["u[1,1]", "u[1,3]*u[2,2]*u[3,1]"])
        self.assertEqual(gens.context["w"], "2 1 4 3")

    def test_initial_ideal(self):
        w = parse_one_line("3 1 4 2")
        gens, monomials = classical_generators(w, 4, 4)
        self.assertEqual(buchberger(gens).initial_ideal(), monomials)

    def test_window(self):
        with self.assertRaisesRegex(PermutationError, "is not an element of S"):
            classical_generators(parse_one_line("4 1 2 3"), 2, 2)
