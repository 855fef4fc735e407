"""
Unit tests for monomial ideals, Buchberger's algorithm and K-polynomials
"""

import random
import unittest

import sympy

from pfaffschub.coxeter import fpf_involutions_standardized, parse_fpf_cycles
from pfaffschub.errors import BudgetError, UsageError
from pfaffschub.groebner import (Budget, GroebnerBasis, MonomialIdeal, buchberger, colon_monomial,
                                 grading_symbols, hilbert_lemma_holds, hilbert_series_check,
                                 ideal_equal, ideal_membership, initial_ideal, intersect_all,
                                 is_groebner_basis, k_polynomial, k_polynomial_inclusion_exclusion,
                                 monomial_contains, monomial_equal, monomial_intersect,
                                 monomial_sum, reduce)
from pfaffschub.pipedreams import enumerate_fp
from pfaffschub.polyring import SKEW, Monomial, Polynomial, parse_polynomial
from pfaffschub.schubert_ideals import groebner_generators_ss, ssi_generators, ssj_generators


def m(*cells):
    return Monomial.of(*cells)


def u(i, j):
    return Polynomial.variable(i, j, SKEW)


class TestMonomialIdeal(unittest.TestCase):
    def test_minimal_generators(self):
        ideal = MonomialIdeal([m((2, 1), (3, 1)), m((2, 1)), m((2, 1), (2, 1))])
        self.assertEqual(ideal.generators, (m((2, 1)), ))

    def test_intersect_and_colon(self):
        first = MonomialIdeal.from_cells([(2, 1)])
        second = MonomialIdeal.from_cells([(3, 1)])
        self.assertEqual(first.intersect(second), MonomialIdeal([m((2, 1), (3, 1))]))
        self.assertEqual(first.intersect(second).colon(m((2, 1))), second)

    def test_operations(self):
        first = MonomialIdeal.from_cells([(2, 1)])
        second = MonomialIdeal.from_cells([(3, 1)])
        both = monomial_sum(first, second)
        self.assertEqual(both, MonomialIdeal.from_cells([(3, 1), (2, 1)]))
        self.assertTrue(monomial_contains(both, m((3, 1), (3, 2))))
        self.assertFalse(monomial_contains(both, m((3, 2))))
        product = monomial_intersect(first, second)
        self.assertTrue(monomial_equal(colon_monomial(product, m((3, 1))), first))
        self.assertFalse(monomial_equal(product, both))

    def test_empty_intersection(self):
        self.assertTrue(intersect_all([]).is_unit())

    def test_hilbert_lemma(self):
        ideal = MonomialIdeal.from_cells([(2, 1)])
        self.assertTrue(hilbert_lemma_holds(ideal, m((3, 1))))
        self.assertFalse(hilbert_lemma_holds(ideal, m((2, 1))))


class TestBuchberger(unittest.TestCase):
    z = parse_fpf_cycles("(1,4)(2,6)(3,5)")

    def test_initial_ideal(self):
        init = initial_ideal(ssi_generators(self.z, 6))
        self.assertEqual(init.to_text(), ["u[2,1]", "u[3,1]", "u[3,2]", "u[4,2]*u[5,1]"])

    def test_ideal_equality(self):
        others = [u(2, 1), u(3, 2), u(3, 1), parse_polynomial("u[4,1]*u[5,2] - u[4,2]*u[5,1]",
                                                              SKEW)]
        self.assertTrue(ideal_equal(list(ssi_generators(self.z, 6)), others))
        self.assertFalse(ideal_equal([u(2, 1)], [u(3, 1)]))

    def test_reduced_basis_passes_criterion(self):
        basis = buchberger(ssi_generators(parse_fpf_cycles("(1,2)(3,6)(4,5)"), 6))
        self.assertTrue(is_groebner_basis(list(basis)))
        self.assertTrue(all(g.leading()[1] == 1 for g in basis))

    def test_division(self):
        self.assertEqual(reduce(u(2, 1) + u(3, 1), [u(2, 1)]).to_text(), "u[3,1]")
        self.assertFalse(reduce(u(2, 1) * u(3, 2), [u(3, 2)]))

    def test_membership(self):
        basis = buchberger(ssi_generators(self.z, 6))
        member = parse_polynomial("u[4,1]*u[5,2] - u[4,2]*u[5,1] + u[2,1]*u[6,5]", SKEW)
        self.assertTrue(ideal_membership(member, basis))
        self.assertFalse(ideal_membership(u(4, 1), basis))

    def test_example_pair_is_not_a_basis(self):
        f = parse_polynomial("u[3,2]*u[4,1] - u[3,1]*u[4,2] + u[2,1]*u[4,3]", SKEW)
        g = parse_polynomial("u[3,2]*u[5,1] - u[3,1]*u[5,2] + u[2,1]*u[5,3]", SKEW)
        self.assertFalse(is_groebner_basis([f, g]))
        remainder = reduce(u(4, 1) * g - u(5, 1) * f, [f, g])
        self.assertEqual(remainder.leading(), (m((3, 1), (4, 2), (5, 1)), 1))
        basis = buchberger([f, g])
        self.assertTrue(basis.initial_ideal().contains(m((3, 1), (4, 2), (5, 1))))

    def test_basis_is_a_fixed_point(self):
        for n in (4, 5):
            for z in fpf_involutions_standardized(n):
                basis = buchberger(ssi_generators(z, n))
                self.assertEqual(buchberger(list(basis)), basis)
                for poly in groebner_generators_ss(z, n):
                    self.assertTrue(ideal_membership(poly, basis), (z, poly))

    def test_criterion_rejects(self):
        self.assertFalse(is_groebner_basis([u(2, 1) - u(3, 1), u(2, 1) - u(3, 2)]))

    def test_agrees_with_sympy(self):
        cells = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]
        symbols = sympy.symbols("x1:7")
        gens = [
            parse_polynomial(text, SKEW) for text in (
                "u[3,2]*u[4,1] - u[3,1]*u[4,2] + u[2,1]*u[4,3]",
                "u[2,1] - u[4,3]",
                "u[3,1]*u[4,2] - u[3,2]^2",
            )
        ]

        def to_sympy(poly):
            return sum(
                sympy.Rational(coeff.numerator, coeff.denominator) *
                sympy.Mul(*(symbols[cells.index(var)]**e for var, e in mono.exps))
                for mono, coeff in poly.terms.items())

        reference = sympy.groebner([to_sympy(g) for g in gens], *symbols, order="grevlex")
        leading = [p.monoms(order="grevlex")[0] for p in reference.polys]
        expected = MonomialIdeal(
            Monomial((cells[k], e) for k, e in enumerate(exps) if e) for exps in leading)
        basis = buchberger(gens)
        self.assertEqual(len(basis.basis), len(leading))
        self.assertEqual(basis.initial_ideal(), expected)

    def test_json_roundtrip(self):
        basis = buchberger(ssi_generators(self.z, 6))
        self.assertEqual(GroebnerBasis.from_json(basis.to_json()), basis)

    def test_budget(self):
        with self.assertRaisesRegex(BudgetError, "reduction steps"):
            buchberger(ssi_generators(self.z, 6), budget=Budget(reductions=1))

    def test_hilbert_series(self):
        self.assertTrue(hilbert_series_check(list(ssi_generators(self.z, 6)), 6, 2))
        with self.assertRaisesRegex(BudgetError, "Hilbert series degree"):
            hilbert_series_check(list(ssi_generators(self.z, 6)), 6, 9)


class TestKPolynomial(unittest.TestCase):
    def test_trivial_ideals(self):
        a1, a2 = grading_symbols(2)
        self.assertEqual(k_polynomial(MonomialIdeal([]), 2).as_expr(), 1)
        self.assertEqual(
            k_polynomial(MonomialIdeal.from_cells([(2, 1)]), 2).as_expr(), 1 - a1 * a2)
        self.assertEqual(k_polynomial(MonomialIdeal.unit(), 2).as_expr(), 0)

    def test_routes_agree(self):
        z = parse_fpf_cycles("(1,2)(3,6)(4,5)")
        ideal = ssj_generators(z, 6)
        expected = k_polynomial_inclusion_exclusion([d.cells for d in enumerate_fp(z, 6)], 6)
        self.assertEqual(k_polynomial(ideal, 6), expected)
        self.assertEqual(k_polynomial(ideal, 6, random.Random(7)), expected)

    def test_family_limit(self):
        with self.assertRaisesRegex(BudgetError, "inclusion-exclusion families"):
            k_polynomial_inclusion_exclusion([[(2, 1)], [(3, 1)]], 3, limit=1)

    def test_grading_window(self):
        with self.assertRaisesRegex(UsageError, "grading window"):
            k_polynomial(MonomialIdeal.from_cells([(4, 1)]), 3)
