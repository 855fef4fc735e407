"""
Unit tests for monomials, term orders and polynomial arithmetic
"""

import random
import unittest
from fractions import Fraction
from unittest import mock

from pfaffschub.errors import PolynomialError, UsageError
from pfaffschub.polyring import (ANTIDIAG_LEX, GENERAL, ONE, REVLEX, SKEW, Monomial, Polynomial,
                                 compare, determinant, generic_matrices, get_order,
                                 parse_polynomial, pfaffian, polynomial_from_json, submatrix)
from pfaffschub.schubert_ideals import minor, u_AB


def u(i, j, space=GENERAL):
    return Polynomial.variable(i, j, space)


SKEW_CELLS = [(i, j) for i in range(2, 7) for j in range(1, i)]


def random_monomial(rng):
    return Monomial((rng.choice(SKEW_CELLS), rng.randint(0, 2)) for _ in range(rng.randint(0, 4)))


def random_polynomial(rng):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        terms[random_monomial(rng)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(terms, SKEW)


class TestMonomial(unittest.TestCase):
    def test_text(self):
        self.assertEqual(str(Monomial.of((3, 1), (2, 1), (2, 1))), "u[2,1]^2*u[3,1]")
        self.assertEqual(str(Monomial()), "1")

    def test_arithmetic(self):
        a = Monomial.of((2, 1), (3, 1))
        b = Monomial.of((3, 1), (3, 2))
        self.assertEqual(a.lcm(b), Monomial.of((2, 1), (3, 1), (3, 2)))
        self.assertEqual(a.gcd(b), Monomial.of((3, 1)))
        self.assertTrue(Monomial.of((2, 1)).divides(a))
        self.assertEqual(a / Monomial.of((2, 1)), Monomial.of((3, 1)))

    def test_bad_division(self):
        with self.assertRaisesRegex(PolynomialError, "does not divide"):
            Monomial.of((2, 1)) / Monomial.of((3, 1))


class TestTermOrders(unittest.TestCase):
    def test_leading_term_is_antidiagonal(self):
        for order in (REVLEX, ANTIDIAG_LEX):
            self.assertEqual(minor((1, 2), (1, 2)).leading(order)[0], u_AB((1, 2), (1, 2)))

    def test_antidiagonal_3x3(self):
        rows = (1, 2, 3)
        self.assertEqual(minor(rows, rows).leading(REVLEX)[0], u_AB(rows, rows))
        self.assertEqual(minor((1, 3), (2, 3)).leading(REVLEX)[0], u_AB((1, 3), (2, 3)))

    def test_compare(self):
        antidiagonal = Monomial.of((1, 2), (2, 1))
        diagonal = Monomial.of((1, 1), (2, 2))
        self.assertEqual(compare(antidiagonal, diagonal), 1)
        self.assertEqual(compare(diagonal, antidiagonal), -1)
        self.assertEqual(compare(diagonal, diagonal, ANTIDIAG_LEX), 0)
        self.assertEqual(compare(Monomial.of((2, 2)), Monomial(), REVLEX), 1)

    def test_initial_term(self):
        poly = parse_polynomial("u[1,1]*u[2,2] - u[1,2]*u[2,1]")
        self.assertEqual(poly.initial_term().to_text(), "-u[1,2]*u[2,1]")
        self.assertFalse(Polynomial.zero(GENERAL).initial_term())

    def test_random_minors_are_antidiagonal(self):
        rng = random.Random(3)
        for _ in range(500):
            size = rng.randint(1, 5)
            rows = sorted(rng.sample(range(1, 8), size))
            cols = sorted(rng.sample(range(1, 8), size))
            self.assertEqual(minor(rows, cols).leading(REVLEX)[0], u_AB(rows, cols))

    def test_order_axioms(self):
        rng = random.Random(5)
        for order in (REVLEX, ANTIDIAG_LEX):
            for _ in range(300):
                a, b, c = (random_monomial(rng) for _ in range(3))
                self.assertEqual(compare(a, b, order), -compare(b, a, order))
                self.assertEqual(compare(a, b, order) == 0, a == b)
                self.assertEqual(compare(a * c, b * c, order), compare(a, b, order))
                if compare(a, b, order) < 0 and compare(b, c, order) < 0:
                    self.assertEqual(compare(a, c, order), -1)
                if a != ONE:
                    self.assertEqual(compare(ONE, a, order), -1)

    def test_lookup(self):
        self.assertIs(get_order("revlex"), REVLEX)
        self.assertIs(get_order("antidiag-lex"), ANTIDIAG_LEX)
        with self.assertRaisesRegex(UsageError, "Unknown term order 'lex'"):
            get_order("lex")


class TestPolynomial(unittest.TestCase):
    def test_text_roundtrip(self):
        text = "u[2,1]^2*u[4,3] - 1/2*u[3,1]"
        poly = parse_polynomial(text, SKEW)
        self.assertEqual(poly.to_text(), text)
        self.assertEqual(polynomial_from_json(poly.to_json(), SKEW), poly)

    def test_malformed_text(self):
        with self.assertRaisesRegex(PolynomialError, "Malformed factor"):
            parse_polynomial("u[2,1]*v")
        with self.assertRaisesRegex(PolynomialError, "Empty polynomial"):
            parse_polynomial("  ")

    def test_skew_space(self):
        with self.assertRaisesRegex(PolynomialError, "not in the skew space"):
            u(1, 2, SKEW)

    def test_spaces_do_not_mix(self):
        with self.assertRaisesRegex(PolynomialError, "Cannot mix"):
            u(2, 1) + u(2, 1, SKEW)

    def test_ring_axioms(self):
        rng = random.Random(9)
        zero = Polynomial.zero(SKEW)
        for _ in range(100):
            a, b, c = (random_polynomial(rng) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a - a, zero)

    def test_exact_coefficients(self):
        big = Polynomial.constant(2**80, SKEW) + u(2, 1, SKEW)
        square = big * big
        self.assertEqual(square.terms[ONE], 2**160)
        self.assertEqual(square.scale(Fraction(1, 3)) * Polynomial.constant(3, SKEW), square)

    def test_cancellation(self):
        self.assertFalse(u(2, 1) - u(2, 1))
        with self.assertRaisesRegex(PolynomialError, "no leading term"):
            Polynomial.zero().leading()


class TestMatrices(unittest.TestCase):
    def test_skew_determinant(self):
        _, skew = generic_matrices(4)
        det = determinant(submatrix(skew, [1, 2, 4], [1, 2, 3]))
        expected = parse_polynomial(
            "u[2,1]^2*u[4,3] - u[2,1]*u[3,1]*u[4,2] + u[2,1]*u[3,2]*u[4,1]", SKEW)
        self.assertEqual(det, expected)

    def test_pfaffian_squares_to_determinant(self):
        _, skew = generic_matrices(6)
        for size in (2, 4, 6):
            indices = list(range(1, size + 1))
            block = submatrix(skew, indices, indices)
            self.assertEqual(pfaffian(block)**2, determinant(block))

    def test_pfaffian_expansion_agrees(self):
        _, skew = generic_matrices(6)
        expected = pfaffian(skew)
        with mock.patch("pfaffschub.polyring.MATCHING_SUM_LIMIT", 0):
            self.assertEqual(pfaffian(skew), expected)

    def test_odd_pfaffian(self):
        _, skew = generic_matrices(3)
        self.assertFalse(pfaffian(skew))

    def test_pfaffian_needs_skew(self):
        general, _ = generic_matrices(2)
        with self.assertRaisesRegex(PolynomialError, "zero diagonal"):
            pfaffian(general)
