# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Symplectic Grothendieck polynomials computed from extended pipe dreams and
from K-polynomials, plus the transforms used to report them
"""

import logging
from typing import Dict, List, Optional, Sequence

import sympy

from pfaffschub.coxeter import Permutation, fpf_length, in_fpf_image, is_fpf_dominant, \
    ss_rothe_diagram
from pfaffschub.errors import PermutationError, UsageError
from pfaffschub.groebner import grading_symbols, k_polynomial, k_polynomial_inclusion_exclusion
from pfaffschub.pipedreams import enumerate_fp, enumerate_fp_plus
from pfaffschub.schubert_ideals import ssj_generators

log = logging.getLogger(__name__)

KPolynomial = sympy.Poly

BETA = sympy.Symbol("beta")


def _check(z: Permutation, n: int):
    if not z.fpf or not in_fpf_image(z, n):
        raise PermutationError(f"{z} is not an element of FPF_{n}(I_{n})")


def _poly(expr, n: int) -> KPolynomial:
    return sympy.Poly(sympy.expand(expr), *grading_symbols(n), domain="ZZ")


def _cell_product(cells, symbols) -> sympy.Expr:
    product = sympy.Integer(1)
    for i, j in cells:
        product *= 1 - symbols[i - 1] * symbols[j - 1]
    return product


def groth_sp_dreams(z: Permutation, n: int) -> KPolynomial:
    "Signed sum of ∏(1 - a_i a_j) over the extended pipe dreams of z inside ▽_n"
    _check(z, n)
    symbols = grading_symbols(n)
    ell = fpf_length(z)
    total = sympy.Integer(0)
    dreams = enumerate_fp_plus(z, n)
    for dream in dreams:
        sign = -1 if (len(dream) - ell) % 2 else 1
        total += sign * _cell_product(dream, symbols)
    log.debug("%s has %d extended pipe dreams in ▽_%d", z, len(dreams), n)
    return _poly(total, n)


def groth_sp_kpoly(z: Permutation, n: int) -> KPolynomial:
    "K-polynomial of the monomial ideal J^ss_z"
    _check(z, n)
    return k_polynomial(ssj_generators(z, n), n)


def groth_sp_inclusion_exclusion(z: Permutation, n: int, limit: int = 16) -> KPolynomial:
    "Alternating sum over nonempty families of fpf-involution pipe dreams"
    _check(z, n)
    dreams = enumerate_fp(z, n)
    return k_polynomial_inclusion_exclusion([dream.cells for dream in dreams], n, limit)


def groth_sp_dominant(z: Permutation, n: int) -> KPolynomial:
    "Product formula ∏ over D^ss(z) of (1 - a_i a_j), valid for fpf-dominant z"
    _check(z, n)
    if not is_fpf_dominant(z, n):
        raise UsageError(f"{z} is not fpf-dominant")
    return _poly(_cell_product(ss_rothe_diagram(z), grading_symbols(n)), n)


def groth_sp_stability(z: Permutation, n: int, wider: int) -> bool:
    "Compare the K-polynomials of z computed in the windows n and wider"
    if not n < wider:
        raise UsageError(f"Window {wider} must be larger than {n}")
    _check(z, n)
    _check(z, wider)
    narrow = groth_sp_kpoly(z, n)
    wide = groth_sp_kpoly(z, wider)
    return _poly(narrow.as_expr(), wider) == wide


def evaluate_at_one(poly: KPolynomial) -> int:
    "Value at a_1 = ... = a_n = 1"
    return int(poly.as_expr().subs({symbol: 1 for symbol in poly.gens}))


def _x_symbols(count: int):
    return tuple(sympy.symbols(f"x1:{count + 1}"))


def lowest_x_degree(poly: KPolynomial) -> Optional[int]:
    "Smallest total degree in x after a_i = 1 - x_i; None for the zero polynomial"
    xs = _x_symbols(len(poly.gens))
    shifted = poly.as_expr().subs({a: 1 - x for a, x in zip(poly.gens, xs)}, simultaneous=True)
    expanded = sympy.Poly(sympy.expand(shifted), *xs, domain="ZZ")
    if expanded.is_zero:
        return None
    return min(sum(monom) for monom in expanded.monoms())


def beta_transform(poly: KPolynomial, length: Optional[int] = None) -> sympy.Expr:
    """
    Rewrite through a_i = 1 + β x_i. With the fpf length given the result is
    divided by (-β)^length.
    """
    xs = _x_symbols(len(poly.gens))
    shifted = poly.as_expr().subs({a: 1 + BETA * x for a, x in zip(poly.gens, xs)},
                                  simultaneous=True)
    if length is not None:
        shifted = sympy.cancel(shifted / (-BETA)**length)
    return sympy.expand(shifted)


def _variable_name(index: int) -> str:
    return f"a{index}" if index <= 9 else f"a[{index}]"


def _term_key(monom: Sequence[int]):
    return (sum(monom), tuple(-e for e in monom))


def kpoly_to_text(poly: KPolynomial) -> str:
    """
    Expanded integer form in ascending graded order: lowest total degree
    first, equal degrees by descending exponent vector, e.g. '1 - a1*a2'
    """
    terms = sorted((t for t in poly.terms() if t[1]), key=lambda term: _term_key(term[0]))
    if not terms:
        return "0"
    pieces: List[str] = []
    for monom, coeff in terms:
        factors = []
        for index, exponent in enumerate(monom, 1):
            if exponent == 1:
                factors.append(_variable_name(index))
            elif exponent > 1:
                factors.append(f"{_variable_name(index)}^{exponent}")
        value = int(coeff)
        body = "*".join(factors)
        if not body:
            text = str(abs(value))
        elif abs(value) == 1:
            text = body
        else:
            text = f"{abs(value)}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if value < 0 else text)
        else:
            pieces.append(f"- {text}" if value < 0 else f"+ {text}")
    return " ".join(pieces)


def kpoly_to_json(poly: KPolynomial) -> Dict[str, object]:
    "Number of variables and [coefficient, exponents] terms in text order"
    terms = sorted((t for t in poly.terms() if t[1]), key=lambda term: _term_key(term[0]))
    return {
        "variables": len(poly.gens),
        "terms": [[int(coeff), list(monom)] for monom, coeff in terms],
    }


def kpoly_from_json(data: Dict[str, object]) -> KPolynomial:
    "Inverse of kpoly_to_json"
    count = int(data["variables"])  # type: ignore
    terms = {tuple(monom): coeff for coeff, monom in data["terms"]}  # type: ignore
    if not terms:
        return sympy.Poly(0, *grading_symbols(count), domain="ZZ")
    return sympy.Poly.from_dict(terms, *grading_symbols(count), domain="ZZ")
