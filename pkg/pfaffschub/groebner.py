# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Buchberger engine, polynomial division, monomial ideals and multigraded
K-polynomials
"""

import itertools
import logging
import random
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

import sympy
from sympy.polys.matrices import DomainMatrix

from pfaffschub.errors import BudgetError, PolynomialError, UsageError
from pfaffschub.polyring import (GENERAL, ONE, REVLEX, SKEW, Monomial, Polynomial, TermOrder,
                                 Variable, get_order, parse_polynomial)

log = logging.getLogger(__name__)


class Budget(NamedTuple):
    """Resource caps; exceeding any of them raises BudgetError"""
    pairs: int = 200000
    reductions: int = 2000000
    hilbert_degree: int = 8


DEFAULT_BUDGET = Budget()


class MonomialIdeal:
    """
    Monomial ideal kept as its minimal generating set, sorted by degree and
    then structurally. No generators means the zero ideal, the single
    generator 1 the unit ideal.
    """

    __slots__ = ("generators", "space")

    def __init__(self, generators: Iterable[Monomial] = (), space: str = SKEW):
        minimal: List[Monomial] = []
        for mono in sorted(set(generators)):
            if not any(kept.divides(mono) for kept in minimal):
                minimal.append(mono)
        self.generators: Tuple[Monomial, ...] = tuple(minimal)
        self.space = space

    @classmethod
    def from_cells(cls, cells: Iterable[Variable], space: str = SKEW) -> "MonomialIdeal":
        "The ideal (u_ij : (i,j) in cells)"
        return cls((Monomial.of(cell) for cell in cells), space)

    @classmethod
    def unit(cls, space: str = SKEW) -> "MonomialIdeal":
        "The whole ring"
        return cls((ONE, ), space)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        if isinstance(other, MonomialIdeal):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return "MonomialIdeal(" + ", ".join(str(m) for m in self.generators) + ")"

    def is_unit(self) -> bool:
        "Check whether 1 belongs to the ideal"
        return self.generators == (ONE, )

    def is_variable_ideal(self) -> bool:
        "All minimal generators are single variables"
        return all(m.degree == 1 for m in self.generators)

    def contains(self, mono: Monomial) -> bool:
        "Membership of a monomial"
        return any(g.divides(mono) for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        "Check other ⊆ self"
        return all(self.contains(m) for m in other.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.generators + other.generators, self.space)

    def add_monomial(self, mono: Monomial) -> "MonomialIdeal":
        "I + (m)"
        return MonomialIdeal(self.generators + (mono, ), self.space)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        "Intersection through pairwise least common multiples"
        return MonomialIdeal((a.lcm(b) for a in self.generators for b in other.generators),
                             self.space)

    def colon(self, mono: Monomial) -> "MonomialIdeal":
        "I : m, generated by g / gcd(g, m)"
        return MonomialIdeal((g / g.gcd(mono) for g in self.generators), self.space)

    def times(self, mono: Monomial) -> "MonomialIdeal":
        "m * I"
        return MonomialIdeal((g * mono for g in self.generators), self.space)

    def variables(self) -> List[Variable]:
        "Variables occurring in some generator"
        return sorted(set(v for m in self.generators for v in m.variables()))

    def to_text(self) -> List[str]:
        "Generators as polyring text"
        return [str(m) for m in self.generators]

    def to_json(self) -> List[List[List[int]]]:
        "Generators as [[i, j, e], ...] lists"
        return [m.to_json() for m in self.generators]


def monomial_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    "I + J"
    return first + second


def monomial_intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    "I ∩ J"
    return first.intersect(second)


def monomial_equal(first: MonomialIdeal, second: MonomialIdeal) -> bool:
    "Equality of minimal generating sets"
    return first == second


def monomial_contains(ideal: MonomialIdeal, mono: Monomial) -> bool:
    "m ∈ I"
    return ideal.contains(mono)


def colon_monomial(ideal: MonomialIdeal, mono: Monomial) -> MonomialIdeal:
    "I : m"
    return ideal.colon(mono)


def monomial_ideal_of_cells(cells: Iterable[Variable], space: str = SKEW) -> MonomialIdeal:
    "(u_ij : (i,j) in cells)"
    return MonomialIdeal.from_cells(cells, space)


def intersect_all(ideals: Sequence[MonomialIdeal], space: str = SKEW) -> MonomialIdeal:
    "Intersection of several ideals folded smallest first; the empty intersection is the unit ideal"
    if not ideals:
        return MonomialIdeal.unit(space)
    ordered = sorted(ideals, key=len)
    result = ordered[0]
    for ideal in ordered[1:]:
        result = result.intersect(ideal)
    return result


def hilbert_lemma_holds(ideal: MonomialIdeal, mono: Monomial) -> bool:
    "Decide I ∩ (m) = m·I"
    principal = MonomialIdeal((mono, ), ideal.space)
    return ideal.intersect(principal) == ideal.times(mono)


def _tick(stats: Dict[str, int], key: str, limit: int, resource: str):
    stats[key] = stats.get(key, 0) + 1
    if stats[key] > limit:
        raise BudgetError(resource, limit)


def reduce(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder = REVLEX,
           budget: Budget = DEFAULT_BUDGET, stats: Optional[Dict[str, int]] = None) -> Polynomial:
    """
    Full multivariate division: return a remainder none of whose terms is
    divisible by an initial monomial of the divisors
    """
    if stats is None:
        stats = {}
    leads = [(g, ) + g.leading(order) for g in divisors if g]
    remainder: Dict[Monomial, Fraction] = {}
    current = f
    while current:
        mono, coeff = current.leading(order)
        for g, lead, lead_coeff in leads:
            if lead.divides(mono):
                current = current - g.mul_term(coeff / lead_coeff, mono / lead)
                _tick(stats, "reductions", budget.reductions, "reduction steps")
                break
        else:
            remainder[mono] = coeff
            current = current - Polynomial({mono: coeff}, current.space, check=False)
    return Polynomial(remainder, f.space, check=False)


def spoly(p1: Polynomial, p2: Polynomial, order: TermOrder = REVLEX) -> Polynomial:
    "S-polynomial of two nonzero polynomials"
    m1, c1 = p1.leading(order)
    m2, c2 = p2.leading(order)
    lcm = m1.lcm(m2)
    return p1.mul_term(1 / c1, lcm / m1) - p2.mul_term(1 / c2, lcm / m2)


class GroebnerBasis:
    """Reduced monic Gröbner basis together with its term order and run statistics"""

    def __init__(self, basis: Sequence[Polynomial], order: TermOrder = REVLEX,
                 reduced: bool = True, stats: Optional[Dict[str, int]] = None):
        self.basis: Tuple[Polynomial, ...] = tuple(basis)
        self.order = order
        self.reduced = reduced
        self.stats = dict(stats or {})

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if isinstance(other, GroebnerBasis):
            return self.order.name == other.order.name and set(self.basis) == set(other.basis)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order.name, frozenset(self.basis)))

    @property
    def space(self) -> str:
        "Variable space of the basis elements"
        return self.basis[0].space if self.basis else SKEW

    def initial_ideal(self) -> MonomialIdeal:
        "Ideal generated by the initial monomials"
        return MonomialIdeal((g.leading(self.order)[0] for g in self.basis), self.space)

    def reduce(self, f: Polynomial) -> Polynomial:
        "Normal form of f"
        return reduce(f, self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        "Ideal membership"
        return not self.reduce(f)

    def to_text(self) -> List[str]:
        "Basis elements as text, in descending order of their initial terms"
        return [g.to_text(self.order) for g in self.basis]

    def to_json(self) -> Dict[str, object]:
        "Serialize basis, order and statistics"
        return {
            "order": self.order.name,
            "space": self.space,
            "basis": self.to_text(),
            "initial_ideal": self.initial_ideal().to_text(),
            "stats": dict(sorted(self.stats.items())),
        }

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "GroebnerBasis":
        "Inverse of to_json; the initial ideal is recomputed"
        space = str(data.get("space", SKEW))
        basis = [parse_polynomial(text, space) for text in data["basis"]]  # type: ignore
        return cls(basis, get_order(str(data["order"])), True, data.get("stats"))  # type: ignore


def _interreduce(polys: List[Polynomial], order: TermOrder, budget: Budget,
                 stats: Dict[str, int]) -> List[Polynomial]:
    current = polys
    while True:
        result = []
        for pos, p in enumerate(current):
            r = reduce(p, current[:pos], order, budget, stats)
            if r:
                result.append(r.monic(order))
        if result == current:
            return result
        current = result


def buchberger(generators: Iterable[Polynomial], order: TermOrder = REVLEX,
               budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """
    Reduced Gröbner basis by Buchberger's algorithm with the normal pair
    selection strategy and the Gebauer-Möller pair criteria
    """
    stats: Dict[str, int] = {
        "pairs": 0,
        "coprime_skipped": 0,
        "chain_skipped": 0,
        "zero_reductions": 0,
        "reductions": 0
    }
    f = [g for g in generators if g]
    if not f:
        return GroebnerBasis([], order, True, stats)
    spaces = set(g.space for g in f)
    if len(spaces) > 1:
        raise PolynomialError("Generators mix variable spaces")

    f = _interreduce(f, order, budget, stats)
    lead = [p.leading(order)[0] for p in f]
    index: Dict[Polynomial, int] = {p: pos for pos, p in enumerate(f)}

    def add(p: Polynomial) -> int:
        if p not in index:
            index[p] = len(f)
            f.append(p)
            lead.append(p.leading(order)[0])
        return index[p]

    def update(basis: Set[int], pairs: Set[Tuple[int, int]], ih: int):
        mh = lead[ih]
        candidates = set(basis)
        kept: Set[Tuple[int, int]] = set()
        while candidates:
            ig = candidates.pop()
            lcm_hg = mh.lcm(lead[ig])

            def lcm_divides(ip: int) -> bool:
                return mh.lcm(lead[ip]).divides(lcm_hg)

            if mh.is_coprime(lead[ig]) or (not any(lcm_divides(ip) for ip in candidates) and
                                           not any(lcm_divides(pr[1]) for pr in kept)):
                kept.add((ih, ig))
            else:
                stats["chain_skipped"] += 1

        new_pairs: Set[Tuple[int, int]] = set()
        for ih2, ig in kept:
            if mh.is_coprime(lead[ig]):
                stats["coprime_skipped"] += 1
            else:
                new_pairs.add((ih2, ig))

        old_pairs: Set[Tuple[int, int]] = set()
        for ig1, ig2 in pairs:
            lcm12 = lead[ig1].lcm(lead[ig2])
            if not mh.divides(lcm12) or lead[ig1].lcm(mh) == lcm12 or lead[ig2].lcm(mh) == lcm12:
                old_pairs.add((ig1, ig2))
            else:
                stats["chain_skipped"] += 1
        old_pairs |= new_pairs
        if len(old_pairs) > budget.pairs:
            raise BudgetError("critical pair queue", budget.pairs)

        new_basis = set(ig for ig in basis if not mh.divides(lead[ig]))
        new_basis.add(ih)
        return new_basis, old_pairs

    def pair_key(pair: Tuple[int, int]):
        return (order.key(lead[pair[0]].lcm(lead[pair[1]])), pair)

    basis: Set[int] = set()
    pairs: Set[Tuple[int, int]] = set()
    for ih in sorted(range(len(f)), key=lambda pos: order.key(lead[pos])):
        basis, pairs = update(basis, pairs, ih)

    while pairs:
        pair = min(pairs, key=pair_key)
        pairs.remove(pair)
        stats["pairs"] += 1
        h = spoly(f[pair[0]], f[pair[1]], order)
        divisors = [f[ig] for ig in sorted(basis, key=lambda pos: order.key(lead[pos]))]
        h = reduce(h, divisors, order, budget, stats)
        if h:
            basis, pairs = update(basis, pairs, add(h.monic(order)))
        else:
            stats["zero_reductions"] += 1

    reduced = []
    for ig in sorted(basis):
        others = [f[pos] for pos in basis if pos != ig]
        r = reduce(f[ig], others, order, budget, stats)
        if r:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda p: order.key(p.leading(order)[0]), reverse=True)
    log.debug("Buchberger: %d generators, %d pairs, %d zero reductions, %d reduction steps",
              len(reduced), stats["pairs"], stats["zero_reductions"], stats["reductions"])
    return GroebnerBasis(reduced, order, True, stats)


def is_groebner_basis(polys: Sequence[Polynomial], order: TermOrder = REVLEX,
                      budget: Budget = DEFAULT_BUDGET) -> bool:
    "Buchberger criterion, skipping pairs with coprime initial monomials"
    nonzero = [p for p in polys if p]
    for p1, p2 in itertools.combinations(nonzero, 2):
        if p1.leading(order)[0].is_coprime(p2.leading(order)[0]):
            continue
        if reduce(spoly(p1, p2, order), nonzero, order, budget):
            return False
    return True


def ideal_membership(f: Polynomial, basis: GroebnerBasis) -> bool:
    "f ∈ I for I given by a Gröbner basis"
    return basis.contains(f)


def ideal_equal(first: Sequence[Polynomial], second: Sequence[Polynomial],
                order: TermOrder = REVLEX, budget: Budget = DEFAULT_BUDGET) -> bool:
    "Compare two ideals through their reduced Gröbner bases"
    return buchberger(first, order, budget) == buchberger(second, order, budget)


def initial_ideal(generators: Iterable[Polynomial], order: TermOrder = REVLEX,
                  budget: Budget = DEFAULT_BUDGET) -> MonomialIdeal:
    "init(I) through a reduced Gröbner basis"
    return buchberger(generators, order, budget).initial_ideal()


def grading_symbols(n: int) -> Tuple[sympy.Symbol, ...]:
    "The grading variables a1..an"
    return tuple(sympy.symbols(f"a1:{n + 1}"))


def _weight(var: Variable, symbols: Tuple[sympy.Symbol, ...]) -> sympy.Expr:
    i, j = var
    if max(i, j) > len(symbols):
        raise UsageError(f"Variable u[{i},{j}] lies outside the grading window a1..a{len(symbols)}")
    return symbols[i - 1] * symbols[j - 1]


def k_polynomial(ideal: MonomialIdeal, n: int, rng: Optional[random.Random] = None) -> sympy.Poly:
    """
    K-polynomial of R/I under deg u_ij = a_i a_j by pivot splitting
    K(I) = K(I + (u)) + a_i a_j K(I : u). The pivot is the smallest variable
    of a nonlinear generator, or a random one when rng is given.
    """
    symbols = grading_symbols(n)
    memo: Dict[Tuple[Monomial, ...], sympy.Poly] = {}

    def poly(expr) -> sympy.Poly:
        return sympy.Poly(expr, *symbols, domain="ZZ")

    def compute(current: MonomialIdeal) -> sympy.Poly:
        key = current.generators
        if key in memo:
            return memo[key]
        if current.is_unit():
            result = poly(0)
        elif current.is_variable_ideal():
            result = poly(1)
            for mono in current.generators:
                result = result * poly(1 - _weight(mono.variables()[0], symbols))
        else:
            pivots = sorted(set(v for m in current.generators if m.degree > 1
                                for v in m.variables()))
            pivot = rng.choice(pivots) if rng else pivots[0]
            u = Monomial.of(pivot)
            result = compute(current.add_monomial(u)) + \
                poly(_weight(pivot, symbols)) * compute(current.colon(u))
        memo[key] = result
        return result

    return compute(ideal)


def k_polynomial_inclusion_exclusion(cell_sets: Sequence[Iterable[Variable]], n: int,
                                     limit: int = 16) -> sympy.Poly:
    """
    K-polynomial of the intersection of the ideals (u_ij : (i,j) in D) over
    the given cell sets D, as the alternating sum over nonempty subfamilies
    """
    families = [frozenset(cells) for cells in cell_sets]
    if len(families) > limit:
        raise BudgetError("inclusion-exclusion families", limit)
    symbols = grading_symbols(n)
    total = sympy.Integer(0)
    for size in range(1, len(families) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(families, size):
            union = frozenset().union(*subset)
            term = sympy.Integer(1)
            for cell in union:
                term *= 1 - _weight(cell, symbols)
            total += sign * term
    return sympy.Poly(sympy.expand(total), *symbols, domain="ZZ")


def ring_variables(n: int, space: str = SKEW) -> List[Variable]:
    "All variables u_ij of the n x n window in the given space"
    if space == SKEW:
        return [(i, j) for i in range(1, n + 1) for j in range(1, i)]
    if space == GENERAL:
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    raise UsageError(f"Unknown variable space '{space}'")


def _monomials_of_degree(variables: Sequence[Variable], degree: int) -> List[Monomial]:
    if degree < 0:
        return []
    return [
        Monomial.of(*combo)
        for combo in itertools.combinations_with_replacement(variables, degree)
    ]


def graded_dimension(generators: Sequence[Polynomial], variables: Sequence[Variable],
                     degree: int) -> int:
    "dim_K of the degree part of the ideal spanned by homogeneous generators"
    rows: List[Dict[Monomial, Fraction]] = []
    for g in generators:
        if not g:
            continue
        if not g.is_homogeneous():
            raise PolynomialError(f"Generator {g} is not homogeneous")
        for mono in _monomials_of_degree(variables, degree - g.degree):
            rows.append(g.mul_term(1, mono).terms)
    if not rows:
        return 0
    columns = sorted(set(m for row in rows for m in row))
    position = {m: pos for pos, m in enumerate(columns)}
    dense = []
    for row in rows:
        values = [sympy.QQ(0)] * len(columns)
        for mono, coeff in row.items():
            values[position[mono]] = sympy.QQ(coeff.numerator, coeff.denominator)
        dense.append(values)
    return DomainMatrix(dense, (len(dense), len(columns)), sympy.QQ).rank()


def monomial_graded_dimension(ideal: MonomialIdeal, variables: Sequence[Variable],
                              degree: int) -> int:
    "Number of degree monomials in a monomial ideal"
    return sum(1 for m in _monomials_of_degree(variables, degree) if ideal.contains(m))


def hilbert_series_check(generators: Sequence[Polynomial], n: int, degree: int,
                         order: TermOrder = REVLEX, budget: Budget = DEFAULT_BUDGET) -> bool:
    """
    Compare the graded dimensions of I and init(I) in every degree up to the
    bound
    """
    if degree > budget.hilbert_degree:
        raise BudgetError("Hilbert series degree", budget.hilbert_degree)
    gens = [g for g in generators if g]
    space = gens[0].space if gens else SKEW
    variables = ring_variables(n, space)
    init = buchberger(gens, order, budget).initial_ideal()
    for d in range(degree + 1):
        ideal_dim = graded_dimension(gens, variables, d)
        init_dim = monomial_graded_dimension(init, variables, d)
        if ideal_dim != init_dim:
            log.info("Graded dimensions differ in degree %d: %d vs %d", d, ideal_dim, init_dim)
            return False
    return True
