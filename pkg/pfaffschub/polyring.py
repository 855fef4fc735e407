# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Exact sparse polynomials in the indeterminates u_ij with rational
coefficients, term orders, determinants and Pfaffians
"""

import re
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from pfaffschub.errors import PolynomialError, UsageError

Variable = Tuple[int, int]

GENERAL = "general"
SKEW = "skew"
SPACES = (GENERAL, SKEW)


def lockstep(xs: Iterator, ys: Iterator, default) -> Iterator:
    """
    Merge two sorted (key, value) streams, yielding (key, x_value, y_value)
    with default for missing sides
    """
    terminal = (None, default)
    x = next(xs, terminal)
    y = next(ys, terminal)
    while x[0] is not None and y[0] is not None:
        if x[0] < y[0]:
            yield x[0], x[1], default
            x = next(xs, terminal)
        elif y[0] < x[0]:
            yield y[0], default, y[1]
            y = next(ys, terminal)
        else:
            yield x[0], x[1], y[1]
            x = next(xs, terminal)
            y = next(ys, terminal)
    while x[0] is not None:
        yield x[0], x[1], default
        x = next(xs, terminal)
    while y[0] is not None:
        yield y[0], default, y[1]
        y = next(ys, terminal)


@total_ordering
class Monomial:
    """
    Product of variables u_ij with positive exponents, stored as a tuple of
    ((i, j), exponent) sorted by variable. Python ordering of monomials is
    a plain structural order used only for deterministic sorting, term
    orders live in TermOrder.
    """

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Iterable[Tuple[Variable, int]] = ()):
        merged: Dict[Variable, int] = {}
        for var, exp in exps:
            if exp < 0:
                raise PolynomialError(f"Negative exponent {exp} for u{var}")
            if exp:
                key = (int(var[0]), int(var[1]))
                merged[key] = merged.get(key, 0) + exp
        self.exps: Tuple[Tuple[Variable, int], ...] = tuple(sorted(merged.items()))
        self._hash = hash(self.exps)

    @classmethod
    def of(cls, *variables: Variable) -> "Monomial":
        "Product of the given variables, repeated ones raising the exponent"
        return cls((v, 1) for v in variables)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, Monomial):
            return self.exps == other.exps
        return NotImplemented

    def __lt__(self, other: "Monomial") -> bool:
        return (self.degree, self.exps) < (other.degree, other.exps)

    @property
    def degree(self) -> int:
        "Total degree"
        return sum(exp for _, exp in self.exps)

    def variables(self) -> Tuple[Variable, ...]:
        "Variables dividing the monomial, ascending"
        return tuple(var for var, _ in self.exps)

    def exponent(self, var: Variable) -> int:
        "Exponent of a single variable"
        for other, exp in self.exps:
            if other == var:
                return exp
        return 0

    def common(self, other: "Monomial") -> Iterator:
        "Walk both exponent vectors side by side"
        return lockstep(iter(self.exps), iter(other.exps), 0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial((x, ei + ej) for x, ei, ej in self.common(other))

    def divides(self, other: "Monomial") -> bool:
        "Check self | other"
        return all(ei <= ej for _, ei, ej in self.common(other))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise PolynomialError(f"{other} does not divide {self}")
        return Monomial((x, ei - ej) for x, ei, ej in self.common(other))

    def lcm(self, other: "Monomial") -> "Monomial":
        "Least common multiple"
        return Monomial((x, max(ei, ej)) for x, ei, ej in self.common(other))

    def gcd(self, other: "Monomial") -> "Monomial":
        "Greatest common divisor"
        return Monomial((x, min(ei, ej)) for x, ei, ej in self.common(other))

    def is_coprime(self, other: "Monomial") -> bool:
        "Check that no variable divides both"
        return all(not (ei and ej) for _, ei, ej in self.common(other))

    def is_squarefree(self) -> bool:
        "All exponents equal to one"
        return all(exp == 1 for _, exp in self.exps)

    def radical(self) -> "Monomial":
        "Product of the distinct variables"
        return Monomial((var, 1) for var, _ in self.exps)

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(f"u[{i},{j}]^{e}" if e > 1 else f"u[{i},{j}]" for (i, j), e in self.exps)

    def to_json(self) -> List[List[int]]:
        "Serialize as [[i, j, e], ...]"
        return [[i, j, e] for (i, j), e in self.exps]


ONE = Monomial()


class TermOrder(NamedTuple):
    """Monomial order given by a sort key: larger key, larger monomial"""
    name: str
    key: Callable[[Monomial], tuple]

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        "Return -1, 0 or 1 as m1 is smaller, equal or larger"
        k1 = self.key(m1)
        k2 = self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        "Largest monomial of a non-empty collection"
        return max(monomials, key=self.key)

    def sorted(self, monomials: Iterable[Monomial], descending: bool = False) -> List[Monomial]:
        "Sort monomials by this order"
        return sorted(monomials, key=self.key, reverse=descending)


def _revlex_key(mono: Monomial) -> tuple:
    # Variables are scanned from the largest one down; a larger exponent there means smaller
    return (mono.degree, tuple(((-i, -j), -e) for (i, j), e in reversed(mono.exps)))


def _antidiag_lex_key(mono: Monomial) -> tuple:
    # Lex order with u[1,n] the largest variable, then rows downwards and columns leftwards
    ordered = sorted(mono.exps, key=lambda t: (t[0][0], -t[0][1]))
    return tuple(((-i, j), e) for (i, j), e in ordered)


REVLEX = TermOrder("revlex", _revlex_key)
ANTIDIAG_LEX = TermOrder("antidiag-lex", _antidiag_lex_key)

TERM_ORDERS = {order.name: order for order in (REVLEX, ANTIDIAG_LEX)}


def get_order(name: str) -> TermOrder:
    "Look up a term order by name"
    try:
        return TERM_ORDERS[name]
    except KeyError:
        raise UsageError(f"Unknown term order '{name}', expected one of: " +
                         ", ".join(TERM_ORDERS)) from None


def compare(m1: Monomial, m2: Monomial, order: TermOrder = REVLEX) -> int:
    "Three-way comparison of two monomials under a term order"
    return order.compare(m1, m2)


def _check_space(var: Variable, space: str):
    if space not in SPACES:
        raise PolynomialError(f"Unknown variable space '{space}'")
    i, j = var
    if i < 1 or j < 1:
        raise PolynomialError(f"Variable u[{i},{j}] has an index below 1")
    if space == SKEW and i <= j:
        raise PolynomialError(f"Variable u[{i},{j}] is not in the skew space (needs i > j)")


class Polynomial:
    """
    Map from monomials to nonzero rational coefficients. Every polynomial
    carries a variable space marker; skew polynomials only use u_ij with i > j.
    """

    __slots__ = ("terms", "space")

    def __init__(self, terms: Optional[Dict[Monomial, object]] = None, space: str = GENERAL,
                 check: bool = True):
        self.space = space
        if not check:
            self.terms: Dict[Monomial, Fraction] = terms or {}  # type: ignore
            return
        if space not in SPACES:
            raise PolynomialError(f"Unknown variable space '{space}'")
        self.terms = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                for var in mono.variables():
                    _check_space(var, space)
                self.terms[mono] = coeff

    @classmethod
    def variable(cls, i: int, j: int, space: str = GENERAL) -> "Polynomial":
        "The polynomial u_ij"
        return cls({Monomial.of((i, j)): 1}, space)

    @classmethod
    def constant(cls, value, space: str = GENERAL) -> "Polynomial":
        "A constant polynomial"
        return cls({ONE: value}, space)

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1, space: str = GENERAL) -> "Polynomial":
        "A single term"
        return cls({mono: coeff}, space)

    @classmethod
    def zero(cls, space: str = GENERAL) -> "Polynomial":
        "The zero polynomial"
        return cls({}, space, check=False)

    def _same_space(self, other: "Polynomial"):
        if self.space != other.space:
            raise PolynomialError(f"Cannot mix {self.space} and {other.space} polynomials")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.space == other.space and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.space, frozenset(self.terms.items())))

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, self.space, check=False)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_space(other)
        result = dict(self.terms)
        for mono, coeff in other.terms.items():
            value = result.get(mono, 0) + coeff
            if value:
                result[mono] = value
            else:
                result.pop(mono, None)
        return Polynomial(result, self.space, check=False)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._same_space(other)
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                value = result.get(mono, 0) + c1 * c2
                if value:
                    result[mono] = value
                else:
                    result.pop(mono, None)
        return Polynomial(result, self.space, check=False)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(1, self.space)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, coeff) -> "Polynomial":
        "Multiply by a rational constant"
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.space)
        return Polynomial({m: c * coeff for m, c in self.terms.items()}, self.space, check=False)

    def mul_term(self, coeff, mono: Monomial) -> "Polynomial":
        "Multiply by the single term coeff*mono"
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.space)
        return Polynomial({m * mono: c * coeff
                           for m, c in self.terms.items()}, self.space, check=False)

    def monomials(self) -> List[Monomial]:
        "Support of the polynomial"
        return list(self.terms)

    def variables(self) -> List[Variable]:
        "All variables occurring in some term, ascending"
        return sorted(set(v for m in self.terms for v in m.variables()))

    @property
    def degree(self) -> int:
        "Maximal total degree of a term, -1 for zero"
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        "All terms share one degree"
        return len(set(m.degree for m in self.terms)) <= 1

    def leading(self, order: TermOrder = REVLEX) -> Tuple[Monomial, Fraction]:
        "Initial monomial and its coefficient; raises on zero"
        if not self.terms:
            raise PolynomialError("The zero polynomial has no leading term")
        mono = order.max(self.terms)
        return mono, self.terms[mono]

    def initial_term(self, order: TermOrder = REVLEX) -> "Polynomial":
        "Largest term under the order, zero for the zero polynomial"
        if not self.terms:
            return Polynomial.zero(self.space)
        mono, coeff = self.leading(order)
        return Polynomial({mono: coeff}, self.space, check=False)

    def monic(self, order: TermOrder = REVLEX) -> "Polynomial":
        "Scale so that the leading coefficient is one"
        if not self.terms:
            return self
        _, coeff = self.leading(order)
        return self.scale(1 / coeff)

    def in_space(self, space: str) -> "Polynomial":
        "Reinterpret in another variable space, validating variables"
        return Polynomial(self.terms, space)

    def to_text(self, order: TermOrder = REVLEX) -> str:
        "Render terms in descending term order"
        if not self.terms:
            return "0"
        parts = []
        for mono in order.sorted(self.terms, descending=True):
            coeff = self.terms[mono]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if mono == ONE:
                body = str(magnitude)
            elif magnitude == 1:
                body = str(mono)
            else:
                body = f"{magnitude}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self, order: TermOrder = REVLEX) -> List[Dict[str, object]]:
        "Serialize terms in descending term order"
        return [{
            "coeff": str(self.terms[mono]),
            "vars": mono.to_json()
        } for mono in order.sorted(self.terms, descending=True)]

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, space={self.space!r})"

    def __str__(self) -> str:
        return self.to_text()


VAR_RE = re.compile(r"u\[\s*(\d+)\s*,\s*(\d+)\s*\](?:\s*\^\s*(\d+))?$")
COEFF_RE = re.compile(r"(\d+)(?:\s*/\s*(\d+))?$")


def parse_polynomial(text: str, space: str = GENERAL) -> Polynomial:
    "Parse the text produced by Polynomial.to_text"
    stripped = text.strip()
    if not stripped:
        raise PolynomialError("Empty polynomial text")
    if stripped[0] not in "+-":
        stripped = "+" + stripped
    chunks = re.findall(r"([+-])([^+-]*)", stripped)
    if "".join(sign + body for sign, body in chunks) != stripped:
        raise PolynomialError(f"Malformed polynomial '{text}'")
    result = Polynomial.zero(space)
    for sign, body in chunks:
        if not body.strip():
            raise PolynomialError(f"Malformed polynomial '{text}': dangling sign")
        coeff = Fraction(-1 if sign == "-" else 1)
        exps: List[Tuple[Variable, int]] = []
        for factor in body.split("*"):
            factor = factor.strip()
            var_match = VAR_RE.match(factor)
            coeff_match = COEFF_RE.match(factor)
            if var_match:
                exps.append(((int(var_match.group(1)), int(var_match.group(2))),
                             int(var_match.group(3) or 1)))
            elif coeff_match:
                coeff *= Fraction(int(coeff_match.group(1)), int(coeff_match.group(2) or 1))
            else:
                raise PolynomialError(f"Malformed factor '{factor}' in '{text}'")
        result = result + Polynomial({Monomial(exps): coeff}, space)
    return result


def polynomial_from_json(data: Sequence[Dict[str, object]], space: str = GENERAL) -> Polynomial:
    "Inverse of Polynomial.to_json"
    terms: Dict[Monomial, Fraction] = {}
    for term in data:
        mono = Monomial(((i, j), e) for i, j, e in term["vars"])  # type: ignore
        terms[mono] = terms.get(mono, 0) + Fraction(term["coeff"])  # type: ignore
    return Polynomial(terms, space)


Matrix = List[List[Polynomial]]


def generic_matrices(n: int) -> Tuple[Matrix, Matrix]:
    """
    Return (U, U^ss): the generic n x n matrix of general variables and the
    generic skew-symmetric matrix with U^ss_ij = u_ij below the diagonal,
    -u_ji above it and zero on it. Indices are 0-based in the lists.
    """
    general = [[Polynomial.variable(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    skew = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i > j:
                row.append(Polynomial.variable(i, j, SKEW))
            elif i < j:
                row.append(-Polynomial.variable(j, i, SKEW))
            else:
                row.append(Polynomial.zero(SKEW))
        skew.append(row)
    return general, skew


def submatrix(matrix: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    "Extract rows and columns given as 1-based index lists"
    return [[matrix[i - 1][j - 1] for j in cols] for i in rows]


def _matrix_space(matrix: Matrix) -> str:
    return matrix[0][0].space if matrix and matrix[0] else GENERAL


def determinant(matrix: Matrix) -> Polynomial:
    "Cofactor expansion along the first remaining row, memoized on column sets"
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise PolynomialError("Determinant needs a square matrix")
    space = _matrix_space(matrix)
    if size == 0:
        return Polynomial.constant(1, space)
    memo: Dict[Tuple[int, ...], Polynomial] = {}

    def expand(cols: Tuple[int, ...]) -> Polynomial:
        if not cols:
            return Polynomial.constant(1, space)
        if cols in memo:
            return memo[cols]
        row = matrix[size - len(cols)]
        total = Polynomial.zero(space)
        for pos, col in enumerate(cols):
            entry = row[col]
            if not entry:
                continue
            term = entry * expand(cols[:pos] + cols[pos + 1:])
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return expand(tuple(range(size)))


def all_pairings(items: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    "Yield all partitions of items into pairs"
    items = list(items)
    if not items:
        yield []
        return
    first = items.pop(0)
    for pos, item in enumerate(items):
        for pairing in all_pairings(items[:pos] + items[pos + 1:]):
            yield [(first, item)] + pairing


def crossings(pairing: Sequence[Tuple[int, int]]) -> int:
    "Number of crossing pairs a < c < b < d among arcs (a,b), (c,d)"
    arcs = [tuple(sorted(arc)) for arc in pairing]
    count = 0
    for pos, (a, b) in enumerate(arcs):
        for c, d in arcs[pos + 1:]:
            if a < c < b < d or c < a < d < b:
                count += 1
    return count


def _check_skew(matrix: Matrix):
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise PolynomialError("Pfaffian needs a square matrix")
    for i in range(size):
        if matrix[i][i]:
            raise PolynomialError("Pfaffian needs a zero diagonal")
        for j in range(i):
            if matrix[i][j] != -matrix[j][i]:
                raise PolynomialError(f"Matrix is not skew-symmetric at ({i + 1},{j + 1})")


MATCHING_SUM_LIMIT = 6


def pfaffian(matrix: Matrix) -> Polynomial:
    """
    Pfaffian of a skew-symmetric matrix: the signed sum over perfect
    matchings for small sizes, expansion along the first row otherwise.
    Odd sizes give zero.
    """
    _check_skew(matrix)
    size = len(matrix)
    space = _matrix_space(matrix)
    if size % 2:
        return Polynomial.zero(space)
    if size <= MATCHING_SUM_LIMIT:
        total = Polynomial.zero(space)
        for pairing in all_pairings(range(size)):
            term = Polynomial.constant(-1 if crossings(pairing) % 2 else 1, space)
            for a, b in pairing:
                term = term * matrix[a][b]
                if not term:
                    break
            total = total + term
        return total

    memo: Dict[Tuple[int, ...], Polynomial] = {}

    def expand(indices: Tuple[int, ...]) -> Polynomial:
        if not indices:
            return Polynomial.constant(1, space)
        if indices in memo:
            return memo[indices]
        first = indices[0]
        total = Polynomial.zero(space)
        for pos in range(1, len(indices)):
            entry = matrix[first][indices[pos]]
            if not entry:
                continue
            term = entry * expand(indices[1:pos] + indices[pos + 1:])
            total = total - term if pos % 2 == 0 else total + term
        memo[indices] = total
        return total

    return expand(tuple(range(size)))
