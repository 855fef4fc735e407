# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Generator families of skew-symmetric and classical matrix Schubert ideals:
Pfaffian generators, antidiagonal monomial generators, block Pfaffians
f_AB and g_AB, and the untwisting of index pairs
"""

import itertools
import logging
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from pfaffschub.coxeter import (Cell, Permutation, RankTable, essential_set,
                                fpf_involutions_standardized, in_window, rank_table,
                                ss_rothe_diagram, unstandardize)
from pfaffschub.errors import PermutationError, RankTableError, UsageError
from pfaffschub.groebner import MonomialIdeal, intersect_all
from pfaffschub.polyring import (GENERAL, SKEW, Monomial, Polynomial, REVLEX, TermOrder,
                                 determinant, pfaffian)

log = logging.getLogger(__name__)

IndexSet = Tuple[int, ...]


class Provenance(NamedTuple):
    """Data that reproduces one generator"""
    kind: str
    cell: Optional[Cell]
    rows: IndexSet
    cols: IndexSet

    def to_json(self) -> Dict[str, object]:
        "Serialize for GeneratorSet.to_json"
        return {
            "kind": self.kind,
            "cell": list(self.cell) if self.cell else None,
            "rows": list(self.rows),
            "cols": list(self.cols),
        }


class GeneratorSet:
    """Generators of an ideal plus where each of them came from"""

    def __init__(self, context: Dict[str, object], generators: Sequence[Polynomial],
                 provenance: Sequence[Provenance]):
        if len(generators) != len(provenance):
            raise UsageError("Every generator needs a provenance record")
        self.context = context
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self.provenance: Tuple[Provenance, ...] = tuple(provenance)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def rebuild(self, pos: int) -> Polynomial:
        "Recompute generator pos from its provenance"
        record = self.provenance[pos]
        if record.kind == "pfaffian":
            return skew_pfaffian(record.rows)
        if record.kind == "f_AB":
            return f_AB(record.rows, record.cols)
        if record.kind == "minor":
            return minor(record.rows, record.cols)
        raise UsageError(f"Unknown provenance kind '{record.kind}'")

    def to_json(self, order: TermOrder = REVLEX) -> Dict[str, object]:
        "Serialize as {context, generators, provenance}"
        return {
            "context": self.context,
            "generators": [g.to_text(order) for g in self.generators],
            "provenance": [p.to_json() for p in self.provenance],
        }


def _sorted_set(values: Iterable[int]) -> IndexSet:
    result = tuple(sorted(set(values)))
    if any(x < 1 for x in result):
        raise UsageError(f"Index set {result} contains an entry below 1")
    return result


def odot(rows: Iterable[int], cols: Iterable[int]) -> List[Cell]:
    "A ⊙ B: A ascending matched against B descending"
    a = _sorted_set(rows)
    b = _sorted_set(cols)
    if len(a) != len(b):
        raise UsageError(f"A ⊙ B needs sets of equal size, got {a} and {b}")
    return list(zip(a, reversed(b)))


def u_AB(rows: Iterable[int], cols: Iterable[int]) -> Monomial:
    "Antidiagonal monomial of the rows x cols submatrix of U"
    return Monomial.of(*odot(rows, cols))


def antidiagonal_monomial(rows: Iterable[int], cols: Iterable[int]) -> Monomial:
    "Same as u_AB"
    return u_AB(rows, cols)


def u_ss_AB(rows: Iterable[int], cols: Iterable[int]) -> Optional[Monomial]:
    "Skew antidiagonal monomial, None when A ⊙ B meets the diagonal"
    pairs = odot(rows, cols)
    if any(a == b for a, b in pairs):
        return None
    return Monomial.of(*sorted(set((max(a, b), min(a, b)) for a, b in pairs)))


def epsilon(whole: Iterable[int], part: Iterable[int]) -> int:
    "Sign of the permutation sorting T into sort(T minus S) followed by sort(S)"
    t = _sorted_set(whole)
    s = _sorted_set(part)
    if not set(s).issubset(t):
        raise UsageError(f"{s} is not a subset of {t}")
    rest = [x for x in t if x not in s]
    inversions = sum(1 for x in rest for y in s if x > y)
    return -1 if inversions % 2 else 1


def ominus(rows: Iterable[int], cols: Iterable[int]) -> IndexSet:
    "A ⊖ B: drop a when both (a,b) and (b,a) lie in A ⊙ B"
    pairs = odot(rows, cols)
    present = set(pairs)
    return tuple(a for a, b in pairs if (b, a) not in present)


def uss_entry(i: int, j: int) -> Polynomial:
    "Entry (i,j) of the generic skew-symmetric matrix"
    if i > j:
        return Polynomial.variable(i, j, SKEW)
    if i < j:
        return -Polynomial.variable(j, i, SKEW)
    return Polynomial.zero(SKEW)


def skew_pfaffian(indices: Iterable[int]) -> Polynomial:
    "pf(U^ss_RR)"
    r = _sorted_set(indices)
    return pfaffian([[uss_entry(i, j) for j in r] for i in r])


def minor(rows: Iterable[int], cols: Iterable[int]) -> Polynomial:
    "det(U_AB) in the general variables"
    a = _sorted_set(rows)
    b = _sorted_set(cols)
    if len(a) != len(b):
        raise UsageError(f"Minor needs as many rows as columns, got {a} and {b}")
    return determinant([[Polynomial.variable(i, j, GENERAL) for j in b] for i in a])


def g_AB(rows: Iterable[int], cols: Iterable[int]) -> Polynomial:
    """
    Pfaffian of the block matrix [[U^ss_BB, U^ss_BA], [U^ss_AB, 0]] with the
    indices of B first and those of A after them, both ascending
    """
    a = _sorted_set(rows)
    b = _sorted_set(cols)
    if len(a) > len(b):
        raise UsageError(f"g_AB needs |A| <= |B|, got {a} and {b}")
    labels = [(x, False) for x in b] + [(x, True) for x in a]
    matrix = [[Polynomial.zero(SKEW) if in_a and in_b else uss_entry(x, y)
               for y, in_b in labels] for x, in_a in labels]
    return pfaffian(matrix)


def f_AB(rows: Iterable[int], cols: Iterable[int]) -> Polynomial:
    "f_AB = g(A ⊖ B, B)"
    return g_AB(ominus(rows, cols), cols)


def is_untwisted(rows: Iterable[int], cols: Iterable[int]) -> bool:
    "No i < j with b_i > a_j > a_i > b_j (A ascending, B descending)"
    a = _sorted_set(rows)
    b = tuple(reversed(_sorted_set(cols)))
    if len(a) != len(b):
        raise UsageError(f"Untwistedness needs sets of equal size, got {a} and {b}")
    return not any(b[i] > a[j] > a[i] > b[j] for i, j in itertools.combinations(range(len(a)), 2))


def _untwist_words(top: List[int], bottom: List[int]) -> Tuple[List[int], List[int]]:
    # top is increasing and bottom decreasing
    size = len(top)
    if size < 2 or bottom[0] < top[1]:
        return top, bottom
    i = max(k for k in range(1, size + 1) if bottom[0] >= top[k - 1])
    if top[0] < bottom[i - 1]:
        new_top, new_bottom = list(top), list(bottom)
    else:
        new_top = list(reversed(bottom[:i])) + top[i:]
        new_bottom = list(reversed(top[:i])) + bottom[i:]
    inner_top, inner_bottom = _untwist_words(new_top[1:i], new_bottom[1:i])
    return ([new_top[0]] + inner_top + new_top[i:], [new_bottom[0]] + inner_bottom + new_bottom[i:])


def untwist(rows: Iterable[int], cols: Iterable[int]) -> Tuple[IndexSet, IndexSet]:
    """
    Return an untwisted pair equivalent to (A, B) under the swap relation,
    with the same skew antidiagonal monomial
    """
    a = _sorted_set(rows)
    b = _sorted_set(cols)
    if len(a) != len(b):
        raise UsageError(f"Untwisting needs sets of equal size, got {a} and {b}")
    top, bottom = _untwist_words(list(a), list(reversed(b)))
    return tuple(top), tuple(sorted(bottom))


def _check_standardized(z: Permutation, n: int):
    try:
        unstandardize(z, n)
    except PermutationError as err:
        raise PermutationError(f"{z} is not an element of FPF_{n}(I_{n})") from err


def ssi_generators(z: Permutation, n: int, essential_only: bool = False) -> GeneratorSet:
    """
    Pfaffians pf(U^ss_RR) over nonempty even R ⊆ [i] with |R ∩ [j]| > r_z(i,j)
    for some i >= j, each R once. With essential_only the cells (i,j) are
    restricted to Ess(D^ss(z)).
    """
    _check_standardized(z, n)
    table = rank_table(z, n, n)
    if essential_only:
        cells = list(essential_set(ss_rothe_diagram(z)))
    else:
        cells = [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    found: Dict[IndexSet, Cell] = {}
    for i, j in cells:
        bound = table(i, j)
        for size in range(2, i + 1, 2):
            for subset in itertools.combinations(range(1, i + 1), size):
                if subset not in found and sum(1 for x in subset if x <= j) > bound:
                    found[subset] = (i, j)
    keys = sorted(found, key=lambda r: (len(r), r))
    generators = [skew_pfaffian(r) for r in keys]
    provenance = [Provenance("pfaffian", found[r], r, r) for r in keys]
    log.debug("I^ss for %s: %d Pfaffian generators", z, len(generators))
    context = {"kind": "ssi", "n": n, "z": str(z), "essential_only": essential_only}
    return GeneratorSet(context, generators, provenance)


def _symmetric_table(source: Union[Permutation, RankTable], n: Optional[int]) -> RankTable:
    if isinstance(source, Permutation):
        if n is None:
            raise UsageError("A window n is needed to build J^ss from an involution")
        _check_standardized(source, n)
        return rank_table(source, n, n)
    if not source.is_symmetric():
        raise RankTableError("J^ss needs a symmetric rank table", "symmetric")
    return source


def ssj_generators(source: Union[Permutation, RankTable], n: Optional[int] = None) -> MonomialIdeal:
    "J^ss: the ideal of all u^ss_AB with (A,B) of size r(i,j)+1 inside [i]x[j], i >= j"
    table = _symmetric_table(source, n)
    size = table.n
    gens = []
    for i in range(1, size + 1):
        for j in range(1, i + 1):
            q = table(i, j) + 1
            if q > j:
                continue
            for a in itertools.combinations(range(1, i + 1), q):
                for b in itertools.combinations(range(1, j + 1), q):
                    mono = u_ss_AB(a, b)
                    if mono is not None:
                        gens.append(mono)
    return MonomialIdeal(gens, SKEW)


def groebner_generators_ss(z: Permutation, n: int) -> GeneratorSet:
    "All nonzero f_AB over untwisted (A,B) ⊆ [i]x[j] of size r_z(i,j)+1, i >= j"
    _check_standardized(z, n)
    table = rank_table(z, n, n)
    found: Dict[Tuple[IndexSet, IndexSet], Tuple[Cell, IndexSet, IndexSet]] = {}
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            q = table(i, j) + 1
            if q > j:
                continue
            for a in itertools.combinations(range(1, i + 1), q):
                for b in itertools.combinations(range(1, j + 1), q):
                    if not is_untwisted(a, b):
                        continue
                    key = (ominus(a, b), b)
                    if key not in found and (len(key[0]) + len(b)) % 2 == 0:
                        found[key] = ((i, j), a, b)
    generators = []
    provenance = []
    for key in sorted(found, key=lambda k: (len(k[0]) + len(k[1]), k)):
        cell, a, b = found[key]
        poly = f_AB(a, b)
        if poly:
            generators.append(poly)
            provenance.append(Provenance("f_AB", cell, a, b))
    context = {"kind": "groebner-ss", "n": n, "z": str(z)}
    return GeneratorSet(context, generators, provenance)


def classical_generators(w: Permutation, m: int, n: int) -> Tuple[GeneratorSet, MonomialIdeal]:
    "I_w by minors of size r_w(i,j)+1 inside [i]x[j], and J_w by their antidiagonals"
    if w.fpf or not in_window(w, m, n):
        raise PermutationError(f"{w} is not an element of S^({m},{n})")
    table = rank_table(w, m, n)
    found: Dict[Tuple[IndexSet, IndexSet], Cell] = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            q = table(i, j) + 1
            if q > min(i, j):
                continue
            for a in itertools.combinations(range(1, i + 1), q):
                for b in itertools.combinations(range(1, j + 1), q):
                    found.setdefault((a, b), (i, j))
    keys = sorted(found, key=lambda k: (len(k[0]), k))
    generators = [minor(a, b) for a, b in keys]
    provenance = [Provenance("minor", found[(a, b)], a, b) for a, b in keys]
    context = {"kind": "classical", "m": m, "n": n, "w": " ".join(map(str, w.one_line()))}
    monomials = MonomialIdeal((u_AB(a, b) for a, b in keys), GENERAL)
    return GeneratorSet(context, generators, provenance), monomials


def corner_rank_table(p: int, q: int, n: int) -> RankTable:
    "Table vanishing on [p]x[q] and [q]x[p] and equal to n elsewhere in [n]x[n]"
    rows = [[0 if (i <= p and j <= q) or (i <= q and j <= p) else n
             for j in range(1, n + 1)] for i in range(1, n + 1)]
    return RankTable.from_rows(rows)


def bruhat_minimal_below(table: RankTable, n: int) -> List[Permutation]:
    "Bruhat-minimal z ∈ FPF_n(I_n) with r_z <= r on [n]x[n]"
    window = table.restrict(n, n)
    candidates = [(z, rank_table(z, n, n)) for z in fpf_involutions_standardized(n)]
    candidates = [(z, r) for z, r in candidates if r.dominated_by(window)]
    return sorted(z for z, r in candidates
                  if not any(u != z and r.dominated_by(s) for u, s in candidates))


def bruhat_minimal_intersection_check(table: RankTable, n: int) -> bool:
    "J^ss_r equals the intersection of J^ss_z over Bruhat-minimal z with r_z <= r"
    minimal = bruhat_minimal_below(table, n)
    intersection = intersect_all([ssj_generators(z, n) for z in minimal])
    return intersection == ssj_generators(table.restrict(n, n))
