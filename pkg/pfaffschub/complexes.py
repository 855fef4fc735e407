# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Simplicial complexes on sets of cells: fpf subword complexes, links and
deletions, vertex decompositions, Stanley-Reisner ideals and reduced Euler
characteristics
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from pfaffschub.coxeter import Cell, Diagram, Permutation, fpf_length, staircase
from pfaffschub.errors import UsageError
from pfaffschub.groebner import MonomialIdeal
from pfaffschub.pipedreams import enumerate_fp
from pfaffschub.polyring import GENERAL, SKEW, Monomial

log = logging.getLogger(__name__)

Face = FrozenSet[Cell]


def _maximal(sets: Iterable[Face]) -> FrozenSet[Face]:
    unique = sorted(set(sets), key=len, reverse=True)
    kept: List[Face] = []
    for candidate in unique:
        if not any(candidate < other for other in kept):
            kept.append(candidate)
    return frozenset(kept)


class SimplicialComplex:
    """
    Complex stored by its facets over an explicit vertex set. No facets at
    all is the empty complex; the single empty facet is the complex {∅}.
    Vertices need not be faces.
    """

    __slots__ = ("vertices", "facets")

    def __init__(self, facets: Iterable[Iterable[Cell]], vertices: Optional[Iterable[Cell]] = None):
        self.facets: FrozenSet[Face] = _maximal(frozenset(f) for f in facets)
        support = set(itertools.chain.from_iterable(self.facets))
        self.vertices = Diagram(vertices if vertices is not None else support)
        if not support.issubset(self.vertices.as_set()):
            raise UsageError("Facets use vertices outside the vertex set")

    @classmethod
    def simplex(cls, vertices: Iterable[Cell]) -> "SimplicialComplex":
        "The full simplex on the given vertices"
        diagram = Diagram(vertices)
        return cls([diagram.cells], diagram)

    def __eq__(self, other) -> bool:
        if isinstance(other, SimplicialComplex):
            return self.vertices == other.vertices and self.facets == other.facets
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.sorted_facets()}, vertices={list(self.vertices)})"

    def __contains__(self, face) -> bool:
        candidate = frozenset(face)
        return any(candidate <= facet for facet in self.facets)

    def is_empty(self) -> bool:
        "The complex without any face"
        return not self.facets

    def is_void_face(self) -> bool:
        "The complex {∅}"
        return self.facets == frozenset([frozenset()])

    def sorted_facets(self) -> List[Diagram]:
        "Facets as diagrams in a deterministic order"
        return sorted(Diagram(f) for f in self.facets)

    def faces(self) -> List[Diagram]:
        "Every face, the empty one included when the complex is not empty"
        found = set()
        for facet in self.facets:
            members = sorted(facet)
            for size in range(len(members) + 1):
                found.update(frozenset(c) for c in itertools.combinations(members, size))
        return sorted(Diagram(f) for f in found)

    def minimal_nonfaces(self) -> List[Diagram]:
        "Subsets of the vertex set that are not faces while all proper subsets are"
        if self.is_empty():
            return [Diagram()]
        faces = set(face.as_set() for face in self.faces())
        vertices = list(self.vertices)
        found = set()
        level = {frozenset()}
        while level:
            grown = set()
            for face in level:
                for vertex in vertices:
                    if vertex in face:
                        continue
                    candidate = face | {vertex}
                    if candidate in grown or candidate in found:
                        continue
                    if all(candidate - {v} in faces for v in candidate):
                        if candidate in faces:
                            grown.add(candidate)
                        else:
                            found.add(candidate)
            level = grown
        return sorted(Diagram(f) for f in found)

    def dimension(self) -> Optional[int]:
        "Largest facet size minus one; None for the empty complex"
        if self.is_empty():
            return None
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        "All facets have the same size"
        return len(set(len(f) for f in self.facets)) <= 1

    def link(self, face: Iterable[Cell]) -> "SimplicialComplex":
        "link_F = {E : E ∩ F = ∅, E ∪ F ∈ Δ} over the vertices outside F"
        removed = frozenset(face)
        facets = [facet - removed for facet in self.facets if removed <= facet]
        return SimplicialComplex(facets, self.vertices - removed)

    def deletion(self, face: Iterable[Cell]) -> "SimplicialComplex":
        "del_F = {E : E ∩ F = ∅} over the vertices outside F"
        removed = frozenset(face)
        facets = [facet - removed for facet in self.facets]
        return SimplicialComplex(facets, self.vertices - removed)

    def to_json(self) -> Dict[str, object]:
        "Vertices, facets, minimal non-faces, Euler characteristic, purity and dimension"
        return {
            "vertices": self.vertices.to_json(),
            "facets": [f.to_json() for f in self.sorted_facets()],
            "minimal_nonfaces": [f.to_json() for f in self.minimal_nonfaces()],
            "euler": reduced_euler_characteristic(self),
            "pure": self.is_pure(),
            "dimension": self.dimension(),
        }


def reduced_euler_characteristic(complex_: SimplicialComplex) -> int:
    """
    Sum of (-1)^(|F|-1) over all faces including the empty one, through
    χ̃(Δ) = χ̃(del_v Δ) - χ̃(link_v Δ)
    """
    memo: Dict[FrozenSet[Face], int] = {}

    def compute(facets: FrozenSet[Face]) -> int:
        if not facets:
            return 0
        if len(facets) == 1:
            (facet, ) = facets
            return -1 if not facet else 0
        if facets in memo:
            return memo[facets]
        vertex = min(itertools.chain.from_iterable(facets))
        deletion = _maximal(f - {vertex} for f in facets)
        link = _maximal(f - {vertex} for f in facets if vertex in f)
        result = compute(deletion) - compute(link)
        memo[facets] = result
        return result

    return compute(complex_.facets)


class Decomposition(NamedTuple):
    """Vertex decomposition tree; a leaf (pivot None) is {∅} or ∅"""
    pivot: Optional[Cell]
    deletion: Optional["Decomposition"]
    link: Optional["Decomposition"]

    def pivots(self) -> List[Cell]:
        "Pivot sequence in preorder"
        if self.pivot is None:
            return []
        return [self.pivot] + self.deletion.pivots() + self.link.pivots()  # type: ignore

    def to_json(self):
        "Nested pivot tree"
        if self.pivot is None:
            return None
        return {
            "pivot": list(self.pivot),
            "deletion": self.deletion.to_json(),  # type: ignore
            "link": self.link.to_json(),  # type: ignore
        }


_LEAF = Decomposition(None, None, None)


def is_vertex_decomposable(
        complex_: SimplicialComplex) -> Tuple[bool, Optional[Decomposition]]:
    """
    Search for a vertex decomposition. Pivots are tried from the end of the
    reading order; a pivot need not be a face.
    """
    memo: Dict[Tuple[Diagram, FrozenSet[Face]], Optional[Decomposition]] = {}

    def search(current: SimplicialComplex) -> Optional[Decomposition]:
        if current.is_empty() or current.is_void_face():
            return _LEAF
        if not current.is_pure():
            return None
        key = (current.vertices, current.facets)
        if key in memo:
            return memo[key]
        memo[key] = None
        for vertex in reversed(current.vertices.cells):
            deletion = search(current.deletion([vertex]))
            if deletion is None:
                continue
            link = search(current.link([vertex]))
            if link is None:
                continue
            memo[key] = Decomposition(vertex, deletion, link)
            break
        return memo[key]

    certificate = search(complex_)
    return certificate is not None, certificate


def stanley_reisner(complex_: SimplicialComplex) -> MonomialIdeal:
    "Ideal generated by the products of variables over the minimal non-faces"
    vertices = complex_.vertices
    space = SKEW if all(i > j for i, j in vertices) else GENERAL
    return MonomialIdeal((Monomial.of(*face) for face in complex_.minimal_nonfaces()), space)


def _check_cells(cells: Diagram, n: int):
    if any(not n >= i > j for i, j in cells):
        raise UsageError(f"Cells {list(cells)} are not inside ▽_{n}")


def _subword_complex(z: Permutation, cells: Diagram, n: int, check: bool) -> SimplicialComplex:
    dreams = enumerate_fp(z, n, cells, check=check)
    return SimplicialComplex((cells - dream.cells for dream in dreams), cells)


def subword_complex(z: Permutation, cells: Optional[Iterable[Cell]], n: int) -> SimplicialComplex:
    """
    Σ(z,Q): subsets S of Q such that Q \\ S contains an fpf-involution pipe
    dream for z. Q defaults to ▽_n.
    """
    region = Diagram(cells) if cells is not None else staircase(n)
    _check_cells(region, n)
    return _subword_complex(z, region, n, True)


def subword_deletion_rule(z: Permutation, cells: Iterable[Cell], n: int) -> bool:
    """
    Check del_q Σ(z,Q) for the reading-order-last cell q of Q against the
    explicit rule: Σ(z,Q') when conjugating by s_q lengthens z, and
    Σ(s_q z s_q, Q') otherwise
    """
    region = Diagram(cells)
    _check_cells(region, n)
    if not region:
        return True
    last = region.cells[-1]
    letter = last[0] + last[1] - 1
    rest = region - [last]
    moved = z.conjugate(letter, letter + 1)
    if fpf_length(moved) > fpf_length(z):
        expected = _subword_complex(z, rest, n, True)
    else:
        expected = _subword_complex(moved, rest, n, False)
    actual = subword_complex(z, region, n).deletion([last])
    if actual != expected:
        log.info("Deletion of %s from Σ(%s, %s) does not follow the rule", last, z, list(region))
    return actual == expected


def codimension_one_check(complex_: SimplicialComplex, sphere: bool = False) -> bool:
    """
    Ridges of a pure complex lie in at most two facets, in exactly two when
    a sphere is expected
    """
    if not complex_.is_pure():
        return False
    counts: Dict[Face, int] = {}
    for facet in complex_.facets:
        for vertex in facet:
            ridge = facet - {vertex}
            counts[ridge] = counts.get(ridge, 0) + 1
    if any(count > 2 for count in counts.values()):
        return False
    if sphere:
        return all(count == 2 for count in counts.values())
    return True
