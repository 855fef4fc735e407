# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Permutations of the positive integers with finite support, fixed-point-free
involutions, their diagrams, rank tables, Bruhat orders and transitions.

A permutation is stored on a finite window together with a tail marker.
Identity-tailed permutations fix every point past the window, fpf-tailed
ones act as (N+1,N+2)(N+3,N+4)... there.
"""

import itertools
import logging
import re
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from pfaffschub.errors import PermutationError, UsageError

log = logging.getLogger(__name__)

Cell = Tuple[int, int]


def reading_key(cell: Cell) -> Tuple[int, int]:
    "Sort key for the reading order: rows ascending, columns right to left"
    return (cell[0], -cell[1])


class Diagram:
    """Finite set of (row, column) cells kept in reading order"""

    __slots__ = ("cells", "_set")

    def __init__(self, cells: Iterable[Cell] = ()):
        unique = set((int(i), int(j)) for i, j in cells)
        for i, j in unique:
            if i < 1 or j < 1:
                raise UsageError(f"Diagram cell ({i},{j}) has a coordinate below 1")
        self.cells: Tuple[Cell, ...] = tuple(sorted(unique, key=reading_key))
        self._set = frozenset(unique)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self._set

    def __eq__(self, other) -> bool:
        if isinstance(other, Diagram):
            return self._set == other._set
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def __lt__(self, other: "Diagram") -> bool:
        return (len(self), self.cells) < (len(other), other.cells)

    def __repr__(self) -> str:
        return f"Diagram({list(self.cells)})"

    def __or__(self, other: Iterable[Cell]) -> "Diagram":
        return Diagram(itertools.chain(self.cells, other))

    def __sub__(self, other: Iterable[Cell]) -> "Diagram":
        drop = set(other)
        return Diagram(c for c in self.cells if c not in drop)

    def issubset(self, other: Iterable[Cell]) -> bool:
        "Check containment in another cell collection"
        return self._set.issubset(set(other))

    def as_set(self) -> frozenset:
        "Return cells as a frozenset"
        return self._set

    def transpose(self) -> "Diagram":
        "Reflect cells across the main diagonal"
        return Diagram((j, i) for i, j in self.cells)

    def below_diagonal(self) -> "Diagram":
        "Keep only cells (i,j) with i > j"
        return Diagram(c for c in self.cells if c[0] > c[1])

    def to_json(self) -> List[List[int]]:
        "Serialize as [row, col] pairs in reading order"
        return [[i, j] for i, j in self.cells]


def staircase(n: int) -> Diagram:
    "Return the strict lower triangle {(i,j) : n >= i > j >= 1}"
    return Diagram((i, j) for i in range(1, n + 1) for j in range(1, i))


class Permutation:
    """
    Bijection of the positive integers given by its images on a window [N]
    and a tail marker. Equal permutations always share a normalized window.
    """

    __slots__ = ("images", "fpf")

    def __init__(self, images: Sequence[int] = (), fpf: bool = False):
        values = [int(x) for x in images]
        size = len(values)
        if sorted(values) != list(range(1, size + 1)):
            raise PermutationError(f"{values} is not a permutation of [{size}]")
        if fpf:
            if size % 2:
                raise PermutationError("Window of a fixed-point-free involution must be even")
            for i, value in enumerate(values, 1):
                if value == i or values[value - 1] != i:
                    raise PermutationError(f"{values} is not a fixed-point-free involution")
            while size >= 2 and values[size - 2] == size and values[size - 1] == size - 1:
                size -= 2
        else:
            while size and values[size - 1] == size:
                size -= 1
        self.images: Tuple[int, ...] = tuple(values[:size])
        self.fpf = fpf

    @property
    def window(self) -> int:
        "Length of the normalized window"
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i <= len(self.images):
            return self.images[i - 1]
        if self.fpf:
            return i + 1 if i % 2 else i - 1
        return i

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.fpf == other.fpf and self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.fpf, self.images))

    def __lt__(self, other: "Permutation") -> bool:
        return (self.fpf, len(self.images), self.images) < \
            (other.fpf, len(other.images), other.images)

    def __repr__(self) -> str:
        tail = "fpf" if self.fpf else "identity"
        return f"Permutation({list(self.images)}, tail={tail})"

    def __str__(self) -> str:
        text = "".join("(" + ",".join(str(x) for x in cycle) + ")" for cycle in self.cycles())
        if self.fpf:
            return text + "..."
        return text or "()"

    def one_line(self, size: Optional[int] = None) -> List[int]:
        "Images of 1..size (defaults to the window)"
        if size is None:
            size = self.window
        return [self(i) for i in range(1, size + 1)]

    def cycles(self) -> List[Tuple[int, ...]]:
        "Nontrivial cycles meeting the window, each starting at its minimum"
        seen = set()
        result = []
        for start in range(1, self.window + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            result.append(tuple(cycle))
        return result

    def inverse(self) -> "Permutation":
        "Return the inverse permutation"
        if self.fpf:
            return self
        values = [0] * self.window
        for i, value in enumerate(self.images, 1):
            values[value - 1] = i
        return Permutation(values)

    def is_involution(self) -> bool:
        "Check w = w^-1"
        return all(self(self(i)) == i for i in range(1, self.window + 1))

    def _span(self, *points: int) -> int:
        size = max((self.window, ) + points)
        if self.fpf and size % 2:
            size += 1
        return size

    def conjugate(self, i: int, j: int) -> "Permutation":
        "Return (i,j) w (i,j)"

        def swap(k: int) -> int:
            if k == i:
                return j
            if k == j:
                return i
            return k

        size = self._span(i, j)
        return Permutation([swap(self(swap(k))) for k in range(1, size + 1)], self.fpf)

    def right_multiply(self, i: int, j: int) -> "Permutation":
        "Return w (i,j), that is w with the entries at positions i and j swapped"
        if self.fpf:
            raise PermutationError("Right multiplication leaves the fixed-point-free involutions")
        values = self.one_line(self._span(i, j))
        values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
        return Permutation(values)

    def to_json(self) -> Dict[str, object]:
        "Serialize as window images plus tail marker"
        return {"tail": "fpf" if self.fpf else "identity", "images": list(self.images)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "Permutation":
        "Inverse of to_json"
        return cls(data["images"], data.get("tail") == "fpf")  # type: ignore


def identity() -> Permutation:
    "The identity of S_infinity"
    return Permutation()


def one_fpf() -> Permutation:
    "The involution 1_FPF = (1,2)(3,4)(5,6)..."
    return Permutation((), fpf=True)


def transposition(i: int, j: int) -> Permutation:
    "The transposition (i,j)"
    return identity().right_multiply(i, j)


def compose(u: Permutation, v: Permutation) -> Permutation:
    "Return u∘v for identity-tailed permutations"
    if u.fpf or v.fpf:
        raise PermutationError("Composition needs finitely supported permutations")
    size = max(u.window, v.window)
    return Permutation([u(v(i)) for i in range(1, size + 1)])


CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


def parse_cycles(text: str) -> List[Tuple[int, ...]]:
    "Parse cycle notation such as '(1,2)(3,6)(4,5)'; '()' and '' give no cycles"
    stripped = text.strip()
    cycles = []
    pos = 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        match = CYCLE_RE.match(stripped, pos)
        if not match:
            raise PermutationError(f"Malformed cycle notation '{text}' at position {pos}")
        if match.group(1):
            cycles.append(tuple(int(x) for x in match.group(1).split(",")))
        pos = match.end()
    return cycles


def from_cycles(cycles: Iterable[Sequence[int]], n: Optional[int] = None) -> Permutation:
    "Build an identity-tailed permutation from disjoint cycles"
    mapping: Dict[int, int] = {}
    for cycle in cycles:
        for pos, point in enumerate(cycle):
            if point < 1:
                raise PermutationError(f"Cycle entry {point} is not a positive integer")
            if point in mapping:
                raise PermutationError(f"Point {point} appears in more than one cycle")
            mapping[point] = cycle[(pos + 1) % len(cycle)]
    size = max(mapping, default=0)
    if n is not None and size > n:
        raise PermutationError(f"Cycles move {size} which lies outside [{n}]")
    return Permutation([mapping.get(i, i) for i in range(1, size + 1)])


def parse_one_line(text: str) -> Permutation:
    "Parse one-line notation such as '3 1 4 2' or '3,1,4,2'"
    tokens = [x for x in re.split(r"[\s,]+", text.strip()) if x]
    try:
        return Permutation(int(x) for x in tokens)
    except ValueError as err:
        raise PermutationError(f"Malformed one-line notation '{text}'") from err


def parse_fpf_cycles(text: str) -> Permutation:
    """
    Parse a fixed-point-free involution given by its 2-cycles, e.g.
    '(1,2)(3,6)(4,5)'. Unlisted points follow the 1_FPF pairing, so '()'
    is 1_FPF. A trailing '...' as printed by str() is accepted.
    """
    body = text.strip()
    if body.endswith("..."):
        body = body[:-3]
    cycles = parse_cycles(body)
    mapping: Dict[int, int] = {}
    for cycle in cycles:
        if len(cycle) != 2 or cycle[0] == cycle[1]:
            raise PermutationError(f"Cycle {cycle} of '{text}' is not a 2-cycle")
        for point, image in (cycle, cycle[::-1]):
            if point < 1:
                raise PermutationError(f"Cycle entry {point} is not a positive integer")
            if point in mapping:
                raise PermutationError(f"Point {point} appears in more than one cycle")
            mapping[point] = image
    size = max(mapping, default=0)
    size += size % 2
    images = []
    for i in range(1, size + 1):
        if i in mapping:
            images.append(mapping[i])
            continue
        partner = i + 1 if i % 2 else i - 1
        if partner in mapping:
            raise PermutationError(f"Point {i} of '{text}' is left without a partner")
        images.append(partner)
    return Permutation(images, fpf=True)


def fpf_standardize(y: Permutation, n: int) -> Permutation:
    """
    Return FPF_n(y): fixed points i_1 < i_2 < ... of y in [n] are paired with
    n+1, n+2, ... and everything past that follows the fpf tail.
    """
    if y.fpf:
        raise PermutationError("Standardization expects an involution with identity tail")
    if not y.is_involution():
        raise PermutationError(f"{y} is not an involution")
    if y.window > n:
        raise PermutationError(f"{y} moves points outside [{n}]")
    fixed = [i for i in range(1, n + 1) if y(i) == i]
    images = [y(i) for i in range(1, n + 1)] + fixed
    for t, i in enumerate(fixed, 1):
        images[i - 1] = n + t
    return Permutation(images, fpf=True)


def unstandardize(z: Permutation, n: int) -> Permutation:
    "Recover y with FPF_n(y) = z, or raise when z lies outside FPF_n(I_n)"
    if not z.fpf:
        raise PermutationError(f"{z!r} is not a fixed-point-free involution")
    y = Permutation([z(i) if z(i) <= n else i for i in range(1, n + 1)])
    if not y.is_involution() or fpf_standardize(y, n) != z:
        raise PermutationError(f"{z} does not belong to FPF_{n}(I_{n})")
    return y


def in_fpf_image(z: Permutation, n: int) -> bool:
    "Check z ∈ FPF_n(I_n)"
    try:
        unstandardize(z, n)
    except PermutationError:
        return False
    return True


def visible_descents(z: Permutation) -> List[int]:
    "Indices i with z(i+1) < min(i, z(i))"
    return [i for i in range(1, z.window + 1) if z(i + 1) < min(i, z(i))]


def fpf_window(z: Permutation) -> int:
    "Smallest even N such that z agrees with 1_FPF past N"
    if not z.fpf:
        raise PermutationError(f"{z!r} is not a fixed-point-free involution")
    return z.window


def conjugate_by_transposition(z: Permutation, i: int, j: int) -> Permutation:
    "Return (i,j) z (i,j)"
    return z.conjugate(i, j)


def _involution_maps(points: Tuple[int, ...]) -> Iterator[Dict[int, int]]:
    if not points:
        yield {}
        return
    first, rest = points[0], points[1:]
    for mapping in _involution_maps(rest):
        yield {first: first, **mapping}
    for pos, other in enumerate(rest):
        remaining = rest[:pos] + rest[pos + 1:]
        for mapping in _involution_maps(remaining):
            yield {first: other, other: first, **mapping}


def involutions(n: int) -> List[Permutation]:
    "All involutions of [n] in a fixed deterministic order"
    points = tuple(range(1, n + 1))
    return [Permutation([m[i] for i in points]) for m in _involution_maps(points)]


def fpf_involutions(n: int) -> List[Permutation]:
    "All fixed-point-free involutions of [n] (n even), with fpf tail"
    if n % 2:
        raise PermutationError("Fixed-point-free involutions of [n] need n even")
    points = tuple(range(1, n + 1))
    result = []
    for mapping in _involution_maps(points):
        if all(mapping[i] != i for i in points):
            result.append(Permutation([mapping[i] for i in points], fpf=True))
    return result


def fpf_involutions_standardized(n: int) -> List[Permutation]:
    "The set FPF_n(I_n), enumerated through the involutions of [n]"
    return [fpf_standardize(y, n) for y in involutions(n)]


def permutations(n: int) -> List[Permutation]:
    "All of S_n in lexicographic one-line order"
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def from_partial_permutation(cells: Iterable[Cell], m: int, n: int) -> Permutation:
    """
    Complete an m x n partial permutation matrix to the unique element of
    S^{m,n}_infinity whose northwest m x n corner it is.
    """
    row_to_col: Dict[int, int] = {}
    for i, j in cells:
        if not (1 <= i <= m and 1 <= j <= n):
            raise PermutationError(f"Cell ({i},{j}) lies outside [{m}]x[{n}]")
        if i in row_to_col or j in row_to_col.values():
            raise PermutationError("Cells do not form a partial permutation matrix")
        row_to_col[i] = j
    images = []
    large = n
    for i in range(1, m + 1):
        if i in row_to_col:
            images.append(row_to_col[i])
        else:
            large += 1
            images.append(large)
    used = set(row_to_col.values())
    images.extend(j for j in range(1, n + 1) if j not in used)
    return Permutation(images)


def window_permutations(m: int, n: int) -> List[Permutation]:
    "All of S^{m,n}_infinity, one element per m x n partial permutation matrix"
    result = []
    for size in range(0, min(m, n) + 1):
        for rows in itertools.combinations(range(1, m + 1), size):
            for cols in itertools.permutations(range(1, n + 1), size):
                result.append(from_partial_permutation(zip(rows, cols), m, n))
    return sorted(result)


def w_square(m: int, n: int) -> Permutation:
    "The element with w(i) = n+i for i <= m and w(m+j) = j"
    return Permutation([n + i for i in range(1, m + 1)] + list(range(1, n + 1)))


def z_square(n: int) -> Permutation:
    "FPF_n of the identity, i.e. (1,n+1)(2,n+2)...(n,2n)"
    return fpf_standardize(identity(), n)


def length(w: Permutation) -> int:
    "Coxeter length (number of inversions) of a finitely supported permutation"
    if w.fpf:
        raise PermutationError("Use fpf_length for fixed-point-free involutions")
    values = w.images
    return sum(1 for a, b in itertools.combinations(values, 2) if a > b)


def rothe_diagram(w: Permutation) -> Diagram:
    """
    Return D(w) = {(i,j) : j < w(i), i < w^-1(j)}. For fpf-tailed input only the
    part inside the window is returned.
    """
    inv = w.inverse()
    size = w.window
    return Diagram((i, j) for i in range(1, size + 1) for j in range(1, size + 1)
                   if j < w(i) and i < inv(j))


def ss_rothe_diagram(z: Permutation) -> Diagram:
    "Return D^ss(z), the strictly lower part of D(z)"
    if not z.fpf:
        raise PermutationError(f"{z!r} is not a fixed-point-free involution")
    return rothe_diagram(z).below_diagonal()


def fpf_length(z: Permutation) -> int:
    "ℓ_fpf(z) = |D^ss(z)|"
    return len(ss_rothe_diagram(z))


def essential_set(diagram: Iterable[Cell]) -> Diagram:
    "Cells (i,j) of D with (i+1,j) and (i,j+1) outside D"
    cells = set(diagram)
    return Diagram((i, j) for i, j in cells if (i + 1, j) not in cells and (i, j + 1) not in cells)


def in_window(w: Permutation, m: int, n: int) -> bool:
    "Check w ∈ S^{m,n}_infinity, i.e. D(w) ⊆ [m]x[n]"
    return all(i <= m and j <= n for i, j in rothe_diagram(w))


class RankTable:
    """
    Integer table r(i,j) for 0 <= i <= m, 0 <= j <= n with row and column 0
    identically zero.
    """

    __slots__ = ("m", "n", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or any(len(row) != len(rows[0]) for row in rows):
            raise UsageError("Rank table must be a non-empty rectangular matrix")
        if any(rows[0]) or any(row[0] for row in rows):
            raise UsageError("Row and column 0 of a rank table must be zero")
        if any(x < 0 for row in rows for x in row):
            raise UsageError("Rank table entries must be nonnegative")
        self.m = len(rows) - 1
        self.n = len(rows[0]) - 1
        self.entries = rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RankTable":
        "Build from the values r(i,j), i in [m], j in [n]"
        width = len(rows[0]) if rows else 0
        return cls([[0] * (width + 1)] + [[0] + list(row) for row in rows])

    def __call__(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, RankTable):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RankTable({self.rows()})"

    def rows(self) -> List[List[int]]:
        "Values r(i,j) for i in [m], j in [n]"
        return [list(row[1:]) for row in self.entries[1:]]

    def is_symmetric(self) -> bool:
        "Check r(i,j) = r(j,i)"
        return self.m == self.n and all(self.entries[i][j] == self.entries[j][i]
                                        for i in range(self.m + 1) for j in range(i))

    def dominated_by(self, other: "RankTable") -> bool:
        "Check r <= s pointwise on a common shape"
        if (self.m, self.n) != (other.m, other.n):
            raise UsageError("Rank tables have different shapes")
        return all(a <= b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def minimum(self, other: "RankTable") -> "RankTable":
        "Pointwise minimum min(r, s)"
        if (self.m, self.n) != (other.m, other.n):
            raise UsageError("Rank tables have different shapes")
        return RankTable([[min(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.entries, other.entries)])

    def restrict(self, m: int, n: int) -> "RankTable":
        "Northwest m x n part of the table"
        return RankTable([row[:n + 1] for row in self.entries[:m + 1]])

    def to_json(self) -> List[List[int]]:
        "Serialize as rows of r(i,j), i,j >= 1"
        return self.rows()


def rank_table(w: Permutation, m: int, n: int) -> RankTable:
    "r_w(i,j) = #{k <= i : w(k) <= j} on [m]x[n]"
    entries = [[0] * (n + 1)]
    for i in range(1, m + 1):
        value = w(i)
        previous = entries[-1]
        entries.append([previous[j] + (1 if j and value <= j else 0) for j in range(n + 1)])
    return RankTable(entries)


def _ranks_below(a: Permutation, b: Permutation, m: int, n: int) -> bool:
    return rank_table(a, m, n).dominated_by(rank_table(b, m, n))


def bruhat_leq(a: Permutation, b: Permutation, mode: str = "fpf",
               m: Optional[int] = None, n: Optional[int] = None) -> bool:
    """
    Rank-table domination test: return True when r_a <= r_b pointwise, which
    holds exactly when b <= a in Bruhat order.

    With a window given the inputs must lie in S^{m,n}_infinity (classical) or
    FPF_n(I_n) (fpf) and the tables are compared on that window. Without a
    window the comparison runs on the square spanned by both supports.
    """
    if mode not in ("classical", "fpf"):
        raise UsageError(f"Unknown Bruhat order mode '{mode}'")
    fpf = mode == "fpf"
    if a.fpf != fpf or b.fpf != fpf:
        raise PermutationError(f"Both permutations must be {mode} elements")
    if n is None:
        size = max(a.window, b.window, 1)
        return _ranks_below(a, b, size, size)
    if fpf:
        if not (in_fpf_image(a, n) and in_fpf_image(b, n)):
            raise PermutationError(f"Window mismatch: inputs are not both in FPF_{n}(I_{n})")
        return _ranks_below(a, b, n, n)
    if m is None:
        m = n
    if not (in_window(a, m, n) and in_window(b, m, n)):
        raise PermutationError(f"Window mismatch: inputs are not both in S^({m},{n})")
    return _ranks_below(a, b, m, n)


def dominant_component(z: Permutation) -> Tuple[Diagram, Diagram]:
    """
    Return dom(z) = {(i,j) : r_z(i,j) = 0} together with all of its outer
    corners, i.e. cells outside dom(z) whose addition keeps it a Young diagram.
    """
    rows = z.inverse()(1)
    cols = z(1)
    table = rank_table(z, rows, cols)
    dom = set((i, j) for i in range(1, rows + 1) for j in range(1, cols + 1) if table(i, j) == 0)
    corners = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)
               if (i, j) not in dom and (i == 1 or (i - 1, j) in dom) and
               (j == 1 or (i, j - 1) in dom)]
    return Diagram(dom), Diagram(corners)


def is_fpf_dominant(z: Permutation, n: int) -> bool:
    "Check D^ss(z) = dom(z) ∩ ▽_n"
    dom, _ = dominant_component(z)
    lower = Diagram(c for c in dom if n >= c[0] > c[1])
    return ss_rothe_diagram(z) == lower


def transitions_psi(z: Permutation, p: int) -> List[Permutation]:
    "Ψ(z,p): all (p,r) z (p,r) with r > p and ℓ_fpf one larger than ℓ_fpf(z)"
    if not z.fpf:
        raise PermutationError(f"{z!r} is not a fixed-point-free involution")
    target = fpf_length(z) + 1
    top = max(z.window, p) + 4
    found = set()
    for r in range(p + 1, top + 1):
        candidate = z.conjugate(p, r)
        if fpf_length(candidate) == target:
            found.add(candidate)
    return sorted(found)


def transitions_phi(w: Permutation, p: int) -> List[Permutation]:
    "Φ(w,p): all w (p,r) with r > p and length one larger than ℓ(w)"
    target = length(w) + 1
    found = set()
    for r in range(p + 1, max(w.window, p) + 2):
        candidate = w.right_multiply(p, r)
        if length(candidate) == target:
            found.add(candidate)
    return sorted(found)


def fpf_covers(z: Permutation, limit: int) -> List[Permutation]:
    "Upper covers (i,j) z (i,j) of z with i < j <= limit in the fpf Bruhat order"
    target = fpf_length(z) + 1
    found = set()
    for i in range(1, limit + 1):
        for j in range(i + 1, limit + 1):
            if z(i) == j:
                continue
            candidate = z.conjugate(i, j)
            if fpf_length(candidate) == target:
                found.add(candidate)
    return sorted(found)


def bruhat_closure_leq(y: Permutation, z: Permutation, limit: int) -> bool:
    "Decide y <= z by walking up fpf covers from y, scanning transpositions up to limit"
    goal = fpf_length(z)
    level = {y}
    for _ in range(fpf_length(y), goal):
        level = set(v for u in level for v in fpf_covers(u, limit))
        if not level:
            return False
    return z in level


def bruhat_minimal_dominating(z: Permutation, p: int, q: int, n: int) -> List[Permutation]:
    """
    Bruhat-minimal elements of {v ∈ FPF_n(I_n) : v >= z, dom(v) ⊇ [p]x[q]},
    found by exhaustive search.
    """
    candidates = [
        v for v in fpf_involutions_standardized(n)
        if bruhat_leq(v, z, n=n) and rank_table(v, p, q)(p, q) == 0
    ]
    return sorted(v for v in candidates
                  if not any(u != v and bruhat_leq(v, u, n=n) for u in candidates))


def _strictly_below(a: Permutation, b: Permutation, size: int) -> bool:
    return a != b and _ranks_below(b, a, size, size)


def ijr_prime_holds_fpf(z: Permutation, limit: int) -> bool:
    """
    Check the chain exchange property at every outer corner (p,q), p > q, of
    dom(z): whenever z < (i,j)z(i,j) < (p,r)(i,j)z(i,j)(p,r) there are
    i' < j' and r' > p among {i,j,p,r,z(i),z(j),z(p),z(r)} with
    z < (p,r')z(p,r') < (i',j')(p,r')z(p,r')(i',j') equal to the same element.
    All indices range over [limit].
    """
    if limit % 2:
        limit += 1
    _, corners = dominant_component(z)
    for p, q in corners:
        if p <= q or p > limit:
            continue
        for i, j in itertools.combinations(range(1, limit + 1), 2):
            first = z.conjugate(i, j)
            if not _strictly_below(z, first, limit):
                continue
            for r in range(p + 1, limit + 1):
                second = first.conjugate(p, r)
                if not _strictly_below(first, second, limit):
                    continue
                support = sorted({i, j, p, r, z(i), z(j), z(p), z(r)})
                if not _fpf_exchange_exists(z, p, second, support, limit):
                    log.debug("Exchange fails for z=%s corner (%d,%d), i=%d j=%d r=%d", z, p, q,
                              i, j, r)
                    return False
    return True


def _fpf_exchange_exists(z: Permutation, p: int, target: Permutation, support: List[int],
                         limit: int) -> bool:
    for r in support:
        if r <= p:
            continue
        middle = z.conjugate(p, r)
        if not _strictly_below(z, middle, limit):
            continue
        for i, j in itertools.combinations(support, 2):
            if middle.conjugate(i, j) == target and _strictly_below(middle, target, limit):
                return True
    return False


def ijr_prime_check_fpf(n: int) -> bool:
    "Exchange property for every fixed-point-free involution of [n]"
    return all(ijr_prime_holds_fpf(z, n) for z in fpf_involutions(n))


def ijr_prime_holds(w: Permutation, n: int) -> bool:
    """
    Classical exchange property at every outer corner (p,q) of dom(w): whenever
    w < w(i,j) < w(i,j)(p,r) there are i' < j', r' > p among {i,j,p,r} with
    w < w(p,r') < w(p,r')(i',j') = w(i,j)(p,r). Indices range over [n].
    """
    _, corners = dominant_component(w)
    for p, _q in corners:
        if p > n:
            continue
        for i, j in itertools.combinations(range(1, n + 1), 2):
            first = w.right_multiply(i, j)
            if not _strictly_below(w, first, n):
                continue
            for r in range(p + 1, n + 1):
                second = first.right_multiply(p, r)
                if not _strictly_below(first, second, n):
                    continue
                support = sorted({i, j, p, r})
                if not _classical_exchange_exists(w, p, second, support, n):
                    return False
    return True


def _classical_exchange_exists(w: Permutation, p: int, target: Permutation, support: List[int],
                               n: int) -> bool:
    for r in support:
        if r <= p:
            continue
        middle = w.right_multiply(p, r)
        if not _strictly_below(w, middle, n):
            continue
        for i, j in itertools.combinations(support, 2):
            if middle.right_multiply(i, j) == target and _strictly_below(middle, target, n):
                return True
    return False


def ijr_prime_check(n: int) -> bool:
    "Classical exchange property for every w ∈ S_n"
    return all(ijr_prime_holds(w, n) for w in permutations(n))
