# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Reduced pipe dreams, fixed-point-free involution pipe dreams, extended
pipe dreams and the Hecke-type product they are read through
"""

import collections
import logging
from typing import Iterable, List, Optional, Sequence, Union

from pfaffschub.coxeter import (Cell, Diagram, Permutation, dominant_component, fpf_length,
                                in_fpf_image, in_window, length, one_fpf, rank_table, staircase,
                                transitions_psi)
from pfaffschub.errors import PermutationError, UsageError

log = logging.getLogger(__name__)

CLASSICAL = "classical"
FPF = "fpf"
EXTENDED_FPF = "extended-fpf"
FLAVORS = (CLASSICAL, FPF, EXTENDED_FPF)


class _Unit:
    """Absorbing element of the ∗ action"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNIT"

    def __str__(self) -> str:
        return "1"

    def __reduce__(self):
        return (_Unit, ())


UNIT = _Unit()

HeckeValue = Union[Permutation, _Unit]


class PipeDream:
    """Set of crossing cells together with the kind of dream it is"""

    __slots__ = ("cells", "flavor")

    def __init__(self, cells: Iterable[Cell], flavor: str = FPF):
        if flavor not in FLAVORS:
            raise UsageError(f"Unknown pipe dream flavor '{flavor}'")
        self.cells = cells if isinstance(cells, Diagram) else Diagram(cells)
        if flavor != CLASSICAL and any(i <= j for i, j in self.cells):
            raise UsageError(f"{flavor} pipe dreams live strictly below the diagonal")
        self.flavor = flavor

    def __iter__(self):
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __eq__(self, other) -> bool:
        if isinstance(other, PipeDream):
            return self.flavor == other.flavor and self.cells == other.cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.flavor, self.cells))

    def __lt__(self, other: "PipeDream") -> bool:
        return (self.flavor, self.cells) < (other.flavor, other.cells)

    def __repr__(self) -> str:
        return f"PipeDream({list(self.cells)}, {self.flavor})"

    @property
    def word(self) -> List[int]:
        "Reading word"
        return reading_word(self.cells)

    def to_json(self):
        "Cells as [row, col] pairs in reading order"
        return self.cells.to_json()


def reading_word(cells: Iterable[Cell]) -> List[int]:
    "Letters i+j-1, rows top to bottom, each row right to left"
    diagram = cells if isinstance(cells, Diagram) else Diagram(cells)
    return [i + j - 1 for i, j in diagram]


def star(z: HeckeValue, i: int) -> HeckeValue:
    "z ∗ s_i: unit on a cycle (i,i+1), z on a descent, s_i z s_i otherwise"
    if z is UNIT:
        return UNIT
    if z(i) == i + 1:
        return UNIT
    if z(i) > z(i + 1):
        return z
    return z.conjugate(i, i + 1)


def delta_fpf(word: Iterable[int]) -> HeckeValue:
    "Fold ∗ over the word starting from 1_FPF"
    current: HeckeValue = one_fpf()
    for letter in word:
        if letter < 1:
            raise UsageError(f"Word letters must be positive, got {letter}")
        current = star(current, letter)
    return current


class _RankOracle:
    """Decides v <= target in Bruhat order on a fixed square window"""

    def __init__(self, target: Permutation, size: int):
        self.size = max(size, target.window)
        self.table = rank_table(target, self.size, self.size)

    def below(self, value: Permutation) -> bool:
        if value.window > self.size:
            return False
        return self.table.dominated_by(rank_table(value, self.size, self.size))


def enumerate_rp(w: Permutation, m: int, n: int) -> List[PipeDream]:
    "All reduced pipe dreams for w inside [m]x[n]"
    if w.fpf or not in_window(w, m, n):
        raise PermutationError(f"{w} is not an element of S^({m},{n})")
    cells = list(Diagram((i, j) for i in range(1, m + 1) for j in range(1, n + 1)))
    goal = length(w)
    oracle = _RankOracle(w, m + n)
    found: List[PipeDream] = []

    def search(pos: int, current: Permutation, chosen: List[Cell]):
        if len(chosen) == goal:
            if current == w:
                found.append(PipeDream(chosen, CLASSICAL))
            return
        if len(cells) - pos < goal - len(chosen):
            return
        i, j = cells[pos]
        letter = i + j - 1
        if current(letter) < current(letter + 1):
            grown = current.right_multiply(letter, letter + 1)
            if oracle.below(grown):
                search(pos + 1, grown, chosen + [(i, j)])
        search(pos + 1, current, chosen)

    search(0, Permutation(), [])
    return sorted(found)


def _check_fpf_window(z: Permutation, n: int):
    if not z.fpf or not in_fpf_image(z, n):
        raise PermutationError(f"{z} is not an element of FPF_{n}(I_{n})")


def enumerate_fp(z: Permutation, n: int, cells: Optional[Iterable[Cell]] = None,
                 check: bool = True) -> List[PipeDream]:
    """
    All D ⊆ ▽_n (or the given cells) whose reading word is an fpf-involution
    word for z. With check=False z may lie outside FPF_n(I_n).
    """
    if check:
        _check_fpf_window(z, n)
    elif not z.fpf:
        raise PermutationError(f"{z!r} is not a fixed-point-free involution")
    region = list(Diagram(cells) if cells is not None else staircase(n))
    goal = fpf_length(z)
    oracle = _RankOracle(z, 2 * n)
    found: List[PipeDream] = []

    def search(pos: int, current: Permutation, chosen: List[Cell]):
        if len(chosen) == goal:
            if current == z:
                found.append(PipeDream(chosen, FPF))
            return
        if len(region) - pos < goal - len(chosen):
            return
        i, j = region[pos]
        letter = i + j - 1
        if current(letter) != letter + 1 and current(letter) < current(letter + 1):
            grown = current.conjugate(letter, letter + 1)
            if oracle.below(grown):
                search(pos + 1, grown, chosen + [(i, j)])
        search(pos + 1, current, chosen)

    search(0, one_fpf(), [])
    return sorted(found)


def enumerate_fp_plus(z: Permutation, n: int,
                      cells: Optional[Iterable[Cell]] = None) -> List[PipeDream]:
    "All D inside the given cells (default ▽_n) with δ_fpf(word(D)) = z"
    _check_fpf_window(z, n)
    region = list(Diagram(cells) if cells is not None else staircase(n))
    if any(i <= j or i > n for i, j in region):
        raise UsageError(f"Cells {region} are not inside ▽_{n}")
    oracle = _RankOracle(z, 2 * n)
    found: List[PipeDream] = []

    def search(pos: int, current: Permutation, chosen: List[Cell]):
        if pos == len(region):
            if current == z:
                found.append(PipeDream(chosen, EXTENDED_FPF))
            return
        i, j = region[pos]
        grown = star(current, i + j - 1)
        if grown is not UNIT and (grown == current or oracle.below(grown)):
            search(pos + 1, grown, chosen + [(i, j)])
        search(pos + 1, current, chosen)

    search(0, one_fpf(), [])
    return sorted(found)


def enumerate_fp_via_symmetric_rp(z: Permutation, n: int, m: int) -> List[PipeDream]:
    """
    FP(z) computed literally: D ∩ ▽ over the symmetric reduced pipe dreams D
    of the fixed-point-free involution y of [m] with FPF_m(y) = z
    """
    _check_fpf_window(z, n)
    if m % 2 or m < max(n, z.window):
        raise UsageError(f"Window {m} must be even and at least {max(n, z.window)}")
    y = Permutation(z.one_line(m))
    result = set()
    for dream in enumerate_rp(y, m, m):
        cells = dream.cells
        if cells.transpose() == cells:
            result.add(PipeDream(cells.below_diagonal(), FPF))
    return sorted(result)


def transition_bijection_check(z: Permutation, p: int, q: int, n: int) -> bool:
    """
    Check that D -> D ⊔ {(p,q)} maps FP(z) bijectively onto the disjoint union
    of FP(y) over y ∈ Ψ(z,p)
    """
    _, corners = dominant_component(z)
    if (p, q) not in corners or not n >= p > q:
        raise UsageError(f"({p},{q}) is not an outer corner of dom({z}) with {n} >= p > q")
    dreams = enumerate_fp(z, n)
    if any((p, q) in dream for dream in dreams):
        log.info("Corner (%d,%d) already crosses in a dream of %s", p, q, z)
        return False
    images = collections.Counter(dream.cells | [(p, q)] for dream in dreams)
    targets: collections.Counter = collections.Counter()
    for y in transitions_psi(z, p):
        for dream in enumerate_fp(y, n):
            targets[dream.cells] += 1
    if any(count > 1 for count in targets.values()):
        return False
    return images == targets


def render_ascii(cells: Iterable[Cell], n: int, flavor: str = FPF, m: Optional[int] = None) -> str:
    """
    Rows of '.' and '+', one '+' per crossing cell. Fpf flavors draw only
    the cells (i,j) with j <= i.
    """
    chosen = set(cells)
    rows = m if m is not None else n
    lines = []
    for i in range(1, rows + 1):
        width = min(i, n) if flavor != CLASSICAL else n
        lines.append("".join("+" if (i, j) in chosen else "." for j in range(1, width + 1)))
    return "\n".join(lines)


def dreams_to_json(dreams: Sequence[PipeDream]) -> List[object]:
    "Serialize a list of dreams"
    return [dream.to_json() for dream in dreams]
