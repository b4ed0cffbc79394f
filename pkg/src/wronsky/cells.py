"""Balls in boxes: i-element subsets of {1..n} and their combinatorics.

A cell ``I = {b_1 < ... < b_i}`` is drawn as a bitstring with a ball in each
box ``b_j``.  The creation move pushes a ball one box to the right when that
box is empty; ``length`` counts the moves needed from ``{1..i}``, and
``path_count`` counts the distinct move sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionError


@dataclass(frozen=True, order=True)
class CellIndex:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(b) for b in self.elements)
        object.__setattr__(self, "elements", els)
        if self.n < 0:
            raise DimensionError("negative box count")
        if any(not 1 <= b <= self.n for b in els) or any(a >= b for a, b in zip(els, els[1:])):
            raise DimensionError(f"{list(els)} is not an increasing subset of 1..{self.n}")

    @classmethod
    def from_bits(cls, bits: str) -> CellIndex:
        if any(ch not in "01" for ch in bits):
            raise ValueError(f"bitstring expected, got {bits!r}")
        return cls(len(bits), tuple(k + 1 for k, ch in enumerate(bits) if ch == "1"))

    @classmethod
    def parse(cls, value: str | Sequence[int], n: int | None = None) -> CellIndex:
        """Accept a bitstring ``"1100"`` or an element list (``n`` required then)."""
        if isinstance(value, str):
            return cls.from_bits(value)
        if n is None:
            raise ValueError("box count n is required for an element list")
        return cls(n, tuple(value))

    @classmethod
    def minimal(cls, n: int, i: int) -> CellIndex:
        return cls(n, tuple(range(1, i + 1)))

    @classmethod
    def maximal(cls, n: int, i: int) -> CellIndex:
        return cls(n, tuple(range(n - i + 1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def bits(self) -> str:
        s = set(self.elements)
        return "".join("1" if k in s else "0" for k in range(1, self.n + 1))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return self.bits


def all_cells(n: int, i: int) -> list[CellIndex]:
    """Every i-subset of {1..n} in lexicographic order."""
    return [CellIndex(n, c) for c in combinations(range(1, n + 1), i)]


def length(I: CellIndex) -> int:
    return sum(b - j for j, b in enumerate(I.elements, start=1))


def admissible_moves(I: CellIndex) -> list[tuple[int, CellIndex]]:
    """Pairs ``(b, I')`` where the ball in box ``b`` can move right, giving ``I'``."""
    els = I.elements
    out = []
    for p, b in enumerate(els):
        nxt = els[p + 1] if p + 1 < len(els) else I.n + 1
        if nxt > b + 1:
            moved = els[:p] + (b + 1,) + els[p + 1:]
            out.append((b, CellIndex(I.n, moved)))
    return out


def reverse_moves(I: CellIndex) -> list[CellIndex]:
    """Cells from which one creation move reaches ``I``."""
    els = I.elements
    out = []
    for p, b in enumerate(els):
        prev = els[p - 1] if p else 0
        if b - 1 > prev:
            out.append(CellIndex(I.n, els[:p] + (b - 1,) + els[p + 1:]))
    return out


@lru_cache(maxsize=None)
def _path_table(n: int, i: int) -> Mapping[tuple[int, ...], int]:
    cells = sorted(all_cells(n, i), key=length)
    table: dict[tuple[int, ...], int] = {}
    for I in cells:
        preds = reverse_moves(I)
        table[I.elements] = sum(table[J.elements] for J in preds) if preds else 1
    return MappingProxyType(table)


def path_count(I: CellIndex) -> int:
    """Number of move sequences from {1..i} to I, by dynamic programming over lengths."""
    return _path_table(I.n, I.size)[I.elements]


def transpose(I: CellIndex) -> CellIndex:
    """Read the bitstring right to left."""
    return CellIndex(I.n, tuple(sorted(I.n + 1 - b for b in I.elements)))


def complement(I: CellIndex) -> CellIndex:
    """Swap balls and empty boxes."""
    return CellIndex(I.n, tuple(b for b in range(1, I.n + 1) if b not in I.elements))


@lru_cache(maxsize=None)
def level_sets(n: int, i: int) -> tuple[int, ...]:
    """``counts[j]`` is the number of i-subsets of {1..n} of length j."""
    if not 0 <= i <= n:
        raise DimensionError(f"need 0 <= i <= n, got i={i}, n={n}")
    counts = [0] * (i * (n - i) + 1)
    for c in combinations(range(1, n + 1), i):
        counts[sum(c) - i * (i + 1) // 2] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Sort and drop zeros."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > k) for k in range(self.parts[0])))

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate().parts
        return [
            (row - c - 1) + (conj[c] - r - 1) + 1
            for r, row in enumerate(self.parts)
            for c in range(row)
        ]

    def fits_in(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and all(p <= cols for p in self.parts)

    def complement_in(self, rows: int, cols: int) -> Partition:
        """The diagram left over in a ``rows x cols`` box, rotated by 180 degrees."""
        if not self.fits_in(rows, cols):
            raise ValueError(f"{self} does not fit in a {rows}x{cols} box")
        padded = list(self.parts) + [0] * (rows - len(self.parts))
        return Partition.from_parts(cols - p for p in reversed(padded))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    out = []

    def rec(prefix: list[int], cap: int):
        out.append(Partition(tuple(prefix)))
        if len(prefix) == rows:
            return
        for p in range(min(cap, cols), 0, -1):
            rec(prefix + [p], p)

    rec([], cols)
    return out


def partition_of(I: CellIndex) -> Partition:
    """The j-th ball contributes the number of empty boxes strictly to its right."""
    n, i = I.n, I.size
    return Partition.from_parts((n - b) - (i - j) for j, b in enumerate(I.elements, start=1))


def hook_factor_products(nu: Partition) -> Fraction:
    """prod_{i<j}(a_j - a_i) / prod_i (r - a_i)!  with a_i = i - nu_i, i = 0..r."""
    parts = nu.parts
    if not parts:
        return Fraction(1)
    r = len(parts) - 1
    a = [i - p for i, p in enumerate(parts)]
    num = 1
    for x in range(len(a)):
        for y in range(x + 1, len(a)):
            num *= a[y] - a[x]
    den = 1
    for ai in a:
        den *= factorial(r - ai)
    return Fraction(num, den)


def hook_factor_hooks(nu: Partition) -> Fraction:
    den = 1
    for h in nu.hook_lengths():
        den *= h
    return Fraction(1, den)


def hook_factor(nu: Partition) -> Fraction:
    """Reciprocal of the product of hook lengths, computed two ways."""
    value = hook_factor_products(nu)
    if value != hook_factor_hooks(nu):
        raise ArithmeticError(f"hook factor mismatch for {nu}")
    return value


def hook_lemma_check(I: CellIndex) -> bool:
    It = transpose(I)
    return hook_factor(partition_of(I)) == Fraction(path_count(It), factorial(length(It)))


# ---------------------------------------------------------------------------
# semi-infinite cells


@dataclass(frozen=True)
class SemiInfiniteCell:
    """``S = {a_0 < a_1 < ...}`` with ``a_j = j - d`` for every ``j >= len(prefix)``."""

    prefix: tuple[int, ...]
    virtual_dim: int

    def __post_init__(self):
        prefix = tuple(self.prefix)
        object.__setattr__(self, "prefix", prefix)
        if any(a >= b for a, b in zip(prefix, prefix[1:])):
            raise ValueError("prefix must be strictly increasing")
        if prefix and prefix[-1] >= self.tail_start:
            raise ValueError("prefix collides with the tail")
        if self.computed_virtual_dim() != self.virtual_dim:
            raise ValueError("stored virtual dimension is inconsistent")

    @property
    def tail_start(self) -> int:
        return len(self.prefix) - self.virtual_dim

    def elements(self, count: int) -> list[int]:
        """The first ``count`` elements of S."""
        out = list(self.prefix[:count])
        start = self.tail_start
        while len(out) < count:
            out.append(start + len(out) - len(self.prefix))
        return out

    def computed_virtual_dim(self) -> int:
        """|S minus N| - |N minus S|, from the elements alone."""
        start = self.tail_start
        negatives = sum(1 for a in self.prefix if a < 0) + max(0, -start)
        present = {a for a in self.prefix if a >= 0}
        missing = sum(1 for k in range(max(start, 0)) if k not in present)
        return negatives - missing

    def partition(self) -> Partition:
        d = self.virtual_dim
        return Partition.from_parts((j - d) - a for j, a in enumerate(self.prefix))


def semi_infinite(I: CellIndex, d_target: int = 0) -> SemiInfiniteCell:
    """Embed I with balls at ``b + s`` and every box from ``n + 1 + s`` on filled."""
    s = I.size - I.n - 1 - d_target
    return SemiInfiniteCell(tuple(b + s for b in I.elements), d_target)
