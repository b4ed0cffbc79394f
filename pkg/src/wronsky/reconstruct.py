"""Recover a unitriangular matrix from truncated Wronskian data.

For upper unitriangular ``g`` every ``y_i(g)`` has constant term 1.  The
coordinates used here are the factorial coefficients ``1..n-i`` of each
``y_i``, read in order ``y_1, y_2, ..``.  Coordinate ``(i, q)`` depends on
the entry ``g[i][i+q]`` with slope one and otherwise only on entries that
come earlier in row-major order, so a single forward sweep inverts the map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, Sequence

from .cells import all_cells, length, path_count
from .errors import DimensionError, NormalizationError, VerificationError
from .exact import Matrix, as_rat, minor
from .maps import WronskyImage, wronsky_map


def unknown_order(n: int) -> list[tuple[int, int]]:
    """Strictly upper entries ``(row, col)``, 1-based, in row-major order."""
    return [(r, c) for r in range(1, n) for c in range(r + 1, n + 1)]


def coordinate_order(n: int) -> list[tuple[int, int]]:
    """Pairs ``(i, q)``: factorial coefficient q of ``y_i``."""
    return [(i, q) for i in range(1, n) for q in range(1, n - i + 1)]


@dataclass(frozen=True)
class LexCoordinates:
    n: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        expected = self.n * (self.n - 1) // 2
        if len(self.values) != expected:
            raise DimensionError(f"n={self.n} needs {expected} coordinates, got {len(self.values)}")

    @classmethod
    def parse(cls, n: int, values: Sequence[Any]) -> LexCoordinates:
        return cls(n, tuple(as_rat(v) for v in values))

    def __iter__(self) -> Iterator[Any]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterator[tuple[tuple[int, int], Any]]:
        return zip(coordinate_order(self.n), self.values)


def lex_coordinates(img: WronskyImage, n: int, check_unit: bool = True) -> LexCoordinates:
    if len(img) != n - 1:
        raise DimensionError(f"expected {n - 1} Wronskian components, got {len(img)}")
    out = []
    for i in range(1, n):
        a = img[i].factorial_coeffs()
        if check_unit and (a[0] if a else 0) != 1:
            raise NormalizationError(f"y_{i} has constant term {a[0] if a else 0}, not 1")
        out.extend(a[q] if q < len(a) else 0 for q in range(1, n - i + 1))
    return LexCoordinates(n, tuple(out))


@lru_cache(maxsize=None)
def _level(n: int, i: int, q: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((I.elements, path_count(I)) for I in all_cells(n, i) if length(I) == q)


def coordinate_value(g: Matrix, i: int, q: int) -> Any:
    """``sum m(I) Delta_{[i],I}(g)`` over i-subsets of length q."""
    rows = list(range(1, i + 1))
    acc: Any = 0
    for cols, mult in _level(g.cols, i, q):
        acc = acc + minor(g, rows, cols) * mult
    return acc


def reconstruct_unitriangular(target: LexCoordinates | Sequence[Any], n: int | None = None) -> Matrix:
    """The unique unitriangular ``g`` with the given coordinates.

    Entries may be rationals or any ring elements (e.g. MultiPoly symbols);
    the sweep uses only ring operations.
    """
    if not isinstance(target, LexCoordinates):
        if n is None:
            raise ValueError("n is required when target is a plain sequence")
        target = LexCoordinates(n, tuple(target))
    elif n is not None and n != target.n:
        raise DimensionError(f"coordinates are for n={target.n}, not {n}")
    n = target.n
    entries: list[Any] = [1 if r == c else 0 for r in range(n) for c in range(n)]
    for (i, q), want in target.items():
        r, c = i - 1, i + q - 1
        entries[r * n + c] = 0
        have = coordinate_value(Matrix(n, n, entries), i, q)
        entries[r * n + c] = want - have
    g = Matrix(n, n, entries)
    if n > 1 and lex_coordinates(wronsky_map(g), n) != target:
        raise VerificationError("reconstructed matrix does not reproduce the coordinates")
    return g


def reconstruct_from_image(img: WronskyImage, n: int) -> Matrix:
    """Round trip helper; extra coefficients beyond the truncation are ignored."""
    return reconstruct_unitriangular(lex_coordinates(img, n))
