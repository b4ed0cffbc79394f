"""The Wronskian map on matrices and its factorization through Plücker coordinates.

A matrix row ``(b_1, .., b_m)`` is read as the polynomial
``sum_j b_{j+1} t^j / j!``.  ``y_i(M)`` is the Wronskian of the first ``i``
row polynomials; the contraction map rebuilds the same polynomial from the
``i x i`` minors of the top rows weighted by path counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, lcm
from typing import Any, Mapping, Sequence

from .cells import CellIndex, all_cells, length, path_count
from .errors import (
    ArityError,
    ClassificationError,
    CompletenessError,
    DimensionError,
    ShapeError,
    SingularMatrixError,
)
from .exact import Matrix, Permutation, UniPoly, det, det_subsets, minor, top_minors

DegreeVector = tuple[int, ...]


def row_polys(M: Matrix) -> list[UniPoly]:
    if M.cols < 1:
        raise ShapeError("matrix needs at least one column")
    return [UniPoly.from_factorial(M.row(i)) for i in range(M.rows)]


def coefficient_matrix(fs: Sequence[UniPoly], width: int | None = None) -> Matrix:
    """Inverse of :func:`row_polys`: row r holds the factorial coefficients of ``fs[r]``."""
    if width is None:
        width = max((len(f.coeffs) for f in fs), default=0) or 1
    rows = []
    for f in fs:
        if len(f.coeffs) > width:
            raise DimensionError(f"polynomial of degree {f.degree} does not fit {width} columns")
        a = f.factorial_coeffs()
        rows.append(list(a) + [0] * (width - len(a)))
    return Matrix.from_rows(rows)


# ---------------------------------------------------------------------------
# Wronskians


def _ip_norm(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _ip_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for k, v in enumerate(b):
        c[k] += v
    return _ip_norm(c)


def _ip_sub(a: tuple, b: tuple) -> tuple:
    c = list(a) + [0] * max(0, len(b) - len(a))
    for k, v in enumerate(b):
        c[k] -= v
    return _ip_norm(c)


def _ip_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return _ip_norm(c)


def _ip_derivative(a: tuple) -> tuple:
    return tuple(a[q] * q for q in range(1, len(a)))


def _rational_coeffs(fs: Sequence[UniPoly]) -> bool:
    return all(isinstance(c, Fraction) for f in fs for c in f.coeffs)


def _derivative_rows(fs: Sequence[UniPoly], orders: Sequence[int]) -> Any:
    """Matrix ``(f_r^{(orders[c])})`` as a row list, plus a denominator to divide by."""
    if _rational_coeffs(fs):
        # integer fast path: clear each row's denominators, differentiate exactly
        rows, scale = [], 1
        for f in fs:
            L = reduce(lcm, (c.denominator for c in f.coeffs), 1)
            scale *= L
            p = tuple(int(c * L) for c in f.coeffs)
            derivs = {}
            cur, k = p, 0
            for order in sorted(set(orders)):
                while k < order:
                    cur, k = _ip_derivative(cur), k + 1
                derivs[order] = _ip_norm(list(cur))
            rows.append([derivs[o] for o in orders])
        return rows, scale
    return [[f.derivative(o) for o in orders] for f in fs], None


def _det_of_rows(rows, scale) -> UniPoly:
    if scale is not None:
        value = det_subsets(rows, add=_ip_add, sub=_ip_sub, mul=_ip_mul, one=(1,), zero=())
        return UniPoly(Fraction(c, scale) for c in value)
    return det_subsets(rows, one=UniPoly.one(), zero=UniPoly())


def wronskian(fs: Sequence[UniPoly]) -> UniPoly:
    """``det (f_r^{(j)})`` for ``r, j = 0..k-1``."""
    if not fs:
        raise ArityError("the Wronskian of an empty tuple is undefined")
    rows, scale = _derivative_rows(fs, range(len(fs)))
    return _det_of_rows(rows, scale)


def generalized_wronskian(fs: Sequence[UniPoly], I: CellIndex | Sequence[int]) -> UniPoly:
    """Minor of the infinite Wronskian matrix on the first ``k = |I|`` functions and
    derivative orders ``b - 1`` for ``b`` in I.

    With this indexing the derivative is the sum over creation moves of I, e.g.
    ``W_{13}' = W_{23} + W_{14}``.
    """
    els = tuple(I.elements if isinstance(I, CellIndex) else I)
    k = len(els)
    if k == 0:
        return UniPoly.one()
    if k > len(fs):
        raise DimensionError(f"|I| = {k} exceeds the {len(fs)} available functions")
    if any(b < 1 for b in els) or any(a >= b for a, b in zip(els, els[1:])):
        raise DimensionError(f"I must be an increasing list of positive integers: {els}")
    rows, scale = _derivative_rows(fs[:k], [b - 1 for b in els])
    return _det_of_rows(rows, scale)


@dataclass(frozen=True)
class WronskyImage:
    polys: tuple[UniPoly, ...]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        # the 1-based __getitem__ would otherwise stop iteration at index 0
        return iter(self.polys)

    def __getitem__(self, i: int) -> UniPoly:
        """``img[i]`` is ``y_i``, 1-based, matching the subscript."""
        if not 1 <= i <= len(self.polys):
            raise IndexError(i)
        return self.polys[i - 1]

    def degrees(self) -> tuple:
        return tuple(p.degree for p in self.polys)


def wronskian_component(M: Matrix, i: int) -> UniPoly:
    """``y_i(M)``: Wronskian of the first ``i`` row polynomials."""
    if not 1 <= i <= M.rows:
        raise DimensionError(f"row count {i} outside 1..{M.rows}")
    return wronskian(row_polys(M)[:i])


def wronsky_map(M: Matrix) -> WronskyImage:
    """``(y_1(M), .., y_{n-1}(M))`` for an n x m matrix with n <= m."""
    if M.rows > M.cols:
        raise ShapeError(f"need rows <= columns, got {M.rows}x{M.cols}")
    bs = row_polys(M)
    return WronskyImage(tuple(wronskian(bs[:i]) for i in range(1, M.rows)))


# ---------------------------------------------------------------------------
# Plücker coordinates and the contraction map


def pluecker(M: Matrix, i: int) -> dict[CellIndex, Any]:
    """Minors on rows ``1..i`` for every i-subset of columns."""
    if not 1 <= i <= M.rows:
        raise DimensionError(f"row count {i} outside 1..{M.rows}")
    top = list(range(1, i + 1))
    return {I: minor(M, top, I.elements) for I in all_cells(M.cols, i)}


def contraction(i: int, n: int, pluecker_values: Mapping[CellIndex, Any]) -> UniPoly:
    """``sum_I m(I) a_I t^{l(I)} / l(I)!`` over all i-subsets of {1..n}."""
    by_level: dict[int, Any] = {}
    for I in all_cells(n, i):
        if I not in pluecker_values:
            raise CompletenessError(f"missing Plücker value for {I}")
        a = pluecker_values[I]
        if a:
            q = length(I)
            by_level[q] = by_level.get(q, Fraction(0)) + path_count(I) * a
    top = max(by_level, default=-1)
    return UniPoly.from_factorial(by_level.get(q, 0) for q in range(top + 1))


# ---------------------------------------------------------------------------
# unit Wronskian


def unit_wronskian(n: int) -> Matrix:
    """n x n matrix with entry ``x^{q-p}/(q-p)!`` in row p, column q (zero below the diagonal)."""
    return Matrix(
        n, n,
        [UniPoly.monomial(q - p, Fraction(1, factorial(q - p))) if q >= p else UniPoly()
         for p in range(n) for q in range(n)],
    )


@lru_cache(maxsize=None)
def _unit_minors(n: int) -> dict:
    return top_minors(unit_wronskian(n))


def unit_wronskian_minor(n: int, i: int, I: CellIndex) -> UniPoly:
    """Minor of the unit Wronskian on rows ``1..i`` and the columns in ``I``."""
    if I.n != n or I.size != i:
        raise DimensionError(f"{I} is not an {i}-subset of 1..{n}")
    return _unit_minors(n)[I.elements]


# ---------------------------------------------------------------------------
# degrees and Bruhat cells


def degree_vector(g: Matrix) -> DegreeVector:
    if not g.is_square():
        raise ShapeError("degree vectors need a square matrix")
    if det(g) == 0:
        raise SingularMatrixError("singular matrix")
    return tuple(int(d) for d in wronsky_map(g).degrees())


def permutation_degrees(w: Permutation) -> DegreeVector:
    """``d_i(w) = sum_{j<=i} w(j) - i(i+1)/2``, the degrees on the cell of w."""
    out, acc = [], 0
    for i in range(1, w.n):
        acc += w(i)
        out.append(acc - i * (i + 1) // 2)
    return tuple(out)


def permutation_from_degrees(degrees: Sequence[int]) -> Permutation:
    n = len(degrees) + 1
    prev, images = 0, []
    for i, d in enumerate(degrees, start=1):
        images.append(d - prev + i)
        prev = d
    images.append(n * (n + 1) // 2 - sum(images))
    try:
        return Permutation(images)
    except ValueError as exc:
        raise ClassificationError(f"degrees {tuple(degrees)} do not come from a permutation") from exc


def bruhat_cell(g: Matrix) -> Permutation:
    """The permutation ``w`` with ``g`` in ``B_- w B_-``, read off the degree vector."""
    degrees = degree_vector(g)
    w = permutation_from_degrees(degrees)
    if permutation_degrees(w) != degrees:
        raise ClassificationError("degree vector does not round-trip")
    return w
