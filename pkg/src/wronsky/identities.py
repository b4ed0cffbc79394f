"""Checkers for the classical Wronskian and determinant identities.

Each checker computes both sides independently and returns an
:class:`IdentityReport`; none of them raises on a failed identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import ArityError, DimensionError, ShapeError
from .exact import Matrix, UniPoly, det, minor, solve_linear
from .maps import row_polys, wronskian, wronskian_component
from .serialize import to_json_value


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    lhs: Any
    rhs: Any
    context: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def render(v):
            if isinstance(v, int) or (isinstance(v, list) and all(isinstance(x, int) for x in v)):
                return v
            try:
                return to_json_value(v)
            except TypeError:
                return str(v)

        return {
            "name": self.name,
            "holds": self.holds,
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "context": {k: render(v) for k, v in self.context.items()},
        }


def _report(name: str, lhs: Any, rhs: Any, **context: Any) -> IdentityReport:
    return IdentityReport(name, (lhs - rhs) == 0, lhs, rhs, context)


def _w(fs: Sequence[UniPoly]) -> UniPoly:
    # the Wronskian of the empty tuple is 1 by convention here
    return wronskian(fs) if fs else UniPoly.one()


def w5_check(fs: Sequence[UniPoly], a: int) -> IdentityReport:
    """``W(W(f_A), W(f_B)) = W(f_{A&B}) W(f_{A|B})`` for ``A = [a+1]``, ``B = [a] + {a+2}``."""
    if a < 0:
        raise DimensionError("a must be nonnegative")
    if len(fs) < a + 2:
        raise ArityError(f"need at least {a + 2} functions for a={a}, got {len(fs)}")
    fA = list(fs[: a + 1])
    fB = list(fs[:a]) + [fs[a + 1]]
    lhs = wronskian([_w(fA), _w(fB)])
    rhs = _w(list(fs[:a])) * _w(list(fs[: a + 2]))
    return _report("w5", lhs, rhs, a=a)


def _delete(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    keep_r = [r for r in range(A.rows) if r + 1 not in rows]
    keep_c = [c for c in range(A.cols) if c + 1 not in cols]
    return A.submatrix(keep_r, keep_c)


def desnanot_jacobi_check(A: Matrix) -> IdentityReport:
    """``det A det A_{1n,1n} = det A_{1,1} det A_{n,n} - det A_{1,n} det A_{n,1}``.

    ``A_{I,J}`` deletes the rows in I and the columns in J.  Entries may come
    from any commutative ring the determinant supports.
    """
    if not A.is_square():
        raise ShapeError("Desnanot-Jacobi needs a square matrix")
    n = A.rows
    if n < 3:
        raise DimensionError(f"size must be at least 3, got {n}")
    lhs = det(A) * det(_delete(A, [1, n], [1, n]))
    rhs = (det(_delete(A, [1], [1])) * det(_delete(A, [n], [n]))
           - det(_delete(A, [1], [n])) * det(_delete(A, [n], [1])))
    return _report("desnanot-jacobi", lhs, rhs, size=n)


def wronskian_matrix(fs: Sequence[UniPoly]) -> Matrix:
    """Square matrix with ``f_r^{(c)}`` in row r, column c."""
    k = len(fs)
    return Matrix(k, k, [f.derivative(c) for f in fs for c in range(k)])


def elementary(n: int, row: int, col: int, c: Any) -> Matrix:
    """Identity plus ``c`` at the 1-based position ``(row, col)``."""
    entries: list[Any] = [1 if r == s else 0 for r in range(n) for s in range(n)]
    entries[(row - 1) * n + col - 1] = c
    return Matrix(n, n, entries)


def mutation_check(M: Matrix, c: Any) -> IdentityReport:
    """``W(y_2(M), y_2(e_23(c) M)) = c y_1(M) y_3(M)``; also records that y_1 is unchanged."""
    if M.rows < 3 or M.cols < 3:
        raise ShapeError(f"mutation needs at least 3 rows and 3 columns, got {M.rows}x{M.cols}")
    moved = elementary(M.rows, 2, 3, c) @ M
    y1, y2, y3 = (wronskian_component(M, i) for i in (1, 2, 3))
    lhs = wronskian([y2, wronskian_component(moved, 2)])
    rhs = y1 * y3 * c
    return _report("mutation", lhs, rhs, y1_unchanged=wronskian_component(moved, 1) == y1)


def mutation_partner(M: Matrix) -> UniPoly:
    """``W(b_1, b_3)``: the change of ``y_2`` per unit of c under ``e_23(c)``."""
    if M.rows < 3:
        raise ShapeError("need at least 3 rows")
    b = row_polys(M)
    return wronskian([b[0], b[2]])


def mutation_solve(y1: UniPoly, y2: UniPoly, y3: UniPoly, c: Any) -> UniPoly:
    """Solve ``W(y2, y) = c y1 y3`` for ``y = y2 + c z``.

    ``z`` solves ``y2 z' - y2' z = y1 y3``; it is defined up to multiples of
    ``y2`` and is pinned down by a zero coefficient at ``x^{deg y2}``.
    """
    if y2.is_zero():
        raise ValueError("y2 must be nonzero")
    rhs = y1 * y3
    if c == 0 or rhs.is_zero():
        return y2
    d2 = int(y2.degree)
    D = max(int(y1.degree) + int(y3.degree) - d2 + 1, d2)
    dy2 = y2.derivative()
    # column j is the image of z = x^j
    images = [y2 * UniPoly.monomial(j - 1, j) - dy2 * UniPoly.monomial(j) if j else -dy2 for j in range(D + 1)]
    top = max(D + d2, int(rhs.degree))
    A = [[img.coeff(k) for img in images] for k in range(top + 1)]
    b = [rhs.coeff(k) for k in range(top + 1)]
    A.append([1 if j == d2 else 0 for j in range(D + 1)])
    b.append(0)
    z = UniPoly(solve_linear(A, b))
    return y2 + z * c


def pluecker_relation_check(M: Matrix, cols: Sequence[int] = (1, 2, 3, 4)) -> IdentityReport:
    """``D_pq D_rs - D_pr D_qs + D_ps D_qr = 0`` for the top two rows."""
    if M.rows < 2 or M.cols < 4:
        raise ShapeError(f"need at least 2 rows and 4 columns, got {M.rows}x{M.cols}")
    p, q, r, s = cols

    def D(a: int, b: int) -> Any:
        return minor(M, [1, 2], [a, b])

    lhs = D(p, q) * D(r, s) - D(p, r) * D(q, s) + D(p, s) * D(q, r)
    return _report("pluecker", lhs, 0, columns=list(cols))
