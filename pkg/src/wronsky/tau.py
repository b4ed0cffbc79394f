"""Schur functions in KP times and tau-functions of matrix row blocks.

``tau(M, i)`` sums the top-row Plücker coordinates of M against Schur
functions of the partitions attached to the column subsets.  Setting every
time but ``t_1 = x`` to zero gives ``tau_initial``, which is the Wronskian
component ``y_i`` of the column-reversed matrix up to the sign of reversing
i columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping, Sequence

from .cells import CellIndex, Partition, all_cells, hook_factor, partition_of, transpose
from .errors import DimensionError, TruncationError
from .exact import (
    Matrix,
    MultiPoly,
    RatFn,
    UniPoly,
    column_reversal,
    det,
    h_from_t,
    minor,
)
from .maps import coefficient_matrix, pluecker, wronskian


def required_times(nu: Partition) -> int:
    """Largest ``j`` such that ``h_j`` occurs in the Jacobi-Trudi determinant of ``nu``."""
    return nu.parts[0] + len(nu) - 1 if nu.parts else 0


@lru_cache(maxsize=None)
def schur_h(nu: Partition, nvars: int | None = None) -> MultiPoly:
    """``det(h_{nu_i - i + j})`` as a polynomial in the symbols ``h_1..h_N``."""
    N = required_times(nu) if nvars is None else nvars
    if N < required_times(nu):
        raise TruncationError(f"{nu} needs h_1..h_{required_times(nu)}")
    h = [MultiPoly.constant(N, 1)] + MultiPoly.variables(N)
    zero = MultiPoly(N)
    r = len(nu)

    def entry(k: int) -> MultiPoly:
        return h[k] if k >= 0 else zero

    mat = Matrix(r, r, [entry(nu.parts[i] - i + j) for i in range(r) for j in range(r)])
    value = det(mat)
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(N, value)


@lru_cache(maxsize=None)
def schur_t(nu: Partition, K: int) -> MultiPoly:
    """Schur function in the times ``t_1..t_K``."""
    need = required_times(nu)
    if K < need:
        raise TruncationError(f"s_{nu} needs K >= {need}, got {K}")
    if need == 0:
        return MultiPoly.constant(K, 1)
    hs = h_from_t(K)[:need]
    return schur_h(nu).substitute(hs)


def schur_initial(nu: Partition) -> UniPoly:
    """``s_nu(x, 0, 0, ..)`` = hook factor times ``x^|nu|``."""
    return UniPoly.monomial(nu.size, hook_factor(nu))


def toeplitz_matrix(n: int) -> Matrix:
    """Upper triangular Toeplitz matrix ``T[p][q] = h_{q-p}`` in the symbols ``h_1..h_{n-1}``."""
    N = max(n - 1, 0)
    h = [MultiPoly.constant(N, 1)] + MultiPoly.variables(N)
    zero = MultiPoly(N)
    return Matrix(n, n, [h[q - p] if q >= p else zero for p in range(n) for q in range(n)])


def toeplitz_schur_check(I: CellIndex) -> bool:
    """Schur function of ``nu(I)`` versus the minor of T on rows ``1..i`` and columns ``I^t``."""
    n, i = I.n, I.size
    lhs = schur_h(partition_of(I), max(n - 1, 0))
    value = minor(toeplitz_matrix(n), list(range(1, i + 1)), transpose(I).elements)
    rhs = value if isinstance(value, MultiPoly) else MultiPoly.constant(max(n - 1, 0), value)
    return lhs == rhs


# ---------------------------------------------------------------------------
# tau-functions


@dataclass(frozen=True)
class TauFunction:
    value: MultiPoly
    shape: tuple[int, int]
    rows: int

    @property
    def K(self) -> int:
        return self.value.nvars

    def initial_value(self) -> UniPoly:
        return self.value.initial_value()


def tau_from_pluecker(i: int, m: int, values: Mapping[CellIndex, Any], K: int | None = None) -> MultiPoly:
    """``sum_I a_I s_{nu(I)}(t_1..t_K)`` over the i-subsets of {1..m}."""
    K = max(m - 1, 0) if K is None else K
    if K < m - 1:
        raise TruncationError(f"{m} columns need K >= {m - 1}, got {K}")
    acc = MultiPoly(K)
    for I in all_cells(m, i):
        a = values.get(I, 0)
        if a:
            acc = acc + schur_t(partition_of(I), K) * a
    return acc


def tau(M: Matrix, i: int, K: int | None = None) -> TauFunction:
    if not 1 <= i <= M.rows:
        raise DimensionError(f"row count {i} outside 1..{M.rows}")
    value = tau_from_pluecker(i, M.cols, pluecker(M, i), K)
    return TauFunction(value, M.shape, i)


def tau_initial(M: Matrix, i: int) -> UniPoly:
    """``tau(M, i)`` at ``t = (x, 0, 0, ..)``, summed directly from hook factors."""
    if not 1 <= i <= M.rows:
        raise DimensionError(f"row count {i} outside 1..{M.rows}")
    by_degree: dict[int, Fraction] = {}
    for I, a in pluecker(M, i).items():
        if a:
            nu = partition_of(I)
            by_degree[nu.size] = by_degree.get(nu.size, Fraction(0)) + a * hook_factor(nu)
    top = max(by_degree, default=-1)
    return UniPoly(by_degree.get(q, 0) for q in range(top + 1))


def reversal_sign(i: int) -> int:
    """Sign of the permutation reversing ``i`` columns."""
    return -1 if (i * (i - 1) // 2) % 2 else 1


def wronskian_tau_check(fs: Sequence[UniPoly]) -> bool:
    """Initial tau value of the subspace spanned by ``fs`` versus ``W(fs)``.

    The subspace is encoded by the coefficient matrix of ``fs`` read right to
    left (the ``f(1/z)`` substitution); the identity then holds up to the
    reversal sign.
    """
    if not fs:
        raise DimensionError("need at least one polynomial")
    m = len(fs)
    d = max((f.degree for f in fs if not f.is_zero()), default=0)
    width = max(d + 1, m)
    M = coefficient_matrix(fs, width)
    lhs = tau_initial(M @ column_reversal(width), m)
    return lhs == wronskian(fs) * reversal_sign(m)


# ---------------------------------------------------------------------------
# stationary KdV


def kdv_residual(tau0: UniPoly) -> RatFn:
    """``6 u u_x + u_xxx`` for ``u = 2 (log tau)''``."""
    if tau0.is_zero():
        raise ZeroDivisionError("tau is identically zero")
    d1, d2 = tau0.derivative(), tau0.derivative(2)
    u = RatFn((d2 * tau0 - d1 * d1) * 2, tau0 * tau0)
    ux = u.derivative()
    uxxx = ux.derivative().derivative()
    return u * ux * 6 + uxxx
