"""Independent reference implementations used only by the tests.

Nothing here imports the package's determinant, path or Schur code; the
point is to have a second derivation of every quantity.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import sympy as sp


def cofactor_det(rows):
    """Laplace expansion along the first row.  Exponential, fine for size <= 6."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        if rows[0][c] == 0:
            continue
        sub = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * cofactor_det(sub)
        total = total - term if c % 2 else total + term
    return total


def enumerate_paths(n, target):
    """Every sequence of single-ball moves from {1..i} to ``target`` (tuples)."""
    target = tuple(target)
    start = tuple(range(1, len(target) + 1))
    out = []

    def walk(state, path):
        if state == target:
            out.append(path)
            return
        for p, b in enumerate(state):
            # a ball may move right into an empty box, never past the target
            if b + 1 <= target[p] and (b + 1) not in state and b + 1 <= n:
                nxt = state[:p] + (b + 1,) + state[p + 1:]
                walk(nxt, path + [nxt])

    walk(start, [start])
    return out


def all_subsets(n, i):
    return list(combinations(range(1, n + 1), i))


x = sp.Symbol("x")


def to_sympy(f):
    return sum((sp.Rational(c.numerator, c.denominator) * x**q for q, c in enumerate(f.coeffs)), sp.Integer(0))


def sympy_wronskian(exprs):
    k = len(exprs)
    return sp.expand(sp.Matrix(k, k, lambda r, c: sp.diff(exprs[r], x, c)).det())


def sympy_kdv_residual(tau_expr):
    u = 2 * sp.diff(sp.log(tau_expr), x, 2)
    return sp.simplify(6 * u * sp.diff(u, x) + sp.diff(u, x, 3))


def series_h(K):
    """h_1..h_K read off the Taylor series of exp(sum t_i z^i)."""
    z = sp.Symbol("z")
    ts = sp.symbols(f"t1:{K + 1}")
    series = sp.series(sp.exp(sum(t * z ** (i + 1) for i, t in enumerate(ts))), z, 0, K + 1).removeO()
    poly = sp.Poly(sp.expand(series), z)
    return ts, [sp.expand(poly.coeff_monomial(z**j)) for j in range(1, K + 1)]


def bialternant_schur(parts, nvars):
    """s_nu(x_1..x_N) as det(x_i^(nu_j + N - j)) / Vandermonde."""
    xs = sp.symbols(f"x1:{nvars + 1}")
    lam = list(parts) + [0] * (nvars - len(parts))
    num = sp.Matrix(nvars, nvars, lambda i, j: xs[i] ** (lam[j] + nvars - 1 - j)).det()
    den = sp.Matrix(nvars, nvars, lambda i, j: xs[i] ** (nvars - 1 - j)).det()
    return xs, sp.expand(sp.cancel(num / den))


def hook_length_count(parts):
    """Standard Young tableaux of shape ``parts`` by the hook length formula."""
    from math import factorial

    size = sum(parts)
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    prod = 1
    for r, row in enumerate(parts):
        for c in range(row):
            prod *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(size) // prod
