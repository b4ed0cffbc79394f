"""Exact scalars, polynomials, rational functions and matrices.

Every number in the library is a :class:`fractions.Fraction`.  Polynomial
coefficients and matrix entries are duck-typed ring elements: rationals in
ordinary use, :class:`MultiPoly` when a computation is run on symbolic
inputs (generic matrices, the ``h`` symbols of Jacobi-Trudi, ...).
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import factorial, lcm
from numbers import Rational
from typing import Any, Callable, Iterable, Mapping, Sequence

from .errors import DegreeBoundError, DimensionError, NoSolutionError

Rat = Fraction

# Degree of the zero polynomial.  Compares below every integer.
NEG_INF = float("-inf")


def as_rat(value: Any) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _coerce(value: Any) -> Any:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed")
    return value


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial, ``coeffs[q]`` is the coefficient of x**q.

    The factorial view ``a_q = q! * coeffs[q]`` (so that the polynomial reads
    ``sum a_q x**q / q!``) is available through :meth:`from_factorial` and
    :meth:`factorial_coeffs`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def zero(cls) -> UniPoly:
        return cls()

    @classmethod
    def one(cls) -> UniPoly:
        return cls([1])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, q: int, coeff: Any = 1) -> UniPoly:
        return cls([0] * q + [coeff])

    @classmethod
    def from_factorial(cls, factorial_coeffs: Iterable[Any]) -> UniPoly:
        return cls(_coerce(a) * Fraction(1, factorial(q)) for q, a in enumerate(factorial_coeffs))

    def factorial_coeffs(self) -> tuple:
        return tuple(c * factorial(q) for q, c in enumerate(self.coeffs))

    @property
    def degree(self):
        """Integer degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, q: int) -> Any:
        return self.coeffs[q] if 0 <= q < len(self.coeffs) else Fraction(0)

    def leading(self) -> Any:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _lift(other: Any) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, MultiPoly)) and not isinstance(other, bool):
            return UniPoly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for q, c in enumerate(b):
            out[q] = out[q] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return UniPoly()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
            return UniPoly(out)
        o = _coerce(other) if _is_number(other) else other
        if isinstance(o, (Fraction, MultiPoly)):
            return UniPoly(c * o for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: UniPoly):
        """Euclidean division over the rationals."""
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def monic(self) -> UniPoly:
        return self * (Fraction(1) / self.leading())

    # calculus and evaluation ---------------------------------------------

    def derivative(self, k: int = 1) -> UniPoly:
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(cs[q] * q for q in range(1, len(cs)))
        return UniPoly(cs)

    def __call__(self, x: Any) -> Any:
        acc: Any = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reciprocal(self, d: int) -> UniPoly:
        """``x**d * f(1/x)``: coefficient ``q`` of the result is coefficient ``d - q`` of ``f``."""
        if self.degree > d:
            raise DegreeBoundError(f"degree bound {d} is below deg f = {self.degree}")
        return UniPoly(self.coeff(d - q) for q in range(d + 1))

    # comparison / display -------------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "x", factorial_basis: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        cs = self.factorial_coeffs() if factorial_basis else self.coeffs
        for q, c in enumerate(cs):
            if not c:
                continue
            if q == 0:
                mono = ""
            elif factorial_basis and q > 1:
                mono = f"{var}^{q}/{q}!"
            elif q == 1:
                mono = var
            else:
                mono = f"{var}^{q}"
            parts.append(_term_str(c, mono))
        return _join_terms(parts)


def _term_str(c: Any, mono: str) -> str:
    if isinstance(c, MultiPoly):
        body = f"({c})"
        return body if not mono else f"{body}*{mono}"
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"


def _join_terms(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def poly_derivative(f: UniPoly) -> UniPoly:
    return f.derivative()


def poly_reciprocal(f: UniPoly, d: int) -> UniPoly:
    return f.reciprocal(d)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# multivariate polynomials


def grlex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key for graded lexicographic order (total degree, then exponents)."""
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial over the rationals in ``nvars`` variables.

    Exponent vectors are tuples of length ``nvars``; no zero coefficient is
    ever stored.  Variables print as ``t1 .. tK`` unless names are supplied.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Any] | None = None):
        self.nvars = nvars
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DimensionError(f"bad exponent vector {exps} for {nvars} variables")
            c = as_rat(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, c: Any) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, k: int) -> MultiPoly:
        """The ``k``-th variable, 1-based."""
        if not 1 <= k <= nvars:
            raise DimensionError(f"variable {k} outside 1..{nvars}")
        exps = [0] * nvars
        exps[k - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def variables(cls, nvars: int) -> list[MultiPoly]:
        return [cls.variable(nvars, k) for k in range(1, nvars + 1)]

    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]))

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    @property
    def total_degree(self):
        return max((sum(e) for e in self._terms), default=NEG_INF)

    def variables_used(self) -> set[int]:
        """1-based indices of the variables that occur with positive exponent."""
        return {k + 1 for e in self._terms for k, x in enumerate(e) if x}

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def with_nvars(self, nvars: int) -> MultiPoly:
        """Pad with unused variables, or drop trailing variables that do not occur."""
        if nvars >= self.nvars:
            pad = (0,) * (nvars - self.nvars)
            return MultiPoly(nvars, {e + pad: c for e, c in self._terms.items()})
        if any(k > nvars for k in self.variables_used()):
            raise DimensionError("cannot drop a variable that occurs")
        return MultiPoly(nvars, {e[:nvars]: c for e, c in self._terms.items()})

    # arithmetic -----------------------------------------------------------

    def _lift(self, other: Any) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if _is_number(other):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_number(other):
            c0 = Fraction(other)
            return MultiPoly(self.nvars, {e: c * c0 for e, c in self._terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_number(other):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if _is_number(other):
            return self._terms == MultiPoly.constant(self.nvars, other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(("MultiPoly", self.nvars, frozenset(self._terms.items())))

    # substitution ---------------------------------------------------------

    def substitute(self, values: Sequence[Any]) -> Any:
        """Evaluate with variable ``k`` replaced by ``values[k-1]`` (any ring elements)."""
        if len(values) != self.nvars:
            raise DimensionError(f"need {self.nvars} values, got {len(values)}")
        powers: dict[tuple[int, int], Any] = {}

        def pw(k: int, e: int):
            if (k, e) not in powers:
                powers[(k, e)] = values[k] if e == 1 else pw(k, e - 1) * values[k]
            return powers[(k, e)]

        acc: Any = Fraction(0)
        for exps, c in self.sorted_terms():
            term: Any = c
            for k, e in enumerate(exps):
                if e:
                    term = term * pw(k, e)
            acc = acc + term
        return acc

    def initial_value(self) -> UniPoly:
        """Specialize ``t = (x, 0, 0, ...)``; the result is a polynomial in x."""
        out: dict[int, Fraction] = {}
        for exps, c in self._terms.items():
            if any(exps[1:]):
                continue
            q = exps[0] if exps else 0
            out[q] = out.get(q, Fraction(0)) + c
        deg = max(out, default=-1)
        return UniPoly(out.get(q, 0) for q in range(deg + 1))

    # display --------------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_str()!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"t{k}" for k in range(1, self.nvars + 1)]
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                names[k] if e == 1 else f"{names[k]}^{e}" for k, e in enumerate(exps) if e
            )
            parts.append(_term_str(c, mono))
        return _join_terms(parts)


def h_from_t(K: int) -> list[MultiPoly]:
    """Complete homogeneous functions h_1..h_K in the times t_1..t_K.

    Uses ``j h_j = sum_{k=1..j} k t_k h_{j-k}``, the z-derivative of
    ``exp(sum t_i z^i) = 1 + sum h_j z^j``.
    """
    if K <= 0:
        return []
    t = MultiPoly.variables(K)
    h = [MultiPoly.constant(K, 1)]
    for j in range(1, K + 1):
        acc = MultiPoly(K)
        for k in range(1, j + 1):
            acc = acc + t[k - 1] * h[j - k] * k
        h.append(acc * Fraction(1, j))
    return h[1:]


# ---------------------------------------------------------------------------
# rational functions


class RatFn:
    """Quotient of two rational polynomials, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        den = UniPoly.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not num.is_zero() and g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        if num.is_zero():
            den = UniPoly.one()
        lead = den.leading()
        self.num = num * (Fraction(1) / lead)
        self.den = den * (Fraction(1) / lead)

    def _lift(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, UniPoly):
            return RatFn(other)
        if _is_number(other):
            return RatFn(UniPoly([other]))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def derivative(self) -> RatFn:
        return RatFn(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x):
        return Fraction(self.num(x)) / self.den(x)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RatFn", self.num, self.den))

    def __repr__(self):
        return f"RatFn({self.num}, {self.den})"

    def __str__(self):
        if self.den == UniPoly.one():
            return str(self.num)
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix stored row-major; indexing is 0-based."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Any]):
        entries = tuple(_coerce(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        """Rows and columns in the order given (0-based)."""
        for i in row_idx:
            if not 0 <= i < self.rows:
                raise DimensionError(f"row {i} out of range")
        for j in col_idx:
            if not 0 <= j < self.cols:
                raise DimensionError(f"column {j} out of range")
        return Matrix(len(row_idx), len(col_idx), [self[i, j] for i in row_idx for j in col_idx])

    def top(self, i: int) -> Matrix:
        return self.submatrix(range(i), range(self.cols))

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def map(self, f: Callable[[Any], Any]) -> Matrix:
        return Matrix(self.rows, self.cols, [f(e) for e in self.entries])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc: Any = Fraction(0)
                for k in range(self.cols):
                    if r[k]:
                        acc = acc + r[k] * other[k, j]
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash(("Matrix", self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({[[str(e) for e in r] for r in self.to_rows()]})"


def column_reversal(m: int) -> Matrix:
    """The m x m anti-identity; ``M @ column_reversal(m)`` reverses the columns of M."""
    return Matrix(m, m, [int(i + j == m - 1) for i in range(m) for j in range(m)])


# ---------------------------------------------------------------------------
# determinants


def _bareiss_int(a: list[list[int]]) -> int:
    """Single-step Bareiss elimination on an integer matrix (mutates ``a``).

    Every division is exact, so all intermediates stay integral.
    """
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * rowk[j]) // prev
            ai[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def _det_rational(rows: list[list[Fraction]]) -> Fraction:
    # Scale each row to integers, eliminate fraction-free, undo the scaling.
    scale = 1
    ints = []
    for r in rows:
        L = reduce(lcm, (Fraction(e).denominator for e in r), 1)
        scale *= L
        ints.append([int(Fraction(e) * L) for e in r])
    return Fraction(_bareiss_int(ints), scale)


def det_subsets(
    rows: Sequence[Sequence[Any]],
    *,
    add: Callable = operator.add,
    sub: Callable = operator.sub,
    mul: Callable = operator.mul,
    one: Any = Fraction(1),
    zero: Any = Fraction(0),
    keep_all: bool = False,
):
    """Division-free determinant by Laplace expansion memoised over column sets.

    ``dp[S]`` is the minor on the first ``|S|`` rows and the columns in ``S``
    (a bitmask).  Works over any commutative ring.  With ``keep_all`` the whole
    table is returned, which yields every top-row-block minor of a rectangular
    matrix in one pass.
    """
    n = len(rows)
    ncols = len(rows[0]) if n else 0
    dp: dict[int, Any] = {0: one}
    layer = [0]
    for r in range(n):
        row = rows[r]
        nxt: dict[int, Any] = {}
        for S in layer:
            base = dp[S]
            if not base:
                continue
            for c in range(ncols):
                bit = 1 << c
                if S & bit:
                    continue
                e = row[c]
                if not e:
                    continue
                # sign: parity of the number of columns in S to the right of c
                above = bin(S >> (c + 1)).count("1")
                term = mul(base, e)
                T = S | bit
                if T in nxt:
                    nxt[T] = sub(nxt[T], term) if above & 1 else add(nxt[T], term)
                else:
                    nxt[T] = sub(zero, term) if above & 1 else term
        dp.update(nxt)
        layer = list(nxt)
    if keep_all:
        return dp
    if n != ncols:
        raise DimensionError("determinant of a non-square matrix")
    return dp.get((1 << n) - 1, zero)


def det(M: Matrix) -> Any:
    """Exact determinant.

    Rational matrices go through fraction-free (Bareiss) elimination on
    row-scaled integers; matrices with polynomial entries use the
    division-free expansion of :func:`det_subsets`.
    """
    if not M.is_square():
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return Fraction(1)
    rows = M.to_rows()
    if all(_is_number(e) for e in M.entries):
        return _det_rational(rows)
    zero = _ring_zero(M.entries)
    return det_subsets(rows, one=zero + 1, zero=zero)


def _ring_zero(entries: Sequence[Any]) -> Any:
    for e in entries:
        if isinstance(e, MultiPoly):
            return MultiPoly(e.nvars)
        if isinstance(e, UniPoly):
            return UniPoly()
    return Fraction(0)


def _check_index_list(idx: Sequence[int], bound: int, what: str) -> None:
    if any(not 1 <= i <= bound for i in idx):
        raise DimensionError(f"{what} index out of range 1..{bound}: {list(idx)}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise DimensionError(f"{what} indices must be strictly increasing: {list(idx)}")


def minor(M: Matrix, row_list: Sequence[int], col_list: Sequence[int]) -> Any:
    """Determinant of the submatrix on the given rows and columns (1-based, increasing)."""
    if len(row_list) != len(col_list):
        raise DimensionError("row and column lists differ in length")
    _check_index_list(row_list, M.rows, "row")
    _check_index_list(col_list, M.cols, "column")
    return det(M.submatrix([i - 1 for i in row_list], [j - 1 for j in col_list]))


def top_minors(M: Matrix) -> dict[tuple[int, ...], Any]:
    """Every minor on rows ``1..k`` and a column set of size ``k``, for all k.

    Keys are increasing 1-based column tuples.  One division-free sweep.
    """
    zero = _ring_zero(M.entries)
    dp = det_subsets(M.to_rows(), one=zero + 1, zero=zero, keep_all=True)
    out = {}
    for S, v in dp.items():
        cols = tuple(c + 1 for c in range(M.cols) if S >> c & 1)
        out[cols] = v
    # column sets that were pruned as zero
    for k in range(1, M.rows + 1):
        for cols in combinations(range(1, M.cols + 1), k):
            out.setdefault(cols, zero)
    return out


# ---------------------------------------------------------------------------
# linear systems


def solve_linear(A: Sequence[Sequence[Any]], b: Sequence[Any]) -> list[Fraction]:
    """One exact solution of ``A x = b`` (free variables set to zero).

    Raises :class:`NoSolutionError` if the system is inconsistent.
    """
    rows = [[as_rat(e) for e in r] + [as_rat(v)] for r, v in zip(A, b)]
    if len(rows) != len(b):
        raise DimensionError("row count of A does not match b")
    ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * bb for a, bb in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][-1]:
            raise NoSolutionError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """Bijection of {1..n} in one-line notation: ``images[i-1] = w(i)``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(i) = self(other(i))``."""
        if self.n != other.n:
            raise DimensionError("permutations of different sizes")
        return Permutation(self(other(i)) for i in range(1, self.n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        w = self.images
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def matrix(self) -> Matrix:
        """Permutation matrix with a 1 in row i, column w(i)."""
        n = self.n
        return Matrix(n, n, [int(self.images[i] == j + 1) for i in range(n) for j in range(n)])

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(("Permutation", self.images))

    def __repr__(self):
        return f"Permutation({list(self.images)})"
