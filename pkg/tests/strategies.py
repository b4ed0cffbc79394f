from fractions import Fraction

from hypothesis import strategies as st

from wronsky import CellIndex, Matrix, Partition, UniPoly

small_ints = st.integers(-9, 9)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


@st.composite
def matrices(draw, rows=None, cols=None, max_size=5, elements=rationals):
    n = draw(st.integers(1, max_size)) if rows is None else rows
    m = draw(st.integers(n, max(n, max_size))) if cols is None else cols
    return Matrix.from_rows([[draw(elements) for _ in range(m)] for _ in range(n)])


@st.composite
def square_matrices(draw, min_size=1, max_size=5, elements=small_ints):
    n = draw(st.integers(min_size, max_size))
    return Matrix.from_rows([[draw(elements) for _ in range(n)] for _ in range(n)])


@st.composite
def lower_triangular(draw, n, unit=False):
    diag = st.just(1) if unit else st.sampled_from([-3, -2, -1, 1, 2, 3])
    return Matrix(n, n, [draw(diag) if r == c else (draw(small_ints) if c < r else 0)
                         for r in range(n) for c in range(n)])


@st.composite
def polys(draw, max_degree=5):
    return UniPoly(draw(st.lists(rationals, min_size=0, max_size=max_degree + 1)))


@st.composite
def cells(draw, max_n=8, min_size=0):
    n = draw(st.integers(max(1, min_size), max_n))
    i = draw(st.integers(min_size, n))
    els = draw(st.lists(st.integers(1, n), min_size=i, max_size=i, unique=True))
    return CellIndex(n, tuple(sorted(els)))


@st.composite
def partitions(draw, max_rows=5, max_cols=5):
    parts = draw(st.lists(st.integers(1, max_cols), max_size=max_rows))
    return Partition.from_parts(parts)
