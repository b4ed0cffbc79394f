import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import lower_triangular, small_ints
from wronsky import DimensionError, Matrix, MultiPoly, NormalizationError, wronsky_map
from wronsky.reconstruct import (
    LexCoordinates,
    coordinate_order,
    coordinate_value,
    lex_coordinates,
    reconstruct_from_image,
    reconstruct_unitriangular,
    unknown_order,
)


def symbolic_unitriangular(n):
    order = unknown_order(n)
    V = MultiPoly.variables(len(order))
    entries = [1 if r == c else 0 for r in range(n) for c in range(n)]
    for k, (r, c) in enumerate(order):
        entries[(r - 1) * n + c - 1] = V[k]
    return Matrix(n, n, entries)


@st.composite
def unitriangular(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    L = draw(lower_triangular(n, unit=True))
    return Matrix(n, n, [L[c, r] for r in range(n) for c in range(n)])


def test_orders_line_up():
    assert unknown_order(4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert coordinate_order(4) == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]


def test_identity_has_zero_coordinates():
    for n in range(1, 7):
        assert list(lex_coordinates(wronsky_map(Matrix.identity(n)), n)) == [0] * (n * (n - 1) // 2)


def test_n2_example():
    assert reconstruct_unitriangular([Fraction(7, 3)], 2) == Matrix.from_rows([[1, Fraction(7, 3)], [0, 1]])


def test_n3_y2_linear_coordinate_is_entry_23():
    g = symbolic_unitriangular(3)
    coords = lex_coordinates(wronsky_map(g), 3)
    assert coords.values[2] == g[1, 2]


def test_n5_symbolic_y2_quadratic_coordinate():
    g = symbolic_unitriangular(5)
    coords = lex_coordinates(wronsky_map(g), 5)
    a1, a2 = g[0, 1], g[0, 2]
    b2, b3 = g[1, 2], g[1, 3]
    assert coords.values[5] == b3 + a1 * b2 - a2


def test_n5_symbolic_round_trip():
    g = symbolic_unitriangular(5)
    assert reconstruct_unitriangular(lex_coordinates(wronsky_map(g), 5)) == g


def test_sweep_recovers_entries_in_row_major_order():
    # entry k of the answer depends only on coordinates 1..k
    rng = random.Random(3)
    n = 5
    base = [Fraction(rng.randint(-9, 9)) for _ in range(n * (n - 1) // 2)]
    g = reconstruct_unitriangular(base, n)
    order = unknown_order(n)
    for k in range(len(base)):
        bumped = base[:k] + [b + 1 for b in base[k:]]
        h = reconstruct_unitriangular(bumped, n)
        for r, c in order[:k]:
            assert h[r - 1, c - 1] == g[r - 1, c - 1]
        r, c = order[k]
        assert h[r - 1, c - 1] == g[r - 1, c - 1] + 1


@settings(max_examples=80)
@given(unitriangular())
def test_round_trip(g):
    n = g.rows
    assert reconstruct_unitriangular(lex_coordinates(wronsky_map(g), n)) == g


@settings(max_examples=60)
@given(unitriangular(), st.data())
def test_unknown_k_moves_coordinate_k_one_for_one(g, data):
    n = g.rows
    order = unknown_order(n)
    k = data.draw(st.integers(0, len(order) - 1))
    bump = data.draw(small_ints.filter(bool))
    entries = list(g.entries)
    for r, c in order[k + 1:]:
        entries[(r - 1) * n + c - 1] = 0
    i, q = coordinate_order(n)[k]
    before = coordinate_value(Matrix(n, n, entries), i, q)
    r, c = order[k]
    entries[(r - 1) * n + c - 1] += bump
    assert coordinate_value(Matrix(n, n, entries), i, q) - before == bump


@settings(max_examples=40)
@given(unitriangular(max_n=5))
def test_full_polynomials_give_same_matrix(g):
    # the image carries coefficients beyond the truncation; they are ignored
    img = wronsky_map(g)
    assert reconstruct_from_image(img, g.rows) == g


def test_coordinates_are_factorial_coefficients():
    g = Matrix.from_rows([[1, 2, 3], [0, 1, 4], [0, 0, 1]])
    img = wronsky_map(g)
    coords = lex_coordinates(img, 3)
    assert list(coords) == list(img[1].factorial_coeffs()[1:3]) + list(img[2].factorial_coeffs()[1:2])


def test_non_unipotent_input_rejected():
    g = Matrix.from_rows([[2, 1], [0, 1]])
    with pytest.raises(NormalizationError):
        lex_coordinates(wronsky_map(g), 2)
    # y_1 = 2 + x
    assert list(lex_coordinates(wronsky_map(g), 2, check_unit=False)) == [1]


def test_wrong_length():
    with pytest.raises(DimensionError):
        LexCoordinates(3, (1, 2))
    with pytest.raises(DimensionError):
        reconstruct_unitriangular(LexCoordinates(2, (1,)), 3)


def test_parse_is_exact():
    assert LexCoordinates.parse(2, ["1/3"]).values == (Fraction(1, 3),)
    with pytest.raises((TypeError, ValueError)):
        LexCoordinates.parse(2, [0.5])
