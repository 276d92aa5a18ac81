import random
from fractions import Fraction

import pytest

from tbh.errors import DimensionMismatch
from tbh.matrices import Matrix, charpoly2, mat_eq, rank_exact
from tbh.scalars import sqrt_checked


def test_identity_is_neutral():
    a = Matrix([[1, 2], [3, 4]])
    assert Matrix.identity(2) * a == a
    assert a * Matrix.identity(2) == a


def test_mat_eq_reflexive_and_exact():
    a = Matrix([[Fraction(1, 3), 0], [0, 1]])
    assert mat_eq(a, a)
    b = Matrix([[Fraction(1, 3) + Fraction(1, 10**12), 0], [0, 1]])
    assert not mat_eq(a, b)  # exact comparison for rational entries


def test_mat_eq_tolerant_for_floats():
    a = Matrix([[1.0, 0.0], [0.0, 1.0]])
    b = Matrix([[1.0 + 1e-13, 0.0], [0.0, 1.0]])
    assert mat_eq(a, b)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3, 4]]) * Matrix([[1]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2]])


def test_charpoly_example():
    # 2x2 block with off-diagonal product 3/4: characteristic polynomial
    # is x^2 - 1, matching the quadratic (x - 1)(x + 1) = 0 for a = p = 1.
    u = sqrt_checked(Fraction(3, 4)).value
    m = Matrix([[Fraction(-1, 2), u], [u, Fraction(1, 2)]])
    one, c1, c0 = charpoly2(m)
    assert one == 1
    assert abs(float(c1)) < 1e-12
    assert abs(float(c0) + 1) < 1e-12
    square = m * m
    assert mat_eq(square, Matrix.identity(2))


def test_scalar_multiplication_keeps_exactness():
    a = Matrix([[1, 2], [3, 4]])
    b = a * Fraction(2)
    assert b.is_exact()
    assert b.rows[0][0] == 2 and isinstance(b.rows[0][0], int)


def _reference_rank(rows):
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ri = 0
    if not rows:
        return 0
    for c in range(len(rows[0])):
        piv = next((r for r in range(ri, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[ri], rows[piv] = rows[piv], rows[ri]
        pv = rows[ri][c]
        for r in range(len(rows)):
            if r != ri and rows[r][c] != 0:
                f = rows[r][c] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[ri])]
        ri += 1
        rank += 1
    return rank


def test_rank_exact_against_reference():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 7)
        m = rng.randint(1, 7)
        r = rng.randint(0, min(n, m))
        if r == 0:
            prod = [[0] * m for _ in range(n)]
        else:
            a = [[rng.randint(-4, 4) for _ in range(r)] for _ in range(n)]
            b = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(r)]
            prod = [
                [sum(a[i][t] * b[t][j] for t in range(r)) for j in range(m)]
                for i in range(n)
            ]
        assert rank_exact(prod) == _reference_rank(prod)


def test_matrix_json_round_trip():
    from tbh.matrices import matrix_from_json, matrix_to_json

    m = Matrix([[Fraction(1, 2), 0.25], [3, Fraction(-2, 7)]])
    doc = matrix_to_json(m)
    assert doc["rows"][0] == ["1/2", 0.25]
    again = matrix_from_json(doc)
    assert again.rows[0][0] == Fraction(1, 2)
    assert again.rows[0][1] == 0.25
    assert again.rows[1][0] == 3


def test_rank_exact_fraction_rows():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]]
    assert rank_exact(rows) == 2
    rows = [[Fraction(1, 2), 1], [Fraction(1, 4), Fraction(1, 2)]]
    assert rank_exact(rows) == 1
