import random
from fractions import Fraction

import pytest

from symlab.fields import GF, QQ
from symlab.linalg import Matrix, laplace_det
from symlab.poly import FunctionField, MultiPoly


def random_matrix(field, n, rng):
    if field.size() is not None:
        elems = list(field.elements())
        return Matrix(field, [[elems[rng.randrange(len(elems))] for _ in range(n)] for _ in range(n)])
    return Matrix(
        field,
        [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)],
    )


def test_inverse_round_trip_randomized():
    rng = random.Random(61)
    for field in [QQ, GF(5), GF(2, 2)]:
        for n in (1, 2, 3, 4):
            for _ in range(20):
                m = random_matrix(field, n, rng)
                if m.det().is_zero():
                    with pytest.raises(ValueError):
                        m.inverse()
                    continue
                assert m * m.inverse() == Matrix.identity(field, n)
                assert m.inverse() * m == Matrix.identity(field, n)


def test_det_multiplicative_randomized():
    rng = random.Random(62)
    for _ in range(50):
        a = random_matrix(QQ, 3, rng)
        b = random_matrix(QQ, 3, rng)
        assert (a * b).det() == a.det() * b.det()


def test_solve():
    m = Matrix(QQ, [[2, 1], [1, 3]])
    x = m.solve([QQ.coerce(5), QQ.coerce(10)])
    assert m.mul_vec(x) == [QQ.coerce(5), QQ.coerce(10)]


def test_non_square_rejected():
    m = Matrix(QQ, [[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        m.det()
    with pytest.raises(ValueError):
        m.inverse()
    with pytest.raises(ValueError):
        laplace_det([[1, 2], [3]])


def test_transpose_and_indexing():
    m = Matrix(QQ, [[1, 2], [3, 4]])
    assert m.transpose() == Matrix(QQ, [[1, 3], [2, 4]])
    assert m[0, 1] == QQ.coerce(2)


def test_laplace_det_on_polynomial_entries():
    syms = ("x", "y")
    x = MultiPoly.symbol(QQ, syms, "x")
    y = MultiPoly.symbol(QQ, syms, "y")
    one = MultiPoly.constant(QQ, syms, 1)
    det = laplace_det([[one, x, x * x], [one, y, y * y], [one, x + y, (x + y) ** 2]])
    # row reduction by hand: det = (y - x)(x + y - x)(x + y - y) = xy(y - x)
    assert det == x * y * (y - x)


def test_function_field_matrix_inverse():
    ff = FunctionField(QQ, ("t",))
    t = ff.symbol("t")
    m = Matrix(ff, [[ff.one, t], [t, ff.one]])
    inv = m.inverse()
    assert m * inv == Matrix.identity(ff, 2)
    assert m.det() == ff.one - t * t
