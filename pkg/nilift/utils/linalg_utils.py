from fractions import Fraction
from math import gcd

from sympy import Matrix, Rational, ZZ
from sympy.matrices.normalforms import smith_normal_form

from nilift.models.base import Vector


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    # sympy Rational / Integer
    return Fraction(int(value.p), int(value.q))


def inverse(rows) -> tuple[Vector, ...]:
    matrix = Matrix([[_sympify(value) for value in row] for row in rows])
    inverted = matrix.inv()
    return tuple(
        tuple(to_fraction(inverted[i, j]) for j in range(inverted.cols))
        for i in range(inverted.rows)
    )


def rank(rows) -> int:
    if not rows:
        return 0
    return Matrix([[_sympify(value) for value in row] for row in rows]).rank()


def invariant_factors(rows) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form of an integer matrix."""
    if not rows:
        return []
    normal = smith_normal_form(Matrix([list(row) for row in rows]), domain=ZZ)
    return [
        abs(int(normal[i, i]))
        for i in range(min(normal.rows, normal.cols))
        if normal[i, i] != 0
    ]


def torsion_of_quotient(rows) -> int:
    """Order of the torsion subgroup of Z^n modulo the span of the given integer rows."""
    order = 1
    for factor in invariant_factors(rows):
        order *= factor
    return order


def vector_gcd(values) -> int:
    result = 0
    for value in values:
        result = gcd(result, int(value))
    return result


def _sympify(value):
    value = to_fraction(value)
    return Rational(value.numerator, value.denominator)
