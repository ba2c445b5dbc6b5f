from functools import lru_cache
from math import gcd

from sympy import Poly, Symbol, cyclotomic_poly

X = Symbol("x")


@lru_cache(maxsize=None)
def reduce_exponents(order: int, counts: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    """Coefficients of sum n_k x^k modulo the cyclotomic polynomial of the order, lowest first."""
    if order == 1:
        return (sum(count for _, count in counts),)
    coefficients = [0] * order
    for exponent, count in counts:
        coefficients[exponent % order] += count
    polynomial = Poly(list(reversed(coefficients)), X, domain="ZZ")
    remainder = polynomial.rem(Poly(cyclotomic_poly(order, X), X, domain="ZZ"))
    reduced = [int(c) for c in reversed(remainder.all_coeffs())]
    while len(reduced) > 1 and reduced[-1] == 0:
        reduced.pop()
    return tuple(reduced)


def units(order: int) -> list[int]:
    return [u for u in range(1, order + 1) if gcd(u, order) == 1]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
