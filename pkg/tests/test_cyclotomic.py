import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilift.lifting.cyclotomic import lcm, reduce_exponents, units
from nilift.models.lifting import CyclotomicTrace


@pytest.mark.parametrize(
    "order, exponents, value",
    [
        (3, [1, 2], -1),
        (4, [1, 3], 0),
        (2, [1], -1),
        (5, [1, 2, 3, 4], -1),
        (6, [1, 5], 1),
        (1, [0, 0, 0], 3),
        (3, [0, 0], 2),
    ],
)
def test_integral_values(order, exponents, value):
    trace = CyclotomicTrace.from_exponents(order, exponents)
    assert trace.is_integral
    assert trace.value == value


def test_non_integral_value():
    trace = CyclotomicTrace.from_exponents(4, [1])
    assert not trace.is_integral
    assert trace.value is None
    assert trace.reduced == (0, 1)


def test_exponents_are_reduced_mod_order():
    trace = CyclotomicTrace.from_exponents(3, [4, -1, 7])
    assert trace.exponent_counts == {1: 2, 2: 1}
    assert trace.dimension == 3


def test_product():
    product = CyclotomicTrace.from_exponents(2, [1]) * CyclotomicTrace.from_exponents(3, [1, 2])
    assert product.order == 6
    assert product.exponent_counts == {1: 1, 5: 1}
    assert product.value == 1


def test_galois_and_conjugation():
    assert CyclotomicTrace.from_exponents(3, [1, 2]).is_self_conjugate()
    assert not CyclotomicTrace.from_exponents(4, [1]).is_self_conjugate()
    assert CyclotomicTrace.from_exponents(5, [1, 2, 3, 4]).is_galois_stable()
    assert not CyclotomicTrace.from_exponents(3, [1]).is_galois_stable()


def test_same_value_across_orders():
    assert CyclotomicTrace.from_exponents(2, [1]).same_value(CyclotomicTrace.from_exponents(4, [2]))
    assert CyclotomicTrace.from_exponents(4, [1]).same_value(CyclotomicTrace.from_exponents(8, [2]))
    assert not CyclotomicTrace.from_exponents(4, [1]).same_value(
        CyclotomicTrace.from_exponents(4, [3])
    )


def test_str():
    assert str(CyclotomicTrace.from_exponents(3, [1, 2])) == "-1"
    assert str(CyclotomicTrace.from_exponents(4, [1])) == "ξ^1"
    assert str(CyclotomicTrace.from_exponents(4, [0, 1])) == "1 + ξ^1"
    assert str(CyclotomicTrace.from_exponents(4, [1, 1])) == "2ξ^1"


def test_helpers():
    assert reduce_exponents(3, ((1, 1), (2, 1))) == (-1,)
    assert reduce_exponents(1, ((0, 4),)) == (4,)
    assert units(6) == [1, 5]
    assert units(1) == [1]
    assert lcm(4, 6) == 12


@given(st.integers(min_value=2, max_value=30))
def test_all_roots_of_unity_sum_to_zero(order):
    assert CyclotomicTrace.from_exponents(order, range(order)).value == 0


@given(
    st.integers(min_value=1, max_value=12),
    st.lists(st.integers(min_value=0, max_value=11), max_size=8),
    st.integers(min_value=1, max_value=4),
)
def test_lifting_preserves_the_value(order, exponents, factor):
    trace = CyclotomicTrace.from_exponents(order, exponents)
    lifted = trace.lifted(order * factor)
    assert lifted.order == order * factor
    assert lifted.dimension == trace.dimension
    assert lifted.is_integral == trace.is_integral
    assert lifted.same_value(trace)
    if trace.is_integral:
        assert lifted.value == trace.value


def test_json_keys_are_read_back_as_exponents():
    trace = CyclotomicTrace.from_exponents(6, [1, 5, 3])
    parsed = CyclotomicTrace.model_validate_json(trace.model_dump_json())
    assert parsed == trace
    assert parsed.exponent_counts == {1: 1, 3: 1, 5: 1}
    assert CyclotomicTrace(order=3, exponent_counts={"4": 1, "-1": 1}).exponent_counts == {
        1: 1,
        2: 1,
    }
