from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from nilift.exceptions import InvalidCartanTypeException, WeylLetterOutOfRangeException
from nilift.models.base import Basis, Family
from nilift.models.roots import Coweight, Weight, WeylWord
from nilift.rootdata.cartan import parse_cartan_type
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import apply_word, diagram_of, dominate, orbit_dimension, pair
from nilift.utils.string_utils import format_diagram, parse_diagram

E6_EXAMPLE_WORD = WeylWord(letters=(4, 3, 5, 2, 4, 3, 5, 1, 6))
E6_EXAMPLE_H1 = Coweight(coords=(0, 4, 4, 6, 4, 0))


def system(name: str):
    return build_root_system(parse_cartan_type(name))


@pytest.mark.parametrize(
    "name, count",
    [
        ("A1", 1),
        ("A4", 10),
        ("B3", 9),
        ("C3", 9),
        ("D4", 12),
        ("G2", 6),
        ("F4", 24),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
    ],
)
def test_positive_root_count(name, count):
    assert len(system(name).positive_roots) == count


@pytest.mark.parametrize(
    "name, highest_root",
    [
        ("A1", (1,)),
        ("G2", (3, 2)),
        ("F4", (2, 3, 4, 2)),
        ("E6", (1, 2, 2, 3, 2, 1)),
        ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
        ("B3", (1, 2, 2)),
        ("C3", (2, 2, 1)),
    ],
)
def test_highest_root(name, highest_root):
    rs = system(name)
    assert rs.highest_root == highest_root
    assert rs.marks[0] == 1
    assert [rs.marks[node] for node in range(1, rs.rank + 1)] == list(highest_root)


@pytest.mark.parametrize("name", ["G2", "B4", "C4", "D5", "F4", "E7"])
def test_highest_root_is_maximal(name):
    rs = system(name)
    roots = set(rs.positive_roots)
    for node in range(1, rs.rank + 1):
        raised = tuple(c + int(i == node - 1) for i, c in enumerate(rs.highest_root))
        assert raised not in roots


@pytest.mark.parametrize("name", ["B3", "C3", "D4", "G2", "F4", "E6"])
def test_cartan_matrix_shape(name):
    matrix = system(name).cartan_matrix
    for i, row in enumerate(matrix):
        for j, entry in enumerate(row):
            if i == j:
                assert entry == 2
            else:
                assert entry <= 0
                assert (entry == 0) == (matrix[j][i] == 0)


def test_bourbaki_short_roots():
    # B: alpha_n short, C: alpha_n long, G2: alpha_1 short, F4: alpha_3 and alpha_4 short
    assert system("B3").cartan_matrix[1][2] == -2
    assert system("C3").cartan_matrix[2][1] == -2
    assert system("G2").cartan_matrix[1][0] == -3
    assert system("F4").cartan_matrix[1][2] == -2
    assert system("G2").root_lengths == (Fraction(2, 3), Fraction(2))
    assert max(system("F4").root_lengths) == 2


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4", "E6"])
def test_fundamental_weights_are_dual(name):
    rs = system(name)
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            coroot = Coweight(coords=[int(k == j) for k in range(1, rs.rank + 1)])
            assert pair(rs, rs.fundamental_weight(i), coroot) == int(i == j)


@pytest.mark.parametrize("name", ["B3", "G2", "F4", "E8"])
def test_invariant_form_is_positive(name):
    rs = system(name)
    assert all(rs.norm(root) > 0 for root in rs.positive_roots)
    form = Matrix(rs.invariant_form)
    assert form == form.T
    assert all(form[:size, :size].det() > 0 for size in range(1, rs.rank + 1))


@pytest.mark.parametrize("name", ["B4", "C4", "F4", "E7"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_invariant_form_is_positive_on_vectors(name, data):
    rs = system(name)
    vector = data.draw(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=rs.rank, max_size=rs.rank)
        .filter(any)
    )
    assert rs.norm(vector) > 0


@pytest.mark.parametrize(
    "name",
    [
        "A4",
        "B4",
        "C4",
        "D5",
        "G2",
        "F4",
        "E6",
        pytest.param("E7", marks=pytest.mark.slow),
        pytest.param("E8", marks=pytest.mark.slow),
    ],
)
def test_simple_reflection_permutes_positive_roots(name):
    rs = system(name)
    for node in range(1, rs.rank + 1):
        others = {root for root in rs.positive_roots if root != rs.simple_root(node)}
        images = {
            apply_word(rs, WeylWord(letters=(node,)), Weight(coords=root, basis=Basis.Root)).coords
            for root in others
        }
        assert images == others
        reflected = apply_word(
            rs, WeylWord(letters=(node,)), Weight(coords=rs.simple_root(node), basis=Basis.Root)
        )
        assert reflected.coords == tuple(-c for c in rs.simple_root(node))


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=6), max_size=30),
    st.lists(st.integers(min_value=-4, max_value=4), min_size=6, max_size=6),
)
def test_weyl_words_preserve_the_norm(letters, coords):
    rs = system("E6")
    weight = Weight(coords=coords, basis=Basis.Fundamental)
    image = apply_word(rs, WeylWord(letters=tuple(letters)), weight)
    assert rs.norm(rs.in_basis(image, Basis.Root).coords) == rs.norm(
        rs.in_basis(weight, Basis.Root).coords
    )


@settings(max_examples=50)
@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=6, max_size=6))
def test_basis_conversions_are_inverse(coords):
    rs = system("E6")
    weight = Weight(coords=coords, basis=Basis.Root)
    fundamental = rs.in_basis(weight, Basis.Fundamental)
    assert rs.in_basis(fundamental, Basis.Root) == weight


@pytest.mark.parametrize("text", ["E6", "b3", " G2 ", "A1", "D4"])
def test_parse_cartan_type(text):
    cartan_type = parse_cartan_type(text)
    assert str(cartan_type) == text.strip().upper()


@pytest.mark.parametrize("text", ["E9", "D2", "B1", "F5", "X3", "", "E"])
def test_parse_cartan_type_rejects(text):
    with pytest.raises(InvalidCartanTypeException):
        parse_cartan_type(text)


def test_e6_pairing_example(e6):
    varpi_2 = Weight(coords=(1, 2, 2, 3, 2, 1), basis=Basis.Root)
    assert e6.in_basis(varpi_2, Basis.Fundamental).coords == (0, 1, 0, 0, 0, 0)
    assert pair(e6, varpi_2, Coweight(coords=(0, 1, 0, 0, 0, 0))) == 1


def test_empty_word_is_identity(e6):
    assert apply_word(e6, WeylWord(), E6_EXAMPLE_H1) == E6_EXAMPLE_H1


def test_word_out_of_range(e6):
    with pytest.raises(WeylLetterOutOfRangeException):
        apply_word(e6, WeylWord(letters=(7,)), E6_EXAMPLE_H1)


@settings(max_examples=50)
@given(
    st.lists(st.integers(min_value=1, max_value=6), max_size=12),
    st.lists(st.integers(min_value=-4, max_value=4), min_size=6, max_size=6),
)
def test_word_then_reverse_is_identity(letters, coords):
    rs = system("E6")
    word = WeylWord(letters=tuple(letters))
    weight = Weight(coords=coords, basis=Basis.Fundamental)
    assert apply_word(rs, word.inverse(), apply_word(rs, word, weight)) == weight
    coweight = Coweight(coords=coords)
    assert apply_word(rs, word.inverse(), apply_word(rs, word, coweight)) == coweight


def test_e6_example_word_sends_h1_to_h(e6):
    h = apply_word(e6, E6_EXAMPLE_WORD, E6_EXAMPLE_H1)
    assert diagram_of(e6, h) == (0, 0, 0, 2, 0, 0)
    assert format_diagram(e6.cartan_type, diagram_of(e6, h)) == "0 0 2 0 0 / 0"


def test_e6_example_inverse_image(e6):
    image = apply_word(e6, E6_EXAMPLE_WORD.inverse(), e6.fundamental_weight(2))
    assert image.coords == (0, 1, 1, 2, 1, 0)


def test_dominate_dominant_input(e6):
    h = e6.coweight_from_values((0, 0, 0, 2, 0, 0))
    dominant, word = dominate(e6, h)
    assert dominant == h
    assert len(word) == 0


def test_dominate_3a2_element(e6):
    h1 = e6.coweight_from_values((2, 2, 2, -6, 2, 2))
    dominant, word = dominate(e6, h1)
    assert diagram_of(e6, dominant) == (0, 0, 0, 2, 0, 0)
    assert apply_word(e6, word, h1) == dominant


@pytest.mark.parametrize("name", ["G2", "B3", "C3", "F4", "E6"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_dominate_is_dominant(name, data):
    rs = system(name)
    coords = data.draw(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=rs.rank, max_size=rs.rank)
    )
    h = Coweight(coords=coords)
    dominant, word = dominate(rs, h)
    assert all(value >= 0 for value in rs.values(dominant.coords))
    assert apply_word(rs, word, h) == dominant


@pytest.mark.parametrize("name", ["G2", "F4", "E7"])
def test_negated_dominant_form(name):
    # -1 lies in the Weyl group of these types
    rs = system(name)
    h = rs.coweight_from_values([2] + [0] * (rs.rank - 1))
    negated = Coweight(coords=[-c for c in h.coords])
    assert dominate(rs, negated)[0] == h


def test_orbit_dimension(e6):
    assert orbit_dimension(e6, (0, 0, 0, 2, 0, 0)) == 58
    assert orbit_dimension(e6, (2,) * 6) == 72
    assert orbit_dimension(e6, (0,) * 6) == 0


def test_diagram_row_layout(e6):
    assert parse_diagram(e6.cartan_type, "002000") == (0, 0, 0, 2, 0, 0)
    assert parse_diagram(e6.cartan_type, "0 0 0 0 0 / 2") == (0, 2, 0, 0, 0, 0)
    assert system("G2").cartan_type.family == Family.G
