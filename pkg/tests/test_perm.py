import pytest
from hypothesis import given, strategies as st

from igrowth.errors import ParseError
from igrowth.perm import (
    Permutation,
    compose,
    format_group_text,
    parse_cycles,
    read_group_text,
)


def P(text, degree=5):
    return Permutation.parse(text, degree)


@st.composite
def perms(draw, degree=6):
    return Permutation(draw(st.permutations(range(1, degree + 1))))


def test_compose_with_identity():
    assert P("(1 2 3)") * Permutation.identity(5) == P("(1 2 3)")
    assert compose(Permutation.identity(5), P("(1 2 3)")) == P("(1 2 3)")


def test_involution_squares_to_identity():
    assert (P("(1 2)") * P("(1 2)")).is_identity()


def test_composition_order_is_right_to_left():
    # q = (2 3) acts first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    r = P("(1 2)", 3) * P("(2 3)", 3)
    assert (r(1), r(2), r(3)) == (2, 3, 1)
    assert r == P("(1 2 3)", 3)
    # the opposite convention would give (1 3 2)
    assert P("(2 3)", 3) * P("(1 2)", 3) == P("(1 3 2)", 3)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        P("(1 2)", 3) * P("(1 2)", 4)


def test_images_are_one_based():
    p = P("(1 2 3)(4 5)")
    assert p.images == (2, 3, 1, 5, 4)
    assert Permutation([2, 3, 1, 5, 4]) == p
    assert Permutation.identity(4).images == (1, 2, 3, 4)


@pytest.mark.parametrize("images", [[1, 1, 2], [0, 1, 2], [2, 3, 4]])
def test_rejects_non_bijections(images):
    with pytest.raises(ValueError):
        Permutation(images)


def test_cycle_string_round_trip():
    p = P("(3 1 2)(5 4)")
    assert str(p) == "(1 2 3)(4 5)"
    assert Permutation.parse(str(p), 5) == p
    assert str(Permutation.identity(3)) == "()"


def test_parse_cycles_accepts_commas_and_spaces():
    assert parse_cycles(" ( 1, 2 ,3 )(4 5) ") == [[1, 2, 3], [4, 5]]


@pytest.mark.parametrize("bad", ["(1 2", "1 2)", "(1 a)", "(1 2)x", "abc"])
def test_parse_cycles_errors(bad):
    with pytest.raises(ValueError):
        parse_cycles(bad)


def test_order_and_parity():
    assert P("(1 2 3)(4 5)").order() == 6
    assert P("(1 2 3)").is_even()
    assert not P("(1 2)").is_even()
    assert P("(1 2 3)(4 5)").cycle_type() == (3, 2)


@given(perms(), perms(), perms())
def test_composition_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms())
def test_inverse(a):
    assert (a * a.inverse()).is_identity()
    assert a ** a.order() == Permutation.identity(a.degree)
    assert a ** -1 == a.inverse()


@given(perms(), perms())
def test_compose_is_function_composition(a, b):
    c = a * b
    assert all(c(x) == a(b(x)) for x in range(1, a.degree + 1))


def test_read_group_text():
    text = "# comment\ndegree 5\n(1 2 3)\n\n(3 4 5)  # second\n"
    degree, gens = read_group_text(text)
    assert degree == 5
    assert gens == [P("(1 2 3)"), P("(3 4 5)")]
    assert read_group_text(format_group_text(degree, gens)) == (degree, gens)


def test_read_group_text_whitespace_insensitive():
    assert read_group_text("  degree   3 \n  (1   2)  ")[1] == [P("(1 2)", 3)]


@pytest.mark.parametrize("text,line", [
    ("degree 4\n(1 2\n", 2),
    ("(1 2)\n", 1),
    ("degree 3\n(1 4)\n", 2),
    ("degree x\n", 1),
    ("\n\ndegree 3\n(1 2)(2 3)\n", 4),
])
def test_read_group_text_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        read_group_text(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_header():
    with pytest.raises(ParseError):
        read_group_text("# nothing\n")
