#!/usr/bin/env py.test -v

# built-in python libraries

# third-party libraries (install with pip)
import pytest

# local libraries
from grpinv.core.common import ParseError
from grpinv.perm.permutation import (
    Permutation,
    commutator,
    compose,
    conjugate,
    cycle_type,
    element_order,
    format_cycles,
    identity,
    inverse,
    parse_cycles,
    power,
)

CYCLES = (
    ("(1 2 3)", 3, (1, 2, 0)),
    ("(1,2)(3,4)", 4, (1, 0, 3, 2)),
    ("(2 4)", 5, (0, 3, 2, 1, 4)),
    ("", 2, (0, 1)),
    ("(1)(2 3)", 3, (0, 2, 1)),
)

BAD_CYCLES = (
    ("(1 2", 1, "unclosed cycle"),
    ("1 2", 1, "expected '('"),
    ("(1 2)(3 x)", 7, "bad point 'x'"),
    ("(1 9)", 2, "point 9 outside 1..3"),
    ("(1 2)(2 3)", 7, "point 2 repeated"),
)

ORDERS = (
    ((0, 1, 2), 1, (1, 1, 1)),
    ((1, 0, 3, 4, 2), 6, (3, 2)),
    ((1, 2, 3, 0), 4, (4,)),
    ((1, 0, 3, 2), 2, (2, 2)),
)


@pytest.mark.parametrize(("text", "degree", "images"), CYCLES)
def test_parse_cycles(text, degree, images):
    assert parse_cycles(text, degree) == images


@pytest.mark.parametrize(("text", "column", "reason"), BAD_CYCLES)
def test_parse_cycles_errors(text, column, reason):
    with pytest.raises(ParseError) as excinfo:
        parse_cycles(text, 3 if "9" in text else 4, line=5)
    assert excinfo.value.line == 5
    assert excinfo.value.column == column
    assert excinfo.value.reason == reason


@pytest.mark.parametrize(("images", "order", "shape"), ORDERS)
def test_element_order(images, order, shape):
    assert element_order(images) == order
    assert cycle_type(images) == shape


def test_format_cycles():
    assert format_cycles((1, 2, 0)) == "(1 2 3)"
    assert format_cycles((0, 1)) == "()"
    assert format_cycles(parse_cycles("(1 4)(2 3 5)", 5)) == "(1 4)(2 3 5)"


class TestGroupOperations:
    a = (1, 0, 2)  # (1 2)
    b = (0, 2, 1)  # (2 3)

    def test_compose_left_to_right(self):
        # a first, then b
        assert compose(self.a, self.b) == (2, 0, 1)
        assert compose(self.b, self.a) == (1, 2, 0)

    def test_inverse_and_power(self):
        c = compose(self.a, self.b)
        assert compose(c, inverse(c)) == identity(3)
        assert power(c, 3) == identity(3)
        assert power(c, -1) == inverse(c)
        assert power(c, 0) == identity(3)

    def test_conjugate(self):
        # g^-1 x g
        assert conjugate(self.a, self.b) == compose(compose(inverse(self.b), self.a), self.b)
        assert conjugate(self.a, self.b) == (2, 1, 0)

    def test_commutator(self):
        assert element_order(commutator(self.a, self.b)) == 3
        assert commutator(self.a, self.a) == identity(3)


class TestPermutation:
    def test_from_cycles(self):
        p = Permutation.from_cycles("(1 2)", 3)
        q = Permutation.from_cycles("(2 3)", 3)
        assert str(p * q) == "(1 3 2)"
        assert (p * q).order() == 3
        assert isinstance(p * q, Permutation)

    def test_power_and_inverse(self):
        r = Permutation.from_cycles("(1 2 3 4)", 4)
        assert r ** 4 == Permutation.identity(4)
        assert r.inverse() == r ** 3
        assert r.degree == 4
        assert r.cycles() == [(0, 1, 2, 3)]

    def test_repr(self):
        assert repr(Permutation((1, 0))) == "Permutation((1 2))"

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))
