import pytest
from hypothesis import given, strategies as st

from permlat.errors import DegreeMismatch, NotAPermutation, ParseError
from permlat.perms import Perm, compose, cycle_string, parse_cycles


def random_perm(degree):
    return st.permutations(range(degree)).map(lambda t: Perm(tuple(t)))


perms5 = random_perm(5)


def test_identity():
    e = Perm.identity(4)
    assert e.is_identity()
    assert e.order() == 1
    assert cycle_string(e) == "()"


def test_composition_is_left_to_right():
    # (p * q)(x) = q(p(x)): apply p first
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    assert (p * q)(0) == 2
    assert (q * p)(0) == 1


def test_bad_images_rejected():
    with pytest.raises(NotAPermutation):
        Perm((0, 0, 1))
    with pytest.raises(DegreeMismatch):
        parse_cycles("(1 2)", 3) * parse_cycles("(1 2)", 4)


def test_from_cycles_and_back():
    p = Perm.from_cycles(6, [(0, 1, 2), (4, 5)])
    assert cycle_string(p) == "(1 2 3)(5 6)"
    assert parse_cycles(cycle_string(p), 6) == p


def test_cycle_parse_errors():
    assert parse_cycles("", 5).is_identity()  # empty text is the identity
    for bad in ["(1 2", "(0 1)", "(1 1)", "(1 9)", "(a b)"]:
        with pytest.raises(ParseError):
            parse_cycles(bad, 5)


def test_order_of_known_cycle_shapes():
    assert parse_cycles("(1 2 3 4 5)", 5).order() == 5
    assert parse_cycles("(1 2)(3 4 5)", 5).order() == 6


@given(perms5, perms5)
def test_compose_matches_pointwise(p, q):
    r = compose(p, q)
    for x in range(5):
        assert r(x) == q(p(x))


@given(perms5, perms5, perms5)
def test_associativity(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perms5)
def test_inverse(p):
    assert (p * p.inverse()).is_identity()
    assert p.inverse().inverse() == p


@given(perms5)
def test_cycle_string_roundtrip(p):
    assert parse_cycles(cycle_string(p), 5) == p


@given(perms5)
def test_order_annihilates(p):
    k = p.order()
    acc = Perm.identity(5)
    for _ in range(k):
        acc = acc * p
    assert acc.is_identity()
    # and no earlier power does
    acc = Perm.identity(5)
    for _ in range(k - 1):
        acc = acc * p
        assert not acc.is_identity()
