import itertools
import random

import pytest
from hypothesis import given, strategies as st

from altnf.errors import DegreeMismatchError, IndexRangeError, InvalidDegreeError, ParseError
from altnf.perm import (
    EVEN, ODD, Permutation, compose, cycle_perm, format_perm, identity, inverse, parity,
    parse_perm, three_cycle,
)

from oracle import inversions


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_identity():
    assert identity(3).images == (1, 2, 3)
    assert identity(1).images == (1,)
    with pytest.raises(InvalidDegreeError):
        identity(0)


def test_compose_example_and_convention():
    # (1 2 3) * (2 3 4): right factor first
    assert compose(cycle_perm([1, 2, 3], 4), cycle_perm([2, 3, 4], 4)).images == (2, 1, 4, 3)
    p = Permutation([3, 1, 2, 4])
    assert compose(p, identity(4)) == p
    assert compose(identity(4), p) == p
    c = cycle_perm([1, 2, 3], 4)
    assert compose(c, inverse(c)) == identity(4)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(3), identity(4))


def test_inverse_examples():
    assert inverse(cycle_perm([1, 2, 3], 3)) == cycle_perm([1, 3, 2], 3)
    assert inverse(identity(6)) == identity(6)
    assert inverse(Permutation([2, 1, 4, 3])).images == (2, 1, 4, 3)


def test_parity_examples():
    assert parity(cycle_perm([1, 2, 3], 3)) == EVEN
    assert parity(Permutation([2, 1, 3, 4])) == ODD
    assert parity(identity(7)) == EVEN


def test_parity_matches_inversion_count():
    for p in itertools.permutations(range(1, 6)):
        assert (parity(Permutation(p)) == EVEN) == (inversions(p) % 2 == 0)


def test_three_cycle():
    assert three_cycle(1, 4).images == (2, 3, 1, 4)
    assert three_cycle(2, 5).images == (1, 3, 4, 2, 5)
    with pytest.raises(IndexRangeError, match="1..2"):
        three_cycle(3, 4)
    with pytest.raises(IndexRangeError):
        three_cycle(0, 4)


@pytest.mark.parametrize("n", range(3, 10))
def test_three_cycle_order_and_commutation(n):
    e = identity(n)
    for i in range(1, n - 1):
        x = three_cycle(i, n)
        assert x * x != e
        assert x * x * x == e
        for j in range(1, n - 1):
            if abs(i - j) > 2:
                y = three_cycle(j, n)
                assert x * y == y * x


def test_non_bijection_rejected():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])


@given(perms(6), perms(6), perms(6))
def test_associativity(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms(7), perms(7))
def test_parity_homomorphism(p, q):
    assert parity(p * p) == EVEN
    assert (parity(p * q) == EVEN) == (parity(p) == parity(q))


@given(perms(8))
def test_inverse_both_sides(p):
    assert p * inverse(p) == identity(8) == inverse(p) * p


class TestParse:
    def test_examples(self):
        assert parse_perm("(1 2 3)", 4).images == (2, 3, 1, 4)
        assert parse_perm("2,1,4,3", 4).images == (2, 1, 4, 3)
        assert parse_perm("(1,2,3)", 4).images == (2, 3, 1, 4)
        assert parse_perm("()", 3) == identity(3)

    @pytest.mark.parametrize("text, n, pos", [
        ("1,1,3", 3, 2),
        ("1,2,5", 3, 4),
        ("(1 2", 3, 4),
        ("(1 2)(2 3)", 3, 6),
        ("1,,2", 3, 2),
        ("1;2", 2, 1),
    ])
    def test_errors_carry_position(self, text, n, pos):
        with pytest.raises(ParseError) as info:
            parse_perm(text, n)
        assert info.value.position == pos

    def test_repeated_value_message(self):
        with pytest.raises(ParseError, match="value 1 repeated"):
            parse_perm("1,1,3", 3)

    def test_wrong_length(self):
        with pytest.raises(ParseError):
            parse_perm("1,2", 3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_round_trip_exhaustive(self, n):
        for images in itertools.permutations(range(1, n + 1)):
            p = Permutation(images)
            assert parse_perm(format_perm(p), n) == p
            assert parse_perm(format_perm(p, cycle=True), n) == p

    def test_round_trip_random_large(self):
        rng = random.Random(8)
        for n in (8, 12, 20):
            for _ in range(200):
                images = list(range(1, n + 1))
                rng.shuffle(images)
                p = Permutation(images)
                assert parse_perm(format_perm(p), n) == p
                assert parse_perm(format_perm(p, cycle=True), n) == p

    def test_cycle_format_is_canonical(self):
        p = parse_perm("(5 4)(3 1 2)", 5)
        assert format_perm(p, cycle=True) == "(1 2 3)(4 5)"
        assert format_perm(identity(4), cycle=True) == "()"
