import random

import pytest

from braid_samples import random_word
from braids.word import (
    BraidWord,
    Permutation,
    commutator,
    conjugate,
    exponent_sum,
    full_twist,
    garside_element3,
    half_twist,
    in_commutator_subgroup,
    inverse,
    parse_braid,
    power,
    underlying_permutation,
)
from utils.errors import BraidParseError, StrandMismatchError


def test_parse_braid():
    w = parse_braid("1 -2", 3)
    assert w.letters == (1, -2)
    assert str(w) == "1 -2"
    assert parse_braid("", 3) == BraidWord.identity(3)
    assert parse_braid("  2\t-1 ", 3).letters == (2, -1)
    assert parse_braid(str(w), 3) == w


@pytest.mark.parametrize("text, n", [("1 x", 3), ("0", 3), ("3", 3), ("-3", 3), ("1", 1), ("1.5", 3)])
def test_parse_braid_rejects(text, n):
    with pytest.raises(BraidParseError):
        parse_braid(text, n)


def test_words_are_stored_unreduced():
    assert parse_braid("1 -1", 3).letters == (1, -1)
    assert len(parse_braid("1 -1", 3)) == 2


def test_exponent_sum():
    assert exponent_sum(parse_braid("1 -2 1 1", 3)) == 2
    assert exponent_sum(BraidWord.identity(4)) == 0
    assert in_commutator_subgroup(commutator(BraidWord.generator(1, 3), BraidWord.generator(2, 3)))


def test_underlying_permutation():
    assert underlying_permutation(parse_braid("1 2", 3)) == Permutation((2, 3, 1))
    assert underlying_permutation(parse_braid("1 -1", 3)).is_identity()
    assert underlying_permutation(parse_braid("1", 2)) == Permutation((2, 1))
    assert underlying_permutation(half_twist(4)) == Permutation((4, 3, 2, 1))
    assert underlying_permutation(full_twist(4)).is_identity()


def test_permutation_cycles():
    p = Permutation((2, 3, 1))
    assert p.cycles() == [(1, 2, 3)]
    assert p.cycle_type() == (3,)
    assert p.is_n_cycle()
    assert str(p) == "(1 2 3)"
    assert str(Permutation.identity(3)) == "()"
    q = Permutation((2, 1, 3, 4))
    assert q.cycle_type() == (2, 1, 1)
    assert not q.is_n_cycle()


def test_permutation_compose_and_inverse():
    p = Permutation((2, 3, 1))
    assert p.compose(p.inverse()).is_identity()
    assert p.compose(p) == p.inverse()
    w1, w2 = parse_braid("1", 3), parse_braid("2", 3)
    # images after w1 w2 are the images of w1 read at the positions w2 moves them to
    assert underlying_permutation(w1 * w2) == underlying_permutation(w1).compose(underlying_permutation(w2))
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_inverse_power_conjugate():
    w = parse_braid("1 -2 2 1", 3)
    assert inverse(w).letters == (-1, -2, 2, -1)
    assert power(w, 0) == BraidWord.identity(3)
    assert power(w, -2).letters == inverse(w).letters * 2
    g = parse_braid("2", 3)
    assert conjugate(w, g).letters == (2, 1, -2, 2, 1, -2)


def test_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        parse_braid("1", 3) * parse_braid("1", 4)


def test_twists():
    assert half_twist(3).letters == (1, 2, 1)
    assert half_twist(4).letters == (1, 2, 3, 1, 2, 1)
    assert len(full_twist(4)) == 12
    assert garside_element3().letters == (1, 2) * 3


def test_exponent_sum_is_a_homomorphism():
    rng = random.Random(8)
    for _ in range(50):
        w1, w2 = random_word(rng, 4, 10), random_word(rng, 4, 10)
        assert exponent_sum(w1 * w2) == exponent_sum(w1) + exponent_sum(w2)
        assert exponent_sum(inverse(w1)) == -exponent_sum(w1)
        assert exponent_sum(conjugate(w1, w2)) == exponent_sum(w1)
        assert underlying_permutation(w1 * w2) == underlying_permutation(w1).compose(underlying_permutation(w2))
