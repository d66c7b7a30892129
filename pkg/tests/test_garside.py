import random
from collections import defaultdict

import numpy as np
import pytest

from braid_samples import freely_reduced_words, random_word
from braids.burau import burau_generator, burau_matrix, oracle_parameter
from braids.garside import GarsideNormalForm, in_cyclic_subgroup, is_identity, normal_form, words_equal
from braids.word import (
    BraidWord,
    Permutation,
    conjugate,
    full_twist,
    garside_element3,
    half_twist,
    inverse,
    parse_braid,
    power,
)
from utils.errors import StrandMismatchError, UnsupportedError


def test_normal_form_examples():
    assert normal_form(parse_braid("1 -1", 3)) == GarsideNormalForm(3, 0, ())
    assert normal_form(parse_braid("-1", 2)) == GarsideNormalForm(2, -1, ())
    nf = normal_form(parse_braid("1 2 2 1", 3))
    assert nf.delta_power == 0
    assert nf.factors == (Permutation((2, 3, 1)), Permutation((3, 1, 2)))
    assert str(nf) == "D^0 [2 3 1] [3 1 2]"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_twists_are_delta_powers(n):
    assert normal_form(half_twist(n)) == GarsideNormalForm(n, 1, ())
    assert normal_form(full_twist(n)) == GarsideNormalForm(n, 2, ())
    assert normal_form(inverse(half_twist(n))) == GarsideNormalForm(n, -1, ())


def test_relations():
    assert words_equal(parse_braid("1 2 1", 3), parse_braid("2 1 2", 3))
    assert words_equal(parse_braid("1 3", 4), parse_braid("3 1", 4))
    assert not words_equal(parse_braid("1 2", 3), parse_braid("2 1", 3))
    assert not words_equal(parse_braid("1 2", 4), parse_braid("2 3", 4))
    assert is_identity(parse_braid("1 2 -2 -1", 3))
    assert not is_identity(parse_braid("1 -2", 3))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_delta_conjugation_flips_generators(n):
    delta = half_twist(n)
    for i in range(1, n):
        assert words_equal(conjugate(BraidWord.generator(i, n), delta), BraidWord.generator(n - i, n))


def test_full_twist_is_central():
    rng = random.Random(3)
    for _ in range(30):
        w = random_word(rng, 4, 12)
        assert words_equal(conjugate(w, full_twist(4)), w)


def test_normal_form_measures():
    nf = normal_form(parse_braid("-1 -1 2", 3))
    assert nf.infimum == -2
    assert nf.supremum == nf.infimum + nf.canonical_length
    assert normal_form(parse_braid("1 2 1 1", 3)).infimum == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_to_word_round_trip(n):
    rng = random.Random(n)
    for _ in range(50):
        w = random_word(rng, n, 15)
        nf = normal_form(w)
        assert normal_form(nf.to_word()) == nf
        assert words_equal(nf.to_word(), w)


def test_words_equal_is_invariant_under_free_insertions():
    rng = random.Random(11)
    for _ in range(50):
        w = random_word(rng, 4, 10)
        k = rng.randint(0, len(w))
        i = rng.choice([1, 2, 3, -1, -2, -3])
        padded = BraidWord(4, w.letters[:k] + (i, -i) + w.letters[k:])
        assert words_equal(w, padded)


def test_words_equal_rejects_mismatched_strands():
    with pytest.raises(StrandMismatchError):
        words_equal(parse_braid("1", 3), parse_braid("1", 4))


def test_in_cyclic_subgroup():
    g = parse_braid("1 2", 3)
    assert in_cyclic_subgroup(power(g, 4), g) == 4
    assert in_cyclic_subgroup(parse_braid("1 1 2 1", 3), g) == 2
    assert in_cyclic_subgroup(BraidWord.identity(3), g) == 0
    assert in_cyclic_subgroup(parse_braid("-2 -1", 3), g) == -1
    assert in_cyclic_subgroup(parse_braid("1", 3), g) is None
    assert in_cyclic_subgroup(parse_braid("2 1", 3), g) is None
    with pytest.raises(UnsupportedError):
        in_cyclic_subgroup(parse_braid("1", 3), parse_braid("1 -2", 3))


def _burau_key(matrix):
    return tuple(np.round(matrix, 6).ravel().tolist())


@pytest.mark.slow
def test_word_problem_agrees_with_burau_oracle():
    t = oracle_parameter()
    generators = {letter: burau_generator(abs(letter), 3, t) for letter in (1, 2)}
    generators.update({-letter: np.linalg.inv(generators[letter]) for letter in (1, 2)})

    classes = defaultdict(list)
    for letters, matrix in freely_reduced_words(3, 8, np.eye(2, dtype=complex), lambda m, x: m @ generators[x]):
        classes[normal_form(BraidWord(3, letters))].append(matrix)

    by_key = {}
    for nf, matrices in classes.items():
        reference = matrices[0]
        for matrix in matrices[1:]:
            assert np.allclose(matrix, reference, atol=1e-8, rtol=0)
        key = _burau_key(reference)
        if key in by_key:
            assert not np.allclose(by_key[key][1], reference, atol=1e-8, rtol=0), (nf, by_key[key][0])
        by_key[key] = (nf, reference)

    # the folded matrices agree with the direct product
    assert np.allclose(burau_matrix(parse_braid("1 2 1", 3), t), burau_matrix(parse_braid("2 1 2", 3), t))


def test_garside_element_is_the_full_twist():
    g = garside_element3()
    assert normal_form(g) == GarsideNormalForm(3, 2, ())
    assert words_equal(g, full_twist(3))
    assert in_cyclic_subgroup(full_twist(3), parse_braid("1 2", 3)) == 3
    s1 = parse_braid("1", 3)
    assert words_equal(full_twist(3) * s1, s1 * full_twist(3))


def test_normal_form_is_idempotent():
    rng = random.Random(4)
    for _ in range(30):
        nf = normal_form(random_word(rng, 4, 12))
        assert normal_form(nf.to_word()).to_word() == nf.to_word()
