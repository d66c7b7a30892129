import math
import random

import pytest

import consts
from braid_samples import freely_reduced_words, random_word
from braids.word import BraidWord, concat, conjugate, full_twist, inverse, parse_braid, power
from invariants.thurston3 import (
    Psl2zImage,
    ThurstonType,
    classify3,
    classify_image,
    conj_equal3,
    conjugacy_key3,
    entropy3,
    entropy_bound,
    entropy_from_trace,
    minimal_entropy,
    parabolic_index,
    penner_floor,
    psl2z_conjugacy_class,
    psl2z_generator,
    psl2z_image,
    thurston_report,
)
from utils.errors import DomainError, UnsupportedError


def test_psl2z_images():
    assert psl2z_image(parse_braid("1 -2", 3)) == Psl2zImage(2, 1, 1, 1)
    assert psl2z_image(parse_braid("1 2", 3)).trace == 1
    assert psl2z_image(power(parse_braid("1 2", 3), 3)).is_identity()
    with pytest.raises(ValueError):
        Psl2zImage(-1, 0, 0, -1)
    assert Psl2zImage.normalized(-1, 0, 0, -1).is_identity()


def test_classification_examples():
    assert classify3(parse_braid("1 -2", 3)) is ThurstonType.PSEUDO_ANOSOV
    assert classify3(parse_braid("1 2", 3)) is ThurstonType.PERIODIC
    assert classify3(parse_braid("1 2 1", 3)) is ThurstonType.PERIODIC
    assert classify3(BraidWord.identity(3)) is ThurstonType.PERIODIC
    assert classify3(full_twist(3)) is ThurstonType.PERIODIC
    assert classify3(parse_braid("1", 3)) is ThurstonType.REDUCIBLE
    assert classify3(parse_braid("1 1 1", 3) * full_twist(3)) is ThurstonType.REDUCIBLE
    assert str(ThurstonType.PSEUDO_ANOSOV) == "PseudoAnosov"


def test_minimal_entropy_braid():
    report = thurston_report(parse_braid("1 -2", 3))
    assert report.thurston_type is ThurstonType.PSEUDO_ANOSOV
    assert report.entropy.value == pytest.approx(0.962423650119, abs=1e-9)
    assert report.module.value == pytest.approx(math.pi / (2 * consts.MIN_ENTROPY_3), abs=1e-12)
    assert report.module.value == pytest.approx(1.63213, abs=1e-5)
    assert report.module.exact


def test_periodic_report_has_infinite_module():
    report = thurston_report(parse_braid("1 2", 3))
    assert report.entropy.is_zero
    assert report.module.is_infinite


def test_classify_needs_three_strands():
    with pytest.raises(UnsupportedError):
        classify3(parse_braid("1", 4))
    with pytest.raises(UnsupportedError):
        thurston_report(parse_braid("1 -2 3", 4))


def test_entropy_from_trace():
    assert entropy_from_trace(2) == 0.0
    assert entropy_from_trace(-1) == 0.0
    assert entropy_from_trace(3) == pytest.approx(consts.MIN_ENTROPY_3)
    assert entropy_from_trace(-3) == entropy_from_trace(3)
    big = 2 ** 80
    assert entropy_from_trace(big) == pytest.approx(math.log(big), rel=1e-15)


def test_entropy_of_long_words_stays_finite():
    h = entropy3(power(parse_braid("1 -2", 3), 200))
    assert h.value == pytest.approx(200 * consts.MIN_ENTROPY_3, rel=1e-12)


def test_penner_floor_and_minimal_entropy():
    assert penner_floor(3) == pytest.approx(math.log(2) / 12)
    assert penner_floor(3) == pytest.approx(0.0577623, abs=1e-7)
    with pytest.raises(DomainError):
        penner_floor(2)
    assert minimal_entropy(3).value == consts.MIN_ENTROPY_3
    assert minimal_entropy(3).exact
    assert not minimal_entropy(5).exact
    assert minimal_entropy(5).value == penner_floor(5)


def test_entropy_bound_is_exact_only_on_three_strands():
    assert entropy_bound(parse_braid("1 -2", 3)).exact
    bound = entropy_bound(parse_braid("1 -2 3", 4))
    assert not bound.exact
    assert bound.value >= 0


def test_parabolic_index():
    assert parabolic_index(psl2z_image(parse_braid("1 1 1", 3))) == 3
    assert parabolic_index(psl2z_image(parse_braid("-1 -1", 3))) == -2
    assert parabolic_index(psl2z_image(parse_braid("2 2", 3))) == 2
    # conjugation does not move the index
    w = conjugate(parse_braid("1 1 1 1", 3), parse_braid("2 -1 2", 3))
    assert parabolic_index(psl2z_image(w)) == 4
    with pytest.raises(ValueError):
        parabolic_index(psl2z_image(parse_braid("1 -2", 3)))


def test_conjugacy_classes_of_small_words():
    assert psl2z_conjugacy_class(BraidWord.identity(3)) == ("order1",)
    assert psl2z_conjugacy_class(full_twist(3)) == ("order1",)
    assert psl2z_conjugacy_class(parse_braid("1 2 1", 3)) == ("order2",)
    assert psl2z_conjugacy_class(parse_braid("1 2", 3))[0] == "order3"
    assert psl2z_conjugacy_class(parse_braid("1 1 1", 3)) == ("parabolic", 3)
    assert psl2z_conjugacy_class(parse_braid("2 2 2", 3)) == ("parabolic", 3)
    assert psl2z_conjugacy_class(conjugate(parse_braid("-1 -1", 3), parse_braid("1 -2", 3))) == ("parabolic", -2)
    assert conj_equal3(parse_braid("1", 3), parse_braid("2", 3))
    assert conj_equal3(parse_braid("1 2", 3), parse_braid("2 1", 3))
    assert conj_equal3(parse_braid("1 -2", 3), parse_braid("-2 1", 3))
    assert not conj_equal3(parse_braid("1", 3), parse_braid("-1", 3))
    assert not conj_equal3(parse_braid("1 2", 3), parse_braid("-1 -2", 3))
    assert not conj_equal3(parse_braid("1 1", 3), parse_braid("1 2", 3))


def test_conjugacy_key_is_conjugation_invariant():
    rng = random.Random(5)
    for _ in range(200):
        w = random_word(rng, 3, 12)
        g = random_word(rng, 3, 6)
        assert conjugacy_key3(conjugate(w, g)) == conjugacy_key3(w)


def test_conjugacy_key_separates_traces():
    rng = random.Random(6)
    words = [random_word(rng, 3, 10) for _ in range(300)]
    for w1, w2 in zip(words, words[1:]):
        if conj_equal3(w1, w2):
            assert abs(psl2z_image(w1).trace) == abs(psl2z_image(w2).trace)


def _random_pseudo_anosov(rng):
    while True:
        w = random_word(rng, 3, 20)
        if classify3(w) is ThurstonType.PSEUDO_ANOSOV:
            return w


def test_entropy_is_linear_in_powers():
    rng = random.Random(2024)
    for _ in range(200):
        w = _random_pseudo_anosov(rng)
        h = entropy3(w).value
        for l in (-3, -2, -1, 1, 2, 3):
            assert entropy3(power(w, l)).value == pytest.approx(abs(l) * h, abs=1e-9)
            m = thurston_report(power(w, l)).module.value
            assert m == pytest.approx(math.pi / (2 * abs(l) * h), rel=1e-9)


def test_psl2z_image_is_a_homomorphism():
    rng = random.Random(31)
    for _ in range(200):
        w1, w2 = random_word(rng, 3, 12), random_word(rng, 3, 12)
        assert psl2z_image(concat(w1, w2)) == psl2z_image(w1) @ psl2z_image(w2)


def test_entropy_is_invariant_under_inversion():
    rng = random.Random(32)
    for _ in range(200):
        w = random_word(rng, 3, 20)
        assert entropy3(inverse(w)) == entropy3(w)
        assert classify3(inverse(w)) is classify3(w)


@pytest.mark.slow
def test_minimal_entropy_over_short_words():
    nonzero = set()
    for letters, image in freely_reduced_words(3, 10, Psl2zImage.identity(), lambda m, x: m @ psl2z_generator(x)):
        kind = classify_image(image)
        h = entropy_from_trace(image.trace) if kind is ThurstonType.PSEUDO_ANOSOV else 0.0
        if kind is ThurstonType.PSEUDO_ANOSOV:
            assert h >= consts.MIN_ENTROPY_3 - 1e-12, letters
            nonzero.add(round(h, 12))
        else:
            assert h == 0.0
    assert min(nonzero) == pytest.approx(consts.MIN_ENTROPY_3, abs=1e-12)
    assert all(h > penner_floor(3) for h in nonzero)
