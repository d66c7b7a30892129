import math
import random

import numpy as np
import pytest

import consts
from braids.garside import words_equal
from braids.word import BraidWord, Permutation, exponent_sum, parse_braid, power
from invariants.thurston3 import conj_equal3
from loop_generator import (
    analytic_index,
    constant_loop,
    generate_loop,
    linear_factor_loop,
    random_linear_factor_parameters,
    root_power_loop,
)
from monodromy.criteria import is_irreducible_class
from monodromy.extraction import braid_monodromy, extract_braid
from monodromy.loop import refine_loop, reverse_loop
from monodromy.tracking import match_roots, matching, track_roots


def test_matching_follows_nearest_roots():
    previous = np.array([0, 1, 1j])
    current = np.array([1.01j, 0.02, 0.99])
    assert list(matching(previous, current)) == [1, 2, 0]
    assert np.allclose(match_roots(previous, current), [0.02, 0.99, 1.01j])


def test_track_shape():
    loop = root_power_loop(3)
    track = track_roots(loop)
    assert track.positions.shape == (track.point_count, 3)
    assert track.thetas[0] == 0
    assert track.thetas[-1] == pytest.approx(2 * math.pi)
    assert np.all(np.diff(track.thetas) > 0)
    assert len(track.refinements) == loop.sample_count
    assert track.closure_error < 1e-9


def test_square_root_loop():
    result = braid_monodromy(root_power_loop(2))
    assert result.braid.letters == (1,)
    assert result.discriminant_index == 1
    assert result.permutation == Permutation((2, 1))


def test_cube_root_loop():
    result = braid_monodromy(root_power_loop(3))
    assert conj_equal3(result.braid, parse_braid("1 2", 3))
    assert result.discriminant_index == 2
    assert result.permutation.is_n_cycle()


@pytest.mark.parametrize("n", [4, 5])
def test_root_power_loops_give_periodic_braids(n):
    result = braid_monodromy(root_power_loop(n))
    assert exponent_sum(result.braid) == n - 1
    assert result.permutation.is_n_cycle()
    # the n-th power of the rotation is the full twist
    assert words_equal(power(result.braid, n), power(BraidWord(n, tuple(range(1, n))), n))


def test_constant_loop():
    result = braid_monodromy(constant_loop([1, -1, 2j]))
    assert result.braid == BraidWord.identity(3)
    assert result.discriminant_index == 0
    assert result.permutation.is_identity()


def test_reversed_loop_gives_inverse_braid():
    assert braid_monodromy(reverse_loop(root_power_loop(2))).braid.letters == (-1,)
    result = braid_monodromy(reverse_loop(root_power_loop(3)))
    assert conj_equal3(result.braid, parse_braid("-2 -1", 3))
    assert result.discriminant_index == -2


@pytest.mark.parametrize("n", [2, 3])
def test_refined_loop_gives_same_braid(n):
    loop = root_power_loop(n)
    refined_loop = refine_loop(loop, 2)
    assert refined_loop.sample_count == 2 * loop.sample_count
    original = braid_monodromy(loop)
    refined = braid_monodromy(refined_loop)
    assert words_equal(original.braid, refined.braid)
    assert refined.discriminant_index == original.discriminant_index == n - 1
    assert refined.permutation == original.permutation
    resampled = braid_monodromy(root_power_loop(n, samples=2 * loop.sample_count))
    assert words_equal(original.braid, resampled.braid)
    assert resampled.discriminant_index == original.discriminant_index


def test_degree_five_random_loop():
    loop, expected = generate_loop("random", 5, seed=1)
    assert loop.sample_count == consts.DEFAULT_LOOP_SAMPLES
    result = braid_monodromy(loop)
    assert result.discriminant_index == expected
    assert exponent_sum(result.braid) == expected


def test_threads_do_not_change_the_result():
    loop = linear_factor_loop([0.6, 1.0, 1.4], [1, -1, 2], [0.3, 1.1, 2.0])
    assert braid_monodromy(loop, threads=4) == braid_monodromy(loop, threads=1)


def test_sparse_loop_is_refined():
    loop = linear_factor_loop([1.2, 1.0], [3, 0], samples=32)
    track = track_roots(loop)
    assert sum(track.refinements) > 0
    result = extract_braid(track)
    assert result.discriminant_index == 6
    assert words_equal(result.braid, power(parse_braid("1", 2), 6))


def test_projection_angle_is_recorded():
    # the grid of z^2 - e^{i theta} hits theta = pi, where the roots +-i tie in the real projection
    result = braid_monodromy(root_power_loop(2))
    assert result.projection_angle > 0


@pytest.mark.slow
def test_index_identity_on_random_linear_factor_loops():
    rng = random.Random(100)
    for _ in range(100):
        n = rng.randint(2, 5)
        radii, windings, phases = random_linear_factor_parameters(rng, n)
        loop = linear_factor_loop(radii, windings, phases)
        result = braid_monodromy(loop)
        expected = analytic_index(radii, windings)
        assert result.discriminant_index == expected
        assert exponent_sum(result.braid) == expected
        # every root comes back to itself
        assert not is_irreducible_class(result)
