"""
Reduced Burau representation of B_n and what it is used for here:

- the spectral radius at a unit-modulus parameter bounds the entropy of the
  braid's mapping class from below;
- at a generic parameter the representation is faithful on B_3, which gives an
  independent numerical oracle for the word problem.
"""

import cmath
import math
from typing import Iterable

import numpy as np

import consts
from braids.word import BraidWord
from utils.errors import DomainError, StrandMismatchError


def burau_generator(i: int, n: int, t: complex) -> np.ndarray:
    """
    Reduced Burau matrix of sigma_i, size (n-1) x (n-1).

    Row i-1 carries (t, -t, 1) around the diagonal, truncated at the borders,
    so for n = 3: sigma_1 -> [[-t, 1], [0, 1]], sigma_2 -> [[1, 0], [t, -t]].
    """
    m = n - 1
    matrix = np.eye(m, dtype=complex)
    r = i - 1
    matrix[r, r] = -t
    if r - 1 >= 0:
        matrix[r, r - 1] = t
    if r + 1 < m:
        matrix[r, r + 1] = 1
    return matrix


def burau_matrix(w: BraidWord, t: complex) -> np.ndarray:
    generators = {}
    result = np.eye(w.n - 1, dtype=complex)
    for letter in w.letters:
        if letter not in generators:
            g = burau_generator(abs(letter), w.n, t)
            generators[letter] = g if letter > 0 else np.linalg.inv(g)
        result = result @ generators[letter]
    return result


# sigma_i^{+-1} at t = -1 on three strands, integer entries and determinant 1
_INTEGER_GENERATORS3 = {
    1: ((1, 1), (0, 1)),
    -1: ((1, -1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    -2: ((1, 0), (1, 1)),
}


def integer_trace3(w: BraidWord) -> int:
    """Exact trace of the reduced Burau matrix of a 3-braid at t = -1."""
    (a, b), (c, d) = (1, 0), (0, 1)
    for letter in w.letters:
        (p, q), (r, s) = _INTEGER_GENERATORS3[letter]
        a, b, c, d = a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s
    return a + d


def log_radius_from_trace(trace: int) -> float:
    """log of the spectral radius (t + sqrt(t^2 - 4)) / 2 of a determinant-1 2x2 matrix, t = |trace| > 2, else 0."""
    t = abs(trace)
    if t <= 2:
        return 0.0
    if t.bit_length() <= consts.BIG_TRACE_BITS:
        return math.acosh(t / 2)
    # log(lambda) = log(t) - O(t^-2), below double precision at this size
    return math.log(t)


def spectral_radius(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(np.linalg.eigvals(matrix))))


def unit_radius_tolerance(matrix: np.ndarray) -> float:
    """
    How far a computed spectral radius may sit above 1 when the true radius is 1.

    An eigenvalue in a Jordan block of size k moves by about (eps |M|)^(1/k)
    under rounding, and k is at most the matrix size.
    """
    size = matrix.shape[0]
    noise = (np.finfo(float).eps * float(np.linalg.norm(matrix, 2))) ** (1.0 / size)
    return max(consts.SPECTRAL_RADIUS_TOLERANCE, consts.DEFECTIVE_EIGENVALUE_FACTOR * noise)


def entropy_lower_bound_burau(w: BraidWord, t_samples: Iterable[complex] = consts.DEFAULT_BURAU_SAMPLES) -> float:
    """
    max over the samples of log+ of the spectral radius of the reduced Burau matrix.

    Every parameter must lie on the unit circle. A radius within
    unit_radius_tolerance of 1 counts as 1. On three strands at t = -1 the
    radius comes from the exact integer trace.
    """
    best = 0.0
    for t in t_samples:
        if abs(abs(t) - 1) > consts.UNIT_CIRCLE_TOLERANCE:
            raise DomainError(f"Burau parameter {t} is not on the unit circle")
        if w.n == 3 and t == -1:
            best = max(best, log_radius_from_trace(integer_trace3(w)))
            continue
        matrix = burau_matrix(w, t)
        radius = spectral_radius(matrix)
        if radius - 1 > unit_radius_tolerance(matrix):
            best = max(best, math.log(radius))
    return best


def oracle_parameter() -> complex:
    # e^{0.7i} is transcendental, where the reduced Burau of B_3 is faithful
    return cmath.exp(1j * consts.ORACLE_PARAMETER_ANGLE)


def burau_oracle_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Numerical word-problem check, exact on B_3 up to floating point."""
    if w1.n != w2.n:
        raise StrandMismatchError(f"strand counts differ: {w1.n} and {w2.n}")
    t = oracle_parameter()
    return bool(np.allclose(burau_matrix(w1, t), burau_matrix(w2, t), atol=consts.ORACLE_TOLERANCE, rtol=0))
