"""
Data model for loops of monic polynomials and what is computed from them.

A loop is a list of samples (theta_j, a_0(theta_j), ..., a_{n-1}(theta_j))
with 0 <= theta_0 < ... < theta_{S-1} < 2 pi, traversed counterclockwise.
Between samples the coefficients are interpolated linearly; the last sample
is joined back to the first by the closing chord.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterator

import numpy as np

import consts
from braids.word import BraidWord, Permutation
from utils.errors import LoopFormatError
from utils.poly_utils import interpolate


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclasses.dataclass(frozen=True, eq=False)
class PolynomialLoop:
    n: int
    thetas: np.ndarray
    coeffs: np.ndarray
    closure_tolerance: float = consts.DEFAULT_CLOSURE_TOLERANCE

    def __post_init__(self):
        thetas = np.array(self.thetas, dtype=float)
        coeffs = np.array(self.coeffs, dtype=complex)
        if self.n < consts.MIN_STRANDS:
            raise LoopFormatError(f"degree must be at least {consts.MIN_STRANDS}, got {self.n}")
        if thetas.ndim != 1 or len(thetas) < consts.MIN_LOOP_SAMPLES:
            raise LoopFormatError(f"a loop needs at least {consts.MIN_LOOP_SAMPLES} samples")
        if coeffs.shape != (len(thetas), self.n):
            raise LoopFormatError(f"expected {len(thetas)} coefficient tuples of length {self.n}, got shape {coeffs.shape}")
        if thetas[0] < 0 or thetas[-1] >= 2 * math.pi or np.any(np.diff(thetas) <= 0):
            raise LoopFormatError("angles must be strictly increasing in [0, 2pi)")
        if not np.all(np.isfinite(coeffs)):
            raise LoopFormatError("coefficients must be finite")
        if not self.closure_tolerance > 0:
            raise LoopFormatError("closure tolerance must be positive")
        object.__setattr__(self, "thetas", _frozen(thetas))
        object.__setattr__(self, "coeffs", _frozen(coeffs))

    @property
    def sample_count(self) -> int:
        return len(self.thetas)

    def segments(self) -> Iterator[tuple[float, float, np.ndarray, np.ndarray]]:
        """(theta_start, theta_end, coeffs_start, coeffs_end) for every chord, the closing one last."""
        count = self.sample_count
        for j in range(count):
            if j + 1 < count:
                yield self.thetas[j], self.thetas[j + 1], self.coeffs[j], self.coeffs[j + 1]
            else:
                yield self.thetas[j], self.thetas[0] + 2 * math.pi, self.coeffs[j], self.coeffs[0]


def reverse_loop(loop: PolynomialLoop) -> PolynomialLoop:
    """The same loop traversed clockwise: theta -> 2 pi - theta."""
    thetas = np.mod(2 * math.pi - loop.thetas, 2 * math.pi)
    order = np.argsort(thetas)
    return PolynomialLoop(loop.n, thetas[order], loop.coeffs[order], loop.closure_tolerance)


def refine_loop(loop: PolynomialLoop, factor: int) -> PolynomialLoop:
    """Insert factor-1 equally spaced interpolated samples into every chord."""
    if factor < 1:
        raise LoopFormatError("refinement factor must be at least 1")
    thetas, coeffs = [], []
    for theta0, theta1, c0, c1 in loop.segments():
        for k in range(factor):
            s = k / factor
            thetas.append(theta0 + s * (theta1 - theta0))
            coeffs.append(interpolate(c0, c1, s))
    return PolynomialLoop(loop.n, np.array(thetas), np.array(coeffs), loop.closure_tolerance)


@dataclasses.dataclass(frozen=True, eq=False)
class RootTrack:
    """
    Root positions along the refined grid. positions[k, j] is strand j at
    thetas[k]; the last row is the start polynomial again, reached through
    the closing chord.
    """
    loop: PolynomialLoop
    thetas: np.ndarray
    positions: np.ndarray
    refinements: tuple[int, ...]
    closure_error: float

    @property
    def point_count(self) -> int:
        return len(self.thetas)

    def permutation(self, epsilon: float = 0.0) -> Permutation:
        """Strand matching read in the projection rotated by epsilon; images[p] is the start position of the strand ending at p."""
        rotated = self.positions * np.exp(-1j * epsilon)
        start = np.argsort(rotated[0].real, kind="stable")
        end = np.argsort(rotated[-1].real, kind="stable")
        start_position = {int(strand): p for p, strand in enumerate(start)}
        return Permutation(tuple(start_position[int(strand)] + 1 for strand in end))


@dataclasses.dataclass(frozen=True)
class MonodromyResult:
    braid: BraidWord
    permutation: Permutation
    discriminant_index: int
    projection_angle: float = 0.0
