"""
Root tracking along a polynomial loop.

Each chord of the loop is followed from s = 0 to s = 1. A step is accepted
when the displacement of every root, under the matching that minimizes total
displacement, is below half the smallest root gap at the start of the step;
otherwise the step is bisected. Chords are independent and may be tracked in
parallel; stitching them together is sequential.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.optimize import linear_sum_assignment

import consts
from monodromy.discriminant import separation, validate_separable
from monodromy.loop import PolynomialLoop, RootTrack
from utils.errors import CrossCheckFailed, RefinementExhausted, SeparabilityViolation
from utils.poly_utils import interpolate, min_pairwise_gap, polynomial_roots, root_scale


def matching(previous: np.ndarray, current: np.ndarray) -> np.ndarray:
    """Indices such that current[indices[j]] continues previous[j] with least total displacement."""
    _, columns = linear_sum_assignment(np.abs(previous[:, None] - current[None, :]))
    return columns


def match_roots(previous: np.ndarray, current: np.ndarray) -> np.ndarray:
    return current[matching(previous, current)]


def _track_chord(c0: np.ndarray, c1: np.ndarray) -> tuple[list[float], list[np.ndarray]]:
    s_values = [0.0]
    roots = [polynomial_roots(c0)]
    # stack of (target s, depth of the interval ending there); top is the next target
    pending = [(1.0, 0)]
    while pending:
        target, depth = pending[-1]
        coeffs = interpolate(c0, c1, target)
        current = polynomial_roots(coeffs)
        if separation(coeffs, current) <= consts.SEPARABILITY_RELATIVE_FLOOR:
            raise SeparabilityViolation(
                "an interpolated chord leaves the separable locus; supply denser samples"
            )
        previous = roots[-1]
        candidate = match_roots(previous, current)
        displacement = float(np.max(np.abs(candidate - previous)))
        if displacement < consts.CERTIFIED_STEP_FRACTION * min_pairwise_gap(previous):
            pending.pop()
            s_values.append(target)
            roots.append(candidate)
            continue
        if depth >= consts.MAX_REFINEMENT_DEPTH:
            raise RefinementExhausted(f"step not certified after {depth} bisections")
        pending[-1] = (target, depth + 1)
        pending.append(((s_values[-1] + target) / 2, depth + 1))
    return s_values, roots


def track_roots(loop: PolynomialLoop, threads: int = consts.DEFAULT_THREADS) -> RootTrack:
    validate_separable(loop)
    chords = list(loop.segments())

    def run(chord):
        _, _, c0, c1 = chord
        return _track_chord(c0, c1)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, chords))
    else:
        results = [run(chord) for chord in chords]

    thetas: list[float] = []
    positions: list[np.ndarray] = []
    refinements = []
    for (theta0, theta1, _, _), (s_values, roots) in zip(chords, results):
        if positions:
            # the chord starts where the previous one ended; carry the strand labels over
            order = matching(positions[-1], roots[0])
            roots = [r[order] for r in roots]
            thetas.pop()
            positions.pop()
        thetas.extend(theta0 + s * (theta1 - theta0) for s in s_values)
        positions.extend(roots)
        refinements.append(len(s_values) - 2)

    positions_array = np.array(positions)
    start, end = positions_array[0], positions_array[-1]
    closure_error = float(np.max(np.min(np.abs(end[:, None] - start[None, :]), axis=1)))
    tolerance = loop.closure_tolerance * max(1.0, root_scale(loop.coeffs[0]))
    if closure_error > tolerance:
        raise CrossCheckFailed(f"tracked roots do not close up (error {closure_error:.3e})")
    return RootTrack(loop, np.array(thetas), positions_array, tuple(refinements), closure_error)
