"""
Discriminant of monic polynomials, the separability certificate of a loop,
and the discriminant index (winding number of D_n along the loop).
"""

import cmath
import math

import numpy as np

import consts
from monodromy.loop import PolynomialLoop
from utils.errors import RefinementExhausted, SeparabilityViolation, WindingAmbiguous
from utils.poly_utils import interpolate, min_pairwise_gap, polynomial_roots, root_scale, to_numpy_poly


def sylvester_matrix(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Sylvester matrix of two polynomials given highest degree first."""
    m, k = len(p) - 1, len(q) - 1
    size = m + k
    matrix = np.zeros((size, size), dtype=complex)
    for row in range(k):
        matrix[row, row:row + m + 1] = p
    for row in range(m):
        matrix[k + row, row:row + k + 1] = q
    return matrix


def discriminant(n: int, coeffs) -> complex:
    """(-1)^(n(n-1)/2) Res(p, p') for the monic p with lower coefficients coeffs."""
    p = to_numpy_poly(np.asarray(coeffs, dtype=complex))
    if len(p) != n + 1:
        raise ValueError(f"expected {n} coefficients, got {len(p) - 1}")
    resultant = np.linalg.det(sylvester_matrix(p, np.polyder(p)))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return complex(sign * resultant)


def separation(coeffs, roots=None) -> float:
    """
    Squared smallest root gap over max(1, root scale)^2. For n = 2 this is
    |D_2| / max(1, scale)^2.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    if roots is None:
        roots = polynomial_roots(coeffs)
    return (min_pairwise_gap(roots) / max(1.0, root_scale(coeffs))) ** 2


def validate_separable(loop: PolynomialLoop) -> float:
    """
    Return min |D_n| over the samples; raise SeparabilityViolation if the
    separation of some sample is at or below the relative floor.
    """
    ratios = np.array([separation(c) for c in loop.coeffs])
    worst = int(np.argmin(ratios))
    if ratios[worst] <= consts.SEPARABILITY_RELATIVE_FLOOR:
        raise SeparabilityViolation(
            f"root separation {ratios[worst]:.3e} at theta = {loop.thetas[worst]:.6f} "
            f"is not above the floor {consts.SEPARABILITY_RELATIVE_FLOOR:.3e}"
        )
    return float(min(abs(discriminant(loop.n, c)) for c in loop.coeffs))


def _chord_winding(n: int, c0: np.ndarray, c1: np.ndarray, d0: complex, d1: complex) -> float:
    total = 0.0
    pending = [(0.0, 1.0, d0, d1, 0)]
    while pending:
        s0, s1, da, db, depth = pending.pop()
        step = cmath.phase(db / da)
        if abs(step) < consts.WINDING_STEP_BOUND:
            total += step
            continue
        if depth >= consts.MAX_REFINEMENT_DEPTH:
            raise RefinementExhausted(f"argument step {step:.3f} still too large after {depth} bisections")
        mid = (s0 + s1) / 2
        coeffs = interpolate(c0, c1, mid)
        dm = discriminant(n, coeffs)
        if separation(coeffs) <= consts.SEPARABILITY_RELATIVE_FLOOR:
            raise SeparabilityViolation(
                "an interpolated chord leaves the separable locus; supply denser samples"
            )
        pending.append((mid, s1, dm, db, depth + 1))
        pending.append((s0, mid, da, dm, depth + 1))
    return total


def discriminant_index(loop: PolynomialLoop) -> int:
    """Degree of theta -> D_n / |D_n| along the loop."""
    validate_separable(loop)
    total = 0.0
    for _, _, c0, c1 in loop.segments():
        total += _chord_winding(loop.n, c0, c1, discriminant(loop.n, c0), discriminant(loop.n, c1))
    turns = total / (2 * math.pi)
    index = round(turns)
    if abs(turns - index) >= consts.WINDING_RESIDUE_BOUND:
        raise WindingAmbiguous(f"accumulated winding {turns:.4f} is not near an integer")
    return int(index)
