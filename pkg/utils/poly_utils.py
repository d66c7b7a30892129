"""Helpers for monic polynomials given by their lower coefficients a_0, ..., a_{n-1}."""

import numpy as np

import consts


def to_numpy_poly(coeffs: np.ndarray) -> np.ndarray:
    """Coefficients highest degree first, leading 1 included, as numpy.polyval wants them."""
    return np.concatenate(([1.0 + 0j], np.asarray(coeffs, dtype=complex)[::-1]))


def from_roots(roots) -> np.ndarray:
    """Lower coefficients a_0, ..., a_{n-1} of prod (z - root)."""
    return np.poly(np.asarray(roots, dtype=complex))[::-1][:-1].astype(complex)


def companion_matrix(coeffs: np.ndarray) -> np.ndarray:
    n = len(coeffs)
    matrix = np.eye(n, k=-1, dtype=complex)
    matrix[:, -1] -= np.asarray(coeffs, dtype=complex)
    return matrix


def newton_polish(coeffs: np.ndarray, roots: np.ndarray, steps: int = consts.NEWTON_POLISH_STEPS) -> np.ndarray:
    p = to_numpy_poly(coeffs)
    dp = np.polyder(p)
    roots = np.array(roots, dtype=complex)
    for _ in range(steps):
        slope = np.polyval(dp, roots)
        safe = slope != 0
        roots[safe] -= np.polyval(p, roots[safe]) / slope[safe]
    return roots


def polynomial_roots(coeffs: np.ndarray) -> np.ndarray:
    """Companion-matrix eigenvalues followed by a Newton polish."""
    return newton_polish(coeffs, np.linalg.eigvals(companion_matrix(coeffs)))


def interpolate(c0: np.ndarray, c1: np.ndarray, s: float) -> np.ndarray:
    return (1 - s) * c0 + s * c1


def root_scale(coeffs: np.ndarray) -> float:
    """max_j |a_j|^(1/(n-j)), the size of the roots up to a factor 2."""
    n = len(coeffs)
    magnitudes = np.abs(np.asarray(coeffs, dtype=complex))
    return float(max(magnitudes[j] ** (1.0 / (n - j)) for j in range(n)))


def min_pairwise_gap(points: np.ndarray) -> float:
    diffs = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(diffs, np.inf)
    return float(diffs.min())
