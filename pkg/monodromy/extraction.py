"""
Reading a braid word off a root track.

Strands are ordered by their projection onto the real axis (after rotating the
plane by -epsilon). Between consecutive grid points every strand moves along a
straight segment; each change of order between two strands is a crossing,
emitted as sigma_i when the strand with the smaller imaginary part passes from
position i to position i+1, and as sigma_i^-1 otherwise. With this convention
z^2 - e^{i theta} gives sigma_1 and a discriminant index of +1.
"""

from __future__ import annotations

import numpy as np

import consts
from braids.word import BraidWord, exponent_sum, underlying_permutation
from monodromy.discriminant import discriminant_index
from monodromy.loop import MonodromyResult, PolynomialLoop, RootTrack
from monodromy.tracking import track_roots
from utils.errors import CrossCheckFailed, ProjectionDegenerate


class _Degenerate(Exception):
    pass


def _has_ties(row: np.ndarray, tolerance: float) -> bool:
    return bool(np.any(np.diff(np.sort(row.real)) <= tolerance))


def _step_letters(a: np.ndarray, b: np.ndarray, order: list[int], tolerance: float) -> list[int]:
    """Crossings between grid rows a and b; order (strand at each position) is updated in place."""
    n = len(a)
    events = []
    for u in range(n):
        for v in range(u + 1, n):
            gap_a = a[u].real - a[v].real
            gap_b = b[u].real - b[v].real
            if gap_a * gap_b < 0:
                events.append((gap_a / (gap_a - gap_b), u, v))
    events.sort()

    letters = []
    for t, u, v in events:
        pu, pv = order.index(u), order.index(v)
        if abs(pu - pv) != 1:
            raise _Degenerate()
        left, right = (u, v) if pu < pv else (v, u)
        z_left = a[left] + t * (b[left] - a[left])
        z_right = a[right] + t * (b[right] - a[right])
        if abs(z_left.imag - z_right.imag) <= tolerance:
            raise _Degenerate()
        position = min(pu, pv)
        letters.append(position + 1 if z_left.imag < z_right.imag else -(position + 1))
        order[pu], order[pv] = order[pv], order[pu]

    if order != [int(s) for s in np.argsort(b.real, kind="stable")]:
        raise _Degenerate()
    return letters


def _read_braid(track: RootTrack, epsilon: float) -> list[int]:
    z = track.positions * np.exp(-1j * epsilon)
    spread = max(np.ptp(z.real), np.ptp(z.imag))
    tolerance = consts.TIE_TOLERANCE * spread
    if any(_has_ties(row, tolerance) for row in z):
        raise _Degenerate()
    order = [int(s) for s in np.argsort(z[0].real, kind="stable")]
    letters: list[int] = []
    for k in range(len(z) - 1):
        letters.extend(_step_letters(z[k], z[k + 1], order, tolerance))
    return letters


def extract_braid(track: RootTrack) -> MonodromyResult:
    n = track.loop.n
    for epsilon in consts.PROJECTION_PROBES:
        try:
            letters = _read_braid(track, epsilon)
        except _Degenerate:
            continue
        break
    else:
        raise ProjectionDegenerate(f"no projection angle in {consts.PROJECTION_PROBES} avoids ties")

    braid = BraidWord(n, tuple(letters))
    permutation = track.permutation(epsilon)
    if underlying_permutation(braid) != permutation:
        raise CrossCheckFailed("braid permutation differs from the strand matching")
    index = discriminant_index(track.loop)
    if exponent_sum(braid) != index:
        raise CrossCheckFailed(f"exponent sum {exponent_sum(braid)} differs from discriminant index {index}")
    return MonodromyResult(braid, permutation, index, epsilon)


def braid_monodromy(loop: PolynomialLoop, threads: int = consts.DEFAULT_THREADS) -> MonodromyResult:
    return extract_braid(track_roots(loop, threads))
