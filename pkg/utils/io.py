import json
import os

import numpy as np
import pandas as pd

import consts
from monodromy.loop import PolynomialLoop, RootTrack
from utils.errors import LoopFormatError


def _parse_coefficient(value) -> complex:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise LoopFormatError(f"a coefficient must be a [re, im] pair, got {value!r}")
    re, im = value
    if isinstance(re, bool) or isinstance(im, bool) or not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
        raise LoopFormatError(f"coefficient parts must be numbers, got {value!r}")
    return complex(re, im)


def loop_from_dict(data) -> PolynomialLoop:
    if not isinstance(data, dict) or "n" not in data or "samples" not in data:
        raise LoopFormatError("a loop needs the fields 'n' and 'samples'")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise LoopFormatError(f"'n' must be an integer, got {n!r}")
    samples = data["samples"]
    if not isinstance(samples, list):
        raise LoopFormatError("'samples' must be a list")

    thetas, coeffs = [], []
    for k, sample in enumerate(samples):
        if not isinstance(sample, dict) or "theta" not in sample or "coeffs" not in sample:
            raise LoopFormatError(f"sample {k} needs the fields 'theta' and 'coeffs'")
        theta = sample["theta"]
        if isinstance(theta, bool) or not isinstance(theta, (int, float)):
            raise LoopFormatError(f"sample {k}: 'theta' must be a number")
        row = sample["coeffs"]
        if not isinstance(row, list) or len(row) != n:
            raise LoopFormatError(f"sample {k}: expected {n} coefficients")
        thetas.append(float(theta))
        coeffs.append([_parse_coefficient(c) for c in row])

    tolerance = data.get("closure_tolerance", consts.DEFAULT_CLOSURE_TOLERANCE)
    return PolynomialLoop(n, np.array(thetas), np.array(coeffs, dtype=complex).reshape(len(thetas), n), tolerance)


def loop_to_dict(loop: PolynomialLoop) -> dict:
    return {
        "n": loop.n,
        "samples": [
            {"theta": float(theta), "coeffs": [[float(c.real), float(c.imag)] for c in row]}
            for theta, row in zip(loop.thetas, loop.coeffs)
        ],
    }


def load_loop(filename) -> PolynomialLoop:
    """Load a loop file: n, then samples of theta and [re, im] coefficients, constant term first."""
    try:
        with open(filename, consts.FILE_READ_MODE, encoding=consts.FILE_ENCODING) as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise LoopFormatError(f"{filename} is not a valid loop file: {e}") from e
    return loop_from_dict(data)


def save_loop(loop: PolynomialLoop, filename) -> str:
    directory = os.path.dirname(filename)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(filename, consts.FILE_WRITE_MODE, encoding=consts.FILE_ENCODING) as f:
        json.dump(loop_to_dict(loop), f, indent=1)
    return filename


def track_frame(track: RootTrack) -> pd.DataFrame:
    """One row per grid point and strand: theta, strand, re, im."""
    points, n = track.positions.shape
    return pd.DataFrame({
        "theta": np.repeat(track.thetas, n),
        "strand": np.tile(np.arange(n), points),
        "re": track.positions.real.ravel(),
        "im": track.positions.imag.ravel(),
    })


def save_track(track: RootTrack, filename) -> str:
    """Write strand trajectories as CSV for external plotting."""
    directory = os.path.dirname(filename)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    track_frame(track).to_csv(filename, index=False, encoding=consts.FILE_ENCODING)
    return filename
