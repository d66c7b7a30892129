import math
import os
import random

import numpy as np

import consts
from monodromy.loop import PolynomialLoop
from utils.errors import DomainError
from utils.io import save_loop
from utils.poly_utils import from_roots


def sample_angles(samples=consts.DEFAULT_LOOP_SAMPLES) -> np.ndarray:
    if samples < consts.MIN_LOOP_SAMPLES:
        raise DomainError(f"a loop needs at least {consts.MIN_LOOP_SAMPLES} samples, got {samples}")
    return 2 * math.pi * np.arange(samples) / samples


def root_power_loop(n, samples=consts.DEFAULT_LOOP_SAMPLES, radius=1.0) -> PolynomialLoop:
    """z^n - radius e^{i theta}."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    thetas = sample_angles(samples)
    coeffs = np.zeros((samples, n), dtype=complex)
    coeffs[:, 0] = -radius * np.exp(1j * thetas)
    return PolynomialLoop(n, thetas, coeffs)


def constant_loop(roots, samples=consts.DEFAULT_LOOP_SAMPLES) -> PolynomialLoop:
    """The same polynomial prod (z - root) at every sample."""
    thetas = sample_angles(samples)
    row = from_roots(roots)
    return PolynomialLoop(len(row), thetas, np.tile(row, (samples, 1)))


def linear_factor_loop(radii, windings, phases=None, samples=consts.DEFAULT_LOOP_SAMPLES) -> PolynomialLoop:
    """
    prod_k (z - radii[k] e^{i (windings[k] theta + phases[k])}).

    Roots on distinct circles never meet, so the loop is separable.
    """
    if len(radii) != len(windings):
        raise DomainError("radii and windings must have the same length")
    if len(set(radii)) != len(radii) or any(r <= 0 for r in radii):
        raise DomainError("radii must be positive and pairwise distinct")
    phases = [0.0] * len(radii) if phases is None else phases
    thetas = sample_angles(samples)
    coeffs = []
    for theta in thetas:
        roots = [r * np.exp(1j * (m * theta + phi)) for r, m, phi in zip(radii, windings, phases)]
        coeffs.append(from_roots(roots))
    return PolynomialLoop(len(radii), thetas, np.array(coeffs))


def analytic_index(radii, windings) -> int:
    """
    Winding of the discriminant of a linear-factor loop: each pair of roots
    contributes twice the winding of the one on the larger circle.
    """
    total = 0
    for j in range(len(radii)):
        for k in range(j + 1, len(radii)):
            outer = j if radii[j] > radii[k] else k
            total += 2 * windings[outer]
    return total


def random_linear_factor_parameters(rng: random.Random, n, max_winding=2):
    """Radii spaced at least 0.3 apart and windings in [-max_winding, max_winding]."""
    radii = [0.5 + 0.3 * k + 0.1 * rng.random() for k in range(n)]
    rng.shuffle(radii)
    windings = [rng.randint(-max_winding, max_winding) for _ in range(n)]
    phases = [rng.uniform(0, 2 * math.pi) for _ in range(n)]
    return radii, windings, phases


def generate_loop(kind, n, samples=consts.DEFAULT_LOOP_SAMPLES, radius=1.0, radii=None, windings=None, seed=None):
    """
    Build a loop of one of the families in consts.LOOP_KINDS.

    Returns:
    - (loop, expected discriminant index)
    """
    if kind == "power":
        return root_power_loop(n, samples, radius), n - 1
    if kind == "linear":
        if radii is None or windings is None:
            raise DomainError("the linear family needs radii and windings")
        return linear_factor_loop(radii, windings, samples=samples), analytic_index(radii, windings)
    if kind == "random":
        radii, windings, phases = random_linear_factor_parameters(random.Random(seed), n)
        return linear_factor_loop(radii, windings, phases, samples), analytic_index(radii, windings)
    raise DomainError(f"unknown loop family {kind!r}; expected one of {', '.join(consts.LOOP_KINDS)}")


def loop_file_name(kind, n, samples, loop_dir=consts.DEFAULT_LOOP_DIR) -> str:
    """A file name in loop_dir that does not overwrite an existing loop."""
    base_name = f"loop_{kind}_n{n}_{samples}s"
    filename = os.path.join(loop_dir, base_name + consts.LOOP_FILE_SUFFIX)
    counter = 1
    while os.path.exists(filename):
        filename = os.path.join(loop_dir, f"{base_name}_{counter}{consts.LOOP_FILE_SUFFIX}")
        counter += 1
    return filename


def generate_and_save_loop(kind, n, samples=consts.DEFAULT_LOOP_SAMPLES, path=None,
                           loop_dir=consts.DEFAULT_LOOP_DIR, **family_args):
    """
    Generate a loop and save it in one operation.

    Returns:
    - Dictionary with saved_file path, the loop and its expected discriminant index
    """
    loop, expected_index = generate_loop(kind, n, samples, **family_args)
    saved_file = save_loop(loop, path or loop_file_name(kind, n, samples, loop_dir))
    print(f"Loop saved to {saved_file}")
    return {
        'saved_file': saved_file,
        'loop': loop,
        'expected_index': expected_index,
    }
