"""
Deciders on top of an extracted monodromy: irreducibility of the strand
permutation, the reducibility criterion for prime degree and the
solvability criterion for degree 3.
"""

from __future__ import annotations

import math

import consts
from braids.word import exponent_sum
from invariants.conformal import lemma1_obstruction
from invariants.values import ModuleValue, as_module_value
from monodromy.loop import MonodromyResult
from utils.errors import UnsupportedError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def is_irreducible_class(result: MonodromyResult) -> bool:
    """An irreducible quasipolynomial induces a class whose permutation is an n-cycle."""
    return result.permutation.is_n_cycle()


def zjuzin_threshold(n: int) -> float:
    """n r_0 with r_0 = 2 pi / log 2."""
    return n * consts.ZJUZIN_R0


def periodic_ncycle_excluded(n: int, exponent_sum_value: int) -> bool:
    """
    For prime n a periodic class with an n-cycle permutation has exponent sum
    (n-1)(k + m n) with k not divisible by n, hence never divisible by n.
    """
    if not is_prime(n):
        raise UnsupportedError(f"stated for prime degree only, got {n}")
    return exponent_sum_value % n == 0


def zjuzin_reducibility(n: int, m_a: ModuleValue | float, index: int) -> str:
    """
    A separable algebroid function of prime degree n over an annulus of module
    above n r_0 whose discriminant index is divisible by n is reducible. The
    criterion is one-directional: failure is Inconclusive.
    """
    if not is_prime(n):
        raise UnsupportedError(f"the reducibility criterion is implemented for prime degree only, got {n}")
    m_a = as_module_value(m_a)
    if m_a.value > zjuzin_threshold(n) and periodic_ncycle_excluded(n, index):
        return consts.GUARANTEED_REDUCIBLE
    return consts.INCONCLUSIVE


def lemma2_threshold() -> float:
    """pi / (2 log((3 + sqrt 5) / 2))."""
    return math.pi / (2 * consts.MIN_ENTROPY_3)


def lemma2_solvability(m_a: ModuleValue | float) -> str:
    """
    For an irreducible separable algebroid function of degree 3 on a closed
    surface of positive genus minus a geometric disc, and an annulus sharing
    the boundary circle, a module strictly above the threshold forces
    solvability over the annulus. The hypotheses cannot be checked from data;
    the verdict is conditional on them.
    """
    m_a = as_module_value(m_a)
    if m_a.value > lemma2_threshold():
        return consts.SOLVABLE_OVER_A
    return consts.INCONCLUSIVE


def monodromy_verdicts(result: MonodromyResult, m_a: ModuleValue | float) -> dict[str, str]:
    """Every criterion that applies to the degree of the loop, keyed by name."""
    n = result.braid.n
    verdicts = {}
    if n == 3:
        verdicts["lemma1"] = lemma1_obstruction(m_a, result.braid)
        if is_irreducible_class(result):
            verdicts["lemma2"] = lemma2_solvability(m_a)
    if is_prime(n):
        verdicts["zjuzin"] = zjuzin_reducibility(n, m_a, result.discriminant_index)
        verdicts["periodic_ncycle_excluded"] = str(periodic_ncycle_excluded(n, exponent_sum(result.braid))).lower()
    return verdicts
