"""
Conformal modules of round annuli and of braid conjugacy classes.

The module of a class is sup m(A) over annuli A admitting a holomorphic map
into the space of separable polynomials that represents the class. It is
computed as pi / (2 h) from the entropy h; on 3 strands that is exact, on
more strands the Burau lower bound on h only gives an upper bound on M.
"""

from __future__ import annotations

import dataclasses
import math

import consts
from braids.word import BraidWord
from invariants.thurston3 import entropy_bound, penner_floor
from invariants.values import ModuleValue, as_module_value, module_from_entropy
from utils.errors import DomainError, UnsupportedError


@dataclasses.dataclass(frozen=True)
class Annulus:
    """{r < |z| < R} with 0 <= r < R <= inf."""
    r: float
    R: float

    def __post_init__(self):
        if self.r < 0 or not self.r < self.R:
            raise DomainError(f"need 0 <= r < R, got r={self.r}, R={self.R}")


def annulus_module(a: Annulus) -> ModuleValue:
    if a.r == 0 or math.isinf(a.R):
        return ModuleValue.infinite()
    return ModuleValue(math.log(a.R / a.r) / (2 * math.pi))


def conformal_module_of_class(w: BraidWord) -> ModuleValue:
    """Exact on 3 strands; on more strands an upper bound (exact=False)."""
    return module_from_entropy(entropy_bound(w))


def module_of_power(m: ModuleValue | float, l: int) -> ModuleValue:
    """The module of the class of b^l is M(b) / |l|."""
    if l == 0:
        raise DomainError("the power must be nonzero")
    m = as_module_value(m)
    if m.is_infinite:
        return m
    return ModuleValue(m.value / abs(l), m.exact)


def lemma1_obstruction(m_a: ModuleValue | float, w: BraidWord) -> str:
    """
    An algebroid function over an annulus of module m_a induces a class b with
    m_a <= M(b). A strictly larger m_a excludes every algebroid representative.
    """
    if w.n != 3:
        raise UnsupportedError("the obstruction test needs the exact module, available on 3 strands")
    m_a = as_module_value(m_a)
    m_class = conformal_module_of_class(w)
    if not m_class.is_infinite and m_a.value > m_class.value:
        return consts.ALGEBROID_EXCLUDED
    return consts.NOT_EXCLUDED


def module_ceiling3() -> float:
    """Largest finite module of a 3-braid class allowed by the Penner floor: 6 pi / log 2."""
    return math.pi / (2 * penner_floor(3))
