"""
Homomorphisms from the free group on two generators (the fundamental group of
a torus with a hole) into B_3, and the group-theoretic condition a class must
meet to be isotopic to an algebroid function for every complex structure:

- both generator images lie in the cyclic group generated by the periodic
  braid s1 s2, and
- the image contains an element that is not a power of (s1 s2)^3.

Only this necessary condition is checked; no isotopy is constructed.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Optional

import consts
from braids.garside import in_cyclic_subgroup
from braids.word import BraidWord, conjugate
from utils.errors import StrandMismatchError

PERIODIC_GENERATOR = BraidWord(3, (1, 2))
GARSIDE_POWER = 3


@dataclasses.dataclass(frozen=True)
class FreeHomB3:
    image_a: BraidWord
    image_b: BraidWord

    def __post_init__(self):
        if self.image_a.n != 3 or self.image_b.n != 3:
            raise StrandMismatchError("both generator images must be 3-braids")

    def swapped(self) -> FreeHomB3:
        return FreeHomB3(self.image_b, self.image_a)

    def conjugated(self, g: BraidWord) -> FreeHomB3:
        return FreeHomB3(conjugate(self.image_a, g), conjugate(self.image_b, g))


@dataclasses.dataclass(frozen=True)
class Theorem3Verdict:
    kind: str
    k_a: Optional[int] = None
    k_b: Optional[int] = None
    failing_generator: Optional[str] = None

    @property
    def satisfied(self) -> bool:
        return self.kind == consts.SATISFIES_NECESSARY_CONDITION


def theorem3_check(hom: FreeHomB3) -> Theorem3Verdict:
    k_a = in_cyclic_subgroup(hom.image_a, PERIODIC_GENERATOR)
    if k_a is None:
        return Theorem3Verdict(consts.FAILS_SUBGROUP, failing_generator="a")
    k_b = in_cyclic_subgroup(hom.image_b, PERIODIC_GENERATOR)
    if k_b is None:
        return Theorem3Verdict(consts.FAILS_SUBGROUP, k_a=k_a, failing_generator="b")

    # the image is generated by (s1 s2)^g
    g = math.gcd(k_a, k_b)
    if g == 0 or g % GARSIDE_POWER == 0:
        return Theorem3Verdict(consts.FAILS_GARSIDE_CLAUSE, k_a, k_b)
    return Theorem3Verdict(consts.SATISFIES_NECESSARY_CONDITION, k_a, k_b)
