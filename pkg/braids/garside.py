"""
Left-greedy Garside normal form for the braid group B_n.

Every braid is written uniquely as Delta^p A_1 ... A_k where each A_i is a
permutation braid (a positive braid in which every pair of strands crosses at
most once), none of them trivial or equal to Delta, and each pair (A_i, A_{i+1})
is left-weighted: the starting set of A_{i+1} is contained in the finishing
set of A_i.

A permutation braid is determined by its permutation, so the factors are
stored as permutations. Internally they are 0-based tuples p with p[x] the
image of x, composed as functions; letter sigma_i acts by swapping entries
i-1 and i, matching underlying_permutation in braids.word.

Inverse letters are rewritten as sigma_i^-1 = Delta^-1 (Delta sigma_i^-1), and
the Delta^-1 is pushed to the front, which conjugates every factor already
seen by Delta (the flip i -> n-i).
"""

from __future__ import annotations

import dataclasses
from typing import Optional

from braids.word import (
    BraidWord, Permutation, exponent_sum, half_twist, power,
)
from utils.errors import StrandMismatchError, UnsupportedError

Simple = tuple[int, ...]


def _identity(n: int) -> Simple:
    return tuple(range(n))


def _delta(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


def _times_generator(p: Simple, i: int) -> Simple:
    """p o s_i: swap entries i-1 and i."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _generator_times(i: int, p: Simple) -> Simple:
    """s_i o p: swap the values i-1 and i."""
    return tuple(i if x == i - 1 else i - 1 if x == i else x for x in p)


def _inverse(p: Simple) -> Simple:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def _right_descents(p: Simple) -> set[int]:
    """Finishing set: the i with p = q sigma_i for a permutation braid q."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _left_descents(p: Simple) -> set[int]:
    """Starting set: the i with p = sigma_i q for a permutation braid q."""
    return _right_descents(_inverse(p))


def _tau(p: Simple) -> Simple:
    """Delta p Delta^-1, which sends sigma_i to sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def _left_weight(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Move generators from the front of b to the back of a until L(b) is inside R(a)."""
    while True:
        movable = _left_descents(b) - _right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        a = _times_generator(a, i)
        b = _generator_times(i, b)


def _reduced_word(p: Simple) -> list[int]:
    """A positive word of minimal length for the permutation braid p."""
    letters: list[int] = []
    while True:
        descents = _right_descents(p)
        if not descents:
            return letters
        i = min(descents)
        letters.insert(0, i)
        p = _times_generator(p, i)


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    n: int
    delta_power: int
    factors: tuple[Permutation, ...]

    def __post_init__(self):
        simples = [_to_simple(f) for f in self.factors]
        for s in simples:
            if s == _identity(self.n) or s == _delta(self.n):
                raise ValueError("normal form factors must be proper permutation braids")
        for a, b in zip(simples, simples[1:]):
            if not _left_descents(b) <= _right_descents(a):
                raise ValueError("normal form factors are not left-weighted")

    @property
    def infimum(self) -> int:
        return self.delta_power

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.delta_power + len(self.factors)

    def to_word(self) -> BraidWord:
        delta = power(half_twist(self.n), self.delta_power)
        letters = list(delta.letters)
        for factor in self.factors:
            letters.extend(_reduced_word(_to_simple(factor)))
        return BraidWord(self.n, tuple(letters))

    def __str__(self):
        factors = " ".join("[" + " ".join(map(str, f.images)) + "]" for f in self.factors)
        return f"D^{self.delta_power} {factors}".rstrip()


def _to_simple(p: Permutation) -> Simple:
    return tuple(x - 1 for x in p.images)


def _to_permutation(s: Simple) -> Permutation:
    return Permutation(tuple(x + 1 for x in s))


def _append_simple(n: int, power_of_delta: int, factors: list[Simple], simple: Simple) -> int:
    """Right-multiply a left-weighted factor list by a simple, in place; return the new Delta power."""
    factors.append(simple)
    for j in range(len(factors) - 2, -1, -1):
        a, b = _left_weight(factors[j], factors[j + 1])
        if a == factors[j]:
            break
        factors[j], factors[j + 1] = a, b

    delta = _delta(n)
    identity = _identity(n)
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    del factors[:lead]
    while factors and factors[-1] == identity:
        factors.pop()
    return power_of_delta + lead


def normal_form(w: BraidWord) -> GarsideNormalForm:
    n = w.n
    delta = _delta(n)
    p = 0
    factors: list[Simple] = []
    for letter in w.letters:
        i = abs(letter)
        if letter > 0:
            simple = _times_generator(_identity(n), i)
        else:
            factors = [_tau(f) for f in factors]
            p -= 1
            simple = _times_generator(delta, i)
        p = _append_simple(n, p, factors, simple)
    return GarsideNormalForm(n, p, tuple(_to_permutation(f) for f in factors))


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise StrandMismatchError(f"strand counts differ: {w1.n} and {w2.n}")
    return normal_form(w1) == normal_form(w2)


def is_identity(w: BraidWord) -> bool:
    return normal_form(w) == GarsideNormalForm(w.n, 0, ())


def in_cyclic_subgroup(w: BraidWord, g: BraidWord) -> Optional[int]:
    """
    Return k with w = g^k in B_n, or None.

    Only generators with nonzero exponent sum are supported: the exponent sum
    then pins down the single candidate k.
    """
    if w.n != g.n:
        raise StrandMismatchError(f"strand counts differ: {w.n} and {g.n}")
    e_g = exponent_sum(g)
    if e_g == 0:
        raise UnsupportedError("generator has zero exponent sum; candidate power is not determined")
    e_w = exponent_sum(w)
    if e_w % e_g != 0:
        return None
    k = e_w // e_g
    return k if words_equal(w, power(g, k)) else None
