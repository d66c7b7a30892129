"""
Braid words in the Artin generators and the strand permutations they induce.

A word on n strands is a tuple of nonzero integers: i stands for sigma_i and
-i for its inverse, 1 <= |i| <= n-1. The empty tuple is the identity braid.
Words are stored exactly as given; nothing is reduced on construction.
"""

from __future__ import annotations

import dataclasses

import consts
from utils.errors import BraidParseError, StrandMismatchError


@dataclasses.dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1, ..., n} stored by its images.

    For the permutation of a braid, images[p-1] is the starting position of
    the strand that ends at position p.
    """
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: Permutation) -> Permutation:
        """Return self o other, i.e. x -> self(other(x))."""
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points included, each starting at its smallest element."""
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            result.append(tuple(cycle))
        return result

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_n_cycle(self) -> bool:
        return self.cycle_type() == (self.n,)

    def __str__(self):
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) if parts else "()"


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < consts.MIN_STRANDS:
            raise BraidParseError(f"strand count must be at least {consts.MIN_STRANDS}, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.n - 1:
                raise BraidParseError(f"generator index {letter} out of range for {self.n} strands")

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def generator(cls, i: int, n: int) -> BraidWord:
        return cls(n, (i,))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. "1 -2", into a word on n strands."""
    letters = []
    for token in text.split():
        try:
            letter = int(token)
        except ValueError:
            raise BraidParseError(f"malformed token {token!r}") from None
        if letter == 0:
            raise BraidParseError("generator index 0 is not allowed")
        letters.append(letter)
    return BraidWord(n, tuple(letters))


def _check_same_strands(w1: BraidWord, w2: BraidWord):
    if w1.n != w2.n:
        raise StrandMismatchError(f"strand counts differ: {w1.n} and {w2.n}")


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def underlying_permutation(w: BraidWord) -> Permutation:
    # images[p] is the label of the strand currently at position p
    images = list(range(1, w.n + 1))
    for letter in w.letters:
        i = abs(letter)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    _check_same_strands(w1, w2)
    return BraidWord(w1.n, w1.letters + w2.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-x for x in reversed(w.letters)))


def power(w: BraidWord, l: int) -> BraidWord:
    base = w if l >= 0 else inverse(w)
    return BraidWord(w.n, base.letters * abs(l))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """Return g w g^-1."""
    return concat(concat(g, w), inverse(g))


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    return concat(concat(a, b), concat(inverse(a), inverse(b)))


def in_commutator_subgroup(w: BraidWord) -> bool:
    return exponent_sum(w) == 0


def half_twist(n: int) -> BraidWord:
    """Delta = (s1 s2 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)."""
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    return power(half_twist(n), 2)


def garside_element3() -> BraidWord:
    """
    (s1 s2)^3 on three strands. The literature on algebroid functions calls
    this the Garside element; in Garside theory it is the full twist Delta^2,
    the generator of the center of B_3.
    """
    return power(BraidWord(3, (1, 2)), 3)

