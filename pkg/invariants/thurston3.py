"""
Thurston type, entropy and conjugacy for 3-braids.

B_3 modulo its center <Delta^2> is PSL(2, Z). The reduced Burau matrices at
t = -1 realize the quotient:

    sigma_1 -> R = [[1, 1], [0, 1]],    sigma_2 -> [[1, 0], [-1, 1]] = L^-1

A braid is periodic when its image is elliptic or trivial, reducible when it
is parabolic, and pseudo-Anosov when it is hyperbolic; in the last case its
dilatation is the spectral radius of the image. For more strands only the
Burau lower bound and the Penner floor are available.
"""

from __future__ import annotations

import collections
import dataclasses
import enum
import math

import consts
from braids.burau import entropy_lower_bound_burau, log_radius_from_trace
from braids.word import BraidWord, exponent_sum
from invariants.values import Entropy, ModuleValue, module_from_entropy
from utils.errors import DomainError, InvariantViolation, UnsupportedError


class ThurstonType(enum.Enum):
    PERIODIC = consts.PERIODIC
    REDUCIBLE = consts.REDUCIBLE
    PSEUDO_ANOSOV = consts.PSEUDO_ANOSOV

    def __str__(self):
        return self.value


@dataclasses.dataclass(frozen=True)
class Psl2zImage:
    """An element of PSL(2, Z), stored as the representative of +-M whose first nonzero top-row entry is positive."""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            raise ValueError(f"{self.rows()} is not sign-normalized")

    @classmethod
    def normalized(cls, a: int, b: int, c: int, d: int) -> Psl2zImage:
        if a < 0 or (a == 0 and b < 0):
            a, b, c, d = -a, -b, -c, -d
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> Psl2zImage:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Psl2zImage) -> Psl2zImage:
        return Psl2zImage.normalized(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @property
    def trace(self) -> int:
        return self.a + self.d

    def is_identity(self) -> bool:
        return self == Psl2zImage.identity()

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


_GENERATOR_IMAGES = {
    1: Psl2zImage(1, 1, 0, 1),
    -1: Psl2zImage(1, -1, 0, 1),
    2: Psl2zImage(1, 0, -1, 1),
    -2: Psl2zImage(1, 0, 1, 1),
}


def _require_three_strands(w: BraidWord):
    if w.n != 3:
        raise UnsupportedError(f"exact classification needs 3 strands, got {w.n}")


def psl2z_generator(letter: int) -> Psl2zImage:
    return _GENERATOR_IMAGES[letter]


def psl2z_image(w: BraidWord) -> Psl2zImage:
    _require_three_strands(w)
    image = Psl2zImage.identity()
    for letter in w.letters:
        image = image @ _GENERATOR_IMAGES[letter]
    return image


def classify_image(image: Psl2zImage) -> ThurstonType:
    t = abs(image.trace)
    if image.is_identity() or t < 2:
        return ThurstonType.PERIODIC
    if t == 2:
        return ThurstonType.REDUCIBLE
    return ThurstonType.PSEUDO_ANOSOV


def classify3(w: BraidWord) -> ThurstonType:
    return classify_image(psl2z_image(w))


def entropy_from_trace(trace: int) -> float:
    """Entropy of a hyperbolic image from its trace, 0 when |trace| <= 2."""
    return log_radius_from_trace(trace)


def entropy3(w: BraidWord) -> Entropy:
    image = psl2z_image(w)
    if classify_image(image) is not ThurstonType.PSEUDO_ANOSOV:
        return Entropy(0.0)
    return Entropy(entropy_from_trace(image.trace))


def penner_floor(n: int) -> float:
    """(log 2) / (4n): lower bound for the smallest nonzero entropy of an irreducible n-braid."""
    if n < consts.PENNER_MIN_STRANDS:
        raise DomainError(f"the Penner floor is stated for n >= {consts.PENNER_MIN_STRANDS}, got {n}")
    return math.log(2) / (4 * n)


def minimal_entropy(n: int) -> Entropy:
    """Smallest nonzero entropy among irreducible n-braids: exact for n = 3, the Penner floor otherwise."""
    if n == 3:
        return Entropy(consts.MIN_ENTROPY_3)
    return Entropy(penner_floor(n), exact=False)


def parabolic_index(image: Psl2zImage) -> int:
    """The k != 0 with image conjugate to +-[[1, k], [0, 1]]."""
    a, b, c, d = image.a, image.b, image.c, image.d
    if a + d == -2:
        a, b, c, d = -a, -b, -c, -d
    if a + d != 2 or image.is_identity():
        raise ValueError(f"{image.rows()} is not parabolic")
    # image - I = k [[-pr, p^2], [-r^2, pr]] with (p, r) primitive
    g = math.gcd(a - 1, b, c, d - 1)
    sign = 1 if b > 0 or (b == 0 and c < 0) else -1
    return sign * g


# Free-product tokens for B_3 / center = <X> * <Y>, X = image of s1 s2 s1, Y = image of s1 s2.
# 0 stands for X, 1 and 2 for Y and Y^2.
_X = 0
_LETTER_TOKENS = {
    1: (2, _X),
    -1: (_X, 1),
    2: (_X, 2),
    -2: (1, _X),
}


def _reduced_tokens(w: BraidWord) -> collections.deque:
    stack: list[int] = []
    for letter in w.letters:
        for token in _LETTER_TOKENS[letter]:
            if stack and token == _X and stack[-1] == _X:
                stack.pop()
            elif stack and token != _X and stack[-1] != _X:
                e = (stack.pop() + token) % 3
                if e:
                    stack.append(e)
            else:
                stack.append(token)
    return collections.deque(stack)


def _cyclically_reduce(word: collections.deque) -> collections.deque:
    while len(word) >= 2 and (word[0] == _X) == (word[-1] == _X):
        first, last = word.popleft(), word.pop()
        if first != _X:
            e = (first + last) % 3
            if e:
                word.appendleft(e)
    return word


def psl2z_conjugacy_class(w: BraidWord) -> tuple:
    """
    Canonical form of the PSL(2, Z) conjugacy class of the image of w.

    Elliptic and trivial classes are tagged by order (and, for order 3, by
    which generator power they are), parabolic classes by their index k, and
    hyperbolic classes are a cyclic word in R = Y^-1 X and L = Y X, returned
    as its least rotation.
    """
    _require_three_strands(w)
    word = _cyclically_reduce(_reduced_tokens(w))
    if not word:
        return ("order1",)
    if len(word) == 1:
        return ("order2",) if word[0] == _X else ("order3", word[0])
    image = psl2z_image(w)
    if classify_image(image) is ThurstonType.REDUCIBLE:
        return ("parabolic", parabolic_index(image))
    if word[0] == _X:
        word.rotate(-1)
    tokens = list(word)
    letters = "".join("R" if tokens[k] == 2 else "L" for k in range(0, len(tokens), 2))
    return ("RL", min(letters[k:] + letters[:k] for k in range(len(letters))))


@dataclasses.dataclass(frozen=True)
class ConjugacyKey3:
    exponent_sum: int
    psl2z_class: tuple


def conjugacy_key3(w: BraidWord) -> ConjugacyKey3:
    return ConjugacyKey3(exponent_sum(w), psl2z_conjugacy_class(w))


def conj_equal3(w1: BraidWord, w2: BraidWord) -> bool:
    """Conjugacy in B_3: equal exponent sums and conjugate images in PSL(2, Z)."""
    return conjugacy_key3(w1) == conjugacy_key3(w2)


@dataclasses.dataclass(frozen=True)
class ThurstonReport:
    thurston_type: ThurstonType
    entropy: Entropy
    module: ModuleValue


def thurston_report(w: BraidWord) -> ThurstonReport:
    kind = classify3(w)
    h = entropy3(w)
    if not h.is_zero and h.value <= penner_floor(3):
        raise InvariantViolation(f"entropy {h.value} of a pseudo-Anosov 3-braid is below the Penner floor")
    return ThurstonReport(kind, h, module_from_entropy(h))


def entropy_bound(w: BraidWord, t_samples=consts.DEFAULT_BURAU_SAMPLES) -> Entropy:
    """Exact entropy on 3 strands, the Burau lower bound (exact=False) otherwise."""
    if w.n == 3:
        return entropy3(w)
    return Entropy(entropy_lower_bound_burau(w, t_samples), exact=False)
