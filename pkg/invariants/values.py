"""Extended-real values shared by the entropy and conformal-module code."""

from __future__ import annotations

import dataclasses
import math


@dataclasses.dataclass(frozen=True)
class Entropy:
    """Entropy of a braid class; when exact is False the value is only a lower bound."""
    value: float
    exact: bool = True

    def __post_init__(self):
        if not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"entropy must be a finite nonnegative number, got {self.value}")

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@dataclasses.dataclass(frozen=True)
class ModuleValue:
    """
    A conformal module in (0, +inf]. Infinity is only produced through
    ModuleValue.infinite(). When exact is False the value is an upper bound.
    """
    value: float
    exact: bool = True

    def __post_init__(self):
        if math.isnan(self.value) or self.value <= 0:
            raise ValueError(f"conformal module must be positive, got {self.value}")

    @classmethod
    def infinite(cls, exact: bool = True) -> ModuleValue:
        return cls(math.inf, exact)

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)


def module_from_entropy(h: Entropy) -> ModuleValue:
    """M = pi / (2 h), +inf for h = 0. A lower bound on h gives an upper bound on M."""
    if h.is_zero:
        return ModuleValue.infinite(exact=h.exact)
    return ModuleValue(math.pi / (2 * h.value), exact=h.exact)


def as_module_value(m: ModuleValue | float) -> ModuleValue:
    if isinstance(m, ModuleValue):
        return m
    if math.isinf(m):
        return ModuleValue.infinite()
    return ModuleValue(float(m))
