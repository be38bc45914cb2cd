"""ランダム和モデル."""
import math
from dataclasses import dataclass
from typing import Any, Union

import numpy as np
from numpy.typing import ArrayLike

from .series import InvalidSpec
from .transforms import LTSpec


@dataclass(frozen=True)
class PphiSpec:
    """標本数の PGF P_θ(s) = s^j · φ((1 - s^k)/θ)."""

    phi: LTSpec
    j: int = 0
    k: int = 1
    theta: float = 1.0

    def __post_init__(self) -> None:
        if self.j < 0:
            raise InvalidSpec(f"j must be >= 0, got {self.j}")
        if self.k < 1:
            raise InvalidSpec(f"k must be >= 1, got {self.k}")
        if not (math.isfinite(self.theta) and self.theta > 0):
            raise InvalidSpec(f"theta must be > 0, got {self.theta}")

    def with_theta(self, theta: float) -> "PphiSpec":
        return PphiSpec(self.phi, self.j, self.k, theta)

    def to_dict(self) -> dict[str, Any]:
        return {"phi": self.phi.to_dict(), "j": self.j, "k": self.k, "theta": self.theta}


@dataclass(frozen=True)
class StableExponent:
    """ψ(s) = scale · s^α（e^{-ψ} は正値安定則のラプラス変換）."""

    alpha: float
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0):
            raise InvalidSpec(f"Stable exponent alpha must be in (0, 1], got {self.alpha}")
        if self.scale <= 0:
            raise InvalidSpec(f"Stable exponent scale must be > 0, got {self.scale}")

    def evaluate(self, s: ArrayLike) -> Any:
        return self.scale * np.power(np.asarray(s, dtype=float), self.alpha)


@dataclass(frozen=True)
class PoissonExponent:
    """ψ(s) = λ(1 - e^{-s})（e^{-ψ} はポアソン則のラプラス変換）."""

    lam: float

    def __post_init__(self) -> None:
        if self.lam <= 0:
            raise InvalidSpec(f"Poisson exponent lambda must be > 0, got {self.lam}")

    def evaluate(self, s: ArrayLike) -> Any:
        return -self.lam * np.expm1(-np.asarray(s, dtype=float))


Exponent = Union[StableExponent, PoissonExponent]


@dataclass(frozen=True)
class PhiIDSpec:
    """φ-ID 則 f(s) = φ(ψ(s))."""

    phi: LTSpec
    psi: Exponent
