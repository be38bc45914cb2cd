"""D型・離散安定則モデル."""
import math
from dataclasses import dataclass
from typing import Any

from .series import InvalidSpec


@dataclass(frozen=True)
class ThinningParam:
    """二項間引きの成功確率 c ∈ (0, 1]."""

    c: float

    def __post_init__(self) -> None:
        if not (0.0 < self.c <= 1.0):
            raise InvalidSpec(f"Thinning parameter c must be in (0, 1], got {self.c}")


@dataclass(frozen=True)
class DiscreteStableSpec:
    """PGF exp{-λ(1-s)^α} の離散安定則."""

    alpha: float
    lam: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0):
            raise InvalidSpec(f"Discrete stable alpha must be in (0, 1], got {self.alpha}")
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise InvalidSpec(f"Discrete stable lambda must be > 0, got {self.lam}")

    def describe(self) -> str:
        return f"dstable:alpha={self.alpha:g},lambda={self.lam:g}"

    def to_dict(self) -> dict[str, Any]:
        return {"alpha": self.alpha, "lambda": self.lam}


@dataclass(frozen=True)
class DtypeComparison:
    """Q_1(u) と Q_2(1-c+cu) の格子上の比較."""

    equal: bool
    max_deviation: float
    tolerance: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "equal": self.equal,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class SelfDecomposabilityResult:
    """Q(s)/Q(1-c+cs) の係数の非負性検査.

    worst_* は全 c を通じて最小の係数の位置と値。
    """

    passed: bool
    c_grid: tuple[float, ...]
    worst_c: float
    worst_index: int
    worst_value: float
    order: int
    source: str = "pmf"

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "c_grid": list(self.c_grid),
            "worst": {"c": self.worst_c, "index": self.worst_index, "value": self.worst_value},
            "order": self.order,
            "source": self.source,
        }
