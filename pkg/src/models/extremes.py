"""ランダム最大・最小モデル."""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from .series import InvalidSpec
from .transforms import LTSpec


@dataclass(frozen=True)
class LatticeDF:
    """格子上の分布関数 F(k) = 1 - m(scale·k)（m はラプラス変換）."""

    m: LTSpec
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise InvalidSpec(f"Lattice scale must be > 0, got {self.scale}")


class MaxCaseFamily(str, Enum):
    """幾何標本数での極値安定性の検査ケース."""

    PARETO_MIN = "pareto-min"
    LOGISTIC_MAX = "logistic-max"
    EXPONENTIAL_GEO_MIN = "exponential-geo-min"


@dataclass(frozen=True)
class MaxStabilityCase:
    family: MaxCaseFamily
    p: float
    a: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", MaxCaseFamily(self.family))
        if not (0.0 < self.p < 1.0):
            raise InvalidSpec(f"Geometric parameter p must be in (0, 1), got {self.p}")
        if self.family is MaxCaseFamily.PARETO_MIN:
            if self.a is None or self.a <= 0:
                raise InvalidSpec(f"pareto-min needs a > 0, got {self.a}")

    def describe(self) -> str:
        extra = f",a={self.a:g}" if self.a is not None else ""
        return f"{self.family.value}:p={self.p:g}{extra}"


class MIDTargetFamily(str, Enum):
    FRECHET = "frechet"
    GUMBEL = "gumbel"


@dataclass(frozen=True)
class MIDTarget:
    """最大値の極限 G（Fréchet(a): exp(-x^{-a}), x > 0 / Gumbel: exp(-e^{-x}))."""

    family: MIDTargetFamily
    a: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", MIDTargetFamily(self.family))
        if self.family is MIDTargetFamily.FRECHET and (self.a is None or self.a <= 0):
            raise InvalidSpec(f"frechet needs a > 0, got {self.a}")

    @classmethod
    def frechet(cls, a: float) -> "MIDTarget":
        return cls(MIDTargetFamily.FRECHET, a)

    @classmethod
    def gumbel(cls) -> "MIDTarget":
        return cls(MIDTargetFamily.GUMBEL)

    def describe(self) -> str:
        if self.family is MIDTargetFamily.FRECHET:
            return f"frechet:a={self.a:g}"
        return "gumbel"


class MaxBaseFamily(str, Enum):
    EXPONENTIAL = "exponential"
    PARETO = "pareto"


@dataclass(frozen=True)
class MaxBase:
    """最大値の基底分布 H（Exp(1) または 生存関数 x^{-a} (x ≥ 1) の Pareto(a)）."""

    family: MaxBaseFamily
    a: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", MaxBaseFamily(self.family))
        if self.family is MaxBaseFamily.PARETO and (self.a is None or self.a <= 0):
            raise InvalidSpec(f"pareto base needs a > 0, got {self.a}")

    def describe(self) -> str:
        if self.family is MaxBaseFamily.PARETO:
            return f"pareto:a={self.a:g}"
        return "exponential"

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family.value, "a": self.a}


@dataclass(frozen=True)
class PGFComparisonRow:
    """s における Q_X(s), Q_Y(s) と間引き後の Q_X(1-c+cs), Q_Y(1-c+cs)."""

    s: Fraction
    q_x: Fraction
    q_y: Fraction
    q_x_thinned: Fraction
    q_y_thinned: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {name: str(getattr(self, name)) for name in ("s", "q_x", "q_y", "q_x_thinned", "q_y_thinned")}


@dataclass(frozen=True)
class DtypeMaxtypeComparison:
    """幾何分布の対での D 型と格子上の型の比較表（有理数で厳密）.

    Attributes:
        rows: 評価点ごとの値
        deviation_at_zero: |Q_X(0) - Q_Y(1 - c)|
        max_deviation: 両方向の恒等式の格子上の最大のずれの小さい方
        not_equivalent: どちらの向きの D 型関係も成り立たないか
    """

    q: Fraction
    c: Fraction
    rows: tuple[PGFComparisonRow, ...]
    deviation_at_zero: Fraction
    max_deviation: Fraction
    not_equivalent: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "q": str(self.q),
            "c": str(self.c),
            "rows": [row.to_dict() for row in self.rows],
            "deviation_at_zero": str(self.deviation_at_zero),
            "deviation_at_zero_float": float(self.deviation_at_zero),
            "max_deviation": float(self.max_deviation),
            "not_equivalent": self.not_equivalent,
        }
