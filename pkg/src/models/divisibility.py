"""無限分解可能性判定モデル."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from .series import ProbSeq


class Verdict(str, Enum):
    """複合ポアソン分解の判定."""

    ID = "ID"
    NOT_ID_ZERO_AT_ORIGIN = "NotID_ZeroAtOrigin"
    NOT_ID_FINITE_SUPPORT = "NotID_FiniteSupport"
    NOT_ID_NEGATIVE_COEFFICIENT = "NotID_NegativeCoefficient"
    INCONCLUSIVE = "Inconclusive"

    @property
    def is_not_id(self) -> bool:
        return self.value.startswith("NotID")


@dataclass(frozen=True)
class Decomposition:
    """複合ポアソン分解の証明書、または反証の証拠.

    Attributes:
        verdict: 判定
        rate: λ（ID のときのみ）
        compounding: 複合分布 {a_k}、p_0 = 0（ID のときのみ）
        witness_index: 最初の負係数の添字
        witness_value: その係数 λ·a_k
        margin: min_k a_k（打ち切り境界付近の余裕）
    """

    verdict: Verdict
    rate: Optional[float] = None
    compounding: Optional[ProbSeq] = None
    witness_index: Optional[int] = None
    witness_value: Optional[float] = None
    margin: Optional[float] = None

    @property
    def is_id(self) -> bool:
        return self.verdict is Verdict.ID

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"verdict": self.verdict.value}
        if self.rate is not None:
            data["rate"] = self.rate
        if self.compounding is not None:
            data["compounding"] = self.compounding.to_dict()
        if self.witness_index is not None:
            data["witness_index"] = self.witness_index
        if self.witness_value is not None:
            data["witness_value"] = self.witness_value
        if self.margin is not None:
            data["margin"] = self.margin
        return data


@dataclass(frozen=True)
class SupportProfile:
    """台の分類（ギャップは (開始添字, 長さ) の組）."""

    support_indices: tuple[int, ...]
    gaps: tuple[tuple[int, int], ...] = field(default_factory=tuple)
    finite: bool = False

    @property
    def gap_lengths(self) -> list[int]:
        return [length for _, length in self.gaps]

    @property
    def has_gaps(self) -> bool:
        return bool(self.gaps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "support_indices": list(self.support_indices),
            "gaps": [list(g) for g in self.gaps],
            "finite": self.finite,
        }


@dataclass(frozen=True)
class RootResult:
    """n 乗根成分、または整数値成分が存在しない証拠."""

    n: int
    component: Optional[ProbSeq] = None
    witness_index: Optional[int] = None
    witness_value: Optional[float] = None

    @property
    def exists(self) -> bool:
        return self.component is not None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"n": self.n, "exists": self.exists}
        if self.component is not None:
            data["component"] = self.component.to_dict()
        if self.witness_index is not None:
            data["witness_index"] = self.witness_index
            data["witness_value"] = self.witness_value
        return data


@dataclass(frozen=True)
class SupportCheck:
    """成分と元の分布の台の一致判定."""

    n: int
    coincide: bool
    window: int
    input_support: tuple[int, ...]
    component_support: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "coincide": self.coincide,
            "window": self.window,
            "input_support": list(self.input_support),
            "component_support": list(self.component_support),
        }
