"""ラプラス変換族・PGF モデル."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

import numpy as np
from numpy.typing import ArrayLike

from .series import InvalidSpec, ProbSeq


class InvalidLTSpec(InvalidSpec):
    """ラプラス変換仕様エラー."""

    code = "IDLAB-M003"


class LTFamily(str, Enum):
    """ラプラス変換の族."""

    DEGENERATE = "degenerate"
    EXPONENTIAL = "exponential"
    GAMMA = "gamma"
    POSITIVE_STABLE = "positive-stable"
    MITTAG_LEFFLER = "mittag-leffler"


# 族ごとの (必須パラメータ, 省略時の値)
_FAMILY_PARAMS: dict[LTFamily, tuple[tuple[str, ...], dict[str, float]]] = {
    LTFamily.DEGENERATE: (("c",), {}),
    LTFamily.EXPONENTIAL: (("rate",), {}),
    LTFamily.GAMMA: (("shape", "rate"), {}),
    LTFamily.POSITIVE_STABLE: (("alpha",), {"scale": 1.0}),
    LTFamily.MITTAG_LEFFLER: (("alpha",), {"scale": 1.0}),
}


@dataclass(frozen=True)
class LTSpec:
    """パラメトリックなラプラス変換 φ.

    Degenerate(c): e^{-cs}
    Exponential(rate): rate / (rate + s)
    Gamma(shape, rate): (rate / (rate + s))^shape
    PositiveStable(alpha, scale): e^{-(scale·s)^alpha}
    MittagLeffler(alpha, scale): 1 / (1 + (scale·s)^alpha)
    """

    family: LTFamily
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        try:
            family = LTFamily(self.family)
        except ValueError as e:
            names = ", ".join(f.value for f in LTFamily)
            raise InvalidLTSpec(f"Unknown LT family '{self.family}' (expected one of: {names})") from e

        required, defaults = _FAMILY_PARAMS[family]
        allowed = set(required) | set(defaults)
        unknown = sorted(set(self.params) - allowed)
        if unknown:
            raise InvalidLTSpec(f"Unknown parameter(s) for {family.value}: {', '.join(unknown)}")
        missing = [name for name in required if name not in self.params]
        if missing:
            raise InvalidLTSpec(f"Missing parameter(s) for {family.value}: {', '.join(missing)}")

        params = {**defaults, **{k: float(v) for k, v in self.params.items()}}
        for name, value in params.items():
            if not math.isfinite(value) or value <= 0:
                raise InvalidLTSpec(f"{family.value}.{name} must be > 0, got {value}")
        if "alpha" in params and params["alpha"] > 1.0:
            raise InvalidLTSpec(f"{family.value}.alpha must be in (0, 1], got {params['alpha']}")

        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", params)

    # ------------------------------------------------------------------
    # コンストラクタ
    # ------------------------------------------------------------------
    @classmethod
    def degenerate(cls, c: float) -> "LTSpec":
        return cls(LTFamily.DEGENERATE, {"c": c})

    @classmethod
    def exponential(cls, rate: float = 1.0) -> "LTSpec":
        return cls(LTFamily.EXPONENTIAL, {"rate": rate})

    @classmethod
    def gamma(cls, shape: float, rate: float = 1.0) -> "LTSpec":
        return cls(LTFamily.GAMMA, {"shape": shape, "rate": rate})

    @classmethod
    def positive_stable(cls, alpha: float, scale: float = 1.0) -> "LTSpec":
        return cls(LTFamily.POSITIVE_STABLE, {"alpha": alpha, "scale": scale})

    @classmethod
    def mittag_leffler(cls, alpha: float, scale: float = 1.0) -> "LTSpec":
        return cls(LTFamily.MITTAG_LEFFLER, {"alpha": alpha, "scale": scale})

    # ------------------------------------------------------------------
    # 参照
    # ------------------------------------------------------------------
    def param(self, name: str) -> float:
        return self.params[name]

    @property
    def alpha(self) -> Optional[float]:
        return self.params.get("alpha")

    @property
    def mean(self) -> float:
        """平均（α < 1 の安定型・ML 型は無限大）."""
        if self.family is LTFamily.DEGENERATE:
            return self.params["c"]
        if self.family is LTFamily.EXPONENTIAL:
            return 1.0 / self.params["rate"]
        if self.family is LTFamily.GAMMA:
            return self.params["shape"] / self.params["rate"]
        if self.params["alpha"] == 1.0:
            return self.params["scale"]
        return math.inf

    @property
    def has_finite_mean(self) -> bool:
        return math.isfinite(self.mean)

    def scaled(self, factor: float) -> "LTSpec":
        """factor·U のラプラス変換 s ↦ φ(factor·s)."""
        if factor <= 0:
            raise InvalidLTSpec(f"Scale factor must be > 0, got {factor}")
        p = dict(self.params)
        if self.family is LTFamily.DEGENERATE:
            p["c"] *= factor
        elif self.family in (LTFamily.EXPONENTIAL, LTFamily.GAMMA):
            p["rate"] /= factor
        else:
            p["scale"] *= factor
        return LTSpec(self.family, p)

    def describe(self) -> str:
        """CLI 文法と同じ文字列表現（例: gamma:shape=2,rate=1）."""
        body = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.family.value}:{body}"

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family.value, "params": dict(self.params)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "LTSpec":
        if not isinstance(data, dict) or "family" not in data:
            raise InvalidLTSpec('LTSpec JSON must be an object with key "family"')
        unknown = sorted(set(data) - {"family", "params"})
        if unknown:
            raise InvalidLTSpec(f"Unknown LTSpec keys: {', '.join(unknown)}")
        return cls(data["family"], dict(data.get("params") or {}))


PGFEvaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class PGFSpec:
    """確率母関数.

    確率列そのもの、または複素数配列を受け付ける閉形式評価関数のどちらか。
    閉形式の係数は周回積分で抽出する。
    """

    probseq: Optional[ProbSeq] = None
    evaluator: Optional[PGFEvaluator] = None
    label: str = ""

    def __post_init__(self) -> None:
        if (self.probseq is None) == (self.evaluator is None):
            raise InvalidSpec("PGFSpec needs exactly one of probseq or evaluator")

    @classmethod
    def from_probseq(cls, q: ProbSeq, label: str = "") -> "PGFSpec":
        return cls(probseq=q, label=label or "pmf")

    @classmethod
    def closed_form(cls, evaluator: PGFEvaluator, label: str = "") -> "PGFSpec":
        return cls(evaluator=evaluator, label=label or "closed-form")

    @property
    def is_closed_form(self) -> bool:
        return self.evaluator is not None

    def evaluate(self, s: ArrayLike) -> Any:
        if self.evaluator is not None:
            return self.evaluator(np.asarray(s))
        assert self.probseq is not None
        return self.probseq.evaluate(s)


class ProbeVerdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ProbeResult:
    """交代差分プローブの結果.

    Attributes:
        verdict: PASS / FAIL / INCONCLUSIVE
        depth: 判定に使えた最大の差分次数
        failed_order: 符号条件が破れた次数（FAIL のとき）
        detail: 判定理由
    """

    verdict: ProbeVerdict
    depth: int
    failed_order: Optional[int] = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "depth": self.depth,
            "failed_order": self.failed_order,
            "detail": self.detail,
        }


@dataclass(frozen=True, eq=False)
class CandidateTable:
    """s ↦ Q(1-s) の評価表と完全単調性プローブ."""

    grid: np.ndarray
    values: np.ndarray
    probe: ProbeResult

    @property
    def verdict(self) -> ProbeVerdict:
        return self.probe.verdict

    def to_dict(self) -> dict[str, Any]:
        return {
            "grid": [float(x) for x in self.grid],
            "values": [float(v) for v in self.values],
            "probe": self.probe.to_dict(),
        }
