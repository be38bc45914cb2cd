"""冪級数・確率列モデル."""
from dataclasses import dataclass
from typing import Any, Optional, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy import stats

# ProbSeq の正規化許容誤差（和 + 裾の質量が 1 ± この値）
PMF_SUM_TOLERANCE = 1e-12
# 計算誤差による微小な負値はこの範囲で 0 に丸める
NEGATIVE_ROUNDING = 1e-12


class InvalidSpec(ValueError):
    """パラメータ仕様エラー."""

    code = "IDLAB-M001"


class InvalidPmf(InvalidSpec):
    """確率列エラー."""

    code = "IDLAB-M002"


def _frozen_array(values: ArrayLike) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidSpec(f"Expected a non-empty 1-D coefficient list, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidSpec("Coefficients must be finite reals")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Series:
    """打ち切り冪級数 c_0 + c_1 s + ... + c_N s^N."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _frozen_array(self.coeffs))

    @property
    def order(self) -> int:
        return int(self.coeffs.size - 1)

    @classmethod
    def zeros(cls, order: int) -> "Series":
        return cls(np.zeros(order + 1))

    @classmethod
    def constant(cls, value: float, order: int) -> "Series":
        coeffs = np.zeros(order + 1)
        coeffs[0] = value
        return cls(coeffs)

    @classmethod
    def monomial(cls, k: int, order: int, value: float = 1.0) -> "Series":
        """value · s^k（次数が order を超える場合は 0）."""
        coeffs = np.zeros(order + 1)
        if k <= order:
            coeffs[k] = value
        return cls(coeffs)

    @classmethod
    def identity(cls, order: int) -> "Series":
        return cls.monomial(1, order)

    def truncate(self, order: int) -> "Series":
        """次数 order に打ち切る（足りない分は 0 で埋める）."""
        if order == self.order:
            return self
        coeffs = np.zeros(order + 1)
        n = min(order, self.order) + 1
        coeffs[:n] = self.coeffs[:n]
        return Series(coeffs)

    def evaluate(self, s: ArrayLike) -> Any:
        return np.polynomial.polynomial.polyval(s, self.coeffs)

    def scale(self, factor: float) -> "Series":
        return Series(self.coeffs * factor)

    def _aligned(self, other: "Series") -> tuple[np.ndarray, np.ndarray]:
        n = min(self.order, other.order) + 1
        return self.coeffs[:n], other.coeffs[:n]

    def __add__(self, other: "Series") -> "Series":
        a, b = self._aligned(other)
        return Series(a + b)

    def __sub__(self, other: "Series") -> "Series":
        a, b = self._aligned(other)
        return Series(a - b)

    def __neg__(self) -> "Series":
        return Series(-self.coeffs)

    def allclose(self, other: "Series", atol: float) -> bool:
        a, b = self._aligned(other)
        return bool(np.all(np.abs(a - b) <= atol))

    def max_deviation(self, other: "Series") -> float:
        a, b = self._aligned(other)
        return float(np.max(np.abs(a - b)))

    def to_list(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"Series(order={self.order}, [{head}{tail}])"


@dataclass(frozen=True, eq=False)
class ProbSeq:
    """{0,1,2,...} 上の打ち切り確率列.

    Attributes:
        p: 確率 p_0..p_N
        tail_bound: 添字 N を超える質量
    """

    p: np.ndarray
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        try:
            arr = _frozen_array(self.p)
        except InvalidSpec as e:
            raise InvalidPmf(str(e)) from e
        tail = float(self.tail_bound)

        if np.any(arr < 0):
            index = int(np.argmax(arr < 0))
            raise InvalidPmf(f"Negative probability p_{index} = {arr[index]!r}")
        if not (0.0 <= tail <= 1.0):
            raise InvalidPmf(f"tail_bound must be in [0, 1], got {tail!r}")
        total = float(arr.sum()) + tail
        if abs(total - 1.0) > PMF_SUM_TOLERANCE:
            raise InvalidPmf(f"Probabilities plus tail_bound sum to {total!r}, expected 1")

        object.__setattr__(self, "p", arr)
        object.__setattr__(self, "tail_bound", tail)

    # ------------------------------------------------------------------
    # ファクトリ
    # ------------------------------------------------------------------
    @classmethod
    def from_coefficients(
        cls,
        coeffs: Union[ArrayLike, Series],
        tail_bound: Optional[float] = None,
    ) -> "ProbSeq":
        """計算で得た係数列から確率列を作成.

        -1e-12 以上の負値は 0 に丸める。tail_bound 省略時は 1 - Σp。

        Raises:
            InvalidPmf: 丸め範囲を超える負値、または総和が 1 を超える場合
        """
        values = coeffs.coeffs if isinstance(coeffs, Series) else coeffs
        arr = np.array(values, dtype=float)
        if np.any(arr < -NEGATIVE_ROUNDING):
            index = int(np.argmax(arr < -NEGATIVE_ROUNDING))
            raise InvalidPmf(f"Coefficient {index} is negative: {arr[index]!r}")
        arr = np.clip(arr, 0.0, None)
        total = float(arr.sum())
        if tail_bound is None:
            if total > 1.0 + PMF_SUM_TOLERANCE:
                raise InvalidPmf(f"Coefficients sum to {total!r} > 1")
            tail_bound = max(0.0, 1.0 - total)
        return cls(arr, tail_bound)

    @classmethod
    def from_values(cls, values: ArrayLike) -> "ProbSeq":
        """有限台の確率列（裾の質量は 1 - Σp）."""
        return cls.from_coefficients(values)

    @classmethod
    def degenerate(cls, k: int, order: int) -> "ProbSeq":
        if k > order:
            return cls(np.zeros(order + 1), 1.0)
        p = np.zeros(order + 1)
        p[k] = 1.0
        return cls(p, 0.0)

    @classmethod
    def poisson(cls, lam: float, order: int) -> "ProbSeq":
        if lam < 0:
            raise InvalidPmf(f"Poisson rate must be >= 0, got {lam}")
        if lam == 0:
            return cls.degenerate(0, order)
        k = np.arange(order + 1)
        return cls._from_scipy(stats.poisson(lam), k)

    @classmethod
    def geometric(cls, p: float, order: int, shift: int = 0) -> "ProbSeq":
        """幾何分布 P{X = n} = p(1-p)^{n-shift}（shift=0 で I_0, shift=1 で I_1）."""
        if not 0.0 < p <= 1.0:
            raise InvalidPmf(f"Geometric parameter must be in (0, 1], got {p}")
        k = np.arange(order + 1)
        # scipy の geom は I_1 上
        return cls._from_scipy(stats.geom(p, loc=shift - 1), k)

    @classmethod
    def binomial(cls, n: int, p: float, order: Optional[int] = None) -> "ProbSeq":
        if n < 0 or not 0.0 <= p <= 1.0:
            raise InvalidPmf(f"Invalid binomial parameters n={n}, p={p}")
        k = np.arange((n if order is None else order) + 1)
        return cls._from_scipy(stats.binom(n, p), k)

    @classmethod
    def negative_binomial(cls, t: float, p: float, order: int) -> "ProbSeq":
        """PGF (p / (1 - (1-p)s))^t の確率列."""
        if t <= 0 or not 0.0 < p <= 1.0:
            raise InvalidPmf(f"Invalid negative binomial parameters t={t}, p={p}")
        k = np.arange(order + 1)
        return cls._from_scipy(stats.nbinom(t, p), k)

    @classmethod
    def _from_scipy(cls, dist: Any, k: np.ndarray) -> "ProbSeq":
        p = dist.pmf(k)
        tail = float(dist.sf(k[-1]))
        total = float(p.sum()) + tail
        # pmf と sf の丸めの食い違いは裾側で吸収する
        if abs(total - 1.0) > PMF_SUM_TOLERANCE:
            tail = max(0.0, 1.0 - float(p.sum()))
        return cls(p, min(tail, 1.0))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ProbSeq":
        """JSON オブジェクト {"p": [...], "tail_bound": float} から作成."""
        if not isinstance(data, dict) or "p" not in data:
            raise InvalidPmf('ProbSeq JSON must be an object with key "p"')
        unknown = sorted(set(data) - {"p", "tail_bound"})
        if unknown:
            raise InvalidPmf(f"Unknown ProbSeq keys: {', '.join(unknown)}")
        if "tail_bound" in data:
            return cls(data["p"], float(data["tail_bound"]))
        return cls.from_values(data["p"])

    # ------------------------------------------------------------------
    # 参照
    # ------------------------------------------------------------------
    @property
    def order(self) -> int:
        return int(self.p.size - 1)

    @property
    def p0(self) -> float:
        return float(self.p[0])

    def last_nonzero(self) -> int:
        """最後の非零添字（全て 0 なら -1）."""
        nz = np.flatnonzero(self.p)
        return int(nz[-1]) if nz.size else -1

    def as_series(self) -> Series:
        return Series(self.p)

    def padded(self, order: int) -> "ProbSeq":
        """次数 order に揃える（切り捨てた質量は tail_bound に加える）."""
        if order == self.order:
            return self
        if order > self.order:
            p = np.zeros(order + 1)
            p[: self.p.size] = self.p
            return ProbSeq(p, self.tail_bound)
        dropped = float(self.p[order + 1 :].sum())
        return ProbSeq(self.p[: order + 1], min(1.0, self.tail_bound + dropped))

    def evaluate(self, s: ArrayLike) -> Any:
        """PGF の打ち切り和 Σ p_n s^n."""
        return np.polynomial.polynomial.polyval(s, self.p)

    def mean(self) -> float:
        return float(np.dot(np.arange(self.p.size), self.p))

    def to_dict(self) -> dict[str, Any]:
        return {"p": [float(x) for x in self.p], "tail_bound": float(self.tail_bound)}

    def __repr__(self) -> str:
        head = ", ".join(f"{x:.6g}" for x in self.p[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"ProbSeq(order={self.order}, tail_bound={self.tail_bound:.3g}, [{head}{tail}])"
