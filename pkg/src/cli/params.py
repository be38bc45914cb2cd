"""動詞ごとのパラメータモデル（未知のキーは拒否）."""
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class VerbParams(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PmfParams(VerbParams):
    pmf: str = Field(description="pmf law string or @file.json")


class ThinParams(PmfParams):
    c: float = Field(gt=0.0, le=1.0)
    compare: Optional[str] = Field(default=None, description="second pmf for the D-type comparison")


class SdtestParams(VerbParams):
    pmf: Optional[str] = Field(default=None, description="pmf law string, @file.json or dstable:alpha=..,lambda=..")
    mix: Optional[str] = Field(default=None, description="LT law φ of the PGF φ(λ(1-s)^α)")
    alpha: float = Field(default=1.0, gt=0.0, le=1.0)
    lam: float = Field(default=1.0, gt=0.0)
    c_grid: Optional[list[float]] = None


class StableCheckParams(VerbParams):
    alpha: float = Field(gt=0.0, le=1.0)
    lam: float = Field(default=1.0, gt=0.0)
    n: list[int] = Field(default_factory=lambda: [2, 4, 7])
    phi: Optional[str] = Field(default=None, description="LT law for the domain-of-attraction check")
    n_list: list[int] = Field(default_factory=lambda: [10, 100, 1000])
    norming_scale: float = Field(default=1.0, gt=0.0)
    norming_index: Optional[float] = Field(default=None, gt=0.0)


class PgfFromLtParams(VerbParams):
    phi: str


class PphiParams(VerbParams):
    phi: str
    j: int = Field(default=0, ge=0)
    k: int = Field(default=1, ge=1)
    theta: float = Field(default=1.0, gt=0.0)


class Lemma3Params(VerbParams):
    phi: str
    j: int = Field(default=0, ge=0)
    k: int = Field(default=1, ge=1)
    theta: Optional[list[float]] = None


class TransferSumParams(VerbParams):
    phi: str
    summand: str
    k: int = Field(default=1, ge=1)
    theta: Optional[list[float]] = None


class OpStable2dParams(VerbParams):
    phi: str
    alpha1: float = Field(gt=0.0, le=1.0)
    alpha2: float = Field(gt=0.0, le=1.0)
    summand: Literal["stable", "exponential"] = "stable"
    off_diagonal: float = 0.0
    theta: Optional[list[float]] = None


class MaxstabParams(VerbParams):
    case: str


class PhiMidParams(VerbParams):
    phi: str
    base: str = "exponential"
    theta: Optional[list[float]] = None


class SimulateParams(VerbParams):
    sampler: Literal["positive-stable", "mittag-leffler", "discrete-stable", "exponential-mixture"]
    alpha: float = Field(default=0.5, gt=0.0, le=1.0)
    lam: float = Field(default=1.0, gt=0.0)
    mixing: Optional[str] = None


class Example2Params(VerbParams):
    pass


PARAM_MODELS: dict[str, type[VerbParams]] = {
    "idcheck": PmfParams,
    "decompose": PmfParams,
    "thin": ThinParams,
    "sdtest": SdtestParams,
    "stable-check": StableCheckParams,
    "pgf-from-lt": PgfFromLtParams,
    "pphi": PphiParams,
    "lemma3": Lemma3Params,
    "transfer-sum": TransferSumParams,
    "theorem7": PmfParams,
    "opstable2d": OpStable2dParams,
    "maxstab": MaxstabParams,
    "phi-mid": PhiMidParams,
    "simulate": SimulateParams,
    "example2": Example2Params,
}
