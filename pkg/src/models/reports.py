"""JSON レポートモデル."""
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .sampling import GENERATOR_NAME

ReportVerdict = Literal["PASS", "FAIL", "NOT_ID", "ID", "INCONCLUSIVE"]


class ConvergenceReport(BaseModel):
    """モンテカルロ収束レポート.

    parameter が "theta" のとき theta は θ の列、"n" のとき標本数の列。
    """

    model_config = ConfigDict(extra="forbid")

    theta: list[float]
    ks: list[float]
    samples: int
    seed: int
    verdict: Literal["PASS", "FAIL"]
    label: Optional[str] = None
    parameter: str = "theta"
    metric: str = "ks"
    threshold: Optional[float] = None
    generator: str = GENERATOR_NAME
    identity_deviation: Optional[float] = None

    @property
    def final(self) -> float:
        return self.ks[-1]

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


class Provenance(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tool: str = "idlab"
    tool_version: str
    generator: str = GENERATOR_NAME
    wall_time: Optional[float] = None


class Report(BaseModel):
    """CLI 実行レポート."""

    model_config = ConfigDict(extra="forbid")

    verb: str
    config: dict[str, Any]
    verdict: ReportVerdict
    payload: dict[str, Any] = Field(default_factory=dict)
    provenance: Provenance


VERBS = (
    "idcheck",
    "decompose",
    "thin",
    "sdtest",
    "stable-check",
    "pgf-from-lt",
    "pphi",
    "lemma3",
    "transfer-sum",
    "theorem7",
    "opstable2d",
    "maxstab",
    "phi-mid",
    "simulate",
    "example2",
)

Verb = Literal[
    "idcheck",
    "decompose",
    "thin",
    "sdtest",
    "stable-check",
    "pgf-from-lt",
    "pphi",
    "lemma3",
    "transfer-sum",
    "theorem7",
    "opstable2d",
    "maxstab",
    "phi-mid",
    "simulate",
    "example2",
]


class RunConfig(BaseModel):
    """1 回の実行設定（--config で JSON として読み込める）."""

    model_config = ConfigDict(extra="forbid")

    verb: Verb
    params: dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    samples: Optional[int] = Field(default=None, ge=1)
    terms: Optional[int] = Field(default=None, ge=1)
    out_dir: str = "out"
    record_time: bool = False
