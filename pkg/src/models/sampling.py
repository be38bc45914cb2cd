"""乱数ストリーム・経験分布モデル."""
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

GENERATOR_NAME = "PCG64DXSM"


@dataclass(frozen=True)
class SeededStream:
    """(seed, stream_id) で決まる再現可能な乱数ストリーム.

    基底の PCG64DXSM を stream_id 回ジャンプさせた系列を使う。
    """

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        if self.stream_id < 0:
            raise ValueError(f"stream_id must be >= 0, got {self.stream_id}")

    def generator(self) -> np.random.Generator:
        bit_generator = np.random.PCG64DXSM(self.seed).jumped(self.stream_id)
        return np.random.Generator(bit_generator)

    def child(self, offset: int) -> "SeededStream":
        return SeededStream(self.seed, self.stream_id + offset)


@dataclass(frozen=True, eq=False)
class EmpiricalDist:
    """昇順に並べた標本."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.sort(np.asarray(self.values, dtype=float).ravel())
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_samples(cls, samples: ArrayLike) -> "EmpiricalDist":
        return cls(np.asarray(samples))

    @property
    def count(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.count

    def cdf(self, x: ArrayLike) -> Any:
        """右連続な経験分布関数."""
        return np.searchsorted(self.values, x, side="right") / self.count

    def mean(self) -> float:
        return float(self.values.mean())
