"""
OAM 模谱模型
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Tuple

import numpy as np

from app.models.base import BaseModel
from app.util.errors import ConfigError


class Normalization(str, Enum):
    """模谱归一化约定"""

    RAW = "raw"
    # 按最大幅值归一化
    MAX_AMPLITUDE = "max_amplitude"
    UNIT_POWER = "unit_power"


@dataclass(frozen=True, repr=False)
class EllRange(BaseModel):
    """连续的 ℓ′ 区间 [lo, hi]（闭区间）"""

    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise ConfigError(f"empty l' range [{self.lo}, {self.hi}]")

    @classmethod
    def around(cls, ell: int, below: int = 4, above: int = 10) -> "EllRange":
        """默认报告区间 [ℓ-4, ℓ+10]"""
        return cls(ell - below, ell + above)

    @property
    def max_abs(self) -> int:
        return max(abs(self.lo), abs(self.hi))

    def values(self) -> List[int]:
        return list(range(self.lo, self.hi + 1))

    def __contains__(self, ell: int) -> bool:
        return self.lo <= ell <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True, repr=False, eq=False)
class ModeSpectrum(BaseModel):
    """ℓ′ → 复系数 c_ℓ′ 的有序映射"""

    __repr_fields__ = ("ell_range", "basis_waist", "normalization")

    ell_range: EllRange
    coefficients: np.ndarray
    basis_waist: float
    normalization: Normalization = Normalization.RAW

    def __post_init__(self):
        coefficients = np.array(self.coefficients, dtype=np.complex128)
        if coefficients.shape != (len(self.ell_range),):
            raise ConfigError(
                f"expected {len(self.ell_range)} coefficients for {self.ell_range!r}, got {coefficients.shape}"
            )
        coefficients.setflags(write=False)
        object.__setattr__(self, 'coefficients', coefficients)
        object.__setattr__(self, 'normalization', Normalization(self.normalization))

    @property
    def ells(self) -> List[int]:
        return self.ell_range.values()

    @property
    def entries(self) -> Dict[int, complex]:
        return {ell: complex(c) for ell, c in zip(self.ells, self.coefficients)}

    def __getitem__(self, ell: int) -> complex:
        if ell not in self.ell_range:
            raise KeyError(ell)
        return complex(self.coefficients[ell - self.ell_range.lo])

    def __iter__(self) -> Iterator[Tuple[int, complex]]:
        return iter(self.entries.items())

    def amplitudes(self) -> np.ndarray:
        return np.abs(self.coefficients)

    def powers(self) -> np.ndarray:
        return np.abs(self.coefficients) ** 2

    def total_power(self) -> float:
        return float(np.sum(self.powers()))

    def dominant_ell(self) -> int:
        return self.ells[int(np.argmax(self.amplitudes()))]

    def with_coefficients(self, coefficients: np.ndarray, normalization: Normalization) -> "ModeSpectrum":
        return ModeSpectrum(self.ell_range, coefficients, self.basis_waist, normalization)


@dataclass(frozen=True, repr=False, eq=False)
class SweepResult(BaseModel):
    """扫描中一个 (θ, ℓ_in) 点的分解结果与两条求积路径的偏差"""

    __repr_fields__ = ("theta_deg", "ell_in", "oracle_deviation")

    theta_deg: float
    ell_in: int
    spectrum: ModeSpectrum
    oracle_deviation: float = 0.0
