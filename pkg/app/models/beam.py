"""
光束模型

LG 模式指标 (ℓ, p) 与光束参数
"""

import cmath
from dataclasses import dataclass

from app.models.base import BaseModel
from app.util.errors import ConfigError


@dataclass(frozen=True, repr=False)
class LGIndex(BaseModel):
    """LG 模式指标：ell 为拓扑荷（可为负），p 为径向指标"""

    ell: int
    p: int = 0

    def __post_init__(self):
        if self.p < 0:
            raise ConfigError(f"radial index p must be non-negative, got {self.p}")
        object.__setattr__(self, 'ell', int(self.ell))
        object.__setattr__(self, 'p', int(self.p))

    def __iter__(self):
        return iter((self.ell, self.p))


@dataclass(frozen=True, repr=False)
class BeamParams(BaseModel):
    """光束参数：束腰 w0（米）、复振幅、波长（米，仅诊断传播使用）"""

    w0: float
    amplitude: complex = 1.0
    wavelength: float = 852.35e-9

    def __post_init__(self):
        if not self.w0 > 0:
            raise ConfigError(f"beam waist must be positive, got {self.w0}")
        if not self.wavelength > 0:
            raise ConfigError(f"wavelength must be positive, got {self.wavelength}")
        amplitude = complex(self.amplitude)
        if not cmath.isfinite(amplitude):
            raise ConfigError("beam amplitude must be finite")
        object.__setattr__(self, 'amplitude', amplitude)

    @property
    def rayleigh_range(self) -> float:
        """瑞利长度 z_R = π w0² / λ"""
        return cmath.pi * self.w0 ** 2 / self.wavelength

    def with_waist(self, w0: float) -> "BeamParams":
        return BeamParams(w0=w0, amplitude=self.amplitude, wavelength=self.wavelength)


@dataclass(frozen=True, repr=False)
class ModeComponent(BaseModel):
    """叠加光束中的一个分量（LG 指标 + 复系数）"""

    index: LGIndex
    coefficient: complex = 1.0
