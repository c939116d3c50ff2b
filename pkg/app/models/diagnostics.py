"""
光学诊断模型

像散透镜与拉莫尔进动参数
"""

import math
from dataclasses import dataclass

import numpy as np

from app.models.base import BaseModel
from app.models.field import ComplexField, GridSpec
from app.util.errors import ConfigError


@dataclass(frozen=True, repr=False)
class AstigmaticLens(BaseModel):
    """像散（倾斜）透镜：x、y 方向焦距不同，之后自由传播 propagation_distance

    焦距允许取 math.inf（该方向无聚焦，即柱面透镜）。
    """

    fx: float
    fy: float
    propagation_distance: float

    def __post_init__(self):
        if not (self.fx > 0 and self.fy > 0):
            raise ConfigError(f"focal lengths must be positive, got fx={self.fx}, fy={self.fy}")
        if self.fx == self.fy:
            raise ConfigError("astigmatic lens requires fx != fy")
        if not (self.propagation_distance > 0 and math.isfinite(self.propagation_distance)):
            raise ConfigError(f"propagation distance must be positive, got {self.propagation_distance}")


@dataclass(frozen=True, repr=False)
class LarmorConfig(BaseModel):
    """拉莫尔进动参数

    B: 磁场（高斯）
    g_factor: 朗德因子，默认 0.25（Cs F=3 的绝对值）
    delta_m: 相干阶数 Δm，1 或 2
    gamma: 退相干率（1/s）
    """

    B: float = 0.0
    g_factor: float = 0.25
    delta_m: int = 2
    gamma: float = 0.0

    def __post_init__(self):
        if self.B < 0:
            raise ConfigError(f"magnetic field must be non-negative, got {self.B}")
        if self.delta_m not in (1, 2):
            raise ConfigError(f"delta_m must be 1 or 2, got {self.delta_m}")
        if self.gamma < 0:
            raise ConfigError(f"decay rate gamma must be non-negative, got {self.gamma}")


@dataclass(frozen=True, repr=False, eq=False)
class IntensityMap(BaseModel):
    """网格上的实非负强度图，values 形状为 (ny, nx)，行按 y 递增排列"""

    __repr_fields__ = ("grid",)

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.ny, self.grid.nx):
            raise ConfigError(
                f"intensity shape {values.shape} does not match grid ({self.grid.ny}, {self.grid.nx})"
            )
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ConfigError("intensity values must be finite and non-negative")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def of(cls, field: ComplexField) -> "IntensityMap":
        return cls(field.grid, field.intensity())

    @property
    def peak(self) -> float:
        return float(np.max(self.values))
