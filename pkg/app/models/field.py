"""
场模型

定义横向采样网格、复标量场和极坐标求积规则
"""

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.config import Config
from app.models.base import BaseModel
from app.util.errors import ConfigError, GridMismatchError, GridTruncationError


@dataclass(frozen=True, repr=False)
class GridSpec(BaseModel):
    """二维横向采样网格

    采样点坐标为 origin + (i - (n-1)/2) * pitch，关于 origin 严格中心对称。
    """

    nx: int
    ny: int
    dx: float
    dy: float
    origin: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ConfigError(f"grid needs at least 2x2 samples, got {self.nx}x{self.ny}")
        if not (self.dx > 0 and self.dy > 0):
            raise ConfigError(f"grid pitch must be positive, got dx={self.dx}, dy={self.dy}")
        object.__setattr__(self, 'origin', (float(self.origin[0]), float(self.origin[1])))

    @classmethod
    def square(cls, n: int, extent: float, origin: Tuple[float, float] = (0.0, 0.0)) -> "GridSpec":
        """
        按物理宽度构建方形网格

        Args:
            n: 每个方向的采样点数
            extent: 物理宽度（米），pitch = extent / n
            origin: 网格中心坐标
        """
        return cls(nx=n, ny=n, dx=extent / n, dy=extent / n, origin=origin)

    @classmethod
    def for_waist(cls, waist: float, n: Optional[int] = None, factor: Optional[float] = None) -> "GridSpec":
        """按最大束腰构建默认网格（默认 512x512，宽度 8 倍束腰）"""
        n = n or Config.GRID_N
        factor = factor or Config.EXTENT_FACTOR
        return cls.square(n, factor * waist)

    @property
    def extent_x(self) -> float:
        return self.nx * self.dx

    @property
    def extent_y(self) -> float:
        return self.ny * self.dy

    @property
    def min_extent(self) -> float:
        return min(self.extent_x, self.extent_y)

    @property
    def max_pitch(self) -> float:
        return max(self.dx, self.dy)

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy

    @property
    def inscribed_radius(self) -> float:
        """网格内切圆半径（以最外层采样点为界）"""
        return min((self.nx - 1) * self.dx, (self.ny - 1) * self.dy) / 2

    def x_coords(self) -> np.ndarray:
        return self.origin[0] + (np.arange(self.nx) - (self.nx - 1) / 2) * self.dx

    def y_coords(self) -> np.ndarray:
        return self.origin[1] + (np.arange(self.ny) - (self.ny - 1) / 2) * self.dy

    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """返回形状为 (ny, nx) 的坐标网格 (X, Y)"""
        return np.meshgrid(self.x_coords(), self.y_coords())

    def polar_mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """返回相对于 origin 的极坐标 (rho, phi)"""
        x, y = self.mesh()
        x = x - self.origin[0]
        y = y - self.origin[1]
        return np.hypot(x, y), np.arctan2(y, x)

    def fractional_index(self, x, y) -> Tuple[np.ndarray, np.ndarray]:
        """物理坐标转换为 (行, 列) 小数索引"""
        col = (np.asarray(x) - self.origin[0]) / self.dx + (self.nx - 1) / 2
        row = (np.asarray(y) - self.origin[1]) / self.dy + (self.ny - 1) / 2
        return row, col

    def check_waist(self, waist: float, what: str = "mode") -> None:
        """
        校验网格宽度是否足以容纳给定束腰

        宽度低于 4 倍束腰时报错，低于 6 倍时告警。

        Raises:
            GridTruncationError: 网格截断模式
        """
        extent = self.min_extent
        if extent < Config.EXTENT_ERROR_FACTOR * waist:
            raise GridTruncationError(extent, waist, Config.EXTENT_ERROR_FACTOR)
        if extent < Config.EXTENT_WARN_FACTOR * waist:
            warnings.warn(
                f"grid extent {extent:.4g} m is below {Config.EXTENT_WARN_FACTOR:g}x the {what} waist "
                f"{waist:.4g} m; truncation errors may exceed tolerances",
                stacklevel=3,
            )


@dataclass(frozen=True, repr=False, eq=False)
class ComplexField(BaseModel):
    """网格上的复标量场，samples 形状为 (ny, nx)，构造后只读"""

    __repr_fields__ = ("grid",)

    grid: GridSpec
    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.complex128)
        if samples.shape != (self.grid.ny, self.grid.nx):
            raise ConfigError(
                f"samples shape {samples.shape} does not match grid ({self.grid.ny}, {self.grid.nx})"
            )
        if not np.all(np.isfinite(samples)):
            raise ConfigError("field samples must be finite")
        samples.setflags(write=False)
        object.__setattr__(self, 'samples', samples)

    @classmethod
    def zeros(cls, grid: GridSpec) -> "ComplexField":
        return cls(grid, np.zeros((grid.ny, grid.nx), dtype=np.complex128))

    def intensity(self) -> np.ndarray:
        return np.abs(self.samples) ** 2

    def phase(self) -> np.ndarray:
        return np.angle(self.samples)

    def with_samples(self, samples: np.ndarray) -> "ComplexField":
        return ComplexField(self.grid, samples)

    def conj(self) -> "ComplexField":
        return self.with_samples(np.conj(self.samples))

    def __mul__(self, factor) -> "ComplexField":
        return self.with_samples(self.samples * complex(factor))

    __rmul__ = __mul__

    def __add__(self, other: "ComplexField") -> "ComplexField":
        if other.grid != self.grid:
            raise GridMismatchError(self.grid, other.grid)
        return self.with_samples(self.samples + other.samples)


@dataclass(frozen=True, repr=False, eq=False)
class PolarQuadrature(BaseModel):
    """极坐标求积规则：径向 Gauss-Legendre 节点 × 方位角均匀采样"""

    __repr_fields__ = ("r_max", "n_phi")

    radii: np.ndarray
    weights: np.ndarray
    n_phi: int
    r_max: float

    def __post_init__(self):
        radii = np.array(self.radii, dtype=float)
        weights = np.array(self.weights, dtype=float)
        if radii.shape != weights.shape or radii.ndim != 1 or radii.size == 0:
            raise ConfigError("radial nodes and weights must be matching 1-D arrays")
        if np.any(weights <= 0):
            raise ConfigError("quadrature weights must be positive")
        if np.any(np.diff(radii) <= 0):
            raise ConfigError("quadrature nodes must be strictly increasing")
        if self.n_phi < 4:
            raise ConfigError(f"n_phi must be at least 4, got {self.n_phi}")
        radii.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, 'radii', radii)
        object.__setattr__(self, 'weights', weights)

    @property
    def n_r(self) -> int:
        return int(self.radii.size)

    @property
    def dphi(self) -> float:
        return 2 * math.pi / self.n_phi

    def phis(self) -> np.ndarray:
        return np.arange(self.n_phi) * self.dphi
