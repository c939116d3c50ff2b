"""
场运算核心服务

内积、功率、极坐标求积、笛卡尔→极坐标重采样与相位绕数
"""

import math
from typing import Optional

import numpy as np
from scipy import ndimage
from scipy.special import roots_legendre

from app.models.field import ComplexField, GridSpec, PolarQuadrature
from app.util.errors import (
    CircleOutsideGridError,
    DomainError,
    GridMismatchError,
    NodalCircleError,
)
from app.util.logger import get_logger

logger = get_logger(__name__)

# 默认径向节点数
DEFAULT_N_R = 160
# 默认方位角采样数
DEFAULT_N_PHI = 256
# 默认重采样样条阶数（1 为双线性）
DEFAULT_INTERP_ORDER = 5
# 绕数计算的最少圆周采样点
MIN_WINDING_POINTS = 256
# 圆周振幅阈值（相对于场最大值）
NODAL_THRESHOLD = 1e-6


def _require_same_grid(f: ComplexField, g: ComplexField) -> None:
    if f.grid != g.grid:
        raise GridMismatchError(f.grid, g.grid)


def inner_product(f: ComplexField, g: ComplexField) -> complex:
    """
    离散 L² 内积 Σ conj(f)·g·dx·dy（中点规则）

    Raises:
        GridMismatchError: 两个场的网格不一致
    """
    _require_same_grid(f, g)
    return complex(np.vdot(f.samples, g.samples) * f.grid.cell_area)


def total_power(f: ComplexField) -> float:
    """场的总功率 ⟨f, f⟩"""
    return float(np.vdot(f.samples, f.samples).real * f.grid.cell_area)


def build_polar_quadrature(r_max: float, n_r: int = DEFAULT_N_R, n_phi: int = DEFAULT_N_PHI) -> PolarQuadrature:
    """
    构建径向 Gauss-Legendre × 方位角均匀的求积规则

    Args:
        r_max: 积分半径上限（米）
        n_r: 径向节点数
        n_phi: 方位角采样数（取偶数，保证 φ 与 φ+π 成对出现）
    """
    if not r_max > 0:
        raise DomainError(f"quadrature radius must be positive, got {r_max}")
    n_phi = int(n_phi) + int(n_phi) % 2
    nodes, weights = roots_legendre(n_r)
    radii = 0.5 * r_max * (nodes + 1.0)
    return PolarQuadrature(radii=radii, weights=0.5 * r_max * weights, n_phi=n_phi, r_max=r_max)


def quadrature_for_grid(grid: GridSpec, ell_max: int = 0, n_r: int = DEFAULT_N_R,
                        n_phi: Optional[int] = None) -> PolarQuadrature:
    """按网格内切圆构建求积规则，n_phi 不小于 4·(ℓ_max+1)"""
    required = 4 * (abs(ell_max) + 1)
    n_phi = max(n_phi or DEFAULT_N_PHI, required)
    r_max = grid.inscribed_radius - grid.max_pitch
    return build_polar_quadrature(r_max, n_r=n_r, n_phi=n_phi)


def sample_points(f: ComplexField, x: np.ndarray, y: np.ndarray, order: int = DEFAULT_INTERP_ORDER) -> np.ndarray:
    """
    在任意物理坐标点上插值场

    实部、虚部分别做样条插值（order=1 为双线性，order=0 为最近邻）。
    """
    row, col = f.grid.fractional_index(x, y)
    coords = np.array([np.ravel(row), np.ravel(col)])
    if order == 0:
        rows = np.clip(np.rint(coords[0]).astype(int), 0, f.grid.ny - 1)
        cols = np.clip(np.rint(coords[1]).astype(int), 0, f.grid.nx - 1)
        values = f.samples[rows, cols]
    else:
        real = ndimage.map_coordinates(f.samples.real, coords, order=order, mode='nearest')
        imag = ndimage.map_coordinates(f.samples.imag, coords, order=order, mode='nearest')
        values = real + 1j * imag
    return values.reshape(np.shape(x))


def resample_polar(f: ComplexField, quad: PolarQuadrature, order: int = DEFAULT_INTERP_ORDER) -> np.ndarray:
    """
    把笛卡尔网格上的场重采样到极坐标节点

    Returns:
        形状 (n_r, n_phi) 的复数组
    """
    if quad.r_max > f.grid.inscribed_radius:
        raise CircleOutsideGridError(
            f"quadrature radius {quad.r_max:.4g} m exceeds grid inscribed radius {f.grid.inscribed_radius:.4g} m"
        )
    rho = quad.radii[:, None]
    phi = quad.phis()[None, :]
    x = f.grid.origin[0] + rho * np.cos(phi)
    y = f.grid.origin[1] + rho * np.sin(phi)
    return sample_points(f, x, y, order=order)


def polar_inner_product(values_a: np.ndarray, values_b: np.ndarray, quad: PolarQuadrature) -> complex:
    """极坐标求积下的内积 ∫∫ conj(a)·b ρ dρ dφ"""
    integrand = np.conj(values_a) * values_b
    radial = integrand.sum(axis=1) * quad.dphi
    return complex(np.sum(radial * quad.radii * quad.weights))


def winding_number(f: ComplexField, radius: float, n_points: int = MIN_WINDING_POINTS,
                   center: Optional[tuple] = None) -> int:
    """
    沿圆周统计相位绕数 (1/2π)∮∇arg(f)·dl

    圆周上最近邻取样，相邻相位差折叠到 (-π, π] 后求和。

    Args:
        f: 复场
        radius: 圆半径（米），需大于 2 倍网格间距
        n_points: 圆周采样点数（至少 256）
        center: 圆心，默认网格 origin

    Raises:
        DomainError: 半径过小
        CircleOutsideGridError: 圆超出网格
        NodalCircleError: 圆上振幅低于阈值
    """
    grid = f.grid
    if radius <= 2 * grid.max_pitch:
        raise DomainError(f"winding radius {radius:.4g} m must exceed twice the grid pitch")
    cx, cy = center if center is not None else grid.origin
    offset = math.hypot(cx - grid.origin[0], cy - grid.origin[1])
    if offset + radius > grid.inscribed_radius:
        raise CircleOutsideGridError(
            f"circle of radius {radius:.4g} m does not fit inside the grid (inscribed radius "
            f"{grid.inscribed_radius:.4g} m)"
        )
    n_points = max(int(n_points), MIN_WINDING_POINTS)
    phi = np.arange(n_points) * (2 * math.pi / n_points)
    values = sample_points(f, cx + radius * np.cos(phi), cy + radius * np.sin(phi), order=0)

    peak = float(np.max(np.abs(f.samples)))
    ratio = float(np.min(np.abs(values)) / peak) if peak > 0 else 0.0
    if ratio <= NODAL_THRESHOLD:
        raise NodalCircleError(radius, ratio)

    phase = np.angle(values)
    steps = np.diff(np.append(phase, phase[0]))
    steps = (steps + math.pi) % (2 * math.pi) - math.pi
    total = float(np.sum(steps)) / (2 * math.pi)
    charge = int(round(total))
    logger.debug(f"绕数计算: radius={radius:.4g}, raw={total:.6f}, charge={charge}")
    return charge
