"""
拉盖尔-高斯模式基服务

在束腰平面 (z=0) 计算归一化 LG / 高斯光束包络
"""

import math
from typing import Iterable, Union

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from app.models.beam import BeamParams, LGIndex, ModeComponent
from app.models.field import ComplexField, GridSpec
from app.util.errors import ConfigError, DomainError
from app.util.logger import get_logger

logger = get_logger(__name__)


def lg_norm(idx: LGIndex, w0: float) -> float:
    """
    L² 归一化常数 N = sqrt(2 p! / (π (p+|ℓ|)!)) / w0

    阶乘用 gammaln 计算，避免高阶溢出。
    """
    ell = abs(idx.ell)
    log_ratio = gammaln(idx.p + 1) - gammaln(idx.p + ell + 1)
    return math.sqrt(2.0 / math.pi * math.exp(log_ratio)) / w0


def lg_amplitude(idx: Union[LGIndex, tuple], beam: BeamParams, rho, phi) -> Union[complex, np.ndarray]:
    """
    计算 LG_p^ℓ 在 (ρ, φ) 处的复振幅

    N·(ρ√2/w0)^|ℓ|·L_p^|ℓ|(2ρ²/w0²)·exp(-ρ²/w0²)·exp(iℓφ)·amplitude

    Args:
        idx: 模式指标 (ℓ, p)
        beam: 光束参数
        rho: 径向坐标（米），标量或数组，需非负
        phi: 方位角（弧度），可与 rho 广播

    Returns:
        复振幅，标量输入返回 complex

    Raises:
        DomainError: rho 为负
    """
    if not isinstance(idx, LGIndex):
        idx = LGIndex(*idx)
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(rho_arr < 0):
        raise DomainError("radial coordinate rho must be non-negative")
    phi_arr = np.asarray(phi, dtype=float)

    ell = abs(idx.ell)
    w0 = beam.w0
    s = 2.0 * rho_arr ** 2 / w0 ** 2
    radial = (np.sqrt(s) ** ell) * eval_genlaguerre(idx.p, ell, s) * np.exp(-s / 2.0)
    values = lg_norm(idx, w0) * radial * np.exp(1j * idx.ell * phi_arr) * beam.amplitude

    if np.ndim(values) == 0:
        return complex(values)
    return values


def sample_lg(idx: Union[LGIndex, tuple], beam: BeamParams, grid: GridSpec) -> ComplexField:
    """
    在网格上采样 LG 模式

    Raises:
        GridTruncationError: 网格宽度低于 4 倍束腰
    """
    if not isinstance(idx, LGIndex):
        idx = LGIndex(*idx)
    grid.check_waist(beam.w0)
    rho, phi = grid.polar_mesh()
    return ComplexField(grid, lg_amplitude(idx, beam, rho, phi))


def sample_gaussian(beam: BeamParams, grid: GridSpec) -> ComplexField:
    """归一化高斯光束（即 LG_0^0）"""
    return sample_lg(LGIndex(0, 0), beam, grid)


def sample_superposition(components: Iterable[ModeComponent], beam: BeamParams, grid: GridSpec) -> ComplexField:
    """
    采样同束腰 LG 模式的叠加 Σ a_k·LG_{p_k}^{ℓ_k}

    beam.amplitude 作为整体系数作用于叠加结果。

    Raises:
        ConfigError: 分量列表为空
    """
    components = list(components)
    if not components:
        raise ConfigError("superposition needs at least one component")
    grid.check_waist(beam.w0)
    rho, phi = grid.polar_mesh()
    samples = np.zeros((grid.ny, grid.nx), dtype=np.complex128)
    for component in components:
        samples += component.coefficient * lg_amplitude(component.index, beam, rho, phi)
    logger.debug(f"叠加光束: {len(components)} 个分量, w0={beam.w0:.4g}")
    return ComplexField(grid, samples)


def ring_radius(ell: int, w0: float) -> float:
    """
    LG_0^ℓ 强度环半径 ρ_ℓ = √(|ℓ|/2)·w0

    Raises:
        DomainError: ℓ = 0（高斯光束没有环）
    """
    if ell == 0:
        raise DomainError("no ring for Gaussian: ring radius requires l != 0")
    return math.sqrt(abs(ell) / 2.0) * w0
