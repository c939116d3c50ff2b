"""
模式分解器抽象基类

负责公共的参数校验、极坐标求积构建与重采样，子类只实现投影积分
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from app.models.beam import BeamParams, LGIndex
from app.models.field import ComplexField, PolarQuadrature
from app.models.spectrum import EllRange, ModeSpectrum, Normalization
from app.services.field_core import (
    DEFAULT_INTERP_ORDER,
    DEFAULT_N_R,
    quadrature_for_grid,
    resample_polar,
)
from app.services.lg_basis import lg_amplitude, ring_radius
from app.util.errors import AliasingRiskError, DomainError
from app.util.logger import get_logger

logger = get_logger(__name__)

# 默认 ℓ′ 上限
MAX_ELL = 24
# 基模环半径处每个方位条纹的最少采样点数
MIN_SAMPLES_PER_FRINGE = 8


def as_ell_range(lrange: Union[EllRange, Tuple[int, int]]) -> EllRange:
    if isinstance(lrange, EllRange):
        return lrange
    lo, hi = lrange
    return EllRange(int(lo), int(hi))


class BaseDecomposer(ABC):
    """模式分解器抽象基类

    在 LG_{p′}^{ℓ′}(basis_waist) 基上投影场，返回原始（未归一化）系数。
    """

    # 注册名，由子类覆盖
    name: str = ""

    def __init__(self, n_r: int = DEFAULT_N_R, n_phi: Optional[int] = None,
                 interp_order: int = DEFAULT_INTERP_ORDER, max_ell: int = MAX_ELL):
        self.n_r = n_r
        self.n_phi = n_phi
        self.interp_order = interp_order
        self.max_ell = max_ell

    @abstractmethod
    def project(self, values: np.ndarray, quad: PolarQuadrature, basis_waist: float,
                ells: Sequence[int], p: int = 0) -> np.ndarray:
        """
        计算极坐标采样值在各 LG_p^ℓ′ 上的投影

        Args:
            values: 形状 (n_r, n_phi) 的场采样
            quad: 极坐标求积规则
            basis_waist: 基模束腰（米）
            ells: ℓ′ 列表
            p: 径向指标 p′

        Returns:
            np.ndarray: 与 ells 等长的复系数
        """
        pass

    def check_range(self, field: ComplexField, basis_waist: float, ell_range: EllRange) -> None:
        """
        校验 ℓ′ 区间与网格分辨率

        Raises:
            DomainError: 束腰非正或超出 ℓ′ 上限
            AliasingRiskError: 网格分辨不了最高方位阶
        """
        if not basis_waist > 0:
            raise DomainError(f"basis waist must be positive, got {basis_waist}")
        if ell_range.max_abs > self.max_ell:
            raise DomainError(f"l' range {ell_range.lo}..{ell_range.hi} exceeds the cap |l'| <= {self.max_ell}")
        ell_max = ell_range.max_abs
        if ell_max == 0:
            return
        rho = ring_radius(ell_max, basis_waist)
        samples_per_fringe = 2 * np.pi * rho / (ell_max * field.grid.max_pitch)
        if samples_per_fringe < MIN_SAMPLES_PER_FRINGE:
            raise AliasingRiskError(
                f"aliasing risk: only {samples_per_fringe:.1f} samples per azimuthal fringe for l'={ell_max} "
                f"at radius {rho:.4g} m (need {MIN_SAMPLES_PER_FRINGE})"
            )

    def prepare(self, field: ComplexField, basis_waist: float,
                ell_range: EllRange) -> Tuple[np.ndarray, PolarQuadrature]:
        """校验后把场重采样到极坐标求积节点"""
        self.check_range(field, basis_waist, ell_range)
        quad = quadrature_for_grid(field.grid, ell_range.max_abs, n_r=self.n_r, n_phi=self.n_phi)
        values = resample_polar(field, quad, order=self.interp_order)
        return values, quad

    @staticmethod
    def radial_profile(ell: int, p: int, basis_waist: float, quad: PolarQuadrature) -> np.ndarray:
        """基模在径向节点上的实径向因子（φ=0）"""
        return lg_amplitude(LGIndex(ell, p), BeamParams(w0=basis_waist), quad.radii, 0.0).real

    def decompose(self, field: ComplexField, basis_waist: float,
                  lrange: Union[EllRange, Tuple[int, int]], p: int = 0) -> ModeSpectrum:
        """
        分解场，返回 raw 归一化的模谱

        Args:
            field: 读出平面上的场
            basis_waist: 基模束腰（米）
            lrange: ℓ′ 闭区间
            p: 径向指标 p′，默认 0
        """
        ell_range = as_ell_range(lrange)
        values, quad = self.prepare(field, basis_waist, ell_range)
        coefficients = self.project(values, quad, basis_waist, ell_range.values(), p=p)
        logger.debug(
            f"{self.name} 分解完成: l'={ell_range.lo}..{ell_range.hi}, p'={p}, "
            f"n_r={quad.n_r}, n_phi={quad.n_phi}"
        )
        return ModeSpectrum(ell_range, coefficients, basis_waist, Normalization.RAW)
