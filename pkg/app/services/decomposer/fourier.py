"""
方位角 FFT + 径向积分分解

先在每个半径上对 φ 做离散傅里叶变换得到 F_m(ρ)，再与径向因子做一维积分
"""

from typing import Sequence

import numpy as np

from app.models.field import PolarQuadrature
from app.services.decomposer.base import BaseDecomposer


class FourierDecomposer(BaseDecomposer):
    """与逐模式投影数学等价、求值顺序不同的交叉校验路径"""

    name = "fourier"

    @staticmethod
    def azimuthal_harmonics(values: np.ndarray, quad: PolarQuadrature) -> np.ndarray:
        """F_m(ρ) = Δφ·Σ_k F(ρ, φ_k)·e^{-imφ_k}，按 FFT 顺序排列"""
        return np.fft.fft(values, axis=1) * quad.dphi

    def project(self, values: np.ndarray, quad: PolarQuadrature, basis_waist: float,
                ells: Sequence[int], p: int = 0) -> np.ndarray:
        harmonics = self.azimuthal_harmonics(values, quad)
        measure = quad.radii * quad.weights
        coefficients = np.empty(len(ells), dtype=np.complex128)
        for i, ell in enumerate(ells):
            radial = self.radial_profile(ell, p, basis_waist, quad)
            coefficients[i] = np.sum(radial * harmonics[:, ell % quad.n_phi] * measure)
        return coefficients
