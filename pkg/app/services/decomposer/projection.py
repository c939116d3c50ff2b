"""
逐模式二维投影分解

c_ℓ′ = Σ_{ρ,φ} conj(LG_ℓ′(ρ,φ))·F(ρ,φ)·ρ·w_ρ·Δφ
"""

from typing import Sequence

import numpy as np

from app.models.field import PolarQuadrature
from app.services.decomposer.base import BaseDecomposer


class ProjectionDecomposer(BaseDecomposer):
    """在完整极坐标节点上对每个 ℓ′ 直接求二维内积"""

    name = "projection"

    def project(self, values: np.ndarray, quad: PolarQuadrature, basis_waist: float,
                ells: Sequence[int], p: int = 0) -> np.ndarray:
        phis = quad.phis()
        measure = (quad.radii * quad.weights)[:, None] * quad.dphi
        weighted = values * measure
        coefficients = np.empty(len(ells), dtype=np.complex128)
        for i, ell in enumerate(ells):
            radial = self.radial_profile(ell, p, basis_waist, quad)
            basis = radial[:, None] * np.exp(1j * ell * phis)[None, :]
            coefficients[i] = np.sum(np.conj(basis) * weighted)
        return coefficients
