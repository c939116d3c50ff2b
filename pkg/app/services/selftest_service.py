"""
自检命令服务

运行基模正交归一、双路径求积一致性、奇偶选择与绕数检查
"""

from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from app.models.beam import BeamParams, LGIndex
from app.models.field import GridSpec
from app.models.spectrum import EllRange
from app.models.tilt import RetrievalConfig, TiltGeometry
from app.services.field_core import winding_number
from app.services.lg_basis import ring_radius, sample_lg
from app.services.oam_spectrum import compare_spectra, decompose, decompose_fourier, retrieval_grid
from app.services.tilt_project import effective_waist, synthesize_retrieved_field
from app.util.errors import NumericalError, OamTiltError, QuadratureInconsistencyError
from app.util.logger import get_logger
from app.util.presets import BEAM_PRESET, TOLERANCES

logger = get_logger(__name__)

# 高阶正交归一检查使用 16 倍束腰的网格
ORTHONORMALITY_EXTENT_FACTOR = 16.0
ORTHONORMALITY_MAX_INDEX = 5
PARITY_TOLERANCE = 1e-8


class SelfTestService:
    """自检服务类"""

    def __init__(self):
        self.beam = BeamParams(w0=BEAM_PRESET["w0_um"] * 1e-6)
        self.cfg = RetrievalConfig(waist_ratio=BEAM_PRESET["waist_ratio"])
        self.w_eff = effective_waist(self.beam.w0, self.cfg.waist_ratio)

    def _retrieved(self, ell: int, theta_deg: float):
        grid = retrieval_grid(self.beam.w0, self.cfg.waist_ratio)
        return synthesize_retrieved_field(ell, self.beam, TiltGeometry.from_degrees(theta_deg), self.cfg, grid)

    def check_orthonormality(self) -> Tuple[float, float]:
        """LG_p^ℓ（ℓ, p ≤ 5）的 Gram 矩阵与单位阵的最大偏差"""
        grid = GridSpec.for_waist(self.beam.w0, factor=ORTHONORMALITY_EXTENT_FACTOR)
        indices = [LGIndex(ell, p) for ell in range(ORTHONORMALITY_MAX_INDEX + 1)
                   for p in range(ORTHONORMALITY_MAX_INDEX + 1)]
        modes = np.array([sample_lg(idx, self.beam, grid).samples.ravel() for idx in indices])
        gram = np.conj(modes) @ modes.T * grid.cell_area
        return float(np.max(np.abs(gram - np.eye(len(indices))))), TOLERANCES["orthonormality"]

    def check_oracle(self) -> Tuple[float, float]:
        """两条求积路径在参考场上的最大相对偏差"""
        fields = [
            (sample_lg((1, 0), self.beam.with_waist(self.w_eff), retrieval_grid(self.beam.w0, self.cfg.waist_ratio)),
             EllRange(-4, 10)),
            (self._retrieved(2, 10.0), EllRange.around(2)),
            (self._retrieved(3, 20.0), EllRange.around(3)),
        ]
        worst = 0.0
        for field, lrange in fields:
            worst = max(worst, compare_spectra(decompose(field, self.w_eff, lrange),
                                               decompose_fourier(field, self.w_eff, lrange)))
        return worst, TOLERANCES["oracle"]

    def check_parity(self) -> Tuple[float, float]:
        """θ=20°、ℓ=3 读出光的奇宇称系数相对幅值"""
        spectrum = decompose(self._retrieved(3, 20.0), self.w_eff, EllRange.around(3))
        amplitudes = spectrum.amplitudes()
        odd = [a for ell, a in zip(spectrum.ells, amplitudes) if (ell - 3) % 2]
        return float(max(odd) / amplitudes.max()), PARITY_TOLERANCE

    def check_winding(self) -> Tuple[float, float]:
        """θ=2° 读出光在强度环上的绕数与写入拓扑荷的最大差"""
        worst = 0
        for ell in range(1, 5):
            field = self._retrieved(ell, 2.0)
            worst = max(worst, abs(winding_number(field, ring_radius(ell, self.w_eff)) - ell))
        return float(worst), 0.0

    def checks(self) -> Dict[str, Callable[[], Tuple[float, float]]]:
        return {
            "orthonormality": self.check_orthonormality,
            "oracle_equivalence": self.check_oracle,
            "parity_selection": self.check_parity,
            "winding_number": self.check_winding,
        }

    def run(self) -> Tuple[Optional[str], Optional[OamTiltError]]:
        """
        selftest 命令

        Returns:
            (逐项结果, 异常) - 任一检查失败时返回数值错误
        """
        lines: List[str] = []
        failed: Optional[OamTiltError] = None
        for name, check in self.checks().items():
            try:
                value, tolerance = check()
            except OamTiltError as e:
                logger.error(f"自检 {name} 异常: {e.message}")
                return None, e
            passed = value <= tolerance
            lines.append(f"{name}: {'PASS' if passed else 'FAIL'} value={value:.3e} tolerance={tolerance:.1e}")
            logger.info(lines[-1])
            if not passed and failed is None:
                if name == "oracle_equivalence":
                    failed = QuadratureInconsistencyError(value, tolerance, "selftest")
                else:
                    failed = NumericalError(f"selftest {name} failed: {value:.3e} exceeds {tolerance:.1e}")
        if failed:
            print_lines = "\n".join(lines)
            logger.error(f"自检失败:\n{print_lines}")
            return None, failed
        return "\n".join(lines), None


selftest_service = SelfTestService()
