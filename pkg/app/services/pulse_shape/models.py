"""
读出脉冲形状实现
"""

import numpy as np

from app.services.pulse_shape.base import BasePulseShape


class ExponentialSaturationPulse(BasePulseShape):
    """指数饱和：g_R(t) = 1 - exp(-t/τ_R)，单调不减，g_R(0)=0，t→∞ 趋于 1"""

    name = "exponential_saturation"

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        return -np.expm1(-t / self.tau_R)


class ExponentialDecayPulse(BasePulseShape):
    """单峰读出脉冲：g_R(t) = (t/τ_R)·exp(1 - t/τ_R)，在 t=τ_R 处取峰值 1"""

    name = "exponential_decay"

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        s = t / self.tau_R
        return s * np.exp(1.0 - s)
