"""
倾斜读出模型

读出坐标系几何（绕 x 轴旋转 θ）与存储/读出配置
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from app.models.base import BaseModel
from app.util.errors import ConfigError


@dataclass(frozen=True, repr=False)
class TiltGeometry(BaseModel):
    """z 轴（写入）与 z′ 轴（读出）之间的夹角，旋转轴固定为 x 轴"""

    theta: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta < math.pi / 2):
            raise ConfigError(f"tilt angle must lie in [0, pi/2), got {self.theta}")

    @classmethod
    def from_degrees(cls, theta_deg: float) -> "TiltGeometry":
        return cls(theta=math.radians(theta_deg))

    @property
    def theta_deg(self) -> float:
        return math.degrees(self.theta)


@dataclass(frozen=True, repr=False)
class RetrievalConfig(BaseModel):
    """存储与读出参数

    gamma: 有效均匀退相干率（1/s）
    t_s: 存储时间（s）
    pulse_shape: g_R(t) 模型名称（见 pulse_shape 工厂）
    pulse_params: 模型参数，默认 tau_R = 1 µs
    waist_ratio: W′ 与 W 的束腰比
    reading_waist: 读出光 R 的束腰（米），None 表示均匀平面波
    """

    gamma: float = 0.0
    t_s: float = 0.0
    pulse_shape: str = "exponential_saturation"
    pulse_params: Dict[str, Any] = field(default_factory=lambda: {"tau_R": 1e-6})
    waist_ratio: float = 1.4
    reading_waist: Optional[float] = None

    def __post_init__(self):
        if self.gamma < 0:
            raise ConfigError(f"decay rate gamma must be non-negative, got {self.gamma}")
        if self.t_s < 0:
            raise ConfigError(f"storage time must be non-negative, got {self.t_s}")
        if not self.waist_ratio > 0:
            raise ConfigError(f"waist ratio must be positive, got {self.waist_ratio}")
        tau = self.pulse_params.get("tau_R", 1e-6)
        if not tau > 0:
            raise ConfigError(f"pulse time constant tau_R must be positive, got {tau}")
        if self.reading_waist is not None and not self.reading_waist > 0:
            raise ConfigError(f"reading beam waist must be positive, got {self.reading_waist}")

    @property
    def tau_R(self) -> float:
        return float(self.pulse_params.get("tau_R", 1e-6))

    def __hash__(self):
        return hash((self.gamma, self.t_s, self.pulse_shape,
                     tuple(sorted(self.pulse_params.items())), self.waist_ratio, self.reading_waist))
