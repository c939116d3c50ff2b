"""
读出脉冲形状抽象基类

定义所有 g_R(t) 模型必须遵循的接口规范
"""

from abc import ABC, abstractmethod

import numpy as np

from app.util.errors import ConfigError, DomainError


class BasePulseShape(ABC):
    """读出脉冲形状抽象基类

    t 从读出光打开时刻开始计时（秒），返回无量纲包络。
    """

    # 注册名，由子类覆盖
    name: str = ""

    def __init__(self, tau_R: float = 1e-6):
        if not tau_R > 0:
            raise ConfigError(f"pulse time constant tau_R must be positive, got {tau_R}")
        self.tau_R = float(tau_R)

    @abstractmethod
    def evaluate(self, t: np.ndarray) -> np.ndarray:
        """
        计算包络值（输入已校验为非负）

        Args:
            t: 时间数组（秒）

        Returns:
            np.ndarray: 与 t 同形状的包络
        """
        pass

    def __call__(self, t):
        """
        校验后计算 g_R(t)

        Raises:
            DomainError: t < 0
        """
        t_arr = np.asarray(t, dtype=float)
        if np.any(t_arr < 0):
            raise DomainError("pulse time must be non-negative (measured from reading-beam turn-on)")
        values = self.evaluate(t_arr)
        if np.ndim(values) == 0:
            return float(values)
        return values

    def __repr__(self):
        return f"<{self.__class__.__name__}(tau_R={self.tau_R!r})>"
