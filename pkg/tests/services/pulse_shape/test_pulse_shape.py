"""
读出脉冲形状单元测试
"""

import math

import numpy as np
import pytest

from app.services.pulse_shape import BasePulseShape, get_pulse_shape, get_supported_shapes
from app.services.pulse_shape.models import ExponentialDecayPulse, ExponentialSaturationPulse
from app.util.errors import ConfigError, DomainError


class TestPulseShapeFactory:
    """脉冲模型工厂测试"""

    def test_supported_shapes(self):
        """测试支持的模型列表"""
        assert get_supported_shapes() == ['exponential_saturation', 'exponential_decay']

    @pytest.mark.parametrize("name,expected", [
        ('exponential_saturation', ExponentialSaturationPulse),
        ('EXPONENTIAL_DECAY', ExponentialDecayPulse),
    ])
    def test_get_pulse_shape(self, name, expected):
        """测试按名称获取模型"""
        shape = get_pulse_shape(name, tau_R=2e-6)
        assert isinstance(shape, expected)
        assert isinstance(shape, BasePulseShape)
        assert shape.tau_R == 2e-6

    def test_unsupported_shape(self):
        """测试不支持的模型"""
        with pytest.raises(ValueError, match="不支持的脉冲形状"):
            get_pulse_shape('gaussian')

    def test_non_positive_time_constant(self):
        """测试非正时间常数"""
        with pytest.raises(ConfigError):
            get_pulse_shape('exponential_saturation', tau_R=0.0)


class TestPulseShapes:
    """脉冲模型数值测试"""

    def test_saturation_is_monotone(self):
        """测试指数饱和单调不减且趋于 1"""
        shape = ExponentialSaturationPulse(tau_R=1e-6)
        values = shape(np.linspace(0, 20e-6, 200))
        assert values[0] == 0.0
        assert np.all(np.diff(values) >= 0)
        assert values[-1] == pytest.approx(1.0, abs=1e-8)

    def test_decay_peaks_at_time_constant(self):
        """测试单峰脉冲在 t=τ_R 处取峰值 1"""
        shape = ExponentialDecayPulse(tau_R=1e-6)
        assert shape(1e-6) == pytest.approx(1.0)
        assert shape(2e-6) == pytest.approx(2 * math.exp(-1))
        assert shape(0.5e-6) < 1.0

    def test_scalar_returns_float(self):
        """测试标量输入返回 float"""
        assert isinstance(ExponentialSaturationPulse()(1e-6), float)

    def test_negative_time(self):
        """测试负时间"""
        with pytest.raises(DomainError):
            ExponentialDecayPulse()(np.array([0.0, -1e-9]))
