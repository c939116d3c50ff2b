"""
读出脉冲形状模块

g_R(t) 的参数化模型，通过工厂按名称获取
"""

from app.services.pulse_shape.base import BasePulseShape
from app.services.pulse_shape.factory import get_pulse_shape, get_supported_shapes

__all__ = ['BasePulseShape', 'get_pulse_shape', 'get_supported_shapes']
