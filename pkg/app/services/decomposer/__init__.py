"""
模式分解器模块

两种求积路径：逐模式二维投影（projection）与方位角 FFT + 径向积分（fourier），
互为数值校验
"""

from app.services.decomposer.base import BaseDecomposer
from app.services.decomposer.factory import get_decomposer, get_supported_methods

__all__ = ['BaseDecomposer', 'get_decomposer', 'get_supported_methods']
