"""
模式分解器工厂

根据方法名返回相应的分解器实例
"""

import importlib
from typing import Dict, List, Type

from app.services.decomposer.base import BaseDecomposer
from app.util.logger import get_logger

logger = get_logger(__name__)

# 分解器注册表（延迟导入避免循环依赖）
_DECOMPOSER_REGISTRY: Dict[str, str] = {
    'projection': 'app.services.decomposer.projection.ProjectionDecomposer',
    'fourier': 'app.services.decomposer.fourier.FourierDecomposer',
}

# 已加载的分解器类缓存
_loaded_decomposers: Dict[str, Type[BaseDecomposer]] = {}


def _load_decomposer_class(class_path: str) -> Type[BaseDecomposer]:
    """
    动态加载分解器类

    Args:
        class_path: 类的完整路径，如 'app.services.decomposer.fourier.FourierDecomposer'

    Returns:
        Type[BaseDecomposer]: 分解器类
    """
    if class_path in _loaded_decomposers:
        return _loaded_decomposers[class_path]

    module_path, class_name = class_path.rsplit('.', 1)
    module = importlib.import_module(module_path)
    decomposer_class = getattr(module, class_name)
    _loaded_decomposers[class_path] = decomposer_class
    return decomposer_class


def get_decomposer(method: str, **options) -> BaseDecomposer:
    """
    根据方法名获取分解器

    Args:
        method: 方法名（projection, fourier）
        **options: 传给分解器构造函数的参数（n_r, n_phi, interp_order）

    Returns:
        BaseDecomposer: 分解器实例

    Raises:
        ValueError: 不支持的分解方法
    """
    method = method.lower()
    if method not in _DECOMPOSER_REGISTRY:
        raise ValueError(f"不支持的分解方法: {method}，支持的方法: {', '.join(get_supported_methods())}")
    decomposer_class = _load_decomposer_class(_DECOMPOSER_REGISTRY[method])
    return decomposer_class(**options)


def get_supported_methods() -> List[str]:
    """获取支持的分解方法列表"""
    return list(_DECOMPOSER_REGISTRY.keys())
