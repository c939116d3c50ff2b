"""
读出脉冲形状工厂

根据名称返回相应的 g_R(t) 模型实例
"""

import importlib
from typing import Dict, List, Type

from app.services.pulse_shape.base import BasePulseShape
from app.util.logger import get_logger

logger = get_logger(__name__)

# 脉冲模型注册表（延迟导入）
_SHAPE_REGISTRY: Dict[str, str] = {
    'exponential_saturation': 'app.services.pulse_shape.models.ExponentialSaturationPulse',
    'exponential_decay': 'app.services.pulse_shape.models.ExponentialDecayPulse',
}

# 已加载的模型类缓存
_loaded_shapes: Dict[str, Type[BasePulseShape]] = {}


def _load_shape_class(class_path: str) -> Type[BasePulseShape]:
    if class_path in _loaded_shapes:
        return _loaded_shapes[class_path]
    module_path, class_name = class_path.rsplit('.', 1)
    module = importlib.import_module(module_path)
    shape_class = getattr(module, class_name)
    _loaded_shapes[class_path] = shape_class
    return shape_class


def get_pulse_shape(name: str, **params) -> BasePulseShape:
    """
    根据名称获取脉冲模型

    Args:
        name: 模型名称（exponential_saturation, exponential_decay）
        **params: 模型参数，如 tau_R

    Returns:
        BasePulseShape: 模型实例

    Raises:
        ValueError: 不支持的模型名称
    """
    key = name.lower()
    if key not in _SHAPE_REGISTRY:
        raise ValueError(f"不支持的脉冲形状: {name}，支持的形状: {', '.join(get_supported_shapes())}")
    shape_class = _load_shape_class(_SHAPE_REGISTRY[key])
    return shape_class(**params)


def get_supported_shapes() -> List[str]:
    """获取支持的脉冲模型名称列表"""
    return list(_SHAPE_REGISTRY.keys())
