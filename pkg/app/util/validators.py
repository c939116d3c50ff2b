"""
参数校验工具模块

提供运行配置的校验功能：
- 数值类型与取值范围校验
- 枚举取值校验
- 输出路径校验
所有校验函数返回 (is_valid, error_message)。
"""

import math
import os
from typing import Any, Iterable, Optional, Tuple

from app.util.logger import get_logger

logger = get_logger(__name__)


def validate_number(name: str, value: Any, minimum: Optional[float] = None, maximum: Optional[float] = None,
                    exclusive_min: bool = False, exclusive_max: bool = False,
                    allow_inf: bool = False) -> Tuple[bool, Optional[str]]:
    """
    校验实数参数

    Args:
        name: 参数名（用于错误信息）
        value: 参数值
        minimum / maximum: 取值下限 / 上限（None 表示不限）
        exclusive_min / exclusive_max: 是否为开区间
        allow_inf: 是否允许 ±inf

    Returns:
        (is_valid, error_message)
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return False, f"{name} must be a number, got {value!r}"
    if math.isnan(value):
        return False, f"{name} must not be NaN"
    if math.isinf(value) and not allow_inf:
        return False, f"{name} must be finite"
    if minimum is not None:
        if value < minimum or (exclusive_min and value == minimum):
            op = ">" if exclusive_min else ">="
            return False, f"{name} must be {op} {minimum:g}, got {value:g}"
    if maximum is not None:
        if value > maximum or (exclusive_max and value == maximum):
            op = "<" if exclusive_max else "<="
            return False, f"{name} must be {op} {maximum:g}, got {value:g}"
    return True, None


def validate_int(name: str, value: Any, minimum: Optional[int] = None,
                 maximum: Optional[int] = None) -> Tuple[bool, Optional[str]]:
    """校验整数参数"""
    if isinstance(value, bool) or not isinstance(value, int):
        return False, f"{name} must be an integer, got {value!r}"
    return validate_number(name, value, minimum, maximum)


def validate_choice(name: str, value: Any, choices: Iterable[Any]) -> Tuple[bool, Optional[str]]:
    """校验枚举参数"""
    choices = list(choices)
    if value not in choices:
        return False, f"{name} must be one of {', '.join(str(c) for c in choices)}, got {value!r}"
    return True, None


def validate_output_path(path: Optional[str]) -> Tuple[bool, Optional[str]]:
    """
    校验输出路径

    路径为空表示输出到标准输出；否则父目录必须存在或可创建，且路径不能是目录。
    """
    if path is None or path == "-":
        return True, None
    if os.path.isdir(path):
        return False, f"output path {path} is a directory"
    parent = os.path.dirname(os.path.abspath(path))
    existing = parent
    while not os.path.exists(existing):
        existing = os.path.dirname(existing)
    if not os.access(existing, os.W_OK):
        return False, f"output directory {parent} is not writable"
    return True, None


def validate_all(checks: Iterable[Tuple[bool, Optional[str]]]) -> Tuple[bool, Optional[str]]:
    """依次检查校验结果，返回第一个失败项"""
    for is_valid, error in checks:
        if not is_valid:
            logger.debug(f"参数校验失败: {error}")
            return False, error
    return True, None
