"""
统一命令结果封装模块

命令结果写到标准输出，错误写成单行 "ERROR: <message>" 到标准错误，
返回值即进程退出码：0 成功，2 配置错误，3 数值一致性错误，4 输入输出错误
"""

import sys
from typing import Optional, TextIO

from app.util.errors import EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK, EXIT_OUTPUT, OamTiltError  # noqa: F401
from app.util.logger import get_logger

logger = get_logger(__name__)


def success(message: Optional[str] = None, stream: Optional[TextIO] = None) -> int:
    """
    成功结果

    Args:
        message: 输出到 stdout 的结果行（可为多行）
        stream: 输出流，默认 sys.stdout

    Returns:
        int: 退出码 0
    """
    if message:
        print(message, file=stream or sys.stdout)
    return EXIT_OK


def error(message: str = "error", code: int = EXIT_CONFIG, stream: Optional[TextIO] = None) -> int:
    """
    错误结果

    Args:
        message: 错误消息，换行会被压成空格以保持单行
        code: 退出码
        stream: 输出流，默认 sys.stderr

    Returns:
        int: 退出码
    """
    line = " ".join(str(message).split())
    logger.debug(f"命令失败: code={code}, {line}")
    print(f"ERROR: {line}", file=stream or sys.stderr)
    return code


def from_exception(exc: OamTiltError, stream: Optional[TextIO] = None) -> int:
    """业务异常转换为错误结果"""
    return error(exc.message, code=exc.exit_code, stream=stream)


def config_error(message: str) -> int:
    return error(message, EXIT_CONFIG)
