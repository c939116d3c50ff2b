"""
输出写入器抽象基类

定义所有输出格式必须遵循的接口规范
"""

import os
from abc import ABC, abstractmethod
from typing import Any, Optional, Tuple

from app.util.logger import get_logger

logger = get_logger(__name__)


class BaseWriter(ABC):
    """输出写入器抽象基类

    子类只负责把数据编码为字节，落盘与错误处理由基类完成。
    相同输入必须编码为逐字节相同的输出。
    """

    # 默认文件扩展名，由子类覆盖
    extension: str = ""

    @abstractmethod
    def encode(self, payload: Any) -> bytes:
        """
        编码输出数据

        Args:
            payload: 待写出的数据

        Returns:
            bytes: 文件内容
        """
        pass

    def default_path(self, directory: str, stem: str) -> str:
        """未指定输出路径时使用的文件名：<directory>/<stem>.<extension>"""
        return os.path.join(directory, f"{stem}.{self.extension}")

    def write(self, path: str, payload: Any) -> Tuple[Optional[str], Optional[str]]:
        """
        编码并写入文件

        Args:
            path: 输出路径，父目录不存在时自动创建

        Returns:
            Tuple[Optional[str], Optional[str]]: (path, error)
            - 成功时: (absolute_path, None)
            - 失败时: (None, error_message)
        """
        data = self.encode(payload)
        try:
            parent = os.path.dirname(os.path.abspath(path))
            os.makedirs(parent, exist_ok=True)
            with open(path, 'wb') as f:
                f.write(data)
        except OSError as e:
            logger.error(f"写入文件失败: {path}, {e}")
            return None, e.strerror or str(e)
        logger.info(f"已写入 {path} ({len(data)} 字节)")
        return os.path.abspath(path), None

    def emit(self, path: str, payload: Any) -> Tuple[Optional[str], Optional[str]]:
        """
        写出到文件；path 为 "-" 时返回编码后的文本，由调用方打印到 stdout

        Returns:
            Tuple[Optional[str], Optional[str]]: (路径或文本, error)
        """
        if path == "-":
            return self.encode(payload).decode('utf-8'), None
        return self.write(path, payload)
