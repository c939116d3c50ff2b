"""
输出写入器工厂

根据输出格式返回相应的写入器实例
"""

from typing import Dict, List, Type

from app.services.writer.base import BaseWriter
from app.services.writer.csv_writer import CsvWriter
from app.services.writer.pgm_writer import PgmWriter

_WRITER_REGISTRY: Dict[str, Type[BaseWriter]] = {
    'csv': CsvWriter,
    'pgm': PgmWriter,
}


def get_writer(fmt: str) -> BaseWriter:
    """
    根据格式获取写入器

    Raises:
        ValueError: 不支持的输出格式
    """
    fmt = fmt.lower().lstrip('.')
    if fmt not in _WRITER_REGISTRY:
        raise ValueError(f"不支持的输出格式: {fmt}，支持的格式: {', '.join(get_supported_formats())}")
    return _WRITER_REGISTRY[fmt]()


def get_supported_formats() -> List[str]:
    """获取支持的输出格式列表"""
    return list(_WRITER_REGISTRY.keys())
