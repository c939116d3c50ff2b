"""
输出写入模块

CSV（模谱、拉莫尔时间序列）与 16 位 PGM 图像
"""

from app.services.writer.base import BaseWriter
from app.services.writer.factory import get_writer, get_supported_formats

__all__ = ['BaseWriter', 'get_writer', 'get_supported_formats']
