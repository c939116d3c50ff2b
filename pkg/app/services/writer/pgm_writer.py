"""
PGM 图像写入器

二进制 P5 格式：ASCII 头 "P5\\n<width> <height>\\n65535\\n"，随后是大端 16 位采样，
按行从上到下排列。图像第一行对应网格的最大 y（网格数组第一行是最小 y）。
"""

import math
import re

import numpy as np

from app.models.diagnostics import IntensityMap
from app.services.writer.base import BaseWriter
from app.util.errors import ConfigError

MAXVAL = 65535

_HEADER = re.compile(rb'^P5\s+(\d+)\s+(\d+)\s+(\d+)\s')


def quantize_intensity(intensity: IntensityMap) -> np.ndarray:
    """强度按 [0, max] 线性映射到 [0, 65535]，返回自上而下的图像"""
    peak = intensity.peak
    if peak <= 0:
        scaled = np.zeros_like(intensity.values)
    else:
        scaled = intensity.values / peak * MAXVAL
    return np.rint(scaled).astype(np.uint16)[::-1]


def quantize_phase(phase: np.ndarray) -> np.ndarray:
    """相位按 [-π, π] 线性映射到 [0, 65535]，返回自上而下的图像"""
    clipped = np.clip(np.asarray(phase, dtype=float), -math.pi, math.pi)
    scaled = (clipped + math.pi) / (2 * math.pi) * MAXVAL
    return np.rint(scaled).astype(np.uint16)[::-1]


def to_grid_order(image: np.ndarray) -> np.ndarray:
    """自上而下的图像转换回网格行序（y 递增）"""
    return np.asarray(image)[::-1]


def decode_pgm(data: bytes) -> np.ndarray:
    """
    读取 16 位 P5 图像

    Returns:
        形状 (height, width) 的 uint16 数组（自上而下）

    Raises:
        ConfigError: 不是 16 位 P5 数据
    """
    match = _HEADER.match(data)
    if not match:
        raise ConfigError("not a binary PGM (P5) image")
    width, height, maxval = (int(g) for g in match.groups())
    if maxval != MAXVAL:
        raise ConfigError(f"expected maxval {MAXVAL}, got {maxval}")
    body = data[match.end():]
    if len(body) != 2 * width * height:
        raise ConfigError(f"PGM body has {len(body)} bytes, expected {2 * width * height}")
    return np.frombuffer(body, dtype='>u2').reshape(height, width).astype(np.uint16)


class PgmWriter(BaseWriter):
    """16 位 PGM 写入器，payload 为自上而下的 uint16 图像"""

    extension = "pgm"

    def encode(self, payload: np.ndarray) -> bytes:
        image = np.asarray(payload)
        if image.ndim != 2 or image.dtype != np.uint16:
            raise ConfigError("PGM payload must be a 2-D uint16 image")
        height, width = image.shape
        header = f"P5\n{width} {height}\n{MAXVAL}\n".encode('ascii')
        return header + image.astype('>u2').tobytes()

