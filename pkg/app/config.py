"""
配置管理模块
"""

# 导入操作系统相关模块
import os
# 导入 Path，处理路径
from pathlib import Path
# 导入 dotenv，用于加载 .env 文件中的环境变量
from dotenv import load_dotenv

from app.util.errors import ConfigError

# 加载 .env 文件中的环境变量到系统环境变量
load_dotenv()


def _env_number(name: str, default, cast):
    """读取数值型环境变量，未设置或为空时返回默认值"""
    raw = os.environ.get(name, '').strip()
    if not raw:
        return default
    try:
        return cast(raw)
    except ValueError:
        kind = "an integer" if cast is int else "a number"
        raise ConfigError(f"environment variable {name} must be {kind}, got {raw!r}") from None


class Config:
    """基础配置类"""

    # 项目根目录路径（取上级目录）
    BASE_DIR = Path(__file__).parent.parent

    # 日志配置
    # 日志目录，默认 './logs'
    LOG_DIR = os.environ.get('LOG_DIR', './logs')
    # 日志文件名，默认 'oamtilt.log'
    LOG_FILE = os.environ.get('LOG_FILE', 'oamtilt.log')
    # 日志等级，默认 'INFO'
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    # 是否启用控制台日志，默认 True（输出到 stderr，stdout 留给命令结果）
    LOG_ENABLE_CONSOLE = os.environ.get(
        'LOG_ENABLE_CONSOLE', 'true').lower() == 'true'
    # 是否启用文件日志，命令行工具默认关闭
    LOG_ENABLE_FILE = os.environ.get(
        'LOG_ENABLE_FILE', 'false').lower() == 'true'

    # 并行配置
    # 扫描任务的最大工作线程数，0 表示自动（CPU 核数）
    THREADS = 0

    # 数值网格配置
    # 默认每个方向的采样点数
    GRID_N = 512
    # 默认网格物理宽度与最大束腰之比
    EXTENT_FACTOR = 8.0
    # 网格宽度低于该倍数的束腰时报错
    EXTENT_ERROR_FACTOR = 4.0
    # 网格宽度低于该倍数的束腰时告警
    EXTENT_WARN_FACTOR = 6.0

    # 光学配置
    # 诊断传播使用的波长（nm），默认铯 D2 线
    WAVELENGTH_NM = 852.35

    # 输出配置
    OUTPUT_DIR = os.environ.get('OAMTILT_OUTPUT_DIR', './output')

    @classmethod
    def load(cls) -> None:
        """
        从 OAMTILT_* 环境变量读取数值配置（全部解析成功后才生效）

        Raises:
            ConfigError: 环境变量不是合法数值
        """
        values = {
            'THREADS': _env_number('OAMTILT_THREADS', 0, int),
            'GRID_N': _env_number('OAMTILT_GRID_N', 512, int),
            'EXTENT_FACTOR': _env_number('OAMTILT_EXTENT_FACTOR', 8.0, float),
            'WAVELENGTH_NM': _env_number('OAMTILT_WAVELENGTH_NM', 852.35, float),
        }
        for key, value in values.items():
            setattr(cls, key, value)

    @classmethod
    def resolve_threads(cls) -> int:
        """返回实际使用的线程数（0 表示按 CPU 核数）"""
        if cls.THREADS > 0:
            return cls.THREADS
        return os.cpu_count() or 1


try:
    Config.load()
except ConfigError:
    # 保留默认值；命令行入口会再次加载并报告错误
    pass
