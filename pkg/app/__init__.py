"""
oam-tilt：倾斜读出的 LG 光束 OAM 模谱计算库与命令行工具

命令行入口见 app.cli
"""

__version__ = "0.1.0"
