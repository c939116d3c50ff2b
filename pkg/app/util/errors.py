"""
异常定义模块

所有业务异常都继承 OamTiltError，并携带命令行退出码：
- 2: 配置 / 参数错误
- 3: 数值一致性错误
- 4: 输入输出错误
"""

from typing import Optional

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_OUTPUT = 4


class OamTiltError(Exception):
    """业务异常基类"""

    exit_code: int = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# ==================== 配置类错误（退出码 2） ====================

class ConfigError(OamTiltError):
    """配置或参数校验失败"""

    exit_code = EXIT_CONFIG


class DomainError(ConfigError):
    """参数超出运算定义域"""
    pass


class GridMismatchError(ConfigError):
    """两个场的网格不一致"""

    def __init__(self, grid_a, grid_b):
        super().__init__(f"grid mismatch: {grid_a!r} vs {grid_b!r}")
        self.grid_a = grid_a
        self.grid_b = grid_b


class GridTruncationError(ConfigError):
    """网格过小，截断了模式"""

    def __init__(self, extent: float, waist: float, factor: float):
        super().__init__(
            f"grid truncates mode: extent {extent:.4g} m is below {factor:g}x waist {waist:.4g} m"
        )
        self.extent = extent
        self.waist = waist


class CircleOutsideGridError(ConfigError):
    """绕数计算的圆超出网格"""
    pass


# ==================== 数值类错误（退出码 3） ====================

class NumericalError(OamTiltError):
    """数值计算不可靠或不一致"""

    exit_code = EXIT_NUMERICAL


class NodalCircleError(NumericalError):
    """圆上振幅过小，拓扑荷无定义"""

    def __init__(self, radius: float, ratio: float):
        super().__init__(
            f"charge undefined on nodal circle: radius {radius:.4g} m, min/max amplitude {ratio:.3g}"
        )


class AliasingRiskError(NumericalError):
    """网格无法分辨所需的方位角阶数"""
    pass


class FresnelAliasingError(NumericalError):
    """角谱传播存在频谱混叠"""

    def __init__(self, message: str, required_n: Optional[int] = None):
        if required_n is not None:
            message = f"{message}; minimum grid size {required_n} samples per axis"
        super().__init__(message)
        self.required_n = required_n


class DegenerateSpectrumError(NumericalError):
    """模谱全为零"""

    def __init__(self, message: str = "degenerate spectrum: all coefficients are zero"):
        super().__init__(message)


class NoPatternError(NumericalError):
    """强度图中没有可识别的条纹结构"""

    def __init__(self, message: str = "no pattern: intensity map has no distinct structure"):
        super().__init__(message)


class NoPrecessionError(NumericalError):
    """磁场为零，无拉莫尔进动"""

    def __init__(self, message: str = "no precession: magnetic field is zero"):
        super().__init__(message)


class DegenerateFringesError(NumericalError):
    """参考光无曲率失配，干涉条纹退化"""

    def __init__(self, message: str = "degenerate fringes: concentric rings require l=0"):
        super().__init__(message)


class QuadratureInconsistencyError(NumericalError):
    """两种求积路径结果不一致"""

    def __init__(self, deviation: float, tolerance: float, detail: str = ""):
        message = f"quadrature inconsistency: deviation {deviation:.3e} exceeds {tolerance:.1e}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.deviation = deviation


# ==================== 输入输出错误（退出码 4） ====================

class OutputError(OamTiltError):
    """输出文件无法写入"""

    exit_code = EXIT_OUTPUT

    def __init__(self, path: str, reason: str):
        super().__init__(f"cannot write {path}: {reason}")
        self.path = path


class InputError(OamTiltError):
    """配置文件无法读取"""

    exit_code = EXIT_OUTPUT

    def __init__(self, path: str, reason: str):
        super().__init__(f"cannot read {path}: {reason}")
        self.path = path
