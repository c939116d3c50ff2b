"""
运行配置与输出记录模型

RunConfig 使用命令行单位（度、µm、µs、高斯、nm），在模块边界转换为 SI 单位
"""

import math
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Mapping, Optional, Tuple

from app.config import Config
from app.models.base import BaseModel
from app.models.beam import BeamParams
from app.models.diagnostics import AstigmaticLens, LarmorConfig
from app.models.spectrum import EllRange
from app.models.tilt import RetrievalConfig, TiltGeometry
from app.services.pulse_shape import get_supported_shapes
from app.util.errors import ConfigError
from app.util.presets import BEAM_PRESET, TILT_SWEEP, LARMOR_PRESET, SPIRAL_PRESET
from app.util.validators import (
    validate_all,
    validate_choice,
    validate_int,
    validate_number,
    validate_output_path,
)

UM = 1e-6
US = 1e-6
MM = 1e-3

RENDER_TARGETS = ("intensity", "phase", "tilted_lens", "spiral")
RENDER_SOURCES = ("input", "retrieved")
# 配置文件中的别名
KEY_ALIASES = {"ell": "ell_in", "tau_r": "tau_R", "b": "B"}


def _parse_optional_float(text: str) -> Optional[float]:
    if text.strip().lower() in ("", "auto", "none"):
        return None
    return float(text)


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


@dataclass(frozen=True, repr=False)
class RunConfig(BaseModel):
    """一次命令运行的全部参数（命令行单位）"""

    # 倾斜与光束
    theta: float = 0.0
    ell_in: int = 1
    w0: float = BEAM_PRESET["w0_um"]
    waist_ratio: float = BEAM_PRESET["waist_ratio"]
    basis_waist: Optional[float] = None
    wavelength_nm: float = Config.WAVELENGTH_NM
    # 网格
    grid_n: int = Config.GRID_N
    extent_factor: float = Config.EXTENT_FACTOR
    # 存储与读出
    gamma: float = 0.0
    t_s: float = 0.0
    pulse_shape: str = "exponential_saturation"
    tau_R: float = 1.0
    reading_waist: Optional[float] = None
    # 模谱区间
    ell_below: int = TILT_SWEEP["ell_below"]
    ell_above: int = TILT_SWEEP["ell_above"]
    # 拉莫尔
    B: float = LARMOR_PRESET["B_gauss"]
    g_factor: float = LARMOR_PRESET["g_factor"]
    delta_m: int = LARMOR_PRESET["delta_m"]
    t_max: float = LARMOR_PRESET["t_max_us"]
    dt: float = LARMOR_PRESET["dt_us"]
    # 像散透镜（mm，None 表示按束腰自动标定）
    lens_fx: Optional[float] = None
    lens_fy: Optional[float] = None
    lens_distance: Optional[float] = None
    # 螺旋干涉
    reference_curvature: float = SPIRAL_PRESET["reference_curvature_m"]
    reference_waist_factor: float = SPIRAL_PRESET["reference_waist_factor"]
    # 渲染
    what: str = "intensity"
    source: str = "input"
    # 输出
    output: Optional[str] = None
    no_check: bool = False

    @classmethod
    def field_parsers(cls) -> Dict[str, Any]:
        """配置文件字符串 → 字段类型的转换函数"""
        parsers = {}
        for f in fields(cls):
            if f.name in ("basis_waist", "reading_waist", "lens_fx", "lens_fy", "lens_distance"):
                parsers[f.name] = _parse_optional_float
            elif f.name == "no_check":
                parsers[f.name] = _parse_bool
            elif f.name in ("ell_in", "grid_n", "ell_below", "ell_above", "delta_m"):
                parsers[f.name] = int
            elif f.name in ("pulse_shape", "what", "source", "output"):
                parsers[f.name] = str
            else:
                parsers[f.name] = float
        return parsers

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any], base: Optional["RunConfig"] = None) -> "RunConfig":
        """
        从键值对构建配置（字符串值按字段类型转换），未给出的键沿用 base

        Raises:
            ConfigError: 未知的键或无法转换的值
        """
        parsers = cls.field_parsers()
        updates = {}
        for key, value in values.items():
            name = key.strip().replace("-", "_")
            name = KEY_ALIASES.get(name.lower(), name)
            if name not in parsers:
                raise ConfigError(f"unknown configuration key '{key}'")
            if isinstance(value, str):
                try:
                    value = parsers[name](value)
                except ValueError as e:
                    raise ConfigError(f"invalid value for '{key}': {e}") from e
            updates[name] = value
        return replace(base or cls(), **updates)

    def validate(self) -> "RunConfig":
        """
        在任何计算之前校验全部参数，并构建一次各模块的领域对象

        Raises:
            ConfigError: 第一个不合法的参数
        """
        is_valid, error = validate_all([
            validate_number("theta", self.theta, 0.0, 90.0, exclusive_max=True),
            validate_int("ell_in", self.ell_in, -24, 24),
            validate_number("w0", self.w0, 0.0, exclusive_min=True),
            validate_number("waist_ratio", self.waist_ratio, 0.0, exclusive_min=True),
            validate_number("wavelength_nm", self.wavelength_nm, 0.0, exclusive_min=True),
            validate_int("grid_n", self.grid_n, 16),
            validate_number("extent_factor", self.extent_factor, 4.0),
            validate_number("gamma", self.gamma, 0.0),
            validate_number("t_s", self.t_s, 0.0),
            validate_choice("pulse_shape", self.pulse_shape, get_supported_shapes()),
            validate_number("tau_R", self.tau_R, 0.0, exclusive_min=True),
            validate_int("ell_below", self.ell_below, 0),
            validate_int("ell_above", self.ell_above, 0),
            validate_number("B", self.B, 0.0),
            validate_number("g_factor", self.g_factor, 0.0, exclusive_min=True),
            validate_choice("delta_m", self.delta_m, (1, 2)),
            validate_number("t_max", self.t_max, 0.0, exclusive_min=True),
            validate_number("dt", self.dt, 0.0, exclusive_min=True),
            validate_number("reference_curvature", self.reference_curvature, allow_inf=True),
            validate_number("reference_waist_factor", self.reference_waist_factor, 0.0, exclusive_min=True),
            validate_choice("what", self.what, RENDER_TARGETS),
            validate_choice("source", self.source, RENDER_SOURCES),
            validate_output_path(self.output),
        ] + [
            validate_number(name, getattr(self, name), 0.0, exclusive_min=True)
            for name in ("basis_waist", "reading_waist", "lens_distance")
            if getattr(self, name) is not None
        ] + [
            validate_number(name, getattr(self, name), 0.0, exclusive_min=True, allow_inf=True)
            for name in ("lens_fx", "lens_fy")
            if getattr(self, name) is not None
        ])
        if not is_valid:
            raise ConfigError(error)
        if self.reference_curvature == 0:
            raise ConfigError("reference_curvature must be non-zero")
        if self.dt >= self.t_max:
            raise ConfigError(f"time step dt={self.dt:g} us must be smaller than t_max={self.t_max:g} us")

        # 领域对象构造时再执行各模块自身的不变量校验
        self.beam()
        self.geometry()
        self.retrieval()
        self.larmor()
        self.lens()
        self.lrange()
        return self

    # ==================== SI 单位转换 ====================

    def beam(self) -> BeamParams:
        return BeamParams(w0=self.w0 * UM, wavelength=self.wavelength_nm * 1e-9)

    def geometry(self) -> TiltGeometry:
        return TiltGeometry.from_degrees(self.theta)

    def retrieval(self) -> RetrievalConfig:
        return RetrievalConfig(
            gamma=self.gamma / US,
            t_s=self.t_s * US,
            pulse_shape=self.pulse_shape,
            pulse_params={"tau_R": self.tau_R * US},
            waist_ratio=self.waist_ratio,
            reading_waist=None if self.reading_waist is None else self.reading_waist * UM,
        )

    def larmor(self) -> LarmorConfig:
        return LarmorConfig(B=self.B, g_factor=self.g_factor, delta_m=self.delta_m, gamma=self.gamma / US)

    def lens(self) -> Optional[AstigmaticLens]:
        """显式给出透镜参数时返回透镜，否则 None（由诊断服务自动标定）"""
        given = (self.lens_fx, self.lens_fy, self.lens_distance)
        if all(v is None for v in given):
            return None
        if any(v is None for v in given):
            raise ConfigError("lens_fx, lens_fy and lens_distance must be given together")
        return AstigmaticLens(fx=self.lens_fx * MM, fy=self.lens_fy * MM, propagation_distance=self.lens_distance * MM)

    def lrange(self, ell: Optional[int] = None) -> EllRange:
        ell = self.ell_in if ell is None else ell
        return EllRange.around(ell, self.ell_below, self.ell_above)

    def basis_waist_m(self) -> Optional[float]:
        return None if self.basis_waist is None else self.basis_waist * UM

    def time_grid_s(self):
        """拉莫尔时间序列（秒），0 到 t_max（含端点）"""
        n = int(math.floor(self.t_max / self.dt + 1e-9)) + 1
        return [i * self.dt * US for i in range(n)]


@dataclass(frozen=True, repr=False)
class SpectrumRecord(BaseModel):
    """模谱 CSV 的一行"""

    theta_deg: float
    ell_in: int
    ell_prime: int
    re: float
    im: float
    abs: float
    abs_maxnorm: float
    power_frac: float

    @classmethod
    def columns(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def as_row(self) -> Tuple:
        return tuple(getattr(self, name) for name in self.columns())
