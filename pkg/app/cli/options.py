"""
命令行公共选项与配置分层

参数优先级：内置默认值 < 配置文件（key = value） < 命令行选项
"""

import argparse
from typing import Any, Dict, Optional

from app.models.run_config import RENDER_SOURCES, RENDER_TARGETS, RunConfig
from app.services.pulse_shape import get_supported_shapes
from app.util.errors import ConfigError, InputError
from app.util.logger import get_logger

logger = get_logger(__name__)


def add_common_options(parser: argparse.ArgumentParser) -> None:
    """所有子命令共用的选项（默认值一律 SUPPRESS，只有显式给出的选项才覆盖配置）"""
    group = parser.add_argument_group("run")
    group.add_argument("--config", dest="config_file", metavar="FILE",
                       help="key = value configuration file; flags override its values")
    group.add_argument("-o", "--output", metavar="PATH",
                       help="output file ('-' prints CSV to stdout)")
    group.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                       help="logging level for stderr")


def add_beam_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("beam and retrieval (degrees, micrometers, microseconds)")
    group.add_argument("--ell", dest="ell_in", type=int, help="input topological charge")
    group.add_argument("--theta", type=float, help="tilt angle between writing and retrieval axes (deg)")
    group.add_argument("--w0", type=float, help="writing beam waist (um)")
    group.add_argument("--waist-ratio", type=float, help="waist ratio of W' to W")
    group.add_argument("--basis-waist", type=float, help="decomposition basis waist (um), default w_eff")
    group.add_argument("--wavelength-nm", type=float, help="wavelength for propagation (nm)")
    group.add_argument("--gamma", type=float, help="effective decay rate (1/us)")
    group.add_argument("--t-s", type=float, help="storage time (us)")
    group.add_argument("--pulse-shape", choices=get_supported_shapes(), help="retrieved pulse model")
    group.add_argument("--tau-r", dest="tau_R", type=float, help="pulse time constant (us)")
    group.add_argument("--reading-waist", type=float, help="finite reading beam waist (um)")


def add_grid_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("grid")
    group.add_argument("--grid-n", type=int, help="samples per axis")
    group.add_argument("--extent-factor", type=float, help="grid extent in units of the largest waist")


def add_spectrum_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("spectrum")
    group.add_argument("--ell-below", type=int, help="report l' from l - ell_below")
    group.add_argument("--ell-above", type=int, help="report l' up to l + ell_above")
    group.add_argument("--no-check", action="store_true",
                       help="skip the second quadrature path cross-check")


def add_render_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("render")
    group.add_argument("--what", choices=RENDER_TARGETS, help="image to render")
    group.add_argument("--source", choices=RENDER_SOURCES, help="input beam or retrieved beam")
    group.add_argument("--lens-fx", type=float, help="lens focal length along x (mm, 'inf' allowed)")
    group.add_argument("--lens-fy", type=float, help="lens focal length along y (mm, 'inf' allowed)")
    group.add_argument("--lens-distance", type=float, help="propagation distance after the lens (mm)")
    group.add_argument("--reference-curvature", type=float,
                       help="spiral reference curvature radius (m)")
    group.add_argument("--reference-waist-factor", type=float,
                       help="spiral reference waist in units of the beam waist")


def add_larmor_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("larmor (gauss, microseconds)")
    group.add_argument("--B", dest="B", type=float, help="magnetic field (G)")
    group.add_argument("--g-factor", type=float, help="Lande g factor magnitude")
    group.add_argument("--delta-m", type=int, choices=[1, 2], help="coherence order")
    group.add_argument("--gamma", type=float, help="effective decay rate (1/us)")
    group.add_argument("--t-max", type=float, help="series length (us)")
    group.add_argument("--dt", type=float, help="time step (us)")


def read_config_file(path: str) -> Dict[str, str]:
    """
    读取 key = value 配置文件（UTF-8，# 开头为注释，行尾 # 之后亦为注释）

    Raises:
        InputError: 文件无法读取
        ConfigError: 行格式错误
    """
    try:
        with open(path, encoding='utf-8') as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise InputError(path, e.strerror or str(e)) from e
    except UnicodeDecodeError as e:
        raise InputError(path, "not UTF-8 text") from e

    values = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError(f"{path}:{number}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split('=', 1))
        if not key:
            raise ConfigError(f"{path}:{number}: missing key")
        values[key] = value
    logger.debug(f"读取配置文件 {path}: {len(values)} 项")
    return values


def build_run_config(args: argparse.Namespace, forced: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    合并默认值、配置文件与命令行选项

    Args:
        args: 解析后的命令行参数（只包含显式给出的选项）
        forced: 子命令固定的取值

    Raises:
        ConfigError / InputError
    """
    options = dict(vars(args))
    config_file = options.pop("config_file", None)
    for key in ("command", "log_level", "handler", "fig4"):
        options.pop(key, None)
    cfg = RunConfig()
    if config_file:
        cfg = RunConfig.from_mapping(read_config_file(config_file), base=cfg)
    cfg = RunConfig.from_mapping(options, base=cfg)
    if forced:
        cfg = RunConfig.from_mapping(forced, base=cfg)
    return cfg.validate()
