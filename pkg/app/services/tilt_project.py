"""
倾斜读出服务

读出坐标系 (x′, y′, z′) 与写入坐标系 (x, y, z) 通过绕 x 轴旋转 θ 相联系。
在 z′=0 平面上合成读出光 C 的横向包络：

    E_C(x′, y′) = e^{-γ t_s} · ℰ_W(x′, y′cosθ) · conj(ℰ_{W′}(x′, y′))

ℰ_W 为写入光 LG 包络（沿 z 的变化忽略），ℰ_{W′} 为束腰 waist_ratio·w0 的高斯光，
读出光 R 默认为均匀平面波。
"""

import math
from typing import Iterable, Tuple, Union

import numpy as np

from app.models.beam import BeamParams, LGIndex, ModeComponent
from app.models.field import ComplexField, GridSpec
from app.models.tilt import RetrievalConfig, TiltGeometry
from app.services.lg_basis import lg_amplitude
from app.services.pulse_shape import get_pulse_shape
from app.util.errors import ConfigError
from app.util.logger import get_logger

logger = get_logger(__name__)


def rotate_plane_point(theta: float, xp, yp) -> Tuple:
    """
    读出平面上的点 (x′, y′, 0) 在实验室坐标系中的位置

    x = x′，y = y′·cosθ，z = y′·sinθ。θ 不受 [0, π/2) 限制。
    """
    xp, yp = np.broadcast_arrays(np.asarray(xp, dtype=float), np.asarray(yp, dtype=float))
    x, y, z = xp, yp * math.cos(theta), yp * math.sin(theta)
    if np.ndim(x) == 0:
        return float(x), float(y), float(z)
    return x, y, z


def map_plane_point(geom: TiltGeometry, xp, yp) -> Tuple:
    """按倾斜几何映射读出平面上的点，theta=0 时为恒等映射"""
    return rotate_plane_point(geom.theta, xp, yp)


def effective_waist(w0: float, waist_ratio: float) -> float:
    """
    LG(w0) 与高斯(w1 = waist_ratio·w0) 乘积的等效束腰

    w_eff = w0·w1/√(w0²+w1²)
    """
    w1 = waist_ratio * w0
    return w0 * w1 / math.sqrt(w0 ** 2 + w1 ** 2)


def storage_decay(cfg: RetrievalConfig) -> float:
    """基态相干衰减因子 e^{-γ·t_s} ∈ (0, 1]"""
    return math.exp(-cfg.gamma * cfg.t_s)


def retrieved_pulse(cfg: RetrievalConfig, t):
    """
    读出脉冲包络 g_R(t)

    Args:
        cfg: 读出配置（pulse_shape 与 pulse_params）
        t: 从读出光打开起算的时间（秒），标量或数组

    Raises:
        DomainError: t < 0
        ConfigError: 未知的脉冲形状
    """
    try:
        shape = get_pulse_shape(cfg.pulse_shape, **cfg.pulse_params)
    except (ValueError, TypeError) as e:
        raise ConfigError(f"invalid pulse shape '{cfg.pulse_shape}': {e}") from e
    return shape(t)


def _retrieval_envelope(w_beam: BeamParams, geom: TiltGeometry, cfg: RetrievalConfig,
                        grid: GridSpec) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    写入光在倾斜平面上的极坐标，以及 conj(ℰ_W′)·ℰ_R·e^{-γt_s} 的实包络

    Returns:
        (rho_lab, phi_lab, envelope)
    """
    w0 = w_beam.w0
    grid.check_waist(effective_waist(w0, cfg.waist_ratio), what="retrieved beam")

    xp, yp = grid.mesh()
    xp = xp - grid.origin[0]
    yp = yp - grid.origin[1]
    x, y, _ = map_plane_point(geom, xp, yp)
    rho_lab = np.hypot(x, y)
    phi_lab = np.arctan2(y, x)

    w1 = cfg.waist_ratio * w0
    rho2 = xp ** 2 + yp ** 2
    envelope = np.exp(-rho2 / w1 ** 2)
    if cfg.reading_waist is not None:
        envelope = envelope * np.exp(-rho2 / cfg.reading_waist ** 2)
    envelope = envelope * storage_decay(cfg)
    return rho_lab, phi_lab, envelope


def synthesize_retrieved_field(ell_in: int, w_beam: BeamParams, geom: TiltGeometry,
                               cfg: RetrievalConfig, grid: GridSpec) -> ComplexField:
    """
    合成读出光在 z′=0 平面上的横向包络

    θ=0、t_s=0 时结果为束腰 w_eff 的纯 LG(ℓ_in) 模式（相差一个全局常数）。

    Args:
        ell_in: 写入光拓扑荷
        w_beam: 写入光参数（束腰 w0、振幅）
        geom: 倾斜几何
        cfg: 存储/读出配置
        grid: 读出坐标系 (x′, y′) 中的网格

    Returns:
        ComplexField: 读出光包络

    Raises:
        GridTruncationError: 网格宽度低于 4 倍等效束腰
    """
    rho_lab, phi_lab, envelope = _retrieval_envelope(w_beam, geom, cfg, grid)
    writing = lg_amplitude(LGIndex(ell_in, 0), w_beam, rho_lab, phi_lab)
    logger.debug(f"合成读出光: ell_in={ell_in}, theta={geom.theta_deg:.3f}°, decay={storage_decay(cfg):.6g}")
    return ComplexField(grid, writing * envelope)


def synthesize_retrieved_superposition(components: Iterable[Union[ModeComponent, LGIndex]],
                                       w_beam: BeamParams, geom: TiltGeometry,
                                       cfg: RetrievalConfig, grid: GridSpec) -> ComplexField:
    """
    写入光为 LG 模式叠加时的读出光（如 LG ⊕ 高斯的存储实验）

    Raises:
        ConfigError: 分量列表为空
    """
    components = [c if isinstance(c, ModeComponent) else ModeComponent(c) for c in components]
    if not components:
        raise ConfigError("superposition needs at least one component")
    rho_lab, phi_lab, envelope = _retrieval_envelope(w_beam, geom, cfg, grid)
    writing = np.zeros_like(rho_lab, dtype=np.complex128)
    for component in components:
        writing += component.coefficient * lg_amplitude(component.index, w_beam, rho_lab, phi_lab)
    return ComplexField(grid, writing * envelope)
