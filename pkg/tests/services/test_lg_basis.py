"""
LG 模式基单元测试
"""

import math

import numpy as np
import pytest

from app.models.beam import BeamParams, LGIndex, ModeComponent
from app.models.field import GridSpec
from app.services.lg_basis import (
    lg_amplitude,
    lg_norm,
    ring_radius,
    sample_gaussian,
    sample_lg,
    sample_superposition,
)
from app.util.errors import ConfigError, DomainError, GridTruncationError

W0 = 100e-6


class TestLgAmplitude:
    """lg_amplitude 测试"""

    def setup_method(self):
        self.beam = BeamParams(w0=W0)

    def test_gaussian_norm(self):
        """测试 LG_0^0 的归一化常数"""
        assert lg_norm(LGIndex(0, 0), W0) == pytest.approx(math.sqrt(2 / math.pi) / W0)
        assert lg_amplitude((0, 0), self.beam, 0.0, 0.0) == pytest.approx(math.sqrt(2 / math.pi) / W0)

    @pytest.mark.parametrize("ell", [1, -2, 5])
    def test_vortex_vanishes_on_axis(self, ell):
        """测试涡旋光轴上振幅为零"""
        assert lg_amplitude((ell, 0), self.beam, 0.0, 0.3) == 0

    def test_scalar_returns_complex(self):
        """测试标量输入返回 complex"""
        assert isinstance(lg_amplitude((1, 0), self.beam, W0, 0.0), complex)

    def test_array_input(self):
        """测试数组输入与广播"""
        values = lg_amplitude((1, 0), self.beam, np.array([0.5, 1.0]) * W0, np.array([[0.0], [1.0]]))
        assert values.shape == (2, 2)

    @pytest.mark.parametrize("ell", [1, 3, -2])
    def test_azimuthal_phase(self, ell):
        """测试方位相位 exp(iℓφ)"""
        phi = 0.7
        ratio = lg_amplitude((ell, 0), self.beam, W0, phi) / lg_amplitude((ell, 0), self.beam, W0, 0.0)
        assert ratio == pytest.approx(np.exp(1j * ell * phi))

    def test_opposite_charge_is_conjugate(self):
        """测试 LG_{-ℓ} = conj(LG_ℓ)"""
        a = lg_amplitude((3, 1), self.beam, 1.2 * W0, 0.4)
        b = lg_amplitude((-3, 1), self.beam, 1.2 * W0, 0.4)
        assert b == pytest.approx(np.conj(a))

    def test_amplitude_scales(self):
        """测试复振幅整体缩放"""
        scaled = BeamParams(w0=W0, amplitude=2j)
        assert lg_amplitude((1, 0), scaled, W0, 0.0) == pytest.approx(2j * lg_amplitude((1, 0), self.beam, W0, 0.0))

    def test_negative_radius(self):
        """测试负径向坐标"""
        with pytest.raises(DomainError):
            lg_amplitude((0, 0), self.beam, -1e-6, 0.0)

    def test_negative_radial_index(self):
        """测试负径向指标"""
        with pytest.raises(ConfigError):
            lg_amplitude((0, -1), self.beam, 0.0, 0.0)


class TestSampling:
    """网格采样测试"""

    def setup_method(self):
        self.beam = BeamParams(w0=W0)
        self.grid = GridSpec.for_waist(W0, n=256)

    def test_truncating_grid(self):
        """测试网格过小"""
        with pytest.raises(GridTruncationError):
            sample_lg((1, 0), self.beam, GridSpec.for_waist(W0, n=64, factor=3.0))

    def test_gaussian_is_lg00(self):
        """测试高斯光束即 LG_0^0"""
        assert np.allclose(sample_gaussian(self.beam, self.grid).samples,
                           sample_lg((0, 0), self.beam, self.grid).samples)

    def test_superposition(self):
        """测试叠加等于各分量之和"""
        components = [ModeComponent(LGIndex(1), 0.6), ModeComponent(LGIndex(-1, 1), 0.8j)]
        field = sample_superposition(components, self.beam, self.grid)
        expected = 0.6 * sample_lg((1, 0), self.beam, self.grid).samples \
            + 0.8j * sample_lg((-1, 1), self.beam, self.grid).samples
        assert np.allclose(field.samples, expected)

    def test_empty_superposition(self):
        """测试空叠加"""
        with pytest.raises(ConfigError):
            sample_superposition([], self.beam, self.grid)

    def test_ring_radius_is_intensity_maximum(self):
        """测试强度环半径处强度最大"""
        rho = np.linspace(0.01, 3.0, 3000) * W0
        intensity = np.abs(lg_amplitude((3, 0), self.beam, rho, 0.0)) ** 2
        assert rho[np.argmax(intensity)] == pytest.approx(ring_radius(3, W0), rel=1e-3)

    def test_no_ring_for_gaussian(self):
        """测试高斯光束没有强度环"""
        with pytest.raises(DomainError, match="no ring"):
            ring_radius(0, W0)


class TestOrthonormality:
    """LG 基正交归一测试"""

    def test_low_order_gram_matrix(self):
        """测试 ℓ ≤ 3、p ≤ 1 的 Gram 矩阵"""
        beam = BeamParams(w0=W0)
        grid = GridSpec.for_waist(W0, n=384, factor=12.0)
        indices = [(ell, p) for ell in range(-3, 4) for p in range(2)]
        modes = np.array([sample_lg(idx, beam, grid).samples.ravel() for idx in indices])
        gram = np.conj(modes) @ modes.T * grid.cell_area
        assert np.max(np.abs(gram - np.eye(len(indices)))) < 1e-6

    @pytest.mark.slow
    def test_high_order_gram_matrix(self):
        """测试 ℓ, p ≤ 5 的 Gram 矩阵（高阶模需要 16 倍束腰网格）"""
        beam = BeamParams(w0=W0)
        grid = GridSpec.for_waist(W0, n=512, factor=16.0)
        indices = [(ell, p) for ell in range(6) for p in range(6)]
        modes = np.array([sample_lg(idx, beam, grid).samples.ravel() for idx in indices])
        gram = np.conj(modes) @ modes.T * grid.cell_area
        assert np.max(np.abs(gram - np.eye(len(indices)))) < 1e-6
