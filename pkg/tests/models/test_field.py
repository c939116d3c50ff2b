"""
场模型单元测试
"""

import math

import numpy as np
import pytest

from app.models.field import ComplexField, GridSpec, PolarQuadrature
from app.util.errors import ConfigError, GridMismatchError, GridTruncationError


class TestGridSpec:
    """GridSpec 测试"""

    def test_coordinates_symmetric_about_origin(self):
        """测试采样坐标关于中心严格对称"""
        grid = GridSpec.square(64, 1e-3)
        x = grid.x_coords()
        assert np.array_equal(x, -x[::-1])
        assert grid.dx == pytest.approx(1e-3 / 64)

    def test_origin_offset(self):
        """测试非零中心"""
        grid = GridSpec.square(8, 8.0, origin=(1.0, -2.0))
        assert np.mean(grid.x_coords()) == pytest.approx(1.0)
        assert np.mean(grid.y_coords()) == pytest.approx(-2.0)

    def test_fractional_index_of_origin(self):
        """测试中心点的小数索引"""
        grid = GridSpec.square(16, 1.0)
        row, col = grid.fractional_index(0.0, 0.0)
        assert row == pytest.approx(7.5)
        assert col == pytest.approx(7.5)

    def test_mesh_shape(self):
        """测试网格形状为 (ny, nx)"""
        grid = GridSpec(nx=8, ny=4, dx=1.0, dy=1.0)
        x, y = grid.mesh()
        assert x.shape == (4, 8)
        assert y[1, 0] > y[0, 0]

    @pytest.mark.parametrize("kwargs", [
        {"nx": 1, "ny": 8, "dx": 1.0, "dy": 1.0},
        {"nx": 8, "ny": 8, "dx": 0.0, "dy": 1.0},
        {"nx": 8, "ny": 8, "dx": 1.0, "dy": -1.0},
    ])
    def test_invalid_grid(self, kwargs):
        """测试非法网格参数"""
        with pytest.raises(ConfigError):
            GridSpec(**kwargs)

    def test_check_waist_truncation(self):
        """测试网格宽度低于 4 倍束腰时报错"""
        grid = GridSpec.square(64, 3.0)
        with pytest.raises(GridTruncationError):
            grid.check_waist(1.0)

    def test_check_waist_warning(self):
        """测试网格宽度介于 4 和 6 倍束腰之间时告警"""
        grid = GridSpec.square(64, 5.0)
        with pytest.warns(UserWarning, match="below"):
            grid.check_waist(1.0)

    def test_for_waist_default_extent(self):
        """测试默认网格宽度为 8 倍束腰"""
        grid = GridSpec.for_waist(1e-4, n=128)
        assert grid.extent_x == pytest.approx(8e-4)
        assert grid.inscribed_radius == pytest.approx(127 * grid.dx / 2)


class TestComplexField:
    """ComplexField 测试"""

    def setup_method(self):
        self.grid = GridSpec.square(8, 1.0)

    def test_shape_mismatch(self):
        """测试采样形状与网格不一致"""
        with pytest.raises(ConfigError):
            ComplexField(self.grid, np.zeros((8, 7)))

    def test_non_finite_samples(self):
        """测试非有限采样值"""
        samples = np.zeros((8, 8), dtype=complex)
        samples[2, 3] = np.nan
        with pytest.raises(ConfigError):
            ComplexField(self.grid, samples)

    def test_samples_read_only(self):
        """测试构造后只读"""
        field = ComplexField.zeros(self.grid)
        with pytest.raises(ValueError):
            field.samples[0, 0] = 1.0

    def test_arithmetic(self):
        """测试数乘、加法与共轭"""
        field = ComplexField(self.grid, np.full((8, 8), 1 + 2j))
        doubled = field + field
        assert np.allclose(doubled.samples, (2 * field).samples)
        assert np.allclose(field.conj().samples, 1 - 2j)
        assert np.allclose(field.intensity(), 5.0)

    def test_add_grid_mismatch(self):
        """测试网格不一致的场相加"""
        other = ComplexField.zeros(GridSpec.square(8, 2.0))
        with pytest.raises(GridMismatchError):
            ComplexField.zeros(self.grid) + other


class TestPolarQuadrature:
    """PolarQuadrature 测试"""

    def test_invalid_weights(self):
        """测试非正权重"""
        with pytest.raises(ConfigError):
            PolarQuadrature(radii=[0.1, 0.2], weights=[0.1, -0.1], n_phi=8, r_max=1.0)

    def test_unsorted_nodes(self):
        """测试节点不递增"""
        with pytest.raises(ConfigError):
            PolarQuadrature(radii=[0.2, 0.1], weights=[0.1, 0.1], n_phi=8, r_max=1.0)

    def test_azimuthal_nodes(self):
        """测试方位角采样间隔与节点"""
        quad = PolarQuadrature(radii=[0.5], weights=[1.0], n_phi=16, r_max=1.0)
        assert quad.dphi == pytest.approx(math.pi / 8)
        assert quad.phis()[-1] == pytest.approx(2 * math.pi - math.pi / 8)
