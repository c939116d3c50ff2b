"""
场运算核心单元测试
"""

import numpy as np
import pytest

from app.models.beam import BeamParams
from app.models.field import ComplexField, GridSpec
from app.services.field_core import (
    build_polar_quadrature,
    inner_product,
    polar_inner_product,
    quadrature_for_grid,
    resample_polar,
    sample_points,
    total_power,
    winding_number,
)
from app.services.lg_basis import ring_radius, sample_lg
from app.util.errors import CircleOutsideGridError, DomainError, GridMismatchError, NodalCircleError

W0 = 100e-6


@pytest.fixture
def beam():
    return BeamParams(w0=W0)


@pytest.fixture
def grid():
    return GridSpec.for_waist(W0, n=256)


class TestInnerProduct:
    """离散内积测试"""

    @pytest.mark.parametrize("ell", [0, 1, -2, 4])
    def test_mode_is_normalized(self, beam, grid, ell):
        """测试 LG 模式的离散范数为 1"""
        field = sample_lg((ell, 0), beam, grid)
        assert total_power(field) == pytest.approx(1.0, abs=1e-6)

    def test_conjugate_symmetry(self, beam, grid):
        """测试 ⟨f, g⟩ = conj⟨g, f⟩"""
        f = sample_lg((1, 0), beam, grid)
        g = sample_lg((1, 1), beam, grid) + sample_lg((-1, 0), beam, grid) * 0.5j
        assert inner_product(f, g) == pytest.approx(np.conj(inner_product(g, f)))

    def test_different_charges_orthogonal(self, beam, grid):
        """测试不同拓扑荷正交"""
        f = sample_lg((0, 0), beam, grid)
        g = sample_lg((4, 0), beam, grid)
        assert abs(inner_product(f, g)) < 1e-8

    def test_grid_mismatch(self, beam, grid):
        """测试网格不一致"""
        other = GridSpec.for_waist(W0, n=128)
        with pytest.raises(GridMismatchError):
            inner_product(sample_lg((0, 0), beam, grid), sample_lg((0, 0), beam, other))


class TestPolarQuadrature:
    """极坐标求积与重采样测试"""

    def test_n_phi_rounded_to_even(self):
        """测试方位采样数取偶数"""
        assert build_polar_quadrature(1.0, n_r=8, n_phi=33).n_phi == 34

    def test_radial_rule_integrates_polynomial(self):
        """测试径向规则对多项式精确"""
        quad = build_polar_quadrature(2.0, n_r=16, n_phi=8)
        assert np.sum(quad.radii ** 3 * quad.weights) == pytest.approx(4.0)

    def test_non_positive_radius(self):
        """测试非正积分半径"""
        with pytest.raises(DomainError):
            build_polar_quadrature(0.0)

    def test_quadrature_for_grid(self, grid):
        """测试按网格内切圆与最高阶构建"""
        quad = quadrature_for_grid(grid, ell_max=100)
        assert quad.n_phi >= 404
        assert quad.r_max < grid.inscribed_radius

    def test_polar_norm(self, beam, grid):
        """测试重采样后极坐标范数"""
        field = sample_lg((3, 0), beam, grid)
        quad = quadrature_for_grid(grid, ell_max=3)
        values = resample_polar(field, quad)
        assert polar_inner_product(values, values, quad).real == pytest.approx(1.0, abs=1e-6)

    def test_resample_outside_grid(self, beam, grid):
        """测试求积半径超出网格"""
        quad = build_polar_quadrature(grid.extent_x, n_r=8, n_phi=8)
        with pytest.raises(CircleOutsideGridError):
            resample_polar(sample_lg((0, 0), beam, grid), quad)

    def test_sample_points_at_nodes(self, beam, grid):
        """测试在网格节点上插值等于采样值"""
        field = sample_lg((2, 0), beam, grid)
        x = grid.x_coords()[100:104]
        y = grid.y_coords()[120:124]
        expected = field.samples[120:124, 100:104].diagonal()
        assert np.allclose(sample_points(field, x, y, order=1), expected)
        assert np.allclose(sample_points(field, x, y, order=0), expected)


class TestWindingNumber:
    """相位绕数测试"""

    @pytest.mark.parametrize("ell", [-3, -1, 1, 2, 5])
    def test_charge_of_lg_mode(self, beam, grid, ell):
        """测试 LG 模式在强度环上的绕数"""
        field = sample_lg((ell, 0), beam, grid)
        assert winding_number(field, ring_radius(ell, W0)) == ell

    def test_gaussian_has_no_charge(self, beam, grid):
        """测试高斯光束绕数为 0"""
        assert winding_number(sample_lg((0, 0), beam, grid), W0) == 0

    def test_radius_too_small(self, beam, grid):
        """测试半径不超过两倍网格间距"""
        with pytest.raises(DomainError):
            winding_number(sample_lg((1, 0), beam, grid), grid.dx)

    def test_circle_outside_grid(self, beam, grid):
        """测试圆超出网格"""
        with pytest.raises(CircleOutsideGridError):
            winding_number(sample_lg((1, 0), beam, grid), grid.extent_x)

    def test_off_center_circle(self, beam, grid):
        """测试圆心偏离时圆超出网格"""
        with pytest.raises(CircleOutsideGridError):
            winding_number(sample_lg((1, 0), beam, grid), 2 * W0, center=(3 * W0, 0.0))

    def test_nodal_circle(self, grid):
        """测试零场上的绕数无定义"""
        with pytest.raises(NodalCircleError):
            winding_number(ComplexField.zeros(grid), W0)


class TestFieldInvariants:
    """内积与绕数的不变性测试"""

    @pytest.mark.parametrize("a,b", [(1.0, 0.0), (2 - 1j, 0.5j), (-0.3, 1.5 + 2j)])
    def test_inner_product_linearity(self, beam, grid, a, b):
        """测试 ⟨af+bg, h⟩ = conj(a)⟨f,h⟩ + conj(b)⟨g,h⟩"""
        f = sample_lg((1, 0), beam, grid)
        g = sample_lg((-2, 1), beam, grid)
        h = sample_lg((1, 0), beam, grid) + 0.7j * sample_lg((-2, 1), beam, grid)
        left = inner_product(a * f + b * g, h)
        right = np.conj(a) * inner_product(f, h) + np.conj(b) * inner_product(g, h)
        assert abs(left - right) < 1e-12

    def test_inner_product_converges_with_resolution(self, beam):
        """测试网格分辨率加倍时内积变化小于 1e-6"""
        wide = BeamParams(w0=1.3 * W0)
        values = []
        for n in (128, 256):
            grid = GridSpec.for_waist(1.3 * W0, n=n)
            values.append(inner_product(sample_lg((1, 0), beam, grid), sample_lg((1, 0), wide, grid)))
        assert 0.5 < abs(values[1]) < 1.0
        assert abs(values[1] - values[0]) < 1e-6

    @pytest.mark.parametrize("factor", [2.0, -1.0, 1j, 3e-3 * (1 - 2j)])
    def test_winding_invariant_under_constant_factor(self, beam, grid, factor):
        """测试乘以非零复常数不改变绕数"""
        field = sample_lg((3, 0), beam, grid) * factor
        assert winding_number(field, ring_radius(3, W0)) == 3
