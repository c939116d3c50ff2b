"""
参数校验工具单元测试
"""

import math

import pytest

from app.util.validators import (
    validate_all,
    validate_choice,
    validate_int,
    validate_number,
    validate_output_path,
)


class TestValidateNumber:
    """validate_number 测试"""

    @pytest.mark.parametrize("value", [0.0, 45, 89.9])
    def test_in_range(self, value):
        """测试范围内的值"""
        assert validate_number("theta", value, 0.0, 90.0, exclusive_max=True) == (True, None)

    @pytest.mark.parametrize("value,message", [
        (90.0, "theta must be < 90"),
        (-0.1, "theta must be >= 0"),
        ("5", "must be a number"),
        (True, "must be a number"),
        (float("nan"), "NaN"),
        (math.inf, "finite"),
    ])
    def test_rejected(self, value, message):
        """测试被拒绝的值与错误信息"""
        is_valid, error = validate_number("theta", value, 0.0, 90.0, exclusive_max=True)
        assert is_valid is False
        assert message in error

    def test_exclusive_minimum(self):
        """测试开区间下限"""
        assert validate_number("w0", 0.0, 0.0, exclusive_min=True)[0] is False

    def test_allow_inf(self):
        """测试允许无穷大"""
        assert validate_number("lens_fy", math.inf, 0.0, allow_inf=True) == (True, None)


class TestOtherValidators:
    """其他校验函数测试"""

    def test_validate_int(self):
        """测试整数校验"""
        assert validate_int("grid_n", 512, 16) == (True, None)
        assert validate_int("grid_n", 512.0, 16)[0] is False
        assert validate_int("grid_n", 8, 16)[0] is False

    def test_validate_choice(self):
        """测试枚举校验"""
        assert validate_choice("delta_m", 2, (1, 2)) == (True, None)
        is_valid, error = validate_choice("what", "hologram", ("intensity", "phase"))
        assert not is_valid
        assert "intensity, phase" in error

    def test_output_path(self, tmp_path):
        """测试输出路径校验"""
        assert validate_output_path(None) == (True, None)
        assert validate_output_path("-") == (True, None)
        assert validate_output_path(str(tmp_path / "new" / "a.csv")) == (True, None)
        assert validate_output_path(str(tmp_path))[0] is False

    def test_validate_all_returns_first_failure(self):
        """测试返回第一个失败项"""
        checks = [(True, None), (False, "first"), (False, "second")]
        assert validate_all(checks) == (False, "first")
        assert validate_all([(True, None)]) == (True, None)
