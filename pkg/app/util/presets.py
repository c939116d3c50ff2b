"""
预设配置模块

定义实验光束参数、倾斜扫描点和诊断默认参数
"""

# 实验光束默认参数（CLI 单位：µm、nm）
BEAM_PRESET = {
    "w0_um": 250.0,
    "wavelength_nm": 852.35,
    "waist_ratio": 1.4,
}

# 倾斜扫描：每个 θ 一组，每组四个输入拓扑荷
TILT_SWEEP = {
    "name": "tilt sweep",
    "description": "retrieved-beam decomposition over LG_{p'=0}^{l'}, max-normalized per l",
    "points": [
        {"label": "a", "theta_deg": 5.0},
        {"label": "b", "theta_deg": 10.0},
        {"label": "c", "theta_deg": 15.0},
        {"label": "d", "theta_deg": 20.0},
    ],
    "ells": [0, 1, 2, 3],
    # 报告区间 [ℓ-4, ℓ+10]
    "ell_below": 4,
    "ell_above": 10,
}

# 串扰验收扫描：实验角度 2°
CROSSTALK_SWEEP = {
    "theta_deg": 2.0,
    "ells": [1, 2, 3, 4],
    "max_crosstalk": 1e-3,
}

# 螺旋干涉默认参数
SPIRAL_PRESET = {
    # 参考高斯光束腰与 LG 束腰之比
    "reference_waist_factor": 2.0,
    # 参考光曲率半径（米）
    "reference_curvature_m": 0.5,
}

# 像散透镜诊断：网格宽度为束腰的 16 倍
TILTED_LENS_PRESET = {
    "extent_factor": 16.0,
}

# 拉莫尔进动默认参数（约 0.3 G）
LARMOR_PRESET = {
    "B_gauss": 0.3,
    "g_factor": 0.25,
    "delta_m": 2,
    "gamma_per_us": 0.0,
    "t_max_us": 30.0,
    "dt_us": 0.01,
}

# 数值一致性阈值
TOLERANCES = {
    # 两种求积路径允许的相对偏差（相对于最大系数）
    "oracle": 1e-5,
    # 自检中正交归一矩阵的允许偏差
    "orthonormality": 1e-6,
}
