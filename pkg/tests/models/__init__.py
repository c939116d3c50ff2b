"""
模型层测试模块
"""
