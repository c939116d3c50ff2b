"""
服务层测试模块
"""
