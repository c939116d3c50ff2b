"""
命令行测试模块
"""
