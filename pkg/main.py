"""
oamtilt - 命令行入口
"""
import sys

from app.cli import main

if __name__ == '__main__':
    sys.exit(main())
