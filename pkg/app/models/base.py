# 领域模型基类说明文档字符串

"""
领域模型基类
提供所有不可变数据模型的通用方法
"""

from dataclasses import fields, is_dataclass

import numpy as np


# 定义所有的模型的基类
class BaseModel:
    # 子类可以通过 __repr_fields__ 指定 repr 中展示的字段

    # 把模型对象转成python字典的方法
    def to_dict(self, exclude=(), **kwargs):
        # 要排除的字段列表，如 ["samples"]
        result = {}
        # 遍历数据类的所有字段
        for field in fields(self):
            name = field.name
            if name in exclude:
                continue
            value = getattr(self, name, None)
            # 嵌套模型递归转换
            if is_dataclass(value) and isinstance(value, BaseModel):
                result[name] = value.to_dict()
            # 数组转成列表，复数拆成 [re, im]
            elif isinstance(value, np.ndarray):
                result[name] = value.tolist()
            elif isinstance(value, complex):
                result[name] = [value.real, value.imag]
            else:
                result[name] = value
        return result

    def __repr__(self):
        # 如果子类指定义__repr_fields__值，优先显示这些字段
        if hasattr(self, "__repr_fields__"):
            names = getattr(self, "__repr_fields__")
        else:
            names = [f.name for f in fields(self)]
        attrs = ", ".join(f"{name}={getattr(self, name, None)!r}" for name in names)
        return f"<{self.__class__.__name__}({attrs})>"
