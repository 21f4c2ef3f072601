"""
异常定义

分解流水线各模块共用的异常层次。
"""


class FactoringError(Exception):
    """所有流水线异常的基类"""


class InvalidInputError(FactoringError, ValueError):
    """输入违反前置条件"""


class DegenerateQuboError(FactoringError):
    """QUBO 系数矩阵全为零，当前置换应跳过"""


class ResourceLimitError(FactoringError):
    """超出资源限制（例如态矢量比特数过大）"""


class CandidateInconsistencyError(FactoringError):
    """候选向量坐标无法被对角权重整除，说明内部状态不一致"""


class LineNumberedInputError(InvalidInputError):
    """带行号的文本输入错误"""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"第 {line_number} 行: {message}"
        super().__init__(message)


class MalformedTraceError(LineNumberedInputError):
    """回放轨迹格式错误"""


class MalformedCircuitError(LineNumberedInputError):
    """线路交换文本格式错误"""
