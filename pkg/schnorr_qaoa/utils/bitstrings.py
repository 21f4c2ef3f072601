"""
比特串工具模块

约定：第 1 个量子比特对应比特串的最高位（最左侧字符）。
"""

from schnorr_qaoa.errors import InvalidInputError


def index_to_bitstring(index: int, n: int) -> str:
    """将基矢编号转换为长度为 n 的比特串"""
    return format(index, f"0{n}b")


def validate_bitstring(bitstring: str, n: int) -> str:
    """
    检查比特串长度与字符集

    Args:
        bitstring: 比特串
        n: 期望长度

    Returns:
        str: 原比特串

    Raises:
        InvalidInputError: 长度不符或包含 0/1 以外的字符
    """
    if len(bitstring) != n or any(ch not in "01" for ch in bitstring):
        raise InvalidInputError(f"比特串 {bitstring!r} 不是长度为 {n} 的 0/1 串")
    return bitstring


def bits_of(bitstring: str) -> list[int]:
    """比特串 → 整数列表（第 1 个元素对应第 1 个量子比特）"""
    return [int(ch) for ch in bitstring]


def complement_bitstring(bitstring: str) -> str:
    """按位取反"""
    return bitstring.translate(str.maketrans("01", "10"))
