"""
GF(2) 线性代数

矩阵行以 Python 整数按位打包（第 k 位为第 k 列）。
"""

from collections.abc import Sequence


def pack_bits(bits: Sequence[int]) -> int:
    """奇偶向量 → 打包整数（第 k 个元素对应第 k 位）"""
    value = 0
    for k, b in enumerate(bits):
        if b % 2:
            value |= 1 << k
    return value


def gf2_left_nullspace(rows: Sequence[int], width: int | None = None) -> list[int]:
    """
    左零空间基：满足 Σ_{i∈S} rows[i] = 0 (mod 2) 的行子集 S

    逐行消元并记录每行由哪些原始行组合而来，消为零的行即给出一个依赖关系。

    Args:
        rows: 打包的行
        width: 列数（仅用于检查，None 时不检查）

    Returns:
        list[int]: 依赖关系，按位打包（第 i 位表示原始第 i 行）
    """
    if width is not None and any(row >> width for row in rows):
        raise ValueError(f"行向量超出 {width} 列")

    pivots: dict[int, tuple[int, int]] = {}
    dependencies: list[int] = []
    for i, row in enumerate(rows):
        vec, history = row, 1 << i
        while vec:
            lead = vec.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (vec, history)
                break
            pivot_vec, pivot_history = pivots[lead]
            vec ^= pivot_vec
            history ^= pivot_history
        if vec == 0:
            dependencies.append(history)
    return dependencies


def selected_indices(mask: int) -> list[int]:
    """依赖关系中被选中的行号"""
    return [i for i in range(mask.bit_length()) if mask >> i & 1]
