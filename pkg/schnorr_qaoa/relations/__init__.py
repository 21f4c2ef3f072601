"""
关系模块

候选向量 → sr-pair，GF(2) 消元与平方同余分解。
"""

from schnorr_qaoa.relations.gf2 import gf2_left_nullspace, pack_bits, selected_indices
from schnorr_qaoa.relations.solver import FactorResult, try_factor
from schnorr_qaoa.relations.sr_pairs import (
    RelationSet,
    SrPair,
    bitstring_to_candidate,
    exponents_to_uv,
    verify_sr_pair,
)

__all__ = [
    "FactorResult",
    "RelationSet",
    "SrPair",
    "bitstring_to_candidate",
    "exponents_to_uv",
    "gf2_left_nullspace",
    "pack_bits",
    "selected_indices",
    "try_factor",
    "verify_sr_pair",
]
