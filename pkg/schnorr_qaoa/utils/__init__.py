"""
工具模块
"""

from schnorr_qaoa.utils.bitstrings import (
    bits_of,
    complement_bitstring,
    index_to_bitstring,
    validate_bitstring,
)
from schnorr_qaoa.utils.rational import ceil_fraction, dot, to_fraction

__all__ = [
    "bits_of",
    "ceil_fraction",
    "complement_bitstring",
    "dot",
    "index_to_bitstring",
    "to_fraction",
    "validate_bitstring",
]
