"""
格模块

素数格构造、LLL 约化、Babai 取整与 QUBO 生成。
"""

from schnorr_qaoa.lattice.babai import BabaiResult, babai_nearest_plane_ceil, babai_round_ceil
from schnorr_qaoa.lattice.lll import ReducedBasis, gram_schmidt, lll_reduce
from schnorr_qaoa.lattice.prime_lattice import (
    Permutation,
    PrimeLattice,
    build_prime_lattice,
    scaled_log,
)
from schnorr_qaoa.lattice.qubo import QuboProblem, build_qubo, normalization_factor

__all__ = [
    "BabaiResult",
    "Permutation",
    "PrimeLattice",
    "QuboProblem",
    "ReducedBasis",
    "babai_nearest_plane_ceil",
    "babai_round_ceil",
    "build_prime_lattice",
    "build_qubo",
    "gram_schmidt",
    "lll_reduce",
    "normalization_factor",
    "scaled_log",
]
