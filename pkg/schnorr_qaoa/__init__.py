"""
Schnorr-QAOA Factoring

Schnorr 格 + 固定角度 QAOA 整数分解流水线，以无噪声态矢量模拟器代替量子处理器。
"""

__version__ = "1.0.0"
