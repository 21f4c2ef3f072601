"""
Services 模块
"""

from schnorr_qaoa.services.run_storage import RunRecordStorage

__all__ = ["RunRecordStorage"]
