"""
Run Record Storage

运行记录的本地持久化：
- <record>.jsonl: 每步一行，字段与步骤表列一致
- <record>.meta.json: 运行配置与分解结果
"""

import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any

from schnorr_qaoa.pipeline.records import RunRecord, StepRecord

if TYPE_CHECKING:
    from schnorr_qaoa.pipeline.run_config import RunConfig

logger = logging.getLogger(__name__)


class RunRecordStorage:
    """运行记录存储"""

    def __init__(self, record_path: str | Path):
        """
        Args:
            record_path: JSONL 文件路径，元信息写在同目录的 <stem>.meta.json
        """
        self.record_file = Path(record_path)
        self.metadata_file = self.record_file.with_name(self.record_file.stem + ".meta.json")

    def save(self, record: RunRecord, config: "RunConfig | None" = None) -> None:
        """
        写出逐步记录与元信息

        Args:
            record: 运行记录
            config: 运行配置（写入元信息）
        """
        try:
            self.record_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.record_file, "w", encoding="utf-8") as f:
                for step in record.steps:
                    f.write(json.dumps(step.model_dump(mode="json"), ensure_ascii=False) + "\n")

            metadata: dict[str, Any] = {
                "config": config.model_dump(mode="json") if config else None,
                "result": [record.result.p, record.result.q] if record.result else None,
                "n_steps": len(record.steps),
                "n_pairs": record.n_pairs,
                "first_factored_step": record.first_factored_step,
            }
            with open(self.metadata_file, "w", encoding="utf-8") as f:
                json.dump(metadata, f, ensure_ascii=False, indent=2)

            logger.info(f"✅ 保存运行记录: {self.record_file}（{len(record.steps)} 步）")
        except Exception as e:
            logger.error(f"❌ 保存运行记录失败: {e}", exc_info=True)
            raise

    def load_metadata(self) -> dict[str, Any] | None:
        """
        加载元信息

        Returns:
            元信息字典，文件不存在时返回 None
        """
        if not self.metadata_file.exists():
            return None
        try:
            with open(self.metadata_file, encoding="utf-8") as f:
                metadata: dict[str, Any] = json.load(f)
            logger.debug(f"✅ 加载元信息: {self.metadata_file}")
            return metadata
        except Exception as e:
            logger.error(f"❌ 加载元信息失败: {e}", exc_info=True)
            raise

    def load_steps(self) -> list[StepRecord]:
        """加载逐步记录"""
        if not self.record_file.exists():
            raise FileNotFoundError(f"运行记录不存在: {self.record_file}")
        try:
            steps = []
            with open(self.record_file, encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if line:
                        steps.append(StepRecord.model_validate_json(line))
            logger.debug(f"✅ 加载运行记录: {len(steps)} 步")
            return steps
        except Exception as e:
            logger.error(f"❌ 加载运行记录失败: {e}", exc_info=True)
            raise
