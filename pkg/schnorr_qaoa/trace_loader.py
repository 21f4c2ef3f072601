"""
Trace Loader

回放轨迹加载器：解析 JSONL（每行一步），校验字段并给出带行号的错误。
"""

import json
import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from schnorr_qaoa.errors import MalformedTraceError
from schnorr_qaoa.pipeline.records import TraceStep

logger = logging.getLogger(__name__)


class TraceLoader:
    """回放轨迹加载器"""

    @staticmethod
    def load_jsonl(file_path: str | Path) -> list[tuple[int, dict[str, Any]]]:
        """
        读取 JSONL 文件，跳过空行与 # 注释行

        Args:
            file_path: 文件路径

        Returns:
            list[tuple[int, dict]]: (行号, 对象)

        Raises:
            FileNotFoundError: 文件不存在
            MalformedTraceError: 某行不是 JSON 对象
        """
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"轨迹文件不存在: {file_path}")

        entries = []
        with open(path, encoding="utf-8") as f:
            for line_number, raw in enumerate(f, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as e:
                    logger.error(f"❌ JSON 格式错误: {file_path}:{line_number}: {e}")
                    raise MalformedTraceError(f"JSON 格式错误: {e.msg}", line_number) from e
                if not isinstance(obj, dict):
                    raise MalformedTraceError("每行必须是一个 JSON 对象", line_number)
                entries.append((line_number, obj))
        return entries

    @staticmethod
    def validate_step(obj: dict[str, Any], line_number: int | None = None, n: int | None = None) -> TraceStep:
        """
        校验一步轨迹

        Args:
            obj: 原始对象
            line_number: 行号（用于错误信息）
            n: 期望比特数（None 时不检查长度一致）

        Returns:
            TraceStep: 校验后的步骤
        """
        for key in ("permutation", "circuit", "bitstring"):
            if key not in obj:
                raise MalformedTraceError(f"缺少字段 {key!r}", line_number)
        try:
            step = TraceStep.model_validate(obj)
        except ValidationError as e:
            raise MalformedTraceError(f"字段校验失败: {e.errors()[0]['msg']}", line_number) from e

        if sorted(step.permutation) != list(range(1, len(step.permutation) + 1)):
            raise MalformedTraceError(f"不是合法置换: {step.permutation}", line_number)
        if len(step.bitstring) != len(step.permutation) or set(step.bitstring) - {"0", "1"}:
            raise MalformedTraceError(
                f"比特串 {step.bitstring!r} 与置换长度 {len(step.permutation)} 不一致", line_number
            )
        if n is not None and len(step.permutation) != n:
            raise MalformedTraceError(f"置换长度 {len(step.permutation)} 与 n={n} 不一致", line_number)
        return step

    @staticmethod
    def load_trace(file_path: str | Path, n: int | None = None) -> list[TraceStep]:
        """
        加载并校验完整轨迹

        Args:
            file_path: JSONL 文件路径
            n: 期望比特数

        Returns:
            list[TraceStep]: 轨迹
        """
        try:
            steps = [
                TraceLoader.validate_step(obj, line_number, n)
                for line_number, obj in TraceLoader.load_jsonl(file_path)
            ]
            logger.info(f"✅ 加载轨迹成功: {file_path}（{len(steps)} 步）")
            return steps
        except Exception as e:
            logger.error(f"❌ 加载轨迹失败: {e}")
            raise
