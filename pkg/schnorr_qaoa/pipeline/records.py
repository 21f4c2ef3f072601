"""
运行记录

每一步对应步骤表中的一行：步骤号、置换、线路编号、测量结果、新 sr-pair、
累计 sr-pair 数与是否已分解。
"""

from pydantic import BaseModel, Field

from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.relations.solver import FactorResult


class TraceStep(BaseModel):
    """回放输入中的一步（仅置换、线路与测量结果必填）"""

    permutation: list[int]
    circuit: int = Field(ge=1)
    bitstring: str
    step: int | None = None
    sr_pair: tuple[int, int] | None = None


class StepRecord(BaseModel):
    """运行记录中的一步"""

    step: int = Field(ge=1)
    permutation: list[int]
    circuit: int = Field(ge=1)
    bitstring: str
    sr_pair: tuple[int, int] | None = None
    n_pairs: int = Field(ge=0)
    factored: bool = False


class RunRecord(BaseModel):
    """
    一次运行的逐步记录

    累计 sr-pair 数不减，factored 标志一旦为 True 不再变回 False。
    """

    steps: list[StepRecord] = Field(default_factory=list)
    result: FactorResult | None = None

    def append(self, step: StepRecord) -> None:
        if self.steps:
            last = self.steps[-1]
            if step.n_pairs < last.n_pairs:
                raise InvalidInputError(
                    f"累计 sr-pair 数不能减少: {last.n_pairs} → {step.n_pairs}"
                )
            if last.factored and not step.factored:
                raise InvalidInputError("factored 标志不能从 True 变回 False")
        self.steps.append(step)

    @property
    def n_pairs(self) -> int:
        return self.steps[-1].n_pairs if self.steps else 0

    @property
    def n_circuits(self) -> int:
        return len({s.circuit for s in self.steps})

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [s.sr_pair for s in self.steps if s.sr_pair is not None]

    @property
    def first_factored_step(self) -> int | None:
        for s in self.steps:
            if s.factored:
                return s.step
        return None
