from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from constructor.schemas import CorollaryVerdict, FeasibilityCertificate
from spectrum.schemas import SpectrumClass, TraceMomentResult


class ConditionVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    applicable: bool
    lhs_value: Optional[float] = None
    satisfied: Optional[bool] = None

    @model_validator(mode="after")
    def check_consistency(self):
        if self.applicable != (self.satisfied is not None):
            raise ValueError("satisfied must be set exactly when applicable")
        if self.applicable and self.satisfied != (self.lhs_value >= 0):
            raise ValueError("satisfied must equal lhs_value >= 0")
        return self


class ConditionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    conditions: List[ConditionVerdict]
    corollary: CorollaryVerdict
    feasibility: FeasibilityCertificate
    classification: SpectrumClass
    trace_moments: TraceMomentResult

    def verdict(self, name: str) -> ConditionVerdict:
        for condition in self.conditions:
            if condition.name == name:
                return condition
        raise KeyError(name)

    @property
    def applicable(self) -> List[ConditionVerdict]:
        return [c for c in self.conditions if c.applicable]
