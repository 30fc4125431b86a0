from typing import List, Optional

from pydantic import BaseModel, ConfigDict, computed_field

from constructor.schemas import MatrixPayload


class StochasticityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    symmetric_ok: bool
    nonneg_ok: bool
    rowsum_ok: bool
    colsum_ok: bool
    max_rowsum_dev: float
    max_colsum_dev: float
    max_asymmetry: float
    min_entry: float

    @computed_field
    @property
    def passed(self) -> bool:
        return (self.symmetric_ok and self.nonneg_ok
                and self.rowsum_ok and self.colsum_ok)


class RoundTripResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    max_error: float
    eigenvalues: List[float]


class VerifyIn(MatrixPayload):
    pass


class VerifyOut(BaseModel):
    report: StochasticityReport
    eigenvalues: Optional[List[float]] = None
