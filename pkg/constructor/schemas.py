from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import ENTRY_TOLERANCE


@dataclass(frozen=True)
class DenseSymMatrix:
    """
    Симметричная n×n матрица P(Λ); entries хранятся только для чтения.
    """
    n: int
    entries: np.ndarray
    symmetry_tol: float = 1e-12

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.float64)
        if entries.shape != (self.n, self.n):
            raise ValueError(
                f"Expected a {self.n}x{self.n} matrix, got {entries.shape}"
            )
        asymmetry = float(np.max(np.abs(entries - entries.T))) \
            if self.n else 0.0
        if asymmetry > self.symmetry_tol:
            raise ValueError(
                f"Matrix is not symmetric (max deviation {asymmetry:.3e})"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def exported(self, tol: float = ENTRY_TOLERANCE) -> np.ndarray:
        """
        Копия для записи в файл: значения в [-tol, 0) заменены нулем.
        """
        out = self.entries.copy()
        out[(out < 0) & (out >= -tol)] = 0.0
        return out

    def row_major(self, tol: float = ENTRY_TOLERANCE) -> List[float]:
        return self.exported(tol).ravel().tolist()


class CorollaryVerdict(str, Enum):
    SULEIMANOVA_PASS = "SuleimanovaPass"
    NONNEGATIVE_PASS = "NonnegativePass"
    NOT_COVERED = "NotCovered"

    def __str__(self):
        return self.value


class FeasibilityCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    feasible: bool
    min_entry: float
    witness_k: Optional[int] = None
    witness_l: Optional[int] = None
    witness_value: Optional[float] = None
    entry_tolerance: float = ENTRY_TOLERANCE

    @model_validator(mode="after")
    def check_witness(self):
        has_witness = self.witness_k is not None
        if self.feasible == has_witness:
            raise ValueError(
                "Witness must be present exactly when infeasible"
            )
        return self


class MatrixPayload(BaseModel):
    n: int = Field(..., ge=1)
    entries: List[float]

    @model_validator(mode="after")
    def check_size(self):
        if len(self.entries) != self.n * self.n:
            raise ValueError(
                f"Expected {self.n * self.n} entries, got {len(self.entries)}"
            )
        return self


class ConstructIn(BaseModel):
    values: List[float] = Field(..., min_length=1)
    strict: bool = False


class ConstructOut(BaseModel):
    matrix: MatrixPayload
    feasibility: FeasibilityCertificate
    corollary: CorollaryVerdict
