from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field

from constructor.schemas import MatrixPayload


class Distribution(str, Enum):
    UNIFORM = "uniform"
    POWER = "power"

    def __str__(self):
        return self.value


class GenConfig(BaseModel):
    """
    Параметры генерации: λ_i = alpha·X_i/S_n, X_i с носителем в [0, 1].
    Для distribution=power X_i = U_i**exponent.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2)
    alpha: float = Field(..., ge=-0.5, le=0.5)
    seed: int = Field(0, ge=0)
    stream: int = Field(0, ge=0)
    distribution: Distribution = Distribution.UNIFORM
    exponent: float = Field(3.0, gt=0)


class RandomOut(BaseModel):
    values: List[float]
    matrix: MatrixPayload
