from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Spectrum(BaseModel):
    """
    Список (λ_0 = 1, λ_1, ..., λ_{n-1}), индексация с нуля.
    """
    model_config = ConfigDict(frozen=True)

    values: Tuple[float, ...] = Field(..., min_length=1)

    @field_validator("values")
    @classmethod
    def check_values(cls, values):
        if values[0] != 1.0:
            raise ValueError(
                f"Leading (Perron) value must be exactly 1, got {values[0]!r}"
            )
        for i, value in enumerate(values):
            if not -1.0 <= value <= 1.0:
                raise ValueError(
                    f"Value {value!r} at position {i} lies outside [-1, 1]"
                )
        return values

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def tail(self) -> Tuple[float, ...]:
        return self.values[1:]


class SpectrumClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_suleimanova: bool
    delta: float
    is_normalized: bool
    is_nonnegative_case: bool


class TraceMomentResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    max_k: int
    failing_k: Optional[int] = None


class SpectrumIn(BaseModel):
    values: List[float] = Field(..., min_length=1)


class SpectrumClassOut(BaseModel):
    n: int
    classification: SpectrumClass
    trace_moments: TraceMomentResult
