from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from constructor.schemas import FeasibilityCertificate
from spectrum.schemas import Spectrum
from spectrum.utils import classify

STRUCTURAL_UPPER = 0.5
WITNESS_DELTA_TOL = 1e-12


class DeltaBracket(BaseModel):
    """
    Вилка для δ_min при фиксированном n: lower -- наибольшая сумма
    среди найденных недопустимых спектров, upper = 1/2 из следствия.
    heuristic_upper -- только пометка поиска, не доказанная граница.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    lower: float = Field(..., ge=0)
    upper: float = STRUCTURAL_UPPER
    witness_spectrum: Optional[Spectrum] = None
    witness_certificate: Optional[FeasibilityCertificate] = None
    witness_trial: Optional[int] = None
    heuristic_upper: Optional[float] = None
    trials: int
    seed: int

    @model_validator(mode="after")
    def check_bracket(self):
        if not self.lower < self.upper:
            raise ValueError(
                f"Bracket is empty: lower={self.lower}, upper={self.upper}"
            )
        if (self.witness_spectrum is None) != (self.witness_certificate
                                               is None):
            raise ValueError("Witness spectrum and certificate go together")
        if (self.witness_certificate is not None
                and self.witness_certificate.feasible):
            raise ValueError("Witness must be infeasible")
        if self.witness_spectrum is not None:
            flags = classify(self.witness_spectrum)
            if self.witness_spectrum.n != self.n:
                raise ValueError("Witness size differs from n")
            if not flags.is_suleimanova:
                raise ValueError("Witness must be a Suleimanova spectrum")
            if abs(flags.delta - self.lower) > WITNESS_DELTA_TOL:
                raise ValueError(
                    f"Witness delta {flags.delta} differs from lower "
                    f"{self.lower}"
                )
        return self

    @property
    def found(self) -> bool:
        return self.witness_spectrum is not None
