from fastapi import APIRouter

from dependencies import domain_error_422
from eigen.schemas import VerifyIn, VerifyOut
from eigen.utils import is_doubly_stochastic, sym_eigenvalues
from errors import RealizerError
from utils.matrix_io import from_payload

router = APIRouter()


@router.post("/verify", response_model=VerifyOut)
async def verify_matrix(data: VerifyIn):
    """
    Проверка двойной стохастичности. Собственные значения считаются
    только для симметричной матрицы.
    """
    entries = from_payload(data)
    report = is_doubly_stochastic(entries)
    eigenvalues = None
    if report.symmetric_ok:
        try:
            eigenvalues = sym_eigenvalues(entries)
        except RealizerError as exc:
            raise domain_error_422(exc)
    return VerifyOut(report=report, eigenvalues=eigenvalues)
