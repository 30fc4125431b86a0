import logging

from fastapi import APIRouter, HTTPException, status

from constructor.schemas import ConstructIn, ConstructOut
from constructor.utils import construct, corollary_bound, feasibility
from dependencies import get_spectrum_or_422
from utils.matrix_io import to_payload

router = APIRouter()
logger = logging.getLogger(__name__)


@router.post("/construct", response_model=ConstructOut)
async def construct_matrix(data: ConstructIn):
    """
    Построение P(Λ) = QΛQ^T. Матрица возвращается и для недопустимого
    спектра (с сертификатом); при strict=true такой запрос отклоняется.
    """
    spectrum = get_spectrum_or_422(data.values)
    certificate = feasibility(spectrum)

    if not certificate.feasible:
        logger.warning(
            f"Infeasible spectrum | n={spectrum.n} "
            f"witness=({certificate.witness_k},{certificate.witness_l}) "
            f"value={certificate.witness_value:.3e}"
        )
        if data.strict:
            raise HTTPException(
                status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
                detail="Constructed matrix has a negative entry at "
                       f"({certificate.witness_k}, {certificate.witness_l})",
            )

    return ConstructOut(
        matrix=to_payload(construct(spectrum)),
        feasibility=certificate,
        corollary=corollary_bound(spectrum),
    )
