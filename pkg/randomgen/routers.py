from fastapi import APIRouter

from constructor.utils import construct
from dependencies import domain_error_422
from errors import RealizerError
from randomgen.schemas import GenConfig, RandomOut
from randomgen.utils import random_spectrum
from utils.matrix_io import to_payload

router = APIRouter()


@router.post("/random", response_model=RandomOut)
async def random_doubly_stochastic(cfg: GenConfig):
    """
    Случайная симметричная двояко стохастическая матрица через
    случайный спектр с суммой хвоста alpha.
    """
    try:
        spectrum = random_spectrum(cfg)
    except RealizerError as exc:
        raise domain_error_422(exc)
    return RandomOut(
        values=list(spectrum.values),
        matrix=to_payload(construct(spectrum)),
    )
