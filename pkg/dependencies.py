from typing import Sequence

from fastapi import HTTPException, status

from errors import RealizerError
from spectrum.schemas import Spectrum
from spectrum.utils import make_spectrum


def get_spectrum_or_422(values: Sequence[float]) -> Spectrum:
    """
    Создает спектр из тела запроса или вызывает ошибку 422,
    если список не является допустимым спектром.
    """
    try:
        return make_spectrum(values)
    except RealizerError as exc:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=str(exc),
        )


def domain_error_422(exc: RealizerError) -> HTTPException:
    return HTTPException(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        detail=str(exc),
    )
