from fastapi import APIRouter

from dependencies import get_spectrum_or_422
from spectrum.schemas import SpectrumClassOut, SpectrumIn
from spectrum.utils import (
    TRACE_MOMENT_DEPTH,
    classify,
    trace_moment_check,
)

router = APIRouter()


@router.post("/spectra/classify", response_model=SpectrumClassOut)
async def classify_spectrum(data: SpectrumIn):
    """
    Классификация спектра: флаги Сулеймановой, δ, нормализованность
    и необходимое условие на следы степеней.
    """
    spectrum = get_spectrum_or_422(data.values)
    return SpectrumClassOut(
        n=spectrum.n,
        classification=classify(spectrum),
        trace_moments=trace_moment_check(spectrum, TRACE_MOMENT_DEPTH),
    )
