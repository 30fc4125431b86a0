from fastapi import APIRouter

from conditions.schemas import ConditionReport
from conditions.utils import full_report
from dependencies import get_spectrum_or_422
from spectrum.schemas import SpectrumIn

router = APIRouter()


@router.post("/check", response_model=ConditionReport)
async def check_spectrum(data: SpectrumIn):
    """
    Отчет по всем классическим достаточным условиям и по конструкции.
    """
    return full_report(get_spectrum_or_422(data.values))
