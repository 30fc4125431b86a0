import math
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from errors import SpectrumError
from spectrum.schemas import Spectrum, SpectrumClass, TraceMomentResult

TRACE_MOMENT_DEPTH = 50


def make_spectrum(values) -> Spectrum:
    """
    Создает Spectrum из последовательности чисел. Ошибки валидации
    превращаются в SpectrumError.
    """
    try:
        return Spectrum(values=tuple(float(v) for v in values))
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        raise SpectrumError(messages) from exc


def parse_spectrum(text: str) -> Spectrum:
    """
    Разбирает спектр из строки вида "1, -0.02, -0.4".
    """
    if text is None or not text.strip():
        raise SpectrumError("Spectrum text is empty")

    values = []
    for position, token in enumerate(text.split(",")):
        token = token.strip()
        try:
            value = float(token)
        except ValueError:
            raise SpectrumError(
                f"Cannot parse token {token!r} at position {position}"
            ) from None
        if not math.isfinite(value):
            raise SpectrumError(
                f"Token {token!r} at position {position} is not finite"
            )
        values.append(value)

    return make_spectrum(values)


def format_spectrum(s: Spectrum) -> str:
    return ",".join(repr(v) for v in s.values)


def read_spectra(path: Union[str, Path]) -> List[Spectrum]:
    """
    Читает файл со спектрами: по одному спектру в строке,
    пустые строки и строки с '#' пропускаются.
    """
    spectra = []
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                spectra.append(parse_spectrum(line))
            except SpectrumError as exc:
                raise SpectrumError(f"{path}:{line_no}: {exc}") from exc
    if not spectra:
        raise SpectrumError(f"{path}: no spectra found")
    return spectra


def classify(s: Spectrum) -> SpectrumClass:
    """
    Флаги спектра за один проход по хвосту λ_1..λ_{n-1}.
    """
    total = 1.0
    all_nonpositive = True
    all_nonnegative = True
    non_increasing = True
    previous = None

    for value in s.tail:
        total += value
        if value > 0:
            all_nonpositive = False
        if value < 0:
            all_nonnegative = False
        if previous is not None and value > previous:
            non_increasing = False
        previous = value

    return SpectrumClass(
        is_suleimanova=all_nonpositive,
        delta=total,
        is_normalized=non_increasing,
        is_nonnegative_case=all_nonnegative,
    )


def trace_moment_check(s: Spectrum, max_k: int) -> TraceMomentResult:
    """
    Необходимое условие: 1 + Σ λ_i^k >= 0 для всех k <= max_k.
    Возвращает наименьшее нарушающее k.
    """
    if max_k < 1:
        raise SpectrumError(f"max_k must be positive, got {max_k}")

    tail = s.tail
    powers = list(tail)
    for k in range(1, max_k + 1):
        if k > 1:
            powers = [p * v for p, v in zip(powers, tail)]
        if 1.0 + math.fsum(powers) < 0:
            return TraceMomentResult(passed=False, max_k=max_k, failing_k=k)

    return TraceMomentResult(passed=True, max_k=max_k)
