import math
from typing import Callable, Dict, List, Optional, Sequence

from conditions.schemas import ConditionReport, ConditionVerdict
from constructor.utils import corollary_bound, feasibility
from spectrum.schemas import Spectrum
from spectrum.utils import (
    TRACE_MOMENT_DEPTH,
    classify,
    trace_moment_check,
)


class _OneBased:
    """
    Нормализованная копия спектра в нумерации с единицы:
    lam[1] = 1, lam[2] >= ... >= lam[n]. Исходный спектр не меняется.
    """

    def __init__(self, s: Spectrum):
        self.n = s.n
        self._values = [1.0] + sorted(s.tail, reverse=True)

    def __getitem__(self, index: int) -> float:
        if not 1 <= index <= self.n:
            raise IndexError(f"λ_{index} is outside 1..{self.n}")
        return self._values[index - 1]


def _verdict(name: str, lhs: Optional[float]) -> ConditionVerdict:
    if lhs is None:
        return ConditionVerdict(name=name, applicable=False)
    return ConditionVerdict(
        name=name, applicable=True, lhs_value=lhs, satisfied=lhs >= 0
    )


def _tail_sum(lam: _OneBased, limit: int, step: int) -> List[float]:
    """
    Слагаемые Σ_{k=1}^{limit} λ_{n-step·k+step} / (k(k+1)).
    """
    n = lam.n
    return [lam[n - step * k + step] / (k * (k + 1))
            for k in range(1, limit + 1)]


def _refined(lam: _OneBased, half: float, r: int,
             index: int) -> float:
    """
    Коэффициент (half - r)/(half·r) при λ_index.
    """
    return (half - r) / (half * r) * lam[index]


def perfect_mirsky(s: Spectrum) -> ConditionVerdict:
    """
    1/n + Σ_{j=2}^{n} λ_j / ((n-j+2)(n-j+1)) >= 0.
    """
    name = "perfect_mirsky"
    n = s.n
    if n < 2:
        return _verdict(name, None)
    lam = _OneBased(s)
    terms = [1.0 / n]
    terms += [lam[j] / ((n - j + 2) * (n - j + 1)) for j in range(2, n + 1)]
    return _verdict(name, math.fsum(terms))


def soules(s: Spectrum) -> ConditionVerdict:
    """
    1/n + (n-m-1)/(n(m+1)) λ_2 + Σ_k λ_{n-2k+2}/((k+1)k) >= 0,
    n = 2m+1 или n = 2m+2. Индекс k пробегает только те значения,
    при которых n-2k+2 лежит в [3, n].
    """
    name = "soules"
    n = s.n
    if n < 3:
        return _verdict(name, None)
    lam = _OneBased(s)
    m = (n - 1) // 2 if n % 2 else (n - 2) // 2
    terms = [1.0 / n, (n - m - 1) / (n * (m + 1)) * lam[2]]
    k = 1
    while n - 2 * k + 2 >= 3:
        terms.append(lam[n - 2 * k + 2] / ((k + 1) * k))
        k += 1
    return _verdict(name, math.fsum(terms))


def nader_improved_soules_even(s: Spectrum) -> ConditionVerdict:
    name = "nader_improved_soules_even"
    n = s.n
    if n % 2 or n < 4:
        return _verdict(name, None)
    lam = _OneBased(s)
    r = (n + 2) // 4
    terms = [
        1.0 / n,
        lam[2] / n,
        _refined(lam, n / 2, r, 4),
    ]
    terms += _tail_sum(lam, r - 1, 4)
    return _verdict(name, math.fsum(terms))


def nader_new1_odd(s: Spectrum) -> ConditionVerdict:
    name = "nader_new1_odd"
    n = s.n
    if n % 2 == 0 or n < 5:
        return _verdict(name, None)
    lam = _OneBased(s)
    r = (n + 3) // 4
    terms = [
        1.0 / n,
        (n - 1) / (n * (n + 1)) * lam[2],
        _refined(lam, (n + 1) / 2, r, 4),
    ]
    terms += _tail_sum(lam, r - 1, 4)
    return _verdict(name, math.fsum(terms))


def nader_new2(s: Spectrum) -> ConditionVerdict:
    """
    Условие с выбором формулы по остатку n mod 4; применимо при
    n = 4m + ρ с целым m > 1.
    """
    name = "nader_new2"
    n = s.n
    residue = n % 4
    if (n - residue) // 4 <= 1:
        return _verdict(name, None)
    lam = _OneBased(s)

    if residue == 0:
        r = (n + 4) // 8
        head = [1.0 / n, lam[2] / n, 2.0 / n * lam[4],
                _refined(lam, n / 4, r, 8)]
    elif residue == 2:
        r = (n + 6) // 8
        head = [1.0 / n, lam[2] / n,
                2.0 * (n - 2) / (n * (n + 2)) * lam[4],
                _refined(lam, (n + 2) / 4, r, 8)]
    elif residue == 3:
        r = (n + 5) // 8
        head = [1.0 / n, (n - 1) / (n * (n + 1)) * lam[2],
                2.0 / (n + 1) * lam[4],
                _refined(lam, (n + 1) / 4, r, 8)]
    else:
        r = (n + 7) // 8
        head = [1.0 / n, (n - 1) / (n * (n + 1)) * lam[2],
                2.0 * (n - 1) / ((n + 1) * (n + 3)) * lam[4],
                _refined(lam, (n + 3) / 4, r, 8)]

    return _verdict(name, math.fsum(head + _tail_sum(lam, r - 1, 8)))


def nader_new3_n26(s: Spectrum) -> ConditionVerdict:
    name = "nader_new3_n26"
    if s.n != 26:
        return _verdict(name, None)
    lam = _OneBased(s)
    terms = [
        1.0 / 26,
        lam[2] / 26,
        6.0 / (13 * 7) * lam[4],
        3.0 / 28 * lam[8],
        lam[16] / 4,
        lam[26] / 2,
    ]
    return _verdict(name, math.fsum(terms))


CLASSICAL_CONDITIONS: Dict[str, Callable[[Spectrum], ConditionVerdict]] = {
    "perfect_mirsky": perfect_mirsky,
    "soules": soules,
    "nader_improved_soules_even": nader_improved_soules_even,
    "nader_new1_odd": nader_new1_odd,
    "nader_new2": nader_new2,
    "nader_new3_n26": nader_new3_n26,
}


def evaluate_conditions(s: Spectrum,
                        names: Optional[Sequence[str]] = None
                        ) -> List[ConditionVerdict]:
    names = names or list(CLASSICAL_CONDITIONS)
    return [CLASSICAL_CONDITIONS[name](s) for name in names]


def full_report(s: Spectrum) -> ConditionReport:
    """
    Все классические условия, следствие (оценки по сумме),
    сертификат допустимости конструкции, флаги спектра и проверка
    следов степеней.
    """
    return ConditionReport(
        n=s.n,
        conditions=evaluate_conditions(s),
        corollary=corollary_bound(s),
        feasibility=feasibility(s),
        classification=classify(s),
        trace_moments=trace_moment_check(s, TRACE_MOMENT_DEPTH),
    )
