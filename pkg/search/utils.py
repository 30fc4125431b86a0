import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from conditions.utils import evaluate_conditions
from config import ENTRY_TOLERANCE, SEARCH_WORKERS
from constructor.utils import feasibility
from errors import DimensionError
from randomgen.utils import make_rng
from rw_basis.utils import sine_table
from search.schemas import STRUCTURAL_UPPER, DeltaBracket
from spectrum.schemas import Spectrum
from spectrum.utils import classify, make_spectrum

logger = logging.getLogger(__name__)

CONCENTRATED_SHARE = 0.5
CONCENTRATION_RANGE = (0.8, 1.0)
REFINE_STEP = 1e-3
REFINE_ROUNDS = 20

# (delta, номер испытания, хвост λ_1..λ_{n-1})
Candidate = Tuple[float, int, np.ndarray]


def s_value(n: int, j: int, k: int) -> float:
    """
    S_j(k) = sin(2πkj/n + π/4).
    """
    if n < 1:
        raise DimensionError(f"n must be positive, got {n}")
    if not (0 <= j <= n - 1 and 0 <= k <= n - 1):
        raise DimensionError(
            f"Indices j={j}, k={k} must lie in [0, {n - 1}]"
        )
    return float(sine_table(n)[j, k])


def max_s_product(n: int) -> float:
    """
    max S_j(k)·S_j(l) по j из [1, n-1] и k, l из [0, n-1].
    Для фиксированного j максимум произведения равен
    max(max_k S_j(k)², min_k S_j(k)²).
    """
    if n < 3:
        raise DimensionError(f"n must be at least 3, got {n}")
    rows = sine_table(n)[1:]
    per_row = np.maximum(rows.max(axis=1) ** 2, rows.min(axis=1) ** 2)
    return float(per_row.max())


def _min_entry(table: np.ndarray, tail: np.ndarray, n: int) -> float:
    entries = (1.0 + 2.0 * (table.T @ (table * tail[:, np.newaxis]))) / n
    return float(entries.min())


def _infeasible(table: np.ndarray, tail: np.ndarray, n: int) -> bool:
    return _min_entry(table, tail, n) < -ENTRY_TOLERANCE


def sample_tail(rng: np.random.Generator, n: int,
                magnitude: float) -> np.ndarray:
    """
    Неположительный хвост с суммой -magnitude. Смесь: равномерная точка
    симплекса или концентрированная выборка, где одна координата
    получает долю f из CONCENTRATION_RANGE всей массы.
    """
    m = n - 1
    weights = rng.dirichlet(np.ones(m))
    if rng.random() < CONCENTRATED_SHARE:
        index = int(rng.integers(m))
        share = rng.uniform(*CONCENTRATION_RANGE)
        weights = weights * (1.0 - share)
        weights[index] += share
    return -magnitude * weights


def _run_trials(n: int, seed: int, start: int,
                stop: int) -> Optional[Candidate]:
    table = sine_table(n)[1:]
    best: Optional[Candidate] = None
    for trial in range(start, stop):
        rng = make_rng(seed, trial)
        delta = rng.uniform(0.0, STRUCTURAL_UPPER)
        tail = sample_tail(rng, n, 1.0 - delta)
        if not _infeasible(table, tail, n):
            continue
        candidate = (1.0 + math.fsum(tail), trial, tail)
        if candidate[0] < 0:
            continue
        if best is None or _better(candidate, best):
            best = candidate
    return best


def _better(a: Candidate, b: Candidate) -> bool:
    """
    Больший delta, при равенстве -- меньший номер испытания.
    """
    return (a[0], -a[1]) > (b[0], -b[1])


def _pick(candidates: Iterable[Optional[Candidate]]) -> Optional[Candidate]:
    best = None
    for candidate in candidates:
        if candidate is None:
            continue
        if best is None or _better(candidate, best):
            best = candidate
    return best


def _chunks(trials: int, workers: int) -> List[Tuple[int, int]]:
    size = max(1, math.ceil(trials / workers))
    return [(start, min(start + size, trials))
            for start in range(0, trials, size)]


def refine(n: int, tail: np.ndarray,
           step: float = REFINE_STEP,
           rounds: int = REFINE_ROUNDS) -> Tuple[np.ndarray, Optional[float]]:
    """
    Покоординатное уменьшение |λ_i| с сохранением недопустимости.
    Шаг делится пополам после раунда без улучшений. Возвращает
    улучшенный хвост и наименьший delta среди отвергнутых (допустимых)
    соседей.
    """
    table = sine_table(n)[1:]
    tail = tail.copy()
    feasible_neighbours = []
    for _ in range(rounds):
        improved = False
        for i in range(tail.size):
            if tail[i] == 0.0:
                continue
            candidate = tail.copy()
            candidate[i] = min(0.0, tail[i] + step)
            if _infeasible(table, candidate, n):
                tail = candidate
                improved = True
            else:
                feasible_neighbours.append(1.0 + math.fsum(candidate))
        if not improved:
            step *= 0.5

    lower = 1.0 + math.fsum(tail)
    above = [d for d in feasible_neighbours if lower < d < STRUCTURAL_UPPER]
    return tail, (min(above) if above else None)


def bracket_delta_min(n: int, trials: int, seed: int,
                      probes: Sequence[Spectrum] = (),
                      workers: int = SEARCH_WORKERS) -> DeltaBracket:
    """
    Случайный поиск недопустимых для конструкции спектров Сулеймановой
    с наибольшей суммой. Испытание t использует поток
    SeedSequence(seed, spawn_key=(t,)); пробы получают номера -len(probes)..-1.
    Результат не зависит от числа потоков.
    """
    if n < 3:
        raise DimensionError(f"n must be at least 3, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")

    started = time.perf_counter()
    table = sine_table(n)[1:]

    probe_candidates = []
    for offset, probe in enumerate(probes):
        flags = classify(probe)
        if probe.n != n or not flags.is_suleimanova or flags.delta < 0:
            logger.warning(
                f"Probe skipped (n={probe.n}, delta={flags.delta:.6f}; "
                f"expected Suleimanova of n={n} with delta >= 0)"
            )
            continue
        tail = np.asarray(probe.tail, dtype=np.float64)
        if _infeasible(table, tail, n):
            probe_candidates.append(
                (1.0 + math.fsum(tail), offset - len(probes), tail)
            )

    workers = max(1, workers)
    if workers == 1:
        chunk_results = [_run_trials(n, seed, 0, trials)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunk_results = list(pool.map(
                lambda bounds: _run_trials(n, seed, *bounds),
                _chunks(trials, workers),
            ))

    best = _pick(probe_candidates + chunk_results)

    if best is None:
        logger.info(
            f"No infeasible spectrum found | n={n} trials={trials} "
            f"seed={seed} elapsed={time.perf_counter() - started:.2f}s"
        )
        return DeltaBracket(n=n, lower=0.0, trials=trials, seed=seed)

    _, trial, tail = best
    tail, heuristic_upper = refine(n, tail)
    witness = make_spectrum([1.0, *tail.tolist()])
    certificate = feasibility(witness)
    if certificate.feasible:
        # уточнение не должно выводить из недопустимой области
        witness = make_spectrum([1.0, *best[2].tolist()])
        certificate = feasibility(witness)
        heuristic_upper = None

    lower = classify(witness).delta
    logger.info(
        f"δ_min bracket | n={n} trials={trials} seed={seed} "
        f"lower={lower:.6f} witness_trial={trial} "
        f"elapsed={time.perf_counter() - started:.2f}s"
    )
    return DeltaBracket(
        n=n,
        lower=lower,
        witness_spectrum=witness,
        witness_certificate=certificate,
        witness_trial=trial,
        heuristic_upper=heuristic_upper,
        trials=trials,
        seed=seed,
    )


def separating_examples(n: int, trials: int, seed: int,
                        limit: Optional[int] = None) -> List[Spectrum]:
    """
    Спектры Сулейманова с суммой 1/2, для которых конструкция дает
    двояко стохастическую матрицу, но все применимые классические
    условия нарушены. Пустой список, если за trials ничего не найдено.
    """
    if n < 5:
        raise DimensionError(f"n must be at least 5, got {n}")

    found = []
    for trial in range(trials):
        rng = make_rng(seed, trial)
        spectrum = make_spectrum([1.0, *sample_tail(rng, n, 0.5).tolist()])
        if not feasibility(spectrum).feasible:
            continue
        applicable = [v for v in evaluate_conditions(spectrum)
                      if v.applicable]
        if applicable and not any(v.satisfied for v in applicable):
            found.append(spectrum)
            if limit is not None and len(found) >= limit:
                break

    logger.info(
        f"Separating examples | n={n} trials={trials} seed={seed} "
        f"found={len(found)}"
    )
    return found
