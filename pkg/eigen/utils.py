import logging
from functools import lru_cache
from typing import List, Tuple, Union

import numpy as np

from config import (
    EIGEN_MAX_SWEEPS,
    EIGEN_TOLERANCE,
    ENTRY_TOLERANCE,
    ROUNDTRIP_TOLERANCE,
    ROWSUM_TOLERANCE,
)
from constructor.schemas import DenseSymMatrix
from constructor.utils import construct
from eigen.schemas import RoundTripResult, StochasticityReport
from errors import ConvergenceError, DimensionError, SymmetryError
from spectrum.schemas import Spectrum

logger = logging.getLogger(__name__)

MatrixLike = Union[DenseSymMatrix, np.ndarray]

SYMMETRY_INPUT_TOL = 1e-10


def _as_array(m: MatrixLike) -> np.ndarray:
    entries = m.entries if isinstance(m, DenseSymMatrix) else m
    a = np.array(entries, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"Expected a square matrix, got {a.shape}")
    return a


@lru_cache(maxsize=32)
def _tournament(m: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Круговой турнир на четном числе индексов m: за m-1 раундов каждая пара
    встречается ровно один раз. Индексы раскладываются так, что пары
    раунда стоят на позициях (i, m/2 + i); возвращает начальный порядок
    и перестановку позиций, переводящую раунд в следующий.
    """
    h = m // 2

    def layout(players):
        return players[:h] + players[h:][::-1]

    players = list(range(m))
    first = layout(players)
    second = layout([players[0], players[-1]] + players[1:-1])
    position = {player: k for k, player in enumerate(first)}
    step = np.array([position[player] for player in second], dtype=np.intp)
    return np.array(first, dtype=np.intp), step


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(b: np.ndarray):
    """
    Одновременно применяет вращения Якоби к парам позиций (i, h + i),
    h = m/2: B <- J^T B J, после чего b[i, h + i] = 0. Блоки обновляются
    срезами на месте.
    """
    h = b.shape[0] // 2
    apq = np.diagonal(b, offset=h).copy()
    app = np.diagonal(b)[:h].copy()
    aqq = np.diagonal(b)[h:].copy()
    nonzero = apq != 0.0
    if not nonzero.any():
        return

    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        theta = (aqq - app) / np.where(nonzero, 2.0 * apq, 1.0)
        sign = np.where(theta >= 0.0, 1.0, -1.0)
        t = sign / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
    t = np.where(nonzero & np.isfinite(t), t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    left = b[:, :h]
    right = b[:, h:]
    saved = left.copy()
    left *= c
    left -= s * right
    right *= c
    right += s * saved

    c = c[:, np.newaxis]
    s = s[:, np.newaxis]
    top = b[:h, :]
    bottom = b[h:, :]
    saved = top.copy()
    top *= c
    top -= s * bottom
    bottom *= c
    bottom += s * saved

    pairs = np.arange(h)
    b[pairs, pairs + h] = 0.0
    b[pairs + h, pairs] = 0.0


def sym_eigenvalues(m: MatrixLike,
                    tol: float = EIGEN_TOLERANCE,
                    max_sweeps: int = EIGEN_MAX_SWEEPS) -> List[float]:
    """
    Собственные значения симметричной матрицы циклическим методом Якоби,
    по невозрастанию. Останов, когда внедиагональная норма Фробениуса
    меньше tol·||m||_F; при исчерпании max_sweeps -- ConvergenceError.
    Входная матрица не изменяется.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    a = _as_array(m)
    n = a.shape[0]
    asymmetry = float(np.max(np.abs(a - a.T))) if n else 0.0
    if asymmetry > SYMMETRY_INPUT_TOL:
        raise SymmetryError(
            f"Matrix is not symmetric (max deviation {asymmetry:.3e})"
        )
    a = 0.5 * (a + a.T)
    if n < 2:
        return np.diag(a).tolist()

    target = tol * float(np.linalg.norm(a))
    m_even = n + (n % 2)
    if m_even != n:
        # фиктивный индекс n: нулевые строка и столбец ни с чем не смешиваются
        a = np.pad(a, ((0, 1), (0, 1)))
    order, step = _tournament(m_even)
    b = a[np.ix_(order, order)]

    sweeps = 0
    off = _off_norm(b)
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, off, target)
        for _ in range(m_even - 1):
            _rotate(b)
            b = b[np.ix_(step, step)]
            order = order[step]
        sweeps += 1
        off = _off_norm(b)

    if sweeps > max_sweeps // 2:
        logger.warning(
            f"Eigensolver used {sweeps}/{max_sweeps} sweeps | n={n}"
        )

    return sorted(np.diag(b)[order < n].tolist(), reverse=True)


def is_doubly_stochastic(m: MatrixLike,
                         tol: float = ENTRY_TOLERANCE,
                         rowsum_tol: float = ROWSUM_TOLERANCE
                         ) -> StochasticityReport:
    """
    Проверка двойной стохастичности: симметрия, неотрицательность
    (элемент >= -tol), суммы строк и столбцов равны 1.
    """
    if tol <= 0 or rowsum_tol <= 0:
        raise ValueError("Tolerances must be positive")

    a = _as_array(m)
    if a.size == 0:
        raise DimensionError("Empty matrix")

    max_asymmetry = float(np.max(np.abs(a - a.T)))
    min_entry = float(a.min())
    rowsum_dev = float(np.max(np.abs(a.sum(axis=1) - 1.0)))
    colsum_dev = float(np.max(np.abs(a.sum(axis=0) - 1.0)))

    return StochasticityReport(
        symmetric_ok=max_asymmetry <= rowsum_tol,
        nonneg_ok=min_entry >= -tol,
        rowsum_ok=rowsum_dev <= rowsum_tol,
        colsum_ok=colsum_dev <= rowsum_tol,
        max_rowsum_dev=rowsum_dev,
        max_colsum_dev=colsum_dev,
        max_asymmetry=max_asymmetry,
        min_entry=min_entry,
    )


def spectrum_roundtrip(s: Spectrum,
                       tol: float = ROUNDTRIP_TOLERANCE) -> RoundTripResult:
    """
    Сравнивает спектр s с собственными значениями construct(s):
    обе последовательности сортируются и сравниваются попарно.
    """
    eigenvalues = sym_eigenvalues(construct(s))
    expected = sorted(s.values, reverse=True)
    max_error = max(abs(a - b) for a, b in zip(eigenvalues, expected))
    return RoundTripResult(
        passed=max_error <= tol,
        max_error=max_error,
        eigenvalues=eigenvalues,
    )
