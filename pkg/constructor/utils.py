import logging
import math

import numpy as np

from config import ENTRY_TOLERANCE
from constructor.schemas import (
    CorollaryVerdict,
    DenseSymMatrix,
    FeasibilityCertificate,
)
from errors import DimensionError
from rw_basis.utils import build_basis, sine_table
from spectrum.schemas import Spectrum

logger = logging.getLogger(__name__)


def _lambdas(s: Spectrum) -> np.ndarray:
    return np.asarray(s.values, dtype=np.float64)


def construct(s: Spectrum) -> DenseSymMatrix:
    """
    P(Λ) по замкнутой формуле:
    p_kl = (1/n)(1 + 2 Σ_{j>=1} λ_j S_j(k) S_j(l)).
    Матрица строится всегда; неотрицательность проверяет feasibility().
    """
    n = s.n
    lam = _lambdas(s)
    table = sine_table(n)[1:]
    weighted = table * lam[1:, np.newaxis]
    entries = (1.0 + 2.0 * (table.T @ weighted)) / n
    entries = 0.5 * (entries + entries.T)
    return DenseSymMatrix(n=n, entries=entries)


def schur_product(q: np.ndarray, s: Spectrum) -> DenseSymMatrix:
    """
    Общая формула (QΛQ^T)_kl = Σ_j λ_j q_j^{(k)} q_j^{(l)} для
    ортогональной Q; столбец j матрицы q -- вектор q_j.
    """
    q = np.asarray(q, dtype=np.float64)
    if q.shape != (s.n, s.n):
        raise DimensionError(
            f"Basis shape {q.shape} does not match spectrum length {s.n}"
        )
    entries = (q * _lambdas(s)[np.newaxis, :]) @ q.T
    entries = 0.5 * (entries + entries.T)
    return DenseSymMatrix(n=s.n, entries=entries)


def construct_triple_product(s: Spectrum) -> DenseSymMatrix:
    return schur_product(build_basis(s.n).q, s)


def feasibility(s: Spectrum,
                entry_tolerance: float = ENTRY_TOLERANCE
                ) -> FeasibilityCertificate:
    """
    Проверяет неравенство Σ_{j>=1} λ_j S_j(k) S_j(l) >= -1/2 для всех
    пар k <= l. Свидетель -- минимальный элемент, при равенстве первый
    в построчном порядке.
    """
    n = s.n
    lam = _lambdas(s)[1:]
    table = sine_table(n)[1:]
    ks, ls = np.triu_indices(n)

    if lam.size:
        sums = np.sum(lam[:, np.newaxis] * table[:, ks] * table[:, ls],
                      axis=0)
    else:
        sums = np.zeros(ks.size)
    values = (1.0 + 2.0 * sums) / n

    position = int(np.argmin(values))
    min_entry = float(values[position])

    if min_entry >= -entry_tolerance:
        return FeasibilityCertificate(
            feasible=True,
            min_entry=min_entry,
            entry_tolerance=entry_tolerance,
        )

    return FeasibilityCertificate(
        feasible=False,
        min_entry=min_entry,
        witness_k=int(ks[position]),
        witness_l=int(ls[position]),
        witness_value=min_entry,
        entry_tolerance=entry_tolerance,
    )


def corollary_bound(s: Spectrum) -> CorollaryVerdict:
    """
    Достаточные условия: все λ_i <= 0 и Σ λ_i >= -1/2, либо
    все λ_i >= 0 и Σ λ_i <= 1/2. Сумма сравнивается с запасом в n
    машинных эпсилон (ошибка округления при нормировке спектра).
    """
    tail = s.tail
    total = math.fsum(tail)
    slack = 4 * s.n * np.finfo(np.float64).eps
    if all(v <= 0 for v in tail) and total >= -0.5 - slack:
        return CorollaryVerdict.SULEIMANOVA_PASS
    if all(v >= 0 for v in tail) and total <= 0.5 + slack:
        return CorollaryVerdict.NONNEGATIVE_PASS
    return CorollaryVerdict.NOT_COVERED


def householder_coefficients(n: int):
    """
    α = 1/(sqrt(n)(sqrt(n) - 1)), β = 1/sqrt(n).
    """
    root = math.sqrt(n)
    return 1.0 / (root * (root - 1.0)), 1.0 / root


def householder_basis(n: int) -> np.ndarray:
    """
    Отражение H(v) = I - 2vv^T/||v||^2, v = (1 - sqrt(n), 1, ..., 1)^T.
    """
    if n < 2:
        raise DimensionError(f"Householder basis needs n >= 2, got {n}")
    v = np.ones(n)
    v[0] = 1.0 - math.sqrt(n)
    return np.eye(n) - 2.0 * np.outer(v, v) / float(v @ v)


def householder_construct(s: Spectrum) -> DenseSymMatrix:
    """
    H(v)ΛH(v). Матрица возвращается всегда, стохастичность проверяется
    отдельно (is_doubly_stochastic).
    """
    if s.n < 2:
        raise DimensionError(
            f"Householder construction needs n >= 2, got {s.n}"
        )
    return schur_product(householder_basis(s.n), s)


def householder_diagonal(s: Spectrum, k: int) -> float:
    """
    (H(v)ΛH(v))_kk = 1/n + α² Σ_{j>=1, j!=k} λ_j + (1 - α)² λ_k, k >= 1.
    """
    n = s.n
    if not 1 <= k <= n - 1:
        raise DimensionError(f"Diagonal index must be in [1, {n - 1}]")
    alpha, _ = householder_coefficients(n)
    tail = s.tail
    rest = math.fsum(tail) - tail[k - 1]
    return 1.0 / n + alpha ** 2 * rest + (1.0 - alpha) ** 2 * tail[k - 1]


def basis_product_bound(q: np.ndarray) -> float:
    """
    M(Q) = max_{j>=1, k, l} n q_j^{(k)} q_j^{(l)}.
    """
    q = np.asarray(q, dtype=np.float64)
    n = q.shape[0]
    if n < 2:
        return float(n * q[0, 0] ** 2) if n else 0.0
    columns = q[:, 1:]
    per_column = np.maximum(columns.max(axis=0) ** 2,
                            columns.min(axis=0) ** 2)
    return float(n * per_column.max())
