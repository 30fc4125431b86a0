from functools import lru_cache

import numpy as np

from errors import DimensionError
from rw_basis.schemas import OrthonormalBasis, WalkMatrix


def _phase_grid(n: int) -> np.ndarray:
    """
    2π((k·j) mod n)/n: произведение приводится по модулю n в целых
    до умножения на float.
    """
    idx = np.arange(n, dtype=np.int64)
    residues = np.outer(idx, idx) % n
    return 2.0 * np.pi * residues / n


@lru_cache(maxsize=64)
def sine_table(n: int) -> np.ndarray:
    """
    Таблица S[j, k] = sin(2π((kj) mod n)/n + π/4) для j, k из 0..n-1.
    Результат только для чтения и кешируется по n.
    """
    if n < 1:
        raise DimensionError(f"n must be positive, got {n}")
    table = np.sin(_phase_grid(n) + np.pi / 4)
    table.setflags(write=False)
    return table


def walk_eigenvalues(n: int) -> np.ndarray:
    return np.cos(2.0 * np.pi * np.arange(n) / n)


def walk_matrix(n: int) -> WalkMatrix:
    """
    Циркулянт с первой строкой (0, 1/2, 0, ..., 0, 1/2).
    """
    if n < 3:
        raise DimensionError(
            f"Walk matrix needs n >= 3 (two distinct neighbours), got {n}"
        )
    entries = np.zeros((n, n))
    rows = np.arange(n)
    entries[rows, (rows + 1) % n] = 0.5
    entries[rows, (rows - 1) % n] = 0.5
    return WalkMatrix(n=n, entries=entries)


def build_basis(n: int) -> OrthonormalBasis:
    """
    Ортонормированный базис w_k^{(j)} = sqrt(2/n) sin(2πkj/n + π/4).
    Матрица симметрична, поэтому строки и столбцы совпадают.
    """
    if n < 1:
        raise DimensionError(f"Basis needs n >= 1, got {n}")
    q = np.sqrt(2.0 / n) * sine_table(n)
    return OrthonormalBasis(n=n, q=q, eigvals=walk_eigenvalues(n))


def verify_eigenpairs(b: OrthonormalBasis, p: WalkMatrix, tol: float) -> bool:
    """
    Проверяет ||P_n w_k - λ_k w_k||_inf <= tol для всех k.
    """
    if b.n != p.n:
        raise DimensionError(
            f"Basis has n={b.n} but walk matrix has n={p.n}"
        )
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    residual = p.entries @ b.q - b.q * b.eigvals[np.newaxis, :]
    return bool(np.max(np.abs(residual)) <= tol)


def cosine_eigenvectors(n: int) -> np.ndarray:
    """
    Столбцы u_k^{(j)} = cos(2πkj/n). Собственные векторы P_n,
    но u_k = u_{n-k}, так что базиса они не образуют.
    """
    return np.cos(_phase_grid(n))


def sine_eigenvectors(n: int) -> np.ndarray:
    return np.sin(_phase_grid(n))
