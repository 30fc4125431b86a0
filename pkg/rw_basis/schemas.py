from dataclasses import dataclass

import numpy as np


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class WalkMatrix:
    """
    Матрица переходов P_n симметричного случайного блуждания на цикле Z/nZ.
    """
    n: int
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _readonly(self.entries))


@dataclass(frozen=True)
class OrthonormalBasis:
    """
    Q = [w_0 ... w_{n-1}], столбец k -- собственный вектор w_k блуждания,
    eigvals[k] = cos(2πk/n).
    """
    n: int
    q: np.ndarray
    eigvals: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", _readonly(self.q))
        object.__setattr__(self, "eigvals", _readonly(self.eigvals))

    def column(self, k: int) -> np.ndarray:
        return self.q[:, k]
