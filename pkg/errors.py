from typing import Optional


class RealizerError(Exception):
    """
    Базовая ошибка библиотеки.
    """


class SpectrumError(RealizerError, ValueError):
    """
    Некорректный спектр: не разбирается, первое значение не 1,
    или значение вне [-1, 1].
    """


class DimensionError(RealizerError, ValueError):
    """
    Недопустимая размерность или индекс.
    """


class SymmetryError(RealizerError, ValueError):
    pass


class ConvergenceError(RealizerError, ArithmeticError):
    """
    Собственные значения не сошлись за отведенное число проходов.
    """

    def __init__(self, sweeps: int, off_norm: float,
                 target: Optional[float] = None):
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.target = target
        super().__init__(
            f"Eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e}"
            + (f", target {target:.3e})" if target is not None else ")")
        )


class GenerationError(RealizerError, RuntimeError):
    pass


class MatrixFormatError(RealizerError, ValueError):
    pass
