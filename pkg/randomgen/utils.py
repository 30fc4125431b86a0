import logging
from typing import List, Tuple

import numpy as np

from constructor.schemas import DenseSymMatrix
from constructor.utils import construct
from errors import GenerationError
from randomgen.schemas import Distribution, GenConfig
from spectrum.schemas import Spectrum
from spectrum.utils import make_spectrum

logger = logging.getLogger(__name__)

MAX_REDRAWS = 16


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """
    PCG64 с инициализацией через SeedSequence(seed, spawn_key=(stream,)):
    независимые потоки для каждого stream при одном seed.
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(stream,))
    return np.random.Generator(np.random.PCG64(sequence))


def draw_weights(rng: np.random.Generator, size: int,
                 distribution: Distribution = Distribution.UNIFORM,
                 exponent: float = 3.0) -> np.ndarray:
    draws = rng.random(size)
    if distribution == Distribution.POWER:
        draws = draws ** exponent
    return draws


def random_spectrum(cfg: GenConfig) -> Spectrum:
    """
    Спектр (1, λ_1, ..., λ_{n-1}), λ_i = alpha·X_i/S_n, Σ λ_i = alpha.
    При S_n = 0 выборка повторяется не более MAX_REDRAWS раз.
    """
    rng = make_rng(cfg.seed, cfg.stream)
    for attempt in range(MAX_REDRAWS):
        draws = draw_weights(rng, cfg.n - 1, cfg.distribution, cfg.exponent)
        total = float(draws.sum())
        if total > 0:
            break
        logger.warning(
            f"Degenerate draw (S_n = 0), retrying | seed={cfg.seed} "
            f"stream={cfg.stream} attempt={attempt + 1}"
        )
    else:
        raise GenerationError(
            f"All {MAX_REDRAWS} draws were zero for seed={cfg.seed}"
        )

    tail = cfg.alpha * draws / total
    return make_spectrum([1.0, *tail.tolist()])


def random_matrix(cfg: GenConfig) -> DenseSymMatrix:
    return construct(random_spectrum(cfg))


def generate_batch(cfg: GenConfig,
                   count: int) -> List[Tuple[Spectrum, DenseSymMatrix]]:
    """
    count пар (спектр, матрица); i-я пара использует поток stream = i.
    """
    batch = []
    for i in range(count):
        spectrum = random_spectrum(cfg.model_copy(update={"stream": i}))
        batch.append((spectrum, construct(spectrum)))
    return batch
