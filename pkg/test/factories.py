import factory

import numpy as np
from faker import Faker
from hypothesis import strategies as st

from spectrum.schemas import Spectrum

fake = Faker()


def _tail(n: int, delta: float, concentrated: bool):
    """
    Хвост длины n-1 с суммой delta - 1; при concentrated одна координата
    получает не меньше 80% всей суммы.
    """
    weights = [fake.random.uniform(0.01, 1.0) for _ in range(n - 1)]
    total = sum(weights)
    weights = [w / total for w in weights]
    if concentrated:
        share = fake.random.uniform(0.8, 1.0)
        index = fake.random.randrange(n - 1)
        weights = [w * (1.0 - share) for w in weights]
        weights[index] += share
    return [(delta - 1.0) * w for w in weights]


class SpectrumFactory(factory.Factory):
    """
    Спектр (1, λ_1, ..., λ_{n-1}) с 1 + Σλ = delta. delta <= 1 дает
    спектр Сулеймановой, delta >= 1 -- неотрицательный хвост.
    """
    class Meta:
        model = Spectrum

    class Params:
        n = factory.Faker("random_int", min=3, max=16)
        delta = 0.5
        concentrated = False

    values = factory.LazyAttribute(
        lambda o: tuple([1.0] + _tail(o.n, o.delta, o.concentrated))
    )


def spectrum_from_tail(tail) -> Spectrum:
    return Spectrum(values=tuple([1.0] + [float(v) for v in tail]))


@st.composite
def suleimanova_spectra(draw, min_n=2, max_n=12, min_delta=0.5):
    """
    Стратегия hypothesis: спектры Сулеймановой с 1 + Σλ >= min_delta.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    weights = draw(st.lists(
        st.floats(min_value=0.0, max_value=1.0),
        min_size=n - 1, max_size=n - 1,
    ))
    budget = draw(st.floats(min_value=0.0, max_value=1.0 - min_delta))
    total = sum(weights)
    if total == 0.0:
        return spectrum_from_tail([0.0] * (n - 1))
    return spectrum_from_tail([-budget * w / total for w in weights])


def random_symmetric(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n))
    return 0.5 * (g + g.T)
