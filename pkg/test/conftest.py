import os

os.environ.setdefault("LOG_TO_FILE", "0")

import factory.random  # noqa: E402
import pytest  # noqa: E402
import pytest_asyncio  # noqa: E402
from faker import Faker  # noqa: E402
from httpx import AsyncClient, ASGITransport  # noqa: E402

from main import app  # noqa: E402
from spectrum.schemas import Spectrum  # noqa: E402

# спектры из раздела с примерами: хвост каждого в сумме дает -1/2
GOLDEN_SPECTRA = {
    "sigma5_odd": (1, -0.02, -0.03, -0.05, -0.4),
    "sigma6_even": (1, -0.01, -0.02, -0.06, -0.08, -0.33),
    "sigma10_improved": (1, -0.01, -0.01, -0.025, -0.03, -0.035, -0.04,
                         -0.05, -0.08, -0.22),
    "sigma5_new1": (1, -0.03, -0.03, -0.04, -0.4),
    "sigma16_new2": (1, -0.003, -0.003, -0.004, -0.007, -0.009, -0.02,
                     -0.0209, -0.021, -0.024, -0.026, -0.035, -0.042,
                     -0.076, -0.0811, -0.128),
    "sigma10_new2": (1, -0.01, -0.01, -0.01, -0.02, -0.02, -0.04, -0.07,
                     -0.1, -0.22),
    "sigma11_new2": (1, -0.001, -0.004, -0.01, -0.01, -0.012, -0.013,
                     -0.05, -0.09, -0.11, -0.2),
    "sigma9_new2": (1, -0.006, -0.018, -0.02, -0.028, -0.028, -0.053,
                    -0.105, -0.242),
    "sigma26_new3": (1, -0.004, -0.005, -0.006, -0.007, -0.01, -0.01,
                     -0.011, -0.011, -0.011, -0.012, -0.012, -0.015,
                     -0.015, -0.016, -0.017, -0.019, -0.02, -0.022,
                     -0.022, -0.025, -0.028, -0.028, -0.032, -0.069,
                     -0.073),
}

# (спектр, условие, которое он нарушает)
SEPARATION_CASES = [
    ("sigma5_odd", "perfect_mirsky"),
    ("sigma5_odd", "soules"),
    ("sigma6_even", "perfect_mirsky"),
    ("sigma6_even", "soules"),
    ("sigma10_improved", "nader_improved_soules_even"),
    ("sigma5_new1", "nader_new1_odd"),
    ("sigma16_new2", "nader_new2"),
    ("sigma10_new2", "nader_new2"),
    ("sigma11_new2", "nader_new2"),
    ("sigma9_new2", "nader_new2"),
    ("sigma26_new3", "nader_new3_n26"),
]

DELTA_MIN_WITNESS = (1, -0.004, -0.002, -0.004, -0.51)


@pytest.fixture(autouse=True)
def seeded_factories():
    factory.random.reseed_random(20240601)
    Faker.seed(20240601)


@pytest.fixture
def golden():
    return {name: Spectrum(values=tuple(float(v) for v in values))
            for name, values in GOLDEN_SPECTRA.items()}


@pytest.fixture
def sigma5(golden):
    return golden["sigma5_odd"]


@pytest.fixture
def witness_spectrum():
    return Spectrum(values=tuple(float(v) for v in DELTA_MIN_WITNESS))


@pytest_asyncio.fixture
async def client():
    async with AsyncClient(base_url="http://testserver",
                           transport=ASGITransport(app)) as async_client:
        yield async_client
