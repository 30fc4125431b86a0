import numpy as np
import pytest

from constructor.utils import construct
from eigen.utils import is_doubly_stochastic, spectrum_roundtrip
from spectrum.utils import classify
from test.factories import SpectrumFactory

pytestmark = pytest.mark.slow

SPECTRA_PER_SIZE = 1000


@pytest.mark.parametrize("n", [3, 5, 8, 16, 64, 128])
def test_half_suleimanova_spectra_are_realized(n):
    for i in range(SPECTRA_PER_SIZE):
        spectrum = SpectrumFactory(n=n, delta=0.5, concentrated=i % 2 == 1)

        report = is_doubly_stochastic(construct(spectrum), tol=1e-12,
                                      rowsum_tol=1e-10)
        roundtrip = spectrum_roundtrip(spectrum, 1e-8)

        assert report.passed, (n, spectrum.values, report)
        assert roundtrip.passed, (n, spectrum.values, roundtrip.max_error)


@pytest.mark.parametrize("n", [4, 16, 64])
def test_nonnegative_spectra_are_realized(n):
    rng = np.random.default_rng(n)
    for _ in range(SPECTRA_PER_SIZE):
        spectrum = SpectrumFactory(n=n, delta=rng.uniform(1.0, 1.5))
        assert classify(spectrum).is_nonnegative_case

        report = is_doubly_stochastic(construct(spectrum), tol=1e-12,
                                      rowsum_tol=1e-10)

        assert report.passed, (n, spectrum.values, report)
