import math

import pytest
from hypothesis import given, seed, settings

from errors import SpectrumError
from spectrum.utils import (
    classify,
    format_spectrum,
    make_spectrum,
    parse_spectrum,
    read_spectra,
    trace_moment_check,
)
from test.factories import SpectrumFactory, suleimanova_spectra


def test_parse_spectrum_known_example():
    spectrum = parse_spectrum("1,-0.02,-0.03,-0.05,-0.4")

    assert spectrum.n == 5
    assert spectrum.values == (1.0, -0.02, -0.03, -0.05, -0.4)


def test_parse_spectrum_singleton():
    spectrum = parse_spectrum("1")

    assert spectrum.n == 1
    assert spectrum.values == (1.0,)
    assert spectrum.tail == ()


def test_parse_spectrum_allows_whitespace():
    spectrum = parse_spectrum("  1 , -0.5 ")

    assert spectrum.values == (1.0, -0.5)


@pytest.mark.parametrize("text", ["1,1.5", "1,-1.0001"])
def test_parse_spectrum_out_of_range(text):
    with pytest.raises(SpectrumError, match="outside"):
        parse_spectrum(text)


@pytest.mark.parametrize("text", ["0.9,-0.1", "-1", "0.999999999999"])
def test_parse_spectrum_leading_value_must_be_one(text):
    with pytest.raises(SpectrumError, match="exactly 1"):
        parse_spectrum(text)


@pytest.mark.parametrize("text", ["", "   ", "1,,-0.2", "1,abc", "1,nan"])
def test_parse_spectrum_rejects_bad_tokens(text):
    with pytest.raises(SpectrumError):
        parse_spectrum(text)


def test_spectrum_error_is_value_error():
    with pytest.raises(ValueError):
        make_spectrum([2.0])


def test_spectra_are_not_sorted():
    spectrum = parse_spectrum("1,-0.4,-0.1")

    assert spectrum.values == (1.0, -0.4, -0.1)
    assert classify(spectrum).is_normalized is True
    assert classify(parse_spectrum("1,-0.1,-0.4")).is_normalized is True
    assert classify(parse_spectrum("1,-0.4,0.1")).is_normalized is False


def test_classify_sigma5(sigma5):
    result = classify(sigma5)

    assert result.is_suleimanova is True
    assert result.is_nonnegative_case is False
    assert result.delta == pytest.approx(0.5, abs=1e-12)


def test_classify_zero_tail():
    result = classify(parse_spectrum("1,0,0"))

    assert result.is_suleimanova is True
    assert result.is_nonnegative_case is True
    assert result.delta == 1.0


def test_classify_delta_min_witness(witness_spectrum):
    result = classify(witness_spectrum)

    assert result.is_suleimanova is True
    assert result.delta == pytest.approx(0.48, abs=1e-12)


def test_classify_mixed_signs():
    result = classify(parse_spectrum("1,0.3,-0.3"))

    assert result.is_suleimanova is False
    assert result.is_nonnegative_case is False


def test_classify_delta_matches_exact_sum():
    for _ in range(200):
        spectrum = SpectrumFactory(n=40, delta=0.3)
        exact = 1.0 + math.fsum(spectrum.tail)
        eps = spectrum.n * 2.0 ** -52

        assert abs(classify(spectrum).delta - exact) <= eps


def test_trace_moment_simple_pass():
    result = trace_moment_check(parse_spectrum("1,-0.5"), 10)

    assert result.passed is True
    assert result.failing_k is None
    assert result.max_k == 10


def test_trace_moment_first_failing_k():
    result = trace_moment_check(parse_spectrum("1,-1,-1"), 3)

    assert result.passed is False
    assert result.failing_k == 1


def test_trace_moment_failure_at_higher_power():
    # k=1: 1 + 1.2 - 2 = 0.2; k=3: 1 + 2·0.216 - 2 < 0
    result = trace_moment_check(parse_spectrum("1,0.6,0.6,-1,-1"), 5)

    assert result.passed is False
    assert result.failing_k == 3


def test_trace_moment_delta_min_witness(witness_spectrum):
    assert trace_moment_check(witness_spectrum, 20).passed is True


def test_trace_moment_rejects_non_positive_depth(sigma5):
    with pytest.raises(SpectrumError):
        trace_moment_check(sigma5, 0)


@seed(7)
@settings(max_examples=200, deadline=None)
@given(spectrum=suleimanova_spectra(min_n=2, max_n=30, min_delta=0.0))
def test_trace_moments_hold_for_suleimanova(spectrum):
    assert trace_moment_check(spectrum, 50).passed is True


@seed(11)
@settings(max_examples=200, deadline=None)
@given(spectrum=suleimanova_spectra(min_n=1, max_n=20, min_delta=0.0))
def test_format_then_parse_is_identity(spectrum):
    parsed = parse_spectrum(format_spectrum(spectrum))

    assert parsed.values == spectrum.values


def test_read_spectra_skips_comments_and_blank_lines(tmp_path):
    path = tmp_path / "spectra.txt"
    path.write_text(
        "# known examples\n"
        "1,-0.02,-0.03,-0.05,-0.4\n"
        "\n"
        "1, -0.5\n",
        encoding="utf-8",
    )

    spectra = read_spectra(path)

    assert [s.n for s in spectra] == [5, 2]


def test_read_spectra_reports_line_number(tmp_path):
    path = tmp_path / "spectra.txt"
    path.write_text("1,-0.5\n1,2\n", encoding="utf-8")

    with pytest.raises(SpectrumError, match=":2:"):
        read_spectra(path)


def test_read_spectra_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing\n", encoding="utf-8")

    with pytest.raises(SpectrumError, match="no spectra"):
        read_spectra(path)
