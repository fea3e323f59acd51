"""Tests for the shipped series definitions and the Bethe-logarithm assembly.

Independent oracles: term formulas re-evaluated with raw mpmath (atan and
lerchphi), the tail behaviour a_k k^2 -> 1, and frozen decimal strings for
the assembled constants.
"""

from fractions import Fraction

import mpmath
import pytest

from seqaccel.catalog import (
    BETHE_COEFFS,
    MODEL_COEFFS,
    MODEL_LIMIT_50,
    SeriesFileError,
    bethe_constant_offset,
    bethe_limit,
    bethe_logarithm,
    bethe_series,
    model_series,
    series_from_file,
)
from seqaccel.mpnum import BigReal, Precision, decimal_ulp, render_places
from seqaccel.transforms import (
    PrecisionUnderflowError,
    neville_one_step,
    required_working_digits,
)

P30 = Precision(30)

# frozen reference decimals for the three assembled constants
BETHE_1S_50 = "2.98412855576549761075977709001379796997518056617002"
BETHE_2S_50 = "2.81176989312056351521974278594163611289355147029732"
BETHE_2P_50 = "-0.03001670863021290244367571095114406394093304423103"


def mpf_of(x: BigReal) -> mpmath.mpf:
    f = x.to_fraction()
    return mpmath.mpf(f.numerator) / f.denominator


def round_ref(text: str, places: int) -> str:
    return render_places(BigReal(text, Precision(70)), places)


# ------------------------------------------------------------- model series


def test_model_term_formula():
    spec = model_series()
    with mpmath.workprec(140):
        want0 = 4 / mpmath.pi * mpmath.atan(mpmath.mpf(2) / 3)
        want1 = mpmath.atan(mpmath.mpf(3) / 4) / mpmath.pi
        assert abs(mpf_of(spec.term(0, P30)) - want0) < mpmath.mpf(10) ** -28
        assert abs(mpf_of(spec.term(1, P30)) - want1) < mpmath.mpf(10) ** -28


def test_model_term_tail_scale():
    spec = model_series()
    t = spec.term(10**6, P30)
    assert abs(float(t) * 10**12 - 1) < 1e-5


def test_model_terms_positive_decreasing():
    spec = model_series()
    vals = [spec.term(k, P30).to_fraction() for k in range(1, 61)]
    assert all(v > 0 for v in vals)
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_model_metadata():
    spec = model_series()
    assert spec.first_index == 0
    assert spec.known_limit == MODEL_LIMIT_50
    assert spec.known_coeffs is MODEL_COEFFS
    # partial sums approach the frozen limit at the expected 1/n pace
    s = spec.partial_sums(200, Precision(40))
    gap = abs(s.values[200].to_fraction() - BigReal(MODEL_LIMIT_50, Precision(55)).to_fraction())
    assert Fraction(1, 1000) < gap < Fraction(1, 100)


# ------------------------------------------------------------- bethe series


def test_bethe_1s_first_term_oracle():
    # term(0) = (32/9) Phi(-3, 1, 4)
    spec = bethe_series("1S")
    with mpmath.workprec(140):
        want = mpmath.mpf(32) / 9 * mpmath.lerchphi(-3, 1, 4)
        assert abs(mpf_of(spec.term(0, P30)) - want) < mpmath.mpf(10) ** -27


def test_bethe_2p_term_oracle():
    # term(3) = 256*27*(11*9 - 12)/(3*1*5^4) Phi(-5, 1, 6)
    spec = bethe_series("2P")
    pref = Fraction(256 * 27 * (11 * 9 - 12), 3 * 5**4)
    with mpmath.workprec(140):
        want = mpmath.mpf(pref.numerator) / pref.denominator * mpmath.lerchphi(-5, 1, 6)
        assert abs(mpf_of(spec.term(3, P30)) - want) < mpmath.mpf(10) ** -26


def test_bethe_2s_term_oracle():
    # repaired denominator (k-2)^3 (k+2)^3; at k = 3 the prefactor is 24576/125
    spec = bethe_series("2S")
    pref = Fraction(1024 * 3 * 2 * 4, 1 * 125)
    with mpmath.workprec(140):
        want = mpmath.mpf(pref.numerator) / pref.denominator * mpmath.lerchphi(-5, 1, 6)
        assert abs(mpf_of(spec.term(3, P30)) - want) < mpmath.mpf(10) ** -25


def test_bethe_1s_forms_agree():
    # zero-based form term(k) equals the k-from-2 form term(k+2), bitwise
    a = bethe_series("1S", "series")
    b = bethe_series("1S", "logsum")
    assert a.first_index == 0
    assert b.first_index == 2
    for k in range(21):
        assert a.term(k, P30).to_fraction() == b.term(k + 2, P30).to_fraction()
    sa = a.partial_sums(12, P30)
    sb = b.partial_sums(12, P30)
    for x, y in zip(sa.values, sb.values):
        assert x.to_fraction() == y.to_fraction()


def test_bethe_metadata_and_forms():
    assert bethe_series("1S").first_index == 0
    assert bethe_series("2S").first_index == 3
    assert bethe_series("2P").first_index == 3
    assert bethe_series("1s").name == "bethe-1s"  # case-insensitive state
    assert bethe_series("1S").known_coeffs is BETHE_COEFFS
    assert bethe_series("2P").known_coeffs is None
    with pytest.raises(ValueError):
        bethe_series("3S")
    with pytest.raises(ValueError):
        bethe_series("2S", "series")
    with pytest.raises(ValueError):
        bethe_series("1S", "weird")


def test_bethe_vanishing_low_coefficients():
    # the terms fall off like k^-4, so c_1 and c_2 must vanish; the
    # order-120 coefficient estimates see that to better than 1e-20
    spec = bethe_series("1S")
    p = Precision(required_working_digits(120, 50))
    s = spec.partial_sums(120, p)
    r = neville_one_step(s, j_max=2, output_digits=50)
    assert abs(r.coefficients[1].to_fraction()) < Fraction(1, 10**20)
    assert abs(r.coefficients[2].to_fraction()) < Fraction(1, 10**20)


# ------------------------------------------------------------ assembled values


def test_bethe_logarithm_1s_20_digits():
    got = bethe_logarithm("1S", 20)
    assert render_places(got, 20) == round_ref(BETHE_1S_50, 20)


def test_bethe_logarithm_2p_20_digits():
    got = bethe_logarithm("2P", 20)
    assert render_places(got, 20) == round_ref(BETHE_2P_50, 20)


def test_bethe_limit_plus_offset_is_logarithm():
    val = bethe_logarithm("2S", 15)
    lim = bethe_limit("2S", 15)
    off = bethe_constant_offset("2S", lim.precision)
    assert render_places(val, 15) == render_places(off + lim, 15)
    assert render_places(val, 15) == round_ref(BETHE_2S_50, 15)


def test_bethe_constant_offsets_against_mpmath():
    p = Precision(60)
    with mpmath.workprec(260):
        ln2 = mpmath.log(2)
        z2, z3, z4 = mpmath.zeta(2), mpmath.zeta(3), mpmath.zeta(4)
        want = {
            "1S": 10 * ln2 - 2 * z2 - 1,
            "2S": mpmath.mpf(-545) / 36 + mpmath.mpf(16) / 3 * ln2 - 14 * z2 + 24 * z3,
            "2P": (
                mpmath.mpf(-3437) / 2916
                + mpmath.mpf(3280) / 2187 * ln2
                - mpmath.mpf(14) / 3 * z2
                + mpmath.mpf(136) / 9 * z3
                - mpmath.mpf(64) / 3 * z4
            ),
        }
        for state, ref in want.items():
            got = bethe_constant_offset(state, p)
            assert abs(mpf_of(got) - ref) < mpmath.mpf(10) ** -55


def test_bethe_logarithm_argument_checks():
    with pytest.raises(ValueError):
        bethe_logarithm("1S", 0)
    with pytest.raises(ValueError):
        bethe_logarithm("1S", 151)
    with pytest.raises(ValueError):
        bethe_logarithm("4F", 20)


def test_bethe_logarithm_order_too_small():
    with pytest.raises(PrecisionUnderflowError) as err:
        bethe_logarithm("1S", 50, order=6)
    assert "order 6" in str(err.value)
    assert err.value.needed_digits == 50


# ------------------------------------------------------------ file series


def test_series_from_file_terms(tmp_path):
    f = tmp_path / "terms.txt"
    f.write_text("0.5\n0.25\n# a comment\n\n0.125\n")
    spec = series_from_file(f)
    assert spec.first_index == 0
    s = spec.partial_sums(2, P30)
    assert [v.to_fraction() for v in s.values] == [
        Fraction(1, 2),
        Fraction(3, 4),
        Fraction(7, 8),
    ]
    with pytest.raises(IndexError, match="3 terms"):
        spec.term(5, P30)


def test_series_from_file_partial_sums(tmp_path):
    f = tmp_path / "sums.txt"
    f.write_text("0.5\n0.75\n0.875\n")
    spec = series_from_file(f, partial_sums=True)
    s = spec.partial_sums(2, P30)
    assert [v.to_fraction() for v in s.values] == [
        Fraction(1, 2),
        Fraction(3, 4),
        Fraction(7, 8),
    ]


def test_series_from_file_rational_entries(tmp_path):
    f = tmp_path / "terms.txt"
    f.write_text("1/3\n1/9\n")
    spec = series_from_file(f)
    t = spec.term(1, P30)
    assert abs(t.to_fraction() - Fraction(1, 9)) <= decimal_ulp(t)


def test_series_from_file_malformed(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("0.5\n0.25\n# fine\nabc\n")
    with pytest.raises(SeriesFileError) as err:
        series_from_file(f)
    assert err.value.line_no == 4
    assert "abc" in str(err.value)
    assert str(f) in str(err.value)


def test_series_from_file_empty(tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("# only a comment\n\n")
    with pytest.raises(SeriesFileError):
        series_from_file(f)
