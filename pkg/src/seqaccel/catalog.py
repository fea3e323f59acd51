"""Concrete input series and the Bethe-logarithm assembly.

Two families ship with the package: a model series with a known 50-decimal
limit and closed-form subleading coefficients, and the three hydrogen
Bethe-logarithm series (1S, 2S, 2P) written as Lerch-transcendent sums.

The 2S logarithmic sum is shipped with a repaired prefactor: the
transcription source prints 1024 k (k-1)(k+1) / ((k-2)^3 (k+1)^3), but that
series converges to a value off by more than 7 units; with the denominator
corrected to (k-2)^3 (k+2)^3 the sum reproduces the independently assembled
2S constant to more than 140 digits.  The corrected form is used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from mpmath import mp

from .mpnum import BigReal, Precision, const_ln2, const_pi, const_zeta
from .special import lerch_phi_transformed
from .transforms import (
    PartialSums,
    PrecisionUnderflowError,
    neville_one_step,
    required_working_digits,
)

BETHE_STATES = ("1S", "2S", "2P")

# policy for unspecified transformation order: start at the order that is
# known to deliver 50 decimals for the ground state, double while the chi
# certificate falls short, stop at the cap
_ORDER_START = 58
_ORDER_CAP = 400
_DIGITS_CAP = 150


@dataclass(frozen=True)
class ClosedForm:
    """A value of the shape rational + pi_part / pi."""

    rational: Fraction
    pi_part: Fraction = Fraction(0)

    def value(self, p: Precision) -> BigReal:
        v = BigReal(self.rational, p)
        if self.pi_part:
            v = v + self.pi_part / const_pi(p)
        return v


@dataclass(frozen=True)
class SeriesSpec:
    name: str
    term: Callable[[int, Precision], BigReal]
    first_index: int = 0
    known_limit: str | None = None
    known_coeffs: dict | None = None

    def partial_sums(self, n: int, p: Precision) -> PartialSums:
        """s_0..s_n re-indexed so the first supplied term is index 0."""
        values = []
        acc = BigReal(0, p)
        for k in range(self.first_index, self.first_index + n + 1):
            acc = acc + self.term(k, p)
            values.append(acc)
        return PartialSums(values=tuple(values), precision=p, origin=self)


# --------------------------------------------------------------------------
# model series


MODEL_LIMIT_50 = "1.31279495382586579196348658390640442738912757477554"

MODEL_COEFFS = {
    1: ClosedForm(Fraction(-1)),
    2: ClosedForm(Fraction(1, 2), Fraction(1)),
    3: ClosedForm(Fraction(-1, 6), Fraction(-2)),
    4: ClosedForm(Fraction(0), Fraction(37, 12)),
    5: ClosedForm(Fraction(1, 30), Fraction(-131, 30)),
    6: ClosedForm(Fraction(0), Fraction(268, 45)),
    7: ClosedForm(Fraction(-1, 42), Fraction(-549, 70)),
    8: ClosedForm(Fraction(0), Fraction(98347, 10080)),
    9: ClosedForm(Fraction(1, 30), Fraction(-9253, 840)),
    10: ClosedForm(Fraction(0), Fraction(66011, 6300)),
}


def _model_term(k: int, p: Precision) -> BigReal:
    with mp.workprec(p.bits + 8):
        v = 4 / (mp.pi * (k + 1) ** 2) * mp.atan(mp.mpf(k + 2) / (k + 3))
    return BigReal(v, p)


def model_series() -> SeriesSpec:
    return SeriesSpec(
        name="model",
        term=_model_term,
        first_index=0,
        known_limit=MODEL_LIMIT_50,
        known_coeffs=MODEL_COEFFS,
    )


# --------------------------------------------------------------------------
# Bethe-logarithm series

# subleading coefficients of the ground-state partial sums b_n, conjectured
# exact rationals, independently reproduced here to better than 80 digits
BETHE_COEFFS = {
    1: ClosedForm(Fraction(0)),
    2: ClosedForm(Fraction(0)),
    3: ClosedForm(Fraction(-4, 3)),
    4: ClosedForm(Fraction(27, 4)),
    5: ClosedForm(Fraction(-703, 30)),
    6: ClosedForm(Fraction(3329, 48)),
    7: ClosedForm(Fraction(-63163, 336)),
    8: ClosedForm(Fraction(184961, 384)),
    9: ClosedForm(Fraction(-569323, 480)),
    10: ClosedForm(Fraction(7256477, 2560)),
}


def _bethe_term_parts(state: str, form: str, k: int):
    """Exact prefactor and Lerch arguments (z as a Fraction, s=1, a)."""
    if state == "1S" and form == "series":
        # zero-based form; index shift k -> k+2 gives the logsum form
        pref = Fraction(16 * (k + 2), (k + 1) ** 2 * (k + 3) ** 2)
        return pref, Fraction(-(3 + k), 1 + k), 2 * k + 4
    if state == "1S":
        pref = Fraction(16 * k, (k - 1) ** 2 * (k + 1) ** 2)
        return pref, Fraction(1 + k, 1 - k), 2 * k
    if state == "2S":
        # denominator repaired to (k-2)^3 (k+2)^3, see module docstring
        pref = Fraction(1024 * k * (k - 1) * (k + 1), (k - 2) ** 3 * (k + 2) ** 3)
        return pref, Fraction(2 + k, 2 - k), 2 * k
    pref = Fraction(256 * k**3 * (11 * k**2 - 12), 3 * (k - 2) ** 4 * (k + 2) ** 4)
    return pref, Fraction(2 + k, 2 - k), 2 * k


def _normalize_state(state: str) -> str:
    st = str(state).upper()
    if st not in BETHE_STATES:
        raise ValueError(f"unsupported state {state!r}; choose one of {BETHE_STATES}")
    return st


def bethe_series(state: str, form: str = "default") -> SeriesSpec:
    """Term generator for one hydrogen state.

    1S exists in two algebraically identical forms: `series` starts at
    index 0, `logsum` starts at index 2.  The excited states only have
    the logsum form, starting at index 3.
    """
    st = _normalize_state(state)
    if form == "default":
        form = "series" if st == "1S" else "logsum"
    if form not in ("series", "logsum"):
        raise ValueError(f"unknown form {form!r}")
    if form == "series" and st != "1S":
        raise ValueError("the zero-based series form is only available for 1S")
    first = 0 if form == "series" else (2 if st == "1S" else 3)

    def term(k: int, p: Precision, _st=st, _form=form) -> BigReal:
        pref, z, a = _bethe_term_parts(_st, _form, k)
        phi = lerch_phi_transformed(z, 1, a, p)
        return phi * pref

    return SeriesSpec(
        name=f"bethe-{st.lower()}",
        term=term,
        first_index=first,
        known_coeffs=BETHE_COEFFS if st == "1S" else None,
    )


def bethe_constant_offset(state: str, p: Precision) -> BigReal:
    """The closed constant combination added to each accelerated series limit."""
    st = _normalize_state(state)
    ln2 = const_ln2(p)
    if st == "1S":
        return 10 * ln2 - 2 * const_zeta(2, p) - 1
    if st == "2S":
        return (
            BigReal(Fraction(-545, 36), p)
            + Fraction(16, 3) * ln2
            - 14 * const_zeta(2, p)
            + 24 * const_zeta(3, p)
        )
    return (
        BigReal(Fraction(-3437, 2916), p)
        + Fraction(3280, 2187) * ln2
        - Fraction(14, 3) * const_zeta(2, p)
        + Fraction(136, 9) * const_zeta(3, p)
        - Fraction(64, 3) * const_zeta(4, p)
    )


def _chi_certifies(result, digits: int) -> bool:
    if not result.chi:
        return False
    top = result.chi[-1]
    return top is None or top.to_fraction() <= -(digits + 1)


def _accelerated_limit(state: str, digits: int, order: int | None):
    st = _normalize_state(state)
    spec = bethe_series(st)
    explicit = order is not None
    n = order if explicit else _ORDER_START
    while True:
        p_work = Precision(required_working_digits(n, digits))
        sums = spec.partial_sums(n, p_work)
        result = neville_one_step(sums, output_digits=digits)
        if _chi_certifies(result, digits):
            return result.estimates[-1], n, p_work
        if explicit or n >= _ORDER_CAP:
            top = result.chi[-1] if result.chi else None
            achieved = 0 if top is None else max(0, -int(top.to_fraction()) - 1)
            raise PrecisionUnderflowError(
                needed_digits=digits,
                have_digits=achieved,
                order=n,
                message=(
                    f"order {n} certifies about {achieved} digits but {digits} were "
                    f"requested; raise the transformation order (working precision "
                    f"used: {p_work.decimal_digits} digits)"
                ),
            )
        n = min(2 * n, _ORDER_CAP)


def bethe_limit(state: str, digits: int, order: int | None = None) -> BigReal:
    """Accelerated limit of the state's series alone (no constant offset)."""
    est, _, _ = _accelerated_limit(state, digits, order)
    return est


def bethe_logarithm(state: str, digits: int, order: int | None = None) -> BigReal:
    """The Bethe logarithm to `digits` decimal places.

    Constants plus the accelerated series limit, computed at a working
    precision wide enough for the weight cancellation at the chosen order.
    The result keeps its working precision; round when rendering.
    """
    st = _normalize_state(state)
    if digits < 1 or digits > _DIGITS_CAP:
        raise ValueError(f"digits must lie in [1, {_DIGITS_CAP}]")
    est, n, p_work = _accelerated_limit(st, digits, order)
    return bethe_constant_offset(st, p_work) + est


# --------------------------------------------------------------------------
# user-supplied series


class SeriesFileError(ValueError):
    def __init__(self, path, line_no, content):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: not a decimal value: {content!r}")


def series_from_file(path, partial_sums: bool = False) -> SeriesSpec:
    """One decimal per line, interpreted as terms a_k from k = 0.

    With partial_sums=True the lines are the sums s_n themselves; they are
    converted back to terms so SeriesSpec stays a term generator.
    """
    entries = []
    with open(path) as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                entries.append(Fraction(text))
            except (ValueError, ZeroDivisionError):
                raise SeriesFileError(path, line_no, text) from None
    if not entries:
        raise SeriesFileError(path, 0, "<empty file>")
    if partial_sums:
        terms = [entries[0]]
        terms.extend(b - a for a, b in zip(entries, entries[1:]))
    else:
        terms = entries

    def term(k: int, p: Precision) -> BigReal:
        if k >= len(terms):
            raise IndexError(
                f"term file supplies {len(terms)} terms; index {k} unavailable"
            )
        return BigReal(terms[k], p)

    return SeriesSpec(name="file", term=term, first_index=0)
