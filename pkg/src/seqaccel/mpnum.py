"""Arbitrary-precision arithmetic contract: explicit-precision reals, exact
rationals, canonical decimal rendering, and the shared mathematical constants.

Every value carries its precision; there is no ambient precision state, so
results are deterministic and safe to compute concurrently.  The floating
backend is mpmath (binary significands); decimal rendering goes through an
exact dyadic-to-decimal conversion with round-half-even, which is what makes
golden-string tests byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

ExactRational = Fraction

# bits per decimal digit, rounded up generously when sizing significands
_LOG2_10 = 3.321928094887363


@dataclass(frozen=True)
class Precision:
    """Number of significant decimal digits a value is carried to."""

    decimal_digits: int

    def __post_init__(self):
        if not isinstance(self.decimal_digits, int) or self.decimal_digits < 10:
            raise ValueError("precision must be an integer >= 10 decimal digits")

    @property
    def bits(self) -> int:
        # a few spare bits so that decimal rounding never exposes binary noise
        return int(self.decimal_digits * _LOG2_10) + 10


class BigReal:
    """A real number at an explicit decimal precision.

    Immutable.  Arithmetic between two BigReal values requires identical
    precision (mixing precisions silently is the classic source of
    irreproducible results); ints and ExactRational values mix freely since
    they are exact.  Conversions are available via to_precision().
    """

    __slots__ = ("_raw", "precision")

    def __init__(self, value, precision: Precision):
        if not isinstance(precision, Precision):
            raise TypeError("precision must be a Precision")
        object.__setattr__(self, "precision", precision)
        with mp.workprec(precision.bits):
            if isinstance(value, BigReal):
                raw = +value._raw
            elif isinstance(value, Fraction):
                raw = mp.mpf(value.numerator) / value.denominator
            elif isinstance(value, (int, str)):
                raw = mp.mpf(value)
            elif type(value) is mp.mpf or isinstance(value, float):
                raw = +mp.mpf(value)
            else:
                raise TypeError(f"cannot build BigReal from {type(value).__name__}")
        object.__setattr__(self, "_raw", raw)

    def __setattr__(self, *_):
        raise AttributeError("BigReal is immutable")

    # -- exact views ---------------------------------------------------

    def to_fraction(self) -> Fraction:
        """Exact value of the underlying dyadic significand."""
        sign, man, exp, _ = self._raw._mpf_
        if man == 0:
            return Fraction(0)
        fr = Fraction(man, 1) * (Fraction(2) ** exp)
        return -fr if sign else fr

    def to_precision(self, precision: Precision) -> "BigReal":
        return BigReal(self._raw, precision)

    def is_zero(self) -> bool:
        return self._raw == 0

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BigReal):
            if other.precision != self.precision:
                raise ValueError(
                    "precision mismatch: "
                    f"{self.precision.decimal_digits} vs {other.precision.decimal_digits} digits"
                )
            return other._raw
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            with mp.workprec(self.precision.bits):
                return mp.mpf(other.numerator) / other.denominator
        return NotImplemented

    def _make(self, raw) -> "BigReal":
        return BigReal(raw, self.precision)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(self._raw + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(self._raw - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(o - self._raw)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(self._raw * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(self._raw / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(o / self._raw)

    def __pow__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        with mp.workprec(self.precision.bits):
            return self._make(self._raw ** o)

    def __neg__(self):
        return self._make(-self._raw)

    def __abs__(self):
        return self._make(abs(self._raw))

    # -- comparisons (exact, precision-independent) ---------------------

    def _cmp_value(self, other):
        if isinstance(other, BigReal):
            return other.to_fraction()
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __eq__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.to_fraction() == o

    def __lt__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.to_fraction() < o

    def __le__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.to_fraction() <= o

    def __gt__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.to_fraction() > o

    def __ge__(self, other):
        o = self._cmp_value(other)
        return NotImplemented if o is None else self.to_fraction() >= o

    def __hash__(self):
        return hash(self.to_fraction())

    def __float__(self):
        return float(self._raw)

    # -- rendering -------------------------------------------------------

    def to_decimal_string(self) -> str:
        return _render_significant(self.to_fraction(), self.precision.decimal_digits)

    def __repr__(self):
        return f"BigReal({self.to_decimal_string()!r}, digits={self.precision.decimal_digits})"

    def __str__(self):
        return self.to_decimal_string()


def big(value, precision: Precision) -> BigReal:
    return BigReal(value, precision)


# ---------------------------------------------------------------------------
# exact decimal rendering


def _floor_log10(fr: Fraction) -> int:
    """floor(log10(fr)) for fr > 0, by exact integer comparisons."""
    num, den = fr.numerator, fr.denominator
    e = num.bit_length() - den.bit_length()
    guess = int(e * 0.30102999566398) - 2
    while fr >= Fraction(10) ** (guess + 1):
        guess += 1
    while fr < Fraction(10) ** guess:
        guess -= 1
    return guess


def _round_half_even(fr: Fraction) -> int:
    q, r = divmod(fr.numerator, fr.denominator)
    if 2 * r > fr.denominator or (2 * r == fr.denominator and q % 2 == 1):
        q += 1
    return q


def _render_significant(fr: Fraction, digits: int) -> str:
    if fr == 0:
        return "0." + "0" * (digits - 1)
    sign = "-" if fr < 0 else ""
    a = abs(fr)
    e10 = _floor_log10(a)
    scaled = a * Fraction(10) ** (digits - 1 - e10)
    q = _round_half_even(scaled)
    if q >= 10 ** digits:  # rounding carried into a new leading digit
        q //= 10
        e10 += 1
    ds = str(q)
    # exponent-free band per the canonical-format contract; the closed upper
    # endpoint admits outputs that round to exactly 10^9
    if -6 <= e10 <= 8 or (e10 == 9 and ds[0] == "1" and ds[1:].strip("0") == ""):
        if e10 >= 0:
            intpart = ds[: e10 + 1]
            fracpart = ds[e10 + 1 :] or "0"
            return f"{sign}{intpart}.{fracpart}"
        return sign + "0." + "0" * (-e10 - 1) + ds
    return f"{sign}{ds[0]}.{ds[1:]}e{'+' if e10 >= 0 else '-'}{abs(e10)}"


def render_places(x: BigReal, places: int) -> str:
    """Fixed-point rendering with exactly `places` decimals, round-half-even."""
    if places < 1:
        raise ValueError("places must be >= 1")
    fr = x.to_fraction()
    q = _round_half_even(abs(fr) * 10 ** places)
    ds = str(q).rjust(places + 1, "0")
    sign = "-" if fr < 0 and q != 0 else ""
    return f"{sign}{ds[:-places]}.{ds[-places:]}"


def decimal_ulp(x: BigReal) -> Fraction:
    """One unit in the last decimal place of x at its stated precision."""
    fr = abs(x.to_fraction())
    if fr == 0:
        return Fraction(10) ** (1 - x.precision.decimal_digits)
    return Fraction(10) ** (_floor_log10(fr) - x.precision.decimal_digits + 1)


# ---------------------------------------------------------------------------
# constants


def const_pi(p: Precision) -> BigReal:
    with mp.workprec(p.bits + 8):
        v = +mp.pi
    return BigReal(v, p)


def const_ln2(p: Precision) -> BigReal:
    with mp.workprec(p.bits + 8):
        v = +mp.ln2
    return BigReal(v, p)


def const_zeta(s: int, p: Precision) -> BigReal:
    if not isinstance(s, int) or s < 2:
        raise ValueError("const_zeta requires an integer s >= 2")
    with mp.workprec(p.bits + 8):
        v = +mp.zeta(s)
    return BigReal(v, p)


# elementary functions, correctly rounded at the argument's precision


def exp(x: BigReal) -> BigReal:
    with mp.workprec(x.precision.bits):
        return BigReal(mp.exp(x._raw), x.precision)


def ln(x: BigReal) -> BigReal:
    if x <= 0:
        raise ValueError("ln requires a positive argument")
    with mp.workprec(x.precision.bits):
        return BigReal(mp.ln(x._raw), x.precision)


def log10(x: BigReal) -> BigReal:
    if x <= 0:
        raise ValueError("log10 requires a positive argument")
    with mp.workprec(x.precision.bits):
        return BigReal(mp.log10(x._raw), x.precision)


def arctan(x: BigReal) -> BigReal:
    with mp.workprec(x.precision.bits):
        return BigReal(mp.atan(x._raw), x.precision)


def power(x: BigReal, y) -> BigReal:
    return x ** y
