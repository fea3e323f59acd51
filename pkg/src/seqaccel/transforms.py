"""Sequence transformations over partial sums, plus the chi diagnostic.

Four methods share one result shape: the enhanced one-step extrapolation
(exact weight rows, optional subleading-coefficient extraction), the
classical three-term recursive scheme it is algebraically equivalent to,
the epsilon lozenge, and the iterated delta-squared process.

estimates[k] always uses s_0..s_k only, so a trajectory can be read as
"what the method believed after k+1 terms".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log10 as _flog10

from mpmath import mp

from .mpnum import BigReal, Precision
from .weights import transform_weights, weight_condition

# extra decimal digits carried inside the nonlinear lozenges so that their
# exactness guarantees (recovering a geometric transient to 2 ulp) survive
# the rounding back to the input precision
_NONLINEAR_GUARD_DIGITS = 20

# guard digits in the working-precision policy for the weighted dot products
_POLICY_GUARD_DIGITS = 15


class PrecisionUnderflowError(ArithmeticError):
    """Input precision cannot support the requested output digits."""

    def __init__(self, needed_digits: int, have_digits: int, order: int, message=None):
        self.needed_digits = needed_digits
        self.have_digits = have_digits
        self.order = order
        super().__init__(
            message
            or f"order-{order} extrapolation needs inputs carried to at least "
            f"{needed_digits} decimal digits, got {have_digits}"
        )


@dataclass(frozen=True)
class PartialSums:
    values: tuple[BigReal, ...]
    precision: Precision
    origin: object = None

    def __post_init__(self):
        if not self.values:
            raise ValueError("partial sums must be nonempty")
        for v in self.values:
            if v.precision != self.precision:
                raise ValueError("all partial sums must share one precision")

    @classmethod
    def from_values(cls, values, origin=None) -> "PartialSums":
        values = tuple(values)
        if not values:
            raise ValueError("partial sums must be nonempty")
        return cls(values=values, precision=values[0].precision, origin=origin)

    @property
    def order(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class TransformResult:
    method: str
    estimates: tuple[BigReal, ...]
    chi: tuple  # BigReal or None per entry; None marks an undefined (zero) difference
    coefficients: dict | None = None
    flags: frozenset = field(default_factory=frozenset)


def required_working_digits(n: int, output_digits: int) -> int:
    """Input digits needed for `output_digits` correct digits at order n."""
    lam = weight_condition(n, 0)
    lam_digits = ceil(_flog10(lam.numerator / lam.denominator)) if lam > 1 else 0
    return output_digits + lam_digits + _POLICY_GUARD_DIGITS


def _chi_from(estimates) -> tuple:
    p = estimates[0].precision
    out = []
    with mp.workprec(p.bits):
        for a, b in zip(estimates, estimates[1:]):
            d = abs(b._raw - a._raw)
            out.append(None if d == 0 else BigReal(mp.log10(d), p))
    return tuple(out)


def chi_diagnostic(t: TransformResult) -> tuple:
    """chi(k) = log10 |T_k - T_{k+1}|, with None where the difference is zero."""
    if len(t.estimates) < 2:
        raise ValueError("need at least two estimates for the chi diagnostic")
    return _chi_from(t.estimates)


def _dot(row, values) -> Fraction:
    # weights are exact rationals and BigReal values are exact dyadics, so
    # the whole dot product is exact; the caller rounds once at the end
    acc = Fraction(0)
    for w, v in zip(row, values):
        acc += w * v.to_fraction()
    return acc


def neville_one_step(
    s: PartialSums, j_max: int = 0, output_digits: int | None = None
) -> TransformResult:
    """Direct weighted extrapolation; also extracts c_j at the top order.

    When output_digits is given, enforce the working-precision policy:
    the inputs must carry output_digits + ceil(log10 Lambda_0(n)) + 15
    digits, since Lambda_0 bounds the cancellation in the dot product.
    Estimates stay at the input precision (they are not rounded down to
    output_digits), so the chi diagnostic remains an honest error measure.
    """
    n = s.order
    if not 0 <= j_max <= min(n, 10):
        raise ValueError(f"j_max must lie in [0, min(n, 10)] = [0, {min(n, 10)}]")
    if output_digits is not None:
        needed = required_working_digits(n, output_digits)
        if s.precision.decimal_digits < needed:
            raise PrecisionUnderflowError(needed, s.precision.decimal_digits, n)
    p = s.precision
    estimates = tuple(
        BigReal(_dot(transform_weights(k, 0), s.values[: k + 1]), p)
        for k in range(n + 1)
    )
    coefficients = {
        j: BigReal(_dot(transform_weights(n, j), s.values), p)
        for j in range(j_max + 1)
    }
    return TransformResult(
        method="neville_one_step",
        estimates=estimates,
        chi=_chi_from(estimates) if n >= 1 else (),
        coefficients=coefficients,
    )


def neville_recursive(s: PartialSums) -> TransformResult:
    """Three-term lozenge; estimates[k] is the k-fold transformed diagonal."""
    p = s.precision
    with mp.workprec(p.bits):
        prev = [v._raw for v in s.values]  # prev[i] = current-stage value at index i
        diagonal = [prev[0]]
        for m in range(1, s.order + 1):
            cur = []
            for i in range(m, s.order + 1):
                cur.append(((i + 1) * prev[i] - (i + 1 - m) * prev[i - 1]) / m)
            prev = [None] * m + cur  # keep absolute i-indexing aligned
            diagonal.append(cur[0])
    estimates = tuple(BigReal(v, p) for v in diagonal)
    return TransformResult(
        method="neville_recursive",
        estimates=estimates,
        chi=_chi_from(estimates) if s.order >= 1 else (),
    )


def wynn_epsilon(s: PartialSums) -> TransformResult:
    """Epsilon lozenge.  Even columns are the estimates; odd columns are
    auxiliary inverse differences.

    The estimate at odd order k is the last completed even column entry
    that still respects causality.  A zero difference inside the lozenge
    saturates the affected entry: it is dropped, the previous valid
    estimate is carried forward, and the order is flagged.
    """
    p = s.precision
    work = Precision(p.decimal_digits + _NONLINEAR_GUARD_DIGITS)
    flags = set()
    n = s.order
    with mp.workprec(work.bits):
        cols = [[+v._raw for v in s.values]]
        prev2 = [mp.mpf(0)] * (n + 2)
        prev1 = cols[0]
        for k in range(1, n + 1):
            cur = []
            for m in range(n + 1 - k):
                if prev1[m] is None or prev1[m + 1] is None:
                    cur.append(None)
                    continue
                d = prev1[m + 1] - prev1[m]
                if d == 0:
                    cur.append(None)
                    continue
                base = prev2[m + 1]
                cur.append(None if base is None else base + 1 / d)
            cols.append(cur)
            prev2, prev1 = prev1, cur
        raw = []
        last = cols[0][0]
        for k in range(n + 1):
            entry = cols[k][0] if k % 2 == 0 else cols[k - 1][1]
            if entry is None:
                flags.add(f"saturated@{k}")
            else:
                last = entry
            raw.append(last)
    estimates = tuple(BigReal(v, work).to_precision(p) for v in raw)
    return TransformResult(
        method="wynn_epsilon",
        estimates=estimates,
        chi=_chi_from(estimates) if n >= 1 else (),
        flags=frozenset(flags),
    )


def _aitken_once(seq):
    out = []
    for i in range(len(seq) - 2):
        d2 = seq[i + 2] - 2 * seq[i + 1] + seq[i]
        if d2 == 0:
            return None
        out.append(seq[i] - (seq[i + 1] - seq[i]) ** 2 / d2)
    return out


def aitken_iterated(s: PartialSums) -> TransformResult:
    """Iterated delta-squared process.

    For each order k the prefix s_0..s_k is swept floor(k/2) times; every
    sweep shortens the sequence by two, and the last survivor is the
    estimate.  A zero second difference stops the sweeps for that prefix
    and flags the order degenerate.
    """
    p = s.precision
    work = Precision(p.decimal_digits + _NONLINEAR_GUARD_DIGITS)
    flags = set()
    n = s.order
    raw = []
    with mp.workprec(work.bits):
        values = [+v._raw for v in s.values]
        for k in range(n + 1):
            seq = values[: k + 1]
            for _ in range(k // 2):
                nxt = _aitken_once(seq)
                if nxt is None:
                    flags.add(f"degenerate@{k}")
                    break
                seq = nxt
            raw.append(seq[-1])
    estimates = tuple(BigReal(v, work).to_precision(p) for v in raw)
    return TransformResult(
        method="aitken_iterated",
        estimates=estimates,
        chi=_chi_from(estimates) if n >= 1 else (),
        flags=frozenset(flags),
    )


TRANSFORMS = {
    "neville-one-step": neville_one_step,
    "neville-recursive": neville_recursive,
    "wynn": wynn_epsilon,
    "aitken": aitken_iterated,
}
