"""Lerch transcendent and polygamma at arbitrary precision.

Only the parameter ranges the series catalog needs: real z <= 1 (the
transformed series covers z well below -1), integer s >= 1, integer a >= 1.
Truncation is controlled by rigorous geometric tail bounds, never by
term-smallness heuristics.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, factorial, comb

from mpmath import mp, bernfrac

from .mpnum import BigReal, Precision

# tail bounds aim this far below the requested precision
_TAIL_MARGIN = 5


def _as_fraction(x) -> Fraction:
    if isinstance(x, BigReal):
        return x.to_fraction()
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact or BigReal argument, got {type(x).__name__}")


def _check_sa(s, a):
    if not isinstance(s, int) or s < 1:
        raise ValueError("s must be an integer >= 1")
    if not isinstance(a, int) or a < 1:
        raise ValueError("a must be a positive integer")


def polygamma(m: int, x, p: Precision) -> BigReal:
    """m-th derivative of the digamma function, m >= 1, x > 0.

    Evaluated by the divergent-but-asymptotic large-argument series after
    shifting x upward far enough that the optimally truncated series is
    below the target accuracy; the shift is undone term by term through
    the downward recurrence.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("polygamma order m must be an integer >= 1")
    xf = _as_fraction(x)
    if xf <= 0:
        raise ValueError("polygamma requires x > 0")
    digits = p.decimal_digits + 12
    bits = int(digits * 3.33) + 12
    # e^(-2 pi x) ~ 10^-(digits) fixes the minimum safe argument size
    x_min = int(0.3665 * (digits + _TAIL_MARGIN)) + m + 2
    shift = max(0, ceil(x_min - xf))
    with mp.workprec(bits):
        xr = mp.mpf(xf.numerator) / xf.denominator
        y = xr + shift
        # asymptotic series at y
        total = mp.mpf(factorial(m - 1)) / y**m + mp.mpf(factorial(m)) / (2 * y ** (m + 1))
        ypow = y**m  # becomes y^(2k+m) after the k-th doubling below
        threshold = mp.mpf(10) ** (-(digits + _TAIL_MARGIN)) * abs(total)
        prev_size = mp.inf
        k = 1
        while True:
            ypow *= y * y
            bn, bd = bernfrac(2 * k)
            term = (
                mp.mpf(bn) * factorial(2 * k + m - 1) / (bd * factorial(2 * k) * ypow)
            )
            size = abs(term)
            if size >= prev_size:
                raise ArithmeticError(
                    "asymptotic series failed to converge; argument shift too small"
                )
            total += term
            if size < threshold:
                break
            prev_size = size
            k += 1
        result = (-1) ** (m + 1) * total
        # undo the shift: psi_m(x) = psi_m(x+1) - (-1)^m m! / x^(m+1)
        if shift:
            corr = mp.mpf(0)
            for r in range(shift):
                corr += 1 / (xr + r) ** (m + 1)
            result -= (-1) ** m * factorial(m) * corr
    return BigReal(result, p)


def lerch_inner_sum(n: int, s: int, a: int) -> Fraction:
    """Exact alternating binomial sum sum_k (-1)^k C(n,k) / (a+k)^s."""
    _check_sa(s, a)
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for k in range(n + 1):
        total += Fraction((-1) ** k * comb(n, k), (a + k) ** s)
    return total


def lerch_inner_sum_closed(n: int, a: int) -> Fraction:
    # the s=1 inner sum telescopes to a Beta-integral value
    return Fraction(factorial(n) * factorial(a - 1), factorial(a + n))


def lerch_phi_direct(z, s: int, a: int, p: Precision) -> BigReal:
    """Direct defining-series evaluation; |z| < 1, or z = 1 with s >= 2.

    At z = 1 the series is a shifted integer zeta value, which the direct
    sum cannot reach; it is evaluated through polygamma instead.
    """
    _check_sa(s, a)
    zf = _as_fraction(z)
    if zf == 1:
        if s < 2:
            raise ValueError("z = 1 requires s >= 2 (the s = 1 series diverges)")
        # sum_{k>=0} 1/(k+a)^s = (-1)^s psi^{(s-1)}(a) / (s-1)!
        pg = polygamma(s - 1, a, Precision(p.decimal_digits + 5))
        val = pg * Fraction((-1) ** s, factorial(s - 1))
        return val.to_precision(p)
    if abs(zf) >= 1:
        raise ValueError("direct summation needs |z| < 1 (or z = 1 with s >= 2)")
    digits = p.decimal_digits
    bits = Precision(digits + 15).bits
    with mp.workprec(bits):
        zr = mp.mpf(zf.numerator) / zf.denominator
        az = abs(zr)
        total = mp.mpf(0)
        zpow = mp.mpf(1)
        n = 0
        limit = mp.mpf(10) ** (-(digits + _TAIL_MARGIN))
        while True:
            total += zpow / mp.mpf(n + a) ** s
            zpow *= zr
            n += 1
            # remaining tail is below a geometric series from the next term
            if abs(zpow) / ((n + a) ** s * (1 - az)) < limit * max(abs(total), 1):
                break
    return BigReal(total, p)


def lerch_phi_transformed(z, s: int, a: int, p: Precision) -> BigReal:
    """Binomial-transformed series, valid for z < 1/2; covers z <= -1.

    Phi(z,s,a) = 1/(1-z) * sum_n w^n I_n(a,s),  w = -z/(1-z),
    where I_n is the alternating binomial inner sum.  I_n is positive and
    decreasing in n, so the tail after term n is at most I_n w^(n+1)/(1-w).
    For s = 1 the inner sum has an exact product form evaluated by a
    two-factor recurrence; larger s falls back to exact rational inner
    sums (slower, only used for cross-checks).
    """
    _check_sa(s, a)
    zf = _as_fraction(z)
    w = -zf / (1 - zf)
    if not abs(w) < 1:
        raise ValueError(f"transformed series needs z < 1/2, got z = {zf}")
    digits = p.decimal_digits
    bits = Precision(digits + 15).bits
    with mp.workprec(bits):
        wr = mp.mpf(w.numerator) / w.denominator
        aw = abs(wr)
        limit = mp.mpf(10) ** (-(digits + _TAIL_MARGIN))
        total = mp.mpf(0)
        if s == 1:
            t = mp.mpf(1) / a  # w^n I_n at n = 0
            n = 0
            while True:
                total += t
                t = t * wr * (n + 1) / (a + n + 1)
                n += 1
                # tail = t + later terms <= t / (1 - w) since I_n decreases
                if abs(t) / (1 - aw) < limit * max(abs(total), 1):
                    break
        else:
            n = 0
            wpow = mp.mpf(1)
            while True:
                inner = lerch_inner_sum(n, s, a)
                term = wpow * mp.mpf(inner.numerator) / inner.denominator
                total += term
                wpow *= wr
                n += 1
                if abs(term) * aw / (1 - aw) < limit * max(abs(total), 1):
                    break
        one_minus_z = mp.mpf((1 - zf).numerator) / (1 - zf).denominator
        total /= one_minus_z
    return BigReal(total, p)


def lerch_phi(z, s: int, a: int, p: Precision) -> BigReal:
    """Route to whichever evaluation path covers the argument."""
    zf = _as_fraction(z)
    if zf < Fraction(1, 2):
        return lerch_phi_transformed(zf, s, a, p)
    return lerch_phi_direct(zf, s, a, p)
