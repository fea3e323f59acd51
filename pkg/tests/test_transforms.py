"""Transformation tests: pinned small cases, equivariances, causality, the
two Neville routes against each other, and the degenerate/saturated paths."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqaccel.mpnum import BigReal, Precision, decimal_ulp
from seqaccel.transforms import (
    PartialSums,
    PrecisionUnderflowError,
    TransformResult,
    aitken_iterated,
    chi_diagnostic,
    neville_one_step,
    neville_recursive,
    required_working_digits,
    wynn_epsilon,
)
from seqaccel.weights import weight_condition


def ps(values, digits=50):
    p = Precision(digits)
    return PartialSums.from_values([BigReal(v, p) for v in values])


def test_partial_sums_invariants():
    with pytest.raises(ValueError):
        PartialSums.from_values([])
    mixed = [BigReal(1, Precision(20)), BigReal(1, Precision(30))]
    with pytest.raises(ValueError):
        PartialSums.from_values(mixed)
    s = ps([1, 2, 3])
    assert s.order == 2


# ---------------------------------------------------------------------------
# enhanced one-step


def test_one_step_constant_exact():
    s = ps([7] * 6)
    r = neville_one_step(s, j_max=5)
    assert all(e.to_fraction() == 7 for e in r.estimates)
    assert r.coefficients[0].to_fraction() == 7
    assert all(r.coefficients[j].to_fraction() == 0 for j in range(1, 6))


def test_one_step_inverse_power_input():
    # s_i = 1/(i+1): c_1 = 1 and everything else 0, up to input rounding
    s = ps([Fraction(1, i + 1) for i in range(4)], digits=40)
    r = neville_one_step(s, j_max=3)
    tol = Fraction(1, 10**35)
    assert abs(r.coefficients[0].to_fraction()) < tol
    assert abs(r.coefficients[1].to_fraction() - 1) < tol
    assert abs(r.coefficients[2].to_fraction()) < tol
    assert abs(r.coefficients[3].to_fraction()) < tol


def test_one_step_polynomial_annihilation():
    # degree-3 polynomial in 1/(i+1) with dyadic coefficients, order 5 > 3
    gam = [Fraction(5, 4), Fraction(-3, 8), Fraction(7, 2), Fraction(1, 16)]
    vals = [
        sum(g * Fraction(1, (i + 1) ** j) for j, g in enumerate(gam)) for i in range(6)
    ]
    s = ps(vals, digits=45)
    r = neville_one_step(s, j_max=5)
    tol = Fraction(1, 10**38)
    for j in range(6):
        want = gam[j] if j < 4 else 0
        assert abs(r.coefficients[j].to_fraction() - want) < tol, j
    assert abs(r.estimates[-1].to_fraction() - gam[0]) < tol


def test_one_step_j_max_domain():
    s = ps([1, 2, 3])
    with pytest.raises(ValueError):
        neville_one_step(s, j_max=3)  # j_max > n
    with pytest.raises(ValueError):
        neville_one_step(s, j_max=-1)


def test_precision_underflow_error_names_requirement():
    s = ps(range(21), digits=30)
    needed = required_working_digits(20, 50)
    assert needed == 50 + 11 + 15
    with pytest.raises(PrecisionUnderflowError) as err:
        neville_one_step(s, output_digits=50)
    assert err.value.needed_digits == needed
    assert err.value.have_digits == 30
    assert err.value.order == 20
    assert str(needed) in str(err.value)


def test_policy_accepts_sufficient_precision():
    digits = required_working_digits(5, 20)
    s = ps([Fraction(1, k + 1) for k in range(6)], digits=digits)
    r = neville_one_step(s, output_digits=20)
    assert r.estimates[-1].precision.decimal_digits == digits  # not rounded down


# ---------------------------------------------------------------------------
# recursive route


def test_recursive_constant():
    r = neville_recursive(ps([7] * 5))
    assert all(e.to_fraction() == 7 for e in r.estimates)


def test_recursive_order_one_is_linear_extrapolation():
    p = Precision(30)
    s0, s1 = BigReal("1.25", p), BigReal("1.75", p)
    r = neville_recursive(PartialSums.from_values([s0, s1]))
    assert r.estimates[1].to_fraction() == (2 * s1 - s0).to_fraction()


def test_paths_agree_within_lambda_tolerance():
    rng = random.Random(20200)
    n = 20
    digits = 50
    vals = [Fraction(rng.randrange(-(10**12), 10**12), 10**12) for _ in range(n + 1)]
    s = ps(vals, digits=digits)
    one = neville_one_step(s)
    rec = neville_recursive(s)
    lam = weight_condition(n, 0)
    # error bound: both routes see the same rounded inputs, so they can only
    # drift apart through roundoff amplified by the cancellation factor
    import math

    bound = Fraction(1, 10 ** (digits - math.ceil(math.log10(lam)) - 2))
    for a, b in zip(one.estimates, rec.estimates):
        assert abs((a - b).to_fraction()) < bound


# ---------------------------------------------------------------------------
# Wynn epsilon


def test_wynn_geometric_half_exact():
    # s_k = 2 - 2^-k are dyadic; the lozenge closes the limit exactly
    s = ps([2 - Fraction(1, 2**k) for k in range(3)], digits=30)
    r = wynn_epsilon(s)
    assert r.estimates[2].to_fraction() == 2


def test_wynn_constant_saturates():
    s = ps([5] * 4, digits=25)
    r = wynn_epsilon(s)
    assert all(e.to_fraction() == 5 for e in r.estimates)
    assert any(f.startswith("saturated@") for f in r.flags)


def test_wynn_single_transient():
    # sigma + alpha lambda^k with every quantity dyadic and short: recovered
    # exactly after the guard-digit round-trip
    sig, alpha, lam = Fraction(1), Fraction(3), Fraction(461, 512)
    vals = [sig + alpha * lam**k for k in range(3)]
    s = ps(vals, digits=40)
    r = wynn_epsilon(s)
    assert abs(r.estimates[2].to_fraction() - 1) <= 2 * decimal_ulp(r.estimates[2])


def test_wynn_odd_order_estimate():
    # odd orders read the causal entry of the previous even column
    s = ps([1, Fraction(3, 2), Fraction(7, 4), Fraction(15, 8)], digits=30)
    r = wynn_epsilon(s)
    assert r.estimates[1].to_fraction() == Fraction(3, 2)  # epsilon_0^(1) = s_1
    assert r.estimates[3].to_fraction() == 2  # epsilon_2^(1), exact here


# ---------------------------------------------------------------------------
# iterated Aitken


def test_aitken_single_transient_one_sweep():
    vals = [5 + 2 * Fraction(1, 3) ** k for k in range(3)]
    s = ps(vals, digits=60)
    r = aitken_iterated(s)
    assert abs(r.estimates[2].to_fraction() - 5) < Fraction(1, 10**50)


def test_aitken_constant_degenerate():
    s = ps([3] * 5, digits=25)
    r = aitken_iterated(s)
    assert all(e.to_fraction() == 3 for e in r.estimates)
    assert any(f.startswith("degenerate@") for f in r.flags)


def test_aitken_geometric_half_order_four():
    s = ps([2 - Fraction(1, 2**k) for k in range(5)], digits=30)
    r = aitken_iterated(s)
    # first sweep is exact on the pure geometric; the second hits zero
    # second differences and stops with the limit in hand
    assert r.estimates[4].to_fraction() == 2


# ---------------------------------------------------------------------------
# chi diagnostic


def test_chi_pinned_value():
    p = Precision(30)
    t = TransformResult(
        method="neville_one_step",
        estimates=(BigReal(1, p), BigReal("1.00001", p)),
        chi=(),
    )
    chi = chi_diagnostic(t)
    assert len(chi) == 1
    assert abs(float(chi[0]) + 5) < 1e-6


def test_chi_undefined_marker():
    t = neville_one_step(ps([4, 4]))
    # both estimates equal 4 exactly: t_0 = s_0, t_1 = 2 s_1 - s_0
    assert chi_diagnostic(t) == (None,)


def test_chi_needs_two_estimates():
    with pytest.raises(ValueError):
        chi_diagnostic(neville_one_step(ps([1])))


# ---------------------------------------------------------------------------
# structural invariants


_dyadic = st.integers(min_value=-(2**20), max_value=2**20).map(
    lambda k: Fraction(k, 2**10)
)


@given(st.lists(_dyadic, min_size=3, max_size=8), _dyadic)
def test_translation_equivariance(vals, shift):
    s = ps(vals, digits=30)
    shifted = ps([v + shift for v in vals], digits=30)
    for method in (neville_one_step, neville_recursive, wynn_epsilon, aitken_iterated):
        base = method(s)
        moved = method(shifted)
        for a, b in zip(base.estimates, moved.estimates):
            want = a.to_fraction() + shift
            scale = max(abs(want), 1)
            assert abs(b.to_fraction() - want) <= 2 * scale * Fraction(1, 10**28)


@given(st.lists(_dyadic, min_size=3, max_size=8), _dyadic.filter(lambda x: x != 0))
def test_scaling_equivariance(vals, scale):
    s = ps(vals, digits=30)
    scaled = ps([v * scale for v in vals], digits=30)
    for method in (neville_one_step, neville_recursive, wynn_epsilon, aitken_iterated):
        base = method(s)
        moved = method(scaled)
        for a, b in zip(base.estimates, moved.estimates):
            want = a.to_fraction() * scale
            mag = max(abs(want), abs(scale))
            assert abs(b.to_fraction() - want) <= 2 * mag * Fraction(1, 10**28)


def test_causality_bitwise():
    rng = random.Random(7)
    head = [Fraction(rng.randrange(-1000, 1000), 512) for _ in range(4)]
    tail_a = [Fraction(1, 3), Fraction(2, 5)]
    tail_b = [Fraction(9), Fraction(-4, 7)]
    sa = ps(head + tail_a, digits=35)
    sb = ps(head + tail_b, digits=35)
    for method in (neville_one_step, neville_recursive, wynn_epsilon, aitken_iterated):
        ra, rb = method(sa), method(sb)
        for k in range(len(head)):
            assert ra.estimates[k].to_fraction() == rb.estimates[k].to_fraction(), (
                method.__name__,
                k,
            )


def test_method_names():
    s = ps([1, 2, 3])
    assert neville_one_step(s).method == "neville_one_step"
    assert neville_recursive(s).method == "neville_recursive"
    assert wynn_epsilon(s).method == "wynn_epsilon"
    assert aitken_iterated(s).method == "aitken_iterated"
