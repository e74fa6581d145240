"""Series-kernel tests: frozen oracles plus hypothesis property checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from robertson_kit.series import (
    DEFAULT_ORDER,
    CoefficientOverflow,
    DivisionByZeroConstantTerm,
    NonzeroInnerConstantTerm,
    RadiusExceeded,
    TruncatedSeries,
    chebyshev_radii,
)


def geometric(order, ratio=1.0):
    return TruncatedSeries(ratio ** np.arange(order + 1))


bounded_coeffs = st.lists(
    st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=12,
)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def test_polynomial_product_identity():
    a = TruncatedSeries([1, 1]).pad(8)
    b = TruncatedSeries([1, -1]).pad(8)
    prod = a * b
    want = np.zeros(9, dtype=complex)
    want[0], want[2] = 1, -1
    assert np.allclose(prod.coeffs, want, atol=0)


def test_geometric_series_division():
    one = TruncatedSeries.constant(1.0, 20)
    inv = one / TruncatedSeries([1, -1]).pad(20)
    assert np.allclose(inv.coeffs, 1.0, atol=0)


def test_factorization_division():
    num = TruncatedSeries([1, 0, -1]).pad(12)
    den = TruncatedSeries([1, -1]).pad(12)
    q = num / den
    want = np.zeros(13, dtype=complex)
    want[0] = want[1] = 1
    assert np.allclose(q.coeffs, want, atol=1e-15)


def test_division_by_zero_constant_term():
    with pytest.raises(DivisionByZeroConstantTerm):
        TruncatedSeries([1, 1]) / TruncatedSeries([0, 1])


def test_division_roundtrip_exactness():
    rng = np.random.default_rng(3)
    a = TruncatedSeries(rng.normal(size=16) + 1j * rng.normal(size=16))
    b = TruncatedSeries(
        np.concatenate(([1.5], 0.3 * (rng.normal(size=15) + 1j * rng.normal(size=15))))
    )
    assert ((a / b) * b).max_abs_diff(a) < 1e-12


def test_coefficient_overflow_guard():
    big = TruncatedSeries([1e101, 1])
    with pytest.raises(CoefficientOverflow):
        big * big
    with pytest.raises(CoefficientOverflow):
        TruncatedSeries([1, np.nan])


@settings(max_examples=40, deadline=None)
@given(bounded_coeffs, bounded_coeffs, bounded_coeffs)
def test_ring_axioms(ca, cb, cc):
    a, b, c = (TruncatedSeries(x).pad(14) for x in (ca, cb, cc))
    assert ((a * b) * c).max_abs_diff(a * (b * c)) < 1e-12
    assert (a * (b + c)).max_abs_diff(a * b + a * c) < 1e-12


# ---------------------------------------------------------------------------
# calculus
# ---------------------------------------------------------------------------


def test_deriv_of_geometric():
    d = geometric(10).deriv()
    assert np.allclose(d.coeffs, np.arange(1, 11), atol=0)


def test_integ_of_one_is_z():
    z = TruncatedSeries.constant(1.0, 4).integ()
    assert np.allclose(z.coeffs, [0, 1, 0, 0, 0, 0], atol=0)


@settings(max_examples=40, deadline=None)
@given(bounded_coeffs)
def test_deriv_integ_roundtrip(coeffs):
    a = TruncatedSeries(coeffs).pad(10)
    assert a.integ().deriv().max_abs_diff(a) < 1e-15


@settings(max_examples=40, deadline=None)
@given(bounded_coeffs, bounded_coeffs)
def test_leibniz_rule(ca, cb):
    a, b = TruncatedSeries(ca).pad(12), TruncatedSeries(cb).pad(12)
    lhs = (a * b).deriv()
    rhs = a.deriv() * b + a * b.deriv()
    assert lhs.max_abs_diff(rhs) < 1e-12


# ---------------------------------------------------------------------------
# exp / log / pow
# ---------------------------------------------------------------------------


def test_exp_log_identity_on_one_plus_z():
    a = TruncatedSeries([1, 1]).pad(24)
    assert a.log().exp().max_abs_diff(a) < 1e-12


nice_coeffs = st.lists(
    st.complex_numbers(max_magnitude=0.8, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=10,
)


@settings(max_examples=40, deadline=None)
@given(nice_coeffs)
def test_log_exp_and_exp_log_inverses(coeffs):
    a = TruncatedSeries(coeffs).pad(12) + 1.5  # keep the constant term away from 0
    assert a.exp().log().max_abs_diff(a) < 1e-12
    assert a.log().exp().max_abs_diff(a) < 1e-12


def test_pow_minus_one_is_geometric():
    p = TruncatedSeries([1, -1]).pad(20).pow(-1)
    assert np.allclose(p.coeffs, 1.0, atol=1e-13)


def test_pow_half_rising_factorial_oracle():
    # oracle: (1-z)^{-c} has coefficients given by c_{n+1} = c_n (c+n)/(n+1)
    def oracle(c, order):
        out = np.empty(order + 1, dtype=complex)
        out[0] = 1.0
        for n in range(order):
            out[n + 1] = out[n] * (c + n) / (n + 1)
        return out

    p = TruncatedSeries([1, -1]).pad(30).pow(-0.5)
    want = oracle(0.5, 30)
    assert np.max(np.abs(p.coeffs - want)) < 1e-13
    assert abs(p.coeffs[1] - 0.5) < 1e-15 and abs(p.coeffs[2] - 0.375) < 1e-15


@settings(max_examples=30, deadline=None)
@given(
    st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False),
)
def test_pow_additivity(c1, c2):
    a = TruncatedSeries([1.0, -0.4, 0.2j]).pad(16)
    lhs = a.pow(c1 + c2)
    rhs = a.pow(c1) * a.pow(c2)
    assert lhs.max_abs_diff(rhs) < 1e-10


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------


def test_compose_with_zero_gives_constant():
    a = TruncatedSeries([3.0, 2.0, 1.0]).pad(6)
    res = a.compose(TruncatedSeries.zero(6))
    assert np.allclose(res.coeffs, [3, 0, 0, 0, 0, 0, 0], atol=0)


def test_compose_geometric_with_z_squared():
    geo = geometric(12)
    zsq = TruncatedSeries([0, 0, 1]).pad(12)
    res = geo.compose(zsq)
    want = np.array([1 if n % 2 == 0 else 0 for n in range(13)], dtype=complex)
    assert np.allclose(res.coeffs, want, atol=1e-14)


def test_compose_nonzero_inner_constant_rejected():
    with pytest.raises(NonzeroInnerConstantTerm):
        geometric(4).compose(TruncatedSeries([0.5, 1]).pad(4))


def test_compose_against_rational_expansion_oracle():
    # (1/(1-w)) at w = z/(2-z) equals (2-z)/(2-2z); direct expansion gives
    # coefficients [1, 1/2, 1/2, 1/2, ...]
    order = 40
    geo = geometric(order)
    inner = TruncatedSeries(
        np.concatenate(([0.0], 0.5 ** np.arange(1, order + 1)))
    )
    res = geo.compose(inner)
    want = np.full(order + 1, 0.5, dtype=complex)
    want[0] = 1.0
    assert np.max(np.abs(res.coeffs - want)) < 1e-12


# ---------------------------------------------------------------------------
# evaluation and tails
# ---------------------------------------------------------------------------


def test_eval_geometric_at_half():
    s = geometric(60)
    assert abs(s.eval_at(0.5, 0.6) - 2.0) < 1e-15


def test_eval_at_zero_returns_constant_term():
    s = TruncatedSeries([2.5 + 1j, 3, 4])
    assert s.eval_at(0.0, 0.5) == 2.5 + 1j


def test_eval_radius_guard():
    s = geometric(10)
    with pytest.raises(RadiusExceeded):
        s.eval_at(0.7, 0.5)
    with pytest.raises(RadiusExceeded):
        s.eval_at(0.5, 1.0)


def test_eval_on_circle_matches_pointwise():
    rng = np.random.default_rng(5)
    s = TruncatedSeries(rng.normal(size=40) + 1j * rng.normal(size=40))
    r, n = 0.7, 16
    zs = r * np.exp(2j * np.pi * np.arange(n) / n)
    direct = s.eval_at(zs, 0.8)
    fft = s.eval_on_circle(r, n)
    assert np.max(np.abs(direct - fft)) < 1e-12


def test_tail_bound_geometric_example():
    s = geometric(60)
    tb = s.tail_bound(0.5)
    true_tail = 0.5**61 / 0.5
    assert tb >= true_tail
    assert tb <= 1e-17


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=0.1, max_value=10.0),
    st.floats(min_value=0.05, max_value=1.2),
    st.floats(min_value=0.05, max_value=0.95),
)
def test_tail_bound_upper_bounds_geometric_series(scale, q, r):
    # genuine upper bound for series with exactly geometric coefficients
    if q * r >= 0.995:
        return
    order = 48
    s = TruncatedSeries(scale * q ** np.arange(order + 1))
    true_tail = scale * (q * r) ** (order + 1) / (1 - q * r)
    assert s.tail_bound(r) >= true_tail


def test_serialization_roundtrip():
    rng = np.random.default_rng(11)
    s = TruncatedSeries(rng.normal(size=9) + 1j * rng.normal(size=9))
    back = TruncatedSeries.from_pairs(s.to_pairs())
    assert np.array_equal(back.coeffs, s.coeffs)


def test_chebyshev_radii_shape():
    r = chebyshev_radii(32, 0.9)
    assert r.shape == (32,)
    assert np.all((0 < r) & (r < 0.9))
    assert np.all(np.diff(r) > 0)
    # clustering: the last gap is the smallest
    assert np.diff(r)[-1] < np.diff(r)[0]


def test_default_order_constant():
    assert DEFAULT_ORDER == 256
