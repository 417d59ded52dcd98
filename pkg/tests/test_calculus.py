from __future__ import annotations

import math

import pytest

from defosc.calculus import (
    QuadratureError,
    QuadratureSpec,
    SampledFunction,
    bargmann_inner_product,
    derivative_on_series,
    jackson_derivative,
    pq_derivative,
    sampled_from_series,
    symmetric_derivative,
    tsallis_derivative_quadrature,
    tsallis_derivative_series,
    tsallis_integral_series,
)
from defosc.scheme import boson, phi, phi_factorial, pq, q_oscillator, symmetric_q, tsallis
from defosc.series import PowerSeries, tsallis_exp_closed

CUBE = sampled_from_series(PowerSeries([0.0, 0.0, 0.0, 1.0]))


# --- difference quotients ---------------------------------------------------


def test_jackson_on_monomial():
    # x^3 -> (1 - q^3)/(1 - q) x^2
    got = jackson_derivative(CUBE, 2.0, 0.5)
    assert got == pytest.approx(phi(q_oscillator(0.5), 3) * 4.0, rel=1e-13)
    assert got == pytest.approx(1.75 * 4.0, rel=1e-13)


def test_symmetric_on_monomial():
    sq = sampled_from_series(PowerSeries([0.0, 0.0, 1.0]))
    got = symmetric_derivative(sq, 3.0, 2.0)
    assert got == pytest.approx(2.5 * 3.0, rel=1e-13)


def test_pq_on_monomial():
    sq = sampled_from_series(PowerSeries([0.0, 0.0, 1.0]))
    got = pq_derivative(sq, 3.0, 2.0, 0.5)
    assert got == pytest.approx(2.5 * 3.0, rel=1e-13)


def test_quotients_reject_x_zero():
    for call in (
        lambda: jackson_derivative(CUBE, 0.0, 0.5),
        lambda: symmetric_derivative(CUBE, 0.0, 2.0),
        lambda: pq_derivative(CUBE, 0.0, 2.0, 0.5),
    ):
        with pytest.raises(ValueError, match="series form"):
            call()


def test_quotient_parameter_validation():
    with pytest.raises(ValueError):
        jackson_derivative(CUBE, 1.0, 1.0)
    with pytest.raises(ValueError):
        jackson_derivative(CUBE, 1.0, -0.5)
    with pytest.raises(ValueError):
        symmetric_derivative(CUBE, 1.0, 0.0)
    with pytest.raises(ValueError):
        pq_derivative(CUBE, 1.0, 0.7, 0.7)


def test_finite_difference_fallback():
    f = SampledFunction(eval=math.sin)
    assert f.derivative(0.3) == pytest.approx(math.cos(0.3), abs=1e-9)
    g = SampledFunction(eval=math.sin, deriv=math.cos)
    assert g.derivative(0.3) == math.cos(0.3)


def test_sampled_from_series_exact_derivative():
    f = sampled_from_series(PowerSeries([1.0, 2.0, 3.0]))
    assert f.eval(2.0) == 1.0 + 4.0 + 12.0
    assert f.deriv(2.0) == 2.0 + 12.0
    const = sampled_from_series(PowerSeries([5.0]))
    assert const.deriv(3.0) == 0.0


# --- coefficient forms -------------------------------------------------------


def test_tsallis_series_derivative_monomial_law():
    d = tsallis_derivative_series(PowerSeries([0.0, 0.0, 0.0, 1.0]), 1.5)
    assert d.coeffs == (0.0, 0.0, phi(tsallis(1.5), 3))
    assert d.coeffs[2] == 1.5


def test_tsallis_series_derivative_pole_propagates():
    # q = 0.5 pins [3] at a pole; a live x^3 coefficient must surface it
    with pytest.raises(ZeroDivisionError):
        tsallis_derivative_series(PowerSeries([0.0, 0.0, 0.0, 2.0]), 0.5)
    # but a zero coefficient never touches the pole
    d = tsallis_derivative_series(PowerSeries([0.0, 1.0, 0.0, 0.0, 1.0]), 0.5)
    assert d.coeffs[0] == 1.0
    assert d.coeffs[3] == phi(tsallis(0.5), 4)


def test_tsallis_integral_pole_zeroes_coefficient():
    # integrating x^2 at q = 0.5 divides by [3], which is a pole
    s = tsallis_integral_series(PowerSeries([0.0, 0.0, 1.0]), 0.5)
    assert s.coeffs == (0.0, 0.0, 0.0, 0.0)


def test_fundamental_theorem_on_coefficients():
    src = PowerSeries([1.0, -2.0, 0.5, 3.0])
    for q in (1.2, 1.5, 2.0):
        back = tsallis_derivative_series(tsallis_integral_series(src, q), q)
        for n in range(4):
            assert back[n] == pytest.approx(src[n], rel=1e-14)


def test_generic_series_derivative_agrees_with_quotient():
    s = PowerSeries([2.0, 0.0, 3.0, 1.0])
    f = sampled_from_series(s)
    for scheme, quotient in (
        (q_oscillator(0.5), lambda x: jackson_derivative(f, x, 0.5)),
        (symmetric_q(2.0), lambda x: symmetric_derivative(f, x, 2.0)),
        (pq(2.0, 0.5), lambda x: pq_derivative(f, x, 2.0, 0.5)),
    ):
        d = derivative_on_series(s, scheme)
        for x in (-1.3, 0.4, 1.7):
            assert d(x) == pytest.approx(quotient(x), rel=1e-12)


def test_generic_series_derivative_boson_is_ordinary():
    s = PowerSeries([2.0, 0.0, 3.0, 1.0])
    d = derivative_on_series(s, boson())
    assert d.coeffs == (0.0, 6.0, 3.0)


# --- quadrature ---------------------------------------------------------------


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(base_nodes=1)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_refinements=0)


def test_quadrature_q1_is_plain_derivative():
    f = SampledFunction(eval=math.sin, deriv=math.cos)
    assert tsallis_derivative_quadrature(f, 0.7, 1.0) == math.cos(0.7)


def test_quadrature_rejects_q_outside_window():
    f = SampledFunction(eval=math.sin, deriv=math.cos)
    with pytest.raises(ValueError, match="series form"):
        tsallis_derivative_quadrature(f, 0.5, 0.9)
    with pytest.raises(ValueError, match="series form"):
        tsallis_derivative_quadrature(f, 0.5, 2.1)


def test_quadrature_monomial_law():
    # D x^3 = [3] x^2 for the deformed bracket
    got = tsallis_derivative_quadrature(CUBE, 0.8, 1.5)
    assert got == pytest.approx(phi(tsallis(1.5), 3) * 0.64, abs=1e-9)


def _exp_eigenfunction(q: float, k: float) -> SampledFunction:
    # F(x) = e_q(kx) with F'(x) = k e_q(kx)^q
    return SampledFunction(
        eval=lambda x: tsallis_exp_closed(q, k * x),
        deriv=lambda x: k * tsallis_exp_closed(q, k * x) ** q,
    )


def test_quadrature_eigenfunction_property():
    q, k, x = 1.5, 0.7, 0.5
    f = _exp_eigenfunction(q, k)
    want = k * tsallis_exp_closed(q, k * x)
    assert tsallis_derivative_quadrature(f, x, q) == pytest.approx(want, abs=1e-8)


def test_quadrature_q2_closed_point():
    # q = 2, k = 0.5, x = 0.5: eigenvalue relation gives 0.5 / (1 - 0.25) = 2/3
    f = _exp_eigenfunction(2.0, 0.5)
    got = tsallis_derivative_quadrature(f, 0.5, 2.0)
    assert got == pytest.approx(2.0 / 3.0, abs=1e-9)


def test_quadrature_fallback_without_exact_derivative():
    q, k, x = 1.5, 0.7, 0.5
    f = SampledFunction(eval=lambda t: tsallis_exp_closed(q, k * t))
    got = tsallis_derivative_quadrature(f, x, q)
    assert got == pytest.approx(k * tsallis_exp_closed(q, k * x), abs=1e-5)


def test_quadrature_gives_up_on_singular_derivative():
    # F' ~ u^-1.98 makes the t -> 0 tail creep: each refinement still moves
    # the estimate by O(1), so a short budget must end in an error
    f = SampledFunction(eval=lambda x: x, deriv=lambda u: u**-1.98)
    spec = QuadratureSpec(max_refinements=5)
    with pytest.raises(QuadratureError) as err:
        tsallis_derivative_quadrature(f, 1.0, 1.5, spec)
    lo, hi = err.value.estimates
    assert isinstance(lo, float) and isinstance(hi, float)
    assert lo != hi


def test_quadrature_agrees_with_series_route():
    s = PowerSeries([0.0, 2.0, -1.0, 0.5, 0.0, 0.25])
    f = sampled_from_series(s)
    for q in (1.2, 1.5, 2.0):
        d = tsallis_derivative_series(s, q)
        for x in (0.2, 0.9):
            got = tsallis_derivative_quadrature(f, x, q)
            assert got == pytest.approx(d(x), abs=1e-9)


# --- inner product ------------------------------------------------------------


def _unit_monomial(scheme, n: int) -> PowerSeries:
    c = [0.0] * (n + 1)
    c[n] = 1.0 / math.sqrt(phi_factorial(scheme, n))
    return PowerSeries(c)


@pytest.mark.parametrize("scheme", [boson(), tsallis(1.5), q_oscillator(1.2)], ids=str)
def test_bargmann_orthonormal_monomials(scheme):
    for n in range(6):
        for m in range(6):
            v = bargmann_inner_product(_unit_monomial(scheme, n), _unit_monomial(scheme, m), scheme)
            assert v == pytest.approx(1.0 if n == m else 0.0, abs=1e-13)


def test_bargmann_reproduces_exponential_norm():
    # <e_phi(a x), e_phi(a x)> = e_phi(|a|^2), here truncated at order 40
    for q, a in ((1.5, 0.9), (2.0, 0.7)):
        s = tsallis(q)
        coeffs = [a**n / phi_factorial(s, n) for n in range(41)]
        f = PowerSeries(coeffs)
        want = tsallis_exp_closed(q, a * a)
        assert bargmann_inner_product(f, f, s).real == pytest.approx(want, rel=1e-12)


def test_bargmann_boson_exponential():
    coeffs = [1.0 / math.factorial(n) for n in range(31)]
    f = PowerSeries(coeffs)
    v = bargmann_inner_product(f, f, boson())
    assert v.real == pytest.approx(math.e, rel=1e-12)
    assert v.imag == 0.0


def test_bargmann_conjugates_left_argument():
    f = PowerSeries([0.0, 1.0j])
    g = PowerSeries([0.0, 1.0])
    assert bargmann_inner_product(f, g, boson()) == -1.0j
    assert bargmann_inner_product(g, f, boson()) == 1.0j


def test_bargmann_overflow_names_remedy():
    f = PowerSeries([1.0] * 60)
    with pytest.raises(OverflowError, match="rescale"):
        bargmann_inner_product(f, f, q_oscillator(2.0))
