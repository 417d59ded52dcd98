from __future__ import annotations

import math

import numpy as np
import pytest

from defosc.scheme import (
    boson,
    custom_phi,
    mu_oscillator,
    nonlinearity_f,
    parse_scheme,
    phi,
    phi_factorial,
    pq,
    q_oscillator,
    symmetric_q,
    tsallis,
)


def test_phi_zero_is_zero_everywhere():
    schemes = [
        boson(),
        q_oscillator(1.7),
        symmetric_q(2.0),
        pq(2.0, 0.5),
        tsallis(1.5),
        mu_oscillator(0.4),
        custom_phi([0.0, 1.0, 3.0]),
    ]
    for sch in schemes:
        assert phi(sch, 0) == 0.0


def test_phi_one_is_one_for_normalized_families():
    for sch in (boson(), q_oscillator(1.7), symmetric_q(2.0), pq(2.0, 0.5), tsallis(1.3)):
        assert phi(sch, 1) == 1.0


def test_boson_numbers_are_plain_integers():
    sch = boson()
    for n in range(12):
        assert phi(sch, n) == float(n)


@pytest.mark.parametrize(
    "q,n,value",
    [
        (2.0, 2, 3.0),  # 1 + 2
        (2.0, 3, 7.0),  # 1 + 2 + 4
        (0.5, 3, 1.75),  # 1 + 1/2 + 1/4
    ],
)
def test_q_oscillator_numbers(q, n, value):
    assert phi(q_oscillator(q), n) == pytest.approx(value, rel=1e-14)


def test_symmetric_q_number():
    # (q^n - q^-n)/(q - q^-1) at q=2, n=2: (4 - 1/4)/(2 - 1/2)
    assert phi(symmetric_q(2.0), 2) == pytest.approx(2.5, rel=1e-14)


def test_pq_number():
    # (p^n - q^n)/(p - q) at p=2, q=0.5, n=2
    assert phi(pq(2.0, 0.5), 2) == pytest.approx(2.5, rel=1e-14)


@pytest.mark.parametrize(
    "q,n,value",
    [
        (1.5, 2, 4.0 / 3.0),
        (1.5, 3, 1.5),
        (1.5, 4, 1.6),
        (2.0, 5, 1.0),
    ],
)
def test_tsallis_numbers(q, n, value):
    assert phi(tsallis(q), n) == pytest.approx(value, rel=1e-15)


def test_tsallis_q2_collapses_to_one_exactly():
    sch = tsallis(2.0)
    for n in range(1, 40):
        assert phi(sch, n) == 1.0


def test_tsallis_q1_is_boson_exactly():
    sch = tsallis(1.0)
    for n in range(20):
        assert phi(sch, n) == float(n)


def test_tsallis_pole_raises():
    # 1 + (q-1)(n-1) = 0 at q = 0.5, n = 3
    with pytest.raises(ZeroDivisionError, match="n = 3"):
        phi(tsallis(0.5), 3)


def test_mu_number():
    assert phi(mu_oscillator(0.5), 2) == pytest.approx(1.0, rel=1e-15)
    assert phi(mu_oscillator(0.0), 7) == 7.0


def test_custom_table_lookup_and_bounds():
    sch = custom_phi([0.0, 1.0, 2.5, 3.5])
    assert phi(sch, 2) == 2.5
    with pytest.raises(ValueError, match="ends at n = 3"):
        phi(sch, 4)


def test_custom_table_from_mapping():
    sch = custom_phi({0: 0.0, 1: 1.0, 2: 2.0})
    assert sch.table == (0.0, 1.0, 2.0)
    with pytest.raises(ValueError, match="keys"):
        custom_phi({0: 0.0, 2: 1.0})


@pytest.mark.parametrize(
    "build",
    [
        lambda: q_oscillator(1.0),
        lambda: q_oscillator(-0.2),
        lambda: symmetric_q(0.0),
        lambda: pq(1.5, 1.5),
        lambda: pq(math.inf, 1.0),
        lambda: tsallis(0.0),
        lambda: tsallis(2.5),
        lambda: mu_oscillator(-0.1),
        lambda: custom_phi([0.0]),
        lambda: custom_phi([0.5, 1.0]),
        lambda: custom_phi([0.0, -1.0]),
        lambda: custom_phi([0.0, math.nan]),
    ],
)
def test_invalid_parameters_rejected(build):
    with pytest.raises(ValueError):
        build()


def test_index_validation():
    sch = boson()
    with pytest.raises(ValueError):
        phi(sch, -1)
    with pytest.raises(TypeError):
        phi(sch, 1.5)
    with pytest.raises(TypeError):
        phi(sch, True)
    assert phi(sch, np.int64(3)) == 3.0


@pytest.mark.parametrize(
    "text,descriptor",
    [
        ("boson", "boson"),
        ("tsallis:q=1.5", "tsallis:q=1.5"),
        ("tsallis:q=2.0", "tsallis:q=2"),
        ("qosc:q=0.5", "qosc:q=0.5"),
        ("symq:q=1.25", "symq:q=1.25"),
        ("pq:p=1.2,q=0.8", "pq:p=1.2,q=0.8"),
        ("pq:q=0.8,p=1.2", "pq:p=1.2,q=0.8"),
        ("mu:mu=0.3", "mu:mu=0.3"),
        ("custom:phi=0;1;2.5", "custom:phi=0;1;2.5"),
    ],
)
def test_parse_scheme_round_trips(text, descriptor):
    sch = parse_scheme(text)
    assert sch.descriptor() == descriptor
    assert parse_scheme(sch.descriptor()) == sch


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("gauss", "unknown scheme"),
        ("tsallis", "missing parameter"),
        ("tsallis:p=1.5", "missing parameter"),
        ("tsallis:q=1.5,p=2", "unknown parameter"),
        ("tsallis:q=1.5,q=1.6", "duplicate"),
        ("tsallis:q=abc", "not a number"),
        ("pq:p=2", "missing parameter"),
        ("custom:phi=0;oops", "not a number"),
        ("custom:q=1", "exactly one parameter"),
        ("qosc:q", "malformed"),
    ],
)
def test_parse_scheme_rejects(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_scheme(text)


def test_phi_factorial_boson_is_plain_factorial():
    sch = boson()
    assert phi_factorial(sch, 0) == 1.0
    assert phi_factorial(sch, 10) == float(math.factorial(10))


def test_phi_factorial_tsallis():
    # phi(1) phi(2) phi(3) at q=1.5: 1 * 4/3 * 3/2
    assert phi_factorial(tsallis(1.5), 3) == pytest.approx(2.0, rel=1e-15)


def test_phi_factorial_log_domain_matches_log():
    sch = q_oscillator(1.3)
    want = math.log(phi_factorial(sch, 12))
    assert phi_factorial(sch, 12, log_domain=True) == pytest.approx(want, rel=1e-13)


def test_phi_factorial_overflow_suggests_log_domain():
    sch = q_oscillator(2.0)  # phi(n)! ~ 2^(n(n-1)/2)
    with pytest.raises(OverflowError, match="log_domain"):
        phi_factorial(sch, 80)
    log_value = phi_factorial(sch, 80, log_domain=True)
    # log of prod (2^k - 1) is log(2) * sum_{k<=80} k minus a constant ~1.24
    assert log_value == pytest.approx(math.log(2.0) * 80 * 81 / 2, rel=1e-3)


def test_phi_factorial_log_domain_rejects_zero_factor():
    with pytest.raises(ValueError):
        phi_factorial(custom_phi([0.0, 1.0, 0.0, 2.0]), 3, log_domain=True)


def test_nonlinearity_f():
    assert nonlinearity_f(boson(), 5) == 1.0
    assert nonlinearity_f(tsallis(1.5), 2) == pytest.approx(math.sqrt(2.0 / 3.0), rel=1e-15)
    with pytest.raises(ValueError):
        nonlinearity_f(boson(), 0)
    with pytest.raises(ValueError):
        nonlinearity_f(pq(0.5, -2.0), 2)  # phi(2) = -1.5


def test_scheme_is_hashable_and_frozen():
    sch = tsallis(1.5)
    assert hash(sch) == hash(tsallis(1.5))
    with pytest.raises(AttributeError):
        sch.q = 1.6
