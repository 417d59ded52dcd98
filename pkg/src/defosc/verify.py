"""Self-checking identity suites over the deformed-oscillator stack.

Each case states a mathematical identity, measures the worst residual over
a fixed probe grid, and compares it against a tolerance chosen for float64.
Suites: series, spectrum, coherent, calculus.  A focus scheme extends the
tsallis parameter grids (tsallis focus) or adds a scale-aware commutator
case (any other focus).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from . import calculus, coherent, fock, series
from .scheme import (
    DeformationScheme,
    boson,
    custom_phi,
    mu_oscillator,
    phi,
    phi_factorial,
    pq,
    q_oscillator,
    symmetric_q,
    tsallis,
)

__all__ = ["VerifyCase", "VerificationReport", "SUITE_NAMES", "run_suite", "run_all"]

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class VerifyCase:
    name: str
    statement: str
    max_residual: float
    tolerance: float

    def __post_init__(self):
        # numpy scalars sneak in through matrix cases; pin plain floats
        object.__setattr__(self, "max_residual", float(self.max_residual))
        object.__setattr__(self, "tolerance", float(self.tolerance))

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    cases: tuple[VerifyCase, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1.0)


def _geom(lo: float, hi: float, m: int) -> list[float]:
    return [lo * (hi / lo) ** (i / (m - 1)) for i in range(m)]


def _tsallis_grid(extra: float | None) -> tuple[float, ...]:
    qs = [1.25, 1.5, 2.0]
    if extra is not None and extra not in qs:
        qs.append(extra)
    return tuple(sorted(qs))


# slow-growth parameters: every phi along these ladders stays small enough
# that the commutator identity can be asked for at 1e-12 absolute
def _battery() -> list[DeformationScheme]:
    return [
        boson(),
        q_oscillator(1.05),
        symmetric_q(1.05),
        pq(1.02, 0.98),
        tsallis(1.25),
        tsallis(1.5),
        tsallis(2.0),
        mu_oscillator(0.3),
    ]


_CUSTOM_TABLE = (0.0, 1.0, 2.5, 3.5)


# --- series -----------------------------------------------------------------


def _case_series_closed(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        sch = tsallis(q)
        r = series.radius_of_convergence(sch)
        hi = 0.9 * r if math.isfinite(r) else 50.0
        for x in _geom(1e-3, hi, 12):
            got, _ = series.phi_exp_series(sch, x)
            want = series.tsallis_exp_closed(q, x)
            worst = max(worst, _rel(float(got.real if isinstance(got, complex) else got), want))
    return VerifyCase(
        "series-closed-agreement",
        "sum x^n/phi(n)! equals (1+(1-q)x)^(1/(1-q)) on 0 < x < radius",
        worst,
        1e-10,
    )


def _case_coefficient_ratio(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        sch = tsallis(q)
        prev = 1.0
        for n in range(1, 21):
            try:
                cur = phi_factorial(sch, n)
            except (ZeroDivisionError, OverflowError):
                break
            worst = max(worst, _rel(cur / prev, phi(sch, n)))
            prev = cur
    return VerifyCase(
        "coefficient-ratio",
        "phi(n)!/phi(n-1)! recovers phi(n) term by term",
        worst,
        1e-12,
    )


def _case_borges(qs) -> VerifyCase:
    worst = 0.0
    for q in (*qs, 0.5):
        for n in range(1, 21):
            lhs = series.borges_Q(q, n)
            rhs = (1.0 + (q - 1.0) * n) * series.borges_Q(q, n - 1)
            worst = max(worst, _rel(lhs, rhs))
            # the product telescopes against the deformed factorial
            try:
                fact = phi_factorial(tsallis(q), n)
            except ZeroDivisionError:
                continue
            worst = max(worst, _rel(fact * series.borges_Q(q, n - 1), math.factorial(n)))
    return VerifyCase(
        "borges-recurrence",
        "Q_n = (1+(q-1)n) Q_{n-1} and phi(n)! Q_{n-1} = n!",
        worst,
        1e-12,
    )


def _case_exp_compose() -> VerifyCase:
    worst = 0.0
    got = series.exp_series_compose(series.PowerSeries([0.0, 1.0]), 12)
    for n in range(13):
        worst = max(worst, _rel(float(got[n].real), 1.0 / math.factorial(n)))
    got = series.exp_series_compose(series.PowerSeries([0.0, 0.0, 1.0]), 12)
    for n in range(13):
        want = 1.0 / math.factorial(n // 2) if n % 2 == 0 else 0.0
        worst = max(worst, _rel(float(got[n].real), want))
    return VerifyCase(
        "exp-of-series-coefficients",
        "exp(x) and exp(x^2) coefficients come out as 1/n! and 1/(n/2)!",
        worst,
        1e-12,
    )


def _case_pochhammer() -> VerifyCase:
    worst = 0.0
    for tau in (0.5, 1.5, 3.0):
        rep = series.verify_pochhammer_identity(tau, 18)
        worst = max(worst, rep.max_residual)
    return VerifyCase(
        "pochhammer-identity",
        "(tau)_n = (n-1)! tau sum_{j<n} (tau)_j / j!",
        worst,
        1e-12,
    )


def _case_hyp1f0() -> VerifyCase:
    worst = 0.0
    for a in (0.5, 2.0, 4.0):
        for z in (-0.5, -0.2, 0.1, 0.55, 0.9):
            worst = max(worst, _rel(series.hyp1F0(a, z), (1.0 - z) ** (-a)))
    return VerifyCase(
        "hyp1f0-reduction",
        "1F0(a; z) = (1-z)^(-a) on |z| < 1",
        worst,
        1e-10,
    )


def _case_hyp2f1_qlog(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        for z in (-0.5, -0.25, 0.1, 0.4, 0.6):
            lhs = series.tsallis_log(q, 1.0 + z)
            rhs = z * series.hyp2F1(1.0, q, 2.0, -z)
            worst = max(worst, _rel(lhs, rhs))
    return VerifyCase(
        "hyp2f1-qlog",
        "ln_q(1+z) = z 2F1(1, q; 2; -z)",
        worst,
        1e-10,
    )


def _case_hyp_reduction() -> VerifyCase:
    worst = 0.0
    for a in (0.5, 2.5):
        for b in (1.5, 3.0):
            for z in (-0.5, 0.3, 0.7):
                worst = max(worst, _rel(series.hyp2F1(a, b, b, z), series.hyp1F0(a, z)))
    return VerifyCase(
        "hyp1f0-as-hyp2f1",
        "2F1(a, b; b; z) = 1F0(a; z)",
        worst,
        1e-10,
    )


def _case_roundtrip(qs) -> VerifyCase:
    worst = 0.0
    for q in (*qs, 0.5, 0.75):
        if q > 1.0:
            xs = _geom(1e-3, 0.9 / (q - 1.0), 8) + [-0.5, -2.0]
        else:
            xs = _geom(1e-3, 10.0, 8) + [-0.4 / (1.0 - q) if q < 1.0 else -2.0]
        for x in xs:
            y = series.tsallis_exp_closed(q, x)
            if not (0.0 < y < math.inf):
                continue
            worst = max(worst, abs(series.tsallis_log(q, y) - x) / max(1.0, abs(x)))
    return VerifyCase(
        "exp-log-roundtrip",
        "ln_q(e_q(x)) = x wherever e_q(x) > 0",
        worst,
        1e-12,
    )


def _case_q_gaussian() -> VerifyCase:
    worst = 0.0
    for q in (1.01, 1.02, 1.05):
        for x in (0.0, 0.25, 0.5, 0.75, 1.0):
            approx, exact = series.q_gaussian_approx(q, 1.0, x)
            worst = max(worst, _rel(approx, exact))
    return VerifyCase(
        "q-gaussian-window",
        "the three-term exponential tracks e_q(-x^2) to O((q-1)^3) for q <= 1.05, |x| <= 1",
        worst,
        1e-4,
    )


def _case_homomorphism(qs) -> VerifyCase:
    worst = 0.0
    for q in (*qs, 0.5):
        scale = min(1.0, 0.9 / abs(q - 1.0)) if q != 1.0 else 1.0
        pts = [-0.3 * scale, 0.2 * scale, 0.5 * scale]
        for x in pts:
            for y in pts:
                lhs = series.tsallis_exp_closed(q, x) * series.tsallis_exp_closed(q, y)
                rhs = series.tsallis_exp_closed(q, x + y + (1.0 - q) * x * y)
                worst = max(worst, _rel(lhs, rhs))
    return VerifyCase(
        "homomorphism",
        "e_q(x) e_q(y) = e_q(x + y + (1-q) x y)",
        worst,
        1e-12,
    )


def _suite_series(focus: DeformationScheme | None) -> VerificationReport:
    extra = focus.q if focus is not None and focus.kind == "tsallis" else None
    qs = _tsallis_grid(extra)
    cases = [
        _case_series_closed(qs),
        _case_coefficient_ratio(qs),
        _case_borges(qs),
        _case_exp_compose(),
        _case_pochhammer(),
        _case_hyp1f0(),
        _case_hyp2f1_qlog(qs),
        _case_hyp_reduction(),
        _case_roundtrip(qs),
        _case_q_gaussian(),
        _case_homomorphism(qs),
    ]
    return VerificationReport("series", tuple(sorted(cases, key=lambda c: c.name)))


# --- spectrum ---------------------------------------------------------------


def _case_ground_level() -> VerifyCase:
    worst = 0.0
    for sch in _battery():
        if sch.kind == "mu":
            continue  # phi(1) = 1/(1+mu) there; mu-ground-level covers it
        worst = max(worst, abs(fock.energy_level(sch, 0) - 0.5))
    return VerifyCase(
        "ground-level-exact",
        "E_0 = 1/2 exactly for every family with phi(1) = 1",
        worst,
        0.0,
    )


def _case_first_level(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        worst = max(worst, abs(fock.energy_level(tsallis(q), 1) - (0.5 + 1.0 / q)))
    return VerifyCase(
        "first-level",
        "E_1 = 1/2 + 1/q",
        worst,
        1e-12,
    )


def _case_two_level() -> VerifyCase:
    sch = tsallis(2.0)
    worst = abs(fock.energy_level(sch, 0) - 0.5)
    for n in range(1, 41):
        worst = max(worst, abs(fock.energy_level(sch, n) - 1.0))
    return VerifyCase(
        "two-level-collapse",
        "at q = 2 the ladder collapses onto the two levels 1/2 and 1",
        worst,
        0.0,
    )


def _case_band_top(qs) -> VerifyCase:
    worst = 0.0
    n = 10_000
    for q in qs:
        if q <= 1.0:
            continue
        rep = fock.spectrum_report(tsallis(q), n)
        top = 1.0 / (q - 1.0)
        worst = max(worst, abs(rep.band_top - top))
        bound = 2.0 * (2.0 - q) / ((q - 1.0) ** 2 * n)
        worst = max(worst, max(0.0, abs(rep.levels[-1] - top) - bound))
    mu = 0.3
    rep = fock.spectrum_report(mu_oscillator(mu), n)
    worst = max(worst, abs(rep.band_top - 1.0 / mu))
    worst = max(worst, max(0.0, abs(rep.levels[-1] - 1.0 / mu) - 1.1 / (mu * mu * n)))
    return VerifyCase(
        "band-top-limit",
        "E_n climbs to lim phi = 1/(q-1) (tsallis) and 1/mu (mu) like 1/n",
        worst,
        1e-12,
    )


def _case_gap_positive() -> VerifyCase:
    worst = 0.0
    for sch in (tsallis(1.25), tsallis(1.5), tsallis(1.99), mu_oscillator(0.3)):
        rep = fock.spectrum_report(sch, 10_000)
        worst = max(worst, max(0.0, -min(rep.gaps)))
    return VerifyCase(
        "gap-positivity",
        "E_{n+1} - E_n > 0 all the way up for q < 2 and mu >= 0",
        worst,
        0.0,
    )


def _case_gap_closed(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        if q <= 1.0:
            continue
        rep = fock.spectrum_report(tsallis(q), 101)
        for n, gap in enumerate(rep.gaps[:101]):
            den = (q - 1.0) ** 2 * n * n + 2.0 * (q - 1.0) * n + q * (2.0 - q)
            if den == 0.0:
                continue  # q = 2, n = 0 only
            worst = max(worst, _rel(gap, (2.0 - q) / den))
    return VerifyCase(
        "gap-closed-form",
        "E_{n+1} - E_n = (2-q) / ((q-1)^2 n^2 + 2(q-1) n + q(2-q))",
        worst,
        1e-10,
    )


def _case_combined_rational(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        if q <= 1.0:
            continue
        for n in range(51):
            num = 2.0 * (q - 1.0) * n * n + 2.0 * n + 2.0 - q
            den = 2.0 * ((q - 1.0) ** 2 * n * n + (3.0 - q) * (q - 1.0) * n + 2.0 - q)
            if den == 0.0:
                continue
            worst = max(worst, _rel(fock.energy_level(tsallis(q), n), num / den))
    return VerifyCase(
        "combined-rational-form",
        "E_n = (2(q-1)n^2 + 2n + 2-q) / (2((q-1)^2 n^2 + (3-q)(q-1)n + 2-q))",
        worst,
        1e-12,
    )


def _case_mu_gap() -> VerifyCase:
    worst = 0.0
    for mu in (0.3, 1.0):
        rep = fock.spectrum_report(mu_oscillator(mu), 51)
        for n, gap in enumerate(rep.gaps):
            want = 1.0 / (mu * mu * n * n + 2.0 * mu * (mu + 1.0) * n + 2.0 * mu + 1.0)
            worst = max(worst, _rel(gap, want))
    return VerifyCase(
        "mu-gap-closed-form",
        "E_{n+1} - E_n = 1 / (mu^2 n^2 + 2 mu(mu+1) n + 2 mu + 1)",
        worst,
        1e-12,
    )


def _case_mu_ground() -> VerifyCase:
    e0 = fock.energy_level(mu_oscillator(1.0), 0)
    # the definition pins E_0 = phi(1)/2 = 1/4 at mu = 1; a sixth is a
    # misprint the rational form must stay away from
    worst = max(abs(e0 - 0.25), max(0.0, 0.05 - abs(e0 - 1.0 / 6.0)))
    return VerifyCase(
        "mu-ground-level",
        "E_0 = 1/(2(1+mu)), hence 1/4 at mu = 1 and never 1/6",
        worst,
        0.0,
    )


def _case_commutator() -> VerifyCase:
    worst = 0.0
    for sch in _battery():
        worst = max(worst, fock.commutator_residual(fock.build_fock(sch, 64)))
    worst = max(
        worst, fock.commutator_residual(fock.build_fock(custom_phi(_CUSTOM_TABLE), 4))
    )
    return VerifyCase(
        "commutator-identity",
        "a a+ - a+ a = diag(phi(n+1) - phi(n)) on the truncated ladder",
        worst,
        1e-12,
    )


def _case_hamiltonian_diag() -> VerifyCase:
    worst = 0.0
    for sch in _battery():
        triple = fock.build_fock(sch, 32)
        h = fock.hamiltonian(triple)
        off = h - np.diag(np.diag(h))
        worst = max(worst, float(np.max(np.abs(off))))
        for n in range(31):
            worst = max(worst, abs(h[n, n] - fock.energy_level(sch, n)))
    return VerifyCase(
        "hamiltonian-diagonal",
        "H = (a a+ + a+ a)/2 is diagonal with E_n entries below the cutoff corner",
        worst,
        1e-12,
    )


def _case_number_operator() -> VerifyCase:
    worst = 0.0
    for sch in _battery():
        t = fock.build_fock(sch, 64)
        comm = t.n_op @ t.a_dagger - t.a_dagger @ t.n_op
        worst = max(worst, float(np.max(np.abs(comm - t.a_dagger))))
    return VerifyCase(
        "number-operator",
        "[N, a+] = a+ on the truncated ladder",
        worst,
        1e-12,
    )


def _case_vacuum_states() -> VerifyCase:
    worst = 0.0
    for sch in _battery():
        t = fock.build_fock(sch, 64)
        for n in (0, 1, 5, 20):
            v = fock.state_from_vacuum(t, n)
            worst = max(worst, abs(float(np.linalg.norm(v)) - 1.0))
    t = fock.build_fock(custom_phi(_CUSTOM_TABLE), 4)
    for n in (0, 1, 3):
        worst = max(worst, abs(float(np.linalg.norm(fock.state_from_vacuum(t, n))) - 1.0))
    return VerifyCase(
        "state-from-vacuum-unit-norm",
        "(a+)^n |0> / sqrt(phi(n)!) has unit norm",
        worst,
        1e-12,
    )


def _case_focus_commutator(focus: DeformationScheme) -> VerifyCase:
    dim = 2
    limit = len(focus.table) if focus.kind == "custom" else 64
    running = 0.0
    for k in range(1, limit):
        try:
            v = phi(focus, k)
        except (OverflowError, ZeroDivisionError, ValueError):
            break
        if v < 0.0 or max(running, v) > 1e6:
            break
        running = max(running, v)
        dim = k + 1
    tol = max(1e-12, 32.0 * _EPS * running)
    worst = fock.commutator_residual(fock.build_fock(focus, dim))
    return VerifyCase(
        "focus-commutator",
        f"a a+ - a+ a = diag(phi(n+1) - phi(n)) for {focus.descriptor()} at dim {dim}",
        worst,
        tol,
    )


def _suite_spectrum(focus: DeformationScheme | None) -> VerificationReport:
    extra = focus.q if focus is not None and focus.kind == "tsallis" else None
    qs = _tsallis_grid(extra)
    cases = [
        _case_ground_level(),
        _case_first_level(qs),
        _case_two_level(),
        _case_band_top(qs),
        _case_gap_positive(),
        _case_gap_closed(qs),
        _case_combined_rational(qs),
        _case_mu_gap(),
        _case_mu_ground(),
        _case_commutator(),
        _case_hamiltonian_diag(),
        _case_number_operator(),
        _case_vacuum_states(),
    ]
    if focus is not None and focus.kind != "tsallis":
        cases.append(_case_focus_commutator(focus))
    return VerificationReport("spectrum", tuple(sorted(cases, key=lambda c: c.name)))


# --- coherent ---------------------------------------------------------------


def _focus_alpha(sch: DeformationScheme, frac: float, phase: complex = 1.0) -> complex:
    r = series.radius_of_convergence(sch)
    y = frac * r if math.isfinite(r) else 2.25
    return phase * math.sqrt(y) / abs(phase)


def _case_eigenvector(qs) -> VerifyCase:
    worst = 0.0
    schemes = [boson()] + [tsallis(q) for q in qs]
    for sch in schemes:
        for phase in (1.0, 0.6 + 0.8j):
            alpha = _focus_alpha(sch, 0.5, phase)
            state = coherent.coherent_state(sch, alpha)
            worst = max(worst, coherent.eigen_residual(state))
    return VerifyCase(
        "eigenvector-residual",
        "a |alpha> = alpha |alpha> on the protected lower half of the cutoff",
        worst,
        1e-12,
    )


def _case_q2_normalization() -> VerifyCase:
    worst = 0.0
    sch = tsallis(2.0)
    for mag in (0.1, 0.5, 0.9, 0.99):
        state = coherent.coherent_state(sch, mag)
        worst = max(worst, abs(state.norm_const**2 + mag * mag - 1.0))
    return VerifyCase(
        "q2-normalization",
        "at q = 2 the squared normalization constant is 1 - |alpha|^2",
        worst,
        1e-14,
    )


def _case_norm_deficit(qs) -> VerifyCase:
    worst = 0.0
    probes = [(boson(), 1.0), (boson(), 1.5)]
    probes += [(tsallis(q), _focus_alpha(tsallis(q), 0.3)) for q in qs]
    for sch, alpha in probes:
        state = coherent.coherent_state(sch, alpha)
        v = state.vector()
        worst = max(worst, abs(float(np.sum(np.abs(v) ** 2)) - 1.0))
    return VerifyCase(
        "normalization-deficit",
        "sum_n |<n|alpha>|^2 = 1 up to a cutoff tail below 1e-10 on this grid",
        worst,
        1e-10,
    )


def _case_deficit_monotone() -> VerifyCase:
    sch = tsallis(1.5)
    alpha = _focus_alpha(sch, 0.8)
    masses = [
        coherent.coherent_state(sch, alpha, dim=d).tail_mass for d in (32, 64, 128)
    ]
    worst = max(0.0, max(b - a for a, b in zip(masses, masses[1:])))
    return VerifyCase(
        "deficit-monotone",
        "tail mass does not grow when the cutoff doubles",
        worst,
        1e-14,
    )


def _case_f_route(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        sch = tsallis(q)
        alpha = _focus_alpha(sch, 0.49, 0.55 + 0.35j)
        state = coherent.coherent_state(sch, alpha, dim=48)
        other = coherent.f_coherent_coefficients(q, alpha, 48)
        for c, d in zip(state.coefficients, other):
            worst = max(worst, abs(c - d) / max(abs(c), abs(d), 1e-300))
    return VerifyCase(
        "f-oscillator-route",
        "alpha^n/sqrt(phi(n)!) equals sqrt(Q_{n-1}) alpha^n/sqrt(n!)",
        worst,
        1e-10,
    )


def _case_expected_n() -> VerifyCase:
    worst = 0.0
    for alpha in (1.2, 0.7 + 0.7j):
        state = coherent.coherent_state(boson(), alpha)
        y = abs(alpha) ** 2
        worst = max(worst, abs(coherent.expected_n(state) - y) / y)
    return VerifyCase(
        "expected-n-closed",
        "the undeformed ladder gives <N> = |alpha|^2",
        worst,
        1e-10,
    )


def _case_vacuum_limit() -> VerifyCase:
    worst = 0.0
    for sch in (boson(), tsallis(1.5)):
        for mag in (0.01, 0.03, 0.1):
            state = coherent.coherent_state(sch, mag)
            p0 = float(np.abs(state.vector()[0]) ** 2)
            y = mag * mag
            worst = max(worst, abs(p0 - (1.0 - y)) / (y * y))
    return VerifyCase(
        "vacuum-limit",
        "1 - |<0|alpha>|^2 = |alpha|^2 + O(|alpha|^4) as alpha -> 0",
        worst,
        0.6,
    )


def _case_residual_stability() -> VerifyCase:
    sch = tsallis(1.5)
    alpha = _focus_alpha(sch, 0.5)
    res = [
        coherent.eigen_residual(coherent.coherent_state(sch, alpha, dim=d))
        for d in (32, 64, 128)
    ]
    worst = max(0.0, max(b - a for a, b in zip(res, res[1:])))
    return VerifyCase(
        "residual-dim-stability",
        "the protected-window residual does not grow when the cutoff doubles",
        worst,
        1e-15,
    )


def _suite_coherent(focus: DeformationScheme | None) -> VerificationReport:
    extra = focus.q if focus is not None and focus.kind == "tsallis" else None
    qs = [q for q in _tsallis_grid(extra) if q > 1.0]
    cases = [
        _case_eigenvector(qs),
        _case_q2_normalization(),
        _case_norm_deficit(qs),
        _case_deficit_monotone(),
        _case_f_route(qs),
        _case_expected_n(),
        _case_vacuum_limit(),
        _case_residual_stability(),
    ]
    return VerificationReport("coherent", tuple(sorted(cases, key=lambda c: c.name)))


# --- calculus ---------------------------------------------------------------

_POLY = series.PowerSeries([0.3, -1.2, 0.8, 0.45, -0.2])


def _monomial(n: int) -> series.PowerSeries:
    return series.PowerSeries([0.0] * n + [1.0])


def _case_monomial_law() -> VerifyCase:
    worst = 0.0
    x = 0.7
    for n in range(1, 7):
        f = calculus.sampled_from_series(_monomial(n))
        want = phi(q_oscillator(1.7), n) * x ** (n - 1)
        worst = max(worst, _rel(calculus.jackson_derivative(f, x, 1.7), want))
        want = phi(symmetric_q(1.3), n) * x ** (n - 1)
        worst = max(worst, _rel(calculus.symmetric_derivative(f, x, 1.3), want))
        want = phi(pq(1.2, 0.8), n) * x ** (n - 1)
        worst = max(worst, _rel(calculus.pq_derivative(f, x, 1.2, 0.8), want))
    return VerifyCase(
        "monomial-law-families",
        "each difference quotient sends x^n to its bracket number times x^(n-1)",
        worst,
        1e-10,
    )


def _case_quad_monomial(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        sch = tsallis(q)
        for n in range(1, 6):
            f = calculus.sampled_from_series(_monomial(n))
            for x in (0.4, 1.0):
                got = calculus.tsallis_derivative_quadrature(f, x, q)
                worst = max(worst, _rel(got, phi(sch, n) * x ** (n - 1)))
    return VerifyCase(
        "tsallis-quadrature-monomial",
        "int_0^1 (x^n)'(t^(q-1) x) dt = n x^(n-1) / (1 + (q-1)(n-1))",
        worst,
        1e-9,
    )


def _tsallis_exp_sampled(q: float, k: float) -> calculus.SampledFunction:
    return calculus.SampledFunction(
        eval=lambda x: series.tsallis_exp_closed(q, k * x),
        deriv=lambda x: k * series.tsallis_exp_closed(q, k * x) ** q,
    )


def _case_quad_eigen(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        r = 1.0 / (q - 1.0)
        for k in (0.5, 1.0):
            f = _tsallis_exp_sampled(q, k)
            for frac in (0.2, 0.6):
                x = frac * r / k
                want = k * series.tsallis_exp_closed(q, k * x)
                got = calculus.tsallis_derivative_quadrature(f, x, q)
                worst = max(worst, _rel(got, want))
    return VerifyCase(
        "tsallis-quadrature-eigenfunction",
        "D e_q(kx) = k e_q(kx) for the quadrature form",
        worst,
        1e-9,
    )


def _case_quad_series(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        d = calculus.tsallis_derivative_series(_POLY, q)
        f = calculus.sampled_from_series(_POLY)
        for x in (0.3, 0.9):
            got = calculus.tsallis_derivative_quadrature(f, x, q)
            worst = max(worst, _rel(got, float(d(x).real)))
    return VerifyCase(
        "quadrature-series-agreement",
        "the quadrature and coefficient forms agree on polynomials",
        worst,
        1e-9,
    )


def _case_fundamental(qs) -> VerifyCase:
    worst = 0.0
    for q in qs:
        back = calculus.tsallis_derivative_series(
            calculus.tsallis_integral_series(_POLY, q), q
        )
        for n in range(len(_POLY.coeffs)):
            worst = max(worst, abs(back[n] - _POLY[n]))
    return VerifyCase(
        "fundamental-theorem",
        "the deformed derivative undoes the deformed antiderivative (q > 1)",
        worst,
        1e-14,
    )


def _case_linearity() -> VerifyCase:
    q = 1.5
    f = _tsallis_exp_sampled(q, 0.5)
    g = calculus.sampled_from_series(_POLY)
    a, b = 0.7, -1.3
    combo = calculus.SampledFunction(
        eval=lambda x: a * f.eval(x) + b * g.eval(x),
        deriv=lambda x: a * f.deriv(x) + b * g.deriv(x),
    )
    worst = 0.0
    for x in (0.25, 0.5):
        lhs = calculus.tsallis_derivative_quadrature(combo, x, q)
        rhs = a * calculus.tsallis_derivative_quadrature(
            f, x, q
        ) + b * calculus.tsallis_derivative_quadrature(g, x, q)
        worst = max(worst, _rel(lhs, rhs))
    return VerifyCase(
        "linearity",
        "D(a f + b g) = a D f + b D g",
        worst,
        1e-9,
    )


def _case_orthonormal(qs) -> VerifyCase:
    worst = 0.0
    schemes = [boson(), mu_oscillator(0.3)] + [tsallis(q) for q in qs]
    for sch in schemes:
        basis = []
        for m in range(7):
            c = [0.0] * m + [1.0 / math.sqrt(phi_factorial(sch, m))]
            basis.append(series.PowerSeries(c))
        for m in range(7):
            for n in range(7):
                ip = calculus.bargmann_inner_product(basis[m], basis[n], sch)
                want = 1.0 if m == n else 0.0
                worst = max(worst, abs(ip - want))
    return VerifyCase(
        "orthonormal-monomials",
        "x^n/sqrt(phi(n)!) is orthonormal under the phi-weighted pairing",
        worst,
        1e-12,
    )


def _case_reproducing(qs) -> VerifyCase:
    worst = 0.0
    a = 0.5 + 0.3j
    y = abs(a) ** 2
    for sch in [boson()] + [tsallis(q) for q in qs]:
        coeffs = [1.0 + 0.0j]
        for n in range(1, 41):
            coeffs.append(coeffs[-1] * a / phi(sch, n))
        s = series.PowerSeries(coeffs)
        ip = calculus.bargmann_inner_product(s, s, sch)
        if sch.kind == "boson":
            want = math.exp(y)
        else:
            want = series.tsallis_exp_closed(sch.q, y)
        worst = max(worst, _rel(abs(ip), want))
    return VerifyCase(
        "exp-reproducing-norm",
        "<e_phi(a x), e_phi(a x)> = e_phi(|a|^2)",
        worst,
        1e-12,
    )


def _case_series_vs_jackson() -> VerifyCase:
    sch = q_oscillator(1.6)
    d = calculus.derivative_on_series(_POLY, sch)
    f = calculus.sampled_from_series(_POLY)
    worst = 0.0
    for x in (0.5, 1.1):
        worst = max(worst, _rel(float(d(x).real), calculus.jackson_derivative(f, x, 1.6)))
    return VerifyCase(
        "series-vs-jackson-poly",
        "the coefficient map phi(n) c_n matches the jackson quotient on polynomials",
        worst,
        1e-12,
    )


def _case_q2_closed() -> VerifyCase:
    f = calculus.SampledFunction(
        eval=lambda x: 1.0 / (1.0 - x),
        deriv=lambda x: 1.0 / (1.0 - x) ** 2,
    )
    worst = 0.0
    for x in (0.2, 0.5, 0.8):
        got = calculus.tsallis_derivative_quadrature(f, x, 2.0)
        worst = max(worst, _rel(got, 1.0 / (1.0 - x)))
    return VerifyCase(
        "q2-eigenfunction-closed",
        "at q = 2 the derivative fixes 1/(1-x) on 0 < x < 1",
        worst,
        1e-9,
    )


def _suite_calculus(focus: DeformationScheme | None) -> VerificationReport:
    extra = focus.q if focus is not None and focus.kind == "tsallis" else None
    qs = [q for q in _tsallis_grid(extra) if 1.0 < q <= 2.0]
    cases = [
        _case_monomial_law(),
        _case_quad_monomial(qs),
        _case_quad_eigen(qs),
        _case_quad_series(qs),
        _case_fundamental(qs),
        _case_linearity(),
        _case_orthonormal(qs),
        _case_reproducing(qs),
        _case_series_vs_jackson(),
        _case_q2_closed(),
    ]
    return VerificationReport("calculus", tuple(sorted(cases, key=lambda c: c.name)))


_SUITES = {
    "series": _suite_series,
    "spectrum": _suite_spectrum,
    "coherent": _suite_coherent,
    "calculus": _suite_calculus,
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, focus: DeformationScheme | None = None) -> VerificationReport:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of: {', '.join(SUITE_NAMES)} or all")
    return _SUITES[name](focus)


def run_all(focus: DeformationScheme | None = None) -> list[VerificationReport]:
    return [run_suite(name, focus) for name in SUITE_NAMES]
