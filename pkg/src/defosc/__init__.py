"""Deformed oscillator algebras driven by a structure function phi(n).

One deformation function phi fixes everything downstream: the ladder
operators on a truncated Fock space, the deformed exponential and its
convergence disk, coherent states, the spectrum, and a deformed calculus.
Built-in families: boson, q-oscillator, symmetric q, (p,q), tsallis, mu,
and finite custom tables.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .calculus import (
    DEFAULT_QUADRATURE,
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
from .coherent import (
    CoherentState,
    coherent_state,
    eigen_residual,
    expected_n,
    f_coherent_coefficients,
)
from .fock import (
    FockTriple,
    SpectrumReport,
    build_fock,
    commutator_residual,
    energy_level,
    hamiltonian,
    spectrum_report,
    state_from_vacuum,
)
from .scheme import (
    DeformationScheme,
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
from .series import (
    DEFAULT_POLICY,
    DivergenceError,
    EvalPolicy,
    PowerSeries,
    SeriesDiagnostics,
    borges_Q,
    exp_series_compose,
    hyp1F0,
    hyp2F1,
    phi_exp_series,
    pochhammer,
    q_gaussian_approx,
    radius_of_convergence,
    tsallis_exp_closed,
    tsallis_log,
    verify_pochhammer_identity,
)
from .verify import VerificationReport, VerifyCase, run_all, run_suite

__all__ = [
    "__version__",
    "DeformationScheme",
    "boson",
    "q_oscillator",
    "symmetric_q",
    "pq",
    "tsallis",
    "mu_oscillator",
    "custom_phi",
    "parse_scheme",
    "phi",
    "phi_factorial",
    "nonlinearity_f",
    "PowerSeries",
    "EvalPolicy",
    "DEFAULT_POLICY",
    "SeriesDiagnostics",
    "DivergenceError",
    "tsallis_exp_closed",
    "tsallis_log",
    "radius_of_convergence",
    "phi_exp_series",
    "borges_Q",
    "exp_series_compose",
    "pochhammer",
    "verify_pochhammer_identity",
    "hyp1F0",
    "hyp2F1",
    "q_gaussian_approx",
    "FockTriple",
    "build_fock",
    "commutator_residual",
    "energy_level",
    "SpectrumReport",
    "spectrum_report",
    "hamiltonian",
    "state_from_vacuum",
    "CoherentState",
    "coherent_state",
    "eigen_residual",
    "f_coherent_coefficients",
    "expected_n",
    "QuadratureError",
    "QuadratureSpec",
    "DEFAULT_QUADRATURE",
    "SampledFunction",
    "sampled_from_series",
    "jackson_derivative",
    "symmetric_derivative",
    "pq_derivative",
    "tsallis_derivative_series",
    "tsallis_derivative_quadrature",
    "tsallis_integral_series",
    "derivative_on_series",
    "bargmann_inner_product",
    "VerifyCase",
    "VerificationReport",
    "run_suite",
    "run_all",
]
