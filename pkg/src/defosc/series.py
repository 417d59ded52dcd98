"""Power series tools around the deformed exponential.

The deformed exponential of a scheme is the series

    e_phi(x) = sum_n x^n / phi(n)!

whose convergence disk follows from the ratio test: radius = lim |phi(n+1)|.
For the tsallis family the series sums to the closed form

    e_q(x) = (1 + (1-q) x)^(1/(1-q)),   e_q(x) = 0 where 1 + (1-q) x < 0,

with inverse ln_q(x) = (x^(1-q) - 1)/(1-q).  Both satisfy d/dx e_q = e_q^q
and reduce to exp/log at q = 1.  The module also carries the hypergeometric
reductions 1F0(1/(q-1); (q-1)x) = e_q(x) and x 2F1(q,1;2;-x) = ln_q(1+x),
the Q-coefficients Q_n = q(2q-1)...(nq-(n-1)), and exp-of-series
composition for identities of the shape e_q(x) = exp(sum a_n x^n).
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Sequence

from .scheme import DeformationScheme, phi

__all__ = [
    "DivergenceError",
    "PowerSeries",
    "EvalPolicy",
    "DEFAULT_POLICY",
    "SeriesDiagnostics",
    "tsallis_exp_closed",
    "tsallis_log",
    "radius_of_convergence",
    "phi_exp_series",
    "borges_Q",
    "exp_series_compose",
    "pochhammer",
    "PochhammerReport",
    "verify_pochhammer_identity",
    "hyp1F0",
    "hyp2F1",
    "q_gaussian_approx",
]


class DivergenceError(ValueError):
    """Evaluation outside the convergence disk, or no convergence reached."""

    def __init__(self, message: str, radius: float | None = None):
        super().__init__(message)
        self.radius = radius


def _as_number(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a series coefficient")
    if isinstance(c, numbers.Real):
        return float(c)
    if isinstance(c, numbers.Complex):
        return complex(c)
    raise TypeError(f"coefficient {c!r} is not a number")


class PowerSeries:
    """Finite power series; index n holds the coefficient of x^n.

    Indexing past the stored coefficients reads as 0, so series of different
    lengths combine without padding.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        vals = tuple(_as_number(c) for c in coeffs)
        if not vals:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = vals

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("negative power")
        return self.coeffs[n] if n < len(self.coeffs) else 0.0

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.coeffs)!r})"

    def __call__(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = max(len(self.coeffs), len(other.coeffs))
        return PowerSeries([self[k] + other[k] for k in range(n)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        # Cauchy product, full order
        out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PowerSeries(out)

    def truncated(self, order: int) -> "PowerSeries":
        if order < 0:
            raise ValueError("order must be >= 0")
        return PowerSeries([self[k] for k in range(order + 1)])


@dataclass(frozen=True)
class EvalPolicy:
    """Stopping control for series evaluation."""

    rel_tol: float = 1e-12
    max_terms: int = 10**6

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_POLICY = EvalPolicy()


@dataclass(frozen=True)
class SeriesDiagnostics:
    """What the evaluator did: index of the last term, and how it stopped."""

    terms_used: int
    converged: bool
    last_term_magnitude: float


def _check_tsallis_q(q: float) -> float:
    q = float(q)
    if not (0.0 < q <= 2.0):
        raise ValueError(f"q out of range (0, 2], got {q}")
    return q


def tsallis_exp_closed(q: float, x: float) -> float:
    """Closed-form e_q(x); 0 below the support edge, inf at the q > 1 pole."""
    q = _check_tsallis_q(q)
    x = float(x)
    if q == 1.0:
        try:
            return math.exp(x)
        except OverflowError:
            return math.inf
    u = (1.0 - q) * x
    if u <= -1.0:
        if u == -1.0:
            return math.inf if q > 1.0 else 0.0
        return 0.0
    try:
        return math.exp(math.log1p(u) / (1.0 - q))
    except OverflowError:
        return math.inf


def tsallis_log(q: float, x: float) -> float:
    """Inverse of e_q on x > 0: ln_q(x) = (x^(1-q) - 1)/(1-q)."""
    q = _check_tsallis_q(q)
    x = float(x)
    if x <= 0.0:
        raise ValueError(f"ln_q needs x > 0, got {x}")
    if q == 1.0:
        return math.log(x)
    return math.expm1((1.0 - q) * math.log(x)) / (1.0 - q)


def radius_of_convergence(scheme: DeformationScheme) -> float:
    """Radius of the disk where e_phi converges, as lim |phi(n+1)|."""
    k = scheme.kind
    if k == "boson":
        return math.inf
    if k == "tsallis":
        return math.inf if scheme.q <= 1.0 else 1.0 / (scheme.q - 1.0)
    if k == "mu":
        return math.inf if scheme.mu == 0.0 else 1.0 / scheme.mu
    if k == "qosc":
        return 1.0 / (1.0 - scheme.q) if scheme.q < 1.0 else math.inf
    if k == "symq":
        return math.inf
    if k == "pq":
        m = max(abs(scheme.p), abs(scheme.q))
        if m > 1.0:
            return math.inf
        if m < 1.0:
            return 0.0
        if abs(scheme.p) == abs(scheme.q):
            # {p, q} = {1, -1}: phi(2) = 0, the series has no disk at all
            return 0.0
        return 1.0 / abs(scheme.p - scheme.q)
    raise ValueError("radius of convergence is not defined for custom tables")


def phi_exp_series(
    scheme: DeformationScheme, x, policy: EvalPolicy = DEFAULT_POLICY
) -> tuple[complex | float, SeriesDiagnostics]:
    """Evaluate e_phi(x) = sum x^n/phi(n)! by the term recurrence.

    Accepts complex x.  Stops once the term magnitude drops below
    policy.rel_tol of the running sum.  Raises DivergenceError when x sits
    outside the convergence disk or the budget runs out; the error carries
    the radius when known.

    Returns (value, SeriesDiagnostics).
    """
    if isinstance(x, numbers.Real):
        x = float(x)
    else:
        x = complex(x)
    radius = None
    if scheme.kind != "custom":
        radius = radius_of_convergence(scheme)
        if abs(x) >= radius and abs(x) > 0.0:
            raise DivergenceError(
                f"|x| = {abs(x)} is not inside the convergence disk (radius {radius})",
                radius=radius,
            )
    total = 1.0 + x * 0  # promotes to complex when x is complex
    if x == 0:
        return total, SeriesDiagnostics(0, True, 0.0)
    term = total
    for n in range(1, policy.max_terms + 1):
        try:
            f = phi(scheme, n)
        except ZeroDivisionError:
            # pole in phi: phi(n)! is infinite from here on, every remaining
            # coefficient vanishes and the series is an exact polynomial
            return total, SeriesDiagnostics(n - 1, True, 0.0)
        except ValueError as exc:
            if scheme.kind == "custom":
                raise DivergenceError(f"series not converged within the table: {exc}") from exc
            raise
        term = term * (x / f)
        total = total + term
        if not (math.isfinite(abs(term)) and math.isfinite(abs(total))):
            raise DivergenceError("series terms left the float range", radius=radius)
        if abs(term) <= policy.rel_tol * abs(total):
            return total, SeriesDiagnostics(n, True, abs(term))
    raise DivergenceError(
        f"no convergence within {policy.max_terms} terms", radius=radius
    )


def borges_Q(q: float, n: int) -> float:
    """Q_0 = 1, Q_n = q(2q-1)(3q-2)...(nq-(n-1)) = prod_{j<=n} (1+(q-1)j)."""
    q = _check_tsallis_q(q)
    if n < 0:
        raise ValueError("n >= 0 required")
    acc = 1.0
    for j in range(1, n + 1):
        acc *= 1.0 + (q - 1.0) * j
    return acc


def exp_series_compose(a: PowerSeries, order: int) -> PowerSeries:
    """Coefficients of exp(sum_n a_n x^n) up to the given order.

    Uses c_0 = 1, c_n = a_n + (1/n) sum_{j=1}^{n-1} j c_{n-j} a_j; the input
    must have zero constant term.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if a[0] != 0:
        raise ValueError("exp_series_compose needs a zero constant term")
    c = [1.0]
    for n in range(1, order + 1):
        acc = sum(j * c[n - j] * a[j] for j in range(1, n))
        c.append(a[n] + acc / n)
    return PowerSeries(c)


def pochhammer(tau: float, n: int) -> float:
    """Rising factorial (tau)_n = tau (tau+1) ... (tau+n-1), (tau)_0 = 1."""
    if n < 0:
        raise ValueError("n >= 0 required")
    acc = 1.0
    for k in range(n):
        acc *= tau + k
    return acc


@dataclass(frozen=True)
class PochhammerReport:
    tau: float
    n_values: tuple[int, ...]
    residuals: tuple[float, ...]
    max_residual: float


def verify_pochhammer_identity(tau: float, n_max: int) -> PochhammerReport:
    """Check (tau)_n = (n-1)! tau sum_{j=0}^{n-1} (tau)_j / j! for 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max >= 2 required")
    ns = []
    residuals = []
    for n in range(2, n_max + 1):
        lhs = pochhammer(tau, n)
        rhs = math.factorial(n - 1) * tau * sum(
            pochhammer(tau, j) / math.factorial(j) for j in range(n)
        )
        scale = max(abs(lhs), abs(rhs), 1e-300)
        ns.append(n)
        residuals.append(abs(lhs - rhs) / scale)
    return PochhammerReport(float(tau), tuple(ns), tuple(residuals), max(residuals))


def hyp1F0(a: float, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """1F0(a; z) = sum (a)_n z^n / n!, valid on |z| < 1; equals (1-z)^(-a)."""
    z = float(z)
    if abs(z) >= 1.0:
        raise DivergenceError(f"1F0 diverges at |z| = {abs(z)} >= 1", radius=1.0)
    term = 1.0
    total = 1.0
    for n in range(1, policy.max_terms + 1):
        term *= (a + n - 1) * z / n
        total += term
        if abs(term) <= policy.rel_tol * abs(total):
            return total
    raise DivergenceError(f"1F0 did not converge within {policy.max_terms} terms", radius=1.0)


def hyp2F1(a: float, b: float, c: float, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """2F1(a, b; c; z) = sum (a)_n (b)_n / (c)_n z^n / n! on |z| < 1."""
    z = float(z)
    if c <= 0.0 and c == int(c):
        raise ValueError(f"2F1 undefined for c a nonpositive integer, got c = {c}")
    if abs(z) >= 1.0:
        raise DivergenceError(f"2F1 diverges at |z| = {abs(z)} >= 1", radius=1.0)
    term = 1.0
    total = 1.0
    for n in range(1, policy.max_terms + 1):
        term *= (a + n - 1) * (b + n - 1) * z / ((c + n - 1) * n)
        total += term
        if abs(term) <= policy.rel_tol * abs(total):
            return total
    raise DivergenceError(f"2F1 did not converge within {policy.max_terms} terms", radius=1.0)


def q_gaussian_approx(q: float, beta: float, x: float) -> tuple[float, float]:
    """Three-term exponential approximation of the q-Gaussian, with the exact value.

    Returns (approx, exact) where
    approx = exp(-b x^2 + (q-1)/2 b^2 x^4 - (q-1)^2/3 b^3 x^6) and
    exact = e_q(-b x^2).  Useful near q = 1 where the correction terms are small.
    """
    q = _check_tsallis_q(q)
    b = float(beta)
    x = float(x)
    expo = -b * x**2 + 0.5 * (q - 1.0) * b**2 * x**4 - (q - 1.0) ** 2 / 3.0 * b**3 * x**6
    return math.exp(expo), tsallis_exp_closed(q, -b * x**2)
