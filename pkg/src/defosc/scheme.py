"""Deformation families phi(n) for generalized oscillator algebras.

A scheme assigns to every occupation number n >= 0 a real value phi(n)
with phi(0) = 0.  The ladder algebra is then fixed by

    a a+ = phi(N + 1),    a+ a = phi(N),    [a, a+] = phi(N + 1) - phi(N).

Built-in families::

    boson       phi(n) = n
    qosc        phi(n) = (1 - q^n) / (1 - q)
    symq        phi(n) = (q^-n - q^n) / (q^-1 - q)
    pq          phi(n) = (p^n - q^n) / (p - q)
    tsallis     phi(n) = n / (1 + (q - 1)(n - 1)),  q in (0, 2]
    mu          phi(n) = n / (1 + mu n),            mu >= 0
    custom      finite lookup table

Removable q -> 1 singularities are evaluated through expm1/sinh forms, so
values stay accurate arbitrarily close to the boson point; at q = 1 the
tsallis family is exactly phi(n) = n because its denominator is exactly 1.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Mapping, Sequence

__all__ = [
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
]


@dataclass(frozen=True)
class DeformationScheme:
    """Tagged deformation family with validated parameters.

    Construct through the factory functions (boson(), tsallis(q), ...) or
    parse_scheme(); the constructor itself performs no validation.
    """

    kind: str
    q: float = 0.0
    p: float = 0.0
    mu: float = 0.0
    table: tuple[float, ...] | None = None

    def descriptor(self) -> str:
        """Canonical text form, e.g. 'tsallis:q=1.5' or 'pq:p=2,q=0.5'."""
        k = self.kind
        if k == "boson":
            return "boson"
        if k == "qosc":
            return f"qosc:q={_fmt_param(self.q)}"
        if k == "symq":
            return f"symq:q={_fmt_param(self.q)}"
        if k == "pq":
            return f"pq:p={_fmt_param(self.p)},q={_fmt_param(self.q)}"
        if k == "tsallis":
            return f"tsallis:q={_fmt_param(self.q)}"
        if k == "mu":
            return f"mu:mu={_fmt_param(self.mu)}"
        if k == "custom":
            return "custom:phi=" + ";".join(_fmt_param(v) for v in self.table)
        raise ValueError(f"unknown scheme kind {k!r}")


def _fmt_param(v: float) -> str:
    # repr gives the shortest string that round-trips; '2.0' prints as '2'
    text = repr(float(v))
    return text[:-2] if text.endswith(".0") else text


def boson() -> DeformationScheme:
    return DeformationScheme("boson")


def q_oscillator(q: float) -> DeformationScheme:
    q = float(q)
    if not (q > 0.0) or q == 1.0:
        raise ValueError(f"qosc: q must be positive and != 1, got {q}")
    return DeformationScheme("qosc", q=q)


def symmetric_q(q: float) -> DeformationScheme:
    q = float(q)
    if not (q > 0.0) or q == 1.0:
        raise ValueError(f"symq: q must be positive and != 1, got {q}")
    return DeformationScheme("symq", q=q)


def pq(p: float, q: float) -> DeformationScheme:
    p = float(p)
    q = float(q)
    if p == q or not (math.isfinite(p) and math.isfinite(q)):
        raise ValueError(f"pq: finite p != q required, got p={p}, q={q}")
    return DeformationScheme("pq", p=p, q=q)


def tsallis(q: float) -> DeformationScheme:
    q = float(q)
    if not (0.0 < q <= 2.0):
        raise ValueError(f"tsallis: q out of range (0, 2], got {q}")
    return DeformationScheme("tsallis", q=q)


def mu_oscillator(mu: float) -> DeformationScheme:
    mu = float(mu)
    if not (mu >= 0.0) or not math.isfinite(mu):
        raise ValueError(f"mu: mu >= 0 required, got {mu}")
    return DeformationScheme("mu", mu=mu)


def custom_phi(values: Sequence[float] | Mapping[int, float]) -> DeformationScheme:
    """Scheme backed by a finite table; evaluation beyond it is an error."""
    if isinstance(values, Mapping):
        keys = sorted(values)
        if keys != list(range(len(keys))):
            raise ValueError("custom: table keys must be exactly 0..K")
        values = [values[k] for k in keys]
    table = tuple(float(v) for v in values)
    if len(table) < 2:
        raise ValueError("custom: at least entries for n = 0 and n = 1 required")
    if table[0] != 0.0:
        raise ValueError(f"custom: phi(0) must be 0, got {table[0]}")
    for n, v in enumerate(table):
        if not math.isfinite(v) or v < 0.0:
            raise ValueError(f"custom: phi({n}) must be finite and >= 0, got {v}")
    return DeformationScheme("custom", table=table)


_PARSERS = {
    "boson": ((), lambda p: boson()),
    "qosc": (("q",), lambda p: q_oscillator(p["q"])),
    "symq": (("q",), lambda p: symmetric_q(p["q"])),
    "pq": (("p", "q"), lambda p: pq(p["p"], p["q"])),
    "tsallis": (("q",), lambda p: tsallis(p["q"])),
    "mu": (("mu",), lambda p: mu_oscillator(p["mu"])),
}


def parse_scheme(text: str) -> DeformationScheme:
    """Parse a descriptor such as 'boson', 'tsallis:q=1.5', 'mu:mu=0.3'.

    Custom tables use semicolon-separated values: 'custom:phi=0;1;1.4'.
    """
    name, _, rest = text.strip().partition(":")
    raw: dict[str, str] = {}
    if rest:
        for item in rest.split(","):
            key, sep, val = item.partition("=")
            if not sep or not key:
                raise ValueError(f"malformed scheme parameter {item!r}")
            if key in raw:
                raise ValueError(f"duplicate scheme parameter {key!r}")
            raw[key] = val
    if name == "custom":
        if set(raw) != {"phi"}:
            raise ValueError("custom scheme takes exactly one parameter: phi=v;v;...")
        return custom_phi([_parse_float(v, "phi") for v in raw["phi"].split(";")])
    if name not in _PARSERS:
        known = ", ".join(sorted([*_PARSERS, "custom"]))
        raise ValueError(f"unknown scheme {name!r}; expected one of: {known}")
    wanted, build = _PARSERS[name]
    missing = [k for k in wanted if k not in raw]
    extra = [k for k in raw if k not in wanted]
    if missing:
        raise ValueError(f"{name}: missing parameter(s) {', '.join(missing)}")
    if extra:
        raise ValueError(f"{name}: unknown parameter(s) {', '.join(extra)}")
    return build({k: _parse_float(v, k) for k, v in raw.items()})


def _parse_float(text: str, key: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"parameter {key}: {text!r} is not a number") from None


def _check_index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"occupation number must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"occupation number must be >= 0, got {n}")
    return int(n)


def phi(scheme: DeformationScheme, n: int) -> float:
    """Deformation value phi(n) for the scheme, with phi(0) = 0."""
    n = _check_index(n)
    kind = scheme.kind
    if kind == "custom":
        if n >= len(scheme.table):
            raise ValueError(f"custom table ends at n = {len(scheme.table) - 1}, asked for {n}")
        return scheme.table[n]
    if n == 0:
        return 0.0
    if kind == "boson":
        return float(n)
    if kind == "qosc":
        return _basic_number(scheme.q, n)
    if kind == "symq":
        return _symmetric_number(scheme.q, n)
    if kind == "pq":
        return _pq_number(scheme.p, scheme.q, n)
    if kind == "tsallis":
        return _tsallis_number(scheme.q, n)
    if kind == "mu":
        return n / (1.0 + scheme.mu * n)
    raise ValueError(f"unknown scheme kind {kind!r}")


def _basic_number(q: float, n: int) -> float:
    # (1 - q^n)/(1 - q) written with expm1 so q near 1 keeps full accuracy
    lq = math.log(q)
    try:
        return math.expm1(n * lq) / math.expm1(lq)
    except OverflowError:
        raise OverflowError(f"q-number exceeds the float range at n = {n} (q = {q})") from None


def _symmetric_number(q: float, n: int) -> float:
    lq = math.log(q)
    try:
        return math.sinh(n * lq) / math.sinh(lq)
    except OverflowError:
        raise OverflowError(f"symmetric q-number exceeds the float range at n = {n} (q = {q})") from None


def _pq_number(p: float, q: float, n: int) -> float:
    try:
        num = p**n - q**n
    except OverflowError:
        raise OverflowError(f"(p,q)-number exceeds the float range at n = {n}") from None
    if math.isinf(num):
        raise OverflowError(f"(p,q)-number exceeds the float range at n = {n}")
    return num / (p - q)


def _tsallis_number(q: float, n: int) -> float:
    den = 1.0 + (q - 1.0) * (n - 1)
    if den == 0.0:
        raise ZeroDivisionError(
            f"tsallis number has a pole at n = {n}: 1 + (q-1)(n-1) = 0 for q = {q}"
        )
    return n / den


def phi_factorial(scheme: DeformationScheme, n: int, log_domain: bool = False) -> float:
    """Product phi(1) phi(2) ... phi(n), with phi(0)! = 1.

    With log_domain the natural log of the product is returned instead,
    which sidesteps overflow for fast-growing families; any factor <= 0
    is then a domain error.
    """
    n = _check_index(n)
    if not log_domain:
        acc = 1.0
        for j in range(1, n + 1):
            acc *= phi(scheme, j)
            if math.isinf(acc):
                raise OverflowError(
                    f"phi factorial exceeds the float range at n = {j}; use log_domain"
                )
        return acc
    acc = 0.0
    for j in range(1, n + 1):
        v = phi(scheme, j)
        if v <= 0.0:
            raise ValueError(f"log-domain factorial undefined: phi({j}) = {v} <= 0")
        acc += math.log(v)
    return acc


def nonlinearity_f(scheme: DeformationScheme, n: int) -> float:
    """f(n) = sqrt(phi(n)/n), the frequency profile of the f-oscillator view."""
    n = _check_index(n)
    if n < 1:
        raise ValueError("nonlinearity_f needs n >= 1")
    v = phi(scheme, n)
    if v < 0.0:
        raise ValueError(f"phi({n}) = {v} < 0: nonlinearity undefined")
    return math.sqrt(v / n)
