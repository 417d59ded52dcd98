"""Command-line front end.

Commands: numbers, exp, spectrum, coherent, derive, verify.  Schemes are
given as descriptors like 'boson', 'tsallis:q=1.5', 'pq:p=1.2,q=0.8', or
'custom:phi=0;1;2.5'.  Output formats: table (default), json, csv.

Exit codes: 0 success; 1 when a verification suite fails or a quadrature
cannot reach the requested accuracy; 2 for usage and validation errors,
including mathematical domain violations (outside a convergence disk, at
a pole, out of float range).  Failures print a single JSON line
{"error": kind, "detail": text} on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import __version__, calculus, coherent, fock, series, verify
from .scheme import DeformationScheme, nonlinearity_f, parse_scheme, phi, phi_factorial

__all__ = ["main", "entry"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2) with its own text
        raise _UsageError(message)


def _emit_error(kind: str, detail: str) -> None:
    print(json.dumps({"error": kind, "detail": detail}), file=sys.stderr)


def _clean(obj):
    """JSON-safe copy: non-finite floats become the strings inf/-inf/nan."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        if math.isfinite(obj):
            return obj
        if math.isnan(obj):
            return "nan"
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, complex):
        return {"re": _clean(obj.real), "im": _clean(obj.imag)}
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.16e" % v
    return str(v)


def _table_cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "pass" if v else "FAIL"
    if isinstance(v, float):
        return "%.12g" % v
    return str(v)


def _render_table(doc: dict, columns: list[str], rows: list[list]) -> str:
    lines = [f"defosc {doc['command']}" + (f"  [{doc['scheme']}]" if doc["scheme"] else "")]
    for key, val in doc["params"].items():
        if isinstance(val, bool):
            val = "true" if val else "false"
        elif not isinstance(val, str):
            val = _table_cell(val)
        lines.append(f"  {key} = {val}")
    scalars = {
        k: v for k, v in doc["results"].items() if not isinstance(v, (list, tuple, dict))
    }
    if scalars:
        lines.append("")
        width = max(len(k) for k in scalars)
        for k, v in scalars.items():
            lines.append(f"  {k:<{width}}  {_table_cell(v)}")
    if rows:
        lines.append("")
        cells = [[_table_cell(v) for v in row] for row in rows]
        widths = [
            max(len(columns[j]), max(len(r[j]) for r in cells)) for j in range(len(columns))
        ]
        lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(columns, widths)))
        for r in cells:
            lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _render_csv(columns: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def _write_output(doc: dict, columns: list[str], rows: list[list], args) -> None:
    if args.format == "json":
        text = json.dumps(_clean(doc), indent=2) + "\n"
    elif args.format == "csv":
        text = _render_csv(columns, rows)
        scalars = {
            k: v
            for k, v in doc["results"].items()
            if not isinstance(v, (list, tuple, dict))
        }
        if scalars:
            print(json.dumps(_clean({"summary": scalars})), file=sys.stderr)
    else:
        text = _render_table(doc, columns, rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _scheme_from(text: str) -> DeformationScheme:
    try:
        return parse_scheme(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _doc(command: str, scheme: DeformationScheme | None, params: dict) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "scheme": scheme.descriptor() if scheme is not None else None,
        "params": params,
        "results": {},
        "diagnostics": {},
    }


# --- handlers ---------------------------------------------------------------


def _run_numbers(args):
    scheme = _scheme_from(args.scheme)
    n_max = args.n_max
    if n_max < 0:
        raise _UsageError(f"--n-max must be >= 0, got {n_max}")
    doc = _doc("numbers", scheme, {"n_max": n_max, "log_factorial": args.log_factorial})
    fact_key = "log_phi_factorial" if args.log_factorial else "phi_factorial"
    ns, phis, facts, fs = [], [], [], []
    pole_at = None
    for n in range(n_max + 1):
        ns.append(n)
        try:
            phis.append(phi(scheme, n))
        except ZeroDivisionError:
            phis.append(None)
            pole_at = n if pole_at is None else pole_at
        except (ValueError, OverflowError):
            phis.append(None)
        try:
            facts.append(phi_factorial(scheme, n, log_domain=args.log_factorial))
        except (ValueError, OverflowError, ZeroDivisionError):
            facts.append(None)
        if n == 0:
            fs.append(None)
        else:
            try:
                fs.append(nonlinearity_f(scheme, n))
            except (ValueError, ZeroDivisionError):
                fs.append(None)
    doc["results"] = {"n": ns, "phi": phis, fact_key: facts, "nonlinearity_f": fs}
    if pole_at is not None:
        doc["diagnostics"]["pole_at"] = pole_at
    columns = ["n", "phi", fact_key, "nonlinearity_f"]
    rows = [[n, p, fa, f] for n, p, fa, f in zip(ns, phis, facts, fs)]
    return doc, columns, rows, 0


def _run_exp(args):
    scheme = _scheme_from(args.scheme)
    try:
        policy = series.EvalPolicy(rel_tol=args.rel_tol, max_terms=args.max_terms)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    doc = _doc(
        "exp",
        scheme,
        {"x": args.x, "rel_tol": policy.rel_tol, "max_terms": policy.max_terms},
    )
    value, diag = series.phi_exp_series(scheme, args.x, policy)
    value = float(value.real) if isinstance(value, complex) else float(value)
    results = {"x": args.x, "series_value": value}
    if scheme.kind == "tsallis":
        closed = series.tsallis_exp_closed(scheme.q, args.x)
        results["closed_value"] = closed
        results["abs_difference"] = abs(value - closed)
    doc["results"] = results
    doc["diagnostics"] = {
        "terms_used": diag.terms_used,
        "converged": diag.converged,
        "last_term_magnitude": diag.last_term_magnitude,
    }
    columns = list(results)
    return doc, columns, [[results[k] for k in columns]], 0


def _run_spectrum(args):
    scheme = _scheme_from(args.scheme)
    if args.n_max < 1:
        raise _UsageError(f"--n-max must be >= 1, got {args.n_max}")
    doc = _doc("spectrum", scheme, {"n_max": args.n_max})
    rep = fock.spectrum_report(scheme, args.n_max)
    doc["results"] = {
        "band_top": rep.band_top,
        "band_width": rep.band_width,
        "levels": list(rep.levels),
        "gaps": list(rep.gaps),
    }
    columns = ["n", "level", "gap"]
    rows = [
        [n, lev, rep.gaps[n] if n < len(rep.gaps) else None]
        for n, lev in enumerate(rep.levels)
    ]
    return doc, columns, rows, 0


def _parse_alpha(text: str) -> complex:
    try:
        return complex(text)
    except ValueError:
        raise _UsageError(f"alpha: {text!r} is not a real or complex number") from None


def _run_coherent(args):
    scheme = _scheme_from(args.scheme)
    alpha = _parse_alpha(args.alpha)
    if args.dim is not None and args.dim < 4:
        raise _UsageError(f"--dim must be >= 4, got {args.dim}")
    doc = _doc("coherent", scheme, {"alpha": alpha, "dim": args.dim})
    state = coherent.coherent_state(scheme, alpha, args.dim)
    v = state.vector()
    doc["results"] = {
        "dim": state.dim,
        "norm_const": state.norm_const,
        "tail_mass": state.tail_mass,
        "eigen_residual": coherent.eigen_residual(state),
        "expected_n": coherent.expected_n(state),
        "vector_real": [float(c.real) for c in v],
        "vector_imag": [float(c.imag) for c in v],
    }
    doc["diagnostics"]["dim_was_chosen"] = args.dim is None
    columns = ["n", "coeff_real", "coeff_imag", "probability"]
    rows = [
        [n, float(c.real), float(c.imag), float(abs(c) ** 2)] for n, c in enumerate(v)
    ]
    return doc, columns, rows, 0


def _parse_function(text: str, scheme: DeformationScheme):
    """Return (label, SampledFunction, reference_callable)."""
    name, _, rest = text.partition(":")
    if name == "monomial":
        try:
            n = int(rest)
        except ValueError:
            raise _UsageError(f"monomial degree {rest!r} is not an integer") from None
        if n < 0:
            raise _UsageError(f"monomial degree must be >= 0, got {n}")
        s = series.PowerSeries([0.0] * n + [1.0])
        ref_series = calculus.derivative_on_series(s, scheme)
        return text, calculus.sampled_from_series(s), lambda x: float(ref_series(x).real)
    if name == "tsallis-exp":
        if scheme.kind != "tsallis":
            raise _UsageError("tsallis-exp functions pair with tsallis schemes only")
        try:
            k = float(rest)
        except ValueError:
            raise _UsageError(f"tsallis-exp rate {rest!r} is not a number") from None
        q = scheme.q
        f = calculus.SampledFunction(
            eval=lambda x: series.tsallis_exp_closed(q, k * x),
            deriv=lambda x: k * series.tsallis_exp_closed(q, k * x) ** q,
        )
        return text, f, lambda x: k * series.tsallis_exp_closed(q, k * x)
    if name == "series":
        try:
            coeffs = [float(v) for v in rest.split(";")]
        except ValueError:
            raise _UsageError(f"series coefficients {rest!r} must be numbers split by ';'") from None
        s = series.PowerSeries(coeffs)
        ref_series = calculus.derivative_on_series(s, scheme)
        return text, calculus.sampled_from_series(s), lambda x: float(ref_series(x).real)
    raise _UsageError(
        f"unknown function {text!r}; expected monomial:N, tsallis-exp:K, or series:c0;c1;..."
    )


def _parse_xgrid(text: str) -> list[float]:
    try:
        xs = [float(v) for v in text.split(",")]
    except ValueError:
        raise _UsageError(f"--x expects comma-separated numbers, got {text!r}") from None
    if not xs:
        raise _UsageError("--x needs at least one point")
    return xs


def _run_derive(args):
    scheme = _scheme_from(args.scheme)
    label, f, reference = _parse_function(args.function, scheme)
    xs = _parse_xgrid(args.x)
    try:
        spec = calculus.QuadratureSpec(abs_tol=args.quad_tol)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    doc = _doc(
        "derive", scheme, {"function": label, "x": args.x, "quad_tol": spec.abs_tol}
    )
    kind = scheme.kind
    if kind == "tsallis":
        route = "quadrature"
        numeric_at = lambda x: calculus.tsallis_derivative_quadrature(f, x, scheme.q, spec)
    elif kind == "qosc":
        route = "jackson"
        numeric_at = lambda x: calculus.jackson_derivative(f, x, scheme.q)
    elif kind == "symq":
        route = "symmetric"
        numeric_at = lambda x: calculus.symmetric_derivative(f, x, scheme.q)
    elif kind == "pq":
        route = "pq"
        numeric_at = lambda x: calculus.pq_derivative(f, x, scheme.p, scheme.q)
    elif kind == "boson":
        route = "plain"
        numeric_at = f.derivative
    else:
        raise _UsageError(
            f"derive has no numeric route for {kind!r} schemes; "
            "supported: boson, qosc, symq, pq, tsallis"
        )
    rows = []
    for x in xs:
        numeric = numeric_at(x)
        ref = reference(x)
        rows.append([x, numeric, ref, abs(numeric - ref)])
    doc["results"] = {
        "x": [r[0] for r in rows],
        "numeric": [r[1] for r in rows],
        "reference": [r[2] for r in rows],
        "abs_difference": [r[3] for r in rows],
    }
    doc["diagnostics"]["route"] = route
    columns = ["x", "numeric", "reference", "abs_difference"]
    return doc, columns, rows, 0


def _run_verify(args):
    focus = _scheme_from(args.focus) if args.focus else None
    names = verify.SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [verify.run_suite(n, focus) for n in names]
    doc = _doc("verify", focus, {"suite": args.suite})
    all_passed = all(r.passed for r in reports)
    doc["results"] = {
        "passed": all_passed,
        "suites": [
            {
                "suite": r.suite,
                "passed": r.passed,
                "cases": [
                    {
                        "name": c.name,
                        "statement": c.statement,
                        "max_residual": c.max_residual,
                        "tolerance": c.tolerance,
                        "passed": c.passed,
                    }
                    for c in r.cases
                ],
            }
            for r in reports
        ],
    }
    columns = ["suite", "case", "max_residual", "tolerance", "status"]
    rows = [
        [r.suite, c.name, c.max_residual, c.tolerance, c.passed]
        for r in reports
        for c in r.cases
    ]
    return doc, columns, rows, 0 if all_passed else 1


_HANDLERS = {
    "numbers": _run_numbers,
    "exp": _run_exp,
    "spectrum": _run_spectrum,
    "coherent": _run_coherent,
    "derive": _run_derive,
    "verify": _run_verify,
}

_SCHEME_HELP = (
    "scheme descriptor: boson | qosc:q=Q | symq:q=Q | pq:p=P,q=Q | "
    "tsallis:q=Q | mu:mu=M | custom:phi=V;V;..."
)


def _add_output_flags(sp) -> None:
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sp.add_argument("--out", metavar="PATH", default=None, help="write output to a file")


def _build_parser() -> _Parser:
    parser = _Parser(prog="defosc", description="Deformed oscillator toolbox")
    parser.add_argument("--version", action="version", version=f"defosc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("numbers", help="bracket numbers, factorials, f(n) table")
    sp.add_argument("scheme", help=_SCHEME_HELP)
    sp.add_argument("--n-max", type=int, default=16)
    sp.add_argument("--log-factorial", action="store_true", help="log-domain factorials")
    _add_output_flags(sp)

    sp = sub.add_parser("exp", help="deformed exponential at a point")
    sp.add_argument("scheme", help=_SCHEME_HELP)
    sp.add_argument("x", type=float)
    sp.add_argument("--rel-tol", type=float, default=1e-12)
    sp.add_argument("--max-terms", type=int, default=10**6)
    _add_output_flags(sp)

    sp = sub.add_parser("spectrum", help="energy levels, gaps, band edge")
    sp.add_argument("scheme", help=_SCHEME_HELP)
    sp.add_argument("--n-max", type=int, default=32)
    _add_output_flags(sp)

    sp = sub.add_parser("coherent", help="truncated coherent state diagnostics")
    sp.add_argument("scheme", help=_SCHEME_HELP)
    sp.add_argument("alpha", help="amplitude, real or complex like 0.5+0.3j")
    sp.add_argument("--dim", type=int, default=None)
    _add_output_flags(sp)

    sp = sub.add_parser("derive", help="deformed derivative, numeric vs reference")
    sp.add_argument("scheme", help=_SCHEME_HELP)
    sp.add_argument(
        "--function",
        required=True,
        help="monomial:N | tsallis-exp:K | series:c0;c1;...",
    )
    sp.add_argument("--x", required=True, help="evaluation points, comma-separated")
    sp.add_argument("--quad-tol", type=float, default=1e-10)
    _add_output_flags(sp)

    sp = sub.add_parser("verify", help="run internal identity suites")
    sp.add_argument("suite", choices=(*verify.SUITE_NAMES, "all"))
    sp.add_argument("--scheme", dest="focus", default=None, help=_SCHEME_HELP)
    _add_output_flags(sp)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        _emit_error("usage-error", str(exc))
        return 2
    except SystemExit as exc:  # --help / --version print and stop
        return int(exc.code or 0)
    try:
        doc, columns, rows, code = _HANDLERS[args.command](args)
    except _UsageError as exc:
        _emit_error("usage-error", str(exc))
        return 2
    except series.DivergenceError as exc:
        _emit_error("divergence-error", str(exc))
        return 2
    except calculus.QuadratureError as exc:
        _emit_error("accuracy-error", str(exc))
        return 1
    except OverflowError as exc:
        _emit_error("range-error", str(exc))
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        _emit_error("domain-error", str(exc))
        return 2
    _write_output(doc, columns, rows, args)
    return code


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
