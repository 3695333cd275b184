"""Command-line frontend.

Commands: analyze, witness, scan, bounds, reproduce.  All numeric output is
printed with 17 significant digits and is byte-deterministic given the same
inputs and seed.

Exit codes: 0 success, 1 fixture failure, 2 parse error, 3 domain error,
4 no detecting witness exists, 5 I/O error.
"""

import json
import sys
from fractions import Fraction

import click
import numpy as np

from . import absolute, states, tripartite, witness as witness_mod
from .errors import DensityValidationError, DomainError, MatrixShapeError
from .fef import fef, fef_lower_bound
from .bloch import bloch_extract
from .linalg import validate_density
from .reproduce import run_fixtures

EXIT_FIXTURE_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_NO_WITNESS = 4
EXIT_IO_ERROR = 5


def _fmt(x):
    return format(float(x), ".17g")


def _dumps(obj, indent=0):
    """JSON writer with a fixed float format (17 significant digits)."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_dumps(v, indent + 1)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not len(obj):
            return "[]"
        items = [f"{pad}  {_dumps(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, np.ndarray):
        return _dumps(obj.tolist(), indent)
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{_fmt(obj.real)}, {_fmt(obj.imag)}]"
    if obj is None:
        return "null"
    return json.dumps(obj)


def _num(text):
    """Parse a real number, accepting exact rationals like '2/9'."""
    s = str(text).strip()
    try:
        if "/" in s:
            return float(Fraction(s))
        return float(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse number {text!r}") from exc


def _matrix_to_json(m):
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]


def _matrix_from_json(rows):
    try:
        return np.array([[complex(re, im) for re, im in row] for row in rows])
    except (TypeError, ValueError) as exc:
        raise DensityValidationError(
            "format", float("nan"),
            f"matrix entries must be [re, im] pairs: {exc}") from exc


def _load_state_file(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError:
        raise
    except json.JSONDecodeError as exc:
        raise DensityValidationError("format", float("nan"),
                                     f"invalid JSON in {path}: {exc}") from exc
    try:
        dim_a, dim_b = (int(v) for v in doc["dims"])
        matrix = _matrix_from_json(doc["matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DensityValidationError(
            "format", float("nan"),
            f"state file needs 'dims' and 'matrix' fields: {exc}") from exc
    return validate_density(matrix, dim_a, dim_b)


_FAMILY_OPTIONS = [
    click.option("--family", type=str, default=None,
                 help="Named state family (x1, x2, y3, isotropic, comp_diag, "
                      "bell_diag, ghz, w, af_not_as_example, max_entangled, ghzw)."),
    click.option("--input", "input_path", type=str, default=None,
                 help="JSON state file with 'dims' and row-major [re, im] 'matrix'."),
    click.option("--q", default=None, help="Mixing parameter for x2 / y3."),
    click.option("--d", default=None, help="Local dimension (isotropic, max_entangled)."),
    click.option("--beta", default=None, help="Isotropic-state parameter."),
    click.option("--p", default=None, help="GHZ-W mixing parameter."),
    click.option("--weights", default=None,
                 help="Four comma-separated diagonal weights for comp_diag."),
    click.option("--t11", default=None), click.option("--t22", default=None),
    click.option("--t33", default=None),
]


def _family_options(f):
    for opt in reversed(_FAMILY_OPTIONS):
        f = opt(f)
    return f


def _resolve_state(family, input_path, q, d, beta, p, weights, t11, t22, t33):
    if (family is None) == (input_path is None):
        raise DomainError("provide exactly one of --family or --input")
    if input_path is not None:
        return _load_state_file(input_path)
    if family == "ghzw":
        if p is None:
            raise DomainError("family ghzw needs --p")
        return tripartite.ghzw_marginal(_num(p)).marginal
    params = {}
    if q is not None:
        params["q"] = _num(q)
    if d is not None:
        params["d"] = int(d)
    if beta is not None:
        params["beta"] = _num(beta)
    if weights is not None:
        params["weights"] = [_num(v) for v in weights.split(",")]
    if t11 is not None or t22 is not None or t33 is not None:
        for name, val in (("t11", t11), ("t22", t22), ("t33", t33)):
            params[name] = _num(val) if val is not None else 0.0
    try:
        return states.construct(states.FamilySpec(family, params))
    except KeyError as exc:
        raise DomainError(f"family {family!r} is missing parameter {exc}") from exc


def _exit_for(exc):
    if isinstance(exc, DensityValidationError):
        return EXIT_PARSE_ERROR
    if isinstance(exc, (DomainError, MatrixShapeError)):
        return EXIT_DOMAIN_ERROR
    if isinstance(exc, OSError):
        return EXIT_IO_ERROR
    return EXIT_DOMAIN_ERROR


def _fail(exc):
    click.echo(f"error: {exc}", err=True)
    sys.exit(_exit_for(exc))


@click.group()
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for all stochastic subroutines.")
@click.option("--restarts", type=int, default=None,
              help="FEF optimizer restarts (default 20 for d=2, 60 for d=3).")
@click.option("--tol", type=float, default=1e-8, show_default=True,
              help="FEF optimizer improvement tolerance.")
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
@click.pass_context
def main(ctx, seed, restarts, tol, as_json):
    """Absolute fully entangled fraction toolkit."""
    ctx.obj = {"seed": seed, "restarts": restarts, "tol": tol, "json": as_json}


def _build_report(rho, opts):
    report = absolute.classify(rho, restarts=opts["restarts"],
                               seed=opts["seed"], tol=opts["tol"])
    spectrum = np.sort(np.linalg.eigvalsh(rho.matrix))[::-1]
    doc = {
        "dims": [rho.dim_a, rho.dim_b],
        "threshold": report.threshold,
        "spectrum": [float(v) for v in spectrum],
        "purity": rho.purity(),
        "lambda_max": report.lambda_max,
        "label": report.label,
        "boundary": report.boundary,
        "fef": {
            "value": report.fef_value,
            "lower_bound": fef_lower_bound(rho),
            "restarts": report.fef_restarts,
            "converged": report.fef_converged,
        },
        "k_copy_nonlocal": ("unknown" if report.k_copy_nonlocal is None
                            else report.k_copy_nonlocal),
        "teleportation_useful": report.teleportation_useful,
    }
    if rho.dim_a == 2 and rho.dim_b == 2:
        bp = bloch_extract(rho)
        doc["bloch"] = {"a": [float(v) for v in bp.a],
                        "b": [float(v) for v in bp.b],
                        "t": [[float(v) for v in row] for row in bp.t]}
        doc["absolutely_separable"] = absolute.is_absolutely_separable_2q(
            np.clip(spectrum, 0, None))
    return doc


def _print_report(doc, as_json):
    if as_json:
        click.echo(_dumps(doc))
        return
    click.echo(f"dims: {doc['dims'][0]}x{doc['dims'][1]}")
    click.echo(f"label: {doc['label']}  (boundary: {doc['boundary']})")
    click.echo(f"lambda_max: {_fmt(doc['lambda_max'])}  threshold: {_fmt(doc['threshold'])}")
    click.echo("spectrum: " + ", ".join(_fmt(v) for v in doc["spectrum"]))
    click.echo(f"purity: {_fmt(doc['purity'])}")
    click.echo(f"fef: {_fmt(doc['fef']['value'])}  "
               f"(lower bound {_fmt(doc['fef']['lower_bound'])}, "
               f"restarts {doc['fef']['restarts']}, converged {doc['fef']['converged']})")
    click.echo(f"k_copy_nonlocal: {doc['k_copy_nonlocal']}")
    click.echo(f"teleportation_useful: {doc['teleportation_useful']}")
    if "absolutely_separable" in doc:
        click.echo(f"absolutely_separable: {doc['absolutely_separable']}")


@main.command()
@_family_options
@click.pass_context
def analyze(ctx, **kwargs):
    """Full spectral / FEF / classification report for one state."""
    try:
        rho = _resolve_state(**kwargs)
        doc = _build_report(rho, ctx.obj)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        _fail(exc)
    _print_report(doc, ctx.obj["json"])


@main.command("witness")
@_family_options
@click.option("--unitary", "unitary_path", type=str, default=None,
              help="JSON file with a global-unitary 'matrix'; defaults to the "
                   "activating unitary of the state.")
@click.pass_context
def witness_cmd(ctx, unitary_path, **kwargs):
    """Emit a pullback witness S = U^dag W U detecting the given state."""
    try:
        rho = _resolve_state(**kwargs)
        if not rho.is_square_bipartition:
            raise DomainError(f"witness needs a square bipartition, "
                              f"got {rho.dim_a}x{rho.dim_b}")
        d = rho.dim_a
        w = witness_mod.teleportation_witness(d)
        if unitary_path is not None:
            with open(unitary_path) as fh:
                doc = json.load(fh)
            u = _matrix_from_json(doc["matrix"])
        else:
            verdict = absolute.is_absolute_fef(rho)
            if verdict.absolute:
                click.echo("no detecting witness exists: state is in the "
                           "absolute-FEF set (lambda_max "
                           f"{_fmt(verdict.lambda_max)} <= 1/{d})", err=True)
                sys.exit(EXIT_NO_WITNESS)
            u = absolute.activating_unitary(rho)
        s = witness_mod.pullback(w, u)
        expectation = witness_mod.evaluate(s, rho)
        kind = "pauli" if d == 2 else "gellmann"
        dec = witness_mod.decompose(s.matrix, kind)
    except SystemExit:
        raise
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    doc = {
        "d": d,
        "witness_matrix": _matrix_to_json(s.matrix),
        "expectation": expectation,
        "decomposition": {
            "basis": kind,
            "labels": list(dec.labels),
            "coefficients": [[float(v) for v in row] for row in dec.coefficients],
        },
    }
    if ctx.obj["json"]:
        click.echo(_dumps(doc))
    else:
        click.echo(f"Tr(S rho) = {_fmt(expectation)}")
        click.echo(f"decomposition basis: {kind}")
        for i, li in enumerate(dec.labels):
            for j, lj in enumerate(dec.labels):
                c = dec.coefficients[i, j]
                if abs(c) > 1e-12:
                    click.echo(f"  c[{li},{lj}] = {_fmt(c)}")


_SCAN_FAMILIES = {"x2": "q", "y3": "q", "isotropic": "beta", "ghzw": "p"}


@main.command()
@click.option("--family", required=True, type=click.Choice(sorted(_SCAN_FAMILIES)))
@click.option("--param", default=None, help="Parameter to sweep (defaults per family).")
@click.option("--range", "range_spec", required=True,
              help="Grid as start:stop:step (rationals accepted).")
@click.option("--d", default=None, help="Local dimension for isotropic.")
@click.option("--output", default="-", help="CSV output path, '-' for stdout.")
@click.pass_context
def scan(ctx, family, param, range_spec, d, output):
    """Sweep one family parameter; emit a CSV of spectra, FEF and labels."""
    try:
        expected = _SCAN_FAMILIES[family]
        if param is not None and param != expected:
            raise DomainError(f"family {family} sweeps {expected!r}, not {param!r}")
        parts = range_spec.split(":")
        if len(parts) != 3:
            raise DomainError(f"range must be start:stop:step, got {range_spec!r}")
        start, stop, step = (_num(v) for v in parts)
        if step <= 0:
            raise DomainError("range step must be positive")
        grid = []
        v = start
        while v <= stop + 1e-12:
            grid.append(v)
            v = start + len(grid) * step
        rows = []
        for v in grid:
            if family == "x2":
                rho = states.x2(v)
            elif family == "y3":
                rho = states.y3(v)
            elif family == "isotropic":
                rho = states.isotropic(int(d) if d is not None else 2, v)
            else:
                rho = tripartite.ghzw_marginal(v).marginal
            report = absolute.classify(rho, restarts=ctx.obj["restarts"],
                                       seed=ctx.obj["seed"], tol=ctx.obj["tol"])
            rows.append((v, report.lambda_max, fef_lower_bound(rho),
                         report.fef_value, report.label, report.boundary))
        lines = ["param,lambda_max,fef_lower_bound,fef,label,boundary"]
        for v, lam, lb, f_val, label, boundary in rows:
            lines.append(f"{_fmt(v)},{_fmt(lam)},{_fmt(lb)},{_fmt(f_val)},"
                         f"{label},{str(boundary).lower()}")
        text = "\n".join(lines) + "\n"
        if output == "-":
            click.echo(text, nl=False)
        else:
            try:
                with open(output, "w") as fh:
                    fh.write(text)
            except OSError as exc:
                click.echo(f"error: cannot write {output}: {exc}", err=True)
                sys.exit(EXIT_IO_ERROR)
    except SystemExit:
        raise
    except Exception as exc:  # noqa: BLE001
        _fail(exc)


@main.command()
@click.option("--d", required=True, type=int, help="Local dimension.")
@click.pass_context
def bounds(ctx, d):
    """Purity thresholds bracketing the absolute-FEF set."""
    try:
        pb = absolute.purity_bounds(d, seed=ctx.obj["seed"])
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    doc = {
        "d": pb.d,
        "max_purity_absolute": pb.max_purity_absolute,
        "min_purity_nonabsolute": pb.min_purity_nonabsolute,
        "min_attained": pb.min_attained,
        "witness_spectra": {
            "max": [float(v) for v in pb.witness_spectra[0]],
            "min": [float(v) for v in pb.witness_spectra[1]],
        },
    }
    if ctx.obj["json"]:
        click.echo(_dumps(doc))
    else:
        click.echo(f"d = {pb.d}")
        click.echo(f"max purity of absolute states: {_fmt(pb.max_purity_absolute)} "
                   f"(spectrum {', '.join(_fmt(v) for v in pb.witness_spectra[0])})")
        click.echo(f"min purity of non-absolute states: "
                   f"{_fmt(pb.min_purity_nonabsolute)} "
                   f"(infimum, not attained; spectrum "
                   f"{', '.join(_fmt(v) for v in pb.witness_spectra[1])})")


@main.command()
@click.pass_context
def reproduce(ctx):
    """Re-derive every published fixture value and report pass/fail."""
    results = run_fixtures(restarts=ctx.obj["restarts"], seed=ctx.obj["seed"])
    if ctx.obj["json"]:
        doc = [{"name": r.name, "expected": r.expected, "computed": r.computed,
                "delta": r.delta, "tolerance": r.tolerance, "passed": r.passed}
               for r in results]
        click.echo(_dumps(doc))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            click.echo(f"{status}  {r.name:<{width}}  expected {_fmt(r.expected)}  "
                       f"computed {_fmt(r.computed)}  |delta| {_fmt(r.delta)}")
        n_fail = sum(not r.passed for r in results)
        click.echo(f"{len(results) - n_fail}/{len(results)} fixtures passed")
    if any(not r.passed for r in results):
        sys.exit(EXIT_FIXTURE_FAILURE)


if __name__ == "__main__":
    main()
