"""Command-line interface: ``humbert eval|table|check|glauber|prabhakar|fm|vectors``."""
from __future__ import annotations

import csv
import io
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from .errors import DomainError, HumbertError
from .evaluator import Regime, Thresholds, cross_check, evaluate, evaluate_forced
from .types import Phi1Params

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

VECTOR_HEADER = ["a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "x_re", "x_im",
                 "y_re", "y_im", "value_re", "value_im", "method", "err_est"]


def fmt(v: float) -> str:
    """17 significant digits; non-finite values become 'nan' or '+/-inf'."""
    return format(float(v), ".17g")


def _json_value(v) -> str:
    if isinstance(v, bool) or v is None:
        return {True: "true", False: "false", None: "null"}[v]
    if isinstance(v, (int, float)):
        return fmt(v) if math.isfinite(v) else "null"
    if isinstance(v, str):
        import json
        return json.dumps(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_json_value(str(k))}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot encode {type(v).__name__}")


class ComplexType(click.ParamType):
    """Accepts ``RE`` or ``RE,IM``."""

    name = "complex"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            parts = [float(s) for s in str(value).split(",")]
        except ValueError:
            self.fail(f"{value!r} is not RE or RE,IM", param, ctx)
        if len(parts) == 1:
            return complex(parts[0], 0.0)
        if len(parts) == 2:
            return complex(parts[0], parts[1])
        self.fail(f"{value!r} has more than two components", param, ctx)


def format_complex(z: complex) -> str:
    return fmt(z.real) if z.imag == 0 else f"{fmt(z.real)},{fmt(z.imag)}"


COMPLEX = ComplexType()


def _emit(rows: list[dict], output_format: str, out):
    text = io.StringIO()
    if output_format == "json":
        body = _json_value(rows[0]) if len(rows) == 1 else _json_value(rows)
        text.write(body + "\n")
    elif output_format == "csv":
        if rows:
            w = csv.writer(text, lineterminator="\n")
            w.writerow(list(rows[0]))
            for r in rows:
                w.writerow([_cell(v) for v in r.values()])
    else:
        for r in rows:
            text.write("  ".join(f"{k}={_cell(v)}" for k, v in r.items()) + "\n")
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text.getvalue())
    else:
        click.echo(text.getvalue(), nl=False)


def _cell(v) -> str:
    if isinstance(v, float):
        return fmt(v)
    if isinstance(v, dict):
        return _json_value(v)
    return str(v)


def _thresholds(pairs) -> Thresholds:
    th = Thresholds.from_env()
    if pairs:
        data = th.as_dict()
        try:
            data.update(_pairs(pairs))
            th = Thresholds.from_mapping(data)
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--threshold")
    return th


def _pairs(pairs) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected KEY=VALUE, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _report_row(rep) -> dict:
    return {"value_re": rep.value.real, "value_im": rep.value.imag,
            "regime": str(rep.regime), "err_est": rep.abs_error_estimate}


def param_options(fn):
    for name in ("y", "x", "c", "b", "a"):
        fn = click.option(f"--{name}", type=COMPLEX, required=True,
                          help=f"{name} as RE or RE,IM")(fn)
    return fn


def output_options(fn):
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="write output to PATH instead of stdout")(fn)
    fn = click.option("--format", "output_format", type=click.Choice(["json", "csv", "text"]),
                      default="json", show_default=True)(fn)
    return fn


@click.group()
def cli():
    """Evaluate Humbert's confluent function Phi_1 and related quantities."""


@cli.command("eval")
@param_options
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--order", type=int, default=None, help="truncation order for asymptotic methods")
@click.option("--regime", type=click.Choice([r.value for r in Regime]), default=None,
              help="force one method instead of automatic dispatch")
@click.option("--threshold", multiple=True, metavar="KEY=VALUE", help="override a dispatch threshold")
@output_options
def eval_cmd(a, b, c, x, y, tol, order, regime, threshold, output_format, out):
    """Evaluate Phi_1[a,b;c;x,y] at one point."""
    _positive(tol)
    p = Phi1Params(a, b, c)
    if regime:
        rep = evaluate_forced(p, x, y, regime, tol, order)
    else:
        rep = evaluate(p, x, y, tol, _thresholds(threshold))
    _emit([_report_row(rep)], output_format, out)


def _positive(tol):
    if not tol > 0:
        raise click.BadParameter("must be positive", param_hint="--tol")


def _table_point(args):
    a, b, c, x, y, tol, th = args
    try:
        rep = evaluate(Phi1Params(a, b, c), x, y, tol, th)
        return {"x_re": x.real, "x_im": x.imag, "y_re": y.real, "y_im": y.imag,
                **_report_row(rep)}
    except DomainError as exc:
        return {"x_re": x.real, "x_im": x.imag, "y_re": y.real, "y_im": y.imag,
                "value_re": math.nan, "value_im": math.nan, "regime": f"error: {exc}",
                "err_est": math.nan}


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n < 1:
        raise click.BadParameter("point counts must be >= 1")
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


@cli.command("table")
@click.option("--a", type=COMPLEX, required=True)
@click.option("--b", type=COMPLEX, required=True)
@click.option("--c", type=COMPLEX, required=True)
@click.option("--x-from", type=float, required=True)
@click.option("--x-to", type=float, required=True)
@click.option("--nx", type=int, default=5, show_default=True)
@click.option("--y-from", type=float, required=True)
@click.option("--y-to", type=float, required=True)
@click.option("--ny", type=int, default=5, show_default=True)
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True, help="worker processes")
@click.option("--threshold", multiple=True, metavar="KEY=VALUE")
@output_options
def table_cmd(a, b, c, x_from, x_to, nx, y_from, y_to, ny, tol, jobs, threshold,
              output_format, out):
    """Tabulate Phi_1 on a rectangular grid of real x and y (row order: x outer)."""
    _positive(tol)
    Phi1Params(a, b, c)
    th = _thresholds(threshold)
    work = [(a, b, c, complex(x), complex(y), tol, th)
            for x in _linspace(x_from, x_to, nx) for y in _linspace(y_from, y_to, ny)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_table_point, work))
    else:
        rows = [_table_point(w) for w in work]
    _emit(rows, output_format, out)


def _read_vectors(path: str) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != VECTOR_HEADER:
            raise DomainError(f"{path}: header does not match {','.join(VECTOR_HEADER)}")
        return list(reader)


@cli.command("check")
@click.option("--a", type=COMPLEX)
@click.option("--b", type=COMPLEX)
@click.option("--c", type=COMPLEX)
@click.option("--x", type=COMPLEX)
@click.option("--y", type=COMPLEX)
@click.option("--from-file", "from_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="re-verify a vectors CSV instead of one point")
@output_options
def check_cmd(a, b, c, x, y, from_file, output_format, out):
    """Cross-check all applicable methods at a point, or re-verify a vectors file."""
    if from_file:
        rows = []
        worst_ratio = 0.0
        for r in _read_vectors(from_file):
            p = Phi1Params(complex(float(r["a_re"]), float(r["a_im"])),
                           complex(float(r["b_re"]), float(r["b_im"])),
                           complex(float(r["c_re"]), float(r["c_im"])))
            xv = complex(float(r["x_re"]), float(r["x_im"]))
            yv = complex(float(r["y_re"]), float(r["y_im"]))
            stored = complex(float(r["value_re"]), float(r["value_im"]))
            err = float(r["err_est"])
            rep = evaluate_forced(p, xv, yv, r["method"])
            delta = abs(rep.value - stored)
            ok = delta <= 2 * err
            worst_ratio = max(worst_ratio, delta / err if err > 0 else (0.0 if delta == 0 else math.inf))
            rows.append({"x_re": xv.real, "x_im": xv.imag, "y_re": yv.real, "y_im": yv.imag,
                         "method": r["method"], "delta": delta, "err_est": err, "ok": ok})
        summary = {"rows": len(rows), "failures": sum(not r["ok"] for r in rows),
                   "max_delta_over_err": worst_ratio}
        if output_format == "json":
            _emit([{"summary": summary, "rows": rows}], "json", out)
        else:
            _emit(rows, output_format, out)
        if summary["failures"]:
            raise _VerifyFailed(f"{summary['failures']} vector rows failed re-verification")
        return
    missing = [n for n, v in (("a", a), ("b", b), ("c", c), ("x", x), ("y", y)) if v is None]
    if missing:
        raise click.UsageError("missing " + ", ".join(f"--{m}" for m in missing))
    rep = cross_check(Phi1Params(a, b, c), x, y)
    row = _report_row(rep)
    row["agreement"] = rep.agreement_matrix
    row["max_delta"] = max(rep.agreement_matrix.values())
    _emit([row], output_format, out)


class _VerifyFailed(Exception):
    pass


@cli.command("glauber")
@click.option("--s", type=float, required=True, help="waiting time")
@click.option("--tau", type=float, required=True, help="time difference")
@click.option("--mu", type=float, default=0.0, show_default=True, help="inverse correlation length")
@output_options
def glauber_cmd(s, tau, mu, output_format, out):
    """Two-time correlation C_0 of the Glauber-Ising chain."""
    from .applications.glauber import (
        GlauberPoint, glauber_c0_report, glauber_equilibrium_limit, glauber_zero_temperature,
    )
    pt = GlauberPoint(s, tau, mu)
    value, rep = glauber_c0_report(pt)
    row = {"value": value, "regime": str(rep.regime),
           "zero_temperature": glauber_zero_temperature(s, tau)}
    row["equilibrium_limit"] = glauber_equilibrium_limit(tau / pt.tau_eq) if mu > 0 else None
    _emit([row], output_format, out)


@cli.command("prabhakar")
@click.option("--alpha", type=COMPLEX, required=True)
@click.option("--beta", type=COMPLEX, required=True)
@click.option("--gamma", "gamma_", type=COMPLEX, required=True)
@click.option("--lambda", "lambda_", type=COMPLEX, default=0j)
@click.option("--rho", type=COMPLEX, required=True, help="exponent of the input power t^rho")
@click.option("--x", type=float, required=True)
@click.option("--side", type=click.Choice(["plus", "minus"]), default="plus", show_default=True)
@click.option("--quadrature/--no-quadrature", default=False,
              help="also integrate the operator numerically")
@output_options
def prabhakar_cmd(alpha, beta, gamma_, lambda_, rho, x, side, quadrature, output_format, out):
    """A+ or A- applied to t^rho at a point x."""
    from .applications.prabhakar import (
        PrabhakarParams, prabhakar_apply, prabhakar_minus_power, prabhakar_plus_power,
    )
    pp = PrabhakarParams(alpha, beta, gamma_, lambda_, b_end=max(1.0, x))
    fn = prabhakar_plus_power if side == "plus" else prabhakar_minus_power
    v = fn(pp, rho, x)
    row = {"value_re": v.real, "value_im": v.imag}
    if quadrature:
        q = prabhakar_apply(pp, lambda t: t ** rho, x, side, origin_exponent=rho.real)
        row.update(quad_re=q.value.real, quad_im=q.value.imag, quad_err=q.abs_error_estimate)
    _emit([row], output_format, out)


@cli.command("fm")
@click.option("--alpha1", type=COMPLEX, required=True)
@click.option("--alpha2", type=COMPLEX, required=True)
@click.option("--beta1", type=COMPLEX, required=True)
@click.option("--beta2", type=COMPLEX, required=True)
@click.option("--gamma1", type=COMPLEX, required=True)
@click.option("--gamma2", type=COMPLEX, required=True)
@click.option("--x", type=COMPLEX, required=True)
@click.option("--y", type=COMPLEX, required=True)
@click.option("--z", type=COMPLEX, required=True)
@click.option("--method", type=click.Choice(["series", "laplace"]), default="series",
              show_default=True)
@click.option("--tol", type=float, default=1e-12, show_default=True)
@output_options
def fm_cmd(alpha1, alpha2, beta1, beta2, gamma1, gamma2, x, y, z, method, tol, output_format, out):
    """Saran's F_M by its single-series or Laplace-integral form."""
    from .saran import FmParams, fm_laplace, fm_series
    _positive(tol)
    q = FmParams(alpha1, alpha2, beta1, beta2, gamma1, gamma2)
    r = fm_series(q, x, y, z, tol) if method == "series" else fm_laplace(q, x, y, z)
    _emit([{"value_re": r.value.real, "value_im": r.value.imag, "method": method,
            "err_est": r.abs_error_estimate}], output_format, out)


def vector_rows(points) -> list[list[str]]:
    """Rows for the vectors CSV; values come from convergent methods only."""
    rows = []
    for a, b, c, x, y in points:
        a, b, c, x, y = (complex(v) for v in (a, b, c, x, y))
        rep = cross_check(Phi1Params(a, b, c), x, y)
        if rep.regime not in (Regime.SERIES_2F1, Regime.TAYLOR, Regime.EULER_INTEGRAL,
                              Regime.CONNECTION_X1, Regime.REDUCTION, Regime.LARGE_X):
            raise DomainError(f"no convergent method at {(a, b, c, x, y)}")
        vals = [a.real, a.imag, b.real, b.imag, c.real, c.imag, x.real, x.imag,
                y.real, y.imag, rep.value.real, rep.value.imag]
        # the stored bound also covers method disagreement and rounding
        spread = max(rep.agreement_matrix.values(), default=0.0)
        err = max(rep.abs_error_estimate, spread, 16 * 2.2e-16 * abs(rep.value))
        rows.append([fmt(v) for v in vals] + [str(rep.regime), fmt(err)])
    return rows


@cli.command("vectors")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--grid", type=click.Choice(["default", "empty"]), default="default",
              show_default=True, help="default: the fixed 50-point overlap grid")
def vectors_cmd(out, grid):
    """Write golden test vectors as CSV."""
    from .grids import overlap_grid
    points = overlap_grid() if grid == "default" else []
    rows = vector_rows(points)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(VECTOR_HEADER)
        w.writerows(rows)


def main(argv=None) -> int:
    """Console entry point; returns the process exit code."""
    try:
        cli.main(args=argv, prog_name="humbert", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_INTERNAL
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_INTERNAL
    except (DomainError, ValueError) as exc:
        click.echo(f"domain error: {exc}", err=True)
        return EXIT_DOMAIN
    except _VerifyFailed as exc:
        click.echo(f"verification failed: {exc}", err=True)
        return EXIT_INTERNAL
    except HumbertError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
