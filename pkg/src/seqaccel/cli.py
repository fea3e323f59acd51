"""Command-line front end.

Exit codes: 0 success, 1 certification failure, 2 usage or domain error,
3 precision-policy failure.  All numeric output uses the canonical decimal
format, so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from .asymptotics import d_estimator, recognize_form
from .catalog import (
    SeriesFileError,
    bethe_logarithm,
    bethe_series,
    model_series,
    series_from_file,
)
from .mpnum import BigReal, Precision, render_places
from .transforms import (
    TRANSFORMS,
    PrecisionUnderflowError,
    _chi_from,
    neville_one_step,
    required_working_digits,
)
from .weights import MAX_CLOSED_FORM_ROW, certify_weights, weight_table, weight_table_csv

_SERIES_CHOICES = ("model", "bethe-1s", "bethe-2s", "bethe-2p")
_METHOD_CHOICES = tuple(TRANSFORMS)
_CHI_LABEL = {
    "neville-one-step": "neville",
    "neville-recursive": "neville_recursive",
    "wynn": "wynn",
    "aitken": "aitken",
}

EXIT_CERTIFICATION = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3


def _catalog_series(name: str):
    if name == "model":
        return model_series()
    return bethe_series(name.split("-", 1)[1])


def _resolve_series(series, terms_file, partial_sums):
    if (series is None) == (terms_file is None):
        raise click.UsageError("choose exactly one of --series or --terms-file")
    if series is not None:
        return _catalog_series(series)
    try:
        return series_from_file(terms_file, partial_sums=partial_sums)
    except SeriesFileError as exc:
        raise click.UsageError(str(exc)) from None


def _sums_for(spec, order, digits):
    p = Precision(max(required_working_digits(order, digits), 10))
    try:
        return spec.partial_sums(order, p)
    except IndexError as exc:
        raise click.UsageError(str(exc)) from None


def _run_method(method, sums, digits, j_max=0):
    try:
        if method == "neville-one-step":
            return neville_one_step(sums, j_max=j_max, output_digits=digits)
        return TRANSFORMS[method](sums)
    except PrecisionUnderflowError as exc:
        click.echo(f"precision policy: {exc}", err=True)
        sys.exit(EXIT_PRECISION)


def _chi_str(entry) -> str:
    # undefined chi renders as an empty field so plotting tools skip it
    return "" if entry is None else render_places(entry, 6)


def _emit(lines, output):
    text = "\n".join(lines) + "\n"
    if output in (None, "-"):
        click.echo(text, nl=False)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


@click.group()
def main():
    """Convergence acceleration toolkit."""


@main.command()
@click.option("--series", type=click.Choice(_SERIES_CHOICES), default=None)
@click.option("--terms-file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--partial-sums", is_flag=True, help="terms file holds s_n, not a_k")
@click.option("--method", type=click.Choice(_METHOD_CHOICES), default="neville-one-step")
@click.option("--order", type=click.IntRange(min=0), required=True)
@click.option("--digits", type=click.IntRange(min=1), default=30)
@click.option("--output", default="-")
@click.option("--format", "fmt", type=click.Choice(("csv", "plain")), default="csv")
def accelerate(series, terms_file, partial_sums, method, order, digits, output, fmt):
    """Run one transformation and print per-order estimates with chi."""
    spec = _resolve_series(series, terms_file, partial_sums)
    sums = _sums_for(spec, order, digits)
    result = _run_method(method, sums, digits)
    show = Precision(max(digits, 10))
    rows = []
    for k, est in enumerate(result.estimates):
        chi = result.chi[k] if k < len(result.chi) else None
        value = est.to_precision(show).to_decimal_string()
        if fmt == "csv":
            rows.append(f"{k},{value},{_chi_str(chi)}")
        else:
            rows.append(f"{k:6d}  {value}  {_chi_str(chi)}")
    header = ["order,estimate,chi"] if fmt == "csv" else []
    _emit(header + rows, output)


@main.command()
@click.option("--series", type=click.Choice(_SERIES_CHOICES), default=None)
@click.option("--terms-file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--partial-sums", is_flag=True)
@click.option(
    "--method",
    "methods",
    type=click.Choice(_METHOD_CHOICES),
    multiple=True,
    help="repeat for each method; at least two distinct",
)
@click.option("--order", type=click.IntRange(min=1), required=True)
@click.option("--digits", type=click.IntRange(min=1), default=30)
@click.option("--output", default="-")
def compare(series, terms_file, partial_sums, methods, order, digits, output):
    """Aligned chi trajectories for two or more methods on one series."""
    methods = tuple(dict.fromkeys(methods))
    if len(methods) < 2:
        raise click.UsageError("compare needs at least two distinct --method values")
    spec = _resolve_series(series, terms_file, partial_sums)
    sums = _sums_for(spec, order, digits)
    results = {m: _run_method(m, sums, digits) for m in methods}
    base_chi = _chi_from(sums.values)
    lines = ["n,chi_series," + ",".join(f"chi_{_CHI_LABEL[m]}" for m in methods)]
    for n in range(order):
        cells = [str(n), _chi_str(base_chi[n])]
        for m in methods:
            chi = results[m].chi
            cells.append(_chi_str(chi[n] if n < len(chi) else None))
        lines.append(",".join(cells))
    _emit(lines, output)


@main.command()
@click.option("--series", type=click.Choice(_SERIES_CHOICES), default=None)
@click.option("--terms-file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--partial-sums", is_flag=True)
@click.option("--order", type=click.IntRange(min=1), required=True)
@click.option("--j-max", type=int, default=4)
@click.option("--digits", type=click.IntRange(min=1), default=30)
@click.option(
    "--recognize/--no-recognize",
    default=True,
    help="annotate closed forms (needs >= 40 digits)",
)
@click.option("--max-den", type=click.IntRange(min=1), default=10000)
@click.option("--d-trajectory", type=int, default=None, help="emit d_j(n) rows for this j")
@click.option("--output", default="-")
def coeffs(
    series, terms_file, partial_sums, order, j_max, digits, recognize, max_den,
    d_trajectory, output,
):
    """Subleading coefficients c_j at the top order, optionally recognized."""
    if not 0 <= j_max <= 10:
        raise click.UsageError("j-max must lie in [0, 10]; higher rows have no closed form")
    if j_max > order:
        raise click.UsageError("j-max cannot exceed the order")
    spec = _resolve_series(series, terms_file, partial_sums)
    sums = _sums_for(spec, order, digits)
    result = _run_method("neville-one-step", sums, digits, j_max=j_max)
    show = Precision(max(digits, 10))
    if d_trajectory is not None:
        j = d_trajectory
        if not 1 <= j <= j_max:
            raise click.UsageError("--d-trajectory needs 1 <= j <= j-max")
        known = [result.coefficients[r] for r in range(j)]
        traj = d_estimator(sums, known, j)
        lines = ["n,inv_n,d_j"]
        for n, v in enumerate(traj):
            inv = "" if n == 0 else render_places(BigReal(Fraction(1, n), show), 8)
            lines.append(f"{n},{inv},{v.to_precision(show).to_decimal_string()}")
        _emit(lines, output)
        return
    # identification threshold follows the requested digits, not the wider
    # working precision the coefficients are carried at
    rec_digits = max(40, digits)
    lines = ["j,c_j,recognized"]
    for j in range(j_max + 1):
        cj = result.coefficients[j]
        name = ""
        if recognize and cj.precision.decimal_digits >= rec_digits:
            form = recognize_form(cj.to_precision(Precision(rec_digits)), max_den)
            if form.kind != "none":
                name = form.describe()
        lines.append(f"{j},{cj.to_precision(show).to_decimal_string()},{name}")
    _emit(lines, output)


@main.command()
@click.argument("state")
@click.option("--digits", type=click.IntRange(min=1), default=50)
@click.option("--order", type=click.IntRange(min=1), default=None)
def bethe(state, digits, order):
    """Bethe logarithm for STATE (1S, 2S or 2P) to --digits decimal places."""
    try:
        value = bethe_logarithm(state, digits, order=order)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    except PrecisionUnderflowError as exc:
        click.echo(f"precision policy: {exc}", err=True)
        sys.exit(EXIT_PRECISION)
    click.echo(render_places(value, digits))


@main.command()
@click.option("--z", required=True, help="real argument, decimal or fraction")
@click.option("--s", type=click.IntRange(min=1), required=True)
@click.option("--a", type=click.IntRange(min=1), required=True)
@click.option("--digits", type=click.IntRange(min=1), default=30)
def lerch(z, s, a, digits):
    """Point evaluation of the Lerch transcendent."""
    from .special import lerch_phi

    try:
        zf = Fraction(z)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"cannot parse --z value {z!r}") from None
    try:
        value = lerch_phi(zf, s, a, Precision(max(digits, 10)))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    click.echo(value.to_decimal_string())


@main.command("verify-weights")
@click.option("--n-max", type=int, default=12)
@click.option(
    "--export-table",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="also write the order n-max weight rows as exact-rational CSV",
)
def verify_weights(n_max, export_table):
    """Certify closed-form weight rows against the exact oracle."""
    if n_max < 10:
        raise click.UsageError("certification needs --n-max >= 10")
    report = certify_weights(n_max)
    click.echo(report.summary())
    if export_table is not None:
        table = weight_table(n_max, MAX_CLOSED_FORM_ROW)
        with open(export_table, "w", newline="") as fh:
            fh.write(weight_table_csv(table))
    if not report.ok:
        sys.exit(EXIT_CERTIFICATION)


if __name__ == "__main__":
    main()
