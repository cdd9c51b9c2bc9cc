"""Command-line front end: every verification as a subcommand.

All numeric flags accept exact literals only ("5/2", "3/10", "7");
floating point is rejected at parse time.  Output is JSON by default
(sorted keys, byte-stable for fixed flags), CSV for the per-degree
dimension tables, or a terse pretty form.  Exit codes: 0 when every
assertion passed, 1 on a verification failure, 2 on usage errors.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from x3top import acceptance
from x3top.cohomology import (
    bg_infinity_ring,
    classifying_ring,
    induction_identity_check,
    mu1_ring,
    psi_map,
    r3_ring,
    stated_kernel,
    verify_kernel,
)
from x3top.configs import enumerate_configurations, isometry_type
from x3top.core.rationals import format_rational, parse_rational
from x3top.homology import InadmissibleShape, Shape, enumerate_d_strata, strata_count
from x3top.inflation import InflationBoundError, limit_check, run_table, table_ids
from x3top.karshon import basic_relations, karshon_graph, verify_relation
from x3top.lie import CaseId, case_for_shape, expected_pi_ranks, pi_ranks
from x3top.polygons import blowup_polygon, hirzebruch_polygon, t_polygon


class UsageFailure(click.UsageError):
    exit_code = 2


def _shape(mu, c1, c2) -> Shape:
    try:
        return Shape.from_strings(mu, c1, c2)
    except (ValueError, InadmissibleShape) as exc:
        raise UsageFailure(str(exc))


def _rat(text) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageFailure(str(exc))


def _emit(data, fmt: str, csv_rows=None):
    if fmt == "csv" and csv_rows is not None:
        for row in csv_rows:
            click.echo(",".join(str(x) for x in row))
        return
    if fmt == "pretty":
        click.echo(json.dumps(data, indent=2, sort_keys=True))
        return
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json"
)


@click.group()
def main():
    """Exact-rational verification toolkit for the two-point blow-up of
    the ruled surface: curve classes, moment polygons, homotopy ranks,
    classifying-space rings, and inflation arithmetic."""


@main.command()
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@_format_option
def strata(mu, c1, c2, fmt):
    """Stratum count and defining classes at a shape."""
    s = _shape(mu, c1, c2)
    entries = enumerate_d_strata(s)
    data = {
        "shape": s.to_json(),
        "N": strata_count(s) if s.is_generic else len(entries),
        "classes": [{"m": m, "class": c.to_json()} for m, c in entries],
    }
    _emit(data, fmt)


@main.command()
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@_format_option
def configs(mu, c1, c2, fmt):
    """Realizable sphere configurations at a shape."""
    s = _shape(mu, c1, c2)
    items = enumerate_configurations(s)
    data = {
        "shape": s.to_json(),
        "count": len(items),
        "configurations": [
            dict(t.to_json(), isometry=isometry_type(t)) for t in items
        ],
    }
    _emit(data, fmt)


@main.command()
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@click.option("--n", type=int, required=True)
@click.option("--i", type=int, default=0, help="vertex 1..5 for the hexagon; 0 for the pentagon")
@click.option("--kind", type=click.Choice(["trapezoid", "pentagon", "hexagon"]), default="hexagon")
@_format_option
def polygon(mu, c1, c2, n, i, kind, fmt):
    """Moment polygon of a toric structure."""
    s = _shape(mu, c1, c2)
    try:
        if kind == "trapezoid":
            poly = hirzebruch_polygon(n, s)
        elif kind == "pentagon":
            poly = blowup_polygon(n, s)
        else:
            if not 1 <= i <= 5:
                raise UsageFailure("hexagons need --i in 1..5")
            poly = t_polygon(i, n, s)
    except InadmissibleShape as exc:
        raise UsageFailure(str(exc))
    data = {"vertices": poly.to_json(), "delzant": poly.is_delzant()}
    _emit(data, fmt, csv_rows=[("x", "y")] + [tuple(v) for v in poly.to_json()])


@main.command()
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@click.option("--n", type=int, required=True)
@click.option("--i", type=int, required=True)
@click.option("--xi", required=True, help="primitive circle as 'a,b'")
@_format_option
def karshon(mu, c1, c2, n, i, xi, fmt):
    """Fixed-point graph of a subcircle of a toric structure."""
    s = _shape(mu, c1, c2)
    try:
        a, b = (int(x) for x in xi.split(","))
    except ValueError:
        raise UsageFailure("--xi must be 'a,b' with integers")
    try:
        g = karshon_graph(t_polygon(i, n, s), (a, b))
    except (InadmissibleShape, ValueError) as exc:
        raise UsageFailure(str(exc))
    _emit(g.to_json(), fmt)


@main.command()
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@_format_option
def relations(mu, c1, c2, fmt):
    """Verify the named circle identifications at a shape."""
    s = _shape(mu, c1, c2)
    results = []
    ok = True
    for name, lhs, rhs in basic_relations():
        try:
            holds = verify_relation(lhs, rhs, s)
        except (InadmissibleShape, ValueError) as exc:
            results.append({"relation": name, "status": "inadmissible", "detail": str(exc)})
            continue
        results.append({"relation": name, "status": "pass" if holds else "fail"})
        ok = ok and holds
    _emit({"shape": s.to_json(), "results": results, "passed": ok}, fmt)
    if not ok:
        sys.exit(1)


@main.command(name="pi-ranks")
@click.option("--case", "case_id", required=True)
@click.option("--ell", type=int, default=0)
@click.option("--maxdeg", type=int, default=6)
@_format_option
def pi_ranks_cmd(case_id, ell, maxdeg, fmt):
    """Graded homotopy ranks of a case presentation."""
    try:
        case = CaseId.parse(case_id)
        ranks = pi_ranks(case, ell, maxdeg)
    except (ValueError, InadmissibleShape) as exc:
        raise UsageFailure(str(exc))
    _emit(
        {"case": case.value, "ell": ell, "ranks": ranks},
        fmt,
        csv_rows=[("degree", "rank")] + [(n + 1, r) for n, r in enumerate(ranks)],
    )


@main.command(name="expected-ranks")
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@click.option("--maxdeg", type=int, default=6)
@_format_option
def expected_ranks_cmd(mu, c1, c2, maxdeg, fmt):
    """Closed-form rank table at a shape (where one exists)."""
    s = _shape(mu, c1, c2)
    case, ell = case_for_shape(s)
    try:
        ranks = expected_pi_ranks(s, maxdeg)
    except InadmissibleShape as exc:
        raise UsageFailure(str(exc))
    _emit({"case": case.value, "ell": ell, "ranks": ranks}, fmt)


_RING_CHOICES = ["mu1", "bginf", "case-a", "case-b", "case-c", "case-d", "r3-mu1", "r3-a", "r3-b"]


def _ring_of(name: str, ell: int):
    if name == "mu1":
        return mu1_ring()
    if name == "bginf":
        return bg_infinity_ring()
    if name.startswith("case-"):
        if ell < 1:
            raise UsageFailure("--ell >= 1 required for the parameter rings")
        return classifying_ring(name[-1], ell)
    if name == "r3-mu1":
        return r3_ring(ell=0)
    if name in ("r3-a", "r3-b"):
        if ell < 1:
            raise UsageFailure("--ell >= 1 required for the boundary rings")
        return r3_ring(name[-1], ell)
    raise UsageFailure(f"unknown ring {name}")


@main.command()
@click.option("--ring", "ring_name", type=click.Choice(_RING_CHOICES), required=True)
@click.option("--ell", type=int, default=0)
@click.option("--maxdeg", type=int, default=12)
@_format_option
def hilbert(ring_name, ell, maxdeg, fmt):
    """Per-degree dimensions of a classifying-space ring."""
    ring = _ring_of(ring_name, ell)
    dims = ring.hilbert(maxdeg)
    data = {"ring": ring_name, "ell": ell, "dims": dims}
    _emit(data, fmt, csv_rows=[("degree", "dim")] + list(enumerate(dims)))


@main.command(name="relation-degrees")
@click.option("--ring", "ring_name", type=click.Choice(_RING_CHOICES), required=True)
@click.option("--ell", type=int, default=0)
@click.option("--maxdeg", type=int, default=16)
@_format_option
def relation_degrees(ring_name, ell, maxdeg, fmt):
    """Degrees of a minimal generating set of the ring's ideal."""
    ring = _ring_of(ring_name, ell)
    degs = ring.minimal_relation_degrees(maxdeg)
    _emit({"ring": ring_name, "ell": ell, "degrees": degs}, fmt)


@main.command()
@click.option("--kind", type=click.Choice(["zero", "odd1", "odd2", "even1", "even2"]), required=True)
@click.option("--k", type=int, default=0)
@_format_option
def kernel(kind, k, fmt):
    """Verify the stated kernel of a restriction map."""
    try:
        report = verify_kernel(psi_map(kind, k), stated_kernel(kind, k))
    except ValueError as exc:
        raise UsageFailure(str(exc))
    _emit(report, fmt)
    if not report["passed"]:
        sys.exit(1)


@main.command(name="induction-identity")
@click.option("--ell", type=int, required=True)
@_format_option
def induction_identity(ell, fmt):
    """Check the cross-parity kernel identity at a level."""
    try:
        ok, residual = induction_identity_check(ell)
    except ValueError as exc:
        raise UsageFailure(str(exc))
    _emit({"ell": ell, "holds": ok, "residual": str(residual)}, fmt)
    if not ok:
        sys.exit(1)


@main.command(name="inflate-check")
@click.option("--table", "table_id", type=int, required=True)
@click.option("--column", type=int, required=True)
@click.option("--mu", required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@click.option("--b", "b_value", required=True)
@_format_option
def inflate_check(table_id, column, mu, c1, c2, b_value, fmt):
    """Run one deformation-table column and assert its closed forms."""
    s = _shape(mu, c1, c2)
    b = _rat(b_value)
    if (table_id, column) not in table_ids():
        raise UsageFailure(f"no table {table_id} column {column}")
    try:
        report = run_table(table_id, column, s, b)
    except (InadmissibleShape, InflationBoundError) as exc:
        raise UsageFailure(str(exc))
    report["limit"] = limit_check(table_id, column, s)
    _emit(report, fmt)
    if not (report["passed"] and report["limit"]["passed"]):
        sys.exit(1)


@main.command(name="verify-all")
@click.option("--quick", is_flag=True, help="reduced sampling")
@_format_option
def verify_all(quick, fmt):
    """Run the complete acceptance suite."""
    report = acceptance.run_all(quick=quick)
    _emit(report, fmt)
    if not report["passed"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
