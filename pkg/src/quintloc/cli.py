"""Batch command-line interface.

Subcommands: poincare | components | tangent <id> | tables <1-4> | verify.
All output is deterministic; results go to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import homology, tables
from .catalog import (
    DEFAULT_LAMBDA,
    CatalogIntegrity,
    Family,
    FixedComponent,
    Kind,
    Stratum,
    census,
    enumerate_all,
    filter_components,
    find_component,
)
from .homology import NonGenericLambda, PoincareSummary
from .tangent import (
    DimensionViolation,
    RangeViolation,
    tangent_weights,
)
from .weights import (
    SIGMA5,
    ContainmentViolation,
    OneParamSubgroup,
    char_str,
    monomial_str,
)

_SIGMA5_NAMES = tuple(monomial_str(c) for c in SIGMA5.support())

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

_INTEGRITY_ERRORS = (
    NonGenericLambda,
    CatalogIntegrity,
    ContainmentViolation,
    DimensionViolation,
    RangeViolation,
)


@dataclass
class RunConfig:
    lam: OneParamSubgroup = DEFAULT_LAMBDA
    output_format: str = "text"
    stratum: Stratum | None = None
    family: Family | None = None
    kind: Kind | None = None
    strict: bool = True


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_lambda(text: str) -> OneParamSubgroup:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected n0,n1,n2")
    try:
        n0, n1, n2 = (int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return (n0, n1, n2)


def _enum_arg(enum_cls):
    def parse(text: str):
        for candidate in (text, text.lower(), text.upper()):
            try:
                return enum_cls(candidate)
            except ValueError:
                continue
        choices = ", ".join(e.value for e in enum_cls)
        raise argparse.ArgumentTypeError(f"choose from: {choices}")
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quintloc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--lambda", dest="lam", type=_parse_lambda,
                       default=DEFAULT_LAMBDA, metavar="n0,n1,n2",
                       help="one-parameter subgroup (default 0,1,7)")
        p.add_argument("--format", dest="output_format", choices=formats,
                       default="text")

    p = sub.add_parser("poincare", help="Poincare polynomial, Euler number, Hodge diagonal")
    common(p)

    p = sub.add_parser("components", help="list fixed-locus components with a census footer")
    common(p)
    p.add_argument("--stratum", type=_enum_arg(Stratum), default=None)
    p.add_argument("--family", type=_enum_arg(Family), default=None)
    p.add_argument("--kind", type=_enum_arg(Kind), default=None)

    p = sub.add_parser("tangent", help="tangent weight dump for one component")
    common(p, formats=("text", "json"))
    p.add_argument("component_id")

    p = sub.add_parser("tables", help="regenerate a classification table and diff it")
    common(p, formats=("text", "json"))
    p.add_argument("table", type=int, choices=(1, 2, 3, 4))

    p = sub.add_parser("verify", help="run the full invariant suite")
    common(p, formats=("text", "json"))

    return parser


def _summary_payload(summary: PoincareSummary) -> dict:
    return {
        "lambda": list(summary.lam),
        "betti": list(summary.betti),
        "euler": summary.euler,
        "hodge_diagonal": list(summary.hodge_diagonal),
        "census": {
            "points": summary.census.points,
            "lines": summary.census.lines,
            "surfaces": summary.census.surfaces,
        },
    }


def cmd_poincare(config: RunConfig, out) -> int:
    summary = homology.poincare_summary(lam=config.lam)
    if config.output_format == "json":
        json.dump(_summary_payload(summary), out, indent=2)
        out.write("\n")
    elif config.output_format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["degree", "betti"])
        for m, b in enumerate(summary.betti):
            writer.writerow([m, b])
    else:
        out.write(f"P(x) = {summary.polynomial_text()}\n")
        out.write(f"euler characteristic = {summary.euler}\n")
        out.write(f"census: points={summary.census.points} "
                  f"lines={summary.census.lines} surfaces={summary.census.surfaces}\n")
        out.write(f"lambda = {char_str(summary.lam)}\n")
    return EXIT_OK


def _component_payload(c: FixedComponent, lam: OneParamSubgroup) -> dict:
    return {
        "id": c.id,
        "stratum": c.stratum.value,
        "family": c.family.value,
        "kind": c.kind.value,
        "params": {name: list(value) for name, value in c.params},
        "u_list": [list(u) for u in c.u_list],
        "v_list": [list(v) for v in c.v_list],
        "stabilizer_weights": [list(w) for w in c.stabilizer_weights.expand()],
        "normal_weights": [list(w) for w in c.normal_weights.expand()],
        "eval_vector": list(c.eval_vector(lam)),
    }


_CSV_COLUMNS = ("id", "stratum", "family", "kind", "params", "u_list", "v_list",
                "stabilizer_weights", "normal_weights", "eval_vector")


def _component_csv_row(c: FixedComponent, lam: OneParamSubgroup) -> list[str]:
    return [
        c.id,
        c.stratum.value,
        c.family.value,
        c.kind.value,
        ";".join(f"{name}={char_str(value)}" for name, value in c.params),
        ";".join(char_str(u) for u in c.u_list),
        ";".join(char_str(v) for v in c.v_list),
        ";".join(char_str(w) for w in c.stabilizer_weights.expand()),
        ";".join(char_str(w) for w in c.normal_weights.expand()),
        char_str(c.eval_vector(lam)),
    ]


def cmd_components(config: RunConfig, out) -> int:
    components = filter_components(enumerate_all(), stratum=config.stratum,
                                   family=config.family, kind=config.kind)
    counts = census(components)
    if config.output_format == "json":
        for c in components:
            out.write(json.dumps(_component_payload(c, config.lam),
                                 separators=(",", ":")))
            out.write("\n")
        out.write(json.dumps({"census": {"points": counts.points,
                                         "lines": counts.lines,
                                         "surfaces": counts.surfaces}},
                             separators=(",", ":")))
        out.write("\n")
    elif config.output_format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for c in components:
            writer.writerow(_component_csv_row(c, config.lam))
        out.write(f"# census points={counts.points} lines={counts.lines} "
                  f"surfaces={counts.surfaces}\n")
    else:
        for c in components:
            out.write(f"{c.id}\t{c.stratum.value}\t{c.family.value}\t{c.kind.value}"
                      f"\tlambda={char_str(c.eval_vector(config.lam))}\n")
        out.write(f"census: points={counts.points} lines={counts.lines} "
                  f"surfaces={counts.surfaces}\n")
    return EXIT_OK


def cmd_tangent(config: RunConfig, component_id: str, out) -> int:
    component = find_component(enumerate_all(), component_id)
    if component is None:
        print(f"unknown component id: {component_id}", file=sys.stderr)
        return EXIT_USAGE
    model = tangent_weights(component)
    cell = homology.cell_dimension(component, config.lam, model)
    if config.output_format == "json":
        json.dump({
            "id": component.id,
            "kind": component.kind.value,
            "weights": [list(w) for w in model.weights.expand()],
            "chi0_multiplicity": model.chi0_multiplicity,
            "lambda": list(config.lam),
            "eval_vector": list(component.eval_vector(config.lam)),
            "p": cell.p,
        }, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{component.id}\n")
        out.write(model.weights.to_text())
        out.write("\n")
        out.write(f"chi0 multiplicity = {model.chi0_multiplicity}\n")
        out.write(f"p(lambda={char_str(config.lam)}) = {cell.p}\n")
    return EXIT_OK


def cmd_tables(config: RunConfig, table: int, out) -> int:
    rows, diffs = tables.regenerate(table)
    if config.output_format == "json":
        payload = {
            "table": table,
            "rows": [{
                "key": list(r.key),
                "support": list(r.support),
                "lines": list(r.lines),
                "limits": list(r.limits),
            } for r in rows],
            "diffs": [str(d) for d in diffs],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(f"Table {table}\n")
        for r in rows:
            absent = sorted(set(s for s in _SIGMA5_NAMES) - set(r.support))
            out.write(f"{r.label}\n")
            out.write(f"  support: Sigma5 minus {{{', '.join(absent)}}}\n")
            out.write(f"  lines:   {', '.join(r.lines) if r.lines else '-'}\n")
            out.write(f"  limits:  {', '.join(r.limits) if r.limits else '-'}\n")
        if diffs:
            out.write(f"{len(diffs)} diffs against golden data:\n")
            for d in diffs:
                out.write(f"  {d}\n")
        else:
            out.write("golden diff: clean\n")
    return EXIT_VERIFY if diffs else EXIT_OK


def cmd_verify(config: RunConfig, out) -> int:
    report = homology.verify(lam=config.lam)
    if config.output_format == "json":
        json.dump({
            "lambda": list(config.lam),
            "ok": report.ok,
            "checks": [{
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
                "counterexample": c.counterexample,
            } for c in report.checks],
        }, out, indent=2)
        out.write("\n")
    else:
        out.write(report.text())
        out.write("\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    config = RunConfig(
        lam=args.lam,
        output_format=args.output_format,
        stratum=getattr(args, "stratum", None),
        family=getattr(args, "family", None),
        kind=getattr(args, "kind", None),
    )
    out = sys.stdout
    try:
        if args.command == "poincare":
            return cmd_poincare(config, out)
        if args.command == "components":
            return cmd_components(config, out)
        if args.command == "tangent":
            return cmd_tangent(config, args.component_id, out)
        if args.command == "tables":
            return cmd_tables(config, args.table, out)
        if args.command == "verify":
            return cmd_verify(config, out)
        parser.error(f"unknown command {args.command}")
        return EXIT_USAGE
    except _INTEGRITY_ERRORS as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
