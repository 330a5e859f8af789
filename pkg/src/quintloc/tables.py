"""Regeneration of the four classification tables from first principles.

For every table row the support column is recomputed as the degree-5 part
of the row's monomial ideal, and the limit column from zero-weight
dimensions of candidate components built at every supported d (normal
zero-weights for the deeper strata, zero-weight excess over the component
dimension for the open stratum).  Tables 2 and 3 also re-derive the
affine-lines column as the d with stratum-tangent zero-multiplicity one;
table 1's line column is classification input and is instead checked for
consistency against the zero-weight counts.  Any disagreement with the
embedded golden data is returned as an explicit diff.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (
    TABLE1,
    TABLE2,
    TABLE3,
    TABLE4,
    Family,
    FixedComponent,
    Kind,
    Stratum,
    TableRow,
    delta_uv,
    m1_uv,
    m2_normal_weights,
    m2_uv,
    m3_normal_weights,
    nu_support,
    nu_uv,
    M1_QTRIPLES,
    M2_QTRIPLES,
)
from .tangent import tangent_weights
from .weights import (
    Char,
    SIGMA5,
    WeightMultiset,
    cadd,
    ideal_degree5,
    monomial_str,
)


@dataclass(frozen=True)
class TableDiff:
    table: int
    row_label: str
    column: str
    derived: tuple[str, ...]
    golden: tuple[str, ...]

    def __str__(self) -> str:
        return (f"table {self.table} row {self.row_label} column {self.column}: "
                f"derived {list(self.derived)} != golden {list(self.golden)}")


@dataclass(frozen=True)
class RegeneratedRow:
    table: int
    label: str
    key: tuple[str, ...]
    support: tuple[str, ...]
    lines: tuple[str, ...]
    limits: tuple[str, ...]


def _names(chars) -> tuple[str, ...]:
    return tuple(monomial_str(c) for c in sorted(chars))


def _candidate(family: Family, stratum: Stratum, kind: Kind, label: str,
               u, v, stab=None, normal=None) -> FixedComponent:
    return FixedComponent(
        id=label, stratum=stratum, family=family, kind=kind, params=(),
        u_list=tuple(u), v_list=tuple(v),
        stabilizer_weights=stab if stab is not None else WeightMultiset(),
        normal_weights=normal if normal is not None else WeightMultiset(),
        orbit="single", orbit_index=0, eval_perm=(0, 1, 2),
    )


def _compare(diffs, table, label, column, derived, golden) -> None:
    derived_set, golden_set = set(derived), set(golden)
    if derived_set != golden_set:
        diffs.append(TableDiff(table, label, column,
                               _names(derived_set), _names(golden_set)))


def _regen_table1(diffs: list[TableDiff]) -> list[RegeneratedRow]:
    rows = []
    for row, _strategy in TABLE1:
        q1, q2 = row.key
        label = f"({monomial_str(q1)},{monomial_str(q2)})"
        gens = sorted({cadd(l, q) for l in ((1, 0, 0), (0, 1, 0)) for q in (q1, q2)})
        support = ideal_degree5(gens, 3)
        _compare(diffs, 1, label, "support",
                 set(SIGMA5.support()) - set(support.support()), row.absent)
        line_set = set(row.lines)
        derived_limits = []
        inconsistent = []
        for d in support.support():
            own = 1 if d in line_set else 0
            u, v = delta_uv(q1, q2, d)
            model = tangent_weights(_candidate(
                Family.DELTA, Stratum.M0, Kind.LINE if own else Kind.POINT,
                f"delta-cand{label}@{monomial_str(d)}", u, v))
            excess = model.chi0_multiplicity - own
            if excess not in (0, 1):
                inconsistent.append(d)
            if excess >= 1:
                derived_limits.append(d)
        _compare(diffs, 1, label, "limits", derived_limits, row.limits)
        _compare(diffs, 1, label, "consistency", inconsistent, ())
        rows.append(RegeneratedRow(1, label, (monomial_str(q1), monomial_str(q2)),
                                   _names(support.support()),
                                   _names(row.lines), _names(derived_limits)))
    return rows


def _regen_deep_row(diffs, table, label, row: TableRow, support_chars,
                    make_candidate) -> RegeneratedRow:
    """Shared line/limit derivation for the strata with a normal space."""
    derived_lines = []
    derived_limits = []
    inconsistent = []
    for d in sorted(support_chars):
        model = tangent_weights(make_candidate(d))
        stratum_chi0 = model.chi0_multiplicity - model.normal_chi0_multiplicity
        if stratum_chi0 not in (0, 1):
            inconsistent.append(d)
        if stratum_chi0 == 1:
            derived_lines.append(d)
        if model.normal_chi0_multiplicity >= 1:
            derived_limits.append(d)
    _compare(diffs, table, label, "lines", derived_lines, row.lines)
    _compare(diffs, table, label, "limits", derived_limits, row.limits)
    _compare(diffs, table, label, "consistency", inconsistent, ())
    return RegeneratedRow(table, label, tuple(monomial_str(c) for c in row.key),
                          _names(support_chars),
                          _names(derived_lines), _names(derived_limits))


def _regen_table2(diffs: list[TableDiff]) -> list[RegeneratedRow]:
    rows = []
    for (family, l1, l2), row in TABLE2.items():
        label = f"{family.value}({monomial_str(l1)},{monomial_str(l2)})"
        gens = sorted({cadd(l, q) for l in (l1, l2) for q in M1_QTRIPLES[family]})
        support = ideal_degree5(gens, 3)
        _compare(diffs, 2, label, "support",
                 set(SIGMA5.support()) - set(support.support()), row.absent)

        def make(d, family=family, l1=l1, l2=l2, label=label):
            u, v, stab = m1_uv(family, l1, l2, d)
            return _candidate(family, Stratum.M1, Kind.POINT,
                              f"{label}@{monomial_str(d)}", u, v, stab=stab)

        rows.append(_regen_deep_row(diffs, 2, label, row, support.support(), make))
    return rows


def _regen_table3(diffs: list[TableDiff]) -> list[RegeneratedRow]:
    rows = []
    for family, row in TABLE3.items():
        label = family.value
        support = ideal_degree5(M2_QTRIPLES[family], 2)
        _compare(diffs, 3, label, "support",
                 set(SIGMA5.support()) - set(support.support()), row.absent)

        def make(d, family=family, label=label):
            u, v = m2_uv(family, d)
            return _candidate(family, Stratum.M2, Kind.POINT,
                              f"{label}@{monomial_str(d)}", u, v,
                              normal=m2_normal_weights(u, v))

        rows.append(_regen_deep_row(diffs, 3, label, row, support.support(), make))
    return rows


def _regen_table4(diffs: list[TableDiff]) -> list[RegeneratedRow]:
    rows = []
    for row in TABLE4:
        l, q = row.key
        label = f"({monomial_str(l)},{monomial_str(q)})"
        support = nu_support(l, q)
        _compare(diffs, 4, label, "support",
                 set(SIGMA5.support()) - set(support), row.absent)

        def make(d, l=l, q=q, label=label):
            u, v = nu_uv(l, q, d)
            return _candidate(Family.NU, Stratum.M3, Kind.POINT,
                              f"nu{label}@{monomial_str(d)}", u, v,
                              normal=m3_normal_weights(u, v))

        rows.append(_regen_deep_row(diffs, 4, label, row, support, make))
    return rows


_REGEN = {1: _regen_table1, 2: _regen_table2, 3: _regen_table3, 4: _regen_table4}


def regenerate(table: int) -> tuple[list[RegeneratedRow], list[TableDiff]]:
    """Rebuild one table; returns (rows, diffs-against-golden)."""
    if table not in _REGEN:
        raise ValueError(f"no table {table}")
    diffs: list[TableDiff] = []
    rows = _REGEN[table](diffs)
    return rows, diffs


def diff_all() -> list[TableDiff]:
    diffs: list[TableDiff] = []
    for table in (1, 2, 3, 4):
        _, d = regenerate(table)
        diffs.extend(d)
    return diffs
