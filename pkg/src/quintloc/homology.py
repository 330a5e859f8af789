"""Betti numbers, Euler characteristic and Hodge diamond of the moduli space.

Under a one-parameter subgroup pairing nonzero with every nonzero tangent
weight, each fixed component X contributes its own homology shifted up by
2*p(X), where p(X) counts tangent weights pairing positively.  Summing
x^(2p) over points, (1+x^2)x^(2p) over lines and (1+4x^2+x^4)x^(2p) over
the three surfaces yields the Poincare polynomial; homology is torsion
free and concentrated in even degrees, and the Hodge numbers sit on the
diagonal with h^{p,p} = b_{2p}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import (
    DEFAULT_LAMBDA,
    CensusCounts,
    Family,
    FixedComponent,
    Kind,
    census,
    enumerate_all,
)
from .tangent import (
    G_CARDINALITY,
    MODULI_DIMENSION,
    W_CARDINALITY,
    TangentModel,
    tangent_weights,
    weights_G,
    weights_W,
)
from .weights import OneParamSubgroup, char_str, pairing

ALT_LAMBDA: OneParamSubgroup = (0, 2, 13)
TOP_DEGREE = 2 * MODULI_DIMENSION

#: Betti numbers b_0, b_2, ..., b_52 of the moduli space
GOLDEN_BETTI_EVEN: tuple[int, ...] = (
    1, 2, 6, 13, 26, 45, 68, 87, 100, 107, 111, 112, 113,
    113, 113, 112, 111, 107, 100, 87, 68, 45, 26, 13, 6, 2, 1,
)
GOLDEN_EULER = 1695
GOLDEN_CENSUS = (1329, 174, 3)

#: point/line counts per family (surfaces: gamma carries all 3)
GOLDEN_FAMILY_CENSUS: dict[Family, tuple[int, int]] = {
    Family.ALPHA: (30, 0),
    Family.BETA: (0, 27),
    Family.GAMMA: (0, 0),
    Family.DELTA: (495, 90),
    Family.EPSILON: (42, 3),
    Family.ZETA: (246, 12),
    Family.ETA: (123, 6),
    Family.THETA: (81, 27),
    Family.IOTA: (15, 0),
    Family.KAPPA: (90, 0),
    Family.LAMBDA: (45, 0),
    Family.MU: (27, 9),
    Family.NU: (135, 0),
}


class NonGenericLambda(RuntimeError):
    """The chosen one-parameter subgroup annihilates a nonzero tangent weight."""

    def __init__(self, component_id: str, weight, lam):
        self.component_id = component_id
        self.weight = weight
        self.lam = lam
        super().__init__(
            f"lambda {lam} pairs to zero with weight {char_str(weight)} "
            f"on component {component_id}"
        )


@dataclass(frozen=True)
class CellDatum:
    component_id: str
    kind: Kind
    p: int


@dataclass(frozen=True)
class PoincareSummary:
    lam: OneParamSubgroup
    betti: tuple[int, ...]          # b_0 .. b_52, odd entries zero
    euler: int
    hodge_diagonal: tuple[int, ...]  # h^{0,0} .. h^{26,26}
    census: CensusCounts

    def hodge(self, p: int, q: int) -> int:
        if p != q:
            return 0
        return self.hodge_diagonal[p]

    def polynomial_text(self) -> str:
        """P(x) in descending powers, omitting zero terms."""
        terms = []
        for m in range(TOP_DEGREE, -1, -1):
            b = self.betti[m]
            if b == 0:
                continue
            coeff = "" if b == 1 else str(b)
            if m == 0:
                terms.append(str(b))
            elif m == 1:
                terms.append(f"{coeff}x")
            else:
                terms.append(f"{coeff}x^{m}")
        return " + ".join(terms) if terms else "0"


def cell_dimension(component: FixedComponent, lam: OneParamSubgroup,
                   model: TangentModel | None = None) -> CellDatum:
    """Positive-weight dimension p of the tangent space at the component.

    The pairing vector is the component's orbit permutation applied to lam;
    zero pairings must come exactly from the trivial-character copies,
    otherwise lam is not generic for this component.
    """
    if model is None:
        model = tangent_weights(component)
    vector = component.eval_vector(lam)
    p = 0
    for c in model.weights.expand():
        value = pairing(vector, c)
        if value > 0:
            p += 1
        elif value == 0 and c != (0, 0, 0):
            raise NonGenericLambda(component.id, c, lam)
    return CellDatum(component.id, component.kind, p)


def assemble(cells, lam: OneParamSubgroup = DEFAULT_LAMBDA,
             counts: CensusCounts | None = None) -> PoincareSummary:
    """Sum the per-component homology contributions into one summary."""
    coeffs = [0] * (TOP_DEGREE + 1)

    def bump(degree: int, value: int = 1) -> None:
        if degree <= TOP_DEGREE:
            coeffs[degree] += value

    points = lines = surfaces = 0
    for cell in cells:
        base = 2 * cell.p
        if cell.kind is Kind.POINT:
            points += 1
            bump(base)
        elif cell.kind is Kind.LINE:
            lines += 1
            bump(base)
            bump(base + 2)
        else:
            surfaces += 1
            bump(base)
            bump(base + 2, 4)
            bump(base + 4)
    if counts is None:
        counts = CensusCounts(points, lines, surfaces)
    betti = tuple(coeffs)
    hodge_diagonal = tuple(betti[2 * p] for p in range(MODULI_DIMENSION + 1))
    return PoincareSummary(
        lam=lam,
        betti=betti,
        euler=sum(betti),
        hodge_diagonal=hodge_diagonal,
        census=counts,
    )


def poincare_summary(components=None,
                     lam: OneParamSubgroup = DEFAULT_LAMBDA) -> PoincareSummary:
    """Full pipeline: catalog -> tangent models -> cells -> summary."""
    if components is None:
        components = enumerate_all()
    cells = [cell_dimension(c, lam) for c in components]
    return assemble(cells, lam, census(components))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.counterexample}]" if self.counterexample else ""
        return f"{status} {self.name}: {self.detail}{extra}"


@dataclass
class VerificationReport:
    lam: OneParamSubgroup
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"{'OK' if self.ok else 'FAILED'} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return "\n".join(lines)


def verify(components=None, lam: OneParamSubgroup = DEFAULT_LAMBDA,
           alt_lam: OneParamSubgroup = ALT_LAMBDA,
           include_tables: bool = True) -> VerificationReport:
    """Run the full invariant suite and report pass/fail per check."""
    if components is None:
        components = enumerate_all()
    report = VerificationReport(lam=lam)

    def check(name, passed, detail, counterexample=None):
        report.checks.append(CheckResult(name, bool(passed), detail, counterexample))

    counts = census(components)
    check("census", counts.as_tuple() == GOLDEN_CENSUS,
          f"{counts.as_tuple()} expected {GOLDEN_CENSUS}")

    by_family = {f: [0, 0] for f in Family}
    for c in components:
        if c.kind is Kind.POINT:
            by_family[c.family][0] += 1
        elif c.kind is Kind.LINE:
            by_family[c.family][1] += 1
    family_bad = [f.value for f in Family
                  if tuple(by_family[f]) != GOLDEN_FAMILY_CENSUS[f]]
    check("family-census", not family_bad,
          "per-family point/line counts match" if not family_bad
          else f"mismatch in {family_bad}",
          family_bad[0] if family_bad else None)

    models: dict[str, TangentModel] = {}
    broken: list[tuple[str, str]] = []
    for c in components:
        try:
            models[c.id] = tangent_weights(c)
        except Exception as exc:  # report, don't abort: fault localization
            broken.append((c.id, str(exc)))
    check("tangent-computable", not broken,
          f"{len(models)} tangent models" if not broken
          else f"{len(broken)} components failed: {broken[0][1]}",
          broken[0][0] if broken else None)

    bad = [c.id for c in components
           if (len(weights_W(c.stratum, c.u_list, c.v_list)) != W_CARDINALITY[c.stratum]
               or len(weights_G(c.stratum, c.u_list, c.v_list)) != G_CARDINALITY[c.stratum])]
    check("array-cardinalities", not bad,
          "W/G sizes are (45,19)/(62,38)/(48,25)/(34,12) per stratum",
          bad[0] if bad else None)

    bad = [cid for cid, m in models.items() if len(m.weights) != MODULI_DIMENSION]
    check("tangent-dimension", not bad and not broken,
          f"all tangent multisets have cardinality {MODULI_DIMENSION}",
          bad[0] if bad else (broken[0][0] if broken else None))

    bad = [c.id for c in components
           if c.id in models
           and models[c.id].chi0_multiplicity != c.kind.dimension]
    check("chi0-dimension", not bad and not broken,
          "zero-weight multiplicity equals component dimension",
          bad[0] if bad else (broken[0][0] if broken else None))

    bad = [cid for cid, m in models.items()
           if any(abs(e) > 6 for c in m.weights.support() for e in c)]
    check("coordinate-range", not bad,
          "all weight coordinates within [-6, 6]", bad[0] if bad else None)

    def run_cells(vector):
        cells = []
        for c in components:
            if c.id not in models:
                raise NonGenericLambda(c.id, (0, 0, 0), vector)
            cells.append(cell_dimension(c, vector, models[c.id]))
        return cells

    summary = None
    try:
        cells = run_cells(lam)
        check("lambda-genericity", True,
              f"lambda={lam} pairs nonzero with every nonzero weight")
        summary = assemble(cells, lam, counts)
    except NonGenericLambda as exc:
        check("lambda-genericity", False, str(exc), exc.component_id)

    golden = [0] * (TOP_DEGREE + 1)
    golden[::2] = GOLDEN_BETTI_EVEN
    if summary is not None:
        check("betti-golden", list(summary.betti) == golden,
              "Poincare coefficients match the golden vector")
        check("betti-palindrome",
              all(summary.betti[m] == summary.betti[TOP_DEGREE - m]
                  for m in range(TOP_DEGREE + 1))
              and all(summary.betti[m] == 0 for m in range(1, TOP_DEGREE, 2))
              and summary.betti[0] == 1 and summary.betti[TOP_DEGREE] == 1,
              "b_m = b_(52-m), odd degrees vanish, b_0 = b_52 = 1")
        euler_by_kind = sum(c.kind.euler for c in components)
        check("euler", summary.euler == GOLDEN_EULER == euler_by_kind,
              f"sum of Betti numbers {summary.euler}, "
              f"sum of component Euler numbers {euler_by_kind}, expected {GOLDEN_EULER}")
        check("hodge-diagonal",
              all(summary.hodge_diagonal[p] == summary.betti[2 * p]
                  for p in range(MODULI_DIMENSION + 1))
              and sum(summary.hodge_diagonal) == GOLDEN_EULER,
              "h^{p,p} = b_{2p} and the diagonal sums to 1695")
    else:
        for name in ("betti-golden", "betti-palindrome", "euler", "hodge-diagonal"):
            check(name, False, "skipped: no summary (non-generic lambda)")

    try:
        alt_cells = run_cells(alt_lam)
        alt = assemble(alt_cells, alt_lam, counts)
        check("lambda-independence",
              summary is not None and alt.betti == summary.betti,
              f"lambda={alt_lam} reproduces the same Betti vector")
    except NonGenericLambda as exc:
        check("lambda-independence", False, str(exc), exc.component_id)

    if include_tables:
        from . import tables

        diffs = tables.diff_all()
        check("tables", not diffs,
              "classification tables 1-4 regenerate with zero diffs"
              if not diffs else f"{len(diffs)} cell diffs, first: {diffs[0]}",
              diffs[0].row_label if diffs else None)

    return report
