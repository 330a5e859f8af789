"""Cell dimensions, assembly, verification report, fault injection."""

import dataclasses
import random

import pytest

from quintloc.catalog import DEFAULT_LAMBDA, Kind, census
from quintloc.homology import (
    ALT_LAMBDA,
    GOLDEN_BETTI_EVEN,
    GOLDEN_EULER,
    CellDatum,
    NonGenericLambda,
    assemble,
    cell_dimension,
    poincare_summary,
    verify,
)


@pytest.fixture(scope="module")
def cells(components, models):
    return [cell_dimension(c, DEFAULT_LAMBDA, models[c.id]) for c in components]


def test_assemble_empty():
    summary = assemble([])
    assert all(b == 0 for b in summary.betti)
    assert summary.euler == 0


def test_assemble_single_cells():
    point = assemble([CellDatum("p", Kind.POINT, 3)])
    assert point.betti[6] == 1 and sum(point.betti) == 1
    line = assemble([CellDatum("l", Kind.LINE, 3)])
    assert line.betti[6] == line.betti[8] == 1 and sum(line.betti) == 2
    surface = assemble([CellDatum("s", Kind.SURFACE, 3)])
    assert (surface.betti[6], surface.betti[8], surface.betti[10]) == (1, 4, 1)
    assert sum(surface.betti) == 6


def test_assemble_is_permutation_invariant(cells, components):
    shuffled = list(cells)
    random.Random(7).shuffle(shuffled)
    counts = census(components)
    assert assemble(shuffled, DEFAULT_LAMBDA, counts) == assemble(
        cells, DEFAULT_LAMBDA, counts)


def test_golden_polynomial(cells, components):
    summary = assemble(cells, DEFAULT_LAMBDA, census(components))
    assert summary.betti[::2] == GOLDEN_BETTI_EVEN
    assert all(b == 0 for b in summary.betti[1::2])
    assert summary.euler == GOLDEN_EULER


def test_source_and_sink_unique(cells):
    # b_0 = b_52 = 1: a unique cell hits degree 0, a unique one degree 52
    assert sum(1 for c in cells if c.p == 0) == 1
    top = [c for c in cells
           if 2 * c.p + 2 * c.kind.dimension >= 52]
    assert len(top) == 1
    assert max(c.p for c in cells) == 26


def test_p_range(cells):
    for c in cells:
        assert 0 <= c.p <= 26 - c.kind.dimension


def test_hodge_relations(cells, components):
    summary = assemble(cells, DEFAULT_LAMBDA, census(components))
    for p in range(27):
        assert summary.hodge(p, p) == summary.betti[2 * p]
        assert summary.hodge(p, (p + 1) % 27) == 0 or p + 1 > 26
    assert sum(summary.hodge_diagonal) == GOLDEN_EULER


def test_lambda_independence(components, models):
    alt = [cell_dimension(c, ALT_LAMBDA, models[c.id]) for c in components]
    base = [cell_dimension(c, DEFAULT_LAMBDA, models[c.id]) for c in components]
    assert assemble(alt, ALT_LAMBDA).betti == assemble(base, DEFAULT_LAMBDA).betti


def test_non_generic_lambda(components, models):
    # (0,1,1) annihilates y - z, which occurs in tangent weights
    with pytest.raises(NonGenericLambda):
        for c in components:
            cell_dimension(c, (0, 1, 1), models[c.id])


def test_poincare_summary_pipeline():
    summary = poincare_summary()
    assert summary.betti[::2] == GOLDEN_BETTI_EVEN
    assert summary.census.as_tuple() == (1329, 174, 3)


def test_polynomial_text():
    summary = poincare_summary()
    text = summary.polynomial_text()
    assert text.startswith("x^52 + 2x^50 + 6x^48")
    assert text.endswith("+ 6x^4 + 2x^2 + 1")


def test_verify_all_pass(components):
    report = verify(components)
    assert report.ok, report.text()
    assert len(report.checks) == 14


def test_verify_catches_corruption(components):
    # damage one component's eigenvalue data; verify must name it
    target = next(c for c in components if c.family.value == "kappa")
    bad = dataclasses.replace(target, u_list=((6, -6, 0),) + target.u_list[1:])
    corrupted = [bad if c is target else c for c in components]
    report = verify(corrupted, include_tables=False)
    assert not report.ok
    failing = [c for c in report.checks if not c.passed]
    assert any(c.counterexample == target.id for c in failing)


def test_verify_reports_nongeneric_lambda(components):
    report = verify(components, lam=(0, 1, 1), include_tables=False)
    assert not report.ok
    names = {c.name for c in report.checks if not c.passed}
    assert "lambda-genericity" in names
