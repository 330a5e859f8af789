"""Torus weight decomposition of the 26-dimensional tangent spaces.

For a fixed component with diagonal eigenvalue lists u, v the ambient
parameter space contributes one weight block -v_r - u_s + sigma^deg per
matrix slot, the symmetry group contributes a difference block, and the
tangent space of the moduli space is their strict multiset difference,
corrected by the stabilizer weights (depth-1 stratum) and by the
normal-space weights (depth-2 and -3 strata).  Zero-weight multiplicities
recover the dimension of the fixed component and detect components that
are really limits of shallower ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .catalog import Family, FixedComponent, Stratum, m1_normal_weights
from .weights import (
    CHI0,
    Char,
    WeightMultiset,
    cadd,
    cneg,
    csub,
    msub,
    shift,
    sigma,
)

MODULI_DIMENSION = 26
COORD_BOUND = 6


class ArityMismatch(ValueError):
    """u/v lists do not have the stratum's expected lengths."""


class DimensionViolation(RuntimeError):
    """Tangent multiset does not have exactly 26 elements."""


class RangeViolation(RuntimeError):
    """A tangent weight coordinate fell outside [-6, 6]."""


class WrongStratum(ValueError):
    """Normal-space data requested for the open stratum."""


class LimitClass(Enum):
    INTERIOR = "interior"
    LINE_LIMIT = "line-limit"
    SURFACE_LIMIT = "surface-limit"


@dataclass(frozen=True)
class TangentModel:
    component_id: str
    weights: WeightMultiset
    chi0_multiplicity: int
    normal_chi0_multiplicity: int


# (row, col, sigma-degree) cells of the ambient weight array per stratum;
# degree 0 means the bare character -v_r - u_s.
_W_CELLS: dict[Stratum, tuple[tuple[int, int, int], ...]] = {
    Stratum.M0: tuple((r, s, 2) for r in range(3) for s in range(2))
    + tuple((r, 2, 1) for r in range(3)),
    Stratum.M1: ((0, 0, 1), (0, 1, 1), (0, 2, 0), (0, 3, 0))
    + tuple((r, s, deg) for r in range(1, 4)
            for s, deg in ((0, 2), (1, 2), (2, 1), (3, 1))),
    Stratum.M2: tuple((r, s, 1) for r in range(2) for s in range(3))
    + tuple((2, s, 3) for s in range(3)),
    Stratum.M3: ((0, 0, 3), (0, 1, 1), (1, 0, 4), (1, 1, 2)),
}

_ARITY: dict[Stratum, int] = {
    Stratum.M0: 3,
    Stratum.M1: 4,
    Stratum.M2: 3,
    Stratum.M3: 2,
}

W_CARDINALITY = {Stratum.M0: 45, Stratum.M1: 62, Stratum.M2: 48, Stratum.M3: 34}
G_CARDINALITY = {Stratum.M0: 19, Stratum.M1: 38, Stratum.M2: 25, Stratum.M3: 12}


def _check_arity(stratum: Stratum, u_list, v_list) -> None:
    n = _ARITY[stratum]
    if len(u_list) != n or len(v_list) != n:
        raise ArityMismatch(
            f"{stratum.value} expects {n} u's and v's, got {len(u_list)}/{len(v_list)}"
        )


def _block(c: Char, deg: int) -> WeightMultiset:
    return shift(c, sigma(deg)) if deg else WeightMultiset((c,))


def weights_W(stratum: Stratum, u_list, v_list) -> WeightMultiset:
    """Ambient parameter-space weights: union of -v_r - u_s + sigma^deg."""
    _check_arity(stratum, u_list, v_list)
    out = WeightMultiset()
    for r, s, deg in _W_CELLS[stratum]:
        out = out.union(_block(cneg(cadd(v_list[r], u_list[s])), deg))
    return out


def weights_G(stratum: Stratum, u_list, v_list) -> WeightMultiset:
    """Symmetry-group weights (orbit directions) per stratum."""
    _check_arity(stratum, u_list, v_list)
    u, v = u_list, v_list
    if stratum is Stratum.M0:
        out = WeightMultiset((
            CHI0, csub(u[0], u[1]), CHI0, csub(v[1], v[0]), csub(v[2], v[0]),
            csub(u[1], u[0]), CHI0, csub(v[0], v[1]), CHI0, csub(v[2], v[1]),
            csub(v[0], v[2]), csub(v[1], v[2]), CHI0,
        ))
        out = out.union(_block(csub(u[2], u[0]), 1))
        return out.union(_block(csub(u[2], u[1]), 1))
    if stratum is Stratum.M1:
        out = WeightMultiset((
            CHI0, csub(v[2], v[1]), csub(v[3], v[1]),
            csub(v[1], v[2]), CHI0, csub(v[3], v[2]),
            csub(v[1], v[3]), csub(v[2], v[3]), CHI0,
            CHI0, CHI0, CHI0, CHI0,
            csub(u[0], u[1]), csub(u[1], u[0]),
            csub(u[2], u[3]), csub(u[3], u[2]),
        ))
        for r in (1, 2, 3):
            out = out.union(_block(csub(v[0], v[r]), 1))
        for s in (2, 3):
            out = out.union(_block(csub(u[s], u[0]), 1))
            out = out.union(_block(csub(u[s], u[1]), 1))
        return out
    if stratum is Stratum.M2:
        out = WeightMultiset((
            CHI0, csub(u[0], u[1]), csub(u[0], u[2]),
            csub(u[1], u[0]), CHI0, csub(u[1], u[2]),
            csub(u[2], u[0]), csub(u[2], u[1]), CHI0,
            CHI0, CHI0, csub(v[1], v[0]), csub(v[0], v[1]),
        ))
        out = out.union(_block(csub(v[0], v[2]), 2))
        return out.union(_block(csub(v[1], v[2]), 2))
    out = WeightMultiset((CHI0, CHI0, CHI0))
    out = out.union(_block(csub(u[1], u[0]), 2))
    return out.union(_block(csub(v[0], v[1]), 1))


def tangent_weights(component: FixedComponent) -> TangentModel:
    """Full 26-element tangent weight multiset of the moduli space."""
    W = weights_W(component.stratum, component.u_list, component.v_list)
    G = weights_G(component.stratum, component.u_list, component.v_list)
    if len(component.stabilizer_weights):
        G = msub(G, component.stabilizer_weights, strict=True)
    weights = msub(W, G, strict=True)
    if len(component.normal_weights):
        weights = weights.union(component.normal_weights)
    if len(weights) != MODULI_DIMENSION:
        raise DimensionViolation(
            f"{component.id}: tangent cardinality {len(weights)} != {MODULI_DIMENSION}"
        )
    for c in weights.support():
        if any(abs(e) > COORD_BOUND for e in c):
            raise RangeViolation(f"{component.id}: weight {c} out of range")
    if component.stratum is Stratum.M0:
        normal_chi0 = 0
    else:
        normal_chi0 = _normal_multiset(component).multiplicity(CHI0)
    return TangentModel(
        component_id=component.id,
        weights=weights,
        chi0_multiplicity=weights.multiplicity(CHI0),
        normal_chi0_multiplicity=normal_chi0,
    )


def _normal_multiset(component: FixedComponent) -> WeightMultiset:
    if component.stratum is Stratum.M1:
        return m1_normal_weights(component.u_list, component.v_list)
    return component.normal_weights


def normal_chi0(component: FixedComponent) -> int:
    """Zero-weight dimension of the normal space to the component's stratum."""
    if component.stratum is Stratum.M0:
        raise WrongStratum("the open stratum has no normal space")
    return _normal_multiset(component).multiplicity(CHI0)


def classify_limit(component: FixedComponent,
                   model: TangentModel | None = None) -> LimitClass:
    """Interior component, or limit of a line/surface from a shallower stratum.

    For the open stratum the discriminator is the excess of the zero-weight
    multiplicity over the component's own dimension; deeper strata use the
    zero-weight dimension of the normal space.  A limit sits inside a
    surface exactly when the relevant zero multiplicity reaches 2.
    """
    if model is None:
        model = tangent_weights(component)
    if component.stratum is Stratum.M0:
        if component.family is not Family.DELTA:
            return LimitClass.INTERIOR
        excess = model.chi0_multiplicity - component.kind.dimension
        if excess == 0:
            return LimitClass.INTERIOR
        return (LimitClass.SURFACE_LIMIT if model.chi0_multiplicity == 2
                else LimitClass.LINE_LIMIT)
    n = model.normal_chi0_multiplicity
    if n == 0:
        return LimitClass.INTERIOR
    return LimitClass.SURFACE_LIMIT if n == 2 else LimitClass.LINE_LIMIT
