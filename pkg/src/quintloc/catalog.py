"""Catalog of the irreducible components of the torus-fixed locus.

The moduli space under study is the 26-dimensional space of semistable
sheaves on the projective plane with Hilbert polynomial 5m+3.  Its fixed
locus under the coordinate-scaling torus is a disjoint union of isolated
points, projective lines, and three surfaces, organised by the resolution
stratum (M0..M3) and by thirteen parameter families (alpha..nu).  This
module holds the classification as explicit data: for every family, the
supporting-monomial domain of the degree-5 parameter d (the degree-5 part
of a small monomial ideal), the d values that give lines, the d values
that are limits of components from shallower strata (and are therefore
not new components), the diagonal torus eigenvalues u/v of a defining
matrix, and the lambda-orbit used to sweep out the coordinate-permuted
copies of each base component.

The line/limit columns are classification input (golden data); the tangent
module re-derives the limit columns from zero-weight dimensions, and the
tables module diffs the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .weights import (
    CHI0,
    X,
    Y,
    Z,
    Char,
    OneParamSubgroup,
    Perm,
    SIGMA5,
    WeightMultiset,
    apply_perm,
    cadd,
    cneg,
    csub,
    divides,
    ideal_degree5,
    monomial_str,
    parse_monomial,
)

DEFAULT_LAMBDA: OneParamSubgroup = (0, 1, 7)


class CatalogIntegrity(RuntimeError):
    """Constructed component data disagrees with the embedded golden tables."""


class Stratum(str, Enum):
    M0 = "M0"
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"


class Family(str, Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"
    EPSILON = "epsilon"
    ZETA = "zeta"
    ETA = "eta"
    THETA = "theta"
    IOTA = "iota"
    KAPPA = "kappa"
    LAMBDA = "lambda"
    MU = "mu"
    NU = "nu"


class Kind(str, Enum):
    POINT = "point"
    LINE = "line"
    SURFACE = "surface"

    @property
    def dimension(self) -> int:
        return {"point": 0, "line": 1, "surface": 2}[self.value]

    @property
    def euler(self) -> int:
        return {"point": 1, "line": 2, "surface": 6}[self.value]


# lambda-orbit strategies: index permutations applied to the run's lambda.
# orbit3 sweeps {id, swap02, swap12} (base symmetric under x<->y),
# orbit3alt sweeps {id, swap01, swap02} (base symmetric under y<->z),
# orbit6 sweeps all of S3, single evaluates the base alone.
STRATEGIES: dict[str, tuple[Perm, ...]] = {
    "orbit3": ((0, 1, 2), (2, 1, 0), (0, 2, 1)),
    "orbit3alt": ((0, 1, 2), (1, 0, 2), (2, 1, 0)),
    "orbit6": ((0, 1, 2), (1, 0, 2), (2, 1, 0), (1, 2, 0), (0, 2, 1), (2, 0, 1)),
    "single": ((0, 1, 2),),
}


@dataclass(frozen=True)
class FixedComponent:
    """One irreducible component of the fixed locus.

    Tangent weights are computed from u_list/v_list once per base tuple;
    the coordinate-permuted copies enumerated by the orbit strategy share
    that data and differ only in eval_perm, which permutes the pairing
    one-parameter subgroup instead of the weights.
    """

    id: str
    stratum: Stratum
    family: Family
    kind: Kind
    params: tuple[tuple[str, Char], ...]
    u_list: tuple[Char, ...]
    v_list: tuple[Char, ...]
    stabilizer_weights: WeightMultiset
    normal_weights: WeightMultiset
    orbit: str
    orbit_index: int
    eval_perm: Perm

    def eval_vector(self, lam: OneParamSubgroup) -> OneParamSubgroup:
        return apply_perm(self.eval_perm, lam)

    def param(self, name: str) -> Char:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)


@dataclass(frozen=True)
class CensusCounts:
    points: int
    lines: int
    surfaces: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.points, self.lines, self.surfaces)


def _chars(*texts: str) -> tuple[Char, ...]:
    return tuple(parse_monomial(t) for t in texts)


@dataclass(frozen=True)
class TableRow:
    """Golden columns for one row of the classification tables.

    `absent` is the complement of the support column inside sigma^5,
    `lines` the affine-lines column, `limits` the limit-sheaves column
    (kept as degree-5 monomials throughout).
    """

    key: tuple[Char, ...]
    absent: tuple[Char, ...]
    lines: tuple[Char, ...]
    limits: tuple[Char, ...]

    def support(self) -> frozenset[Char]:
        return frozenset(SIGMA5.support()) - set(self.absent)


def _row(key, absent, lines=(), limits=()) -> TableRow:
    return TableRow(_chars(*key), _chars(*absent), _chars(*lines), _chars(*limits))


# Table of delta(X,Y,q1,q2,d) components; one row per unordered quadric
# pair modulo the x<->y swap, which also fixes the orbit strategy.
TABLE1: tuple[tuple[TableRow, str], ...] = (
    (_row(("X2", "Y2"), ("Z5", "XZ4", "YZ4", "X2Z3", "XYZ3", "Y2Z3"),
          lines=("X2Y2Z",)), "orbit3"),
    (_row(("X2", "Z2"), ("Y5", "Z5", "XY4", "Y4Z", "XY3Z"),
          limits=("X3YZ",)), "orbit6"),
    (_row(("Z2", "XY"), ("X5", "Y5", "Z5", "X4Z", "Y4Z"),
          limits=("X2Y2Z",)), "orbit3"),
    (_row(("X2", "YZ"), ("Y5", "Z5", "XY4", "XZ4", "X2Z3", "YZ4"),
          lines=("X2YZ2",), limits=("X3Y2",)), "orbit6"),
    (_row(("X2", "XY"), ("Y5", "Z5", "XZ4", "X2Z3", "YZ4", "Y2Z3", "Y3Z2", "Y4Z", "XYZ3"),
          lines=("X2YZ2", "X3YZ", "X2Y2Z", "X2Y3")), "orbit6"),
    (_row(("XZ", "YZ"), ("X5", "Y5", "Z5", "XZ4", "YZ4", "XY4", "X2Y3", "X3Y2", "X4Y"),
          lines=("XYZ3", "XY3Z", "X2Y2Z", "X3YZ"), limits=("X2Y2Z",)), "orbit3"),
    (_row(("X2", "XZ"), ("Y5", "Z5", "XY4", "XZ4", "YZ4", "Y2Z3", "Y3Z2", "Y4Z"),
          lines=("X3Z2", "X2YZ2", "X2Y2Z"), limits=("X4Y",)), "orbit6"),
    (_row(("XY", "YZ"), ("X5", "Y5", "Z5", "YZ4", "XZ4", "X2Z3", "X3Z2", "X4Z"),
          lines=("XY2Z2", "X2YZ2", "X3YZ"), limits=("X2Y3",)), "orbit6"),
    (_row(("XZ", "Z2"), ("X5", "Y5", "Z5", "Y4Z", "XY4", "X2Y3", "X3Y2", "X4Y"),
          lines=("XY2Z2", "X2YZ2", "X3Z2"), limits=("X2YZ2",)), "orbit6"),
)

# Depth-1 stratum: rows keyed by (family, l1, l2); the quadric triple is
# the family's fixed representative below.
TABLE2: dict[tuple[Family, Char, Char], TableRow] = {
    (Family.EPSILON, X, Y): _row(("X", "Y"), ("X5", "Y5", "Z5", "XZ4", "YZ4"),
                                 lines=("XYZ3",), limits=("X2Y2Z",)),
    (Family.EPSILON, X, Z): _row(("X", "Z"), ("X5", "Y5", "Z5", "XY4", "Y4Z"),
                                 lines=("XY3Z",), limits=("X2YZ2",)),
    (Family.EPSILON, Y, Z): _row(("Y", "Z"), ("X5", "Y5", "Z5", "X4Y", "X4Z"),
                                 lines=("X3YZ",), limits=("XY2Z2",)),
    (Family.ZETA, X, Y): _row(("X", "Y"), ("Y5", "Z5", "XZ4", "X2Z3", "YZ4"),
                              lines=("X2YZ2",), limits=("X3Y2", "X2Y2Z")),
    (Family.ZETA, X, Z): _row(("X", "Z"), ("Y5", "Z5", "XY4", "XZ4", "Y4Z"),
                              lines=("XY3Z",), limits=("X3YZ", "X2YZ2")),
    (Family.ZETA, Y, Z): _row(("Y", "Z"), ("X5", "Y5", "Z5", "XZ4"),
                              limits=("X2Y2Z", "XY2Z2")),
    (Family.ETA, X, Y): _row(("X", "Y"), ("Z5", "XZ4", "YZ4", "X2Z3", "XYZ3", "Y2Z3"),
                             lines=("XY2Z2", "X2YZ2"), limits=("X3Y2", "X2Y3")),
    (Family.ETA, X, Z): _row(("X", "Z"), ("Y5", "Z5", "XZ4", "YZ4"),
                             limits=("X2Y2Z", "X3YZ")),
    (Family.ETA, Y, Z): _row(("Y", "Z"), ("X5", "Z5", "XZ4", "YZ4"),
                             limits=("X2Y2Z", "XY3Z")),
    (Family.THETA, X, Y): _row(("X", "Y"), ("Y5", "Z5", "XZ4", "YZ4", "Y4Z", "Y2Z3", "Y3Z2"),
                               lines=("X2YZ2", "XY3Z", "XY2Z2"), limits=("X3YZ", "X3Y2")),
    (Family.THETA, X, Z): _row(("X", "Z"), ("Y5", "Z5", "XY4", "YZ4", "Y4Z", "Y2Z3", "Y3Z2"),
                               lines=("X2Y2Z", "XYZ3", "XY2Z2"), limits=("X3YZ", "X3Z2")),
    (Family.THETA, Y, Z): _row(("Y", "Z"), ("X5", "Y5", "Z5", "YZ4", "Y2Z3", "Y3Z2", "Y4Z"),
                               lines=("XYZ3", "XY2Z2", "XY3Z"), limits=("X2Y2Z", "X2YZ2")),
}

# Depth-2 stratum: one row per quadric-triple family.
TABLE3: dict[Family, TableRow] = {
    Family.IOTA: _row((), ("X5", "Y5", "Z5"),
                      limits=("X2Y2Z", "XY2Z2", "X2YZ2")),
    Family.KAPPA: _row((), ("Y5", "Z5", "XZ4"),
                       limits=("X2Y2Z", "XY2Z2", "X3YZ")),
    Family.LAMBDA: _row((), ("Z5", "XZ4", "YZ4"),
                        limits=("X2Y2Z", "XY3Z", "X3YZ")),
    Family.MU: _row((), ("Y5", "Y4Z", "Y3Z2", "Y2Z3", "YZ4", "Z5"),
                    lines=("XYZ3", "XY2Z2", "XY3Z"),
                    limits=("X2Y2Z", "X2YZ2", "X3YZ")),
}

# Deepest stratum: rows keyed by (line l, quadric q); all components are
# isolated points.  The limit column is stored as the degree-5 monomials d
# (the source table prints the quotients d/l).
TABLE4: tuple[TableRow, ...] = (
    _row(("X", "Y2"), ("Z5", "YZ4"), limits=("XY3Z", "X3YZ", "X2Y2Z", "X2YZ2")),
    _row(("X", "Z2"), ("Y5", "Y4Z"), limits=("XYZ3", "X3YZ", "X2Y2Z", "X2YZ2")),
    _row(("X", "YZ"), ("Y5", "Z5"), limits=("XY2Z2", "X3YZ", "X2Y2Z", "X2YZ2")),
    _row(("Y", "X2"), ("Z5", "XZ4"), limits=("X3YZ", "X2Y2Z", "XY3Z", "XY2Z2")),
    _row(("Y", "Z2"), ("X5", "X4Z"), limits=("XYZ3", "X2Y2Z", "XY3Z", "XY2Z2")),
    _row(("Y", "XZ"), ("X5", "Z5"), limits=("X2YZ2", "X2Y2Z", "XY3Z", "XY2Z2")),
    _row(("Z", "Y2"), ("X5", "X4Y"), limits=("XY3Z", "X2YZ2", "XY2Z2", "XYZ3")),
    _row(("Z", "X2"), ("Y5", "XY4"), limits=("X3YZ", "X2YZ2", "XY2Z2", "XYZ3")),
    _row(("Z", "XY"), ("X5", "Y5"), limits=("X2Y2Z", "X2YZ2", "XY2Z2", "XYZ3")),
)

# Quadric-triple representatives and the constant part of the u/v data for
# the depth-1 families (u1, u2, v1 depend on l1, l2, d).
M1_QTRIPLES: dict[Family, tuple[Char, Char, Char]] = {
    Family.EPSILON: _chars("XY", "XZ", "YZ"),
    Family.ZETA: _chars("X2", "XY", "YZ"),
    Family.ETA: _chars("X2", "XY", "Y2"),
    Family.THETA: _chars("X2", "XY", "XZ"),
}
_M1_UV_CONST: dict[Family, tuple[tuple[Char, Char], tuple[Char, Char, Char]]] = {
    Family.EPSILON: (((1, 1, 1), (1, 1, 1)), ((0, -1, -1), (-1, 0, -1), (-1, -1, 0))),
    Family.ZETA: (((2, 1, 0), (1, 1, 1)), ((-2, 0, 0), (0, -1, -1), (-1, -1, 0))),
    Family.ETA: (((1, 2, 0), (2, 1, 0)), ((0, -2, 0), (-2, 0, 0), (-1, -1, 0))),
    Family.THETA: (((2, 1, 0), (2, 0, 1)), ((-1, -1, 0), (-1, 0, -1), (-2, 0, 0))),
}
# (family, l1, l2, strategy) blocks actually enumerated; the remaining
# table rows are coordinate-permuted copies covered by the orbits.
_M1_BLOCKS: tuple[tuple[Family, Char, Char, str], ...] = (
    (Family.EPSILON, X, Y, "orbit3"),
    (Family.ZETA, X, Y, "orbit6"),
    (Family.ZETA, X, Z, "orbit6"),
    (Family.ZETA, Y, Z, "orbit6"),
    (Family.ETA, X, Y, "orbit3"),
    (Family.ETA, X, Z, "orbit6"),
    (Family.THETA, X, Y, "orbit6"),
    (Family.THETA, Y, Z, "orbit3alt"),
)

M2_QTRIPLES: dict[Family, tuple[Char, Char, Char]] = {
    Family.IOTA: _chars("XY", "XZ", "YZ"),
    Family.KAPPA: _chars("X2", "XY", "YZ"),
    Family.LAMBDA: _chars("X2", "XY", "Y2"),
    Family.MU: _chars("X2", "XY", "XZ"),
}
_M2_STRATEGY: dict[Family, str] = {
    Family.IOTA: "single",
    Family.KAPPA: "orbit6",
    Family.LAMBDA: "orbit3",
    Family.MU: "orbit3alt",
}

_NU_BLOCKS: tuple[tuple[Char, Char, str], ...] = (
    (X, parse_monomial("Y2"), "orbit6"),
    (X, parse_monomial("YZ"), "orbit3alt"),
)


def delta_uv(q1: Char, q2: Char, d: Char, l1: Char = X, l2: Char = Y):
    """u/v eigenvalues of the delta(l1,l2,q1,q2,d) matrix."""
    u = (csub(csub(csub(d, l1), l2), q2), csub(csub(csub(d, l1), l2), q1), CHI0)
    v3 = cadd(cadd(cadd(cneg(d), q1), q2), cadd(l1, l2))
    return u, (l1, l2, v3)


def m1_uv(family: Family, l1: Char, l2: Char, d: Char):
    """u/v eigenvalues and the 2-dim stabilizer weights for a depth-1 family."""
    (u3, u4), (v2, v3, v4) = _M1_UV_CONST[family]
    v1 = csub(cadd(l1, l2), d)
    u = (csub(d, l2), csub(d, l1), u3, u4)
    v = (v1, v2, v3, v4)
    stab = WeightMultiset((cadd(u3, v1), cadd(u4, v1)))
    return u, v, stab


def m2_uv(family: Family, d: Char):
    """u/v eigenvalues for a depth-2 family."""
    if family is Family.IOTA:
        return (X, Y, Z), (CHI0, CHI0, csub(d, (1, 1, 1)))
    if family is Family.KAPPA:
        return (csub(Y, X), csub(X, Z), CHI0), (X, Z, csub(d, (1, 1, 0)))
    if family is Family.LAMBDA:
        return (csub(X, Y), csub(Y, X), CHI0), (Y, X, csub(d, (1, 1, 0)))
    if family is Family.MU:
        return (csub(X, Y), csub(X, Z), CHI0), (Y, Z, csub(d, (2, 0, 0)))
    raise ValueError(f"{family} is not a depth-2 family")


def nu_uv(l: Char, q: Char, d: Char):
    """u/v eigenvalues of the 2x2 matrix behind nu(l,q,d)."""
    return (csub(csub(d, q), l), CHI0), (l, q)


def m2_normal_weights(u, v) -> WeightMultiset:
    """Normal-space weights to the depth-2 stratum: u_i + v3 - x - y - z."""
    return WeightMultiset(csub(cadd(ui, v[2]), (1, 1, 1)) for ui in u)


def m3_normal_weights(u, v) -> WeightMultiset:
    """Normal-space weights to the deepest stratum (four directions)."""
    return WeightMultiset((
        csub(cadd(u[0], v[0]), (1, 1, 1)),
        csub(cadd(u[0], v[1]), (2, 1, 1)),
        csub(cadd(u[0], v[1]), (1, 2, 1)),
        csub(cadd(u[0], v[1]), (1, 1, 2)),
    ))


def m1_normal_weights(u, v) -> WeightMultiset:
    """Normal-space weights to the depth-1 stratum: -v1-u3, -v1-u4.

    These already sit inside the ambient weight array, so they are never
    added as a correction; they are only inspected for zero weights.
    """
    return WeightMultiset((cneg(cadd(v[0], u[2])), cneg(cadd(v[0], u[3]))))


def _component_id(family: Family, params, index: int) -> str:
    inner = ",".join(monomial_str(value) for _, value in params)
    return f"{family.value}({inner})/{index}"


def _fan_out(out, family, stratum, kind, params, u, v, stab, normal, strategy):
    for index, perm in enumerate(STRATEGIES[strategy]):
        out.append(FixedComponent(
            id=_component_id(family, params, index),
            stratum=stratum,
            family=family,
            kind=kind,
            params=tuple(params),
            u_list=tuple(u),
            v_list=tuple(v),
            stabilizer_weights=stab,
            normal_weights=normal,
            orbit=strategy,
            orbit_index=index,
            eval_perm=perm,
        ))


def _check_support(label: str, derived: WeightMultiset, row: TableRow) -> None:
    if frozenset(derived.support()) != row.support():
        raise CatalogIntegrity(f"{label}: ideal closure disagrees with golden support")
    for c in row.lines + row.limits:
        if c not in derived:
            raise CatalogIntegrity(f"{label}: golden column entry {monomial_str(c)} outside support")


def _sorted(chars) -> list[Char]:
    return sorted(chars)


def _build_m0(out: list[FixedComponent]) -> None:
    sigma2_x = _chars("Y2", "Z2", "YZ")
    sigma2_y = _chars("X2", "Z2", "XZ")
    for q1 in sigma2_x:
        for q2 in sigma2_y:
            u = (csub(q1, X), csub(q2, Y), CHI0)
            _fan_out(out, Family.ALPHA, Stratum.M0, Kind.POINT,
                     (("q1", q1), ("q2", q2)), u, (X, Y, Z),
                     WeightMultiset(), WeightMultiset(), "orbit3")
    # the (X^2, XY)-type point: u collapses to (x, x, 0)
    q1, q2 = parse_monomial("X2"), parse_monomial("XY")
    _fan_out(out, Family.ALPHA, Stratum.M0, Kind.POINT,
             (("q1", q1), ("q2", q2)), (X, X, CHI0), (X, Y, Z),
             WeightMultiset(), WeightMultiset(), "orbit3alt")

    for q in sigma2_x:
        for l in (X, Y, Z):
            u = (csub(q, X), l, CHI0)
            _fan_out(out, Family.BETA, Stratum.M0, Kind.LINE,
                     (("q", q), ("l", l)), u, (X, Y, Z),
                     WeightMultiset(), WeightMultiset(), "orbit3alt")

    _fan_out(out, Family.GAMMA, Stratum.M0, Kind.SURFACE,
             (), (X, Y, CHI0), (X, Y, Z),
             WeightMultiset(), WeightMultiset(), "orbit3")


def _build_delta(out: list[FixedComponent]) -> None:
    for row, strategy in TABLE1:
        q1, q2 = row.key
        gens = {cadd(l, q) for l in (X, Y) for q in (q1, q2)}
        support = ideal_degree5(sorted(gens), 3)
        _check_support(f"delta{tuple(map(monomial_str, row.key))}", support, row)
        excluded = set(row.lines) | set(row.limits)
        line_ds = [d for d in row.lines if d not in row.limits]
        for d in _sorted(c for c in support.support() if c not in excluded):
            u, v = delta_uv(q1, q2, d)
            _fan_out(out, Family.DELTA, Stratum.M0, Kind.POINT,
                     (("l1", X), ("l2", Y), ("q1", q1), ("q2", q2), ("d", d)),
                     u, v, WeightMultiset(), WeightMultiset(), strategy)
        for d in _sorted(line_ds):
            u, v = delta_uv(q1, q2, d)
            _fan_out(out, Family.DELTA, Stratum.M0, Kind.LINE,
                     (("l1", X), ("l2", Y), ("q1", q1), ("q2", q2), ("d", d)),
                     u, v, WeightMultiset(), WeightMultiset(), strategy)


def _build_m1(out: list[FixedComponent]) -> None:
    for family, l1, l2, strategy in _M1_BLOCKS:
        row = TABLE2[(family, l1, l2)]
        q_triple = M1_QTRIPLES[family]
        gens = {cadd(l, q) for l in (l1, l2) for q in q_triple}
        support = ideal_degree5(sorted(gens), 3)
        _check_support(f"{family.value}({monomial_str(l1)},{monomial_str(l2)})", support, row)
        excluded = set(row.lines) | set(row.limits)
        params_base = (("l1", l1), ("l2", l2),
                       ("q1", q_triple[0]), ("q2", q_triple[1]), ("q3", q_triple[2]))
        for kind, ds in ((Kind.POINT, [c for c in support.support() if c not in excluded]),
                         (Kind.LINE, list(row.lines))):
            for d in _sorted(ds):
                u, v, stab = m1_uv(family, l1, l2, d)
                _fan_out(out, family, Stratum.M1, kind,
                         params_base + (("d", d),), u, v, stab,
                         WeightMultiset(), strategy)


def _build_m2(out: list[FixedComponent]) -> None:
    for family in (Family.IOTA, Family.KAPPA, Family.LAMBDA, Family.MU):
        row = TABLE3[family]
        q_triple = M2_QTRIPLES[family]
        support = ideal_degree5(q_triple, 2)
        _check_support(family.value, support, row)
        excluded = set(row.lines) | set(row.limits)
        params_base = (("q1", q_triple[0]), ("q2", q_triple[1]), ("q3", q_triple[2]))
        strategy = _M2_STRATEGY[family]
        for kind, ds in ((Kind.POINT, [c for c in support.support() if c not in excluded]),
                         (Kind.LINE, list(row.lines))):
            for d in _sorted(ds):
                u, v = m2_uv(family, d)
                _fan_out(out, family, Stratum.M2, kind,
                         params_base + (("d", d),), u, v,
                         WeightMultiset(), m2_normal_weights(u, v), strategy)


def nu_support(l: Char, q: Char) -> list[Char]:
    """Degree-5 monomials in the ideal (l, q), by divisibility."""
    return [d for d in SIGMA5.support() if divides(l, d) or divides(q, d)]


def _build_m3(out: list[FixedComponent]) -> None:
    by_key = {row.key: row for row in TABLE4}
    for l, q, strategy in _NU_BLOCKS:
        row = by_key[(l, q)]
        support = WeightMultiset(nu_support(l, q))
        _check_support(f"nu({monomial_str(l)},{monomial_str(q)})", support, row)
        excluded = set(row.limits)
        for d in _sorted(c for c in support.support() if c not in excluded):
            u, v = nu_uv(l, q, d)
            _fan_out(out, Family.NU, Stratum.M3, Kind.POINT,
                     (("l", l), ("q", q), ("d", d)), u, v,
                     WeightMultiset(), m3_normal_weights(u, v), strategy)


def enumerate_all() -> list[FixedComponent]:
    """The complete catalog, in a fixed deterministic order."""
    out: list[FixedComponent] = []
    _build_m0(out)
    _build_delta(out)
    _build_m1(out)
    _build_m2(out)
    _build_m3(out)
    ids = [c.id for c in out]
    if len(set(ids)) != len(ids):
        raise CatalogIntegrity("duplicate component ids")
    return out


def census(components) -> CensusCounts:
    points = sum(1 for c in components if c.kind is Kind.POINT)
    lines = sum(1 for c in components if c.kind is Kind.LINE)
    surfaces = sum(1 for c in components if c.kind is Kind.SURFACE)
    return CensusCounts(points, lines, surfaces)


def filter_components(components, stratum: Stratum | None = None,
                      family: Family | None = None,
                      kind: Kind | None = None) -> list[FixedComponent]:
    """Order-preserving predicate filter."""
    out = []
    for c in components:
        if stratum is not None and c.stratum is not stratum:
            continue
        if family is not None and c.family is not family:
            continue
        if kind is not None and c.kind is not kind:
            continue
        out.append(c)
    return out


def find_component(components, component_id: str) -> FixedComponent | None:
    for c in components:
        if c.id == component_id:
            return c
    return None
