"""Flat straight-line reference implementation of the whole census.

This is a deliberately primitive port of the original computer-algebra
session that the structured pipeline reimplements: characters are bare
tuples, weight lists are plain Python lists with duplicates, subtraction is
the lenient remove-first-match loop, and the lambda vectors are hardcoded.
It is kept free of any quintloc imports so the two routes share no code;
the acceptance suite requires their final polynomial and per-family
point/line counters to agree exactly.
"""

from __future__ import annotations


def ch(i, j, k):
    return (i, j, k)


x = ch(1, 0, 0)
y = ch(0, 1, 0)
z = ch(0, 0, 1)


def lin(cx=0, cy=0, cz=0):
    return (cx, cy, cz)


def c_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def c_neg(a):
    return (-a[0], -a[1], -a[2])


def c_sub(a, b):
    return c_add(a, c_neg(b))


s1 = [x, y, z]
s2 = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
s2_0 = [(0, 2, 0), (0, 0, 2), (0, 1, 1)]
s2_1 = [(2, 0, 0), (0, 0, 2), (1, 0, 1)]
s2_2 = [(2, 0, 0), (0, 2, 0), (1, 1, 0)]
s3 = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1), (1, 2, 0),
      (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)]
s4 = [(4, 0, 0), (0, 4, 0), (0, 0, 4), (3, 1, 0), (2, 2, 0), (1, 3, 0),
      (3, 0, 1), (2, 0, 2), (1, 0, 3), (0, 3, 1), (0, 2, 2), (0, 1, 3),
      (2, 1, 1), (1, 2, 1), (1, 1, 2)]
s5 = [(5, 0, 0), (0, 5, 0), (0, 0, 5), (4, 1, 0), (3, 2, 0), (2, 3, 0),
      (1, 4, 0), (4, 0, 1), (3, 0, 2), (2, 0, 3), (1, 0, 4), (0, 4, 1),
      (0, 3, 2), (0, 2, 3), (0, 1, 4), (3, 1, 1), (1, 3, 1), (1, 1, 3),
      (2, 2, 1), (2, 1, 2), (1, 2, 2)]


def add(p, lst):
    return [c_add(p, q) for q in lst]


def positive_part(lst):
    return sum(1 for v in lst if v > 0)


def values(w, lam):
    return [wi[0] * lam[0] + wi[1] * lam[1] + wi[2] * lam[2] for wi in w]


def sub(l, ll):
    out = list(l)
    for q in ll:
        for i, p in enumerate(out):
            if p == q:
                del out[i]
                break
    return out


def id2(l):
    ll = []
    for g in l:
        ll = ll + add(g, s3)
    return sub(s5, sub(s5, ll))


def id3(l):
    ll = []
    for g in l:
        ll = ll + add(g, s2)
    return sub(s5, sub(s5, ll))


class Session:
    """Polynomial accumulator plus the point/line bookkeeping."""

    def __init__(self):
        self.P = {}
        self.points = 0
        self.lines = 0
        self.family = None
        self.by_family = {}

    def set_family(self, name):
        self.family = name
        self.by_family.setdefault(name, [0, 0])

    def _bump(self, deg, coeff=1):
        self.P[deg] = self.P.get(deg, 0) + coeff

    def _tally(self, what, n):
        if what == "points":
            self.points += n
            self.by_family[self.family][0] += n
        else:
            self.lines += n
            self.by_family[self.family][1] += n

    def point_3(self, l):
        self._tally("points", 3)
        for lam in [(0, 1, 7), (7, 1, 0), (0, 7, 1)]:
            self._bump(2 * positive_part(values(l, lam)))

    def point_3_1(self, l):
        self._tally("points", 3)
        for lam in [(0, 1, 7), (1, 0, 7), (7, 1, 0)]:
            self._bump(2 * positive_part(values(l, lam)))

    def point_6(self, l):
        self._tally("points", 6)
        for lam in [(0, 1, 7), (1, 0, 7), (7, 1, 0), (1, 7, 0), (0, 7, 1), (7, 0, 1)]:
            self._bump(2 * positive_part(values(l, lam)))

    def line_3(self, l):
        self._tally("lines", 3)
        for lam in [(0, 1, 7), (7, 1, 0), (0, 7, 1)]:
            p = 2 * positive_part(values(l, lam))
            self._bump(p)
            self._bump(p + 2)

    def line_3_1(self, l):
        self._tally("lines", 3)
        for lam in [(0, 1, 7), (1, 0, 7), (7, 1, 0)]:
            p = 2 * positive_part(values(l, lam))
            self._bump(p)
            self._bump(p + 2)

    def line_6(self, l):
        self._tally("lines", 6)
        for lam in [(0, 1, 7), (1, 0, 7), (7, 1, 0), (1, 7, 0), (0, 7, 1), (7, 0, 1)]:
            p = 2 * positive_part(values(l, lam))
            self._bump(p)
            self._bump(p + 2)

    def surface_3(self, l):
        for lam in [(0, 1, 7), (7, 1, 0), (0, 7, 1)]:
            p = 2 * positive_part(values(l, lam))
            self._bump(p)
            self._bump(p + 2, 4)
            self._bump(p + 4)


def w0(u, v):
    return (add(c_neg(c_add(v[0], u[0])), s2) + add(c_neg(c_add(v[0], u[1])), s2)
            + add(c_neg(c_add(v[0], u[2])), s1)
            + add(c_neg(c_add(v[1], u[0])), s2) + add(c_neg(c_add(v[1], u[1])), s2)
            + add(c_neg(c_add(v[1], u[2])), s1)
            + add(c_neg(c_add(v[2], u[0])), s2) + add(c_neg(c_add(v[2], u[1])), s2)
            + add(c_neg(c_add(v[2], u[2])), s1))


def g0(u, v):
    return ([c_sub(u[0], u[0]), c_sub(u[0], u[1]),
             c_sub(v[0], v[0]), c_sub(v[1], v[0]), c_sub(v[2], v[0])]
            + [c_sub(u[1], u[0]), c_sub(u[1], u[1]),
               c_sub(v[0], v[1]), c_sub(v[1], v[1]), c_sub(v[2], v[1])]
            + add(c_sub(u[2], u[0]), s1) + add(c_sub(u[2], u[1]), s1)
            + [c_sub(v[0], v[2]), c_sub(v[1], v[2]), c_sub(v[2], v[2])])


def m0(u, v):
    return sub(w0(u, v), g0(u, v))


def w1(u, v):
    out = (add(c_neg(c_add(v[0], u[0])), s1) + add(c_neg(c_add(v[0], u[1])), s1)
           + [c_neg(c_add(v[0], u[2])), c_neg(c_add(v[0], u[3]))])
    for r in (1, 2, 3):
        out += (add(c_neg(c_add(v[r], u[0])), s2) + add(c_neg(c_add(v[r], u[1])), s2)
                + add(c_neg(c_add(v[r], u[2])), s1) + add(c_neg(c_add(v[r], u[3])), s1))
    return out


def g1(u, v):
    out = (add(c_sub(v[0], v[1]), s1) + [c_sub(v[1], v[1]), c_sub(v[2], v[1]), c_sub(v[3], v[1])]
           + add(c_sub(v[0], v[2]), s1) + [c_sub(v[1], v[2]), c_sub(v[2], v[2]), c_sub(v[3], v[2])]
           + add(c_sub(v[0], v[3]), s1) + [c_sub(v[1], v[3]), c_sub(v[2], v[3]), c_sub(v[3], v[3])]
           + [(0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0),
              c_sub(u[0], u[1]), c_sub(u[1], u[0]), c_sub(u[2], u[3]), c_sub(u[3], u[2])]
           + add(c_sub(u[2], u[0]), s1) + add(c_sub(u[2], u[1]), s1)
           + add(c_sub(u[3], u[0]), s1) + add(c_sub(u[3], u[1]), s1))
    return out


def m1(u, v, s):
    return sub(w1(u, v), sub(g1(u, v), s))


def w2(u, v):
    return (add(c_neg(c_add(v[0], u[0])), s1) + add(c_neg(c_add(v[0], u[1])), s1)
            + add(c_neg(c_add(v[0], u[2])), s1)
            + add(c_neg(c_add(v[1], u[0])), s1) + add(c_neg(c_add(v[1], u[1])), s1)
            + add(c_neg(c_add(v[1], u[2])), s1)
            + add(c_neg(c_add(v[2], u[0])), s3) + add(c_neg(c_add(v[2], u[1])), s3)
            + add(c_neg(c_add(v[2], u[2])), s3))


def g2(u, v):
    return ([c_sub(u[0], u[0]), c_sub(u[0], u[1]), c_sub(u[0], u[2]),
             c_sub(u[1], u[0]), c_sub(u[1], u[1]), c_sub(u[1], u[2]),
             c_sub(u[2], u[0]), c_sub(u[2], u[1]), c_sub(u[2], u[2])]
            + [(0, 0, 0), (0, 0, 0), c_sub(v[1], v[0]), c_sub(v[0], v[1])]
            + add(c_sub(v[0], v[2]), s2) + add(c_sub(v[1], v[2]), s2))


def m2(u, v):
    xyz = (1, 1, 1)
    return sub(w2(u, v), g2(u, v)) + [
        c_sub(c_add(u[0], v[2]), xyz),
        c_sub(c_add(u[1], v[2]), xyz),
        c_sub(c_add(u[2], v[2]), xyz),
    ]


def w3(u, v):
    return (add(c_neg(c_add(v[0], u[0])), s3) + add(c_neg(c_add(v[0], u[1])), s1)
            + add(c_neg(c_add(v[1], u[0])), s4) + add(c_neg(c_add(v[1], u[1])), s2))


def g3(u, v):
    return ([(0, 0, 0), (0, 0, 0), (0, 0, 0)]
            + add(c_sub(u[1], u[0]), s2) + add(c_sub(v[0], v[1]), s1))


def m3(u, v):
    return sub(w3(u, v), g3(u, v)) + [
        c_sub(c_add(u[0], v[0]), (1, 1, 1)),
        c_sub(c_add(u[0], v[1]), (2, 1, 1)),
        c_sub(c_add(u[0], v[1]), (1, 2, 1)),
        c_sub(c_add(u[0], v[1]), (1, 1, 2)),
    ]


def run():
    """Execute the whole session; returns the filled-in Session."""
    S = Session()

    S.set_family("alpha")
    for q1 in s2_0:
        for q2 in s2_1:
            S.point_3(m0([c_sub(q1, x), c_sub(q2, y), (0, 0, 0)], [x, y, z]))
    S.point_3_1(m0([x, x, (0, 0, 0)], [x, y, z]))

    S.set_family("beta")
    for q in s2_0:
        for l in s1:
            S.line_3_1(m0([c_sub(q, x), l, (0, 0, 0)], [x, y, z]))

    S.set_family("gamma")
    S.surface_3(m0([x, y, (0, 0, 0)], [x, y, z]))

    S.set_family("delta")

    def delta_m(q1, q2, d):
        u = [c_sub(c_sub(c_sub(d, x), y), q2), c_sub(c_sub(c_sub(d, x), y), q1), (0, 0, 0)]
        v = [x, y, c_add(c_add(c_add(c_neg(d), q1), q2), c_add(x, y))]
        return m0(u, v)

    q1, q2 = (2, 0, 0), (0, 2, 0)
    for d in sub(id3([(3, 0, 0), (1, 2, 0), (2, 1, 0), (0, 3, 0)]), [(2, 2, 1)]):
        S.point_3(delta_m(q1, q2, d))
    for d in [(2, 2, 1)]:
        S.line_3(delta_m(q1, q2, d))

    q1, q2 = (2, 0, 0), (0, 0, 2)
    for d in sub(id3([(3, 0, 0), (1, 0, 2), (2, 1, 0), (0, 1, 2)]), [(3, 1, 1)]):
        S.point_6(delta_m(q1, q2, d))

    q1, q2 = (0, 0, 2), (1, 1, 0)
    for d in sub(id3([(1, 0, 2), (2, 1, 0), (0, 1, 2), (1, 2, 0)]), [(2, 2, 1)]):
        S.point_3(delta_m(q1, q2, d))

    q1, q2 = (2, 0, 0), (0, 1, 1)
    for d in sub(id3([(3, 0, 0), (1, 1, 1), (2, 1, 0), (0, 2, 1)]), [(2, 1, 2), (3, 2, 0)]):
        S.point_6(delta_m(q1, q2, d))
    for d in [(2, 1, 2)]:
        S.line_6(delta_m(q1, q2, d))

    q1, q2 = (2, 0, 0), (1, 1, 0)
    for d in sub(id3([(3, 0, 0), (2, 1, 0), (1, 2, 0)]),
                 [(2, 1, 2), (3, 1, 1), (2, 2, 1), (2, 3, 0)]):
        S.point_6(delta_m(q1, q2, d))
    for d in [(2, 1, 2), (3, 1, 1), (2, 2, 1), (2, 3, 0)]:
        S.line_6(delta_m(q1, q2, d))

    q1, q2 = (1, 0, 1), (0, 1, 1)
    for d in sub(id3([(2, 0, 1), (1, 1, 1), (0, 2, 1)]),
                 [(1, 1, 3), (1, 3, 1), (2, 2, 1), (3, 1, 1)]):
        S.point_3(delta_m(q1, q2, d))
    for d in [(1, 1, 3), (1, 3, 1), (3, 1, 1)]:
        S.line_3(delta_m(q1, q2, d))

    q1, q2 = (2, 0, 0), (1, 0, 1)
    for d in sub(id3([(3, 0, 0), (2, 0, 1), (2, 1, 0), (1, 1, 1)]),
                 [(3, 0, 2), (2, 1, 2), (2, 2, 1), (4, 1, 0)]):
        S.point_6(delta_m(q1, q2, d))
    for d in [(3, 0, 2), (2, 1, 2), (2, 2, 1)]:
        S.line_6(delta_m(q1, q2, d))

    q1, q2 = (1, 1, 0), (0, 1, 1)
    for d in sub(id3([(2, 1, 0), (1, 1, 1), (1, 2, 0), (0, 2, 1)]),
                 [(1, 2, 2), (2, 1, 2), (2, 3, 0), (3, 1, 1)]):
        S.point_6(delta_m(q1, q2, d))
    for d in [(1, 2, 2), (2, 1, 2), (3, 1, 1)]:
        S.line_6(delta_m(q1, q2, d))

    q1, q2 = (1, 0, 1), (0, 0, 2)
    for d in sub(id3([(2, 0, 1), (1, 0, 2), (1, 1, 1), (0, 1, 2)]),
                 [(1, 2, 2), (2, 1, 2), (3, 0, 2)]):
        S.point_6(delta_m(q1, q2, d))
    for d in [(1, 2, 2), (3, 0, 2)]:
        S.line_6(delta_m(q1, q2, d))

    S.set_family("epsilon")

    def eps_m(d):
        u = [c_sub(d, y), c_sub(d, x), (1, 1, 1), (1, 1, 1)]
        v = [c_sub(c_add(x, y), d), (0, -1, -1), (-1, 0, -1), (-1, -1, 0)]
        s = [c_add(c_neg(d), (2, 2, 1)), c_add(c_neg(d), (2, 2, 1))]
        return m1(u, v, s)

    eps_gens = add(x, [(1, 1, 0), (1, 0, 1), (0, 1, 1)]) + add(y, [(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    for d in sub(id3(eps_gens), [(2, 2, 1), (1, 1, 3)]):
        S.point_3(eps_m(d))
    for d in [(1, 1, 3)]:
        S.line_3(eps_m(d))

    S.set_family("zeta")

    def zeta_m(l1, l2, d):
        u = [c_sub(d, l2), c_sub(d, l1), (2, 1, 0), (1, 1, 1)]
        v = [c_add(c_neg(d), c_add(l1, l2)), (-2, 0, 0), (0, -1, -1), (-1, -1, 0)]
        s = [c_add((2, 1, 0), c_add(c_neg(d), c_add(l1, l2))),
             c_add((1, 1, 1), c_add(c_neg(d), c_add(l1, l2)))]
        return m1(u, v, s)

    zq = [(2, 0, 0), (1, 1, 0), (0, 1, 1)]
    l1, l2 = x, y
    for d in sub(id3(add(x, zq) + add(y, zq)), [(3, 2, 0), (2, 2, 1), (2, 1, 2)]):
        S.point_6(zeta_m(l1, l2, d))
    for d in [(2, 1, 2)]:
        S.line_6(zeta_m(l1, l2, d))

    l1, l2 = x, z
    for d in sub(id3(add(x, zq) + add(z, zq)), [(3, 1, 1), (2, 1, 2), (1, 3, 1)]):
        S.point_6(zeta_m(l1, l2, d))
    for d in [(1, 3, 1)]:
        S.line_6(zeta_m(l1, l2, d))

    l1, l2 = y, z
    for d in sub(id3(add(y, zq) + add(z, zq)), [(2, 2, 1), (1, 2, 2)]):
        S.point_6(zeta_m(l1, l2, d))

    S.set_family("eta")

    def eta_m(l1, l2, d):
        u = [c_sub(d, l2), c_sub(d, l1), (1, 2, 0), (2, 1, 0)]
        v = [c_add(c_neg(d), c_add(l1, l2)), (0, -2, 0), (-2, 0, 0), (-1, -1, 0)]
        s = [c_add((1, 2, 0), c_add(c_neg(d), c_add(l1, l2))),
             c_add((2, 1, 0), c_add(c_neg(d), c_add(l1, l2)))]
        return m1(u, v, s)

    eq = [(2, 0, 0), (1, 1, 0), (0, 2, 0)]
    l1, l2 = x, y
    for d in sub(id3(add(x, eq) + add(y, eq)), [(3, 2, 0), (2, 3, 0), (1, 2, 2), (2, 1, 2)]):
        S.point_3(eta_m(l1, l2, d))
    for d in [(1, 2, 2), (2, 1, 2)]:
        S.line_3(eta_m(l1, l2, d))

    l1, l2 = x, z
    for d in sub(id3(add(x, eq) + add(z, eq)), [(2, 2, 1), (3, 1, 1)]):
        S.point_6(eta_m(l1, l2, d))

    S.set_family("theta")

    def theta_m(l1, l2, d):
        u = [c_sub(d, l2), c_sub(d, l1), (2, 1, 0), (2, 0, 1)]
        v = [c_add(c_neg(d), c_add(l1, l2)), (-1, -1, 0), (-1, 0, -1), (-2, 0, 0)]
        s = [c_add((2, 1, 0), c_add(c_neg(d), c_add(l1, l2))),
             c_add((2, 0, 1), c_add(c_neg(d), c_add(l1, l2)))]
        return m1(u, v, s)

    tq = [(2, 0, 0), (1, 1, 0), (1, 0, 1)]
    l1, l2 = x, y
    for d in sub(id3(add(x, tq) + add(y, tq)),
                 [(3, 1, 1), (3, 2, 0), (2, 1, 2), (1, 3, 1), (1, 2, 2)]):
        S.point_6(theta_m(l1, l2, d))
    for d in [(2, 1, 2), (1, 3, 1), (1, 2, 2)]:
        S.line_6(theta_m(l1, l2, d))

    l1, l2 = y, z
    for d in sub(id3(add(y, tq) + add(z, tq)),
                 [(2, 2, 1), (2, 1, 2), (1, 1, 3), (1, 2, 2), (1, 3, 1)]):
        S.point_3_1(theta_m(l1, l2, d))
    for d in [(1, 1, 3), (1, 2, 2), (1, 3, 1)]:
        S.line_3_1(theta_m(l1, l2, d))

    S.set_family("iota")
    for d in sub(id2([(1, 1, 0), (1, 0, 1), (0, 1, 1)]), [(2, 2, 1), (1, 2, 2), (2, 1, 2)]):
        iota = m2([x, y, z], [(0, 0, 0), (0, 0, 0), c_sub(d, (1, 1, 1))])
        S._bump(2 * positive_part(values(iota, (0, 1, 7))))
    S._tally("points", 15)

    S.set_family("kappa")
    for d in sub(id2([(2, 0, 0), (1, 1, 0), (0, 1, 1)]), [(1, 2, 2), (3, 1, 1), (2, 2, 1)]):
        S.point_6(m2([c_sub(y, x), c_sub(x, z), (0, 0, 0)], [x, z, c_sub(d, (1, 1, 0))]))

    S.set_family("lambda")
    for d in sub(id2([(2, 0, 0), (1, 1, 0), (0, 2, 0)]), [(1, 3, 1), (3, 1, 1), (2, 2, 1)]):
        S.point_3(m2([c_sub(x, y), c_sub(y, x), (0, 0, 0)], [y, x, c_sub(d, (1, 1, 0))]))

    S.set_family("mu")

    def mu_m(d):
        return m2([c_sub(x, y), c_sub(x, z), (0, 0, 0)], [y, z, c_sub(d, (2, 0, 0))])

    for d in sub(id2([(2, 0, 0), (1, 1, 0), (1, 0, 1)]),
                 [(1, 1, 3), (1, 2, 2), (1, 3, 1), (2, 1, 2), (2, 2, 1), (3, 1, 1)]):
        S.point_3_1(mu_m(d))
    for d in [(1, 1, 3), (1, 2, 2), (1, 3, 1)]:
        S.line_3_1(mu_m(d))

    S.set_family("nu")
    q = (0, 2, 0)
    for d in sub(s5, [(1, 3, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1), (0, 0, 5), (0, 1, 4)]):
        S.point_6(m3([c_sub(c_sub(d, q), x), (0, 0, 0)], [x, q]))

    q = (0, 1, 1)
    for d in sub(s5, [(1, 2, 2), (2, 1, 2), (3, 1, 1), (2, 2, 1), (0, 5, 0), (0, 0, 5)]):
        S.point_3_1(m3([c_sub(c_sub(d, q), x), (0, 0, 0)], [x, q]))

    return S


if __name__ == "__main__":
    S = run()
    print("points:", S.points, "lines:", S.lines)
    print("by family:", {k: tuple(v) for k, v in S.by_family.items()})
    coeffs = [S.P.get(m, 0) for m in range(0, 53)]
    print("P coefficients 0..52:", coeffs)
    print("euler:", sum(coeffs))
