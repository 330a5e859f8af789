"""Exact arithmetic for characters of a rank-3 torus and multisets of them.

A character is an integer triple (i, j, k), read additively as i*x + j*y + k*z
where x, y, z are the basis characters scaling the three homogeneous
coordinates.  A monomial X^i Y^j Z^k is identified with the character
(i, j, k).  Everything downstream (fixed-point catalog, tangent weights,
Betti numbers) is written in terms of the handful of multiset operations
defined here, so they are kept dependency-free and pure.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator

Char = tuple[int, int, int]
OneParamSubgroup = tuple[int, int, int]
Perm = tuple[int, int, int]

CHI0: Char = (0, 0, 0)
X: Char = (1, 0, 0)
Y: Char = (0, 1, 0)
Z: Char = (0, 0, 1)

#: all six coordinate permutations, as index tuples (identity first)
S3: tuple[Perm, ...] = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))

_MONOMIAL_RE = re.compile(r"([XYZ])(\d*)")


class ContainmentViolation(ValueError):
    """Strict multiset difference hit an element missing from the minuend."""


class BadGenerator(ValueError):
    """Ideal generator is not a monomial of the requested degree."""


def cadd(a: Char, b: Char) -> Char:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def csub(a: Char, b: Char) -> Char:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def cneg(a: Char) -> Char:
    return (-a[0], -a[1], -a[2])


def degree(c: Char) -> int:
    return c[0] + c[1] + c[2]


def pairing(lam: OneParamSubgroup, c: Char) -> int:
    """<lambda, chi> = n0*i + n1*j + n2*k."""
    return lam[0] * c[0] + lam[1] * c[1] + lam[2] * c[2]


def apply_perm(perm: Perm, t: tuple[int, int, int]) -> tuple[int, int, int]:
    """Rearrange the entries of a character or one-parameter subgroup."""
    return (t[perm[0]], t[perm[1]], t[perm[2]])


def inverse_perm(perm: Perm) -> Perm:
    inv = [0, 0, 0]
    for i, p in enumerate(perm):
        inv[p] = i
    return (inv[0], inv[1], inv[2])


def parse_monomial(text: str) -> Char:
    """Parse "X2Y2Z" style monomial text into a character triple."""
    text = text.strip()
    if text in ("1", ""):
        return CHI0
    exps = {"X": 0, "Y": 0, "Z": 0}
    pos = 0
    for m in _MONOMIAL_RE.finditer(text):
        if m.start() != pos:
            raise ValueError(f"bad monomial {text!r}")
        exps[m.group(1)] += int(m.group(2) or "1")
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"bad monomial {text!r}")
    return (exps["X"], exps["Y"], exps["Z"])


def monomial_str(c: Char) -> str:
    """Inverse of parse_monomial for nonnegative exponents ("1" for chi0)."""
    if any(e < 0 for e in c):
        raise ValueError(f"{c} has a negative exponent")
    if c == CHI0:
        return "1"
    out = []
    for name, e in zip("XYZ", c):
        if e == 1:
            out.append(name)
        elif e > 1:
            out.append(f"{name}{e}")
    return "".join(out)


def char_str(c: Char) -> str:
    """Canonical text form "i,j,k"."""
    return f"{c[0]},{c[1]},{c[2]}"


def parse_char(text: str) -> Char:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"bad character {text!r}")
    i, j, k = (int(p) for p in parts)
    return (i, j, k)


class WeightMultiset:
    """Immutable finite multiset of characters.

    Stored as character -> positive multiplicity; iteration and text output
    use the componentwise-lexicographic character order so every derived
    artifact is reproducible byte for byte.
    """

    __slots__ = ("_counts",)

    def __init__(self, chars: Iterable[Char] = ()):
        counts: dict[Char, int] = {}
        for c in chars:
            counts[c] = counts.get(c, 0) + 1
        self._counts = counts

    @classmethod
    def from_counts(cls, counts: dict[Char, int]) -> "WeightMultiset":
        m = cls.__new__(cls)
        m._counts = {c: n for c, n in counts.items() if n > 0}
        if any(n < 0 for n in counts.values()):
            raise ValueError("negative multiplicity")
        return m

    def multiplicity(self, c: Char) -> int:
        return self._counts.get(c, 0)

    def items(self) -> list[tuple[Char, int]]:
        """Sorted (character, multiplicity) pairs."""
        return sorted(self._counts.items())

    def support(self) -> list[Char]:
        return sorted(self._counts)

    def expand(self) -> Iterator[Char]:
        """Characters with multiplicity, in canonical order."""
        for c, n in self.items():
            for _ in range(n):
                yield c

    def union(self, other: "WeightMultiset") -> "WeightMultiset":
        """Additive union: multiplicities add."""
        counts = dict(self._counts)
        for c, n in other._counts.items():
            counts[c] = counts.get(c, 0) + n
        return WeightMultiset.from_counts(counts)

    def to_text(self) -> str:
        """Canonical dump: one "i,j,k xM" line per distinct character."""
        return "\n".join(f"{char_str(c)} x{n}" for c, n in self.items())

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __contains__(self, c: Char) -> bool:
        return c in self._counts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}x{n}" if n > 1 else str(c) for c, n in self.items())
        return f"WeightMultiset({{{inner}}})"


EMPTY = WeightMultiset()


def sigma(l: int) -> WeightMultiset:
    """All monomial characters of total degree l >= 1 (the set sigma^l)."""
    if l < 1:
        raise ValueError("sigma(l) needs l >= 1")
    return WeightMultiset(
        (i, j, l - i - j) for i in range(l + 1) for j in range(l + 1 - i)
    )


def sigma0() -> WeightMultiset:
    """The six roots +-(x-y), +-(x-z), +-(y-z)."""
    return WeightMultiset(
        csub(a, b) for a, b in itertools.permutations((X, Y, Z), 2)
    )


def sigma_without(l: int, axis: int) -> WeightMultiset:
    """sigma^l minus (x_axis + sigma^(l-1)): degree-l monomials avoiding one variable."""
    if axis not in (0, 1, 2):
        raise ValueError("axis must be 0, 1 or 2")
    return WeightMultiset(c for c in sigma(l).expand() if c[axis] == 0)


SIGMA5 = sigma(5)


def shift(c: Char, m: WeightMultiset) -> WeightMultiset:
    """Translate every element of m by c, multiplicities preserved."""
    return WeightMultiset.from_counts({cadd(c, w): n for w, n in m.items()})


def msub(a: WeightMultiset, b: WeightMultiset, strict: bool = False) -> WeightMultiset:
    """Multiset difference: remove one copy of each element of b from a.

    Lenient mode ignores elements of b that are not present (the reference
    computer-algebra semantics); strict mode raises ContainmentViolation
    instead, which is what the tangent computation relies on.
    """
    counts = dict(a._counts)
    for c, n in b.items():
        have = counts.get(c, 0)
        if strict and have < n:
            raise ContainmentViolation(
                f"{char_str(c)} x{n} not contained (only x{have} available)"
            )
        left = have - n
        if left > 0:
            counts[c] = left
        else:
            counts.pop(c, None)
    return WeightMultiset.from_counts(counts)


def pair_values(m: WeightMultiset, lam: OneParamSubgroup) -> list[int]:
    """<lambda, chi> over all entries with multiplicity; canonical order."""
    return [pairing(lam, c) for c in m.expand()]


def positive_part(values: Iterable[int]) -> int:
    """Count of strictly positive entries."""
    return sum(1 for v in values if v > 0)


def permute(m: WeightMultiset, perm: Perm) -> WeightMultiset:
    """Apply a coordinate permutation to every character."""
    return WeightMultiset.from_counts(
        {apply_perm(perm, c): n for c, n in m.items()}
    )


def divides(a: Char, b: Char) -> bool:
    """Monomial divisibility: every exponent of a is <= that of b."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def ideal_degree5(gens: Iterable[Char], gen_degree: int) -> WeightMultiset:
    """Degree-5 part of the monomial ideal spanned by same-degree generators.

    Computed as the union of g + sigma^(5-gen_degree) over generators g,
    which stays inside sigma^5; returned as a plain set (multiplicity 1).
    Only the degree-2 and degree-3 cases are needed.
    """
    if gen_degree not in (2, 3):
        raise BadGenerator(f"generator degree {gen_degree} unsupported")
    members: set[Char] = set()
    cofactor = sigma(5 - gen_degree)
    for g in gens:
        if any(e < 0 for e in g) or degree(g) != gen_degree:
            raise BadGenerator(f"bad generator {g}")
        members.update(shift(g, cofactor).support())
    return WeightMultiset(sorted(members))
