"""Root-system combinatorics for the simple complex Lie algebras.

Conventions, fixed once and used everywhere:

* Cartan matrix ``A[i][j] = 2<a_i, a_j>/<a_i, a_i>`` (rows indexed by the
  coroot), Bourbaki node numbering, 1-based in every public interface.
* The invariant inner product is normalized so short roots have squared
  length 2.  All exposed quantities (reflections, dominance, dimension
  formulas) are invariant under rescaling, so this choice is safe.
* Roots are integer coordinate vectors in the simple-root basis; weights
  are exact-rational coordinate vectors in the fundamental-weight basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RULES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise ValueError(f"rank {self.rank} not admissible for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", text.strip())
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootDatum:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]
    rho: Weight
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    positive_root_set: frozenset[Root]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def is_root(self, r: Root) -> bool:
        return tuple(r) in self.positive_root_set or tuple(-x for x in r) in self.positive_root_set


def _cartan_matrix(t: LieType) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix and symmetrizer d with d*A symmetric, short roots length^2 = 2."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    d = [Fraction(1)] * n
    fam = t.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # last simple root short, the others long
            link(n - 2, n - 1, -1, -2)
            d = [Fraction(2)] * (n - 1) + [Fraction(1)]
        elif fam == "C":
            # last simple root long
            link(n - 2, n - 1, -2, -1)
            d = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        # chain 1-3-4-5-...-n with node 2 attached to node 4
        chain = [0] + list(range(2, n))
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
        d = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    elif fam == "G":
        link(0, 1, -3, -1)
        d = [Fraction(1), Fraction(3)]
    for i in range(n):
        for j in range(n):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                raise AssertionError("symmetrizer inconsistent with Cartan matrix")
    return a, d


def _enumerate_positive_roots(a: list[list[int]]) -> list[Root]:
    """All positive roots by closure of the simple roots under root addition."""
    n = len(a)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[Root] = set(simple)
    by_height: dict[int, list[Root]] = {1: list(simple)}
    h = 1
    while by_height.get(h):
        nxt: list[Root] = []
        for beta in by_height[h]:
            for i in range(n):
                if beta == simple[i]:
                    continue
                pairing = sum(a[i][j] * beta[j] for j in range(n))
                p = 0
                cur = tuple(x - y for x, y in zip(beta, simple[i]))
                while cur in found:
                    p += 1
                    cur = tuple(x - y for x, y in zip(cur, simple[i]))
                if p - pairing >= 1:
                    new = tuple(x + y for x, y in zip(beta, simple[i]))
                    if new not in found:
                        found.add(new)
                        nxt.append(new)
        h += 1
        if nxt:
            by_height[h] = nxt
    return sorted(found, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_datum(t: LieType) -> RootDatum:
    """Root datum of the simple type ``t`` with a deterministic root ordering."""
    a, d = _cartan_matrix(t)
    roots = _enumerate_positive_roots(a)
    expected = _POSITIVE_ROOT_COUNT[t.family](t.rank)
    if len(roots) != expected:
        raise AssertionError(
            f"{t}: enumerated {len(roots)} positive roots, expected {expected}"
        )
    a_frac = [[Fraction(x) for x in row] for row in a]
    a_inv = linalg.solve_matrix(a_frac, linalg.identity(t.rank))
    assert a_inv is not None
    return RootDatum(
        lie_type=t,
        cartan=tuple(tuple(row) for row in a),
        symmetrizer=tuple(d),
        positive_roots=tuple(roots),
        rho=tuple(Fraction(1) for _ in range(t.rank)),
        cartan_inverse=tuple(tuple(row) for row in a_inv),
        positive_root_set=frozenset(roots),
    )


def weight(coords) -> Weight:
    return tuple(Fraction(x) for x in coords)


def root_to_weight(d: RootDatum, r: Root) -> Weight:
    """Fundamental-weight coordinates of a root given in simple-root coordinates."""
    n = d.rank
    return tuple(sum(Fraction(d.cartan[j][i]) * r[i] for i in range(n)) for j in range(n))


def weight_root_coords(d: RootDatum, x: Weight) -> tuple[Fraction, ...]:
    """Simple-root coordinates of a weight given in fundamental-weight coordinates."""
    n = d.rank
    return tuple(sum(d.cartan_inverse[i][j] * x[j] for j in range(n)) for i in range(n))


def inner_product(d: RootDatum, x: Weight, y: Weight) -> Fraction:
    """Invariant inner product of two weights in fundamental-weight coordinates."""
    c = weight_root_coords(d, y)
    return sum((xj * dj * cj for xj, dj, cj in zip(x, d.symmetrizer, c)), Fraction(0))


def root_inner_product(d: RootDatum, x: Weight, r: Root) -> Fraction:
    """<x, r> with the second argument a root in simple-root coordinates."""
    return sum((xj * dj * rj for xj, dj, rj in zip(x, d.symmetrizer, r)), Fraction(0))


def root_norm_sq(d: RootDatum, r: Root) -> Fraction:
    return root_inner_product(d, root_to_weight(d, r), r)


def coroot_pairing(d: RootDatum, x: Weight, r: Root) -> Fraction:
    """<x, r^vee> = 2<x, r>/<r, r>."""
    return 2 * root_inner_product(d, x, r) / root_norm_sq(d, r)


def simple_reflection(d: RootDatum, i: int, x: Weight) -> Weight:
    """Reflection s_i(x) = x - <x, a_i^vee> a_i, node index 1-based."""
    if not 1 <= i <= d.rank:
        raise ValueError(f"node index {i} out of range for rank {d.rank}")
    c = x[i - 1]
    return tuple(xj - c * d.cartan[j][i - 1] for j, xj in enumerate(x))


def is_dominant(x: Weight) -> bool:
    return all(c >= 0 for c in x)


def is_dominant_integral(x: Weight) -> bool:
    return all(c >= 0 and Fraction(c).denominator == 1 for c in x)


def make_dominant(d: RootDatum, x: Weight) -> tuple[Weight, int]:
    """Dominant Weyl-chamber representative and the number of reflections used."""
    y = tuple(Fraction(c) for c in x)
    count = 0
    while True:
        for j, c in enumerate(y):
            if c < 0:
                y = simple_reflection(d, j + 1, y)
                count += 1
                break
        else:
            return y, count


def dual_weight(d: RootDatum, x: Weight) -> Weight:
    """Highest weight of the dual representation: -w0(x) for dominant x."""
    if not is_dominant(x):
        raise ValueError(f"dual_weight requires a dominant weight, got {x}")
    y = tuple(-Fraction(c) for c in x)
    return make_dominant(d, y)[0]
