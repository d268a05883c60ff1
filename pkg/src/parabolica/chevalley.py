"""Chevalley structure constants with a deterministic sign convention.

Basis: Cartan generators h_1..h_n (coroots of the simple roots), then root
vectors x_b for the positive roots in datum order, then for their
negatives.  Signs are fixed by choosing the extraspecial pair of every
non-simple positive root (the decomposition with the smallest first
factor, which is always simple) to carry a positive constant; all other
constants follow from Jacobi identities and are verified exhaustively,
so a build that returns is a certified Lie algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .root_systems import Root, RootDatum, root_norm_sq

__all__ = ["StructureConstants", "chevalley_constants", "verify_jacobi"]


class LieAlgebraConsistencyError(RuntimeError):
    """Raised when a constructed bracket table fails an internal identity."""


@dataclass
class StructureConstants:
    datum: RootDatum
    roots: tuple[Root, ...]                # positive then negative, fixed order
    bracket: dict[tuple[int, int], dict[int, int]]
    n_constants: dict[tuple[Root, Root], int]

    @property
    def dim(self) -> int:
        return self.datum.rank + len(self.roots)

    def root_index(self, r: Root) -> int:
        return self.datum.rank + self.roots.index(tuple(r))

    def bracket_elems(self, i: int, j: int) -> dict[int, int]:
        return self.bracket.get((i, j), {})

    def ad_matrix(self, i: int) -> list[list[Fraction]]:
        n = self.dim
        m = linalg.zeros(n, n)
        for j in range(n):
            for k, c in self.bracket_elems(i, j).items():
                m[k][j] = Fraction(c)
        return m

    def killing(self, i: int, j: int) -> Fraction:
        a = self.ad_matrix(i)
        b = self.ad_matrix(j)
        return sum(
            (a[r][c] * b[c][r] for r in range(self.dim) for c in range(self.dim)),
            Fraction(0),
        )


def _p_down(root_set: frozenset, a: Root, b: Root) -> int:
    """Largest p with b - p a still a root."""
    p = 0
    cur = tuple(x - y for x, y in zip(b, a))
    while cur in root_set or tuple(-c for c in cur) in root_set:
        p += 1
        cur = tuple(x - y for x, y in zip(cur, a))
    return p


def _positive_constants(d: RootDatum) -> dict[tuple[Root, Root], int]:
    """Constants N(a,b) for positive a, b with a+b a positive root."""
    pos = list(d.positive_roots)
    pos_set = set(pos)
    all_set = frozenset(pos) | frozenset(tuple(-c for c in r) for r in pos)
    order = {r: i for i, r in enumerate(pos)}
    n: dict[tuple[Root, Root], int] = {}

    def lookup(a: Root, b: Root):
        """Signed reference to the canonical (ordered) pair constant."""
        if order[a] < order[b]:
            return (a, b), 1
        return (b, a), -1

    for gamma in pos:
        pairs = sorted(
            (
                (a, tuple(x - y for x, y in zip(gamma, a)))
                for a in pos
                if tuple(x - y for x, y in zip(gamma, a)) in pos_set
                and order[a] < order[tuple(x - y for x, y in zip(gamma, a))]
            ),
            key=lambda ab: order[ab[0]],
        )
        if not pairs:
            continue
        extra = pairs[0]
        n[extra] = _p_down(all_set, extra[0], extra[1]) + 1
        unknowns = [ab for ab in pairs[1:]]
        if not unknowns:
            continue
        col = {ab: k for k, ab in enumerate(unknowns)}
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        # Jacobi relations among positive triples summing to gamma.
        seen = set()
        for x in pos:
            for y in pos:
                if order[y] < order[x]:
                    continue
                z = tuple(g - a - b for g, a, b in zip(gamma, x, y))
                if z not in pos_set or order[z] < order[y]:
                    continue
                if (x, y, z) in seen:
                    continue
                seen.add((x, y, z))
                row = [Fraction(0)] * len(unknowns)
                const = Fraction(0)
                ok = True
                for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                    s = tuple(a + b for a, b in zip(u, v))
                    if s not in pos_set:
                        continue
                    inner_key, inner_sign = lookup(u, v)
                    inner = n.get(inner_key)
                    if inner is None:
                        # pair summing to gamma appearing as the inner factor
                        # cannot happen: heights are strictly smaller
                        ok = False
                        break
                    outer_key, outer_sign = lookup(s, w)
                    coeff = Fraction(inner_sign * inner * outer_sign)
                    if outer_key in col:
                        row[col[outer_key]] += coeff
                    else:
                        const += coeff * n[outer_key]
                if ok and (any(row) or const != 0):
                    rows.append(row)
                    rhs.append(-const)
        sol = linalg.solve(rows, rhs)
        if sol is None or len(linalg.nullspace(rows)) > 0:
            raise LieAlgebraConsistencyError(
                f"{d.lie_type}: special-pair constants at {gamma} not determined"
            )
        for ab, k in col.items():
            val = sol[k]
            if val.denominator != 1:
                raise LieAlgebraConsistencyError("non-integer structure constant")
            n[ab] = int(val)
    # magnitude check for every ordered positive pair
    for (a, b), val in n.items():
        if abs(val) != _p_down(all_set, a, b) + 1:
            raise LieAlgebraConsistencyError(
                f"constant at {(a, b)} has magnitude {abs(val)}, expected string length"
            )
    return n


def _full_constants(d: RootDatum, npos: dict[tuple[Root, Root], int]) -> dict[tuple[Root, Root], int]:
    """Extend positive-pair constants to all root pairs with root sum."""
    pos = list(d.positive_roots)
    order = {r: i for i, r in enumerate(pos)}
    pos_set = set(pos)

    def n_pos(a: Root, b: Root) -> int:
        if order[a] < order[b]:
            return npos[(a, b)]
        return -npos[(b, a)]

    full: dict[tuple[Root, Root], int] = {}
    norms = {r: root_norm_sq(d, r) for r in pos}

    def norm(r: Root) -> Fraction:
        return norms[r] if r in norms else norms[tuple(-c for c in r)]

    all_roots = pos + [tuple(-c for c in r) for r in pos]
    for a in all_roots:
        for b in all_roots:
            s = tuple(x + y for x, y in zip(a, b))
            if all(c == 0 for c in s):
                continue
            if not (s in pos_set or tuple(-c for c in s) in pos_set):
                continue
            apos = a in pos_set
            bpos = b in pos_set
            if apos and bpos:
                val = Fraction(n_pos(a, b))
            elif not apos and not bpos:
                val = Fraction(-n_pos(tuple(-c for c in a), tuple(-c for c in b)))
            else:
                if not apos:
                    # N(a,b) = -N(b,a) reduces to the mixed case below
                    continue
                z = tuple(-c for c in s)
                if s in pos_set:
                    # N(a,b) = N(b,z) |z|^2 / |a|^2 with b, z both negative
                    val = -Fraction(n_pos(tuple(-c for c in b), s)) * norm(z) / norm(a)
                else:
                    # N(a,b) = N(z,a) |z|^2 / |b|^2 with z positive
                    val = Fraction(n_pos(z, a)) * norm(z) / norm(b)
            if val.denominator != 1:
                raise LieAlgebraConsistencyError("non-integer mixed constant")
            full[(a, b)] = int(val)
    for a in all_roots:
        for b in all_roots:
            if (b, a) in full and (a, b) not in full:
                full[(a, b)] = -full[(b, a)]
    return full


def chevalley_constants(d: RootDatum) -> StructureConstants:
    """Integer structure constants of the simple algebra, Jacobi-verified."""
    npos = _positive_constants(d)
    nfull = _full_constants(d, npos)
    rank = d.rank
    pos = list(d.positive_roots)
    roots = tuple(pos + [tuple(-c for c in r) for r in pos])
    idx = {r: rank + i for i, r in enumerate(roots)}

    def coroot_coeffs(a: Root) -> list[int]:
        na = root_norm_sq(d, a)
        out = []
        for i in range(rank):
            c = Fraction(a[i]) * 2 * d.symmetrizer[i] / na
            if c.denominator != 1:
                raise LieAlgebraConsistencyError("non-integer coroot coefficient")
            out.append(int(c))
        return out

    bracket: dict[tuple[int, int], dict[int, int]] = {}

    def put(i: int, j: int, val: dict[int, int]):
        val = {k: v for k, v in val.items() if v != 0}
        if val:
            bracket[(i, j)] = val
            bracket[(j, i)] = {k: -v for k, v in val.items()}

    for i in range(rank):
        for r in roots:
            pairing = sum(d.cartan[i][j] * r[j] for j in range(rank))
            put(i, idx[r], {idx[r]: pairing})
    for a in roots:
        for b in roots:
            if idx[a] >= idx[b]:
                continue
            s = tuple(x + y for x, y in zip(a, b))
            if all(c == 0 for c in s):
                put(idx[a], idx[b], dict(enumerate(coroot_coeffs(a))))
            elif (a, b) in nfull:
                put(idx[a], idx[b], {idx[s]: nfull[(a, b)]})
    sc = StructureConstants(datum=d, roots=roots, bracket=bracket, n_constants=nfull)
    verify_jacobi(sc)
    return sc


def verify_jacobi(sc: StructureConstants) -> None:
    """Exhaustive Jacobi check over all unordered basis triples."""

    def brk(i: int, vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for j, c in vec.items():
            for k, v in sc.bracket_elems(i, j).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v != 0}

    n = sc.dim
    for i in range(n):
        for j in range(i, n):
            bij = sc.bracket_elems(i, j)
            for k in range(j, n):
                acc: dict[int, int] = {}
                for target, c in brk(k, bij).items():
                    acc[target] = acc.get(target, 0) + c
                for target, c in brk(i, sc.bracket_elems(j, k)).items():
                    acc[target] = acc.get(target, 0) + c
                for target, c in brk(j, sc.bracket_elems(k, i)).items():
                    acc[target] = acc.get(target, 0) + c
                if any(v != 0 for v in acc.values()):
                    raise LieAlgebraConsistencyError(
                        f"Jacobi identity fails on basis triple {(i, j, k)}"
                    )
