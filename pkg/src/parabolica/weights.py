"""Character-level representation theory.

Weyl dimensions, Freudenthal multiplicity tables, Klimyk tensor
decomposition, Levi branching by character peeling, degree-0/1 Lie algebra
cohomology of an irreducible module over the nilpotent negative part
(computed by Kostant's theorem on the dual side and dualized back), the
prolongation module attached to a Levi representation and a set of orders,
and the closed-form dimension bounds for the contact gradings on the
symplectic algebras.

Scopes: a label either lives over the ambient simple algebra or over the
Levi semisimple part of a parabolic grading.  Levi-scope weights are stored
as coordinates at the uncrossed nodes only; internally all arithmetic uses
ambient representatives, which is safe because pairings against the Levi
root lattice do not depend on the crossed-node coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .parabolic import ParabolicGrading, levi_weyl_dim
from .root_systems import (
    RootDatum,
    Weight,
    dual_weight,
    inner_product,
    root_inner_product,
    root_to_weight,
    simple_reflection,
)

AMBIENT = "ambient"
LEVI = "levi"


@dataclass(frozen=True)
class IrrepLabel:
    """Dominant integral highest weight, over the ambient algebra or a Levi."""

    scope: str
    weight: tuple[int, ...]
    datum: RootDatum
    grading: ParabolicGrading | None = None

    def __post_init__(self):
        if self.scope not in (AMBIENT, LEVI):
            raise ValueError(f"unknown scope {self.scope!r}")
        if self.scope == LEVI and self.grading is None:
            raise ValueError("levi-scope label needs its parabolic grading")
        if any(c < 0 for c in self.weight):
            raise ValueError(f"weight {self.weight} is not dominant")
        expected = (
            self.datum.rank if self.scope == AMBIENT else len(self.grading.levi_ss_nodes)
        )
        if len(self.weight) != expected:
            raise ValueError(
                f"weight length {len(self.weight)} does not match scope size {expected}"
            )


def ambient_label(datum: RootDatum, coords) -> IrrepLabel:
    return IrrepLabel(AMBIENT, tuple(int(c) for c in coords), datum)


def levi_label(grading: ParabolicGrading, coords) -> IrrepLabel:
    return IrrepLabel(LEVI, tuple(int(c) for c in coords), grading.datum, grading)


@dataclass
class WeightTable:
    """Multiplicity table of an irreducible module, keyed by scope coordinates."""

    label: IrrepLabel
    entries: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.entries.values())


@dataclass(frozen=True)
class GradingDecomposition:
    dims: tuple[int, ...]
    lowest_eigenvalue: Fraction

    @property
    def jet_order(self) -> int:
        return len(self.dims) - 1


@dataclass(frozen=True)
class H1Component:
    node: int
    label: IrrepLabel
    dim: int
    grading_degree: int


@dataclass(frozen=True)
class CohomologyReport:
    h0_label: IrrepLabel
    h0_dim: int
    h1: tuple[H1Component, ...]


# -- scope plumbing ----------------------------------------------------------


def _scope_nodes(label: IrrepLabel) -> tuple[int, ...]:
    if label.scope == AMBIENT:
        return tuple(range(1, label.datum.rank + 1))
    return label.grading.levi_ss_nodes


def _scope_positive_roots(label: IrrepLabel):
    if label.scope == AMBIENT:
        return label.datum.positive_roots
    return label.grading.levi_positive_roots


def _scope_rho(label: IrrepLabel) -> Weight:
    if label.scope == AMBIENT:
        return label.datum.rho
    return label.grading.rho_levi


def _ambient_rep(label: IrrepLabel) -> Weight:
    if label.scope == AMBIENT:
        return tuple(Fraction(c) for c in label.weight)
    return label.grading.ambient_extend(label.weight)


def _scope_key(label: IrrepLabel, ambient_weight: Weight) -> tuple[int, ...]:
    if label.scope == AMBIENT:
        coords = ambient_weight
    else:
        coords = label.grading.restrict(ambient_weight)
    out = []
    for c in coords:
        c = Fraction(c)
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def _same_scope(a: IrrepLabel, b: IrrepLabel) -> bool:
    return a.scope == b.scope and a.datum == b.datum and a.grading == b.grading


def _scope_dominant(label: IrrepLabel, x: Weight) -> bool:
    return all(x[i - 1] >= 0 for i in _scope_nodes(label))


def _scope_make_dominant(label: IrrepLabel, x: Weight) -> tuple[Weight, int]:
    nodes = _scope_nodes(label)
    y = tuple(Fraction(c) for c in x)
    count = 0
    while True:
        for i in nodes:
            if y[i - 1] < 0:
                y = simple_reflection(label.datum, i, y)
                count += 1
                break
        else:
            return y, count


# -- dimensions and multiplicities -------------------------------------------


def weyl_dim(label: IrrepLabel) -> int:
    """Dimension of the irreducible with this highest weight (exact integer)."""
    if label.scope == LEVI:
        return levi_weyl_dim(label.grading, label.weight)
    d = label.datum
    lam_rho = tuple(Fraction(c) + r for c, r in zip(label.weight, d.rho))
    num = Fraction(1)
    for beta in d.positive_roots:
        num *= root_inner_product(d, lam_rho, beta) / root_inner_product(d, d.rho, beta)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def _freudenthal_cached(label: IrrepLabel) -> tuple[tuple[tuple[int, ...], int], ...]:
    d = label.datum
    pos = _scope_positive_roots(label)
    rho = _scope_rho(label)
    nodes = _scope_nodes(label)
    lam = _ambient_rep(label)

    def key(w: Weight) -> tuple:
        return tuple(w)

    # Dominant weights of the module: reachable from the highest weight by
    # subtracting positive roots while staying dominant in scope.
    lam_k = key(lam)
    dominants = {lam_k: lam}
    queue = [lam]
    while queue:
        w = queue.pop()
        for beta in pos:
            bw = root_to_weight(d, beta)
            w2 = tuple(a - b for a, b in zip(w, bw))
            if all(w2[i - 1] >= 0 for i in nodes) and key(w2) not in dominants:
                dominants[key(w2)] = w2
                queue.append(w2)

    def depth(w: Weight) -> int:
        # height of lam - w in the root lattice
        diff = tuple(a - b for a, b in zip(lam, w))
        coords = [
            sum(d.cartan_inverse[i][j] * diff[j] for j in range(d.rank))
            for i in range(d.rank)
        ]
        s = sum(coords)
        assert s.denominator == 1
        return int(s)

    ordered = sorted(dominants.values(), key=lambda w: (depth(w), key(w)))
    mult: dict[tuple, int] = {key(lam): 1}
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    lam_rho_sq = inner_product(d, lam_rho, lam_rho)
    for w in ordered[1:]:
        acc = Fraction(0)
        for beta in pos:
            bw = root_to_weight(d, beta)
            k = 1
            while True:
                wk = tuple(a + k * b for a, b in zip(w, bw))
                dom, _ = _scope_make_dominant(label, wk)
                m = mult.get(key(dom), 0)
                if m == 0:
                    break
                acc += m * root_inner_product(d, wk, beta)
                k += 1
        w_rho = tuple(a + b for a, b in zip(w, rho))
        den = lam_rho_sq - inner_product(d, w_rho, w_rho)
        assert den > 0
        m = 2 * acc / den
        assert m.denominator == 1 and m > 0
        mult[key(w)] = int(m)

    # Expand Weyl orbits of the dominant weights.
    table: dict[tuple[int, ...], int] = {}
    for w in ordered:
        m = mult[key(w)]
        orbit = {key(w): w}
        stack = [w]
        while stack:
            y = stack.pop()
            for i in nodes:
                if y[i - 1] > 0:
                    y2 = simple_reflection(d, i, y)
                    if key(y2) not in orbit:
                        orbit[key(y2)] = y2
                        stack.append(y2)
        for y in orbit.values():
            table[_scope_key(label, y)] = m

    total = sum(table.values())
    expected = weyl_dim(label)
    if total != expected:
        raise AssertionError(
            f"multiplicity total {total} != weyl dimension {expected} for {label}"
        )
    return tuple(sorted(table.items()))


def freudenthal_multiplicities(label: IrrepLabel) -> WeightTable:
    """Full weight multiplicity table by the Freudenthal recursion."""
    return WeightTable(label=label, entries=dict(_freudenthal_cached(label)))


def tensor_decompose(a: IrrepLabel, b: IrrepLabel) -> dict[IrrepLabel, int]:
    """Klimyk decomposition of the tensor product of two irreducibles."""
    if not _same_scope(a, b):
        raise ValueError("tensor factors must share a scope")
    if weyl_dim(a) < weyl_dim(b):
        a, b = b, a
    d = a.datum
    rho = _scope_rho(a)
    lam = _ambient_rep(a)
    out: dict[tuple[int, ...], int] = {}
    for mu_key, m in _freudenthal_cached(b):
        mu = (
            tuple(Fraction(c) for c in mu_key)
            if a.scope == AMBIENT
            else a.grading.ambient_extend(mu_key)
        )
        nu = tuple(x + y + r for x, y, r in zip(lam, mu, rho))
        dom, count = _scope_make_dominant(a, nu)
        if any(dom[i - 1] == 0 for i in _scope_nodes(a)):
            continue
        res = tuple(x - r for x, r in zip(dom, rho))
        k = _scope_key(a, res)
        out[k] = out.get(k, 0) + (-1) ** count * m
    result: dict[IrrepLabel, int] = {}
    for k in sorted(out):
        m = out[k]
        if m == 0:
            continue
        if m < 0:
            raise AssertionError(f"negative multiplicity {m} at {k}")
        lab = (
            ambient_label(d, k) if a.scope == AMBIENT else levi_label(a.grading, k)
        )
        result[lab] = m
    return result


def cartan_product_label(a: IrrepLabel, b: IrrepLabel) -> IrrepLabel:
    """Label of the top irreducible component of the tensor product."""
    if not _same_scope(a, b):
        raise ValueError("cartan product factors must share a scope")
    w = tuple(x + y for x, y in zip(a.weight, b.weight))
    if a.scope == AMBIENT:
        return ambient_label(a.datum, w)
    return levi_label(a.grading, w)


# -- prolongation module and cohomology --------------------------------------


def levi_dual(g: ParabolicGrading, coords) -> tuple[int, ...]:
    """Highest weight of the dual of a Levi irreducible (restricted coordinates)."""
    x = g.ambient_extend(coords)
    y = tuple(-c for c in x)
    while True:
        for i in g.levi_ss_nodes:
            if y[i - 1] < 0:
                y = simple_reflection(g.datum, i, y)
                break
        else:
            break
    out = g.restrict(y)
    return tuple(int(c) for c in out)


def _normalized_orders(g: ParabolicGrading, orders) -> dict[int, int]:
    orders = dict(orders)
    for j in orders:
        if j not in g.sigma:
            raise ValueError(f"order given for node {j} which is not crossed")
        if not isinstance(orders[j], int) or orders[j] < 1:
            raise ValueError(f"order at node {j} must be an integer >= 1")
    return {j: orders.get(j, 1) for j in g.sigma}


def construct_V(g: ParabolicGrading, e_label: IrrepLabel, orders) -> IrrepLabel:
    """Ambient irreducible whose degree-0 cohomology is E and degree-1
    cohomology is the prescribed symbol module.

    The label is obtained on the dual side: extend the dual of E by zeros at
    the crossed nodes, add (r_j - 1) fundamental weights there, and dualize.
    """
    if e_label.scope != LEVI or e_label.grading != g:
        raise ValueError("e_label must be a levi-scope label of this grading")
    rs = _normalized_orders(g, orders)
    lam = list(g.ambient_extend(levi_dual(g, e_label.weight)))
    for j, r in rs.items():
        lam[j - 1] += r - 1
    v = ambient_label(g.datum, dual_weight(g.datum, tuple(lam)))
    h0_label, h0_dim = kostant_h0(g, v)
    if h0_label.weight != e_label.weight or h0_dim != weyl_dim(e_label):
        raise AssertionError("degree-0 cohomology of the constructed module is not E")
    return v


def kostant_h0(g: ParabolicGrading, v_label: IrrepLabel) -> tuple[IrrepLabel, int]:
    """Levi label and dimension of H^0 of the nilpotent negative part on V."""
    if v_label.scope != AMBIENT:
        raise ValueError("kostant_h0 expects an ambient label")
    mu = dual_weight(g.datum, tuple(Fraction(c) for c in v_label.weight))
    lab = levi_label(g, levi_dual(g, g.restrict(mu)))
    return lab, weyl_dim(lab)


def kostant_h1(g: ParabolicGrading, v_label: IrrepLabel) -> tuple[H1Component, ...]:
    """One degree-1 cohomology component per crossed node.

    Highest weights come from the affine reflections at the crossed simple
    roots on the dual side; the grading degree of each component is located
    independently from its extreme weight under the grading element.
    """
    if v_label.scope != AMBIENT:
        raise ValueError("kostant_h1 expects an ambient label")
    d = g.datum
    mu = dual_weight(d, tuple(Fraction(c) for c in v_label.weight))
    mu_rho = tuple(a + b for a, b in zip(mu, d.rho))
    comps = []
    for j in g.sigma:
        w = simple_reflection(d, j, mu_rho)
        w = tuple(a - b for a, b in zip(w, d.rho))
        restricted = g.restrict(w)
        if any(c < 0 or c.denominator != 1 for c in restricted):
            raise AssertionError("affine reflection left the dominant Levi chamber")
        lab = levi_label(g, levi_dual(g, restricted))
        # The extreme weight of the component sits over the module layer
        # cut out by the coordinate of the dual-side highest weight at j.
        degree = 1 + int(mu[j - 1])
        comps.append(
            H1Component(node=j, label=lab, dim=weyl_dim(lab), grading_degree=degree)
        )
    return tuple(comps)


def cohomology_report(g: ParabolicGrading, v_label: IrrepLabel) -> CohomologyReport:
    h0_label, h0_dim = kostant_h0(g, v_label)
    return CohomologyReport(h0_label=h0_label, h0_dim=h0_dim, h1=kostant_h1(g, v_label))


def grading_decomposition(g: ParabolicGrading, v_label: IrrepLabel) -> GradingDecomposition:
    """Eigenvalue layers of the grading element on the module, lowest first."""
    if v_label.scope != AMBIENT:
        raise ValueError("grading_decomposition expects an ambient label")
    table = _freudenthal_cached(v_label)
    vals: dict[Fraction, int] = {}
    for w, m in table:
        c = g.pairing(tuple(Fraction(x) for x in w))
        vals[c] = vals.get(c, 0) + m
    low = min(vals)
    span = max(vals) - low
    assert span.denominator == 1
    n = int(span)
    dims = [0] * (n + 1)
    for c, m in vals.items():
        idx = c - low
        assert idx.denominator == 1
        dims[int(idx)] = m
    if any(m == 0 for m in dims):
        raise AssertionError("grading eigenvalues of an irreducible must be contiguous")
    return GradingDecomposition(dims=tuple(dims), lowest_eigenvalue=low)


@dataclass(frozen=True)
class SolutionBound:
    v_label: IrrepLabel
    bound: int
    jet_order: int


def solution_space_bound(g: ParabolicGrading, e_label: IrrepLabel, orders) -> SolutionBound:
    """Dimension bound for the solution space and the determining jet order."""
    v = construct_V(g, e_label, orders)
    dec = grading_decomposition(g, v)
    return SolutionBound(v_label=v, bound=weyl_dim(v), jet_order=dec.jet_order)


def contact_bound_closed_form(n: int, r: int, t: int = 1) -> int:
    """Closed-form solution bound for symmetric-power systems on contact
    gradings of the rank n+1 symplectic algebra."""
    if n < 1 or r < 1 or t < 1:
        raise ValueError("need n, r, t >= 1")
    f = math.factorial
    num = f(r + t + 2 * n - 1) * f(2 * n + t - 1) * r * (r + 2 * t + 2 * n)
    den = f(r + t) * f(t) * f(2 * n + 1) * f(2 * n - 1)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


# -- Levi branching -----------------------------------------------------------


@lru_cache(maxsize=None)
def _levi_cartan_inverse(g: ParabolicGrading):
    nodes = g.levi_ss_nodes
    a = [[Fraction(g.datum.cartan[i - 1][j - 1]) for j in nodes] for i in nodes]
    if not nodes:
        return ()
    inv = linalg.solve_matrix(a, linalg.identity(len(nodes)))
    assert inv is not None
    return tuple(tuple(row) for row in inv)


def levi_branch(g: ParabolicGrading, weights: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    """Decompose a Levi-stable character into Levi irreducibles by peeling.

    Input: multiset of ambient weights (fw coordinates) with multiplicities.
    Output: restricted highest weights with multiplicities.
    """
    rest: dict[tuple[int, ...], int] = {}
    for w, m in weights.items():
        k = tuple(int(c) for c in g.restrict(w))
        rest[k] = rest.get(k, 0) + m
    inv = _levi_cartan_inverse(g)

    def height(k: tuple[int, ...]) -> Fraction:
        return sum(
            (inv[i][j] * k[j] for i in range(len(k)) for j in range(len(k))),
            Fraction(0),
        )

    out: dict[tuple[int, ...], int] = {}
    while rest:
        top = max(rest, key=lambda k: (height(k), k))
        if any(c < 0 for c in top):
            raise AssertionError("peeling found a non-dominant extreme weight")
        m0 = rest[top]
        assert m0 > 0
        lab = levi_label(g, top)
        for k, m in _freudenthal_cached(lab):
            rest[k] = rest.get(k, 0) - m0 * m
            if rest[k] == 0:
                del rest[k]
            elif rest[k] < 0:
                raise AssertionError("peeling produced a negative multiplicity")
        out[top] = m0
    return out


def _crossed_root_coords(g: ParabolicGrading, x: Weight) -> tuple[Fraction, ...]:
    d = g.datum
    coords = [
        sum(d.cartan_inverse[i][j] * Fraction(x[j]) for j in range(d.rank))
        for i in range(d.rank)
    ]
    return tuple(coords[j - 1] for j in g.sigma)


def gminus_dual_tensor_v_character(
    g: ParabolicGrading, v_label: IrrepLabel, multilayer: tuple[int, ...] | None = None
) -> dict[tuple[int, ...], int]:
    """Ambient weight multiset of (g_-)* tensor V as a Levi module.

    The center of the Levi acts on a weight through its root coordinates at
    the crossed nodes, so irreducible full-Levi constituents are (restricted
    highest weight, central character) pairs.  With ``multilayer`` given
    (one entry per crossed node, relative to the lowest weight of V), only
    that central character is kept.
    """
    table = _freudenthal_cached(v_label)
    mu = dual_weight(g.datum, tuple(Fraction(c) for c in v_label.weight))
    shift = _crossed_root_coords(g, mu)  # lowest weight of V is -mu
    out: dict[tuple[int, ...], int] = {}
    for beta in g.datum.positive_roots:
        hs = tuple(beta[j - 1] for j in g.sigma)
        if not any(hs):
            continue
        bw = root_to_weight(g.datum, beta)
        for w, m in table:
            if multilayer is not None:
                wc = _crossed_root_coords(g, tuple(Fraction(c) for c in w))
                lv = tuple(h + a + s for h, a, s in zip(hs, wc, shift))
                if lv != tuple(Fraction(x) for x in multilayer):
                    continue
            k = tuple(int(a + b) for a, b in zip(bw, w))
            out[k] = out.get(k, 0) + m
    return out


def h1_component_multiplicity(g: ParabolicGrading, v_label: IrrepLabel, comp: H1Component) -> int:
    """Multiplicity of a degree-1 cohomology component, as a full Levi module
    (semisimple part and central character), inside (g_-)* tensor V."""
    ml = tuple(
        comp.grading_degree if j == comp.node else 0 for j in g.sigma
    )
    char = gminus_dual_tensor_v_character(g, v_label, multilayer=ml)
    return levi_branch(g, char).get(comp.label.weight, 0)
