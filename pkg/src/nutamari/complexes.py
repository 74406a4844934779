"""The flag simplicial complex of non-crossing arc sets: faces, f- and
h-vectors, shellings, Narayana refinements, and link decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .core import Arc, IndexPair, I_SIDE, J_SIDE
from .paths import enumerate_paths_above, valleys
from .posets import build_tree_poset, opposite_linear_extension
from .trees import (
    Tree,
    arc_length,
    context,
    enumerate_faces,
    enumerate_trees,
    face_counts,
)


@dataclass(frozen=True)
class TamariComplex:
    """Flag complex on the ground arcs; facets are the (I, J̄)-trees."""

    pair: IndexPair
    ground: tuple[Arc, ...]
    facets: tuple[Tree, ...]

    @classmethod
    def build(cls, p: IndexPair) -> "TamariComplex":
        ctx = context(p)
        return cls(p, ctx.ground, enumerate_trees(p))

    @property
    def dim(self) -> int:
        return self.pair.size - 2

    def f_vector(self) -> tuple[int, ...]:
        """Counts of faces by cardinality, the empty face included at index 0."""
        return tuple(face_counts(self.pair))

    def h_vector(self) -> tuple[int, ...]:
        return h_from_f(self.f_vector())

    def faces(self, k: int) -> tuple[Tree, ...]:
        return tuple(f for f in enumerate_faces(self.pair) if len(f) == k)

    def interior_faces(self) -> tuple[Tree, ...]:
        return tuple(f for f in enumerate_faces(self.pair) if is_covering(self.pair, f))

    def cone_points(self) -> tuple[Arc, ...]:
        ctx = context(self.pair)
        return tuple(
            a
            for k, a in enumerate(ctx.ground)
            if ctx.compat[k] == ctx.full ^ (1 << k)
        )


def is_covering(p: IndexPair, arcs) -> bool:
    """No isolated node; in mode A the arc (min I, max J̄) must be present."""
    if p.mode == "A" and (p.I[0], p.J[-1]) not in arcs:
        return False
    seen_i = {i for i, _ in arcs}
    seen_j = {j for _, j in arcs}
    return seen_i == set(p.I) and seen_j == set(p.J)


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """h_k = Σ_i (−1)^(k−i) C(d−i, k−i) f_{i−1}, d the facet cardinality."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def cyclic_h_formula(p: IndexPair) -> tuple[int, ...]:
    """Type-B h-vector: h_k = C(|I|−1, k) · C(|J̄|−1, k)."""
    d = p.size - 1
    return tuple(comb(len(p.I) - 1, k) * comb(len(p.J) - 1, k) for k in range(d + 1))


def narayana_vector(nu: str) -> tuple[int, ...]:
    """Histogram of valley counts over all paths weakly above ν."""
    hist: dict[int, int] = {}
    for mu in enumerate_paths_above(nu):
        v = len(valleys(mu))
        hist[v] = hist.get(v, 0) + 1
    return tuple(hist.get(k, 0) for k in range(max(hist) + 1))


# ---------------------------------------------------------------------------
# shellings


def shelling_order(p: IndexPair) -> tuple[Tree, ...]:
    """Facets in a linear extension of the opposite ν-Tamari order."""
    P = build_tree_poset(p)
    return tuple(P.elements[k] for k in opposite_linear_extension(P))


def restriction_sets(facets) -> list[frozenset[Arc]]:
    """R(F_m) = arcs whose removal leaves a ridge seen in an earlier facet."""
    sets = [frozenset(f) for f in facets]
    out = []
    for m, fm in enumerate(sets):
        r = set()
        for e in fm:
            ridge = fm - {e}
            if any(ridge <= sets[l] for l in range(m)):
                r.add(e)
        out.append(frozenset(r))
    return out


def h_vector_shelling(p: IndexPair) -> tuple[int, ...]:
    """h-vector by shelling along the opposite of the ν-Tamari order (mode A)."""
    if p.mode != "A":
        raise ValueError("Tamari-order extensions need not shell the cyclic complex")
    facets = shelling_order(p)
    ok, where = check_shelling(facets)
    if not ok:
        raise RuntimeError(f"extension is not a shelling at step {where}")
    h = [0] * p.size
    for r in restriction_sets(facets):
        h[len(r)] += 1
    return tuple(h)


def check_shelling(facets) -> tuple[bool, Optional[int]]:
    """Is the given facet order a shelling?  Each new facet must meet the
    union of the earlier ones in a pure codimension-one subcomplex."""
    sets = [frozenset(f) for f in facets]
    for m in range(1, len(sets)):
        fm = sets[m]
        ridges = [sets[k] & fm for k in range(m) if len(sets[k] & fm) == len(fm) - 1]
        for l in range(m):
            inter = sets[l] & fm
            if not any(inter <= r for r in ridges):
                return False, m
    return True, None


# ---------------------------------------------------------------------------
# triangulation certificates


def has_alternating_cycle(t1, t2) -> bool:
    """Does the union of the two trees contain a cycle alternating between
    arcs exclusive to t1 and arcs exclusive to t2?  Two spanning trees of
    the same subpolytope never do."""
    ex = [set(t1) - set(t2), set(t2) - set(t1)]
    incident: dict[tuple[int, int], list[list[Arc]]] = {}
    for color in (0, 1):
        for i, j in ex[color]:
            for node in ((i, I_SIDE), (j, J_SIDE)):
                incident.setdefault(node, [[], []])[color].append((i, j))
    WHITE, GRAY, BLACK = 0, 1, 2
    state: dict[tuple, int] = {}

    def other_end(arc: Arc, node) -> tuple[int, int]:
        return (arc[1], J_SIDE) if node[1] == I_SIDE else (arc[0], I_SIDE)

    def next_states(s):
        node, color = s
        for arc in incident.get(node, [[], []])[1 - color]:
            yield (other_end(arc, node), 1 - color)

    for node in incident:
        for color in (0, 1):
            start = (node, color)
            if state.get(start, WHITE) != WHITE:
                continue
            stack = [(start, iter(next_states(start)))]
            state[start] = GRAY
            while stack:
                s, it = stack[-1]
                advanced = False
                for s2 in it:
                    c = state.get(s2, WHITE)
                    if c == GRAY:
                        return True
                    if c == WHITE:
                        state[s2] = GRAY
                        stack.append((s2, iter(next_states(s2))))
                        advanced = True
                        break
                if not advanced:
                    state[s] = BLACK
                    stack.pop()
    return False


@dataclass(frozen=True)
class TriangulationReport:
    ok: bool
    all_trees: bool
    pairwise_ok: bool
    count_ok: bool
    expected: int
    actual: int
    first_bad: Optional[tuple] = None


def verify_triangulation(trees, p: IndexPair) -> TriangulationReport:
    """Certify that the given trees triangulate the subpolytope of
    Δ_I × Δ_J̄: every member spans, no two admit an alternating cycle
    (so interiors are disjoint), and the count matches an independent
    triangulation of the same polytope (staircase count in mode A, the
    binomial count in mode B)."""
    from .trees import classify

    trees = [tuple(sorted(set(t))) for t in trees]
    first_bad = None
    all_trees = len(set(trees)) == len(trees)
    if not all_trees:
        first_bad = ("duplicate",)
    for t in trees:
        if classify(p, t) != "Tree":
            all_trees = False
            first_bad = first_bad or ("classify", t)
            break
    pairwise_ok = True
    if all_trees:
        for s in range(len(trees)):
            for r in range(s + 1, len(trees)):
                if has_alternating_cycle(trees[s], trees[r]):
                    pairwise_ok = False
                    first_bad = first_bad or ("pair", trees[s], trees[r])
                    break
            if not pairwise_ok:
                break
    if p.mode == "A":
        from .core import nu_of_pair

        expected = len(enumerate_paths_above(nu_of_pair(p)))
    else:
        expected = comb(p.size - 2, len(p.I) - 1)
    count_ok = len(trees) == expected
    ok = all_trees and pairwise_ok and count_ok
    return TriangulationReport(ok, all_trees, pairwise_ok, count_ok, expected, len(trees), first_bad)


# ---------------------------------------------------------------------------
# links


@dataclass(frozen=True)
class LinkFactor:
    """One join factor of link(F) ∗ F.

    pair is linear (mode A) except for the residual cyclic factor; removed
    lists cone vertices deleted from the factor complex, in factor labels.
    For lifted cyclic windows, reduce factor values mod `mod` to recover
    original arcs.
    """

    pair: IndexPair
    removed: tuple[Arc, ...]
    mod: Optional[int]
    cyclic: bool

    def to_original(self, arc: Arc) -> Arc:
        if self.mod is None:
            return arc
        return (arc[0] % self.mod, arc[1] % self.mod)


def _contains_interval(a: Arc, f: Arc, M: int) -> bool:
    """Is the closed interval [f] inside [a] on the cycle of circumference M?"""
    return (f[0] - a[0]) % M + (f[1] - f[0]) % M <= (a[1] - a[0]) % M


def _strictly_inside(value: int, side: int, a: Arc, M: int) -> bool:
    l = (a[1] - a[0]) % M
    d = (value - a[0]) % M
    return (0 < d <= l) if side == I_SIDE else d < l


def _closed_member(value: int, a: Arc, M: int) -> bool:
    return (value - a[0]) % M <= (a[1] - a[0]) % M


def _window_factor(p: IndexPair, forest, a: Arc, deleted: bool) -> LinkFactor:
    M = p.n + 1
    children = [f for f in forest if f != a and _contains_interval(a, f, M)]
    I2, J2 = [], []
    for k in p.I:
        if _closed_member(k, a, M) and not any(
            _strictly_inside(k, I_SIDE, f, M) for f in children
        ):
            I2.append(k + M if k < a[0] else k)
    for k in p.J:
        if _closed_member(k, a, M) and not any(
            _strictly_inside(k, J_SIDE, f, M) for f in children
        ):
            J2.append(k + M if k < a[0] else k)
    wrapped = p.mode == "B" and (a[1] < a[0] or any(v >= M for v in I2 + J2))
    sub = IndexPair(tuple(sorted(I2)), tuple(sorted(J2)), "A")
    lifted_a = (a[0], a[1] + M if a[1] < a[0] else a[1])
    return LinkFactor(
        sub,
        (lifted_a,) if deleted else (),
        M if wrapped else None,
        cyclic=False,
    )


def link_decomposition(p: IndexPair, forest) -> tuple[LinkFactor, ...]:
    """Join factors of link(forest) ∗ forest.

    One linear factor per forest arc (its own window, with the arc itself
    removed as a cone point) and a final factor for the ambient window:
    in mode A the (min I, max J̄) window, in mode B the residual cyclic
    pair left after deleting the open windows of the forest arcs.
    """
    p.require_standing()
    forest = tuple(sorted(set(map(tuple, forest))))
    M = p.n + 1
    factors = []
    if p.mode == "A":
        a0 = (p.I[0], p.J[-1])
        for a in forest:
            if a != a0:
                factors.append(_window_factor(p, forest, a, deleted=True))
        factors.append(_window_factor(p, [f for f in forest if f != a0], a0, deleted=False))
        return tuple(factors)
    for a in forest:
        factors.append(_window_factor(p, forest, a, deleted=True))
    I2 = [k for k in p.I if not any(_strictly_inside(k, I_SIDE, f, M) for f in forest)]
    J2 = [k for k in p.J if not any(_strictly_inside(k, J_SIDE, f, M) for f in forest)]
    if I2 and J2:
        factors.append(
            LinkFactor(IndexPair(tuple(I2), tuple(J2), "B", p.n), (), None, cyclic=True)
        )
    return tuple(factors)
