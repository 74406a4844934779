"""Exact geometric realization: trees as vertices of the bounded complex
of a tropical hyperplane arrangement, cells from covering forests,
orientation along the flip order, and support convexity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .complexes import TamariComplex, is_covering, link_decomposition
from .core import Arc, IndexPair, I_SIDE, J_SIDE
from .heights import INF, ExtRat, HeightFunction, default_height, first_height_violation
from .posets import FinitePoset
from .trees import Tree, component_count, enumerate_trees, ground_arcs

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class TropicalApex:
    """The inverted tropical hyperplane attached to i: its apex has
    coordinates h(i, j̄) over j̄ ∈ J̄, here also dehomogenized so the last
    coordinate is 0."""

    i: int
    coords: tuple[ExtRat, ...]
    normalized: tuple[ExtRat, ...]


def apexes(h: HeightFunction) -> tuple[TropicalApex, ...]:
    p = h.pair
    out = []
    for i in p.I:
        row = tuple(h.value(i, j) for j in p.J)
        last = row[-1]
        if last is INF:
            raise ValueError(f"apex {i} has infinite last coordinate")
        out.append(TropicalApex(i, row, tuple(c - last for c in row)))
    return tuple(out)


def vertex_coords(p: IndexPair, t: Tree, h: HeightFunction) -> Point:
    """g(t): the unique point where the tree's arc inequalities are tight,
    dehomogenized at x(max J̄) = 0; coordinates over J̄ minus its maximum."""
    adj_i: dict[int, list[int]] = {i: [] for i in p.I}
    adj_j: dict[int, list[int]] = {j: [] for j in p.J}
    for i, j in t:
        adj_i[i].append(j)
        adj_j[j].append(i)
    xs: dict[int, Fraction] = {p.J[-1]: Fraction(0)}
    ys: dict[int, Fraction] = {}
    stack: list[tuple[int, int]] = [(J_SIDE, p.J[-1])]
    while stack:
        side, v = stack.pop()
        if side == J_SIDE:
            for i in adj_j[v]:
                if i not in ys:
                    hv = h.value(i, v)
                    if hv is INF:
                        raise ValueError(f"tree arc ({i}, {v}) has infinite height")
                    ys[i] = xs[v] - hv
                    stack.append((I_SIDE, i))
        else:
            for j in adj_i[v]:
                if j not in xs:
                    hv = h.value(v, j)
                    if hv is INF:
                        raise ValueError(f"tree arc ({v}, {j}) has infinite height")
                    xs[j] = ys[v] + hv
                    stack.append((J_SIDE, j))
    if len(xs) != len(p.J) or len(ys) != len(p.I):
        raise ValueError("arc set does not span the pair")
    return tuple(xs[j] for j in p.J[:-1])


@dataclass(frozen=True)
class GeomCell:
    forest: Tree
    dim: int
    tree_ids: tuple[int, ...]
    vertices: tuple[Point, ...]


@dataclass(frozen=True)
class GeomComplex:
    pair: IndexPair
    height: HeightFunction
    trees: tuple[Tree, ...]
    coords: tuple[Point, ...]
    cells: tuple[GeomCell, ...]

    def cells_of_dim(self, d: int) -> tuple[GeomCell, ...]:
        return tuple(c for c in self.cells if c.dim == d)

    @property
    def ambient_dim(self) -> int:
        return len(self.pair.J) - 1


def cell_of_forest(
    p: IndexPair,
    h: HeightFunction,
    forest,
    trees: Optional[tuple[Tree, ...]] = None,
    coords: Optional[tuple[Point, ...]] = None,
) -> GeomCell:
    forest = tuple(sorted(set(map(tuple, forest))))
    if not is_covering(p, forest):
        raise ValueError(f"{forest} is not a covering forest of {p.label()}")
    if trees is None:
        trees = enumerate_trees(p)
    if coords is None:
        coords = tuple(vertex_coords(p, t, h) for t in trees)
    fs = set(forest)
    ids = tuple(k for k, t in enumerate(trees) if fs <= set(t))
    verts = tuple(sorted({coords[k] for k in ids}))
    return GeomCell(forest, component_count(p, forest) - 1, ids, verts)


def build_geometric_complex(p: IndexPair, h: Optional[HeightFunction] = None) -> GeomComplex:
    p.require_standing()
    if h is None:
        h = default_height(p)
    bad = first_height_violation(h)
    if bad is not None:
        raise ValueError(f"height function is not valid: exchange fails at {bad[0]}")
    trees = enumerate_trees(p)
    coords = tuple(vertex_coords(p, t, h) for t in trees)
    if len(set(coords)) != len(coords):
        raise RuntimeError("distinct trees received equal coordinates")
    comp = TamariComplex.build(p)
    cells = [cell_of_forest(p, h, f, trees, coords) for f in comp.interior_faces()]
    cells.sort(key=lambda c: (c.dim, c.forest))
    return GeomComplex(p, h, trees, coords, tuple(cells))


def tightness_report(gc: GeomComplex) -> Optional[str]:
    """Check the H-description: anchored at any tree arc (i, j̄), the point
    satisfies x(k̄) − x(j̄) ≤ h(i, k̄) − h(i, j̄) for all k̄, with equality
    exactly at the barred neighbors of i.  None when consistent."""
    p = gc.pair
    h = gc.height
    for k, t in enumerate(gc.trees):
        full = dict(zip(p.J, gc.coords[k] + (Fraction(0),)))
        nbrs: dict[int, set[int]] = {i: set() for i in p.I}
        for i, j in t:
            nbrs[i].add(j)
        for i in p.I:
            j = min(nbrs[i])
            base = h.value(i, j)
            tight = set()
            for j2 in p.J:
                rhs = h.value(i, j2)
                lhs = full[j2] - full[j] + base
                if not lhs <= rhs:
                    return f"tree {k}: point violates apex {i} at ({j}, {j2}): {lhs} > {rhs}"
                if rhs is not INF and lhs == rhs:
                    tight.add(j2)
            if tight != nbrs[i]:
                return f"tree {k}: tight set at apex {i} differs from tree arcs"
    return None


# ---------------------------------------------------------------------------
# orientation along the flip order


def cover_displacements(
    gc: GeomComplex, poset: FinitePoset
) -> tuple[tuple[int, int, tuple[Fraction, ...]], ...]:
    if poset.elements != gc.trees:
        raise ValueError("poset and geometric complex enumerate different trees")
    out = []
    for a, b in poset.cover_pairs():
        delta = tuple(x - y for x, y in zip(gc.coords[b], gc.coords[a]))
        out.append((a, b, delta))
    return tuple(out)


def orientation_check(gc: GeomComplex, poset: FinitePoset) -> bool:
    """Every increasing flip moves the vertex weakly down in all
    coordinates and strictly in at least one."""
    for _, _, d in cover_displacements(gc, poset):
        if not (all(x <= 0 for x in d) and any(x < 0 for x in d)):
            return False
    return True


def conflicting_cover_signs(gc: GeomComplex, poset: FinitePoset):
    """Two covers whose displacement signs disagree in one coordinate,
    or None; such a pair rules out any coordinatewise orientation."""
    disp = cover_displacements(gc, poset)
    dim = gc.ambient_dim
    for k in range(dim):
        pos = neg = None
        for a, b, d in disp:
            if d[k] > 0 and pos is None:
                pos = (a, b, k, "+")
            if d[k] < 0 and neg is None:
                neg = (a, b, k, "-")
        if pos and neg:
            return pos, neg
    return None


def _cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def origin_in_cover_hull(gc: GeomComplex, poset: FinitePoset) -> bool:
    """Exact 2-d test that 0 lies in the convex hull of the cover
    displacements; if it does, no linear functional strictly increases
    along the flip order."""
    if gc.ambient_dim != 2:
        raise ValueError("origin_in_cover_hull is a 2-d certificate")
    vecs = [d for _, _, d in cover_displacements(gc, poset)]
    zero = (Fraction(0), Fraction(0))
    if zero in vecs:
        return True
    n = len(vecs)
    for s in range(n):
        for t in range(s + 1, n):
            u, v = vecs[s], vecs[t]
            if _cross(u, v) == 0 and u[0] * v[0] + u[1] * v[1] <= 0:
                return True
    for s in range(n):
        for t in range(s + 1, n):
            for r in range(t + 1, n):
                c1 = _cross(vecs[s], vecs[t])
                c2 = _cross(vecs[t], vecs[r])
                c3 = _cross(vecs[r], vecs[s])
                if c1 == c2 == c3 == 0:
                    continue
                if (c1 >= 0 and c2 >= 0 and c3 >= 0) or (c1 <= 0 and c2 <= 0 and c3 <= 0):
                    return True
    return False


# ---------------------------------------------------------------------------
# support convexity


@dataclass(frozen=True)
class SupportReport:
    convex: bool
    dim: int


def support_convex_predicate(p: IndexPair) -> SupportReport:
    """Combinatorial convexity criterion for the support, with the
    support dimension (meaningful when convex)."""
    if p.mode == "A":
        p.require_standing()
        J2 = [j for j in p.J if sum(1 for i in p.I if i <= j) >= 2]
        merged = sorted(
            [(i, I_SIDE) for i in p.I] + [(j, J_SIDE) for j in J2 if j != p.J[-1]]
        )
        convex = not any(
            merged[k][1] == J_SIDE and merged[k + 1][1] == J_SIDE
            for k in range(len(merged) - 1)
        )
        return SupportReport(convex, max(len(J2) - 1, 0))
    if len(p.I) == 1 or len(p.J) == 1:
        return SupportReport(True, 0)
    if len(p.J) == 2:
        return SupportReport(True, 1)
    nodes = p.nodes()
    convex = True
    for k in range(len(nodes)):
        if nodes[k][1] == J_SIDE and nodes[(k + 1) % len(nodes)][1] == J_SIDE:
            convex = False
    return SupportReport(convex, len(p.J) - 1)


def _hull(points: list[Point]) -> list[Point]:
    """Andrew monotone chain; strict turns only, so collinear points drop."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for q in pts:
        while len(lower) >= 2 and _cross(
            (lower[-1][0] - lower[-2][0], lower[-1][1] - lower[-2][1]),
            (q[0] - lower[-2][0], q[1] - lower[-2][1]),
        ) <= 0:
            lower.pop()
        lower.append(q)
    upper: list[Point] = []
    for q in reversed(pts):
        while len(upper) >= 2 and _cross(
            (upper[-1][0] - upper[-2][0], upper[-1][1] - upper[-2][1]),
            (q[0] - upper[-2][0], q[1] - upper[-2][1]),
        ) <= 0:
            upper.pop()
        upper.append(q)
    return lower[:-1] + upper[:-1]


def _area2(polygon: list[Point]) -> Fraction:
    s = Fraction(0)
    for k in range(len(polygon)):
        x1, y1 = polygon[k]
        x2, y2 = polygon[(k + 1) % len(polygon)]
        s += x1 * y2 - x2 * y1
    return abs(s)


@dataclass(frozen=True)
class Convex2DReport:
    convex: bool
    hull_area2: Fraction
    cells_area2: Fraction


def convexity_oracle_2d(gc: GeomComplex) -> Convex2DReport:
    """Exact area comparison: the support is convex iff the doubled areas
    of the 2-cells sum to the doubled area of the convex hull of all
    vertices.  A hull of zero area (collinear support) is convex."""
    if gc.ambient_dim != 2:
        raise ValueError("the area oracle needs a 2-dimensional ambient space")
    hull_area = _area2(_hull(list(gc.coords)))
    cells_area = sum(
        (_area2(_hull(list(c.vertices))) for c in gc.cells_of_dim(2)), Fraction(0)
    )
    return Convex2DReport(hull_area == cells_area, hull_area, cells_area)


# ---------------------------------------------------------------------------
# Cayley trick and product structure of cells


def cayley_cell(p: IndexPair, t: Tree) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """The mixed-subdivision cell of a tree: per i, its barred neighbor
    set; the fine cells are exactly the trees."""
    nbrs: dict[int, list[int]] = {i: [] for i in p.I}
    for i, j in t:
        nbrs[i].append(j)
    return tuple((i, tuple(sorted(nbrs[i]))) for i in p.I)


@dataclass(frozen=True)
class FactorSummary:
    pair: IndexPair
    cyclic: bool
    dim: int
    n_vertices: int
    shape: str


@dataclass(frozen=True)
class CellProductRecord:
    forest: Tree
    dim: int
    verified: bool
    factors: tuple[FactorSummary, ...]


@lru_cache(maxsize=None)
def _covering_faces(p: IndexPair) -> tuple[Tree, ...]:
    return TamariComplex.build(p).interior_faces()


@lru_cache(maxsize=None)
def _factor_summary(p: IndexPair, cyclic: bool) -> FactorSummary:
    covering = _covering_faces(p)
    dims = [component_count(p, f) - 1 for f in covering]
    dim = max(dims)
    nv = sum(1 for d in dims if d == 0)
    if dim == 0:
        shape = "point"
    elif dim == 1:
        shape = "segment"
    elif dim == 2:
        shape = f"{nv}-gon"
    else:
        fvec = tuple(sum(1 for d in dims if d == k) for k in range(dim + 1))
        kind = "cyclohedron" if cyclic else "associahedron"
        shape = f"{dim}-dim {kind} f={fvec}"
    return FactorSummary(p, cyclic, dim, nv, shape)


def cell_products_report(gc: GeomComplex) -> tuple[CellProductRecord, ...]:
    """Decompose every cell as a product of full associahedra (and at most
    one cyclohedron), verifying the product bijection on its face poset."""
    p = gc.pair
    records = []
    all_forests = [set(c.forest) for c in gc.cells]
    for cell in gc.cells:
        fs = set(cell.forest)
        factors = link_decomposition(p, cell.forest)
        summaries = tuple(_factor_summary(f.pair, f.cyclic) for f in factors)
        grounds = []
        for f in factors:
            lift = {}
            for arc in ground_arcs(f.pair):
                lift[f.to_original(arc)] = arc
            grounds.append(lift)
        faces = [g for g in all_forests if fs <= g]
        seen = set()
        ok = True
        for g in faces:
            comps = []
            mapped: set[Arc] = set()
            for f, lift in zip(factors, grounds):
                part = frozenset(lift[a] for a in g if a in lift)
                mapped |= {a for a in g if a in lift}
                if not is_covering(f.pair, part):
                    ok = False
                comps.append(part)
            if mapped != g:
                ok = False
            key = tuple(comps)
            if key in seen:
                ok = False
            seen.add(key)
        expected = 1
        for f in factors:
            expected *= len(_covering_faces(f.pair))
        if len(faces) != expected:
            ok = False
        if cell.dim != sum(s.dim for s in summaries):
            ok = False
        records.append(CellProductRecord(cell.forest, cell.dim, ok, summaries))
    return tuple(records)
