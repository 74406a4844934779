import itertools
from fractions import Fraction

import pytest

from nutamari.core import IndexPair, pair_of_nu
from nutamari.heights import INF, HeightFunction, default_height
from nutamari.posets import build_tree_poset
from nutamari.trees import enumerate_trees, ground_arcs, t_min
from nutamari.tropical import (
    apexes,
    build_geometric_complex,
    cayley_cell,
    cell_products_report,
    conflicting_cover_signs,
    convexity_oracle_2d,
    cover_displacements,
    orientation_check,
    origin_in_cover_hull,
    support_convex_predicate,
    tightness_report,
    vertex_coords,
)

import oracles

WORKED = IndexPair((0, 1, 3, 4, 6, 7), (2, 5, 8), "A")
WORKED_CYCLIC = IndexPair((0, 1, 3, 4, 6, 7), (2, 5, 8), "B", 8)
ENN = IndexPair((0, 1), (2, 3, 4), "A")

SMALL_A = [pair_of_nu("".join(w)) for k in range(5) for w in itertools.product("EN", repeat=k)]
SMALL_B = [
    IndexPair((0, 1), (0, 1), "B", 1),
    IndexPair((0, 1, 2), (0, 1, 2), "B", 2),
    IndexPair((0, 3, 4), (1, 2), "B", 4),
]


def solve_tree_system(p, t, h):
    # unknowns: one y per i in I, one x per j in J; equations x_j - y_i = h(i, j)
    # per tree arc, and x_(max J) = 0
    unknowns = [("y", i) for i in p.I] + [("x", j) for j in p.J]
    col = {u: k for k, u in enumerate(unknowns)}
    rows, rhs = [], []
    for i, j in t:
        row = [Fraction(0)] * len(unknowns)
        row[col[("x", j)]] = Fraction(1)
        row[col[("y", i)]] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(h.value(i, j)))
    anchor = [Fraction(0)] * len(unknowns)
    anchor[col[("x", p.J[-1])]] = Fraction(1)
    rows.append(anchor)
    rhs.append(Fraction(0))
    sol = oracles.gauss_solve(rows, rhs)
    return tuple(sol[col[("x", j)]] for j in p.J[:-1])


# ---- vertex coordinates vs linear algebra ------------------------------------------


def test_vertex_coords_match_gaussian_elimination():
    cases = [(p, default_height(p)) for p in SMALL_A + SMALL_B + [WORKED, ENN]]
    h = default_height(WORKED)
    cases.append(
        (WORKED, HeightFunction(WORKED, {a: v * Fraction(5, 3) for a, v in h.items()}))
    )
    for p, hf in cases:
        for t in enumerate_trees(p):
            assert vertex_coords(p, t, hf) == solve_tree_system(p, t, hf)


def test_worked_pair_frozen_coordinates():
    gc = build_geometric_complex(WORKED)
    expected = {
        (48, 15), (48, 21), (48, 33), (54, 39), (60, 15), (60, 21), (60, 39),
    }
    assert {tuple(map(Fraction, c)) for c in gc.coords} == {
        (Fraction(a), Fraction(b)) for a, b in expected
    }
    k = gc.trees.index(t_min(WORKED))
    assert gc.coords[k] == (Fraction(60), Fraction(39))


def test_worked_pair_frozen_apexes():
    norm = {a.i: a.normalized for a in apexes(default_height(WORKED))}
    assert norm[0] == (60, 39, 0)
    assert norm[1] == (48, 33, 0)
    assert norm[3][0] is INF and norm[3][1:] == (21, 0)
    assert norm[4][0] is INF and norm[4][1:] == (15, 0)
    for i in (6, 7):
        assert norm[i][0] is INF and norm[i][1] is INF and norm[i][2] == 0


def test_enn_pair_frozen_chain():
    gc = build_geometric_complex(ENN)
    t_c = ((0, 2), (0, 3), (0, 4), (1, 2))
    t_a = ((0, 3), (0, 4), (1, 2), (1, 3))
    t_b = ((0, 4), (1, 2), (1, 3), (1, 4))
    coords = dict(zip(gc.trees, gc.coords))
    assert coords[t_c] == (12, 7)
    assert coords[t_a] == (10, 7)
    assert coords[t_b] == (8, 5)
    P = build_tree_poset(ENN)
    assert set(P.cover_pairs()) == {
        (P.index(t_c), P.index(t_a)),
        (P.index(t_a), P.index(t_b)),
    }


def test_invalid_height_is_rejected_by_build():
    table = {(i, j): Fraction((j - i) ** 2) for i, j in ground_arcs(WORKED)}
    with pytest.raises(ValueError):
        build_geometric_complex(WORKED, HeightFunction(WORKED, table))


# ---- cells -----------------------------------------------------------------------


def test_cell_inventory_basics():
    for p in SMALL_A + SMALL_B + [WORKED, ENN]:
        gc = build_geometric_complex(p)
        assert len(gc.cells_of_dim(0)) == len(gc.trees)
        assert all(c.dim <= gc.ambient_dim for c in gc.cells)
        for c in gc.cells_of_dim(0):
            assert len(c.tree_ids) == 1 and len(c.vertices) == 1
        for c in gc.cells_of_dim(1):
            assert len(set(c.vertices)) == 2


def test_worked_pair_has_two_2cells_with_frozen_areas():
    gc = build_geometric_complex(WORKED)
    two = gc.cells_of_dim(2)
    assert len(two) == 2
    from nutamari.tropical import _area2, _hull

    areas = sorted(_area2(_hull(list(c.vertices))) for c in two)
    assert areas == [144, 396]
    square = next(c for c in two if _area2(_hull(list(c.vertices))) == 144)
    assert set(square.vertices) == {(48, 15), (60, 15), (48, 21), (60, 21)}


def test_worked_pair_cover_count():
    gc = build_geometric_complex(WORKED)
    P = build_tree_poset(WORKED)
    assert len(cover_displacements(gc, P)) == 8


# ---- orientation -----------------------------------------------------------------


def test_mode_a_orientation_monotone():
    for p in SMALL_A + [WORKED, ENN]:
        gc = build_geometric_complex(p)
        P = build_tree_poset(p)
        assert orientation_check(gc, P)
        assert conflicting_cover_signs(gc, P) is None


def test_cyclic_worked_pair_has_no_monotone_orientation():
    gc = build_geometric_complex(WORKED_CYCLIC)
    P = build_tree_poset(WORKED_CYCLIC)
    assert not orientation_check(gc, P)
    assert conflicting_cover_signs(gc, P) is not None
    assert origin_in_cover_hull(gc, P)


def test_origin_in_cover_hull_false_in_mode_a():
    # in mode A all displacements lie in the closed negative quadrant and
    # some are nonzero, so the origin is outside their hull
    gc = build_geometric_complex(WORKED)
    P = build_tree_poset(WORKED)
    assert not origin_in_cover_hull(gc, P)


# ---- tightness ---------------------------------------------------------------------


def test_tightness_everywhere():
    for p in SMALL_A + SMALL_B + [WORKED, ENN, WORKED_CYCLIC]:
        assert tightness_report(build_geometric_complex(p)) is None


# ---- support convexity ---------------------------------------------------------------


def test_support_predicate_frozen_cases():
    assert not support_convex_predicate(ENN).convex
    assert not support_convex_predicate(IndexPair((0, 1, 2, 3), (4, 5, 6), "A")).convex
    rep = support_convex_predicate(pair_of_nu("NENENE"))
    assert rep.convex and rep.dim == 2
    assert support_convex_predicate(WORKED).convex


def test_support_predicate_agrees_with_area_oracle():
    for p in SMALL_A + [WORKED, ENN]:
        if len(p.J) - 1 != 2:
            continue
        gc = build_geometric_complex(p)
        rep = convexity_oracle_2d(gc)
        assert support_convex_predicate(p).convex == rep.convex, p.label()


def test_worked_pair_area_decomposition():
    gc = build_geometric_complex(WORKED)
    rep = convexity_oracle_2d(gc)
    assert rep.convex
    assert rep.hull_area2 == 540
    assert rep.cells_area2 == 540


def test_area_oracle_agrees_with_fan_formula():
    from nutamari.tropical import _hull

    gc = build_geometric_complex(WORKED)
    hull = _hull(list(gc.coords))
    assert oracles.fan_area2(hull) == 540


# ---- products and the Cayley trick -----------------------------------------------------


def test_cayley_cells_partition_tree_arcs():
    for p in SMALL_A + SMALL_B + [WORKED]:
        for t in enumerate_trees(p):
            cell = cayley_cell(p, t)
            assert [i for i, _ in cell] == list(p.I)
            parts = [js for _, js in cell]
            assert sum(len(js) for js in parts) == len(t)
            assert sum(len(js) - 1 for js in parts) == len(p.J) - 1
            assert sorted((i, j) for (i, js) in cell for j in js) == sorted(t)


def test_cell_products_verified_everywhere():
    for p in SMALL_A + SMALL_B + [WORKED, ENN, WORKED_CYCLIC]:
        gc = build_geometric_complex(p)
        for rec in cell_products_report(gc):
            assert rec.verified, (p.label(), rec.forest)


def test_worked_pair_cell_product_shapes():
    gc = build_geometric_complex(WORKED)
    report = cell_products_report(gc)
    by_dim = {}
    for rec in report:
        by_dim.setdefault(rec.dim, []).append(rec)
    assert len(by_dim[2]) == 2
    shapes = []
    for rec in by_dim[2]:
        nontrivial = [f for f in rec.factors if f.dim > 0]
        shapes.append(tuple(sorted(f.shape for f in nontrivial)))
    assert sorted(shapes) == [("5-gon",), ("segment", "segment")]
    pentagon = next(
        rec for rec in by_dim[2] if any(f.shape == "5-gon" for f in rec.factors)
    )
    assert next(f for f in pentagon.factors if f.dim == 2).n_vertices == 5


def test_cell_dims_equal_factor_dim_sums():
    for p in SMALL_A + SMALL_B + [WORKED]:
        gc = build_geometric_complex(p)
        for rec in cell_products_report(gc):
            assert rec.dim == sum(f.dim for f in rec.factors)
