import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from nutamari.core import IndexPair, nu_of_pair, pair_of_nu, parse_nu
from nutamari.trees import (
    apply_flip,
    canopy,
    classify,
    complete_tree,
    crosses,
    degrees,
    enumerate_faces,
    enumerate_trees,
    flips,
    ground_arcs,
    increasing_flips,
    leaf_deletion,
    staircase_trees,
    t_min,
)

import oracles

WORKED = IndexPair((0, 1, 3, 4, 6, 7), (2, 5, 8), "A")
CYC_TWO_MIN = IndexPair((0, 3, 4), (1, 2), "B", 4)
CYC_TWO_MAX = IndexPair((1, 2, 4), (0, 3), "B", 4)

SMALL_A = [pair_of_nu("".join(w)) for k in range(6) for w in itertools.product("EN", repeat=k)]
SMALL_B = (
    [IndexPair(tuple(range(n + 1)), tuple(range(n + 1)), "B") for n in (1, 2)]
    + [CYC_TWO_MIN, CYC_TWO_MAX]
    + [IndexPair((0, 2), (1, 3), "B", 3), IndexPair((1,), (0, 2, 3), "B", 3)]
)


# ---- crossing predicate vs chord oracle -------------------------------------


def test_crossing_matches_chords_linear():
    for p in SMALL_A + [WORKED]:
        for a, b in itertools.combinations(ground_arcs(p), 2):
            assert crosses(a, b, "A") == oracles.chords_cross(a, b, "A", p.n), (a, b)


def test_crossing_matches_chords_cyclic():
    for p in SMALL_B:
        for a, b in itertools.combinations(ground_arcs(p), 2):
            assert crosses(a, b, "B", p.n) == oracles.chords_cross(a, b, "B", p.n), (
                p.label(),
                a,
                b,
            )


def test_crossing_irreflexive_and_symmetric():
    for p in SMALL_B + SMALL_A:
        for a, b in itertools.combinations(ground_arcs(p), 2):
            assert not crosses(a, a, p.mode, p.n)
            assert crosses(a, b, p.mode, p.n) == crosses(b, a, p.mode, p.n)


# ---- enumeration vs raw subset filtering ------------------------------------


def test_faces_match_brute_force():
    for p in SMALL_A + SMALL_B:
        got = {frozenset(f) for f in enumerate_faces(p)}
        assert got == oracles.brute_faces(p), p.label()


def test_trees_match_brute_force_facets():
    for p in SMALL_A + SMALL_B:
        got = {frozenset(t) for t in enumerate_trees(p)}
        assert got == oracles.brute_facets(p), p.label()


def test_classify_agrees_with_enumeration():
    for p in SMALL_A + SMALL_B:
        trees = {frozenset(t) for t in enumerate_trees(p)}
        for f in enumerate_faces(p):
            label = classify(p, f)
            assert (label == "Tree") == (frozenset(f) in trees)
            assert label in ("Tree", "Forest")


def test_classify_rejects_foreign_arcs():
    with pytest.raises(ValueError):
        classify(WORKED, [(2, 5)])  # 2 is not in I


def test_classify_notforest_on_crossing():
    # (0,2) and (1,5) interleave as 0 < 1 <= 2 < 5
    assert classify(WORKED, [(0, 2), (1, 5)]) == "NotForest"


# ---- counting formulas -------------------------------------------------------


def test_catalan_counts_mode_a():
    for n in range(6):
        r = tuple(range(n + 1))
        assert len(enumerate_trees(IndexPair(r, r, "A"))) == comb(2 * n, n) // (n + 1)


def test_central_binomial_counts_mode_b():
    for n in range(1, 5):
        r = tuple(range(n + 1))
        assert len(enumerate_trees(IndexPair(r, r, "B"))) == comb(2 * n, n)


def test_fuss_catalan_counts():
    for m, n in ((1, 3), (2, 2), (2, 3), (3, 2)):
        p = pair_of_nu(parse_nu(f"(NE^{m})^{n}"))
        expected = comb((m + 1) * n, n) // (m * n + 1)
        assert len(enumerate_trees(p)) == expected


def test_mode_b_binomial_formula():
    for p in SMALL_B:
        assert len(enumerate_trees(p)) == comb(p.size - 2, len(p.I) - 1)


def test_worked_pair_has_seven_trees():
    assert len(enumerate_trees(WORKED)) == 7


def test_tree_count_equals_path_count_dp():
    for p in SMALL_A:
        assert len(enumerate_trees(p)) == oracles.count_above_dp(nu_of_pair(p))


# ---- structural facts ---------------------------------------------------------


def test_every_tree_is_spanning():
    for p in SMALL_A + SMALL_B:
        for t in enumerate_trees(p):
            assert len(t) == p.size - 1
            assert all(d >= 1 for d in degrees(p, t).values())


def test_t_min_is_a_tree_and_frozen_for_worked_pair():
    assert t_min(WORKED) == (
        (0, 2), (0, 5), (0, 8), (1, 2), (3, 5), (4, 5), (6, 8), (7, 8),
    )
    for p in SMALL_A:
        assert classify(p, t_min(p)) == "Tree"


def test_t_min_has_no_increasing_source():
    # no flip arrives at t_min from below: every flip at t_min is increasing
    for p in SMALL_A:
        t = t_min(p)
        assert all(rec.increasing for rec in flips(p, t))


# ---- flips --------------------------------------------------------------------


def test_flip_graph_connected_via_bfs():
    for p in SMALL_A + SMALL_B:
        trees = {t: k for k, t in enumerate(enumerate_trees(p))}
        start = next(iter(trees))
        seen = {start}
        queue = [start]
        while queue:
            t = queue.pop()
            for rec in flips(p, t):
                t2 = apply_flip(t, rec)
                assert t2 in trees, f"flip left the facet set at {p.label()}"
                if t2 not in seen:
                    seen.add(t2)
                    queue.append(t2)
        assert len(seen) == len(trees), p.label()


def test_flips_are_mutual():
    for p in SMALL_A + SMALL_B:
        for t in enumerate_trees(p):
            for rec in flips(p, t):
                t2 = apply_flip(t, rec)
                back = [r for r in flips(p, t2) if apply_flip(t2, r) == t]
                assert len(back) == 1
                assert back[0].increasing != rec.increasing


def test_increasing_flip_count_matches_path_valleys():
    # increasing flips of T are in bijection with the valleys of its path
    from nutamari.paths import rho, valleys

    for p in SMALL_A + [WORKED]:
        for t in enumerate_trees(p):
            assert len(increasing_flips(p, t)) == len(valleys(rho(p, t)))


def test_ridge_has_at_most_two_trees():
    # removing any arc from a tree leaves a ridge contained in <= 2 facets
    for p in SMALL_A + SMALL_B:
        trees = [frozenset(t) for t in enumerate_trees(p)]
        for t in trees:
            for arc in t:
                ridge = t - {arc}
                containing = [u for u in trees if ridge <= u]
                assert 1 <= len(containing) <= 2


# ---- staircase ----------------------------------------------------------------


def test_staircase_counts_match_paths():
    for p in SMALL_A + [WORKED]:
        assert len(staircase_trees(p)) == oracles.count_above_dp(nu_of_pair(p))


def test_staircase_facets_are_spanning_trees_of_the_grid():
    # staircase facets span and are acyclic, but belong to a different
    # triangulation: they are allowed to contain crossing arc pairs
    from nutamari.trees import component_count

    for p in SMALL_A:
        for t in staircase_trees(p):
            assert len(t) == p.size - 1
            assert len(set(t)) == len(t)
            assert component_count(p, t) == 1


# ---- canopy, deletion, completion ----------------------------------------------


def full_pair(n):
    r = tuple(range(n + 1))
    return IndexPair(r, r, "A")


def test_exactly_one_leaf_per_complementary_pair():
    for n in range(1, 5):
        p = full_pair(n)
        for t in enumerate_trees(p):
            deg = degrees(p, t)
            for k in range(n + 1):
                leaves = (deg[(k, 0)] == 1) + (deg[(k, 1)] == 1)
                assert leaves == 1
            assert deg[(0, 0)] > 1 and deg[(n, 1)] > 1


def test_leaf_arcs_are_vertical():
    # the unique arc at any leaf joins k to its own bar
    for n in range(1, 5):
        p = full_pair(n)
        for t in enumerate_trees(p):
            deg = degrees(p, t)
            for i, j in t:
                if deg[(i, 0)] == 1 or deg[(j, 1)] == 1:
                    assert i == j


def test_canopy_completion_round_trip():
    for n in range(1, 5):
        p = full_pair(n)
        for t in enumerate_trees(p):
            c, small = leaf_deletion(p, t)
            assert c == canopy(p, t)
            assert classify(c, small) == "Tree"
            assert complete_tree(c, small, n) == t


def test_completion_deletion_round_trip():
    for n in range(1, 5):
        p = full_pair(n)
        canopies = {canopy(p, t) for t in enumerate_trees(p)}
        assert len(canopies) == 2 ** (n - 1)
        for c in canopies:
            for s in enumerate_trees(c):
                lifted = complete_tree(c, s, n)
                assert classify(p, lifted) == "Tree"
                assert leaf_deletion(p, lifted) == (c, s)


# ---- properties ----------------------------------------------------------------


@given(st.text(alphabet="EN", max_size=6))
@settings(max_examples=60, deadline=None)
def test_tree_count_never_below_one(w):
    p = pair_of_nu(w)
    trees = enumerate_trees(p)
    assert len(trees) >= 1
    assert t_min(p) in trees
