#!/usr/bin/env python3
"""Acceptance battery: ten reproducibility criteria, one PASS/FAIL line each.

Every criterion recomputes its claim from scratch in exact arithmetic and
compares against an independent count, a closed formula, or frozen values.
Criteria with pinned wall-clock budgets assert them.  Run directly, or via
tests/test_acceptance.py which wraps the same functions for pytest.
"""

from __future__ import annotations

import itertools
import sys
from fractions import Fraction
from math import comb
from time import perf_counter

from nutamari.complexes import (
    TamariComplex,
    cyclic_h_formula,
    h_vector_shelling,
    narayana_vector,
    verify_triangulation,
)
from nutamari.core import IndexPair, nu_of_pair, pair_of_nu
from nutamari.heights import default_height, verify_regular
from nutamari.posets import (
    build_tree_poset,
    canopy_fiber_report,
    lattice_check,
    verify_flip_path_iso,
    verify_reverse_duality,
)
from nutamari.tropical import (
    build_geometric_complex,
    conflicting_cover_signs,
    convexity_oracle_2d,
    orientation_check,
    support_convex_predicate,
)
from nutamari.trees import enumerate_trees, staircase_trees

WORKED_PAIR = IndexPair((0, 1, 3, 4, 6, 7), (2, 5, 8), "A")
WORKED_COORDS = {
    (Fraction(48), Fraction(15)),
    (Fraction(48), Fraction(21)),
    (Fraction(48), Fraction(33)),
    (Fraction(54), Fraction(39)),
    (Fraction(60), Fraction(15)),
    (Fraction(60), Fraction(21)),
    (Fraction(60), Fraction(39)),
}


def _trim(v) -> tuple[int, ...]:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def partition_pairs(max_size: int) -> list[IndexPair]:
    """All pairs realizable by a path word of length <= max_size - 2."""
    pairs = []
    for k in range(max_size - 1):
        for letters in itertools.product("EN", repeat=k):
            pairs.append(pair_of_nu("".join(letters)))
    return pairs


def _time_guard(t0: float, budget: float) -> str:
    dt = perf_counter() - t0
    assert dt < budget, f"took {dt:.1f}s, budget {budget:.0f}s"
    return f"{dt:.2f}s < {budget:.0f}s"


def criterion_01_worked_example() -> str:
    t0 = perf_counter()
    gc = build_geometric_complex(WORKED_PAIR)
    assert len(gc.trees) == 7, f"expected 7 trees, got {len(gc.trees)}"
    got = {tuple(c) for c in gc.coords}
    assert got == WORKED_COORDS, f"coordinates differ: {sorted(got)}"
    return f"7 trees, 7 exact vertices, {_time_guard(t0, 1.0)}"


def criterion_02_type_b_h_vector() -> str:
    t0 = perf_counter()
    universe = [s for k in range(1, 6) for s in itertools.combinations(range(5), k)]
    n_checked = 0
    for I in universe:
        for J in universe:
            p = IndexPair(I, J, "B", 4)
            hv = _trim(TamariComplex.build(p).h_vector())
            assert hv == _trim(cyclic_h_formula(p)), f"h mismatch at {p.label()}"
            n_checked += 1
    return f"{n_checked} pairs match C(|I|-1,k)*C(|J|-1,k), {_time_guard(t0, 30.0)}"


def criterion_03_cyclic_counts() -> str:
    counts = []
    for n in range(1, 7):
        r = tuple(range(n + 1))
        got = len(enumerate_trees(IndexPair(r, r, "B")))
        assert got == comb(2 * n, n), f"n={n}: {got} != C({2*n},{n})"
        counts.append(got)
    return f"central binomials {counts}"


def criterion_04_flip_cover_isomorphism() -> str:
    t0 = perf_counter()
    pairs = partition_pairs(10)
    for p in pairs:
        assert verify_flip_path_iso(p), f"rho transport fails at {p.label()}"
    return f"{len(pairs)} pairs, {_time_guard(t0, 120.0)}"


def criterion_05_three_way_h() -> str:
    pairs = partition_pairs(10)
    for p in pairs:
        hv = _trim(TamariComplex.build(p).h_vector())
        hs = _trim(h_vector_shelling(p))
        hn = _trim(narayana_vector(nu_of_pair(p)))
        assert hv == hs == hn, f"h disagreement at {p.label()}: {hv} {hs} {hn}"
    for n in range(1, 7):
        row = _trim(narayana_vector("NE" * n))
        classical = _trim(comb(n, k) * comb(n, k + 1) // n for k in range(n))
        assert row == classical, f"(NE)^{n}: {row} != Narayana {classical}"
    return f"{len(pairs)} pairs, narayana rows n<=6"


def criterion_06_lattice_and_extrema() -> str:
    for p in partition_pairs(9):
        assert lattice_check(build_tree_poset(p)).is_lattice, f"{p.label()} not a lattice"
    two_max = build_tree_poset(IndexPair((1, 2, 4), (0, 3), "B", 4))
    assert len(two_max.maxima()) == 2 and len(two_max.minima()) == 1
    two_min = build_tree_poset(IndexPair((0, 3, 4), (1, 2), "B", 4))
    assert len(two_min.minima()) == 2 and len(two_min.maxima()) == 1
    return "mode A lattices (size<=9); cyclic two-maxima and two-minima posets"


def _desk_scale_b() -> list[IndexPair]:
    subsets = [s for k in range(1, 5) for s in itertools.combinations(range(4), k)]
    out = [IndexPair(I, J, "B", 3) for I in subsets for J in subsets]
    out.append(IndexPair(tuple(range(5)), tuple(range(5)), "B"))
    out.append(IndexPair((0, 3, 4), (1, 2), "B", 4))
    out.append(IndexPair((1, 2, 4), (0, 3), "B", 4))
    return out


def criterion_07_triangulation_certificates() -> str:
    n_a = n_b = 0
    for p in partition_pairs(8):
        trees = enumerate_trees(p)
        rep = verify_triangulation(trees, p)
        assert rep.ok, f"{p.label()}: {rep}"
        assert len(staircase_trees(p)) == len(trees), f"staircase count at {p.label()}"
        assert verify_regular(trees, default_height(p)), f"regularity at {p.label()}"
        n_a += 1
    for p in _desk_scale_b():
        trees = enumerate_trees(p)
        rep = verify_triangulation(trees, p)
        assert rep.ok, f"{p.label()}: {rep}"
        assert verify_regular(trees, default_height(p)), f"regularity at {p.label()}"
        n_b += 1
    return f"{n_a} linear + {n_b} cyclic pairs certified"


def criterion_08_orientation() -> str:
    for p in partition_pairs(8):
        gc = build_geometric_complex(p)
        assert orientation_check(gc, build_tree_poset(p)), f"orientation at {p.label()}"
    cyc = IndexPair(WORKED_PAIR.I, WORKED_PAIR.J, "B", 8)
    gc = build_geometric_complex(cyc)
    poset = build_tree_poset(cyc)
    assert not orientation_check(gc, poset), "cyclic instance unexpectedly oriented"
    conflict = conflicting_cover_signs(gc, poset)
    assert conflict is not None, "no conflicting cover pair found"
    return f"covers decrease (size<=8); cyclic conflict {conflict}"


def _convexity_agrees(p: IndexPair) -> None:
    gc = build_geometric_complex(p)
    pred = support_convex_predicate(p)
    oracle = convexity_oracle_2d(gc)
    assert pred.convex == oracle.convex, (
        f"{p.label()}: predicate says {pred.convex}, "
        f"areas {oracle.cells_area2}/{oracle.hull_area2}"
    )


def criterion_09_support_convexity() -> str:
    t0 = perf_counter()
    n_a = 0
    for n_e in range(6):
        for word in set(itertools.permutations("NN" + "E" * n_e)):
            _convexity_agrees(pair_of_nu("".join(word)))
            n_a += 1
    gapped = [
        IndexPair((0, 2, 3), (1, 4, 9), "A"),
        IndexPair((0, 5, 7), (2, 6, 11), "A"),
        IndexPair((0, 1, 2, 9), (3, 4, 12), "A"),
    ]
    for p in gapped:
        _convexity_agrees(p)
        n_a += 1
    n_b = 0
    for n in range(2, 7):
        elems = range(n + 1)
        i_sets = [s for k in range(1, 6) for s in itertools.combinations(elems, k)]
        for J in itertools.combinations(elems, 3):
            for I in i_sets:
                _convexity_agrees(IndexPair(I, J, "B", n))
                n_b += 1
    return f"{n_a} linear + {n_b} cyclic pairs, {_time_guard(t0, 300.0)}"


def criterion_10_canopy_and_duality() -> str:
    for n in range(1, 6):
        ok, reports = canopy_fiber_report(n)
        assert ok, f"canopy fibers fail at n={n}"
    for p in partition_pairs(9):
        assert verify_reverse_duality(p), f"duality at {p.label()}"
    return "fibers are intervals (n<=5); reverse duality (size<=9)"


CRITERIA = [
    (1, "worked-example", criterion_01_worked_example),
    (2, "type-B-h-vector", criterion_02_type_b_h_vector),
    (3, "cyclic-counts", criterion_03_cyclic_counts),
    (4, "flip-cover-isomorphism", criterion_04_flip_cover_isomorphism),
    (5, "three-way-h", criterion_05_three_way_h),
    (6, "lattice-extrema", criterion_06_lattice_and_extrema),
    (7, "triangulation-certificates", criterion_07_triangulation_certificates),
    (8, "orientation", criterion_08_orientation),
    (9, "support-convexity", criterion_09_support_convexity),
    (10, "canopy-duality", criterion_10_canopy_and_duality),
]


def run_one(num: int, slug: str, fn) -> tuple[bool, str]:
    t0 = perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        ok = False
    dt = perf_counter() - t0
    status = "PASS" if ok else "FAIL"
    return ok, f"{status}  criterion {num:>2} {slug}: {detail} [{dt:.2f}s]"


def main() -> int:
    failures = 0
    for num, slug, fn in CRITERIA:
        ok, line = run_one(num, slug, fn)
        print(line, flush=True)
        failures += not ok
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} acceptance criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
