"""A per-pair verification bundle: everything that must hold by theorem
is PASS/FAIL; instance-dependent properties (lattice, orientability,
shellability of the cyclic complex) are reported as INFO findings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import (
    TamariComplex,
    check_shelling,
    cyclic_h_formula,
    h_vector_shelling,
    narayana_vector,
    verify_triangulation,
)
from .core import IndexPair, nu_of_pair
from .heights import (
    HeightFunction,
    default_height,
    first_height_violation,
    verify_regular,
)
from .posets import (
    build_tree_poset,
    lattice_check,
    linear_extension,
    verify_flip_path_iso,
    verify_reverse_duality,
)
from .tropical import (
    build_geometric_complex,
    cell_products_report,
    conflicting_cover_signs,
    convexity_oracle_2d,
    orientation_check,
    support_convex_predicate,
    tightness_report,
)
from .trees import enumerate_trees


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS | FAIL | INFO
    detail: str


def _trim(h) -> tuple[int, ...]:
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def run_checks(p: IndexPair, h: Optional[HeightFunction] = None) -> list[CheckResult]:
    results: list[CheckResult] = []

    def add(name: str, ok_or_status, detail: str = "") -> None:
        if isinstance(ok_or_status, str):
            results.append(CheckResult(name, ok_or_status, detail))
        else:
            results.append(CheckResult(name, "PASS" if ok_or_status else "FAIL", detail))

    trees = enumerate_trees(p)
    rep = verify_triangulation(trees, p)
    add(
        "triangulation",
        rep.ok,
        f"{rep.actual} trees, oracle {rep.expected}"
        + ("" if rep.ok else f", first_bad={rep.first_bad}"),
    )

    if h is None:
        h = default_height(p)
    violation = first_height_violation(h)
    height_ok = violation is None
    add(
        "height-valid",
        height_ok,
        "exchange inequalities" if height_ok else f"exchange fails at {violation}",
    )
    gc = None
    if height_ok:
        add("regularity", verify_regular(trees, h), "edge exchanges strict")
        gc = build_geometric_complex(p, h)
        tight = tightness_report(gc)
        add("tightness", tight is None, tight or "H-description matches vertices")
    else:
        add("regularity", "INFO", "skipped: height not valid")
        add("tightness", "INFO", "skipped: height not valid")

    comp = TamariComplex.build(p)
    hv = _trim(comp.h_vector())
    if p.mode == "A":
        hs = _trim(h_vector_shelling(p))
        nar = _trim(narayana_vector(nu_of_pair(p)))
        add(
            "h-agreement",
            hv == hs == nar,
            f"transform={hv} shelling={hs} narayana={nar}",
        )
    else:
        hf = _trim(cyclic_h_formula(p))
        add("h-agreement", hv == hf, f"transform={hv} formula={hf}")

    poset = build_tree_poset(p)

    if p.mode == "A":
        add("flip-path-iso", verify_flip_path_iso(p), "rho respects covers")
        add("reverse-duality", verify_reverse_duality(p), "mirror anti-isomorphism")

    lat = lattice_check(poset)
    if p.mode == "A":
        add(
            "lattice",
            lat.is_lattice,
            "meets and joins exist" if lat.is_lattice else str(lat.failure),
        )
    else:
        if lat.is_lattice:
            add("lattice", "INFO", "this cyclic poset is a lattice")
        else:
            kind, x, y, bounds = lat.failure
            add(
                "lattice",
                "INFO",
                f"not a lattice: {kind}(T{x},T{y}) has extremal candidates "
                f"{['T%d' % b for b in bounds]}",
            )

    if p.mode == "B":
        order = linear_extension(poset)
        ok, where = check_shelling([poset.elements[k] for k in order])
        if ok:
            add("shelling-extension", "INFO", "flip-order extension shells")
        else:
            add(
                "shelling-extension",
                "INFO",
                f"flip-order extension fails shelling when facet {where + 1} "
                f"of {len(order)} is added",
            )

    if gc is None:
        return results

    if p.mode == "A":
        add("orientation", orientation_check(gc, poset), "covers move coordinates down")
    else:
        if orientation_check(gc, poset):
            add("orientation", "INFO", "covers happen to orient coordinatewise")
        else:
            conf = conflicting_cover_signs(gc, poset)
            add(
                "orientation",
                "INFO",
                f"no coordinatewise orientation: conflicting covers {conf}",
            )

    sup = support_convex_predicate(p)
    if gc.ambient_dim == 2:
        oracle = convexity_oracle_2d(gc)
        add(
            "support-convexity",
            sup.convex == oracle.convex,
            f"predicate={'convex' if sup.convex else 'non-convex'} dim={sup.dim}, "
            f"areas {oracle.cells_area2}/{oracle.hull_area2}",
        )
    else:
        add(
            "support-convexity",
            "INFO",
            f"predicate={'convex' if sup.convex else 'non-convex'} dim={sup.dim}",
        )

    prods = cell_products_report(gc)
    add(
        "cell-products",
        all(r.verified for r in prods),
        f"{len(prods)} cells decomposed",
    )
    return results


def has_failure(results) -> bool:
    return any(r.status == "FAIL" for r in results)


def _check_row(task: tuple[IndexPair, Optional[dict]]) -> tuple[str, list[CheckResult]]:
    p, entries = task
    h = HeightFunction.from_json_entries(p, entries) if entries else None
    return p.label() + f" ({p.mode})", run_checks(p, h)
