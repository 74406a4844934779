"""Serialization of complexes and posets: JSON payloads and SVG pictures."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Optional

from .complexes import TamariComplex, cyclic_h_formula, h_vector_shelling, narayana_vector
from .core import IndexPair, nu_of_pair
from .heights import INF
from .posets import FinitePoset
from .tropical import GeomComplex, apexes, _hull


def _ext_str(v) -> str:
    return "inf" if v is INF else str(v)


def _pair_obj(p: IndexPair) -> dict:
    return {"I": list(p.I), "J": list(p.J), "mode": p.mode, "n": p.n}


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def hvector_payload(p: IndexPair) -> dict:
    comp = TamariComplex.build(p)
    payload = {
        "schema": "nutamari/1",
        "pair": _pair_obj(p),
        "ground": [list(a) for a in comp.ground],
        "facets": [[list(a) for a in t] for t in comp.facets],
        "facet_count": len(comp.facets),
        "f_vector": list(comp.f_vector()),
        "h_vector": list(comp.h_vector()),
    }
    if p.mode == "A":
        nu = nu_of_pair(p)
        payload["nu"] = nu
        payload["h_vector_shelling"] = list(h_vector_shelling(p))
        payload["narayana"] = list(narayana_vector(nu))
    else:
        payload["h_formula"] = list(cyclic_h_formula(p))
    return payload


def complex_payload(gc: GeomComplex) -> dict:
    p = gc.pair
    payload = {
        "schema": "nutamari/1",
        "pair": _pair_obj(p),
        "heights": gc.height.to_json_entries(),
        "apexes": [
            {
                "i": a.i,
                "coords": [_ext_str(c) for c in a.coords],
                "normalized": [_ext_str(c) for c in a.normalized],
            }
            for a in apexes(gc.height)
        ],
        "trees": [[list(a) for a in t] for t in gc.trees],
        "vertices": [[str(c) for c in pt] for pt in gc.coords],
        "cells": [
            {
                "forest": [list(a) for a in c.forest],
                "dim": c.dim,
                "trees": list(c.tree_ids),
            }
            for c in gc.cells
        ],
    }
    if p.mode == "A":
        payload["nu"] = nu_of_pair(p)
    return payload


# ---------------------------------------------------------------------------
# SVG


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _planar_points(gc: GeomComplex) -> tuple[list[tuple[float, float]], bool]:
    """Planar display coordinates for the tree vertices.

    Ambient dimension <= 2 is kept as-is (a 1-d complex sits on the x-axis).
    Higher-dimensional coordinates are accepted when the vertex set is
    affinely of rank <= 2 -- the rank test runs in exact arithmetic, then the
    points are mapped isometrically onto the plane they span.  Returns the
    points and whether they are the raw ambient coordinates."""
    if gc.ambient_dim <= 2:

        def lift(pt) -> tuple[float, float]:
            if len(pt) == 1:
                return float(pt[0]), 0.0
            return float(pt[0]), float(pt[1])

        return [lift(c) for c in gc.coords], True
    base = gc.coords[0]
    diffs = [tuple(c - b for c, b in zip(pt, base)) for pt in gc.coords]
    basis: list[tuple[Fraction, ...]] = []
    for w in diffs:
        r = w
        for u in basis:
            coef = _dot(r, u) / _dot(u, u)
            r = tuple(x - coef * y for x, y in zip(r, u))
        if any(r):
            if len(basis) == 2:
                raise ValueError(
                    "realization spans more than a plane; use --format json"
                )
            basis.append(r)
    norms = [math.sqrt(float(_dot(u, u))) for u in basis]
    pts = []
    for w in diffs:
        q = [float(_dot(w, u)) / n for u, n in zip(basis, norms)]
        q += [0.0] * (2 - len(q))
        pts.append((q[0], q[1]))
    return pts, False


def complex_to_svg(
    gc: GeomComplex,
    poset: Optional[FinitePoset] = None,
    show_apexes: bool = True,
    width: int = 720,
) -> str:
    """Draw a realization whose vertices span at most a plane: filled cells,
    labeled tree vertices, finite apex markers, flip arrows when a poset is
    given.  Apexes are only drawn when the ambient space itself is planar."""
    pts, embedded = _planar_points(gc)
    apex_pts = []
    if show_apexes and embedded:
        for a in apexes(gc.height):
            flat = a.normalized[:-1]
            if any(c is INF for c in flat):
                continue
            if len(flat) == 1:
                apex_pts.append((a.i, (float(flat[0]), 0.0)))
            else:
                apex_pts.append((a.i, (float(flat[0]), float(flat[1]))))
    xs = [q[0] for q in pts] + [q[1][0] for q in apex_pts]
    ys = [q[1] for q in pts] + [q[1][1] for q in apex_pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    margin = 48.0
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (width - 2 * margin) / span
    height = int(2 * margin + (y1 - y0) * scale)

    def place(q: tuple[float, float]) -> tuple[float, float]:
        return margin + (q[0] - x0) * scale, height - margin - (q[1] - y0) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<defs><marker id='arrow' viewBox='0 0 10 10' refX='9' refY='5' "
        "markerWidth='6' markerHeight='6' orient='auto-start-reverse'>"
        "<path d='M 0 0 L 10 5 L 0 10 z' fill='#a03232'/></marker></defs>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for c in gc.cells_of_dim(2):
        ordered = _hull([pts[k] for k in c.tree_ids])
        coords = " ".join(
            f"{_fmt(u)},{_fmt(v)}" for u, v in (place(q) for q in ordered)
        )
        out.append(f'<polygon points="{coords}" fill="#cfe3f7" stroke="none"/>')
    for c in gc.cells_of_dim(1):
        (ax, ay), (bx, by) = (place(pts[k]) for k in c.tree_ids[:2])
        out.append(
            f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
            'stroke="#445" stroke-width="2"/>'
        )
    if poset is not None:
        for a, b in poset.cover_pairs():
            (ax, ay) = place(pts[a])
            (bx, by) = place(pts[b])
            sx, sy = ax + 0.22 * (bx - ax), ay + 0.22 * (by - ay)
            tx, ty = ax + 0.78 * (bx - ax), ay + 0.78 * (by - ay)
            out.append(
                f'<line x1="{_fmt(sx)}" y1="{_fmt(sy)}" x2="{_fmt(tx)}" y2="{_fmt(ty)}" '
                'stroke="#a03232" stroke-width="1.4" marker-end="url(#arrow)"/>'
            )
    for k, q in enumerate(pts):
        u, v = place(q)
        out.append(f'<circle cx="{_fmt(u)}" cy="{_fmt(v)}" r="4" fill="#20426b"/>')
        out.append(
            f'<text x="{_fmt(u + 6)}" y="{_fmt(v - 6)}" font-size="11" '
            f'font-family="sans-serif" fill="#20426b">T{k}</text>'
        )
    for i, q in apex_pts:
        u, v = place(q)
        out.append(
            f'<path d="M {_fmt(u)} {_fmt(v - 6)} L {_fmt(u + 6)} {_fmt(v)} '
            f'L {_fmt(u)} {_fmt(v + 6)} L {_fmt(u - 6)} {_fmt(v)} Z" '
            'fill="#7a3f9d" opacity="0.85"/>'
        )
        out.append(
            f'<text x="{_fmt(u + 7)}" y="{_fmt(v + 4)}" font-size="11" '
            f'font-family="sans-serif" fill="#7a3f9d">v{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
