import json
import math

import pytest

from nutamari.core import IndexPair, pair_of_nu, parse_nu
from nutamari.render import (
    complex_payload,
    complex_to_svg,
    hvector_payload,
    to_json,
    _planar_points,
)
from nutamari.tropical import build_geometric_complex

WORKED = IndexPair((0, 1, 3, 4, 6, 7), (2, 5, 8), "A")


def test_planar_points_keep_2d_coordinates():
    gc = build_geometric_complex(WORKED)
    pts, embedded = _planar_points(gc)
    assert embedded
    assert set(pts) == {(float(a), float(b)) for a, b in gc.coords}


def test_planar_projection_is_isometric():
    # (NE)^3 lives in ambient dimension 3 but spans a plane; the projection
    # must preserve all pairwise distances
    gc = build_geometric_complex(pair_of_nu(parse_nu("(NE)^3")))
    assert gc.ambient_dim == 3
    pts, embedded = _planar_points(gc)
    assert not embedded
    for s in range(len(pts)):
        for t in range(len(pts)):
            exact = math.sqrt(
                float(sum((a - b) ** 2 for a, b in zip(gc.coords[s], gc.coords[t])))
            )
            assert abs(exact - math.dist(pts[s], pts[t])) < 1e-9


def test_planar_projection_rejects_rank_three():
    gc = build_geometric_complex(pair_of_nu(parse_nu("(NE)^4")))
    with pytest.raises(ValueError):
        complex_to_svg(gc)


def test_svg_structure_for_worked_pair():
    gc = build_geometric_complex(WORKED)
    svg = complex_to_svg(gc)
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 7
    assert svg.count("<polygon") == 2
    # finite apexes v0, v1 appear; the ones at infinity are skipped
    assert ">v0<" in svg and ">v1<" in svg
    assert ">v3<" not in svg
    no_apex = complex_to_svg(gc, show_apexes=False)
    assert ">v0<" not in no_apex


def test_projected_svg_hides_apexes():
    gc = build_geometric_complex(pair_of_nu(parse_nu("(NE)^3")))
    svg = complex_to_svg(gc)
    assert ">v0<" not in svg
    assert svg.count("<polygon") == 1


def test_segment_complex_renders_on_axis():
    # a 1-dimensional ambient space lifts onto the x-axis
    gc = build_geometric_complex(pair_of_nu("EN"))
    assert gc.ambient_dim == 1
    svg = complex_to_svg(gc)
    assert svg.count("<circle") == len(gc.trees)


def test_json_payload_round_trips_and_sorts_keys():
    gc = build_geometric_complex(WORKED)
    text = to_json(complex_payload(gc))
    obj = json.loads(text)
    assert obj["schema"] == "nutamari/1"
    assert len(obj["vertices"]) == 7
    assert obj["nu"] == "ENEENEE"
    assert text == to_json(json.loads(text))
    # exact rationals survive as strings
    assert all(isinstance(c, str) for v in obj["vertices"] for c in v)
    assert obj["heights"]["0,2"] == "-4"


def test_hvector_payload_contents():
    obj = hvector_payload(WORKED)
    assert obj["facet_count"] == 7
    assert obj["f_vector"][0] == 1
    assert obj["h_vector"][:3] == [1, 4, 2]
    assert obj["narayana"] == [1, 4, 2]
    cyc = hvector_payload(IndexPair((0, 1, 2), (0, 1, 2), "B", 2))
    assert cyc["h_formula"][:3] == [1, 4, 1]
    assert "narayana" not in cyc
