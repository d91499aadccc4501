import json

import pytest

import lattice_pick as lp

PENTAGON = [(0, 0), (4, 0), (4, 3), (2, 1), (0, 3)]
SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_pick_counts():
    report = lp.verify_pick(lp.Polygon(PENTAGON))
    assert (report["interior"], report["boundary"], report["area2"]) == (2, 14, 16)
    assert report["residual"] == 0
    assert lp.verify_pick(lp.Polygon(PENTAGON), scanline=True) == report
    assert lp.pick_area2(5, 9) == 17


def test_polygon_validation():
    poly = lp.Polygon(SQUARE)
    assert len(poly) == 4
    assert poly.vertices == SQUARE
    assert poly.orientation == "counterclockwise"
    with pytest.raises(lp.PolygonError):
        lp.Polygon([(0, 0), (2, 2), (2, 0), (0, 2)])
    assert not lp.is_simple([(0, 0), (2, 2), (2, 0), (0, 2)])


def test_big_integers_round_trip():
    big = 2**100
    poly = lp.Polygon([(big, big), (big + 1, big), (big, big + 1)])
    assert poly.vertices[0] == (big, big)
    assert lp.area2(poly) == 1
    assert lp.is_elementary(poly)


def test_geometry_queries():
    pent = lp.Polygon(PENTAGON)
    assert lp.classify_point((1, 1), pent) == "inside"
    assert lp.classify_point((2, 1), pent) == "boundary"
    assert lp.convex_hull(PENTAGON) == [(0, 0), (4, 0), (4, 3), (0, 3)]
    assert not lp.is_convex(pent)
    assert lp.extreme_point_count(pent) == 4


def test_pocket():
    pocket = lp.find_pocket(lp.Polygon(PENTAGON))
    assert pocket["pocket_path"] == [(4, 3), (2, 1), (0, 3)]
    assert pocket["rotation"] == 2


def test_decompose_and_check():
    text = lp.decompose(lp.Polygon(SQUARE))
    assert json.loads(text)["format_version"] == "1"
    report = lp.check_certificate(text)
    assert report["valid"]
    assert report["root_counts"] == {"interior": 1, "boundary": 8, "area2": 8}
    assert report["residual"] == 0


def test_tampered_certificate():
    doc = json.loads(lp.decompose(lp.Polygon(PENTAGON)))
    doc["tree"]["children"][1]["polygon"][0][0] = "5"
    report = lp.check_certificate(json.dumps(doc))
    assert not report["valid"]
    assert report["violations"]
    with pytest.raises(lp.MalformedCertificate):
        lp.check_certificate("{")


def test_generator_is_deterministic():
    a = lp.generate_polygon(12, 50, 7)
    b = lp.generate_polygon(12, 50, 7)
    assert a.vertices == b.vertices
    assert lp.verify_pick(a)["residual"] == 0
    with pytest.raises(lp.GenerationExhausted):
        lp.generate_polygon(3, 0, 1, max_retries=10)


def test_svg():
    svg = lp.render_svg(lp.Polygon(PENTAGON), show_pockets=True)
    assert svg.startswith("<svg")
    assert "orange" in svg
