"""Smoke tests for the python bindings; run directly or under ctest."""

import sys
from fractions import Fraction

import taxigeom as tg


def pt(a, b):
    return (Fraction(a), Fraction(b))


def test_metric():
    assert tg.distance("0,0", "3,1") == "4"
    assert tg.midpoint("0,0", "3,1") == "3/2,1/2"
    assert tg.ratio("2,6", "0,0", "2,2") == "2"
    assert tg.ratio("3,1", "0,0", "3,1") == "inf"
    assert tg.point(tg.midpoint("0,0", "3,1")) == pt("3/2", "1/2")


def test_circle():
    assert tg.circle("0,0", "1") == ["-1,0", "0,-1", "1,0", "0,1"]


def test_reference():
    assert tg.regions("0,1", "0,0", "3,1") == [1, 2, 4, 5]
    assert tg.guide_complements("0,0", "3,1") == ("2,2", "1,-1")
    assert tg.coordinate_complements("0,0", "3,1") == ("0,1", "3,0")
    assert tg.standard_position("1,2", "0,0") == ("0,0", "2,1")


def test_trapezoid():
    shape = tg.apollonian("0,0", "2,2", "2")
    assert shape["kind"] == "polygon"
    assert shape["vertices"] == [
        pt("2/3", "2"),
        pt("2", "2/3"),
        pt("6", "2"),
        pt("2", "6"),
    ]


def test_kite():
    shape = tg.apollonian("0,0", "4,0", "2")
    assert shape["kind"] == "polygon"
    assert shape["vertices"] == [
        pt("8/3", "0"),
        pt("4", "-4"),
        pt("8", "0"),
        pt("4", "4"),
    ]
    assert len(shape["quads"]) == 2


def test_bolt():
    shape = tg.apollonian("0,0", "3,1", "1")
    assert shape["kind"] == "bolt"
    assert shape["vertices"] == [pt("1", "1"), pt("2", "0")]
    assert shape["rays"] == [(pt("1", "1"), (0, 1)), (pt("2", "0"), (0, -1))]


def test_barbell():
    shape = tg.apollonian("0,0", "2,2", "1")
    assert shape["kind"] == "barbell"
    assert shape["vertices"] == [pt("0", "2"), pt("2", "0")]


def test_point_conventions():
    assert tg.apollonian("0,0", "3,1", "inf")["vertices"] == [pt("3", "1")]
    assert tg.apollonian("0,0", "3,1", "0")["vertices"] == [pt("0", "0")]


def test_affine():
    rows = tg.affine_pieces("0,0", "2,2", "1", "-2", "0")
    kinds = {row["region"]: row["kind"] for row in rows}
    assert kinds[5] == "segment"
    assert kinds[1] == "empty"
    nonempty = sorted(r["region"] for r in rows if r["kind"] != "empty")
    assert nonempty == [2, 3, 5, 6]


def test_verify():
    assert tg.verify("0,0", "3,1", "3/2") == 0
    assert tg.verify("0,0", "4,0", "2") == 0
    assert tg.verify("0,0", "3,1", "1") == 0


def test_svg():
    svg = tg.family_svg("0,0", "3,1", ["0", "1/2", "1", "2", "inf"], refs=True)
    assert svg.startswith("<svg")
    assert "</svg>" in svg


def test_errors():
    for call in (
        lambda: tg.ratio("1,1", "2,2", "2,2"),
        lambda: tg.construct("1,1", "1,1", "2"),
        lambda: tg.construct_filled("0,0", "3,1", "1"),
    ):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
