"""Exact taxicab-plane geometry.

Thin convenience layer over the compiled ``_core`` module. Rational values
cross the boundary as strings and come back as :class:`fractions.Fraction`
wherever that is the natural type.
"""

import json
from fractions import Fraction

from taxigeom._core import (  # noqa: F401
    affine,
    circle,
    construct,
    construct_filled,
    coordinate_complements,
    distance,
    family_svg,
    guide_complements,
    midpoint,
    ratio,
    regions,
    standard_position,
    verify,
)

__all__ = [
    "affine",
    "affine_pieces",
    "apollonian",
    "circle",
    "construct",
    "construct_filled",
    "coordinate_complements",
    "distance",
    "family_svg",
    "frac",
    "guide_complements",
    "midpoint",
    "point",
    "ratio",
    "regions",
    "standard_position",
    "verify",
]


def frac(text):
    """Fraction from the kernel's string syntax; None for 'inf'."""
    if text == "inf":
        return None
    return Fraction(text)


def point(text):
    """(Fraction, Fraction) from an "x1,x2" string."""
    a, b = text.split(",")
    return (Fraction(a), Fraction(b))


def _pair(value):
    num, den = value
    return Fraction(int(num), int(den))


def _point_pair(value):
    return tuple(_pair(c) for c in value)


def apollonian(p, q, k):
    """A(p,q;k) as a dict with Fraction-valued geometry.

    Keys: kind ('point' | 'polygon' | 'bolt' | 'barbell'), vertices, and for
    bolts the two rays as (origin, direction) pairs.
    """
    doc = json.loads(construct(p, q, k))
    out = {"kind": doc["kind"], "vertices": [_point_pair(v) for v in doc["vertices"]]}
    if "rays" in doc:
        out["rays"] = [
            (_point_pair(r["origin"]), tuple(r["dir"])) for r in doc["rays"]
        ]
    if "quads" in doc:
        out["quads"] = [[_point_pair(v) for v in quad] for quad in doc["quads"]]
    return out


def affine_pieces(p, q, alpha, beta, gamma):
    """Per-region traces of the affine set, as parsed dicts."""
    rows = json.loads(affine(p, q, alpha, beta, gamma))
    for row in rows:
        for key in ("a", "b", "origin"):
            if key in row:
                row[key] = _point_pair(row[key])
    return rows
