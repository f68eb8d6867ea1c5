"""Majorana (stellar) representation: each ray becomes two sphere points.

A spin-1 state with components (c0, c1, c2) maps to the roots of the
quadratic c0*t^2 - sqrt(2)*c1*t + c2; each root goes to the sphere by
inverse stereographic projection with t = 0 at the north pole and the
point at infinity (from degree drop) at the south pole.  The three pole
anchors (1,0,0) -> north/north, (0,1,0) -> north/south, (0,0,1) ->
south/south pin the convention.

This is the only module that uses floating point; degree decisions still
come from exact zero tests on the components.
"""

from __future__ import annotations

import cmath
import csv
import math

from .colorability import KSInstance
from .rays import Ray

CONVENTION = (
    "quadratic c0*t^2 - sqrt(2)*c1*t + c2; roots to sphere by inverse "
    "stereographic projection, t=0 -> north pole (0,0,1), infinity -> south pole"
)

_SOUTH = (0.0, 0.0, -1.0)


def _to_sphere(t: complex) -> tuple[float, float, float]:
    d = 1.0 + abs(t) ** 2
    return (2.0 * t.real / d, 2.0 * t.imag / d, (1.0 - abs(t) ** 2) / d)


def majorana_points(
    r: Ray,
) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
    """The unordered point pair, returned in lexicographic coordinate order."""
    c0, c1, c2 = r.canonical
    scale = max(abs(c.evaluate()) for c in r.canonical)
    a = c0.evaluate() / scale
    b = -math.sqrt(2.0) * c1.evaluate() / scale
    c = c2.evaluate() / scale
    if c0.is_zero():
        if c1.is_zero():
            points = [_SOUTH, _SOUTH]  # constant polynomial: both roots at infinity
        else:
            points = [_to_sphere(-c / b), _SOUTH]
    else:
        disc = cmath.sqrt(b * b - 4.0 * a * c)
        points = [_to_sphere((-b + disc) / (2.0 * a)),
                  _to_sphere((-b - disc) / (2.0 * a))]
    points.sort()
    return (points[0], points[1])


def export_majorana(inst: KSInstance, path: str) -> None:
    """CSV: one row per (ray, point): index, canonical ray, point 1/2, x, y, z."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# {CONVENTION}\n")
        writer = csv.writer(fh)
        writer.writerow(["ray_index", "ray", "point_index", "x", "y", "z"])
        for i, ray in enumerate(inst.graph.vertices):
            for k, point in enumerate(majorana_points(ray), start=1):
                writer.writerow(
                    [i, str(ray), k] + [f"{coord:.15g}" for coord in point]
                )
