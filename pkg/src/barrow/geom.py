"""Plane primitives: points, triangles, barycentric coordinates and distances.

Everything here is pure 64-bit float geometry.  Signs of barycentric
coordinates carry the semantic payload for the rest of the library, so they
are always derived from one source of truth: the signed area of a vertex
triple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTriangle

#: A triangle is rejected when |signed area| <= this factor times diameter^2.
DEGENERACY_FACTOR = 1e-12


@dataclass(frozen=True)
class Point2:
    """A point of the Euclidean plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


def dist(p: Point2, q: Point2) -> float:
    """Euclidean distance |pq|."""
    return math.hypot(p.x - q.x, p.y - q.y)


def signed_area(p: Point2, q: Point2, r: Point2) -> float:
    """Signed area of the triangle (p, q, r).

    Positive iff the vertices run counterclockwise, exactly 0.0 for inputs
    whose cross product evaluates to zero in floats.
    """
    return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)) / 2.0


class Triangle:
    """A non-degenerate triangle with cached side lengths and orientation.

    Attributes:
        A, B, C: the vertices.
        a, b, c: side lengths |BC|, |CA|, |AB|.
        area: signed area of (A, B, C).
        orientation: "counterclockwise" or "clockwise".
        diameter: longest side, the natural length scale of the triangle.
    """

    __slots__ = ("A", "B", "C", "a", "b", "c", "area", "orient_sign", "diameter")

    def __init__(self, A: Point2, B: Point2, C: Point2):
        self.A = A
        self.B = B
        self.C = C
        self.a = dist(B, C)
        self.b = dist(C, A)
        self.c = dist(A, B)
        self.area = signed_area(A, B, C)
        self.diameter = max(self.a, self.b, self.c)
        if abs(self.area) <= DEGENERACY_FACTOR * self.diameter * self.diameter:
            raise DegenerateTriangle(
                f"triangle {A}, {B}, {C} is degenerate (|area|={abs(self.area):.3e})"
            )
        self.orient_sign = 1.0 if self.area > 0.0 else -1.0

    @property
    def orientation(self) -> str:
        return "counterclockwise" if self.orient_sign > 0.0 else "clockwise"

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return (self.A, self.B, self.C)

    @classmethod
    def from_coords(cls, ax, ay, bx, by, cx, cy) -> "Triangle":
        return cls(Point2(ax, ay), Point2(bx, by), Point2(cx, cy))

    def __repr__(self):
        return f"Triangle({self.A}, {self.B}, {self.C})"


@dataclass(frozen=True)
class BaryCoords:
    """Normalized affine barycentric coordinates (u + v + w = 1)."""

    u: float
    v: float
    w: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.u, self.v, self.w)


@dataclass(frozen=True)
class DistanceTriple:
    """Distances from a point to the vertices A, B, C."""

    R_A: float
    R_B: float
    R_C: float

    def sum(self) -> float:
        return self.R_A + self.R_B + self.R_C


@dataclass(frozen=True)
class SignedDistanceTriple:
    """Signed distances to the sidelines BC, CA, AB.

    ``d_a`` is positive when the point lies on the same side of line BC as
    vertex A, negative on the far side, exactly 0.0 on the line.
    """

    d_a: float
    d_b: float
    d_c: float


def barycentric(T: Triangle, M: Point2) -> BaryCoords:
    """Normalized barycentric coordinates of M with respect to T.

    Computed as signed-area ratios of vertex triples anchored at M, so each
    coordinate's sign, and in particular its exact zero, comes from the same
    float cross product every other M-anchored predicate evaluates (the sign
    convention of the region classifier and of every signed quantity
    downstream).
    """
    u = signed_area(M, T.B, T.C) / T.area
    v = signed_area(M, T.C, T.A) / T.area
    w = signed_area(M, T.A, T.B) / T.area
    return BaryCoords(u, v, w)


def vertex_distances(T: Triangle, M: Point2) -> DistanceTriple:
    """Euclidean distances from M to the three vertices."""
    return DistanceTriple(dist(M, T.A), dist(M, T.B), dist(M, T.C))


def signed_distances(T: Triangle, M: Point2) -> SignedDistanceTriple:
    """Signed distances from M to the three sidelines.

    |d_x| is the ordinary point-to-line distance; the sign matches the sign
    of the barycentric coordinate exactly (both derive from the same signed
    area, up to the positive factor 2 / (side * |area's sign|)).
    """
    s = T.orient_sign
    d_a = s * 2.0 * signed_area(M, T.B, T.C) / T.a
    d_b = s * 2.0 * signed_area(M, T.C, T.A) / T.b
    d_c = s * 2.0 * signed_area(M, T.A, T.B) / T.c
    return SignedDistanceTriple(d_a, d_b, d_c)
