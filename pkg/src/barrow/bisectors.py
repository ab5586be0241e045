"""Apex angles at a point and the angle bisectors toward the triangle sides.

For a point M and a side, say BC, the quantity of interest is the length of
the internal bisector of the angle ∠BMC, measured from M to where it meets
line BC.  Two closed forms exist for it; both are evaluated on every call
and cross-checked, because they fail in different numerical regimes:

* the half-angle form  2 R_B R_C / (R_B + R_C) * cos(alpha/2)  loses
  relative accuracy when alpha approaches π (M close to the open segment);
* the radical form  sqrt(R_B R_C) / (R_B + R_C) * sqrt((R_B+R_C)^2 - |BC|^2)
  is evaluated through the algebraically equal, cancellation-free expression
  (R_B+R_C)^2 - |BC|^2 = 2 (B-M)·(C-M) + 2 R_B R_C
                       = 2 ((B-M)×(C-M))^2 / (R_B R_C - (B-M)·(C-M)),
  the second rewriting used when the dot product is negative.

When M lies exactly on line BC the angle degenerates and the limit value is
used: 0 on the closed segment [BC], the harmonic-mean scale
2 R_B R_C / (R_B + R_C) outside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CollinearInput, VertexCoincidence
from .geom import Point2, Triangle, barycentric, dist

#: M counts as coinciding with a vertex below this fraction of the local scale.
COINCIDENCE_FACTOR = 1e-12


@dataclass(frozen=True)
class ApexAngles:
    """Angles subtended at M by the three sides: ∠BMC, ∠CMA, ∠AMB."""

    alpha_M: float
    beta_M: float
    gamma_M: float


@dataclass(frozen=True)
class BisectorTriple:
    """Unsigned bisector lengths toward sides BC, CA, AB."""

    l_a: float
    l_b: float
    l_c: float


@dataclass(frozen=True)
class SignedBisectorTriple:
    """Bisector lengths signed by the side of the sideline M lies on.

    Positive when M and the opposite vertex share a side of the line,
    negative across it, non-negative (the limit value) on the line itself.
    """

    lp_a: float
    lp_b: float
    lp_c: float


def _check_not_vertex(T: Triangle, M: Point2) -> None:
    threshold = COINCIDENCE_FACTOR * T.diameter
    for name, V in (("A", T.A), ("B", T.B), ("C", T.C)):
        if dist(M, V) <= threshold:
            raise VertexCoincidence(f"point {M} coincides with vertex {name}", vertex=name)


def _ray_angle(M: Point2, P: Point2, Q: Point2) -> float:
    """Angle ∠PMQ in [0, π], stable near both 0 and π."""
    ux, uy = P.x - M.x, P.y - M.y
    vx, vy = Q.x - M.x, Q.y - M.y
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    return math.atan2(abs(cross), dot)


def apex_angles(T: Triangle, M: Point2) -> ApexAngles:
    """The three angles at which M sees the sides BC, CA, AB.

    Collinear configurations are fine: an angle is exactly π when M lies
    strictly between the two vertices and 0 when it lies outside on their
    line.  Only (near-)coincidence with a vertex is rejected.
    """
    _check_not_vertex(T, M)
    return ApexAngles(
        alpha_M=_ray_angle(M, T.B, T.C),
        beta_M=_ray_angle(M, T.C, T.A),
        gamma_M=_ray_angle(M, T.A, T.B),
    )


def bisector_length(M: Point2, B: Point2, C: Point2) -> float:
    """Length of the internal bisector of ∠BMC from M to line BC.

    Returns the limit value when M is exactly on line BC: 0 on [BC], the
    harmonic-mean scale 2 R_B R_C/(R_B + R_C) outside the segment.
    """
    R_B = dist(M, B)
    R_C = dist(M, C)
    side = dist(B, C)
    threshold = COINCIDENCE_FACTOR * side
    if R_B <= threshold:
        raise VertexCoincidence(f"point {M} coincides with {B}", vertex="B")
    if R_C <= threshold:
        raise VertexCoincidence(f"point {M} coincides with {C}", vertex="C")

    ux, uy = B.x - M.x, B.y - M.y
    vx, vy = C.x - M.x, C.y - M.y
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    scale = 2.0 * R_B * R_C / (R_B + R_C)

    if cross == 0.0:
        # M exactly on line BC; dot < 0 iff M strictly inside the segment.
        return 0.0 if dot < 0.0 else scale

    alpha = math.atan2(abs(cross), dot)
    half_angle_form = scale * math.cos(0.5 * alpha)

    # (R_B+R_C)^2 - side^2 without the cancellation of the literal parenthesis.
    if dot >= 0.0:
        excess = 2.0 * (dot + R_B * R_C)
    else:
        excess = 2.0 * cross * cross / (R_B * R_C - dot)
    radical_form = math.sqrt(R_B * R_C) * math.sqrt(excess) / (R_B + R_C)

    # Cross-check the independent forms on every call.  The absolute floor
    # covers the half-angle form's error (~eps * scale) next to the segment,
    # where both values are genuinely tiny.
    if abs(half_angle_form - radical_form) > 1e-10 * max(half_angle_form, radical_form) + 1e-13 * scale:
        raise AssertionError(
            f"bisector closed forms disagree: {half_angle_form!r} vs {radical_form!r} "
            f"for M={M}, B={B}, C={C}"
        )
    return half_angle_form


def bisector_foot(M: Point2, B: Point2, C: Point2) -> Point2:
    """Point where the bisector of ∠BMC meets line BC.

    The bisector divides the opposite side in the ratio of the adjacent
    sides, |BA′| : |A′C| = |MB| : |MC|, giving the foot directly without
    constructing the bisector ray.  Undefined when M is on line BC.
    """
    R_B = dist(M, B)
    R_C = dist(M, C)
    side = dist(B, C)
    threshold = COINCIDENCE_FACTOR * side
    if R_B <= threshold:
        raise VertexCoincidence(f"point {M} coincides with {B}", vertex="B")
    if R_C <= threshold:
        raise VertexCoincidence(f"point {M} coincides with {C}", vertex="C")
    cross = (B.x - M.x) * (C.y - M.y) - (B.y - M.y) * (C.x - M.x)
    if cross == 0.0:
        raise CollinearInput(f"point {M} lies on the line through {B} and {C}")
    s = R_B + R_C
    return Point2((R_C * B.x + R_B * C.x) / s, (R_C * B.y + R_B * C.y) / s)


def bisector_lengths(T: Triangle, M: Point2) -> BisectorTriple:
    """Unsigned bisector lengths from M toward all three sides."""
    _check_not_vertex(T, M)
    return BisectorTriple(
        l_a=bisector_length(M, T.B, T.C),
        l_b=bisector_length(M, T.C, T.A),
        l_c=bisector_length(M, T.A, T.B),
    )


def signed_bisectors(T: Triangle, M: Point2) -> SignedBisectorTriple:
    """Bisector lengths carrying the side-of-sideline sign.

    The sign is read off the matching barycentric coordinate, which is
    computed from the same cross product as the collinearity branch inside
    ``bisector_length``, so the three cases (positive, negative, exactly on
    the line) are mutually consistent by construction.
    """
    _check_not_vertex(T, M)
    bc = barycentric(T, M)
    l_a = bisector_length(M, T.B, T.C)
    l_b = bisector_length(M, T.C, T.A)
    l_c = bisector_length(M, T.A, T.B)
    return SignedBisectorTriple(
        lp_a=-l_a if bc.u < 0.0 else l_a,
        lp_b=-l_b if bc.v < 0.0 else l_b,
        lp_c=-l_c if bc.w < 0.0 else l_c,
    )
