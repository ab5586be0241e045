"""Slack evaluators for the distance/bisector inequalities.

Every evaluator returns an :class:`InequalityReport` carrying the left- and
right-hand sides, the slack ``lhs - rhs`` (non-negative for all valid inputs,
up to floating-point tolerance; that non-negativity is the property the rest
of the repository tests), and a per-side breakdown of the right-hand side.

The central evaluator is :func:`evaluate`, which dispatches on the region of
the query point: the weighted bisector bound in the interior, its
signed-bisector extension in the strip and wedge regions, and the reduced
two-distance bound when the point sits on a vertex.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .bisectors import bisector_length, bisector_lengths, signed_bisectors
from .errors import DomainError, OutsideInterior, VertexCoincidence
from .geom import DistanceTriple, Point2, Triangle, signed_distances, vertex_distances
from .regions import DEFAULT_EPS, Region, classify

#: |slack| below this fraction of (R_A+R_B+R_C) is reported as an equality case.
DEFAULT_TOL_FACTOR = 1e-9

#: Vertex proximity below this fraction of the diameter routes to the
#: two-distance vertex bound (the interior weights diverge as an R -> 0).
VERTEX_ROUTE_FACTOR = 1e-12


class InequalityId(enum.Enum):
    """Stable identifiers of the inequalities this library evaluates."""

    BARROW1 = "Barrow1"
    ERDOS_MORDELL2 = "ErdosMordell2"
    DERGIADES3 = "Dergiades3"
    LU_WEIGHTED13 = "LuWeighted13"
    SIGNED_BARROW30 = "SignedBarrow30"
    VERTEX_A14 = "VertexA14"
    VERTEX_B15 = "VertexB15"
    VERTEX_C16 = "VertexC16"


#: Inequalities defined only pointwise at a vertex (no 2-D domain to search).
VERTEX_IDS = frozenset({InequalityId.VERTEX_A14, InequalityId.VERTEX_B15, InequalityId.VERTEX_C16})

#: Inequalities restricted to the open interior.
INTERIOR_IDS = frozenset(
    {InequalityId.BARROW1, InequalityId.ERDOS_MORDELL2, InequalityId.LU_WEIGHTED13}
)


@dataclass(frozen=True)
class WeightTriple:
    """Per-side weights of the form t + 1/t, hence each >= 2."""

    w_a: float
    w_b: float
    w_c: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w_a, self.w_b, self.w_c)


@dataclass(frozen=True)
class Term:
    """One right-hand-side term: weight times a bisector or distance value."""

    side: str
    weight: float
    value: float
    contribution: float

    def to_json_dict(self) -> dict:
        return {
            "side": self.side,
            "weight": self.weight,
            "value": self.value,
            "contribution": self.contribution,
        }


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of evaluating one inequality at one point."""

    inequality: InequalityId
    region: Region
    lhs: float
    rhs: float
    slack: float
    tight: bool
    terms: tuple[Term, ...]

    def to_json_dict(self) -> dict:
        return {
            "inequality": self.inequality.value,
            "region": self.region.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tight": self.tight,
            "terms": [t.to_json_dict() for t in self.terms],
        }


def _build_report(
    inequality: InequalityId,
    region: Region,
    lhs: float,
    weights: tuple[float, ...],
    values: tuple[float, ...],
    sides: tuple[str, ...] = ("a", "b", "c"),
    tol_factor: float = DEFAULT_TOL_FACTOR,
    scale: float | None = None,
) -> InequalityReport:
    terms = tuple(Term(s, w, x, w * x) for s, w, x in zip(sides, weights, values))
    rhs = 0.0
    for t in terms:
        rhs += t.contribution
    slack = lhs - rhs
    if scale is None:
        scale = lhs
    return InequalityReport(
        inequality=inequality,
        region=region,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        tight=abs(slack) <= tol_factor * scale,
        terms=terms,
    )


def _validate_nonneg(**named: float) -> None:
    for name, value in named.items():
        if not math.isfinite(value) or value < 0.0:
            raise DomainError(f"{name} must be a finite non-negative real, got {value}")


def stmt_slack(kind: str, p: float, q: float, r: float, beta: float, gamma: float) -> float:
    """Slack of one of the three scalar inequalities behind the geometry.

    All three bound p + q + r from below by mixed terms 2·sqrt(..)·cos(..);
    they differ in how the third angle alpha is tied to beta and gamma and in
    the sign arrangement:

        S1: alpha = pi - beta - gamma, all three cosine terms added;
        S2: alpha = beta + gamma, the alpha term entering negated;
        S3: alpha = beta + gamma, the beta and gamma terms entering negated.

    Returns lhs - rhs, which is >= 0 for every valid input.
    """
    _validate_nonneg(p=p, q=q, r=r, beta=beta, gamma=gamma)
    if beta + gamma > math.pi + 1e-12:
        raise DomainError(f"beta + gamma = {beta + gamma} exceeds pi")
    sp, sq, sr = math.sqrt(p), math.sqrt(q), math.sqrt(r)
    if kind == "S1":
        alpha = math.pi - beta - gamma
        rhs = (
            2.0 * sq * sr * math.cos(alpha)
            + 2.0 * sp * sr * math.cos(beta)
            + 2.0 * sp * sq * math.cos(gamma)
        )
    elif kind == "S2":
        alpha = beta + gamma
        rhs = (
            -2.0 * sq * sr * math.cos(alpha)
            + 2.0 * sp * sr * math.cos(beta)
            + 2.0 * sp * sq * math.cos(gamma)
        )
    elif kind == "S3":
        alpha = beta + gamma
        rhs = (
            2.0 * sq * sr * math.cos(alpha)
            - 2.0 * sp * sr * math.cos(beta)
            - 2.0 * sp * sq * math.cos(gamma)
        )
    else:
        raise ValueError(f"unknown statement kind {kind!r}, expected 'S1', 'S2' or 'S3'")
    return (p + q + r) - rhs


class IdentityResiduals(NamedTuple):
    """Absolute gaps between direct expressions and their square forms."""

    lagrange: float
    case1: float
    case2: float
    discriminant: float


def identity_residuals(p: float, q: float, r: float, beta: float, alpha: float) -> IdentityResiduals:
    """Residuals of the four sum-of-squares rewritings used by the proofs.

    Each rewriting is an algebraic identity, so all residuals must vanish up
    to roundoff (<= 1e-12 * max(1, p+q+r)).  The two case forms apply on
    complementary half-ranges of alpha; the inapplicable one is reported as
    exactly 0.  Requires gamma = alpha - beta >= 0.
    """
    _validate_nonneg(p=p, q=q, r=r, beta=beta, alpha=alpha)
    if alpha > math.pi + 1e-12 or beta > math.pi + 1e-12:
        raise DomainError(f"angles must lie in [0, pi], got alpha={alpha}, beta={beta}")
    gamma = alpha - beta
    if gamma < 0.0:
        raise DomainError(f"alpha - beta = {gamma} must be non-negative")

    sp, sq, sr = math.sqrt(p), math.sqrt(q), math.sqrt(r)
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    cg, sg = math.cos(gamma), math.sin(gamma)

    direct_plus = p + q + r + 2.0 * sq * sr * ca - 2.0 * sp * sr * cb - 2.0 * sp * sq * cg
    square_plus = (sr - sp * cb + sq * ca) ** 2 + (sp * sb - sq * sa) ** 2
    lagrange = abs(direct_plus - square_plus)

    direct_minus = p + q + r - 2.0 * sq * sr * ca + 2.0 * sp * sr * cb + 2.0 * sp * sq * cg
    if ca <= 0.0:
        square_obtuse = (sr + sp * cb + sq * ca) ** 2 + (sp * sb + sq * sa) ** 2 - 4.0 * sq * sr * ca
        case1 = abs(direct_minus - square_obtuse)
        case2 = 0.0
    else:
        square_acute = (sr - sp * cb - sq * ca) ** 2 + (sp * sb + sq * sa) ** 2 + 4.0 * sp * sr * cb
        case1 = 0.0
        case2 = abs(direct_minus - square_acute)

    disc_direct = 4.0 * ((sr * cb + sq * cg) ** 2 - (q + r + 2.0 * sq * sr * ca))
    disc_closed = -4.0 * (sr * sb - sq * sg) ** 2
    discriminant = abs(disc_direct - disc_closed)

    return IdentityResiduals(lagrange, case1, case2, discriminant)


def lu_weights(R: DistanceTriple) -> WeightTriple:
    """Weights sqrt(R_y/R_x) + sqrt(R_x/R_y) pairing the two distances off each side.

    Diverges as any distance tends to 0, which is why callers route
    (near-)vertex points to the reduced vertex inequality instead.
    """
    for name, value in (("A", R.R_A), ("B", R.R_B), ("C", R.R_C)):
        if value <= 0.0:
            raise VertexCoincidence(
                f"distance to vertex {name} is {value}; weights are undefined there", vertex=name
            )
    return WeightTriple(
        w_a=math.sqrt(R.R_C / R.R_B) + math.sqrt(R.R_B / R.R_C),
        w_b=math.sqrt(R.R_C / R.R_A) + math.sqrt(R.R_A / R.R_C),
        w_c=math.sqrt(R.R_A / R.R_B) + math.sqrt(R.R_B / R.R_A),
    )


def dergiades_report(
    T: Triangle, M: Point2, eps: float = DEFAULT_EPS, tol_factor: float = DEFAULT_TOL_FACTOR
) -> InequalityReport:
    """Side-ratio weighted bound on the vertex distances, valid in the whole plane.

    The right-hand side pairs each signed sideline distance with the weight
    built from the two adjacent side lengths (c/b + b/c against side a, and
    cyclically).  Signed distances make the bound hold for every point, not
    just interior ones.
    """
    R = vertex_distances(T, M)
    d = signed_distances(T, M)
    weights = (T.c / T.b + T.b / T.c, T.c / T.a + T.a / T.c, T.a / T.b + T.b / T.a)
    return _build_report(
        InequalityId.DERGIADES3,
        classify(T, M, eps),
        lhs=R.sum(),
        weights=weights,
        values=(d.d_a, d.d_b, d.d_c),
        tol_factor=tol_factor,
    )


def classic_reports(
    T: Triangle, M: Point2, eps: float = DEFAULT_EPS, tol_factor: float = DEFAULT_TOL_FACTOR
) -> tuple[InequalityReport, InequalityReport]:
    """The two classical interior bounds: bisector-based and distance-based.

    Both bound R_A + R_B + R_C by twice a sum: of the angle-bisector lengths
    from M in the first report, of the sideline distances in the second.
    Restricted to the open interior, where both right-hand sides are sums of
    positive terms.
    """
    region = classify(T, M, eps)
    if region is not Region.LAMBDA0:
        raise OutsideInterior(f"point {M} classifies as {region.value}, not the interior")
    R = vertex_distances(T, M)
    ell = bisector_lengths(T, M)
    d = signed_distances(T, M)
    lhs = R.sum()
    two = (2.0, 2.0, 2.0)
    barrow = _build_report(
        InequalityId.BARROW1, region, lhs, two, (ell.l_a, ell.l_b, ell.l_c), tol_factor=tol_factor
    )
    erdos_mordell = _build_report(
        InequalityId.ERDOS_MORDELL2, region, lhs, two, (d.d_a, d.d_b, d.d_c), tol_factor=tol_factor
    )
    return barrow, erdos_mordell


_VERTEX_DISPATCH = {
    Region.VERTEX_A: InequalityId.VERTEX_A14,
    Region.VERTEX_B: InequalityId.VERTEX_B15,
    Region.VERTEX_C: InequalityId.VERTEX_C16,
}


def _vertex_report(
    T: Triangle, M: Point2, region: Region, tol_factor: float
) -> InequalityReport:
    """Two-distance bound at (or numerically on top of) a vertex.

    Only the bisector toward the side opposite the coincident vertex stays
    well-defined, so the report has a single right-hand-side term.
    """
    R = vertex_distances(T, M)
    if region is Region.VERTEX_A:
        lhs = R.R_B + R.R_C
        weight = math.sqrt(R.R_C / R.R_B) + math.sqrt(R.R_B / R.R_C)
        value = bisector_length(M, T.B, T.C)
        side = "a"
    elif region is Region.VERTEX_B:
        lhs = R.R_A + R.R_C
        weight = math.sqrt(R.R_C / R.R_A) + math.sqrt(R.R_A / R.R_C)
        value = bisector_length(M, T.C, T.A)
        side = "b"
    else:
        lhs = R.R_A + R.R_B
        weight = math.sqrt(R.R_B / R.R_A) + math.sqrt(R.R_A / R.R_B)
        value = bisector_length(M, T.A, T.B)
        side = "c"
    return _build_report(
        _VERTEX_DISPATCH[region],
        region,
        lhs,
        weights=(weight,),
        values=(value,),
        sides=(side,),
        tol_factor=tol_factor,
        scale=R.sum(),
    )


def evaluate(
    T: Triangle, M: Point2, eps: float = DEFAULT_EPS, tol_factor: float = DEFAULT_TOL_FACTOR
) -> InequalityReport:
    """Region-dispatched evaluation of the weighted bisector bound.

    Interior points get the weighted bound with all bisectors positive;
    points in the strips and wedges get the same formula with signed
    bisectors (whose sign pattern is exactly the region's coordinate sign
    pattern); points on a vertex get the reduced two-distance bound.  The
    interior and non-interior branches share one arithmetic path, so the
    interior report is bit-identical to what the signed formula yields.
    """
    region = classify(T, M, eps)
    R = vertex_distances(T, M)

    if region.is_vertex:
        return _vertex_report(T, M, region, tol_factor)
    nearest = min(("A", "B", "C"), key=lambda name: getattr(R, "R_" + name))
    if getattr(R, "R_" + nearest) <= VERTEX_ROUTE_FACTOR * T.diameter:
        # Numerically on a vertex even though the sign pattern says otherwise
        # (possible for thin triangles); the weights are unusable there.
        vertex_region = {"A": Region.VERTEX_A, "B": Region.VERTEX_B, "C": Region.VERTEX_C}[nearest]
        return _vertex_report(T, M, vertex_region, tol_factor)

    weights = lu_weights(R)
    lp = signed_bisectors(T, M)
    inequality = (
        InequalityId.LU_WEIGHTED13 if region is Region.LAMBDA0 else InequalityId.SIGNED_BARROW30
    )
    return _build_report(
        inequality,
        region,
        lhs=R.sum(),
        weights=weights.as_tuple(),
        values=(lp.lp_a, lp.lp_b, lp.lp_c),
        tol_factor=tol_factor,
    )
