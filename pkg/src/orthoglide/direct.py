"""Closed-form direct kinematics via the equidistant-line parametrization.

Subtracting the leg constraints pairwise gives linear relations that force
every solution onto the line of points equidistant from the three joint
centres (rho_x, 0, 0), (0, rho_y, 0), (0, 0, rho_z):

    p_i = rho_i / 2 + t / rho_i

with a scalar parameter t (units length^2).  Substituting back into any leg
constraint yields a quadratic  a*t^2 + b*t + c = 0  whose two roots are the
two direct solutions, distinguished by the side of the plane through the
joint centres (posture index m = -1 below, +1 above).  A zero discriminant
is the "flat" configuration with TCP on that plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    AXES,
    CartesianPoint,
    FlatConfiguration,
    JointVector,
    ManipulatorParams,
    NoDkSolution,
    ZeroJoint,
)


@dataclass(frozen=True, slots=True)
class DkQuadratic:
    """Coefficients of the quadratic in t (a: length^4, b: length^6, c: length^8)."""

    a: float
    b: float
    c: float

    @property
    def discriminant(self) -> float:
        return self.b * self.b - 4.0 * self.a * self.c


class DkSolution(NamedTuple):
    """One direct solution.  ``posture`` is None for the flat configuration."""

    p: CartesianPoint
    posture: int | None
    t_value: float


def _require_nonzero(rho: JointVector) -> None:
    for axis, ri in zip(AXES, rho):
        if ri == 0.0:
            raise ZeroJoint(axis, f"rho_{axis} = 0; equidistant line undefined")


def dk_coefficients(rho: JointVector, params: ManipulatorParams) -> DkQuadratic:
    """Quadratic coefficients for the given joint vector."""
    _require_nonzero(rho)
    xy = rho.x * rho.y
    xz = rho.x * rho.z
    yz = rho.y * rho.z
    a = xy * xy + xz * xz + yz * yz
    b = (rho.x * yz) ** 2
    c = (rho.x * rho.x + rho.y * rho.y + rho.z * rho.z - 4.0 * params.L * params.L) * b / 4.0
    return DkQuadratic(a, b, c)


def _disc_band(q: DkQuadratic, params: ManipulatorParams) -> float:
    # b > 0 for nonzero joints, so the band is scale-free in L.
    return params.eps_geom * q.b * q.b


def _stable_roots(q: DkQuadratic) -> tuple[float, float]:
    """(t_minus, t_plus) with the larger-magnitude root computed first.

    b > 0 here, so -(b + sqrt(disc))/2 has no cancellation; the other root
    comes from the product c/a.  This only changes evaluation order, not
    the root values.
    """
    s = math.sqrt(max(q.discriminant, 0.0))
    u = -(q.b + s) / 2.0
    return (u / q.a, q.c / u)


def dk_solve(rho: JointVector, posture: int, params: ManipulatorParams) -> DkSolution:
    """Direct solution for one posture index (m = -1 or +1).

    Discriminants within ``eps_geom * b^2`` of zero are clamped to zero, so
    both postures return the single flat-configuration point there.
    """
    if posture not in (-1, 1):
        raise ValueError(f"posture index must be -1 or +1, got {posture!r}")
    q = dk_coefficients(rho, params)
    disc = q.discriminant
    band = _disc_band(q, params)
    if disc < -band:
        raise NoDkSolution(
            f"discriminant {disc:.6e} < 0: joint vector outside the direct-solution region"
        )
    if disc <= band:
        # Inside the zero band the two roots coincide; taking sqrt of the
        # floating-point residue would split them by O(sqrt(noise)).
        t = -q.b / (2.0 * q.a)
    else:
        t_minus, t_plus = _stable_roots(q)
        t = t_minus if posture == -1 else t_plus
    return DkSolution(p=equidistant_point(rho, t), posture=posture, t_value=t)


def dk_both(rho: JointVector, params: ManipulatorParams) -> list[DkSolution]:
    """Zero, one, or two direct solutions, ordered m = -1 then m = +1.

    A discriminant inside the zero band yields the single flat solution
    (t = -b/2a, posture None).  Joint limits are deliberately not applied
    here; feasibility policy belongs to the jointspace layer, and callers
    wanting the flag can check ``joint_limits_ok(rho)`` themselves.
    """
    q = dk_coefficients(rho, params)
    disc = q.discriminant
    band = _disc_band(q, params)
    if disc > band:
        t_minus, t_plus = _stable_roots(q)
        return [
            DkSolution(p=equidistant_point(rho, t_minus), posture=-1, t_value=t_minus),
            DkSolution(p=equidistant_point(rho, t_plus), posture=1, t_value=t_plus),
        ]
    if disc >= -band:
        t0 = -q.b / (2.0 * q.a)
        return [DkSolution(p=equidistant_point(rho, t0), posture=None, t_value=t0)]
    return []


def equidistant_point(rho: JointVector, t: float) -> CartesianPoint:
    """Point on the equidistant line at parameter t (length^2).

    Every returned point is equidistant from the three joint centres,
    whatever t is.
    """
    _require_nonzero(rho)
    return CartesianPoint(
        rho.x / 2.0 + t / rho.x,
        rho.y / 2.0 + t / rho.y,
        rho.z / 2.0 + t / rho.z,
    )


def plane_eval(p: CartesianPoint, rho: JointVector) -> float:
    """Signed evaluation of the joint-centre plane:
    ``p_x/rho_x + p_y/rho_y + p_z/rho_z - 1``; zero iff p lies on it."""
    _require_nonzero(rho)
    return p.x / rho.x + p.y / rho.y + p.z / rho.z - 1.0


def posture_of(p: CartesianPoint, rho: JointVector, params: ManipulatorParams) -> int:
    """Posture index of a known-consistent pair: the side of the
    joint-centre plane the TCP lies on.

    For all-positive joints the sign is taken from the cross-multiplied
    polynomial form (no divisions); for mixed-sign joints that form flips
    with the product of the joints, so the normal-vector form is used
    instead.  Raises FlatConfiguration when the TCP is within
    ``eps_branch`` (Euclidean distance) of the plane.
    """
    pe = plane_eval(p, rho)
    # |pe| / |gradient| is the Euclidean distance from p to the plane.
    grad = math.sqrt(1.0 / rho.x**2 + 1.0 / rho.y**2 + 1.0 / rho.z**2)
    if abs(pe) <= params.eps_branch * grad:
        raise FlatConfiguration(
            f"TCP within {params.eps_branch:.3e} of the joint-centre plane; "
            "posture indeterminate"
        )
    if rho.x > 0 and rho.y > 0 and rho.z > 0:
        val = (
            p.x * rho.y * rho.z
            + rho.x * p.y * rho.z
            + rho.x * rho.y * p.z
            - rho.x * rho.y * rho.z
        )
    else:
        val = pe
    return 1 if val > 0 else -1
