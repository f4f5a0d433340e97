"""Feasible jointspace region and its boundary surface.

Direct kinematics has real solutions exactly where

    (rho_x^2 + rho_y^2 + rho_z^2 - 4L^2)(rho_x^-2 + rho_y^-2 + rho_z^-2) <= 1

which, restricted to positive joints, is a star-shaped solid in the first
octant.  Its boundary admits two representations:

  * a biquadratic in rho_x at fixed (rho_y, rho_z), handy for axis-aligned
    slices but asymmetric in the coordinates;
  * in spherical coordinates, the radius along a unit direction e:
        t = 2L * sqrt(F / (F - 1)),   F = e_x^-2 + e_y^-2 + e_z^-2
    which is the cheap form and the one to use for radial queries.

The surface hugs the sphere of radius 2L from outside, touching it along
the quarter-circle octant edges and bulging farthest on the bisector.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .core import (
    AXES,
    DirectionOnOctantBorder,
    JointVector,
    ManipulatorParams,
    ZeroJoint,
    joint_limits_ok,
)

#: Smallest direction component boundary_radius accepts.  At the floor the
#: radius is within ~1e-12 L of 2L, so the octant-edge limit is honoured.
DEFAULT_DIRECTION_FLOOR = 1e-6


class SphericalDirection(NamedTuple):
    """First-octant unit direction via two angles, each in ]0, pi/2]."""

    phi: float
    theta: float

    def unit_vector(self) -> tuple[float, float, float]:
        cp = math.cos(self.phi)
        return (cp * math.cos(self.theta), cp * math.sin(self.theta), math.sin(self.phi))

    @classmethod
    def from_vector(cls, x: float, y: float, z: float) -> "SphericalDirection":
        """Direction of a vector with strictly positive components."""
        if min(x, y, z) <= 0:
            raise ValueError(f"vector must have positive components, got {(x, y, z)}")
        n = math.sqrt(x * x + y * y + z * z)
        return cls(phi=math.asin(min(z / n, 1.0)), theta=math.atan2(y, x))


def feasibility_product(rho: JointVector, params: ManipulatorParams) -> float:
    """The jointspace membership product; direct solutions exist iff <= 1."""
    for axis, ri in zip(AXES, rho):
        if ri == 0.0:
            raise ZeroJoint(axis, f"rho_{axis} = 0; feasibility product undefined")
    sum_sq = rho.x * rho.x + rho.y * rho.y + rho.z * rho.z
    sum_inv = 1.0 / rho.x**2 + 1.0 / rho.y**2 + 1.0 / rho.z**2
    return (sum_sq - 4.0 * params.L * params.L) * sum_inv


def dk_feasible(rho: JointVector, params: ManipulatorParams) -> bool:
    """True iff the joint vector admits a direct solution *and* respects
    the actuation range (the positive-octant restriction)."""
    return feasibility_product(rho, params) <= 1.0 and joint_limits_ok(rho, params)


def boundary_radius(
    dir: SphericalDirection,
    params: ManipulatorParams,
    floor: float = DEFAULT_DIRECTION_FLOOR,
) -> float:
    """Distance from the origin to the boundary surface along ``dir``.

    F >= 9 for any positive unit direction (minimum on the bisector), so
    F - 1 never vanishes.  Directions with a component below ``floor`` are
    rejected: F diverges there and the boundary only approaches the 2L
    sphere as a limit.
    """
    e = dir.unit_vector()
    if min(e) < floor:
        raise DirectionOnOctantBorder(
            f"direction {e} has a component below the floor {floor:g}"
        )
    F = 1.0 / e[0] ** 2 + 1.0 / e[1] ** 2 + 1.0 / e[2] ** 2
    return 2.0 * params.L * math.sqrt(F / (F - 1.0))


def boundary_joint_vector(
    dir: SphericalDirection,
    params: ManipulatorParams,
    floor: float = DEFAULT_DIRECTION_FLOOR,
) -> JointVector:
    """The boundary point itself: ``boundary_radius(dir) * e``."""
    t = boundary_radius(dir, params, floor)
    e = dir.unit_vector()
    return JointVector(t * e[0], t * e[1], t * e[2])


def boundary_rho_x(
    rho_y: float, rho_z: float, params: ManipulatorParams
) -> tuple[float, ...]:
    """Positive rho_x values putting (rho_x, rho_y, rho_z) on the boundary.

    Solves the biquadratic  d*u^2 + d*e*u + e = 0  in u = rho_x^2 with
    d = rho_y^-2 + rho_z^-2 and e = rho_y^2 + rho_z^2 - 4L^2.  Empty means
    the axis-aligned line at this (rho_y, rho_z) never crosses the surface.
    """
    if rho_y <= 0 or rho_z <= 0:
        raise ValueError(f"rho_y and rho_z must be positive, got {(rho_y, rho_z)}")
    d = 1.0 / rho_y**2 + 1.0 / rho_z**2
    e = rho_y * rho_y + rho_z * rho_z - 4.0 * params.L * params.L
    b = d * e
    disc = b * b - 4.0 * d * e
    if disc < 0.0:
        return ()
    s = math.sqrt(disc)
    # Stable pairing: the addition that avoids cancellation first, the
    # other root from the product e/d.
    if b >= 0.0:
        u1 = (-b - s) / (2.0 * d)
    else:
        u1 = (-b + s) / (2.0 * d)
    u2 = (e / d) / u1 if u1 != 0.0 else 0.0
    roots = sorted(math.sqrt(u) for u in (u1, u2) if u > 0.0)
    # Collapse the double root when the discriminant vanishes.
    if len(roots) == 2 and math.isclose(roots[0], roots[1], rel_tol=1e-12):
        roots = roots[:1]
    return tuple(roots)


def boundary_vs_sphere_gap(
    dir: SphericalDirection,
    params: ManipulatorParams,
    floor: float = DEFAULT_DIRECTION_FLOOR,
) -> float:
    """How far outside the 2L sphere the boundary lies along ``dir``.

    Nonnegative everywhere, maximal on the bisector, tending to zero
    toward the octant edges.
    """
    return boundary_radius(dir, params, floor) - 2.0 * params.L
