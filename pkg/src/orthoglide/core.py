"""Core geometric model of the Orthoglide translational parallel manipulator.

The mechanism has three actuated prismatic joints mounted along mutually
orthogonal axes, with the base frame at the intersection of those axes.
Each joint carriage is tied to the tool centre point (TCP) by a rigid bar
link of length ``L``, so the loop-closure constraints are

    (p_x - rho_x)^2 + p_y^2 + p_z^2 = L^2        (x leg)
    p_x^2 + (p_y - rho_y)^2 + p_z^2 = L^2        (y leg)
    p_x^2 + p_y^2 + (p_z - rho_z)^2 = L^2        (z leg)

where ``p`` is the TCP position and ``rho`` the joint displacements.  The
actuation range is ``0 < rho_i <= 2L`` (strict lower bound, closed upper
bound).  All quantities share one caller-chosen length unit; ``L`` is the
only scale parameter of the model.

This module holds the shared value types, the tolerance policy, and the raw
constraint predicates.  Everything here is immutable and side-effect free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

AXES = ("x", "y", "z")


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------
class KinematicsError(Exception):
    """Base class for all kinematic-domain errors."""


class ModelInconsistency(KinematicsError):
    """A (point, joints) pair does not satisfy the bar-link constraints."""


class _AxisError(KinematicsError):
    def __init__(self, axis: str, message: str):
        super().__init__(message)
        self.axis = axis


class RadicandNegative(_AxisError):
    """The point lies outside the reachable cylinder for this axis: no
    inverse solution exists on any branch."""


class SerialSingularity(_AxisError):
    """Leg orthogonal to its prismatic axis (theta = 90 deg): the two
    inverse branches coincide and the branch sign is indeterminate."""


class ZeroJoint(_AxisError):
    """A joint displacement of exactly zero; the direct-kinematics
    parametrization divides by each joint value."""


class NoDkSolution(KinematicsError):
    """Joint vector outside the region where direct kinematics has real
    solutions (negative discriminant)."""


class FlatConfiguration(KinematicsError):
    """TCP lies on the plane through the three joint centres; the posture
    sign is indeterminate."""


class DirectionOnOctantBorder(KinematicsError):
    """A spherical direction with a vanishing component; the boundary
    radius is only defined as a limit there."""


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------
class CartesianPoint(NamedTuple):
    """TCP position. Components are signed lengths and must be finite."""

    x: float
    y: float
    z: float


class JointVector(NamedTuple):
    """Prismatic joint displacements. Components are signed lengths."""

    x: float
    y: float
    z: float


class LegAngles(NamedTuple):
    """Angles in [0, pi] between each bar link and its prismatic axis."""

    x: float
    y: float
    z: float


class AxisFlags(NamedTuple):
    """Per-axis boolean flags."""

    x: bool
    y: bool
    z: bool

    def any(self) -> bool:
        return self.x or self.y or self.z

    def axes(self) -> tuple[str, ...]:
        return tuple(a for a, f in zip(AXES, self) if f)


@dataclass(frozen=True, slots=True)
class Branch:
    """Inverse-kinematics configuration indices (one sign per axis).

    ``+1`` selects the joint root above the TCP coordinate (leg angle in
    (90, 180] deg), ``-1`` the root below.  The label writes the signs as
    ``P``/``M`` in axis order, e.g. ``MPP`` for (-1, +1, +1).
    """

    sx: int
    sy: int
    sz: int

    def __post_init__(self):
        for axis, s in zip(AXES, (self.sx, self.sy, self.sz)):
            if s not in (-1, 1):
                raise ValueError(f"branch sign for axis {axis} must be -1 or +1, got {s!r}")

    @property
    def signs(self) -> tuple[int, int, int]:
        return (self.sx, self.sy, self.sz)

    @property
    def label(self) -> str:
        return "".join("P" if s > 0 else "M" for s in self.signs)

    @classmethod
    def from_label(cls, label: str) -> "Branch":
        if len(label) != 3 or any(c not in "PM" for c in label.upper()):
            raise ValueError(f"branch label must be three of P/M, got {label!r}")
        return cls(*(1 if c == "P" else -1 for c in label.upper()))

    def __str__(self) -> str:
        return self.label


PPP = Branch(1, 1, 1)

#: All eight branches in output order: PPP first, the rest by label.
BRANCH_ORDER: tuple[Branch, ...] = (PPP,) + tuple(
    sorted(
        (
            Branch(sx, sy, sz)
            for sx in (-1, 1)
            for sy in (-1, 1)
            for sz in (-1, 1)
            if (sx, sy, sz) != (1, 1, 1)
        ),
        key=lambda b: b.label,
    )
)


@dataclass(frozen=True, slots=True)
class ManipulatorParams:
    """Geometry parameter and tolerance policy.

    L:
        Bar-link length, strictly positive.  The single scale of the model.
    eps_geom:
        Dimensionless relative tolerance for constraint residuals.  Also
        scales the square-root clamping band (``eps_geom * L**2``), the
        discriminant zero band, and the workspace boundary band
        (``eps_geom * L``).
    eps_branch:
        Absolute length below which a branch/posture sign is declared
        indeterminate.  Defaults to ``1e-9 * L``.
    """

    L: float
    eps_geom: float = 1e-9
    eps_branch: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.L) and self.L > 0):
            raise ValueError(f"L must be finite and positive, got {self.L!r}")
        if not 0 < self.eps_geom < 1e-3:
            raise ValueError(f"eps_geom must be in (0, 1e-3), got {self.eps_geom!r}")
        if self.eps_branch is None:
            object.__setattr__(self, "eps_branch", 1e-9 * self.L)
        if not 0 < self.eps_branch < self.L * 1e-3:
            raise ValueError(f"eps_branch must be in (0, L*1e-3), got {self.eps_branch!r}")


# ---------------------------------------------------------------------------
# Constraint predicates
# ---------------------------------------------------------------------------
def leg_residuals(
    p: CartesianPoint, rho: JointVector, params: ManipulatorParams
) -> tuple[float, float, float]:
    """Signed relative constraint residuals, one per leg.

    Residual i is ``(|leg_i|^2 - L^2) / L^2`` where leg x runs from the
    joint centre (rho_x, 0, 0) to the TCP, and cyclically for y and z.
    A pair is model-consistent iff ``max(abs(r)) <= eps_geom``.
    """
    L2 = params.L * params.L
    rx = ((p.x - rho.x) ** 2 + p.y * p.y + p.z * p.z - L2) / L2
    ry = (p.x * p.x + (p.y - rho.y) ** 2 + p.z * p.z - L2) / L2
    rz = (p.x * p.x + p.y * p.y + (p.z - rho.z) ** 2 - L2) / L2
    return (rx, ry, rz)


def is_consistent(p: CartesianPoint, rho: JointVector, params: ManipulatorParams) -> bool:
    """True iff all three leg residuals are within ``eps_geom``."""
    return max(abs(r) for r in leg_residuals(p, rho, params)) <= params.eps_geom


def joint_limits_ok(rho: JointVector, params: ManipulatorParams) -> bool:
    """Exact actuation-range check ``0 < rho_i <= 2L``, no tolerance slack.

    The lower bound is strict and the upper closed; the workspace set
    algebra depends on exactly these open/closed choices, so any safety
    margin is the caller's business.
    """
    hi = 2.0 * params.L
    return 0.0 < rho.x <= hi and 0.0 < rho.y <= hi and 0.0 < rho.z <= hi


def leg_angles(p: CartesianPoint, rho: JointVector, params: ManipulatorParams) -> LegAngles:
    """Angles between each bar link and its prismatic axis.

    ``theta_i = arccos((p_i - rho_i) / L)``, in [0, pi].  Branch sign +1
    corresponds to theta in (pi/2, pi].  Requires a model-consistent pair;
    arccos arguments within ``eps_geom`` of +/-1 are clamped (legs of
    floating-point length exactly L would otherwise produce NaN).
    """
    if not is_consistent(p, rho, params):
        worst = max(abs(r) for r in leg_residuals(p, rho, params))
        raise ModelInconsistency(
            f"(p, rho) violates the bar-link constraints: max |residual| = {worst:.3e} "
            f"> eps_geom = {params.eps_geom:.3e}"
        )
    angles = []
    for axis, pi_, ri in zip(AXES, p, rho):
        c = (pi_ - ri) / params.L
        if abs(c) > 1.0:
            if abs(c) - 1.0 > params.eps_geom:
                raise ModelInconsistency(
                    f"cos(theta_{axis}) = {c!r} outside [-1, 1] beyond tolerance"
                )
            c = math.copysign(1.0, c)
        angles.append(math.acos(c))
    return LegAngles(*angles)
