"""Workspace sets, region classification, volumes, bisector landmarks.

The reachable set is the intersection C of three orthogonal solid cylinders
of radius L.  Under the actuation range the usable workspace W splits into
two disjoint pieces:

  * S, the open ball of radius L at the origin: exactly one feasible
    inverse solution (branch PPP);
  * G, the thin first-octant solid between the ball and C: all eight
    branches feasible.

Volumes have closed forms; a seeded Monte-Carlo estimator doubles as an
independent check of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .core import CartesianPoint, ManipulatorParams


class WorkspaceRegion(Enum):
    """Region of a query point, determining the inverse-solution count."""

    SPHERE_INTERIOR = "sphere_interior"
    SHELL = "shell"
    BOUNDARY_BAND = "boundary_band"
    OUTSIDE = "outside"

    @property
    def ik_count(self) -> int | None:
        """Feasible inverse solutions in this region (None: indeterminate)."""
        return _IK_COUNTS[self]


_IK_COUNTS = {
    WorkspaceRegion.SPHERE_INTERIOR: 1,
    WorkspaceRegion.SHELL: 8,
    WorkspaceRegion.BOUNDARY_BAND: None,
    WorkspaceRegion.OUTSIDE: 0,
}


def in_cylinder_intersection(p: CartesianPoint, params: ManipulatorParams) -> bool:
    """Closed membership test: all pairwise coordinate square sums <= L^2."""
    L2 = params.L * params.L
    x2, y2, z2 = p.x * p.x, p.y * p.y, p.z * p.z
    return x2 + y2 <= L2 and x2 + z2 <= L2 and y2 + z2 <= L2


def classify_point(p: CartesianPoint, params: ManipulatorParams) -> WorkspaceRegion:
    """Classify a point against the workspace regions.

    The boundary band is ``eps_geom * L`` in Euclidean distance to each
    bounding surface: the sphere, the cylinder walls, and (for the shell
    only) the coordinate planes.  Inside the band the solution count is
    indeterminate and no count is asserted.
    """
    L = params.L
    band = params.eps_geom * L
    c_xy = math.hypot(p.x, p.y)
    c_xz = math.hypot(p.x, p.z)
    c_yz = math.hypot(p.y, p.z)
    if max(c_xy, c_xz, c_yz) > L + band:
        return WorkspaceRegion.OUTSIDE
    r = math.sqrt(p.x * p.x + p.y * p.y + p.z * p.z)
    if abs(r - L) <= band:
        return WorkspaceRegion.BOUNDARY_BAND
    if r < L:
        # Pairwise radii never exceed r, so no cylinder wall is nearby.
        return WorkspaceRegion.SPHERE_INTERIOR
    if min(abs(c_xy - L), abs(c_xz - L), abs(c_yz - L)) <= band:
        return WorkspaceRegion.BOUNDARY_BAND
    if min(abs(p.x), abs(p.y), abs(p.z)) <= band:
        return WorkspaceRegion.BOUNDARY_BAND
    if p.x > 0 and p.y > 0 and p.z > 0:
        return WorkspaceRegion.SHELL
    return WorkspaceRegion.OUTSIDE


# ---------------------------------------------------------------------------
# Volumes
# ---------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class VolumeReport:
    """Closed-form region volumes and percentages of the serial baseline.

    The baseline is the (2L)^3 box a serial Cartesian machine with the same
    stroke would sweep.
    """

    vol_C: float
    vol_S: float
    vol_G: float
    vol_W: float
    pct_W_of_serial: float
    pct_S_of_serial: float
    pct_C_of_serial: float


def workspace_volumes(params: ManipulatorParams) -> VolumeReport:
    """Exact volumes: Vol(C) = 8(2 - sqrt2) L^3, Vol(S) = 4pi/3 L^3,
    Vol(G) = (2 - sqrt2 - pi/6) L^3, Vol(W) = (2 + 7pi/6 - sqrt2) L^3."""
    L3 = params.L**3
    s2 = math.sqrt(2.0)
    vol_C = 8.0 * (2.0 - s2) * L3
    vol_S = (4.0 * math.pi / 3.0) * L3
    vol_G = (2.0 - s2 - math.pi / 6.0) * L3
    vol_W = (2.0 + 7.0 * math.pi / 6.0 - s2) * L3
    serial = 8.0 * L3
    return VolumeReport(
        vol_C=vol_C,
        vol_S=vol_S,
        vol_G=vol_G,
        vol_W=vol_W,
        pct_W_of_serial=100.0 * vol_W / serial,
        pct_S_of_serial=100.0 * vol_S / serial,
        pct_C_of_serial=100.0 * vol_C / serial,
    )


class VolumeEstimate(NamedTuple):
    """Monte-Carlo estimate with its binomial standard error."""

    value: float
    stderr: float
    hits: int


@dataclass(frozen=True, slots=True)
class MonteCarloVolumeReport:
    n_samples: int
    seed: int
    vol_C: VolumeEstimate
    vol_S: VolumeEstimate
    vol_G: VolumeEstimate
    vol_W: VolumeEstimate


_MC_BLOCK = 1 << 17


def monte_carlo_volumes(
    params: ManipulatorParams, n_samples: int, seed: int
) -> MonteCarloVolumeReport:
    """Sampled volume estimates over the [-L, L]^3 cube.

    Uses numpy's PCG64 generator (``default_rng(seed)``); the stream is
    consumed in fixed row-major order, so results are bit-identical for a
    given seed regardless of internal block size.  Sampling the full cube
    rather than one octant exercises the C and S membership tests in every
    octant; W membership uses the disjoint S-union-G decomposition.
    """
    if n_samples < 10_000:
        raise ValueError(f"n_samples must be >= 10000, got {n_samples}")
    L = params.L
    L2 = L * L
    rng = np.random.default_rng(seed)
    hits_C = hits_S = hits_G = 0
    remaining = n_samples
    while remaining > 0:
        m = min(_MC_BLOCK, remaining)
        pts = rng.uniform(-L, L, size=(m, 3))
        sq = pts * pts
        xy = sq[:, 0] + sq[:, 1]
        xz = sq[:, 0] + sq[:, 2]
        yz = sq[:, 1] + sq[:, 2]
        in_C = (xy <= L2) & (xz <= L2) & (yz <= L2)
        r2 = sq.sum(axis=1)
        in_S = r2 < L2
        in_G = in_C & (r2 > L2) & (pts > 0.0).all(axis=1)
        hits_C += int(in_C.sum())
        hits_S += int(in_S.sum())
        hits_G += int(in_G.sum())
        remaining -= m
    cube = 8.0 * L**3

    def estimate(hits: int) -> VolumeEstimate:
        frac = hits / n_samples
        return VolumeEstimate(
            value=cube * frac,
            stderr=cube * math.sqrt(frac * (1.0 - frac) / n_samples),
            hits=hits,
        )

    est_C, est_S, est_G = estimate(hits_C), estimate(hits_S), estimate(hits_G)
    est_W = estimate(hits_S + hits_G)
    return MonteCarloVolumeReport(
        n_samples=n_samples, seed=seed, vol_C=est_C, vol_S=est_S, vol_G=est_G, vol_W=est_W
    )


@dataclass(frozen=True, slots=True)
class BisectorLandmarks:
    """Where the first-octant bisector exits the sphere and the cylinder
    intersection.  Both the per-axis coordinate and the Euclidean distance
    from the origin are reported."""

    sphere_axis_coord: float
    sphere_distance: float
    shell_axis_coord: float
    shell_distance: float


def bisector_landmarks(params: ManipulatorParams) -> BisectorLandmarks:
    """Bisector exit points: sphere at per-axis L/sqrt3 (distance L);
    cylinder intersection at per-axis L/sqrt2 (distance L*sqrt(3/2))."""
    L = params.L
    return BisectorLandmarks(
        sphere_axis_coord=L / math.sqrt(3.0),
        sphere_distance=L,
        shell_axis_coord=L / math.sqrt(2.0),
        shell_distance=L * math.sqrt(1.5),
    )
