"""Analytic kinematics and workspace analysis for the Orthoglide, a 3-DOF
translational parallel manipulator with orthogonal prismatic drives.

Highlights: branch-resolved inverse kinematics, posture-resolved direct
kinematics, workspace region classification with exact solution counts,
closed-form and Monte-Carlo volumes, and jointspace feasibility boundaries.
"""

from .core import (
    AXES,
    BRANCH_ORDER,
    PPP,
    AxisFlags,
    Branch,
    CartesianPoint,
    DirectionOnOctantBorder,
    FlatConfiguration,
    JointVector,
    KinematicsError,
    LegAngles,
    ManipulatorParams,
    ModelInconsistency,
    NoDkSolution,
    RadicandNegative,
    SerialSingularity,
    ZeroJoint,
    is_consistent,
    joint_limits_ok,
    leg_angles,
    leg_residuals,
)
from .direct import (
    DkQuadratic,
    DkSolution,
    dk_both,
    dk_coefficients,
    dk_solve,
    equidistant_point,
    plane_eval,
    posture_of,
)
from .inverse import (
    IkSolution,
    branch_of,
    ik_branch,
    ik_enumerate_feasible,
    is_serial_singular,
)
from .jointspace import (
    DEFAULT_DIRECTION_FLOOR,
    SphericalDirection,
    boundary_joint_vector,
    boundary_radius,
    boundary_rho_x,
    boundary_vs_sphere_gap,
    dk_feasible,
    feasibility_product,
)
from .workspace import (
    BisectorLandmarks,
    MonteCarloVolumeReport,
    VolumeEstimate,
    VolumeReport,
    WorkspaceRegion,
    bisector_landmarks,
    classify_point,
    in_cylinder_intersection,
    monte_carlo_volumes,
    workspace_volumes,
)

__version__ = "0.1.0"

__all__ = [
    "AXES",
    "BRANCH_ORDER",
    "PPP",
    "AxisFlags",
    "BisectorLandmarks",
    "Branch",
    "CartesianPoint",
    "DEFAULT_DIRECTION_FLOOR",
    "DirectionOnOctantBorder",
    "DkQuadratic",
    "DkSolution",
    "FlatConfiguration",
    "IkSolution",
    "JointVector",
    "KinematicsError",
    "LegAngles",
    "ManipulatorParams",
    "ModelInconsistency",
    "MonteCarloVolumeReport",
    "NoDkSolution",
    "RadicandNegative",
    "SerialSingularity",
    "SphericalDirection",
    "VolumeEstimate",
    "VolumeReport",
    "WorkspaceRegion",
    "ZeroJoint",
    "bisector_landmarks",
    "boundary_joint_vector",
    "boundary_radius",
    "boundary_rho_x",
    "boundary_vs_sphere_gap",
    "branch_of",
    "classify_point",
    "dk_both",
    "dk_coefficients",
    "dk_feasible",
    "dk_solve",
    "equidistant_point",
    "feasibility_product",
    "ik_branch",
    "ik_enumerate_feasible",
    "in_cylinder_intersection",
    "is_consistent",
    "is_serial_singular",
    "joint_limits_ok",
    "leg_angles",
    "leg_residuals",
    "monte_carlo_volumes",
    "plane_eval",
    "posture_of",
    "workspace_volumes",
    "__version__",
]
