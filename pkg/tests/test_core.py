import math

import pytest
from hypothesis import given, strategies as st

from orthoglide import (
    BRANCH_ORDER,
    PPP,
    Branch,
    CartesianPoint,
    JointVector,
    ManipulatorParams,
    ModelInconsistency,
    joint_limits_ok,
    leg_angles,
    leg_residuals,
)

ORIGIN = CartesianPoint(0.0, 0.0, 0.0)


class TestManipulatorParams:
    def test_defaults(self):
        params = ManipulatorParams(L=2.0)
        assert params.eps_geom == 1e-9
        assert params.eps_branch == 2e-9

    @pytest.mark.parametrize("L", [0.0, -1.0, math.inf, math.nan])
    def test_bad_length_rejected(self, L):
        with pytest.raises(ValueError):
            ManipulatorParams(L=L)

    @pytest.mark.parametrize("eps", [0.0, -1e-9, 1e-3, 1.0])
    def test_bad_eps_geom_rejected(self, eps):
        with pytest.raises(ValueError):
            ManipulatorParams(L=1.0, eps_geom=eps)

    @pytest.mark.parametrize("eps", [0.0, 1e-3, 5e-3])
    def test_bad_eps_branch_rejected(self, eps):
        with pytest.raises(ValueError):
            ManipulatorParams(L=1.0, eps_branch=eps)


class TestBranch:
    def test_label_roundtrip(self):
        assert Branch.from_label("MPP") == Branch(-1, 1, 1)
        assert Branch(-1, 1, -1).label == "MPM"
        assert str(PPP) == "PPP"

    @pytest.mark.parametrize("label", ["PP", "PPPP", "PPX", ""])
    def test_bad_label_rejected(self, label):
        with pytest.raises(ValueError):
            Branch.from_label(label)

    def test_bad_signs_rejected(self):
        with pytest.raises(ValueError):
            Branch(0, 1, 1)
        with pytest.raises(ValueError):
            Branch(1, 1, 2)

    def test_order_is_ppp_then_lexicographic(self):
        labels = [b.label for b in BRANCH_ORDER]
        assert labels[0] == "PPP"
        assert labels[1:] == sorted(labels[1:])
        assert len(set(labels)) == 8


class TestLegResiduals:
    def test_home_position(self, unit_params):
        res = leg_residuals(ORIGIN, JointVector(1.0, 1.0, 1.0), unit_params)
        assert res == (0.0, 0.0, 0.0)

    def test_leg_side_sign_insensitive(self, unit_params):
        res = leg_residuals(ORIGIN, JointVector(-1.0, 1.0, 1.0), unit_params)
        assert res == (0.0, 0.0, 0.0)

    def test_two_decimal_joint_values_pass_loose_tolerance(self, unit_params):
        # rho_x = rho_z = 0.7 + sqrt(0.02), rho_y = 0.7 - sqrt(0.02), rounded
        p = CartesianPoint(0.7, 0.7, 0.7)
        rho = JointVector(0.8414, 0.5586, 0.8414)
        assert max(abs(r) for r in leg_residuals(p, rho, unit_params)) <= 1e-3

    def test_scale_free(self):
        p = CartesianPoint(0.2, -0.3, 0.1)
        rho = JointVector(1.1, 0.6, 0.9)
        small = leg_residuals(p, rho, ManipulatorParams(L=1.0))
        k = 7.5
        big = leg_residuals(
            CartesianPoint(*(k * v for v in p)),
            JointVector(*(k * v for v in rho)),
            ManipulatorParams(L=k),
        )
        for a, b in zip(small, big):
            assert a == pytest.approx(b, abs=1e-12)

    @given(
        st.permutations([0, 1, 2]),
        st.lists(st.floats(-2, 2), min_size=6, max_size=6),
    )
    def test_permutation_invariance(self, perm, vals):
        params = ManipulatorParams(L=1.0)
        p = CartesianPoint(*vals[:3])
        rho = JointVector(*vals[3:])
        base = leg_residuals(p, rho, params)
        permuted = leg_residuals(
            CartesianPoint(*(p[i] for i in perm)),
            JointVector(*(rho[i] for i in perm)),
            params,
        )
        # summation order changes under permutation, so ulp-level slack
        for got, want in zip(permuted, (base[i] for i in perm)):
            assert got == pytest.approx(want, abs=1e-14)

    @given(
        st.floats(-0.9, 0.9),
        st.floats(-0.7, 0.7),
        st.floats(-0.7, 0.7),
    )
    def test_both_x_roots_satisfy_x_leg(self, px, py, pz):
        """Any point with p_y^2 + p_z^2 <= L^2 yields two exact x-leg roots."""
        params = ManipulatorParams(L=1.0)
        half = math.sqrt(max(1.0 - py * py - pz * pz, 0.0))
        p = CartesianPoint(px, py, pz)
        for rho_x in (px + half, px - half):
            rx = leg_residuals(p, JointVector(rho_x, 1.0, 1.0), params)[0]
            assert abs(rx) <= params.eps_geom


class TestJointLimits:
    @pytest.mark.parametrize(
        "rho,expected",
        [
            ((1.0, 1.0, 1.0), True),
            ((0.0, 1.0, 1.0), False),   # lower bound strict
            ((2.0, 2.0, 2.0), True),    # upper bound closed
            ((2.0 + 1e-15, 2.0, 2.0), False),
            ((1.0, -0.5, 1.0), False),
        ],
    )
    def test_bounds(self, unit_params, rho, expected):
        assert joint_limits_ok(JointVector(*rho), unit_params) is expected

    def test_scales_with_length(self):
        params = ManipulatorParams(L=3.0)
        assert joint_limits_ok(JointVector(6.0, 6.0, 6.0), params)
        assert not joint_limits_ok(JointVector(6.1, 6.0, 6.0), params)


class TestLegAngles:
    def test_home_is_antiparallel(self, unit_params):
        angles = leg_angles(ORIGIN, JointVector(1.0, 1.0, 1.0), unit_params)
        for a in angles:
            assert a == pytest.approx(math.pi, abs=1e-12)

    def test_lower_branch_angle_below_right_angle(self):
        # x joint on its lower root: theta_x = arccos(0.7 - 0.5586)
        params = ManipulatorParams(L=1.0, eps_geom=1e-4)
        p = CartesianPoint(0.7, 0.7, 0.7)
        rho = JointVector(0.5586, 0.8414, 0.8414)
        angles = leg_angles(p, rho, params)
        assert angles.x == pytest.approx(math.acos(0.1414), abs=1e-12)
        assert angles.x < math.pi / 2

    def test_upper_branch_obtuse_angle(self, unit_params):
        p = CartesianPoint(0.0, 0.4, 0.3)
        rho = JointVector(
            math.sqrt(0.75), 0.4 + math.sqrt(0.91), 0.3 + math.sqrt(0.84)
        )
        angles = leg_angles(p, rho, unit_params)
        assert angles.x == pytest.approx(math.acos(-math.sqrt(0.75)), abs=1e-12)
        assert angles.x == pytest.approx(2.618, abs=1e-3)

    def test_inconsistent_pair_rejected(self, unit_params):
        with pytest.raises(ModelInconsistency):
            leg_angles(ORIGIN, JointVector(1.5, 1.0, 1.0), unit_params)

    def test_cosine_reconstructs_argument(self, unit_params):
        p = CartesianPoint(-0.2, 0.5, 0.1)
        rho = JointVector(
            -0.2 + math.sqrt(1 - 0.25 - 0.01),
            0.5 - math.sqrt(1 - 0.04 - 0.01),
            0.1 + math.sqrt(1 - 0.04 - 0.25),
        )
        angles = leg_angles(p, rho, unit_params)
        for theta, pi_, ri in zip(angles, p, rho):
            assert 0.0 <= theta <= math.pi
            assert math.cos(theta) == pytest.approx(pi_ - ri, abs=1e-12)

    def test_singular_surface_angle_is_right_angle(self, unit_params):
        # rho_x = p_x: leg x orthogonal to its axis
        p = CartesianPoint(0.3, 0.6, 0.8)
        rho = JointVector(
            0.3,
            0.6 + math.sqrt(1 - 0.09 - 0.64),
            0.8 + math.sqrt(1 - 0.09 - 0.36),
        )
        angles = leg_angles(p, rho, unit_params)
        assert angles.x == pytest.approx(math.pi / 2, abs=1e-9)

    def test_cosine_slightly_past_minus_one_is_clamped(self, unit_params):
        # leg x barely longer than L (residual 8e-10, inside tolerance);
        # the raw arccos argument is -1 - 4e-10 and must clamp, not NaN
        p = CartesianPoint(0.5, 0.0, 0.0)
        rho = JointVector(1.5 + 4e-10, math.sqrt(0.75), math.sqrt(0.75))
        angles = leg_angles(p, rho, unit_params)
        assert angles.x == math.pi
