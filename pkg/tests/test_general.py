import math

import pytest
from hypothesis import assume, given, strategies as st

from beloch.curve import ShapeClass, classify
from beloch.errors import DegenerateInput, SignObstruction, ZeroCoefficient
from beloch.general import (
    GeneralCubic,
    cissoid,
    classify_origin,
    corrected_criterion,
    hessian_origin,
    normalize,
    ophiuride,
    origin_sign_flips,
    paper_criterion,
)

nz = st.floats(min_value=0.1, max_value=5.0)
signed_nz = st.one_of(nz, nz.map(lambda v: -v))
AUDIT = GeneralCubic(1.0, 1.0, 4.0, -2.0, 1.0)


class TestEvaluation:
    def test_known_value(self):
        assert AUDIT(0.5, -0.25) == 0.90625

    def test_rejects_nonfinite(self):
        with pytest.raises(DegenerateInput):
            GeneralCubic(float("nan"), 1.0, 0.0, 0.0, 1.0)


class TestNormalize:
    def test_audit_case(self):
        n = normalize(AUDIT)
        assert (n.beta, n.alpha, n.p, n.q) == (1.0, 1.0, -1.0, 2.0)
        pr = n.to_params()
        assert (pr.p, pr.q, pr.alpha) == (-1.0, 2.0, 1.0)

    def test_zero_coefficients_rejected(self):
        with pytest.raises(ZeroCoefficient):
            normalize(GeneralCubic(0.0, 1.0, 1.0, 1.0, 1.0))
        with pytest.raises(ZeroCoefficient):
            normalize(GeneralCubic(1.0, 0.0, 1.0, 1.0, 1.0))
        with pytest.raises(ZeroCoefficient):
            normalize(GeneralCubic(1.0, 1.0, 1.0, 1.0, 0.0))

    def test_mixed_signs_obstructed(self):
        with pytest.raises(SignObstruction):
            normalize(GeneralCubic(1.0, 1.0, 1.0, 1.0, -1.0))

    @given(signed_nz, signed_nz, signed_nz, signed_nz, nz)
    def test_criteria_identities(self, a0, a1, a2, a3, mag):
        a4 = mag if a1 > 0 else -mag
        c = GeneralCubic(a0, a1, a2, a3, a4)
        n = normalize(c)
        paper = paper_criterion(c)
        corrected = corrected_criterion(c)
        scale = 1.0 + abs(paper) + abs(corrected)
        assert paper == pytest.approx(4.0 * n.p + n.q**2, abs=1e-12 * scale)
        assert corrected == pytest.approx(
            2.0 * n.alpha * n.p + n.q**2, abs=1e-12 * scale
        )

    @given(signed_nz, signed_nz, signed_nz, signed_nz, nz)
    def test_hessian_ties_to_corrected(self, a0, a1, a2, a3, mag):
        a4 = mag if a1 > 0 else -mag
        c = GeneralCubic(a0, a1, a2, a3, a4)
        h = hessian_origin(c)
        assert h == -4.0 * a0 * a3 - a2 * a2
        # dividing by the positive 4*a1**2 cannot change the sign, so the
        # shape call and the Hessian can never contradict each other
        corrected = corrected_criterion(c)
        if corrected != 0.0:
            assert math.copysign(1.0, -h) == math.copysign(1.0, corrected)


class TestClassifyOrigin:
    def test_audit_case(self):
        rep = classify_origin(AUDIT)
        assert rep.paper_value == 0.0
        assert rep.corrected_value == 2.0
        assert rep.hessian_det == -8.0
        assert rep.shape is ShapeClass.NODE
        assert rep.discrepancy

    def test_audit_case_two_branches_by_sampling(self):
        assert origin_sign_flips(AUDIT, 1e-3) == 4

    def test_ophiuride_is_a_node(self):
        rep = classify_origin(ophiuride(1.0, 1.0))
        assert rep.shape is ShapeClass.NODE
        assert not rep.discrepancy

    def test_cissoid_is_a_cusp(self):
        for a in (1.5, -0.7, 0.25):
            rep = classify_origin(cissoid(a))
            assert rep.shape is ShapeClass.CUSP
            assert not rep.discrepancy

    def test_cissoid_needs_scale(self):
        with pytest.raises(DegenerateInput):
            cissoid(0.0)

    def test_ophiuride_coefficients(self):
        c = ophiuride(2.0, 3.0)
        assert (c.a0, c.a1, c.a2, c.a3, c.a4) == (-3.0, -1.0, -2.0, 0.0, -1.0)

    def test_cissoid_coefficients(self):
        c = cissoid(2.0)
        assert (c.a0, c.a1, c.a2, c.a3, c.a4) == (4.0, -1.0, 0.0, 0.0, -1.0)

    @given(signed_nz, signed_nz, signed_nz, signed_nz, nz)
    def test_shape_matches_fold_frame_classification(self, a0, a1, a2, a3, mag):
        a4 = mag if a1 > 0 else -mag
        c = GeneralCubic(a0, a1, a2, a3, a4)
        corrected = corrected_criterion(c)
        assume(abs(corrected) > 0.5)
        rep = classify_origin(c)
        n = normalize(c)
        assume(0.5 <= n.alpha <= 8.0)
        assert rep.shape is classify(n.to_params())

    @given(signed_nz, signed_nz, signed_nz, signed_nz, nz)
    def test_discrepancy_only_on_sign_disagreement(self, a0, a1, a2, a3, mag):
        a4 = mag if a1 > 0 else -mag
        c = GeneralCubic(a0, a1, a2, a3, a4)
        rep = classify_origin(c)
        if rep.paper_value * rep.corrected_value > 1e-9:
            assert not rep.discrepancy
