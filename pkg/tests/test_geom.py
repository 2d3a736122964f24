import math

import pytest
from hypothesis import given, strategies as st

from beloch.errors import DegenerateInput
from beloch.geom import (
    Circle,
    CirclePosition,
    Line,
    Point,
    Segment,
    perp_bisector,
    point_segment_distance,
    position_wrt_circle,
    reflect_point,
    segments_intersect,
    side_of,
)

finite = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
small = st.floats(min_value=-8.0, max_value=8.0)


def test_point_distance():
    assert Point(0.0, 0.0).distance_to(Point(3.0, 4.0)) == 5.0


def test_point_rejects_nan():
    with pytest.raises(DegenerateInput):
        Point(float("nan"), 0.0)


class TestLine:
    def test_normalized(self):
        ln = Line.from_coefficients(3.0, 4.0, 10.0)
        assert math.hypot(ln.a, ln.b) == pytest.approx(1.0, abs=1e-15)
        assert ln.a == pytest.approx(0.6)
        assert ln.c == pytest.approx(2.0)

    def test_sign_convention(self):
        # leading nonzero of (a, b) comes out positive
        ln = Line.from_coefficients(-1.0, 2.0, 5.0)
        assert ln.a > 0.0
        vert = Line.from_coefficients(0.0, -3.0, 1.0)
        assert vert.a == 0.0 and vert.b > 0.0

    def test_zero_line_rejected(self):
        with pytest.raises(DegenerateInput):
            Line.from_coefficients(0.0, 0.0, 1.0)

    @given(small, st.sampled_from([1.0, 2.0, 4.0, 0.5, 8.0]))
    def test_scaling_is_bitwise_stable(self, r, k):
        # power-of-two multiples must normalize to the identical triple
        if 0.0 < abs(r) < 1e-100:
            # k*r*r underflows to the subnormal grid and the rescale
            # stops being exact
            return
        base = Line.from_coefficients(1.0, r, -r * r)
        scaled = Line.from_coefficients(k, k * r, -k * r * r)
        assert (base.a, base.b, base.c) == (scaled.a, scaled.b, scaled.c)

    @given(finite, finite, finite)
    def test_eval_measures_signed_distance(self, x, y, c):
        ln = Line.from_coefficients(1.0, 1.0, c)
        p = Point(x, y)
        expect = (x + y + c) / math.sqrt(2.0)
        assert ln.eval(p) == pytest.approx(expect, rel=1e-12, abs=1e-12)


class TestReflection:
    @given(finite, finite, small, small)
    def test_involution(self, x, y, r, c):
        ln = Line.from_coefficients(1.0, r, c)
        p = Point(x, y)
        back = reflect_point(reflect_point(p, ln), ln)
        scale = 1.0 + abs(x) + abs(y) + abs(c)
        assert abs(back.x - x) <= 1e-12 * scale
        assert abs(back.y - y) <= 1e-12 * scale

    @given(finite, finite, small, small)
    def test_midpoint_on_line_and_distance_preserved(self, x, y, r, c):
        ln = Line.from_coefficients(1.0, r, c)
        p = Point(x, y)
        q = reflect_point(p, ln)
        mid = Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))
        scale = 1.0 + abs(x) + abs(y) + abs(c)
        assert abs(ln.eval(mid)) <= 1e-12 * scale
        assert abs(ln.eval(p) + ln.eval(q)) <= 1e-12 * scale

    def test_known_reflection(self):
        ln = Line.from_coefficients(1.0, 0.0, 0.0)  # the y axis
        assert reflect_point(Point(2.0, 3.0), ln) == Point(-2.0, 3.0)


class TestPerpBisector:
    @given(finite, finite, finite, finite)
    def test_equidistance(self, px, py, qx, qy):
        p, q = Point(px, py), Point(qx, qy)
        if p.distance_to(q) < 1e-6:
            return
        ln = perp_bisector(p, q)
        probe = Point(0.3, -0.7)
        d = ln.eval(probe)
        foot = Point(probe.x - d * ln.a, probe.y - d * ln.b)
        scale = 1.0 + abs(px) + abs(py) + abs(qx) + abs(qy)
        assert abs(foot.distance_to(p) - foot.distance_to(q)) <= 1e-9 * scale

    def test_coincident_points_rejected(self):
        with pytest.raises(DegenerateInput):
            perp_bisector(Point(1.0, 2.0), Point(1.0, 2.0))

    @given(finite, finite, finite, finite)
    def test_reflection_swaps_endpoints(self, px, py, qx, qy):
        p, q = Point(px, py), Point(qx, qy)
        if p.distance_to(q) < 1e-6:
            return
        ln = perp_bisector(p, q)
        img = reflect_point(p, ln)
        scale = 1.0 + abs(px) + abs(py) + abs(qx) + abs(qy)
        assert img.distance_to(q) <= 1e-9 * scale


def test_side_of_bands():
    ln = Line.from_coefficients(1.0, 0.0, 0.0)
    assert side_of(ln, Point(1.0, 0.0)) == 1
    assert side_of(ln, Point(-1.0, 0.0)) == -1
    assert side_of(ln, Point(1e-12, 5.0)) == 0


class TestSegments:
    def seg(self, a, b, c, d):
        return Segment(Point(a, b), Point(c, d))

    def test_proper_crossing(self):
        assert segments_intersect(self.seg(0, 0, 2, 2), self.seg(0, 2, 2, 0))

    def test_disjoint(self):
        assert not segments_intersect(self.seg(0, 0, 1, 0), self.seg(2, 1, 3, 1))

    def test_touch_at_endpoint(self):
        assert segments_intersect(self.seg(0, 0, 1, 1), self.seg(1, 1, 2, 0))

    def test_collinear_overlap(self):
        assert segments_intersect(self.seg(0, 0, 2, 0), self.seg(1, 0, 3, 0))

    def test_collinear_gap(self):
        assert not segments_intersect(self.seg(0, 0, 1, 0), self.seg(2, 0, 3, 0))

    def test_degenerate_on_segment(self):
        dot = self.seg(1, 0, 1, 0)
        assert dot.is_degenerate
        assert segments_intersect(self.seg(0, 0, 2, 0), dot)
        assert segments_intersect(dot, self.seg(0, 0, 2, 0))
        assert not segments_intersect(dot, self.seg(0, 1, 2, 1))

    def test_two_degenerate(self):
        assert segments_intersect(self.seg(1, 1, 1, 1), self.seg(1, 1, 1, 1))
        assert not segments_intersect(self.seg(1, 1, 1, 1), self.seg(1, 2, 1, 2))


class TestPointSegmentDistance:
    def test_interior_projection(self):
        s = Segment(Point(0.0, 0.0), Point(4.0, 0.0))
        assert point_segment_distance(Point(2.0, 3.0), s) == 3.0

    def test_clamps_to_endpoint(self):
        s = Segment(Point(0.0, 0.0), Point(4.0, 0.0))
        assert point_segment_distance(Point(7.0, 4.0), s) == 5.0

    def test_degenerate_segment(self):
        s = Segment(Point(1.0, 1.0), Point(1.0, 1.0))
        assert point_segment_distance(Point(4.0, 5.0), s) == 5.0

    @given(finite, finite)
    def test_nonnegative_and_bounded_by_endpoints(self, x, y):
        s = Segment(Point(-1.0, 0.0), Point(2.0, 1.0))
        p = Point(x, y)
        d = point_segment_distance(p, s)
        assert 0.0 <= d <= min(p.distance_to(s.p), p.distance_to(s.q)) + 1e-12


def test_circle_position():
    c = Circle(Point(0.0, 0.0), 2.0)
    assert position_wrt_circle(Point(1.0, 0.0), c) is CirclePosition.INSIDE
    assert position_wrt_circle(Point(2.0, 0.0), c) is CirclePosition.ON
    assert position_wrt_circle(Point(3.0, 0.0), c) is CirclePosition.OUTSIDE


def test_circle_rejects_negative_radius():
    with pytest.raises(DegenerateInput):
        Circle(Point(0.0, 0.0), -1.0)
