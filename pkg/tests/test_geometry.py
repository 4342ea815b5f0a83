from __future__ import annotations

import math

import numpy as np
import pytest

from sublinbodies.distributions import WeightedSample
from sublinbodies.geometry import (
    DirectionGrid,
    Halfspace,
    Polygon2,
    SupportField,
    aumann_integral,
    body_from_support,
    circumscription_gap,
    contains,
    containment_excess,
    convex_hull,
    exact_avg_quantile_body,
    guaranteed_inner,
    halfspace_intersection,
    hausdorff,
    intersect_halfplanes,
    minkowski_sum,
    polar,
    sublinearity_violation,
    support_touchpoint,
    support_touchpoints,
)
from sublinbodies.shapes import make_rng, random_polygon
from sublinbodies.verify import random_sample

SQUARE = Polygon2(np.array([[-1, -1], [1, -1], [1, 1], [-1, 1]], float))
CORNERS = WeightedSample(SQUARE.vertices)


def same_polygon(P, Q, tol=1e-9):
    return hausdorff(P, Q) <= tol


# halfspace intersection


def test_axis_halfspaces_give_square():
    hs = [Halfspace([1, 0], 1), Halfspace([-1, 0], 1), Halfspace([0, 1], 1), Halfspace([0, -1], 1)]
    P, unbounded = halfspace_intersection(hs)
    assert not unbounded
    assert same_polygon(P, SQUARE)


def test_circumscribed_polygon_near_disk():
    g = DirectionGrid.uniform(360)
    P, _ = intersect_halfplanes(g.vectors, np.ones(360))
    r = np.linalg.norm(P.vertices, axis=1)
    assert np.all(r >= 1 - 1e-12)
    assert r.max() - 1 <= 1 / math.cos(math.pi / 360) - 1 + 1e-12


def test_contradictory_halfspaces_empty():
    hs = [Halfspace([1, 0], -1), Halfspace([-1, 0], -1), Halfspace([0, 1], 1), Halfspace([0, -1], 1)]
    P, _ = halfspace_intersection(hs)
    assert P.is_empty


def test_unbounded_detected():
    _, unbounded = intersect_halfplanes(np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]), np.ones(3))
    assert unbounded


# hulls


def test_hull_of_corners_and_interior():
    pts = np.vstack([SQUARE.vertices, [[0, 0], [0.5, 0.2]]])
    assert same_polygon(convex_hull(pts), SQUARE, 0.0)


def test_hull_inside_disk():
    rng = make_rng(0)
    th = rng.uniform(0, 2 * np.pi, 1000)
    r = np.sqrt(rng.uniform(0, 1, 1000))
    H = convex_hull(np.stack([r * np.cos(th), r * np.sin(th)], axis=1))
    assert np.all(np.linalg.norm(H.vertices, axis=1) <= 1)


def test_hull_of_point_and_segment():
    assert convex_hull([[1.0, 2.0], [1.0, 2.0]]).n == 1
    assert convex_hull([[0, 0], [1, 1], [2, 2]]).dim == 1


# touch points and exact bodies


def test_touchpoint_two_atoms():
    mu = WeightedSample([[0, 0], [1, 0]])
    h, x = support_touchpoint(mu, 0.5, [1.0, 0.0])
    assert h == pytest.approx(1.0)
    np.testing.assert_allclose(x, [1.0, 0.0])


def test_touchpoint_alpha_one_barycenter():
    mu = WeightedSample([[0, 0], [3, 0], [0, 3]], [0.2, 0.3, 0.5])
    for u in DirectionGrid.uniform(7).vectors:
        np.testing.assert_allclose(support_touchpoint(mu, 1.0, u)[1], mu.mean, atol=1e-12)


def test_touchpoint_square_corner():
    h, x = support_touchpoint(CORNERS, 0.25, np.array([1.0, 1.0]) / math.sqrt(2))
    assert h == pytest.approx(math.sqrt(2))
    np.testing.assert_allclose(x, [1.0, 1.0])


def test_exact_body_square_quarter():
    assert same_polygon(exact_avg_quantile_body(CORNERS, 0.25), SQUARE)


def test_exact_body_square_half():
    diamond = Polygon2(np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], float))
    assert same_polygon(exact_avg_quantile_body(CORNERS, 0.5), diamond)


def test_exact_body_alpha_one():
    mu = WeightedSample([[0, 0], [3, 0], [0, 3]], [0.2, 0.3, 0.5])
    P = exact_avg_quantile_body(mu, 1.0)
    assert P.n == 1
    np.testing.assert_allclose(P.vertices[0], mu.mean, atol=1e-12)


def test_exact_body_support_matches_touchpoints():
    mu = random_sample(make_rng(4), 30)
    P = exact_avg_quantile_body(mu, 0.3)
    U = DirectionGrid.uniform(97, 0.01).vectors
    h, _ = support_touchpoints(mu, 0.3, U)
    np.testing.assert_allclose(P.support(U), h, atol=1e-12)


# bodies from support fields


def test_disk_field_gap():
    g = DirectionGrid.uniform(720)
    est = body_from_support(SupportField(g, np.ones(720)))
    assert est.gap <= 1e-4 * 2


def test_field_from_exact_body():
    mu = random_sample(make_rng(8), 25)
    P = exact_avg_quantile_body(mu, 0.4)
    g = DirectionGrid.uniform(512)
    h, x = support_touchpoints(mu, 0.4, g.vectors)
    est = body_from_support(SupportField(g, h, x))
    assert hausdorff(est.inner, P) <= 1e-10
    assert hausdorff(est.outer, P) <= est.gap + 1e-12


def test_guaranteed_inner_inside_every_consistent_body():
    g = DirectionGrid.uniform(40)
    outer, _ = intersect_halfplanes(g.vectors, np.ones(40))
    inner = guaranteed_inner(outer)
    # alternate vertices touch every edge of the outer polygon
    for shift in (0, 1):
        body = Polygon2(outer.vertices[shift::2])
        np.testing.assert_allclose(body.support(g.vectors), 1.0, atol=1e-12)
        assert contains(body, inner, tol=1e-12)
    assert contains(outer, inner, tol=1e-12)


def test_constant_touch_points():
    g = DirectionGrid.uniform(16)
    p = np.array([0.3, -0.2])
    est = body_from_support(SupportField(g, g.vectors @ p, np.tile(p, (16, 1))))
    assert est.inner.n == 1
    assert est.gap <= 1e-12


def test_sublinearity_of_polygon_field():
    g = DirectionGrid.uniform(64)
    P = random_polygon(make_rng(2), 9).as_polygon()
    assert sublinearity_violation(SupportField(g, P.support(g.vectors))) <= 1e-9


# distances


def test_hausdorff_identity_and_dilate():
    assert hausdorff(SQUARE, SQUARE) == 0.0
    assert hausdorff(SQUARE, SQUARE.scaled(0.9)) == pytest.approx(0.1 * math.sqrt(2), abs=1e-12)


def test_hausdorff_fast_path_agrees():
    rng = make_rng(6)
    g1, g2 = DirectionGrid.uniform(200), DirectionGrid.uniform(150, 0.3)
    P, _ = intersect_halfplanes(g1.vectors, 1 + 0.1 * rng.random(200))
    Q, _ = intersect_halfplanes(g2.vectors, 1 + 0.1 * rng.random(150))
    from sublinbodies.geometry import directed_hausdorff

    brute = max(directed_hausdorff(P, Q), directed_hausdorff(Q, P))
    assert hausdorff(P, Q) == pytest.approx(brute, abs=1e-12)


# Minkowski sums and polars


def test_minkowski_point_and_square():
    t = Polygon2(np.array([[0.5, -0.25]]))
    assert same_polygon(minkowski_sum(SQUARE, t), SQUARE.translated([0.5, -0.25]))
    assert same_polygon(minkowski_sum(SQUARE, SQUARE), SQUARE.scaled(2.0))


def test_minkowski_two_segments():
    a = Polygon2(np.array([[-1, 0], [1, 0]], float))
    b = Polygon2(np.array([[0, -1], [0, 1]], float))
    assert same_polygon(minkowski_sum(a, b), SQUARE)


def test_minkowski_support_additive():
    rng = make_rng(1)
    P, Q = random_polygon(rng, 6).as_polygon(), random_polygon(rng, 5).as_polygon()
    U = DirectionGrid.uniform(50).vectors
    np.testing.assert_allclose(minkowski_sum(P, Q).support(U), P.support(U) + Q.support(U), atol=1e-12)


def test_polar_square_is_cross():
    cross = Polygon2(np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], float))
    assert same_polygon(polar(SQUARE), cross)


def test_polar_homogeneity():
    assert same_polygon(polar(SQUARE.scaled(2.0)), polar(SQUARE).scaled(0.5))


def test_polar_of_near_disk():
    g = DirectionGrid.uniform(256)
    P, _ = intersect_halfplanes(g.vectors, np.ones(256))
    r = np.linalg.norm(polar(P).vertices, axis=1)
    assert np.all(np.abs(r - 1) <= 1e-3)


# Aumann integrals


def test_aumann_identity():
    g = DirectionGrid.uniform(32)
    f = SupportField(g, SQUARE.support(g.vectors))
    np.testing.assert_allclose(aumann_integral([(1.0, f)]).values, f.values)


def test_aumann_midpoint_translate():
    g = DirectionGrid.uniform(32)
    a = SupportField(g, SQUARE.translated([1, 0]).support(g.vectors))
    b = SupportField(g, SQUARE.translated([-1, 2]).support(g.vectors))
    mid = aumann_integral([(0.5, a), (0.5, b)])
    np.testing.assert_allclose(mid.values, SQUARE.translated([0, 1]).support(g.vectors), atol=1e-12)


# containment


def test_contains_cases():
    assert contains(SQUARE, SQUARE.scaled(0.99))
    assert not contains(SQUARE, SQUARE.translated([0.5, 0.0]))
    assert contains(SQUARE, SQUARE, tol=1e-12)
    assert containment_excess(SQUARE, Polygon2.empty()) == -math.inf


def test_body_json_empty():
    from sublinbodies.geometry import BodyEstimate

    e = Polygon2.empty()
    assert BodyEstimate(e, e, 0.0).to_json() == {"empty": True}


def test_circumscription_gap_formula():
    g = DirectionGrid.uniform(720)
    assert circumscription_gap(2.0, g) == pytest.approx(2.0 * (1 / math.cos(math.pi / 720) - 1), rel=1e-12)
