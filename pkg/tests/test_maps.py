import math

import numpy as np
import pytest

from helpers import random_polygons, random_projective_map, vertex_error
from pentagram.errors import DegeneratePolygon, MaxIterationsExceeded
from pentagram.maps import (
    DUALITY_SHIFT,
    SURVIVED,
    Termination,
    convexity_horizon,
    dual_convexity_flags,
    inverse_S,
    limit_point_by_shrinking,
    orbit,
    pentagram_D,
)
from pentagram.polygon import Polygon, contains_point, dual_polygon, is_convex, random_convex_polygon
from pentagram.variety import sample_variety

# frozen from a 50-digit two-line intersection oracle (mpmath)
D_RADIUS = 0.38196601125010515  # cos(2pi/5) / cos(pi/5)
S_RADIUS = 2.6180339887498948


def polar(pts):
    return np.hypot(pts[:, 0], pts[:, 1]), np.arctan2(pts[:, 1], pts[:, 0])


class TestRegularPentagon:
    def test_pentagram_map(self, pentagon):
        r, ang = polar(pentagram_D(pentagon).affine())
        np.testing.assert_allclose(r, D_RADIUS, rtol=1e-14)
        np.testing.assert_allclose(ang[0], 0.2 * math.pi, atol=1e-14)

    def test_inverse_map(self, pentagon):
        r, ang = polar(inverse_S(pentagon).affine())
        np.testing.assert_allclose(r, S_RADIUS, rtol=1e-14)
        np.testing.assert_allclose(ang[0], -0.2 * math.pi, atol=1e-14)

    def test_radii_are_reciprocal(self):
        assert D_RADIUS * S_RADIUS == pytest.approx(1.0)


class TestRoundtrip:
    @pytest.mark.parametrize("n", range(5, 13))
    def test_shift_free(self, n):
        for seed in range(12):
            p = Polygon(random_convex_polygon(n, 1000 * n + seed))
            assert vertex_error(pentagram_D(inverse_S(p)), p) <= 1e-9
            assert vertex_error(inverse_S(pentagram_D(p)), p) <= 1e-9

    def test_accepts_homogeneous_input(self, rng):
        p = Polygon(random_convex_polygon(6, 0)).transformed(random_projective_map(rng))
        assert vertex_error(pentagram_D(inverse_S(p)), p) <= 1e-9


def test_d_preserves_convexity():
    for seed in range(1000):
        pts = random_convex_polygon(7, seed)
        assert is_convex(pentagram_D(pts))


def test_inverse_map_breaks_convexity():
    # seed 1: a single application already fails
    assert is_convex(random_convex_polygon(5, 1))
    assert not is_convex(inverse_S(random_convex_polygon(5, 1)))


def test_duality_identity():
    for pts in random_polygons(40, (5, 7)):
        p = Polygon(pts)
        assert vertex_error(pentagram_D(dual_polygon(p)), dual_polygon(inverse_S(p)), DUALITY_SHIFT) <= 1e-9


def test_projective_equivariance(rng):
    for pts in random_polygons(30, (5, 6, 8)):
        g = random_projective_map(rng)
        p = Polygon(pts)
        assert vertex_error(pentagram_D(p.transformed(g)), pentagram_D(p).transformed(g)) <= 1e-9
        assert vertex_error(inverse_S(p.transformed(g)), inverse_S(p).transformed(g)) <= 1e-9


def test_concurrent_diagonals():
    # three consecutive short diagonals through the origin: two image vertices coincide
    v = np.array([[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1], [1, 0, 0]], dtype=float)
    with pytest.raises(DegeneratePolygon):
        pentagram_D(Polygon(v))


class TestOrbit:
    def test_regular_pentagon_survives(self, pentagon):
        rep = orbit(pentagon, "S", 50)
        assert rep.terminated_reason is Termination.REACHED_KMAX
        assert [s.k for s in rep.steps] == list(range(51))
        assert all(s.convex for s in rep.steps)
        assert max(s.d_norm for s in rep.steps) <= 1e-12
        assert all(s.diameter > 0 for s in rep.steps)

    def test_seed7_becomes_nonconvex(self):
        rep = orbit(random_convex_polygon(5, 7), "S", 50)
        assert rep.terminated_reason is Termination.NON_CONVEX
        assert rep.last.k == 1
        assert not rep.last.convex

    def test_d_orbits_stay_convex(self):
        for pts in random_polygons(20, (5, 6, 9)):
            rep = orbit(pts, "D", 20)
            assert rep.terminated_reason is Termination.REACHED_KMAX
            assert all(s.convex for s in rep.steps)

    def test_d_diameters_decrease(self):
        for pts in random_polygons(20, (5, 7)):
            diam = [s.diameter for s in orbit(pts, "D", 10, renormalize=False).steps]
            assert all(b < a for a, b in zip(diam, diam[1:]))

    def test_normalization_does_not_change_verdicts(self):
        pts = random_convex_polygon(6, 11)
        a = orbit(pts, "D", 15, renormalize=True)
        b = orbit(pts, "D", 15, renormalize=False)
        assert [s.convex for s in a.steps] == [s.convex for s in b.steps]
        np.testing.assert_allclose([s.d_norm_normalized for s in a.steps], [s.d_norm_normalized for s in b.steps], rtol=1e-6)

    def test_raw_statistics_without_renormalization(self, pentagon):
        steps = orbit(pentagon, "D", 8, renormalize=False).steps
        np.testing.assert_allclose([s.diameter for s in steps], 2 * math.sin(0.4 * math.pi) * D_RADIUS ** np.arange(9), rtol=1e-9)

    def test_frames_are_normalized(self):
        rep = orbit(random_convex_polygon(5, 3), "D", 5)
        for f in rep.frames:
            np.testing.assert_allclose(f.T @ f / len(f), np.eye(2), atol=1e-9)

    def test_bad_arguments(self, pentagon):
        with pytest.raises(ValueError):
            orbit(pentagon, "X", 5)
        with pytest.raises(ValueError):
            orbit(pentagon, "S", 0)


class TestHorizon:
    def test_regular_pentagon(self, pentagon):
        assert convexity_horizon(pentagon, 50) == SURVIVED

    def test_seed7(self):
        assert convexity_horizon(random_convex_polygon(5, 7), 50) == 1

    def test_variety_pentagon_survives(self):
        for p in sample_variety(5, 3, rng_seed=1):
            assert convexity_horizon(p, 30) == SURVIVED

    def test_dual_criterion_matches(self):
        for pts in random_polygons(60, (5, 6, 7)):
            assert convexity_horizon(pts, 10, reproject=False, criterion="dual") == convexity_horizon(pts, 10, reproject=False)

    def test_dual_flags_stepwise(self):
        for pts in random_polygons(20, (5, 7), base_seed=300) + sample_variety(5, 3, rng_seed=2):
            direct = [s.convex for s in orbit(pts, "S", 10, reproject=False, stop_at_nonconvex=False).steps[1:]]
            flags = dual_convexity_flags(pts, 10)
            assert flags[: len(direct)] == direct

    def test_unknown_criterion(self, pentagon):
        with pytest.raises(ValueError):
            convexity_horizon(pentagon, 5, criterion="spectral")


class TestLimitPoint:
    def test_center(self, pentagon):
        np.testing.assert_allclose(limit_point_by_shrinking(pentagon, 1e-10), (0, 0), atol=1e-10)

    def test_translation(self, pentagon):
        np.testing.assert_allclose(limit_point_by_shrinking(pentagon + (3.0, -2.0), 1e-10), (3, -2), atol=1e-10)

    def test_affine_equivariance(self, rng):
        pts = random_convex_polygon(6, 5)
        a = rng.normal(size=(2, 2)) + 2 * np.eye(2)
        b = np.array([0.3, -4.0])
        np.testing.assert_allclose(limit_point_by_shrinking(pts @ a.T + b), a @ limit_point_by_shrinking(pts) + b, atol=1e-8)

    def test_inside_polygon(self):
        for pts in random_polygons(20, (5, 8)):
            assert contains_point(pts, limit_point_by_shrinking(pts))

    def test_iteration_cap(self):
        with pytest.raises(MaxIterationsExceeded):
            limit_point_by_shrinking(random_convex_polygon(5, 0), 1e-300, max_iter=3)
