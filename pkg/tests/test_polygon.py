import json
import math

import numpy as np
import pytest

from helpers import hom, random_polygons, vertex_error
from pentagram.errors import DegeneratePolygon, TooFewVertices, VertexOnChartLine
from pentagram.polygon import (
    DUAL_SHIFT,
    Polygon,
    centroid_inertia_normalize,
    contains_point,
    convexity_in_chart,
    cross2,
    dual_polygon,
    is_convex,
    orient_ccw,
    random_convex_polygon,
    read_polygon_json,
    regular_polygon,
    signed_area,
    write_polygon_json,
)
from pentagram.projective import LINE_AT_INFINITY, ORIGIN, to_affine

DART = np.array([(0, 0), (2, 0), (2, 2), (1, 0.5), (0, 2)], dtype=float)


class TestPolygonType:
    def test_lifts_affine_vertices(self, pentagon):
        p = Polygon.from_affine(pentagon)
        assert p.n == 5
        np.testing.assert_allclose(p.affine(), pentagon, atol=1e-15)
        np.testing.assert_allclose(np.linalg.norm(p.vertices, axis=1), 1.0)

    def test_vertices_read_only(self, pentagon):
        p = Polygon(pentagon)
        with pytest.raises(ValueError):
            p.vertices[0, 0] = 3.0

    def test_too_few_vertices(self):
        with pytest.raises(TooFewVertices, match="at least 5"):
            Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])

    def test_repeated_vertex(self, pentagon):
        pts = pentagon.copy()
        pts[1] = pts[0]
        with pytest.raises(DegeneratePolygon):
            Polygon(pts)

    def test_collinear_triple(self):
        with pytest.raises(DegeneratePolygon, match="collinear"):
            Polygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])

    def test_shifted_labels(self, pentagon):
        p = Polygon(pentagon)
        np.testing.assert_allclose(p.shifted(2)[0], p[2])
        np.testing.assert_allclose(p.shifted(-1)[0], p[4])


class TestConvexity:
    def test_regular_pentagon(self, pentagon):
        assert is_convex(pentagon)
        assert is_convex(pentagon[::-1])

    def test_reflex_vertex(self):
        assert not is_convex(DART)

    def test_collinear_raises(self):
        with pytest.raises(DegeneratePolygon):
            is_convex(np.array([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)], dtype=float))

    def test_star_is_not_convex(self):
        star = regular_polygon(5)[[0, 2, 4, 1, 3]]
        assert not is_convex(star)

    def test_vertex_at_infinity(self, pentagon):
        v = hom(pentagon).copy()
        v[2] = (1.0, 1.0, 0.0)
        assert not is_convex(Polygon(v))


class TestDual:
    def test_regular_pentagon(self, pentagon):
        # side i is n_i . x = cos(pi/5), read in the dual chart (a/c, b/c)
        theta = (2 * np.arange(5) + 1) * math.pi / 5
        expected = -np.column_stack([np.cos(theta), np.sin(theta)]) / math.cos(math.pi / 5)
        np.testing.assert_allclose(dual_polygon(pentagon).affine(), expected, atol=1e-14)
        r = np.linalg.norm(expected, axis=1)
        np.testing.assert_allclose(r, 1 / math.cos(math.pi / 5))

    def test_involution(self):
        for pts in random_polygons(50, (5, 6, 7, 9)):
            p = Polygon(pts)
            assert vertex_error(dual_polygon(dual_polygon(p)), p, DUAL_SHIFT) <= 1e-10

    def test_side_through_origin(self):
        pts = np.array([(-1, 1), (1, -1), (2, 0), (2, 2), (0, 2)], dtype=float)
        assert is_convex(pts)
        d = dual_polygon(pts)
        # side 0 is x + y = 0: the dual point (1, 1, 0) is at infinity of the dual chart
        assert vertex_error([d[0]], [[1.0, 1.0, 0.0]]) < 1e-15
        assert not is_convex(d)

    def test_lemma_dual_is_convex_around_infinity(self):
        count = 0
        for seed in range(200):
            pts = random_convex_polygon(5, seed)
            if not contains_point(pts, (0.0, 0.0)):
                continue
            count += 1
            dual = dual_polygon(pts)
            # chart of the dual plane omitting the point O: the line at infinity sits at (0, 0)
            assert convexity_in_chart(dual, ORIGIN)
            assert contains_point(to_affine(dual.vertices), (0.0, 0.0))
            if count == 100:
                break
        assert count == 100


class TestChart:
    def test_line_at_infinity(self, pentagon):
        assert convexity_in_chart(pentagon, LINE_AT_INFINITY)

    def test_line_through_interior(self, pentagon):
        assert not convexity_in_chart(pentagon, (1.0, 0.3, -0.1))

    def test_vertex_on_chart_line(self, pentagon):
        with pytest.raises(VertexOnChartLine):
            convexity_in_chart(pentagon, (1.0, 0.0, -1.0))  # x = 1 passes through vertex 0

    def test_choice_of_chart_map_irrelevant(self, rng):
        for pts in random_polygons(40, (5, 7)):
            line = rng.normal(size=3)
            verdicts = {convexity_in_chart(pts, line, basis_seed=s) for s in (None, 1, 2, 3)}
            assert len(verdicts) == 1


class TestNormalize:
    def test_moments(self, rng):
        pts = random_convex_polygon(7, 3) @ rng.normal(size=(2, 2)) + (4.0, -1.0)
        q, m = centroid_inertia_normalize(pts)
        np.testing.assert_allclose(q.mean(axis=0), 0, atol=1e-13)
        np.testing.assert_allclose(q.T @ q / len(q), np.eye(2), atol=1e-12)
        assert abs(q[0, 1]) < 1e-13 and q[0, 0] > 0
        np.testing.assert_allclose(to_affine(hom(pts) @ m.T), q, atol=1e-12)

    def test_already_normalized(self):
        q, _ = centroid_inertia_normalize(random_convex_polygon(6, 1))
        q2, m2 = centroid_inertia_normalize(q)
        np.testing.assert_allclose(q2, q, atol=1e-13)
        np.testing.assert_allclose(m2, np.eye(3), atol=1e-13)

    def test_translation(self):
        q, _ = centroid_inertia_normalize(random_convex_polygon(6, 1))
        q2, m2 = centroid_inertia_normalize(q + (5.0, 7.0))
        np.testing.assert_allclose(q2, q, atol=1e-13)
        expected = np.eye(3)
        expected[:2, 2] = (-5.0, -7.0)
        np.testing.assert_allclose(m2, expected, atol=1e-12)

    def test_scale_quotient(self):
        pts = random_convex_polygon(5, 9)
        np.testing.assert_allclose(centroid_inertia_normalize(3.7 * pts)[0], centroid_inertia_normalize(pts)[0], atol=1e-13)

    def test_rank_deficient(self):
        with pytest.raises(DegeneratePolygon):
            centroid_inertia_normalize(np.column_stack([np.arange(5.0), np.arange(5.0)]))


class TestSampler:
    def test_convex_and_deterministic(self):
        a = random_convex_polygon(5, 1)
        assert is_convex(a)
        np.testing.assert_array_equal(a, random_convex_polygon(5, 1))
        assert not np.array_equal(a, random_convex_polygon(5, 2))

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_twelve_gon(self, seed):
        pts = random_convex_polygon(12, seed)
        turns = cross2(pts - np.roll(pts, 1, axis=0), np.roll(pts, -1, axis=0) - pts)
        assert np.all(turns > 0)

    def test_shape_constraints(self):
        for n in range(5, 10):
            pts = random_convex_polygon(n, n)
            r = np.linalg.norm(pts, axis=1)
            assert np.all((r >= 0.5) & (r <= 1.0))
            ang = np.unwrap(np.arctan2(pts[:, 1], pts[:, 0]))
            gaps = np.diff(np.append(ang, ang[0] + 2 * math.pi))
            assert np.all(gaps >= 0.1 / n)
            assert signed_area(pts) > 0

    def test_rejects_small_n(self):
        with pytest.raises(TooFewVertices):
            random_convex_polygon(4, 0)


def test_orient_ccw(pentagon):
    assert signed_area(orient_ccw(pentagon[::-1])) > 0


def test_json_roundtrip(tmp_path, pentagon):
    path = tmp_path / "p.json"
    write_polygon_json(path, pentagon)
    np.testing.assert_array_equal(read_polygon_json(path), pentagon)
    assert json.loads(path.read_text())["vertices"][0] == [1.0, 0.0]
    assert [f.name for f in tmp_path.iterdir()] == ["p.json"]


def test_json_four_vertices(tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    with pytest.raises(TooFewVertices, match="n must be at least 5"):
        read_polygon_json(path)
