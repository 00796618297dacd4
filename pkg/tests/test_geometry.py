from __future__ import annotations

import cmath
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tessella.cyclic import CyclicType, Geometry, classify
from tessella.families import kn
from tessella.geometry import (GeometryError, angle_excess, apply, circumradius, compose, disk_distance,
                               dual_tile, edge_transfer, face_centers, inradius, interior_angle,
                               layout_patch, monohedral_side_length, overlapping_faces, rotation,
                               solve_side_length, translation)
from tessella.patch import grow, new_fan


def random_hyperbolic(rng):
    while True:
        d = rng.randint(3, 8)
        e = [rng.randint(3, 30) for _ in range(d)]
        if classify(e) is Geometry.HYPERBOLIC:
            return CyclicType(e)


def angle_at(p, a, b):
    """Angle at ``p`` of the geodesic triangle p, a, b (move p to 0 first)."""
    m = translation(-p)
    wa, wb = apply(m, a), apply(m, b)
    x = abs(cmath.phase(wb) - cmath.phase(wa))
    return min(x, 2 * math.pi - x)


def test_angle_closure_random_types():
    rng = random.Random(20240611)
    for _ in range(100):
        t = random_hyperbolic(rng)
        ell = solve_side_length(t)
        assert abs(sum(interior_angle(k, ell) for k in t) - 2 * math.pi) < 1e-10


def test_heptagon_closed_form():
    ell = solve_side_length(CyclicType([7, 7, 7]))
    assert abs(ell - monohedral_side_length(7, 3)) < 1e-10


@pytest.mark.parametrize("ell", [0.5, 1.0, 2.0])
def test_inradius_increasing(ell):
    r = [inradius(n, ell) for n in range(3, 65)]
    assert all(b > a for a, b in zip(r, r[1:]))


@given(st.integers(3, 40), st.floats(0.05, 4.0))
def test_polygon_relations_by_law_of_cosines(n, ell):
    R = circumradius(n, ell)
    # central triangle with sides R, R, ell and apex angle 2 pi / n
    assert math.isclose(math.cosh(ell), math.cosh(R) ** 2 - math.sinh(R) ** 2 * math.cos(2 * math.pi / n),
                        rel_tol=1e-9)
    # base angle of that triangle is half the interior angle
    cos_beta = math.cosh(R) * (math.cosh(ell) - 1) / (math.sinh(R) * math.sinh(ell))
    assert math.isclose(2 * math.acos(min(1.0, cos_beta)), interior_angle(n, ell), rel_tol=1e-7, abs_tol=1e-9)
    # right triangle center, midpoint, vertex
    r = inradius(n, ell)
    assert math.isclose(math.cosh(R), math.cosh(r) * math.cosh(ell / 2), rel_tol=1e-9)


def test_dual_area_examples():
    d = dual_tile(CyclicType([4, 5, 4, 5]))
    assert abs(d.area - math.pi / 5) < 1e-9
    rng = random.Random(7)
    for _ in range(30):
        t = random_hyperbolic(rng)
        assert abs(dual_tile(t).area - math.pi * float(t.angle_sum - 2)) < 1e-9


@pytest.mark.parametrize("t", [[4, 5, 4, 5], [7, 7, 7], [3, 5, 7, 5, 11, 5, 13, 5, 11, 5, 7, 5, 11, 5]])
def test_dual_tile_measured_in_a_layout(t):
    """Area, angles and sides of the dual tile measured from placed face centers."""
    t = CyclicType(t)
    d = dual_tile(t)
    p = new_fan(t)
    lay = layout_patch(p)
    centers = face_centers(p, lay)
    ring = p.vertex_faces(p.origin_vertex)
    o = lay.points[p.origin_vertex]
    area = 0.0
    for i, f in enumerate(ring):
        g = ring[(i + 1) % len(ring)]
        a, b = centers[f], centers[g]
        area += math.pi - angle_at(o, a, b) - angle_at(a, o, b) - angle_at(b, o, a)
        assert math.isclose(disk_distance(a, b), inradius(p.fsize[f], d.side_length)
                            + inradius(p.fsize[g], d.side_length), rel_tol=1e-9)
        prev = centers[ring[i - 1]]
        assert math.isclose(angle_at(a, prev, b), 2 * math.pi / p.fsize[f], rel_tol=1e-8)
    assert abs(area - d.area) < 1e-9


@given(st.complex_numbers(max_magnitude=0.9), st.complex_numbers(max_magnitude=0.9),
       st.complex_numbers(max_magnitude=0.9), st.floats(-3.0, 3.0))
def test_isometries_preserve_distance(a, z, w, theta):
    m = compose(translation(a), rotation(theta))
    assert math.isclose(disk_distance(z, w), disk_distance(apply(m, z), apply(m, w)), rel_tol=1e-7, abs_tol=1e-9)


@given(st.complex_numbers(max_magnitude=0.8), st.complex_numbers(max_magnitude=0.8))
def test_edge_transfer_maps_edge(p0, q0):
    ell = 0.7
    p1 = apply(translation(p0), complex(math.tanh(ell / 2), 0))
    q1 = apply(translation(q0), cmath.exp(0.3j) * math.tanh(ell / 2))
    m = edge_transfer(p0, p1, q0, q1)
    assert abs(apply(m, p0) - q0) < 1e-9
    assert abs(apply(m, p1) - q1) < 1e-7


def test_layout_is_an_embedding():
    p = grow(new_fan(CyclicType([4, 5, 4, 5])), 2)
    lay = layout_patch(p)
    assert lay.max_edge_error < 1e-8
    assert lay.max_closure_error < 1e-6
    assert overlapping_faces(p, lay) == []
    for f, verts in lay.faces.items():
        c = face_centers(p, lay)[f]
        R = circumradius(p.fsize[f], lay.side_length)
        assert all(abs(disk_distance(c, lay.points[v]) - R) < 1e-7 for v in verts)


def test_kn_layout_closes():
    p = grow(new_fan(kn(1)), 1)
    lay = layout_patch(p)
    assert lay.max_closure_error < 1e-9
    assert overlapping_faces(p, lay) == []


def test_side_length_errors():
    with pytest.raises(ValueError):
        solve_side_length(CyclicType([6, 6, 6]))
    with pytest.raises(GeometryError):
        interior_angle(2, 1.0)
    with pytest.raises(GeometryError):
        inradius(5, -1.0)


def test_excess_sign_brackets_solution():
    t = CyclicType([4, 5, 4, 5])
    ell = solve_side_length(t)
    assert angle_excess(t, ell * 0.99) > 0 > angle_excess(t, ell * 1.01)
