"""Hyperbolic realization: side lengths, inradii, dual tiles, disk layouts.

Curvature -1 throughout.  Points live in the Poincare unit disk and
orientation-preserving isometries are 2x2 complex matrices
``[[a, b], [conj(b), conj(a)]]`` with ``|a|^2 - |b|^2 = 1``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .cyclic import CyclicType, require_hyperbolic

BISECTION_STEPS = 200
LENGTH_TOL = 1e-12


class GeometryError(ValueError):
    pass


def _check_polygon(n: int, ell: float) -> None:
    if int(n) != n or n < 3:
        raise GeometryError(f"polygon size must be an integer >= 3, got {n}")
    if not (ell > 0 and math.isfinite(ell)):
        raise GeometryError(f"side length must be positive and finite, got {ell}")


def interior_angle(n: int, ell: float) -> float:
    """Interior angle of the regular ``n``-gon with side ``ell``."""
    _check_polygon(n, ell)
    return 2.0 * math.asin(math.cos(math.pi / n) / math.cosh(ell / 2.0))


def inradius(n: int, ell: float) -> float:
    """Distance from the center of the regular ``n``-gon to a side midpoint."""
    _check_polygon(n, ell)
    return math.asinh(math.tanh(ell / 2.0) / math.tan(math.pi / n))


def circumradius(n: int, ell: float) -> float:
    _check_polygon(n, ell)
    return math.asinh(math.sinh(ell / 2.0) / math.sin(math.pi / n))


def angle_excess(sizes, ell: float) -> float:
    return sum(interior_angle(k, ell) for k in sizes) - 2.0 * math.pi


def solve_side_length(t: CyclicType) -> float:
    """The unique side length at which the corner angles of ``t`` sum to 2*pi."""
    require_hyperbolic(t)
    sizes = t.entries
    lo, hi = 0.0, 1.0
    while angle_excess(sizes, hi) > 0:
        lo, hi = hi, 2.0 * hi
        if hi > 1e3:
            raise GeometryError("failed to bracket the side length")
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if mid <= 0:
            break
        if angle_excess(sizes, mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < LENGTH_TOL:
            break
    return 0.5 * (lo + hi)


def monohedral_side_length(k: int, d: int) -> float:
    """Closed form for ``d`` regular ``k``-gons at a vertex, e.g. [7,7,7]."""
    return 2.0 * math.acosh(math.cos(math.pi / k) / math.sin(math.pi / d))


@dataclass(frozen=True)
class DualTile:
    corners: tuple[int, ...]
    angles: tuple[float, ...]
    sides: tuple[float, ...]
    area: float
    side_length: float

    def side_sizes(self) -> list[tuple[int, int]]:
        """Corner-size pair bounding each side."""
        c = self.corners
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def dual_tile(t: CyclicType) -> DualTile:
    """Convex polygon dual to a fan: one corner of angle 2*pi/k per face."""
    require_hyperbolic(t)
    ell = solve_side_length(t)
    ks = t.entries
    d = len(ks)
    r = {k: inradius(k, ell) for k in set(ks)}
    sides = tuple(r[ks[i]] + r[ks[(i + 1) % d]] for i in range(d))
    angles = tuple(2.0 * math.pi / k for k in ks)
    area = (d - 2) * math.pi - sum(angles)
    return DualTile(tuple(ks), angles, sides, area, ell)


# ----------------------------------------------------------------------
# Poincare disk isometries

def _normalize(m: np.ndarray) -> np.ndarray:
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return m / np.sqrt(det)


def translation(a: complex) -> np.ndarray:
    """Isometry taking 0 to ``a``."""
    return _normalize(np.array([[1.0, a], [np.conj(a), 1.0]], dtype=complex))


def rotation(theta: float) -> np.ndarray:
    h = 0.5 * theta
    return np.array([[complex(math.cos(h), math.sin(h)), 0], [0, complex(math.cos(h), -math.sin(h))]])


def apply(m: np.ndarray, z):
    return (m[0, 0] * z + m[0, 1]) / (m[1, 0] * z + m[1, 1])


def compose(*ms: np.ndarray) -> np.ndarray:
    out = np.eye(2, dtype=complex)
    for m in ms:
        out = out @ m
    return _normalize(out)


def disk_distance(z: complex, w: complex) -> float:
    return 2.0 * math.atanh(abs(z - w) / abs(1 - np.conj(z) * w))


def edge_transfer(p0: complex, p1: complex, q0: complex, q1: complex) -> np.ndarray:
    """Isometry with p0 -> q0 and the direction of p1 onto that of q1."""
    s = translation(-p0)
    u = translation(-q0)
    w1 = apply(s, p1)
    w2 = apply(u, q1)
    theta = float(np.angle(w2) - np.angle(w1))
    return compose(translation(q0), rotation(theta), s)


class LayoutError(RuntimeError):
    pass


@dataclass
class DiskLayout:
    side_length: float
    points: dict[int, complex]
    faces: dict[int, list[int]]
    max_edge_error: float
    max_closure_error: float

    def face_points(self, f: int) -> list[complex]:
        return [self.points[v] for v in self.faces[f]]


def regular_polygon(k: int, ell: float) -> np.ndarray:
    """Vertices of the regular ``k``-gon centered at 0, counterclockwise,
    with vertex 0 at angle ``-pi/2 - pi/k`` so that edge 0 -> 1 is horizontal."""
    rho = math.tanh(circumradius(k, ell) / 2.0)
    start = -math.pi / 2 - math.pi / k
    angles = start + 2 * math.pi * np.arange(k) / k
    return rho * np.exp(1j * angles)


def layout_patch(p, edge_tol: float = 1e-8, closure_tol: float = 1e-6) -> DiskLayout:
    """Place every vertex of ``p`` in the disk.

    The origin vertex sits at 0 with its first edge along the positive real
    axis; every other face is placed by the isometry carrying a canonical
    regular polygon onto an already placed edge, breadth first.
    """
    if p.n_faces == 0:
        return DiskLayout(0.0, {}, {}, 0.0, 0.0)
    ell = solve_side_length(p.type)
    canon = {k: regular_polygon(k, ell) for k in set(p.fsize)}
    points: dict[int, complex] = {}
    faces: dict[int, list[int]] = {}
    o = p.origin_vertex
    h0 = p.vhe[o]
    f0 = p.hface[h0]
    if f0 < 0:
        h0 = p.twin[p.prev[h0]]
        f0 = p.hface[h0]
    points[o] = 0j
    points[p.dest(h0)] = complex(math.tanh(ell / 2.0), 0.0)
    queue = deque([h0])
    placed = set()
    worst_edge = 0.0
    while queue:
        h = queue.popleft()
        f = p.hface[h]
        if f < 0 or f in placed:
            continue
        placed.add(f)
        # cycle of the face starting at h
        cyc_h = [h]
        x = p.next[h]
        while x != h:
            cyc_h.append(x)
            x = p.next[x]
        verts = [p.origin[e] for e in cyc_h]
        k = len(verts)
        poly = canon[k]
        m = edge_transfer(poly[0], poly[1], points[verts[0]], points[verts[1]])
        img = apply(m, poly)
        for i, v in enumerate(verts):
            z = complex(img[i])
            if v in points:
                err = abs(z - points[v])
                worst_edge = max(worst_edge, err)
            else:
                points[v] = z
        faces[f] = verts
        for e in cyc_h:
            tw = p.twin[e]
            if p.hface[tw] >= 0 and p.hface[tw] not in placed:
                queue.append(tw)
    if len(placed) != p.n_faces:
        raise LayoutError("patch is not connected through edges")
    for z in points.values():
        if not abs(z) < 1.0:
            raise LayoutError("numerical drift pushed a vertex out of the disk")
    # edge lengths
    max_edge = 0.0
    for h in range(len(p.twin)):
        if p.twin[h] < h:
            continue
        a, b = p.origin[h], p.origin[p.twin[h]]
        err = abs(disk_distance(points[a], points[b]) - ell)
        max_edge = max(max_edge, err)
    closure = 0.0
    for v in range(p.n_vertices):
        if p.vinterior[v]:
            total = sum(interior_angle(p.fsize[f], ell) for f in p.vertex_faces(v))
            closure = max(closure, abs(total - 2 * math.pi))
    layout = DiskLayout(ell, points, faces, max_edge, max(closure, worst_edge))
    if max_edge > edge_tol:
        raise LayoutError(f"edge length drift {max_edge:.3g} exceeds {edge_tol}")
    return layout


def face_centers(p, layout: DiskLayout) -> dict[int, complex]:
    """Image of each face's canonical center."""
    out = {}
    ell = layout.side_length
    for f, verts in layout.faces.items():
        k = len(verts)
        poly = regular_polygon(k, ell)
        m = edge_transfer(poly[0], poly[1], layout.points[verts[0]], layout.points[verts[1]])
        out[f] = complex(apply(m, 0j))
    return out


def overlapping_faces(p, layout: DiskLayout, tol: float = 1e-7) -> list[tuple[int, int]]:
    """Face pairs whose inscribed disks intersect (an embedding failure)."""
    centers = face_centers(p, layout)
    ids = sorted(centers)
    z = np.array([centers[f] for f in ids])
    r = np.array([inradius(p.fsize[f], layout.side_length) for f in ids])
    bad = []
    for i in range(len(ids)):
        w = z[i + 1:]
        num = np.abs(w - z[i])
        den = np.abs(1 - np.conj(z[i]) * w)
        dist = 2 * np.arctanh(np.minimum(num / den, 1 - 1e-16))
        hits = np.nonzero(dist < r[i] + r[i + 1:] - tol)[0]
        bad.extend((ids[i], ids[i + 1 + j]) for j in hits)
    return bad
