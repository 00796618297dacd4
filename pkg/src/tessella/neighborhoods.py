"""Exhaustive neighborhoods of a single face.

A face is placed as part of a fan (its first corner complete) and the fans
at its remaining corners are completed in every possible way with the
patch engine.  The result lists, for each way, the sizes of the faces
sharing an edge with the central face and the full fan at every corner.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator

from .cyclic import CyclicType
from .patch import Patch, PatchError, new_fan


@dataclass(frozen=True)
class NeighborhoodWord:
    """Surroundings of one face, up to rotation/reflection of the face.

    ``edges[j]`` is the face across edge ``j``; ``fans[j]`` is the corner
    word at the vertex where edge ``j`` starts, beginning with the central
    face and read counterclockwise (so it ends with ``edges[j]`` and its
    second entry is ``edges[j-1]``).
    """
    center: int
    edges: tuple[int, ...]
    fans: tuple[tuple[int, ...], ...] = ()

    def contains(self, size: int) -> bool:
        return size in self.edges


def _symmetries(edges, fans):
    s = len(edges)
    for j in range(s):
        e = edges[j:] + edges[:j]
        f = fans[j:] + fans[:j] if fans else ()
        yield e, f
    # mirror: edge j maps to edge -j-1, corner j (start of edge j) to corner -j
    redges = tuple(edges[(-j - 1) % s] for j in range(s))
    rfans = tuple((fans[(-j) % s][0],) + tuple(reversed(fans[(-j) % s][1:])) for j in range(s)) if fans else ()
    for j in range(s):
        yield redges[j:] + redges[:j], (rfans[j:] + rfans[:j] if rfans else ())


def canonical_neighborhood(center: int, edges, fans=()) -> NeighborhoodWord:
    edges = tuple(edges)
    fans = tuple(tuple(f) for f in fans)
    best = min(_symmetries(edges, fans))
    return NeighborhoodWord(center, best[0], best[1])


def face_ring(p: Patch, f: int) -> list[int]:
    """Faces across each edge of ``f``, in edge order (-1 on the boundary)."""
    h0 = p.fhe[f]
    out = []
    h = h0
    while True:
        out.append(p.hface[p.twin[h]])
        h = p.next[h]
        if h == h0:
            return out


def corner_fans(p: Patch, f: int) -> list[list[int]]:
    """Face ids around each corner of ``f``, starting at ``f``."""
    h0 = p.fhe[f]
    out = []
    h = h0
    while True:
        v = p.origin[h]
        faces = p.vertex_faces(v)
        i = faces.index(f)
        out.append(faces[i:] + faces[:i])
        h = p.next[h]
        if h == h0:
            return out


def open_corner(p: Patch, f: int) -> int | None:
    for v in p.face_vertices(f):
        if not p.vinterior[v]:
            return v
    return None


def surround(p: Patch, faces: list[int], budget: list[int] | None = None) -> Iterator[None]:
    """Yield once for every way of making all corners of ``faces`` interior.

    ``p`` is mutated during iteration and restored afterwards; read it at
    each yield.  ``budget`` is an optional one-element node counter that
    raises :class:`SearchBudgetExceeded` when it drops below zero.
    """
    v = None
    for f in faces:
        v = open_corner(p, f)
        if v is not None:
            break
    if budget is not None:
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded()
    if v is None:
        yield None
        return
    for c in p.completions(v):
        mark = p.checkpoint()
        try:
            p.apply(c)
        except PatchError:
            p.rollback(mark)
            continue
        yield from surround(p, faces, budget)
        p.rollback(mark)


class SearchBudgetExceeded(RuntimeError):
    pass


def surroundable(p: Patch, faces: list[int], budget: list[int] | None = None) -> bool:
    """Whether some surrounding exists; ``p`` is left unchanged."""
    mark = p.checkpoint()
    gen = surround(p, faces, budget)
    try:
        for _ in gen:
            return True
        return False
    finally:
        gen.close()
        p.rollback(mark)


def seeded_patches(t: CyclicType, size: int) -> Iterator[Patch]:
    """A fan for every position of ``size`` in ``t``; face 0 has that size."""
    if size not in t.sizes:
        raise ValueError(f"size {size} does not occur in {t}")
    for i, k in enumerate(t.entries):
        if k == size:
            p = new_fan(t, rotation=i)
            p.checkpoint()
            yield p


def neighborhood_of(p: Patch, f: int, with_fans: bool = True) -> NeighborhoodWord:
    ring = face_ring(p, f)
    edges = [p.fsize[g] for g in ring]
    fans = [[p.fsize[g] for g in fan] for fan in corner_fans(p, f)] if with_fans else ()
    return canonical_neighborhood(p.fsize[f], edges, fans)


def incidence_profile(p: Patch, f: int, other: int) -> tuple[int, int]:
    """(edge, vertex-only) incidences of face ``f`` with faces of size ``other``.

    Vertex-only incidences count each shared corner separately.
    """
    ring = set(face_ring(p, f))
    edge = sum(1 for g in ring if g >= 0 and p.fsize[g] == other)
    vonly = 0
    for fan in corner_fans(p, f):
        for g in fan[1:]:
            if g not in ring and p.fsize[g] == other:
                vonly += 1
    return edge, vonly


def enumerate_face_neighborhoods(t: CyclicType, size: int, mode: str = "edge",
                                 extend: int = 0,
                                 accept: Callable[[Patch, int], bool] | None = None) -> set[NeighborhoodWord]:
    """Every neighborhood of a ``size``-gon compatible with ``t``.

    ``mode='edge'`` keeps only the edge-adjacent sizes, ``'full'`` also the
    corner fans.  ``extend=1`` keeps a neighborhood only if the faces around
    the central one can in turn be surrounded.
    """
    if mode not in ("edge", "full"):
        raise ValueError("mode must be 'edge' or 'full'")
    out: set[NeighborhoodWord] = set()
    confirmed: set[NeighborhoodWord] = set()
    for p in seeded_patches(t, size):
        for _ in surround(p, [0]):
            w = neighborhood_of(p, 0, with_fans=(mode == "full"))
            if accept is not None and not accept(p, 0):
                continue
            if extend:
                if w in confirmed:
                    continue
                ring = [g for g in face_ring(p, 0)]
                if not surroundable(p, ring):
                    continue
                confirmed.add(w)
            out.add(w)
    return out


def profile_census(t: CyclicType, size: int, other: int) -> Counter:
    """How often each (edge, vertex-only) profile against ``other``-gons
    occurs over all surroundings of a ``size``-gon."""
    c: Counter = Counter()
    for p in seeded_patches(t, size):
        for _ in surround(p, [0]):
            c[incidence_profile(p, 0, other)] += 1
    return c
