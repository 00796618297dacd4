"""Half-edge patches of homogeneous tilings and layer-by-layer growth.

A :class:`Patch` is a combinatorial disk: polygons glued edge to edge,
every interior vertex carrying the full cyclic type and every boundary
vertex carrying a consecutive piece of it.  Growth happens one vertex at a
time: a :class:`FanCompletion` lists the polygons that close the outer
angle at a boundary vertex, and how far the first and last of them run
along the existing boundary.

Conventions
-----------
* Faces are traversed counterclockwise (``next``); a half-edge has its
  face on the left.  The outer face is ``OUTER``; its ``next`` cycle walks
  the boundary clockwise.
* Rotating counterclockwise around a vertex: ``e -> twin(prev(e))``.
* The corner word of a boundary vertex ``v`` lists its faces
  counterclockwise, from the face on the edge to the previous boundary
  vertex to the face on the edge to the next one.  The polygons of a
  completion continue that order, so the first one covers the edge to the
  next boundary vertex.

Mutations are journaled; :meth:`Patch.checkpoint` / :meth:`Patch.rollback`
give cheap undo for backtracking search.
"""
from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .cyclic import CyclicType, require_hyperbolic, subword_matches

OUTER = -1
_tokens = itertools.count(1)


class PatchError(Exception):
    """Internal invariant violated while mutating a patch."""


class StaleCompletion(PatchError):
    pass


@dataclass(frozen=True)
class FanCompletion:
    """Polygons closing the outer angle at one boundary vertex.

    ``sizes`` are the new polygons in counterclockwise order around
    ``vertex``.  The first ``peel_forward`` of them close exactly on the
    boundary ahead of ``vertex``, so the edge between two of them ends at
    an existing vertex; the last ``peel_backward`` do the same behind it.
    Of the remaining polygons the first absorbs ``forward`` boundary edges
    going forward (counting the edge at its start) and the last absorbs
    ``backward`` edges going back; with one remaining polygon both runs
    belong to it.
    """
    vertex: int
    sizes: tuple[int, ...]
    forward: int
    backward: int
    orientation: int
    offset: int
    token: int = field(compare=False)
    peel_forward: int = 0
    peel_backward: int = 0

    @property
    def forward_edges(self) -> int:
        """Original boundary edges absorbed ahead of ``vertex``."""
        return sum(k - 2 for k in self.sizes[:self.peel_forward]) + self.forward

    @property
    def backward_edges(self) -> int:
        q = self.peel_backward
        return sum(k - 2 for k in self.sizes[len(self.sizes) - q:]) + self.backward

    @property
    def depth(self) -> int:
        return self.forward_edges + self.backward_edges

    @property
    def key(self) -> tuple:
        return (self.sizes, self.peel_forward, self.peel_backward, self.forward, self.backward)


@dataclass(frozen=True)
class DeadEnd:
    vertex: int
    word: tuple[int, ...]
    layer: int


class Patch:
    def __init__(self, ctype: CyclicType):
        self.type = ctype
        # half-edges
        self.twin = array("i")
        self.next = array("i")
        self.prev = array("i")
        self.origin = array("i")
        self.hface = array("i")
        # faces
        self.fsize = array("i")
        self.flayer = array("i")
        self.fhe = array("i")
        # vertices; vhe is the outgoing outer half-edge of a boundary vertex
        self.vhe = array("i")
        self.vinterior = array("b")
        self.vlayer = array("i")
        self.origin_vertex = 0
        self.completed_layers = 0
        self.boundary_len = 0
        self.token = next(_tokens)
        self._log: list | None = None

    # ------------------------------------------------------------------
    # journal
    def checkpoint(self) -> int:
        if self._log is None:
            self._log = []
        return len(self._log)

    def rollback(self, mark: int) -> None:
        log = self._log
        while len(log) > mark:
            target, key, old = log.pop()
            if isinstance(target, array):
                if key is None:
                    target.pop()
                else:
                    target[key] = old
            else:
                object.__setattr__(self, key, old)

    def _set(self, arr, i, val):
        if self._log is not None:
            self._log.append((arr, i, arr[i]))
        arr[i] = val

    def _append(self, arr, val):
        if self._log is not None:
            self._log.append((arr, None, None))
        arr.append(val)

    def _attr(self, name, val):
        if self._log is not None:
            self._log.append((None, name, getattr(self, name)))
        object.__setattr__(self, name, val)

    def copy(self) -> "Patch":
        p = Patch.__new__(Patch)
        p.type = self.type
        for name in ("twin", "next", "prev", "origin", "hface", "fsize", "flayer",
                     "fhe", "vhe", "vinterior", "vlayer"):
            setattr(p, name, array(getattr(self, name).typecode, getattr(self, name)))
        p.origin_vertex = self.origin_vertex
        p.completed_layers = self.completed_layers
        p.boundary_len = self.boundary_len
        p.token = self.token
        p._log = None
        return p

    # ------------------------------------------------------------------
    # queries
    @property
    def n_vertices(self) -> int:
        return len(self.vhe)

    @property
    def n_faces(self) -> int:
        return len(self.fsize)

    @property
    def n_edges(self) -> int:
        return len(self.twin) // 2

    def dest(self, h: int) -> int:
        return self.origin[self.twin[h]]

    def is_boundary(self, v: int) -> bool:
        return not self.vinterior[v]

    def face_vertices(self, f: int) -> list[int]:
        h0 = self.fhe[f]
        out = [self.origin[h0]]
        h = self.next[h0]
        while h != h0:
            out.append(self.origin[h])
            h = self.next[h]
        return out

    def vertex_faces(self, v: int) -> list[int]:
        """Faces around ``v`` counterclockwise (boundary: see module docs)."""
        twin, prev, hface = self.twin, self.prev, self.hface
        if self.vinterior[v]:
            h0 = self.vhe[v]
            out = [hface[h0]]
            h = twin[prev[h0]]
            while h != h0:
                out.append(hface[h])
                h = twin[prev[h]]
            return out
        stop = self.vhe[v]
        h = twin[prev[stop]]
        out = []
        while h != stop:
            out.append(hface[h])
            h = twin[prev[h]]
        return out

    def vertex_word(self, v: int) -> tuple[int, ...]:
        fsize = self.fsize
        return tuple(fsize[f] for f in self.vertex_faces(v))

    def boundary_cycle(self, start: int | None = None) -> list[int]:
        """Boundary vertices in the order of the outer ``next`` cycle.

        Starts from ``start`` or from the least boundary vertex id.
        """
        if start is None:
            start = min((v for v in range(self.n_vertices) if not self.vinterior[v]), default=None)
            if start is None:
                return []
        h0 = self.vhe[start]
        out = [start]
        h = self.next[h0]
        while h != h0:
            out.append(self.origin[h])
            h = self.next[h]
        return out

    def boundary_vertices(self) -> list[int]:
        return [v for v in range(self.n_vertices) if not self.vinterior[v]]

    def interior_faces(self) -> list[int]:
        """Faces all of whose vertices are interior."""
        vin = self.vinterior
        return [f for f in range(self.n_faces) if all(vin[v] for v in self.face_vertices(f))]

    # ------------------------------------------------------------------
    # construction primitives
    def _new_vertex(self, layer: int) -> int:
        v = len(self.vhe)
        self._append(self.vhe, -1)
        self._append(self.vinterior, False)
        self._append(self.vlayer, layer)
        return v

    def _new_half_edge_pair(self, a: int, b: int, face: int) -> int:
        h = len(self.twin)
        for arr, x, y in ((self.twin, h + 1, h), (self.next, -1, -1), (self.prev, -1, -1),
                          (self.origin, a, b), (self.hface, face, OUTER)):
            self._append(arr, x)
            self._append(arr, y)
        return h

    def half_edge(self, a: int, b: int) -> int | None:
        """The half-edge ``a -> b`` if the edge exists."""
        h0 = self.vhe[a]
        if h0 < 0:
            return None
        twin, prev, origin = self.twin, self.prev, self.origin
        h = h0
        while True:
            if origin[twin[h]] == b:
                return h
            h = twin[prev[h]]
            if h == h0:
                return None

    def _add_face(self, cycle: Sequence[int], layer: int) -> int:
        """Glue a polygon with counterclockwise vertex ``cycle``.

        Each edge ``a -> b`` either takes over the outer half-edge
        ``a -> b`` or is created fresh.  Vertices that lose both outer
        half-edges become interior.
        """
        k = len(cycle)
        f = len(self.fsize)
        self._append(self.fsize, k)
        self._append(self.flayer, layer)
        self._append(self.fhe, -1)
        vhe, prev, nxt, twin, hface = self.vhe, self.prev, self.next, self.twin, self.hface
        # outer half-edges around each touched vertex, before mutation
        old_out = {}
        old_in = {}
        for x in cycle:
            if vhe[x] >= 0 and not self.vinterior[x]:
                old_out[x] = vhe[x]
                old_in[x] = prev[vhe[x]]
        hes = []
        absorbed = []
        for i in range(k):
            a, b = cycle[i], cycle[(i + 1) % k]
            h = old_out.get(a)
            if h is not None and self.origin[twin[h]] == b:
                self._set(hface, h, f)
                absorbed.append(True)
                self._attr("boundary_len", self.boundary_len - 1)
            else:
                if a in old_out and b in old_out and self.half_edge(a, b) is not None:
                    raise PatchError(f"edge {a}-{b} already exists")
                h = self._new_half_edge_pair(a, b, f)
                absorbed.append(False)
                self._attr("boundary_len", self.boundary_len + 1)
            hes.append(h)
        for i in range(k):
            self._set(nxt, hes[i], hes[(i + 1) % k])
            self._set(prev, hes[(i + 1) % k], hes[i])
        self._set(self.fhe, f, hes[0])
        # relink the outer cycle at every vertex of the new face
        for i in range(k):
            x = cycle[i]
            h_in_face = hes[i - 1]      # w -> x
            h_out_face = hes[i]         # x -> y
            in_abs, out_abs = absorbed[i - 1], absorbed[i]
            if in_abs and out_abs:
                self._set(self.vinterior, x, True)
                self._set(vhe, x, h_out_face)
                continue
            if not in_abs and not out_abs:
                if x in old_out:
                    raise PatchError(f"face would pinch the boundary at vertex {x}")
                o_in, o_out = twin[h_out_face], twin[h_in_face]
            elif out_abs:
                # x -> y absorbed; outer now leaves x along the new edge x -> w
                o_in, o_out = old_in[x], twin[h_in_face]
                if hface[o_in] != OUTER:
                    raise PatchError(f"vertex {x}: incoming outer edge vanished")
            else:
                o_in, o_out = twin[h_out_face], old_out[x]
                if hface[o_out] != OUTER:
                    raise PatchError(f"vertex {x}: outgoing outer edge vanished")
            self._set(nxt, o_in, o_out)
            self._set(prev, o_out, o_in)
            self._set(vhe, x, o_out)
        self._attr("token", next(_tokens))
        return f

    # ------------------------------------------------------------------
    # fan completions
    def _walk_forward(self, v: int, count: int) -> list[int]:
        """Boundary vertices after ``v`` along the outer cycle."""
        out = []
        h = self.vhe[v]
        for _ in range(count):
            out.append(self.dest(h))
            h = self.next[h]
        return out

    def _walk_backward(self, v: int, count: int) -> list[int]:
        out = []
        h = self.prev[self.vhe[v]]
        for _ in range(count):
            out.append(self.origin[h])
            h = self.prev[h]
        return out

    def completions(self, v: int) -> list[FanCompletion]:
        """Every legal way to close the outer angle at boundary vertex ``v``.

        Ordered by (orientation, offset, depth, forward).  An empty list
        means ``v`` is a dead end.
        """
        if self.vinterior[v]:
            raise PatchError(f"vertex {v} is interior")
        t = self.type
        d = len(t)
        word = self.vertex_word(v)
        n = len(word)
        if n >= d:
            return []
        L = self.boundary_len
        images = t.images
        fwd = _BoundaryRun(self, v, True, L - 1)
        bwd = _BoundaryRun(self, v, False, L - 1)

        def extendable(w):
            return len(w) <= d - 1 and bool(subword_matches(w, t))

        def peels(sizes, run, forward):
            """States after closing sizes[0], sizes[1], ... exactly on ``run``.

            Yields (count, start index, word at start) for count = 0, 1, ...
            A word override applies to the vertex at the start index only.
            """
            start, sw = 0, None
            yield 0, start, sw
            for i, k in enumerate(sizes):
                end = start + k - 2
                if run.get(end) is None:
                    return
                for x in range(start, end):
                    wx = sw if x == start and sw is not None else run.word(x)
                    wx = wx + (k,) if forward else (k,) + wx
                    if len(wx) != d or wx not in images:
                        return
                we = run.word(end)
                we = (k,) + we if forward else we + (k,)
                if not extendable(we):
                    return
                start, sw = end, we
                yield i + 1, start, sw

        def runs(k, limit, run, start, sw, forward):
            """Edge counts b for a polygon of size ``k`` absorbing along ``run``."""
            ok = []
            for b in range(1, limit + 1):
                end = start + b - 1
                if run.get(end) is None:
                    break
                if b >= 2:
                    x = end - 1
                    wx = sw if x == start and sw is not None else run.word(x)
                    wx = wx + (k,) if forward else (k,) + wx
                    if len(wx) != d or wx not in images:
                        break
                we = sw if end == start and sw is not None else run.word(end)
                we = (k,) + we if forward else we + (k,)
                if extendable(we):
                    ok.append(b)
            return ok

        out = []
        seen = set()
        for orient, off in subword_matches(word, t):
            seq = t.entries if orient == 1 else t.entries[::-1]
            sizes = tuple(seq[(off + n + i) % d] for i in range(d - n))
            j = len(sizes)
            for p, fs, fw in peels(sizes[:j - 1], fwd, True):
                rev = sizes[p + 1:][::-1]
                for q, bs, bw in peels(rev, bwd, False):
                    middle = sizes[p:j - q]
                    m = len(middle)
                    first, last = middle[0], middle[-1]
                    lim_f = first - 1 if m == 1 else first - 2
                    lim_b = last - 1 if m == 1 else last - 2
                    f_ok = runs(first, lim_f, fwd, fs, fw, True)
                    if not f_ok:
                        continue
                    b_ok = runs(last, lim_b, bwd, bs, bw, False)
                    for b in f_ok:
                        fe = fs + b - 1
                        for a in b_ok:
                            be = bs + a - 1
                            absorbed = fe + be + 2
                            if absorbed > L - 1:
                                continue
                            if m == 1:
                                fresh = first - b - a - 1
                                if fresh < 0:
                                    continue
                            else:
                                fresh = (m - 1) + (first - b - 2) + (last - a - 2) \
                                    + sum(k - 3 for k in middle[1:-1])
                            if L - absorbed + fresh + 1 < 3:
                                continue
                            if m == 1 and fresh == 0:
                                if self.half_edge(fwd.get(fe), bwd.get(be)) is not None:
                                    continue
                            key = (sizes, p, q, b, a)
                            if key in seen:
                                continue
                            seen.add(key)
                            out.append(FanCompletion(v, sizes, b, a, orient, off, self.token, p, q))
        out.sort(key=lambda c: (-c.orientation, c.offset, c.depth, c.forward))
        return out

    def apply(self, c: FanCompletion, layer: int | None = None) -> list[int]:
        """Apply ``c`` in place; returns the new face ids.

        Raises :class:`StaleCompletion` if the patch changed since ``c`` was
        enumerated and :class:`PatchError` if an invariant breaks (the patch
        is left as it was).
        """
        if c.token != self.token:
            raise StaleCompletion(f"completion for vertex {c.vertex} is stale")
        own = self._log is None
        mark = self.checkpoint()
        try:
            faces = self._apply(c, layer)
        except PatchError:
            self.rollback(mark)
            raise
        finally:
            if own:
                self._log = None
        return faces

    def _apply(self, c: FanCompletion, layer: int | None) -> list[int]:
        v = c.vertex
        if self.vinterior[v]:
            raise PatchError(f"vertex {v} is interior")
        sizes = c.sizes
        j = len(sizes)
        p, q = c.peel_forward, c.peel_backward
        touched = [v] + self._walk_forward(v, c.forward_edges) + self._walk_backward(v, c.backward_edges)
        vlayer = self.completed_layers + 1
        if layer is None:
            layer = self._placement_layer(touched)
        faces = []
        for k in sizes[:p]:
            faces.append(self._add_face([v] + self._walk_forward(v, k - 1), layer))
        for k in sizes[j - q:][::-1]:
            faces.append(self._add_face([v] + self._walk_backward(v, k - 1)[::-1], layer))
        middle = sizes[p:j - q]
        fwd = self._walk_forward(v, c.forward)
        bwd = self._walk_backward(v, c.backward)
        if len(middle) == 1:
            k = middle[0]
            fresh = [self._new_vertex(vlayer) for _ in range(k - c.forward - c.backward - 1)]
            faces.append(self._add_face([v] + fwd + fresh + bwd[::-1], layer))
        else:
            spokes = [self._new_vertex(vlayer) for _ in range(len(middle) - 1)]
            k = middle[0]
            fresh = [self._new_vertex(vlayer) for _ in range(k - c.forward - 2)]
            faces.append(self._add_face([v] + fwd + fresh + [spokes[0]], layer))
            for i in range(1, len(middle) - 1):
                k = middle[i]
                fresh = [self._new_vertex(vlayer) for _ in range(k - 3)]
                faces.append(self._add_face([v, spokes[i - 1]] + fresh + [spokes[i]], layer))
            k = middle[-1]
            fresh = [self._new_vertex(vlayer) for _ in range(k - c.backward - 2)]
            faces.append(self._add_face([v, spokes[-1]] + fresh + bwd[::-1], layer))
        # re-check every old vertex the completion touched
        t = self.type
        d = len(t)
        for x in touched:
            w = self.vertex_word(x)
            if self.vinterior[x]:
                if w not in t.images:
                    raise PatchError(f"vertex {x} closed with word {w}, not the type")
            elif len(w) >= d or not subword_matches(w, t):
                raise PatchError(f"vertex {x} left with non-extendable word {w}")
        if not self.vinterior[v]:
            raise PatchError(f"vertex {v} still on the boundary")
        return faces

    def _placement_layer(self, vertices: Iterable[int]) -> int:
        lo = None
        for x in vertices:
            for f in self.vertex_faces(x):
                lf = self.flayer[f]
                if lo is None or lf < lo:
                    lo = lf
        return 1 if lo is None else lo + 1


class _BoundaryRun:
    """Boundary vertices ahead of (or behind) a vertex, walked on demand."""

    def __init__(self, p: Patch, v: int, forward: bool, limit: int):
        self.p = p
        self.forward = forward
        self.limit = limit
        self.verts: list[int] = []
        self.words: dict[int, tuple[int, ...]] = {}
        self.h = p.vhe[v] if forward else p.prev[p.vhe[v]]

    def get(self, i: int) -> int | None:
        if i >= self.limit:
            return None
        p = self.p
        while len(self.verts) <= i:
            if self.forward:
                self.verts.append(p.dest(self.h))
                self.h = p.next[self.h]
            else:
                self.verts.append(p.origin[self.h])
                self.h = p.prev[self.h]
        return self.verts[i]

    def word(self, i: int) -> tuple[int, ...]:
        w = self.words.get(i)
        if w is None:
            w = self.words[i] = self.p.vertex_word(self.get(i))
        return w


# ----------------------------------------------------------------------
def new_fan(t: CyclicType, rotation: int = 0, reflect: bool = False) -> Patch:
    """A single vertex surrounded by one polygon per entry of ``t``."""
    require_hyperbolic(t)
    entries = list(t.entries)
    if reflect:
        entries.reverse()
    entries = entries[rotation:] + entries[:rotation]
    p = Patch(t)
    center = p._new_vertex(0)
    d = len(entries)
    spokes = [p._new_vertex(1) for _ in range(d)]
    for i, k in enumerate(entries):
        fresh = [p._new_vertex(1) for _ in range(k - 3)]
        p._add_face([center, spokes[i]] + fresh + [spokes[(i + 1) % d]], 1)
    p.origin_vertex = center
    p.completed_layers = 1
    return p


def enumerate_fan_completions(p: Patch, v: int) -> list[FanCompletion]:
    return p.completions(v)


def apply_completion(p: Patch, c: FanCompletion, in_place: bool = False) -> Patch:
    """Apply ``c``; by default to a copy, leaving ``p`` untouched."""
    if not in_place:
        q = p.copy()
        q.apply(c)
        return q
    p.apply(c)
    return p


Chooser = Callable[[Patch, int, list], "FanCompletion | None"]


def first_choice(p: Patch, v: int, options: list[FanCompletion]) -> FanCompletion | None:
    return options[0] if options else None


def layer_targets(p: Patch) -> list[int]:
    """Boundary vertices that must become interior to close the next layer."""
    return p.boundary_cycle()


def close_layer(p: Patch, chooser: Chooser = first_choice, in_place: bool = False) -> Patch | DeadEnd:
    """Complete the fan of every current boundary vertex, in boundary order.

    No backtracking: the chooser picks one completion per vertex.  Returns
    the grown patch, or a :class:`DeadEnd` naming the first vertex left
    without an admissible completion.  With ``in_place`` the patch is
    mutated and, on a dead end, left with the layer partly built (roll back
    through a checkpoint taken beforehand if that matters).
    """
    q = p if in_place else p.copy()
    r = q.completed_layers
    for v in layer_targets(q):
        if q.vinterior[v]:
            continue
        options = q.completions(v)
        choice = chooser(q, v, options) if options else None
        if choice is None:
            return DeadEnd(v, q.vertex_word(v), r)
        q.apply(choice)
    q._attr("completed_layers", r + 1)
    return q


def grow(p: Patch, layers: int, chooser: Chooser = first_choice) -> Patch | DeadEnd:
    q = p
    for _ in range(layers):
        q = close_layer(q, chooser)
        if isinstance(q, DeadEnd):
            return q
    return q


# ----------------------------------------------------------------------
def validate_patch(p: Patch) -> list[str]:
    """Check every structural invariant; returns human-readable violations."""
    bad: list[str] = []
    nh = len(p.twin)
    t = p.type
    d = len(t)
    for h in range(nh):
        tw = p.twin[h]
        if not (0 <= tw < nh) or tw == h or p.twin[tw] != h:
            bad.append(f"twin not involutive at half-edge {h}")
            continue
        if p.next[h] < 0 or p.prev[p.next[h]] != h:
            bad.append(f"next/prev mismatch at half-edge {h}")
            continue
        if p.origin[p.next[h]] != p.origin[tw]:
            bad.append(f"half-edge {h} does not end where next starts")
    if bad:
        return bad
    seen = [False] * nh
    outer_cycles = 0
    face_seen = set()
    for h0 in range(nh):
        if seen[h0]:
            continue
        orbit = [h0]
        seen[h0] = True
        h = p.next[h0]
        while h != h0:
            if seen[h]:
                bad.append(f"next orbit through {h0} is not a cycle")
                break
            seen[h] = True
            orbit.append(h)
            h = p.next[h]
        faces = {p.hface[x] for x in orbit}
        if len(faces) != 1:
            bad.append(f"next orbit through {h0} mixes faces {sorted(faces)}")
            continue
        f = faces.pop()
        if f == OUTER:
            outer_cycles += 1
            verts = [p.origin[x] for x in orbit]
            if len(set(verts)) != len(verts):
                bad.append("outer boundary is not simple")
            if len(orbit) != p.boundary_len:
                bad.append(f"boundary_len {p.boundary_len} != outer cycle length {len(orbit)}")
        else:
            face_seen.add(f)
            if len(orbit) != p.fsize[f]:
                bad.append(f"face {f} has {len(orbit)} edges, size {p.fsize[f]}")
            if p.fsize[f] not in t.sizes:
                bad.append(f"face {f} has size {p.fsize[f]} not in the type")
    if p.n_faces and outer_cycles != 1:
        bad.append(f"{outer_cycles} outer boundary cycles")
    if len(face_seen) != p.n_faces:
        bad.append("some faces have no half-edges")
    V, E, F = p.n_vertices, p.n_edges, p.n_faces
    if F and V - E + F != 1:
        bad.append(f"Euler characteristic V-E+F = {V - E + F}, expected 1")
    for v in range(V):
        h = p.vhe[v]
        if h < 0 or p.origin[h] != v:
            bad.append(f"vertex {v} has no valid outgoing half-edge")
            continue
        on_outer = p.hface[h] == OUTER
        if on_outer == p.vinterior[v]:
            bad.append(f"vertex {v} interior flag disagrees with the outer cycle")
            continue
        w = p.vertex_word(v)
        if p.vinterior[v]:
            if w not in t.images:
                bad.append(f"interior vertex {v} has word {list(w)}, not the type")
        elif not w or len(w) >= d or not subword_matches(w, t):
            bad.append(f"boundary vertex {v} has non-extendable word {list(w)}")
        if p.vlayer[v] < p.completed_layers and not p.vinterior[v]:
            bad.append(f"vertex {v} from layer {p.vlayer[v]} is still on the boundary")
    return bad
