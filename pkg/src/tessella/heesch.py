"""Heesch numbers by backtracking over fan completions.

The search grows layers from a single fan.  Within a layer it picks an
unfinished target vertex, branches over every completion of that vertex and
backtracks through the patch journal.  A layer is finished when every
vertex that was on the boundary at its start has become interior.

Outcomes: ``Exact(r)`` when every r-layer patch was reached and none could
be extended, ``AtLeast(cap)`` when a cap-layer patch was found, and
``Inconclusive`` when the node or time budget ran out first.
"""
from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cyclic import CyclicType, format_word, require_hyperbolic
from .families import FamilyInstance
from .neighborhoods import (NeighborhoodWord, canonical_neighborhood,
                            enumerate_face_neighborhoods, face_ring,
                            seeded_patches, surround)
from .patch import Patch, PatchError, new_fan, validate_patch

EXACT = "Exact"
AT_LEAST = "AtLeast"
INCONCLUSIVE = "Inconclusive"

ORDERS = ("clockwise", "fewest")


@dataclass
class Certificate:
    """Proof record that the search tree for layer ``blocked_layer`` was exhausted."""
    blocked_layer: int
    nodes: int
    dead_ends: dict[tuple[int, ...], int]
    order: str

    def as_dict(self) -> dict:
        return {
            "blocked_layer": self.blocked_layer,
            "nodes": self.nodes,
            "order": self.order,
            "dead_ends": [{"word": list(w), "count": n} for w, n in sorted(self.dead_ends.items())],
        }


@dataclass
class HeeschResult:
    outcome: str
    layers: int
    witness: Patch | None
    nodes: int
    certificate: Certificate | None = None
    elapsed: float = 0.0
    dead_ends: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __str__(self) -> str:
        if self.outcome == INCONCLUSIVE:
            return f"Inconclusive(>= {self.layers})"
        return f"{self.outcome}({self.layers})"


class Budget:
    def __init__(self, nodes: int | None = None, seconds: float | None = None):
        self.max_nodes = nodes
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.nodes = 0

    def spend(self) -> bool:
        """Count one node; False once the budget is gone."""
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return False
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            return False
        return True


def _choose(p: Patch, targets: list[int], start: int, order: str, window: int = 12):
    """Pick the next unfinished target; returns (index, vertex, options)."""
    n = len(targets)
    i = start
    while i < n and p.vinterior[targets[i]]:
        i += 1
    if i == n:
        return n, None, None
    v = targets[i]
    opts = p.completions(v)
    if order == "clockwise" or len(opts) <= 1:
        return i, v, opts
    best = (len(opts), i, v, opts)
    seen = 1
    j = i + 1
    while j < n and seen < window:
        u = targets[j]
        if not p.vinterior[u]:
            seen += 1
            o = p.completions(u)
            if len(o) < best[0]:
                best = (len(o), i, u, o)
                if len(o) <= 1:
                    break
        j += 1
    return best[1], best[2], best[3]


def search_layers(p: Patch, cap: int, budget: Budget, order: str = "clockwise",
                  targets: list[int] | None = None):
    """Depth-first search from ``p`` (mutated, restored on return).

    ``targets`` are the vertices the current layer must close; by default
    the whole boundary, i.e. ``p`` is taken to sit between layers.

    Returns ``(best_layers, witness_copy, dead_ends, exhausted)`` where
    ``exhausted`` is False if the budget ran out.
    """
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}; choose from {ORDERS}")
    base = p.checkpoint()
    best = p.completed_layers
    witness = p.copy()
    dead: Counter = Counter()
    # each frame: [targets, start index, vertex, options, next option index, mark]
    if targets is None:
        targets = p.boundary_cycle()
    layer_targets = [targets] if p.completed_layers < cap else []
    frames: list[list] = []
    exhausted = True
    try:
        if not layer_targets:
            return best, witness, dict(dead), True
        pos = 0
        while True:
            targets = layer_targets[-1]
            if not budget.spend():
                exhausted = False
                break
            idx, v, opts = _choose(p, targets, pos, order)
            if v is None:
                # layer closed
                p._attr("completed_layers", p.completed_layers + 1)
                if p.completed_layers > best:
                    best = p.completed_layers
                    witness = p.copy()
                if best >= cap:
                    break
                frames.append(["layer", p.checkpoint() - 1])
                layer_targets.append(p.boundary_cycle())
                pos = 0
                continue
            if not opts:
                dead[p.vertex_word(v)] += 1
            frames.append([targets, idx, v, opts, 0, p.checkpoint()])
            # advance: find the next applicable option, backtracking as needed
            applied = False
            while frames:
                fr = frames[-1]
                if fr[0] == "layer":
                    # the layer could not be continued: undo its closing
                    frames.pop()
                    layer_targets.pop()
                    p.rollback(fr[1])
                    continue
                tg, idx, v, opts, k, mark = fr
                p.rollback(mark)
                applied = False
                while k < len(opts):
                    c = opts[k]
                    k += 1
                    try:
                        p.apply(c)
                    except PatchError:
                        continue
                    applied = True
                    break
                fr[4] = k
                if applied:
                    pos = idx
                    break
                frames.pop()
            if not frames and not applied:
                break
    finally:
        p.rollback(base)
    return best, witness, dict(dead), exhausted


def _subtree_job(args):
    t_entries, cap, path, node_budget, seconds, order = args
    t = CyclicType(t_entries)
    p = new_fan(t)
    p.checkpoint()
    targets = p.boundary_cycle()
    for v, key in path:
        c = next(c for c in p.completions(v) if c.key == key)
        p.apply(c)
    budget = Budget(node_budget, seconds)
    best, witness, dead, exhausted = search_layers(p, cap, budget, order, targets)
    return best, witness, dead, exhausted, budget.nodes


def _root_split(p: Patch):
    """Paths to the children of the first branching point, plus the word
    of the vertex that stopped the walk if it has no completion at all."""
    targets = p.boundary_cycle()
    mark = p.checkpoint()
    path = []
    try:
        for v in targets:
            if p.vinterior[v]:
                continue
            opts = p.completions(v)
            if not opts:
                return [], p.vertex_word(v)
            if len(opts) >= 2:
                return [path + [(v, c.key)] for c in opts], None
            p.apply(opts[0])
            path.append((v, opts[0].key))
        return [path], None
    finally:
        p.rollback(mark)


def heesch_number(t: CyclicType, cap: int, budget_nodes: int | None = None,
                  budget_seconds: float | None = None, threads: int | None = None,
                  order: str = "fewest") -> HeeschResult:
    """Largest number of complete layers around a single fan, up to ``cap``.

    The root fan is fixed to one rotation and orientation.  ``order`` picks
    the next vertex to branch on: ``"clockwise"`` walks the boundary,
    ``"fewest"`` takes the vertex with fewest completions among the next
    few.  Both are exhaustive.  With several
    threads the subtrees below the first branching point of layer 2 run in
    worker processes; the outcome does not depend on the worker count.
    """
    require_hyperbolic(t)
    if int(cap) != cap or cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap}")
    if threads is None:
        threads = int(os.environ.get("TESSELLA_THREADS", 0)) or (os.cpu_count() or 1)
    if budget_nodes is None and os.environ.get("TESSELLA_BUDGET_NODES"):
        budget_nodes = int(os.environ["TESSELLA_BUDGET_NODES"])
    started = time.monotonic()
    p = new_fan(t)
    if cap == 1:
        return HeeschResult(AT_LEAST, 1, p, 1, elapsed=time.monotonic() - started)
    if threads <= 1:
        budget = Budget(budget_nodes, budget_seconds)
        best, witness, dead, exhausted = search_layers(p, cap, budget, order)
        nodes = budget.nodes
    else:
        paths, stuck = _root_split(p)
        jobs = [(t.entries, cap, path, budget_nodes, budget_seconds, order) for path in paths]
        best, witness, dead, exhausted, nodes = 1, p.copy(), Counter(), True, 0
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for b, w, d, ex, n in pool.map(_subtree_job, jobs):
                nodes += n
                dead.update(d)
                exhausted = exhausted and ex
                if b > best:
                    best, witness = b, w
        dead = dict(dead)
        if not paths:
            # the root split itself hit a vertex with no completion
            nodes = max(nodes, 1)
            dead = {stuck: 1}
    elapsed = time.monotonic() - started
    if best >= cap:
        return HeeschResult(AT_LEAST, cap, witness, nodes, elapsed=elapsed, dead_ends=dead)
    if not exhausted:
        return HeeschResult(INCONCLUSIVE, best, witness, nodes, elapsed=elapsed, dead_ends=dead)
    cert = Certificate(best + 1, max(nodes, 1), dead, order)
    return HeeschResult(EXACT, best, witness, nodes, cert, elapsed, dead)


# ----------------------------------------------------------------------
# constructive builder

class BuildError(RuntimeError):
    pass


DEFAULT_MAX_FACES = 1_500_000
BUILD_WINDOW = 64
_TRIM_EVERY = 1 << 20


def _instance_type(f) -> CyclicType:
    if isinstance(f, FamilyInstance):
        if f.kind not in ("kn", "knp"):
            raise ValueError(f"expected a kn or kn_prime instance, got kind {f.kind!r}")
        return f.tuple
    if isinstance(f, CyclicType):
        return f
    return CyclicType(f)


def _close_layer_bounded(p: Patch, max_faces: int, window: int, max_nodes: int) -> None:
    """Close the current layer of ``p`` in place, or raise BuildError.

    Vertices are taken most-constrained first.  Only the last ``window``
    decisions can be revisited; older ones are committed and their journal
    entries dropped, so memory stays proportional to the patch.
    """
    r = p.completed_layers
    targets = p.boundary_cycle()
    frames: list[list] = []   # [start index, vertex, options, next option, journal mark]
    pos = 0
    nodes = 0
    while True:
        idx, v, opts = _choose(p, targets, pos, "fewest")
        if v is None:
            break
        nodes += 1
        if nodes > max_nodes:
            raise BuildError(f"layer {r + 1}: no closure within {max_nodes} search nodes")
        if p.n_faces > max_faces:
            raise BuildError(f"face budget {max_faces} exceeded while closing layer {r + 1} "
                             f"({p.n_faces} faces)")
        frames.append([idx, v, opts, 0, p.checkpoint()])
        applied = False
        while frames:
            fr = frames[-1]
            p.rollback(fr[4])
            while fr[3] < len(fr[2]):
                c = fr[2][fr[3]]
                fr[3] += 1
                try:
                    p.apply(c)
                except PatchError:
                    continue
                applied = True
                break
            if applied:
                pos = fr[0]
                break
            frames.pop()
        if not applied:
            raise BuildError(f"layer {r + 1}: vertex word {format_word(p.vertex_word(v))} cannot be "
                             f"completed within the last {window} decisions")
        if len(frames) > window:
            del frames[:len(frames) - window]
            cut = frames[0][4]
            if cut >= _TRIM_EVERY:
                del p._log[:cut]
                for fr in frames:
                    fr[4] -= cut
    p._attr("completed_layers", r + 1)


def constructive_build(f, n: int, max_faces: int = DEFAULT_MAX_FACES, window: int = BUILD_WINDOW,
                       max_nodes: int | None = None) -> Patch:
    """An ``n``-layer patch around one fan.

    Each layer is closed by a depth-first search that branches on the
    boundary vertex with fewest completions and may revisit only its last
    ``window`` decisions.  ``max_faces`` guards memory: crossing it raises
    :class:`BuildError` instead of exhausting the host.
    """
    t = _instance_type(f)
    if int(n) != n or n < 1:
        raise ValueError(f"layer count must be a positive integer, got {n}")
    p = new_fan(t)
    while p.completed_layers < n:
        limit = max_nodes if max_nodes is not None else 50 * p.boundary_len + 1000
        p._log = []
        try:
            _close_layer_bounded(p, max_faces, window, limit)
        finally:
            p._log = None
    problems = validate_patch(p)
    if problems:
        raise BuildError("built patch is invalid: " + "; ".join(problems[:5]))
    return p


# ----------------------------------------------------------------------
# neighborhoods of odd faces and the forced chain

F1 = "F1"
F2 = "F2"
OTHER = "Other"

_edge_words_cache: dict[tuple[tuple[int, ...], int], frozenset] = {}


def _valid_edge_words(t: CyclicType, size: int) -> frozenset:
    key = (t.canonical, size)
    if key not in _edge_words_cache:
        _edge_words_cache[key] = frozenset(w.edges for w in enumerate_face_neighborhoods(t, size))
    return _edge_words_cache[key]


def chain_sizes(f) -> list[int]:
    """The odd sizes 5, 7, 9, ... of a kn tuple (primes for kn_prime)."""
    if isinstance(f, FamilyInstance):
        n = f.parameter[0]
        return [f.odd_map.get(2 * i + 5, 2 * i + 5) for i in range(n + 1)]
    t = _instance_type(f)
    odd = sorted(k for k in t.sizes if k % 2)
    return odd


def classify_neighborhood(t: CyclicType, odd_size: int, word) -> str:
    """F1 if the word contains the next odd size, F2 if it is otherwise valid.

    ``word`` lists the faces across the edges of the central face (a
    :class:`NeighborhoodWord` is accepted too).  Validity means some
    completion of all corners of the face produces exactly this word.
    """
    if odd_size % 2 == 0 or odd_size not in t.sizes:
        raise ValueError(f"{odd_size} is not an odd size of {t}")
    if isinstance(word, NeighborhoodWord):
        word = word.edges
    word = tuple(int(k) for k in word)
    if len(word) != odd_size:
        return OTHER
    odd = sorted(k for k in t.sizes if k % 2)
    j = odd.index(odd_size)
    nxt = odd[j + 1] if j + 1 < len(odd) else None
    canon = canonical_neighborhood(odd_size, word).edges
    if canon not in _valid_edge_words(t, odd_size):
        return OTHER
    return F1 if nxt is not None and nxt in word else F2


@dataclass
class ChainLevel:
    size: int
    partials: int = 0
    partial_words: set = field(default_factory=set)
    extensions: int = 0
    extension_words: set = field(default_factory=set)
    f1: int = 0
    f2: int = 0
    blocked: int = 0

    @property
    def all_f1(self) -> bool:
        return self.extensions > 0 and self.f2 == 0

    def as_dict(self) -> dict:
        return {
            "size": self.size, "partials": self.partials, "extensions": self.extensions,
            "f1": self.f1, "f2": self.f2, "blocked": self.blocked,
            "partial_words": [list(w) for w in sorted(self.partial_words)],
            "extension_words": [list(w) for w in sorted(self.extension_words)],
        }


@dataclass
class ChainReport:
    type: CyclicType
    n: int
    levels: list[ChainLevel]
    exhausted: bool
    failed_level: int | None
    elapsed: float

    @property
    def holds(self) -> bool:
        return self.exhausted and self.failed_level is None

    def as_dict(self) -> dict:
        return {"type": list(self.type.entries), "n": self.n, "exhausted": self.exhausted,
                "holds": self.holds, "failed_level": self.failed_level,
                "elapsed": round(self.elapsed, 3),
                "levels": [lv.as_dict() for lv in self.levels]}


class _Timeout(Exception):
    pass


def forced_chain_verify(f, n: int | None = None, budget_seconds: float | None = None) -> ChainReport:
    """Follow the chain of odd faces 5, 7, ..., 2n+5 outward from a pentagon.

    Level 0 takes every surrounding of a pentagon (every position of 5 in
    the tuple as seed).  At level i each surrounding of the current
    (2i+5)-gon is recorded; every (2i+7)-gon across one of its edges is
    then surrounded in turn inside the same patch, as level i+1.  The
    chain holds when every surrounding at levels below n contains the next
    odd size and no (2n+5)-gon reached this way can be surrounded at all.
    """
    t = _instance_type(f)
    if n is None:
        if not isinstance(f, FamilyInstance):
            raise ValueError("n is required when passing a bare type")
        n = f.parameter[0]
    sizes = chain_sizes(f)
    if len(sizes) < n + 1:
        raise ValueError(f"{t} has only {len(sizes)} odd sizes; a chain of length {n} needs {n + 1}")
    sizes = sizes[:n + 1]
    levels = [ChainLevel(s) for s in sizes]
    started = time.monotonic()
    deadline = None if budget_seconds is None else started + budget_seconds

    def visit(p: Patch, face: int, i: int) -> None:
        lv = levels[i]
        lv.partials += 1
        lv.partial_words.add(canonical_neighborhood(
            sizes[i], [p.fsize[g] if g >= 0 else 0 for g in face_ring(p, face)]).edges)
        found = 0
        for _ in surround(p, [face]):
            if deadline is not None and time.monotonic() > deadline:
                raise _Timeout()
            found += 1
            lv.extensions += 1
            ring = face_ring(p, face)
            lv.extension_words.add(canonical_neighborhood(sizes[i], [p.fsize[g] for g in ring]).edges)
            nxt = [g for g in dict.fromkeys(ring) if i < n and p.fsize[g] == sizes[i + 1]]
            if nxt:
                lv.f1 += 1
            else:
                lv.f2 += 1
            for g in nxt:
                visit(p, g, i + 1)
        if not found:
            lv.blocked += 1

    exhausted = True
    try:
        for p in seeded_patches(t, sizes[0]):
            visit(p, 0, 0)
    except _Timeout:
        exhausted = False
    failed = None
    for i, lv in enumerate(levels):
        ok = (lv.extensions == 0) if i == n else lv.all_f1
        if not ok:
            failed = i
            break
    return ChainReport(t, n, levels, exhausted, failed, time.monotonic() - started)
