"""Counting obstructions to periodicity and corner forcing for dual tiles.

Two independent arguments live here.

* Incidence counting for the 14-entry family ``[3,5,k,5,l,5,m,5,l,5,k,5,l,5]``:
  local enumeration fixes how each triangle and each pentagon meets the
  other size, and the two edge:vertex incidence ratios a compact quotient
  would have to share come out different.
* Corner forcing for the dual tile of a fan: every way copies of the tile
  can fill 360 degrees at a vertex is enumerated exactly, and mixed
  solutions are ruled out by matching side lengths around the vertex.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclic import CyclicType
from .families import ka_parameters
from .geometry import inradius, solve_side_length
from .neighborhoods import (enumerate_face_neighborhoods, incidence_profile,
                            profile_census)
from .patch import Patch
from .unit_fractions import CornerConfiguration, is_prime, vertex_corner_solutions

CONTRADICTION = "Contradiction"
NO_OBSTRUCTION = "NoObstruction"
MONOTYPE = "AllVerticesMonotype"
UNFORCED = "Unforced"

DISTINCT_MARGIN = 1e-9


# ----------------------------------------------------------------------
# incidence census on patches

@dataclass
class IncidenceCensus:
    a: int
    b: int
    faces: int
    edge_incidences: int
    vertex_only_incidences: int
    profiles: Counter

    @property
    def ratio(self) -> Fraction | None:
        if self.vertex_only_incidences == 0:
            return None
        return Fraction(self.edge_incidences, self.vertex_only_incidences)


def incidence_census(p: Patch, a: int, b: int) -> IncidenceCensus:
    """Incidences of fully interior ``a``-gons with ``b``-gons.

    Only faces all of whose vertices are interior are counted, so every
    counted face has its complete neighborhood inside the patch.
    """
    prof: Counter = Counter()
    e_total = v_total = n = 0
    for f in p.interior_faces():
        if p.fsize[f] != a:
            continue
        e, v = incidence_profile(p, f, b)
        prof[(e, v)] += 1
        e_total += e
        v_total += v
        n += 1
    return IncidenceCensus(a, b, n, e_total, v_total, prof)


# ----------------------------------------------------------------------
# the counting contradiction

@dataclass
class PeriodicityVerdict:
    type: CyclicType
    triangle_profiles: dict[tuple[int, int], int]
    pentagon_profiles: dict[tuple[int, int], int]
    triangle_ratio: Fraction | None
    pentagon_min_ratio: Fraction | None
    verdict: str
    arithmetic: list[str] = field(default_factory=list)
    pentagon_words: list[tuple[int, ...]] = field(default_factory=list)
    triangle_words: list[tuple[int, ...]] = field(default_factory=list)

    def ratio_text(self) -> str:
        def fmt(r):
            return "n/a" if r is None else f"{r.numerator}:{r.denominator}"
        return f"{fmt(self.triangle_ratio)} vs {fmt(self.pentagon_min_ratio)}"


def _ratio_set(profiles) -> set[Fraction | None]:
    return {Fraction(e, v) if v else None for (e, v) in profiles}


def periodicity_contradiction(t: CyclicType) -> PeriodicityVerdict:
    """Compare triangle-pentagon incidence ratios forced by local structure.

    In a tiling with compact quotient, the number E of (triangle, pentagon)
    edge incidences and V of vertex-only incidences per fundamental domain
    can be counted from either side.  If every triangle has profile (e, v)
    the ratio E:V equals e:v; if every pentagon profile has a strictly
    different ratio bound, no such tiling exists.
    """
    params = ka_parameters(t)
    if params is None:
        raise ValueError(f"{t} is not of the form [3,5,k,5,l,5,m,5,l,5,k,5,l,5]")
    tri = profile_census(t, 3, 5)
    pen = profile_census(t, 5, 3)
    tri_words = sorted(w.edges for w in enumerate_face_neighborhoods(t, 3))
    pen_words = sorted(w.edges for w in enumerate_face_neighborhoods(t, 5))
    lines = [f"type {t}, (k,l,m) = {params}"]
    lines.append(f"triangle neighborhoods {tri_words}; profiles against pentagons {dict(tri)}")
    lines.append(f"pentagon neighborhoods {pen_words}; profiles against triangles {dict(pen)}")
    tri_ratios = _ratio_set(tri)
    pen_ratios = _ratio_set(pen)
    tri_ratio = next(iter(tri_ratios)) if len(tri_ratios) == 1 else None
    finite = [r for r in pen_ratios if r is not None]
    pen_min = min(finite) if finite and len(finite) == len(pen_ratios) else None
    verdict = NO_OBSTRUCTION
    if tri_ratio is not None and pen_min is not None:
        lines.append(f"every triangle: E:V = {tri_ratio.numerator}:{tri_ratio.denominator}, "
                     f"so globally E:V = {tri_ratio}")
        lines.append(f"every pentagon: E:V >= {pen_min.numerator}:{pen_min.denominator}, "
                     f"so globally E:V >= {pen_min}")
        if pen_min > tri_ratio:
            verdict = CONTRADICTION
            lines.append(f"{pen_min} > {tri_ratio}: the counts cannot agree on a compact quotient")
        else:
            lines.append("the bounds are compatible; no obstruction")
    else:
        lines.append("profiles are not uniform enough to compare; no obstruction")
    return PeriodicityVerdict(t, dict(tri), dict(pen), tri_ratio, pen_min, verdict, lines,
                              pen_words, tri_words)


# ----------------------------------------------------------------------
# corner forcing for dual tiles

@dataclass
class MixedElimination:
    configuration: CornerConfiguration
    eliminated: bool
    reason: str


@dataclass
class ForcingReport:
    type: CyclicType
    solutions: list[CornerConfiguration]
    mixed: list[MixedElimination]
    side_lengths: dict[tuple[int, int], float]
    min_side_gap: float
    consecutive_evens: int
    verdict: str
    notes: list[str] = field(default_factory=list)
    mixed_are_doubled_pairs: bool = True


def _max_even_run(entries) -> int:
    d = len(entries)
    if all(k % 2 == 0 for k in entries):
        return d
    best = run = 0
    for k in list(entries) + list(entries):
        run = run + 1 if k % 2 == 0 else 0
        best = max(best, min(run, d))
    return best


def _prime_structure(t: CyclicType) -> str | None:
    """Why the entries fail to split into odd primes and doubled primes."""
    odd = {k for k in t.sizes if k % 2}
    doubled = {k // 2 for k in t.sizes if k % 2 == 0}
    for k in odd:
        if not is_prime(k):
            return f"odd entry {k} is not prime"
    for q in doubled:
        if not is_prime(q) or q == 2:
            return f"even entry {2 * q} is not twice an odd prime"
    if odd & doubled:
        return f"primes {sorted(odd & doubled)} occur both plain and doubled"
    return None


def side_length_table(t: CyclicType) -> dict[tuple[int, int], float]:
    """Length of each side of the dual tile, keyed by its unordered corner pair."""
    ell = solve_side_length(t)
    r = {k: inradius(k, ell) for k in t.sizes}
    out = {}
    e = t.entries
    for i in range(len(e)):
        a, b = sorted((e[i], e[(i + 1) % len(e)]))
        out[(a, b)] = r[a] + r[b]
    return out


def _vertex_star_exists(t: CyclicType, counts: dict[int, int]) -> bool:
    """Is there a cyclic arrangement of tile corners realizing ``counts``?

    A corner is a tuple position with an orientation.  Going
    counterclockwise around the vertex, each tile's leading side must be
    the trailing side of the next tile; sides match only if they join the
    same pair of corner sizes (distinct pairs have distinct lengths).
    """
    e = t.entries
    d = len(e)
    nodes = []
    for i in range(d):
        if e[i] not in counts:
            continue
        for s in (1, -1):
            lead = tuple(sorted((e[i], e[(i + s) % d])))
            trail = tuple(sorted((e[i], e[(i - s) % d])))
            nodes.append((e[i], lead, trail))
    sizes = sorted(counts)
    total = sum(counts.values())
    key_of = {k: j for j, k in enumerate(sizes)}

    def vec_add(vec, k):
        v = list(vec)
        v[key_of[k]] += 1
        return tuple(v)

    target = tuple(counts[k] for k in sizes)
    for start in range(len(nodes)):
        k0, lead0, trail0 = nodes[start]
        frontier = {(lead0, vec_add((0,) * len(sizes), k0))}
        for _ in range(total - 1):
            nxt = set()
            for lead, vec in frontier:
                for k, ld, tr in nodes:
                    if tr != lead:
                        continue
                    nv = vec_add(vec, k)
                    if nv[key_of[k]] > counts[k]:
                        continue
                    nxt.add((ld, nv))
            frontier = nxt
            if not frontier:
                break
        if any(lead == trail0 and vec == target for lead, vec in frontier):
            return True
    return False


def monotile_forcing(t: CyclicType) -> ForcingReport:
    """Can copies of the dual tile of ``t`` meet at a vertex with mixed corners?

    All corner solutions of sum(1/k) = 1 over the entries are enumerated
    exactly.  Each mixed solution is tested by searching for a cyclic
    arrangement of corners whose adjacent sides have equal length.
    """
    notes = []
    problem = _prime_structure(t)
    run = _max_even_run(t.entries)
    sides = side_length_table(t)
    vals = sorted(sides.items(), key=lambda kv: kv[1])
    gap = min((b[1] - a[1] for a, b in zip(vals, vals[1:])), default=math.inf)
    sols = vertex_corner_solutions(t.sizes)
    mixed = []
    if problem:
        notes.append(f"entries are not odd primes and doubled primes: {problem}")
    if run >= 3:
        notes.append(f"{run} consecutive even entries occur in the tuple")
    if gap <= DISTINCT_MARGIN:
        notes.append(f"two side lengths agree within {gap:.3g}; distinctness fails")
    for c in sols:
        if c.is_monotype:
            continue
        if gap <= DISTINCT_MARGIN:
            mixed.append(MixedElimination(c, False, "side lengths not distinct"))
            continue
        counts = dict(c.counts)
        if _vertex_star_exists(t, counts):
            mixed.append(MixedElimination(c, False, "a side-matching arrangement exists"))
        else:
            mixed.append(MixedElimination(c, True, "no cyclic arrangement matches side lengths"))
    # shape predicted for prime entries: only two doubled primes q1, q2 taken q1 and q2 times
    pairs = all(len(m.configuration.counts) == 2
                and all(k % 2 == 0 and mult == k // 2 for k, mult in m.configuration.counts)
                for m in mixed)
    ok = not problem and run < 3 and all(m.eliminated for m in mixed)
    verdict = MONOTYPE if ok else UNFORCED
    return ForcingReport(t, sols, mixed, sides, gap, run, verdict, notes, pairs)
