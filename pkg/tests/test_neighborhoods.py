from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tessella.cyclic import CyclicType, Geometry, classify
from tessella.families import ka, kn
from tessella.neighborhoods import (canonical_neighborhood, enumerate_face_neighborhoods,
                                    profile_census, seeded_patches, surround, surroundable)
from tessella.patch import validate_patch


def chained_corner_words(t, s):
    """Oracle for edge words: pick a (pred, succ) pair at every corner from
    the windows around ``s`` in ``t`` and require succ at corner j to equal
    pred at corner j+1.  It ignores interactions further out, so it is an
    upper bound on what the engine may return."""
    e = t.entries
    d = len(e)
    pairs = set()
    for seq in (e, e[::-1]):
        for i in range(d):
            if seq[i] == s:
                pairs.add((seq[i - 1], seq[(i + 1) % d]))
    pairs = sorted(pairs)
    words = set()

    def go(chosen):
        if len(chosen) == s:
            if chosen[-1][1] == chosen[0][0]:
                words.add(canonical_neighborhood(s, [c[1] for c in chosen]).edges)
            return
        for c in pairs:
            if not chosen or chosen[-1][1] == c[0]:
                go(chosen + [c])

    go([])
    return words


@pytest.mark.parametrize("t, s", [(kn(1), 5), (kn(1), 7), (ka(7, 11, 13), 5), (ka(7, 11, 13), 3),
                                  (CyclicType([4, 5, 4, 5]), 4), (CyclicType([5, 6, 7, 6]), 7)])
def test_edge_words_match_chained_oracle(t, s):
    got = {w.edges for w in enumerate_face_neighborhoods(t, s)}
    assert got == chained_corner_words(t, s)


@settings(max_examples=25)
@given(st.lists(st.integers(5, 9), min_size=3, max_size=5))
def test_edge_words_within_oracle_bound(entries):
    t = CyclicType(entries)
    if classify(t) is not Geometry.HYPERBOLIC:
        return
    s = min(t.sizes)
    got = {w.edges for w in enumerate_face_neighborhoods(t, s)}
    assert got <= chained_corner_words(t, s)


def test_ka_triangle_and_pentagon_words():
    t = ka(7, 11, 13)
    assert {w.edges for w in enumerate_face_neighborhoods(t, 3)} == {(5, 5, 5)}
    pent = {w.edges for w in enumerate_face_neighborhoods(t, 5)}
    assert (3, 7, 11, 13, 11) in pent
    assert pent == {(3, 7, 3, 7, 11), (3, 7, 11, 3, 11), (3, 7, 11, 7, 11), (3, 7, 11, 13, 11)}


def test_profiles_ka():
    t = ka(7, 11, 13)
    assert set(profile_census(t, 3, 5)) == {(3, 15)}
    assert set(profile_census(t, 5, 3)) == {(1, 3), (2, 1)}


def test_surround_restores_patch():
    t = kn(1)
    for p in seeded_patches(t, 5):
        before = (bytes(p.twin), bytes(p.fsize), p.boundary_len)
        n = 0
        for _ in surround(p, [0]):
            assert validate_patch(p) == []
            assert all(p.vinterior[v] for v in p.face_vertices(0))
            n += 1
        assert n > 0
        assert (bytes(p.twin), bytes(p.fsize), p.boundary_len) == before
        assert surroundable(p, [0])
        assert (bytes(p.twin), bytes(p.fsize), p.boundary_len) == before
        break


def test_canonical_neighborhood_symmetry():
    a = canonical_neighborhood(5, [8, 10, 7, 8, 10])
    b = canonical_neighborhood(5, [10, 8, 10, 7, 8][::-1])
    c = canonical_neighborhood(5, [7, 8, 10, 8, 10])
    assert a == b == c


def test_full_mode_words_project_to_edge_words():
    t = kn(1)
    full = enumerate_face_neighborhoods(t, 5, mode="full")
    edge = {w.edges for w in enumerate_face_neighborhoods(t, 5)}
    assert {w.edges for w in full} == edge
    for w in full:
        assert all(f[0] == 5 for f in w.fans)
        assert all(tuple(f) in t.images for f in w.fans)
        for j, f in enumerate(w.fans):
            assert f[-1] == w.edges[j]
            assert f[1] == w.edges[j - 1]


def test_bad_mode_and_size():
    with pytest.raises(ValueError):
        enumerate_face_neighborhoods(kn(1), 5, mode="nope")
    with pytest.raises(ValueError):
        next(seeded_patches(kn(1), 9))
