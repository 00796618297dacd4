from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tessella.cyclic import CyclicType, subword_matches
from tessella.families import kn
from tessella.patch import (DeadEnd, PatchError, StaleCompletion, apply_completion, close_layer,
                            enumerate_fan_completions, grow, new_fan, validate_patch)

hyperbolic_small = st.sampled_from([[4, 5, 4, 5], [7, 7, 7], [3, 3, 4, 3, 5], [4, 6, 14], [5, 5, 5, 5],
                                    [3, 8, 3, 8], [4, 4, 4, 5], [6, 6, 7]])


def euler(p):
    return p.n_vertices - p.n_edges + p.n_faces


@pytest.mark.parametrize("t, v, e, f, b", [
    ([4, 5, 4, 5], 11, 14, 4, 10),
    ([7, 7, 7], 16, 18, 3, 15),
])
def test_fan_counts(t, v, e, f, b):
    p = new_fan(CyclicType(t))
    assert (p.n_vertices, p.n_edges, p.n_faces, p.boundary_len) == (v, e, f, b)
    assert euler(p) == 1
    assert p.completed_layers == 1
    assert validate_patch(p) == []


@given(hyperbolic_small, st.integers(0, 4), st.booleans())
def test_fan_boundary_length(t, rot, rev):
    t = CyclicType(t)
    p = new_fan(t, rotation=rot % len(t), reflect=rev)
    assert p.boundary_len == sum(k - 2 for k in t)
    assert len(p.boundary_cycle()) == p.boundary_len
    assert p.vertex_word(p.origin_vertex) in t.images
    assert validate_patch(p) == []


@given(hyperbolic_small, st.randoms(use_true_random=False))
def test_random_completions_keep_invariants(t, rnd):
    t = CyclicType(t)
    p = new_fan(t)
    for _ in range(12):
        bnd = [v for v in p.boundary_cycle()]
        v = rnd.choice(bnd)
        opts = enumerate_fan_completions(p, v)
        if not opts:
            continue
        c = rnd.choice(opts)
        before = (p.n_vertices, p.n_edges, p.n_faces)
        try:
            p.apply(c)
        except PatchError:
            assert (p.n_vertices, p.n_edges, p.n_faces) == before
            continue
        assert p.vinterior[v]
        assert p.vertex_word(v) in t.images
        assert euler(p) == 1
    assert validate_patch(p) == []


def test_completions_are_consistent_with_type():
    t = CyclicType([4, 5, 4, 5])
    p = new_fan(t)
    v = p.boundary_cycle()[0]
    opts = enumerate_fan_completions(p, v)
    assert opts
    for c in opts:
        q = apply_completion(p, c)
        assert q.vertex_word(v) in t.images
        assert p.n_faces == 4  # original untouched


def test_completions_follow_subword_matches():
    t = kn(1)
    p = new_fan(t)
    for v in p.boundary_cycle():
        w = p.vertex_word(v)
        opts = p.completions(v)
        if not subword_matches(w, t):
            assert opts == []
        for c in opts:
            q = apply_completion(p, c)
            assert q.vertex_word(v) in t.images


def test_completion_order_is_deterministic():
    t = kn(1)
    a = new_fan(t)
    b = new_fan(t)
    for v in a.boundary_cycle()[:6]:
        ka = [(c.sizes, c.forward, c.backward, c.orientation, c.offset) for c in a.completions(v)]
        kb = [(c.sizes, c.forward, c.backward, c.orientation, c.offset) for c in b.completions(v)]
        assert ka == kb
        keys = [(-c.orientation, c.offset, c.depth, c.forward) for c in a.completions(v)]
        assert keys == sorted(keys)


def test_stale_completion_rejected():
    p = new_fan(CyclicType([4, 5, 4, 5]))
    bnd = p.boundary_cycle()
    c0 = p.completions(bnd[0])[0]
    c1 = p.completions(bnd[3])[0]
    p.apply(c0)
    with pytest.raises(StaleCompletion):
        p.apply(c1)


def test_close_layers_four_five():
    t = CyclicType([4, 5, 4, 5])
    p = new_fan(t)
    for r in range(1, 5):
        targets = p.boundary_cycle()
        p = close_layer(p)
        assert not isinstance(p, DeadEnd)
        assert p.completed_layers == r + 1
        assert all(p.vinterior[v] for v in targets)
        assert validate_patch(p) == []
        assert euler(p) == 1


def test_close_layer_dead_end():
    # an odd face between two distinct sizes cannot be surrounded
    r = close_layer(new_fan(CyclicType([4, 7, 10])))
    assert isinstance(r, DeadEnd)
    assert r.layer == 1
    assert r.word in {(10, 7), (7, 10), (4, 7), (7, 4)} or len(r.word) == 2


def test_checkpoint_rollback_restores():
    p = new_fan(kn(1))
    snap = (bytes(p.twin), bytes(p.next), bytes(p.origin), bytes(p.fsize), p.boundary_len)
    mark = p.checkpoint()
    for v in p.boundary_cycle()[:10]:
        if not p.vinterior[v]:
            opts = p.completions(v)
            if opts:
                p.apply(opts[0])
    assert p.n_faces > 17
    p.rollback(mark)
    assert (bytes(p.twin), bytes(p.next), bytes(p.origin), bytes(p.fsize), p.boundary_len) == snap
    assert validate_patch(p) == []


def test_copy_is_independent():
    p = new_fan(CyclicType([7, 7, 7]))
    q = p.copy()
    q = close_layer(q, in_place=True)
    assert p.n_faces == 3 and q.n_faces > 3
    assert validate_patch(p) == [] and validate_patch(q) == []


def test_validate_detects_corruption():
    p = new_fan(CyclicType([4, 5, 4, 5]))
    p.twin[0] = 3
    assert any("twin not involutive" in s for s in validate_patch(p))


def test_validate_detects_wrong_flag():
    p = new_fan(CyclicType([4, 5, 4, 5]))
    p.vinterior[3] = 1
    assert validate_patch(p)


def test_grown_patch_matches_face_cycle_oracle(census):
    t = kn(1)
    p = grow(new_fan(t), 1)
    assert not isinstance(p, DeadEnd)
    faces = [p.face_vertices(f) for f in range(p.n_faces)]
    interior, bad = census(faces, t)
    assert interior == sum(p.vinterior)
    assert bad == 0


def test_layer_bookkeeping():
    p = grow(new_fan(CyclicType([4, 5, 4, 5])), 2)
    assert p.completed_layers == 3
    assert set(p.flayer) == {1, 2, 3}
    # every face of layer r+1 shares a vertex with a face of layer r
    for f in range(p.n_faces):
        r = p.flayer[f]
        if r > 1:
            near = {p.flayer[g] for v in p.face_vertices(f) for g in p.vertex_faces(v)}
            assert r - 1 in near


def mirror_patch(p):
    """The same patch seen in a mirror: every face cycle reversed."""
    from tessella.io import decode_patch, encode_patch
    doc = encode_patch(p)
    for f in doc["faces"]:
        f["vertex_ids"] = f["vertex_ids"][::-1]
    for v in doc["vertices"]:
        faces = p.vertex_faces(v["id"])[::-1]
        if v["interior"]:
            i = faces.index(min(faces))
            faces = faces[i:] + faces[:i]
        v["word"] = [p.fsize[f] for f in faces]
    return decode_patch(doc)


def mirrored_key(c):
    return (c.sizes[::-1], c.peel_backward, c.peel_forward, c.backward, c.forward)


def applicable(p, v):
    out = set()
    for c in p.completions(v):
        mark = p.checkpoint()
        try:
            p.apply(c)
            out.add(c)
        except PatchError:
            pass
        p.rollback(mark)
    return out


@given(st.sampled_from([[3, 3, 3, 3, 7], [3, 6, 4, 6], [3, 3, 4, 3, 5], [4, 5, 4, 5], [3, 8, 3, 8],
                        [4, 6, 14], [3, 4, 3, 4, 3, 5]]),
       st.integers(0, 2**32 - 1), st.integers(0, 40))
def test_completions_commute_with_mirroring(t, seed, steps):
    rng = random.Random(seed)
    p = new_fan(CyclicType(t), rotation=rng.randrange(len(t)))
    for _ in range(steps):
        v = rng.choice(p.boundary_vertices())
        opts = list(applicable(p, v))
        if not opts:
            break
        p.apply(rng.choice(opts))
    q = mirror_patch(p)
    for v in p.boundary_vertices():
        mine = {mirrored_key(c) for c in applicable(p, v)}
        theirs = {c.key for c in applicable(q, v)}
        assert mine == theirs
        assert {mirrored_key(c) for c in p.completions(v)} == {c.key for c in q.completions(v)}


def test_polygon_can_close_on_an_existing_vertex():
    # from layer 3 on, a triangle at a vertex can end on a boundary vertex that
    # the next polygon around the same vertex then starts from
    p = new_fan(CyclicType([3, 6, 4, 6]))
    peeled = []

    def chooser(q, v, opts):
        for c in opts:
            if c.peel_forward or c.peel_backward:
                r = apply_completion(q, c)
                assert validate_patch(r) == [] and r.vinterior[v]
                peeled.append(c)
        return opts[0] if opts else None

    for _ in range(3):
        p = close_layer(p, chooser)
        assert not isinstance(p, DeadEnd)
    assert peeled
