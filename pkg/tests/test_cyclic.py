from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tessella.cyclic import (CyclicType, Geometry, angle_sum, canonical_entries, canonical_form,
                             classify, format_word, is_extendable_subword, juxtapose, parse_word,
                             require_hyperbolic, subword_matches)
from tessella.families import kbar, kn

sizes = st.integers(min_value=3, max_value=40)
tuples = st.lists(sizes, min_size=3, max_size=12)


@pytest.mark.parametrize("given_, expected", [
    ([4, 4, 4, 4], (4, 4, 4, 4)),
    ([5, 3, 5, 4], (3, 5, 4, 5)),
    ([3, 4, 5], (3, 4, 5)),
    ([3, 5, 4], (3, 4, 5)),
])
def test_canonical_examples(given_, expected):
    assert canonical_form(CyclicType(given_)).entries == expected


@given(tuples, st.integers(min_value=0, max_value=11), st.booleans())
def test_canonical_invariant_under_symmetry(entries, r, rev):
    seq = list(reversed(entries)) if rev else list(entries)
    r %= len(seq)
    moved = seq[r:] + seq[:r]
    assert canonical_entries(moved) == canonical_entries(entries)
    assert CyclicType(moved) == CyclicType(entries)
    assert hash(CyclicType(moved)) == hash(CyclicType(entries))


@given(tuples)
def test_canonical_idempotent_and_minimal(entries):
    c = canonical_entries(entries)
    assert canonical_entries(c) == c
    # brute force: least over explicit rotations of both readings
    d = len(entries)
    options = [tuple(s[i:] + s[:i]) for s in (entries, entries[::-1]) for i in range(d)]
    assert c == min(options)


@given(tuples)
def test_angle_sum_matches_float_and_integer_criterion(entries):
    s = angle_sum(entries)
    assert abs(float(s) - sum((k - 2) / k for k in entries)) < 1e-12
    # integer form of the Euclidean test: sum (k-2) * L/k == 2L
    L = 1
    for k in entries:
        L = L * k
    total = sum((k - 2) * (L // k) for k in entries)
    g = classify(entries)
    assert (g is Geometry.EUCLIDEAN) == (total == 2 * L)
    assert (g is Geometry.HYPERBOLIC) == (total > 2 * L)


def test_angle_sum_examples():
    assert angle_sum(CyclicType([6, 6, 6])) == 2
    assert angle_sum(CyclicType([3, 3, 3])) == 1
    assert angle_sum(CyclicType([4, 5, 4, 5])) == Fraction(11, 5)
    assert classify([3, 3, 3]) is Geometry.SPHERICAL
    assert classify([4, 8, 8]) is Geometry.EUCLIDEAN
    assert classify([3, 7, 42]) is Geometry.EUCLIDEAN
    assert classify([7, 7, 7]) is Geometry.HYPERBOLIC


def test_require_hyperbolic_rejects_flat():
    with pytest.raises(ValueError, match="euclidean"):
        require_hyperbolic(CyclicType([6, 6, 6]))


@pytest.mark.parametrize("bad", [[3, 4], [2, 5, 5], [3, 4, 1]])
def test_invalid_types(bad):
    with pytest.raises(ValueError):
        CyclicType(bad)


def test_non_integer_rejected():
    with pytest.raises(TypeError):
        CyclicType([3, 4.0, 5])


def _doubled_search(word, t):
    """Oracle: substring search in the doubled forward and reversed lists."""
    out = set()
    d = len(t)
    for orient, seq in ((1, list(t.entries)), (-1, list(t.entries)[::-1])):
        dbl = seq + seq
        for off in range(d):
            if dbl[off:off + len(word)] == list(word):
                out.add((orient, off))
    return out


@given(st.lists(st.integers(3, 6), min_size=3, max_size=9), st.lists(st.integers(3, 6), min_size=1, max_size=4))
def test_subword_matches_oracle(entries, word):
    t = CyclicType(entries)
    if len(word) > len(t):
        assert subword_matches(word, t) == []
    else:
        assert set(subword_matches(word, t)) == _doubled_search(word, t)


def test_subword_examples():
    t = CyclicType([3, 5, 7])
    assert is_extendable_subword([5, 7], t)[0]
    assert not is_extendable_subword([7, 7], t)[0]
    # a window around a pentagon position reproduces the tuple locally
    k = kn(1)
    e = k.entries
    for i, x in enumerate(e):
        if x == 5:
            w = [e[i - 1], 5, e[(i + 1) % len(e)]]
            ok, where = is_extendable_subword(w, k)
            assert ok and (1, (i - 1) % len(e)) in where
    with pytest.raises(ValueError):
        subword_matches([], t)


def test_juxtapose():
    assert juxtapose([3, 5], [7, 9]).entries == (3, 5, 7, 9)
    assert len(juxtapose(kn(1), kbar(1))) == 33


@given(tuples)
def test_parse_format_round_trip(entries):
    assert parse_word(format_word(entries)) == tuple(entries)


@pytest.mark.parametrize("text", ["3,4,5", "[3,x,5]", "[3,2,5]", "(3,4)"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_euclidean_triples_by_search():
    # oracle: 1/a + 1/b + 1/c = 1/2  <=>  2(ab + bc + ca) = abc
    found = [(a, b, c) for a in range(3, 51) for b in range(a, 51) for c in range(b, 51)
             if classify([a, b, c]) is Geometry.EUCLIDEAN]
    oracle = [(a, b, c) for a in range(3, 51) for b in range(a, 51) for c in range(b, 51)
              if 2 * (a * b + b * c + c * a) == a * b * c]
    assert found == oracle
    assert len(found) == 10
    assert (3, 7, 42) in found and (6, 6, 6) in found
