from __future__ import annotations

from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def face_cycle_census(faces, t):
    """Independent check of a patch given only its face vertex cycles.

    Returns (interior vertex count, interior vertices whose word is not a
    rotation/reflection of ``t``).  No half-edge structure is used: the
    faces around a vertex are chained by matching neighbours in the cycles.
    """
    inc = defaultdict(dict)
    seen_edges = set()
    for fi, cyc in enumerate(faces):
        k = len(cyc)
        for i, v in enumerate(cyc):
            a, b = cyc[i - 1], cyc[(i + 1) % k]
            assert a not in inc[v], f"vertex {v} meets two faces after {a}"
            inc[v][a] = (fi, b)
            assert (v, b) not in seen_edges, f"directed edge {v}->{b} twice"
            seen_edges.add((v, b))
    interior = bad = 0
    for v, d in inc.items():
        a0 = next(iter(d))
        a = a0
        word = []
        closed = False
        while True:
            fi, b = d[a]
            word.append(len(faces[fi]))
            if b not in d:
                break
            a = b
            if a == a0:
                closed = True
                break
        if closed and len(word) == len(d):
            interior += 1
            if tuple(word) not in t.images:
                bad += 1
    return interior, bad


@pytest.fixture
def census():
    return face_cycle_census


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
