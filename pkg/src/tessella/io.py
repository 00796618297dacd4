"""JSON documents for patches.

A document stores the combinatorics only: the type, every vertex with its
current word, every face with its vertex cycle, and the layer bookkeeping.
Half-edges are rebuilt from the face cycles on decode.  Encoding is
canonical (sorted keys, fixed indentation) so equal patches give equal bytes.
"""
from __future__ import annotations

import json

from .cyclic import CyclicType
from .patch import OUTER, Patch, validate_patch

FORMAT_VERSION = 1


class DecodeError(ValueError):
    """Malformed or inconsistent patch document; ``locus`` is a JSON pointer."""

    def __init__(self, locus: str, message: str):
        super().__init__(f"{locus or '/'}: {message}")
        self.locus = locus


def _stored_word(p: Patch, v: int) -> list[int]:
    """Vertex word; around an interior vertex it starts at the lowest face id."""
    faces = p.vertex_faces(v)
    if p.vinterior[v] and faces:
        i = faces.index(min(faces))
        faces = faces[i:] + faces[:i]
    return [p.fsize[f] for f in faces]


def encode_patch(p: Patch) -> dict:
    vertices = [{"id": v, "word": _stored_word(p, v), "interior": bool(p.vinterior[v]),
                 "layer": p.vlayer[v]} for v in range(p.n_vertices)]
    faces = [{"id": f, "size": p.fsize[f], "layer": p.flayer[f], "vertex_ids": p.face_vertices(f)}
             for f in range(p.n_faces)]
    return {
        "format_version": FORMAT_VERSION,
        "type": list(p.type.entries),
        "origin": p.origin_vertex,
        "completed_layers": p.completed_layers,
        "vertices": vertices,
        "faces": faces,
    }


def dumps(p: Patch) -> str:
    return json.dumps(encode_patch(p), sort_keys=True, indent=1) + "\n"


def loads(text: str) -> Patch:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DecodeError("", f"not valid JSON ({e.msg} at line {e.lineno})") from None
    return decode_patch(doc)


def save(p: Patch, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(p))


def load(path) -> Patch:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _int(x, locus: str, lo: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DecodeError(locus, f"expected an integer, got {x!r}")
    if lo is not None and x < lo:
        raise DecodeError(locus, f"expected an integer >= {lo}, got {x}")
    return x


def _field(obj, key: str, locus: str):
    if not isinstance(obj, dict):
        raise DecodeError(locus, "expected an object")
    if key not in obj:
        raise DecodeError(f"{locus}/{key}", "missing")
    return obj[key]


def decode_patch(doc) -> Patch:
    version = _field(doc, "format_version", "")
    if version != FORMAT_VERSION:
        raise DecodeError("/format_version", f"unsupported version {version!r} (this build reads {FORMAT_VERSION})")
    raw_type = _field(doc, "type", "")
    if not isinstance(raw_type, list) or not raw_type:
        raise DecodeError("/type", "expected a non-empty list of face sizes")
    try:
        t = CyclicType([_int(k, f"/type/{i}", 3) for i, k in enumerate(raw_type)])
    except ValueError as e:
        if isinstance(e, DecodeError):
            raise
        raise DecodeError("/type", str(e)) from None
    verts = _field(doc, "vertices", "")
    faces = _field(doc, "faces", "")
    if not isinstance(verts, list):
        raise DecodeError("/vertices", "expected a list")
    if not isinstance(faces, list):
        raise DecodeError("/faces", "expected a list")

    p = Patch(t)
    nv = len(verts)
    vinfo = {}
    for i, v in enumerate(verts):
        loc = f"/vertices/{i}"
        vid = _int(_field(v, "id", loc), f"{loc}/id", 0)
        if vid in vinfo:
            raise DecodeError(f"{loc}/id", f"duplicate vertex id {vid}")
        if vid >= nv:
            raise DecodeError(f"{loc}/id", f"vertex id {vid} out of range (ids must be 0..{nv - 1})")
        interior = _field(v, "interior", loc)
        if not isinstance(interior, bool):
            raise DecodeError(f"{loc}/interior", "expected a boolean")
        word = _field(v, "word", loc)
        if not isinstance(word, list):
            raise DecodeError(f"{loc}/word", "expected a list")
        layer = _int(v.get("layer", 0), f"{loc}/layer", 0)
        vinfo[vid] = (i, tuple(word), interior, layer)
    for vid in range(nv):
        p.vhe.append(-1)
        p.vinterior.append(0)
        p.vlayer.append(vinfo[vid][3])

    cycles: dict[int, list[int]] = {}
    for i, f in enumerate(faces):
        loc = f"/faces/{i}"
        fid = _int(_field(f, "id", loc), f"{loc}/id", 0)
        if fid in cycles:
            raise DecodeError(f"{loc}/id", f"duplicate face id {fid}")
        if fid >= len(faces):
            raise DecodeError(f"{loc}/id", f"face id {fid} out of range (ids must be 0..{len(faces) - 1})")
        size = _int(_field(f, "size", loc), f"{loc}/size", 3)
        layer = _int(_field(f, "layer", loc), f"{loc}/layer", 0)
        cyc = _field(f, "vertex_ids", loc)
        if not isinstance(cyc, list) or len(cyc) != size:
            raise DecodeError(f"{loc}/vertex_ids", f"expected {size} vertex ids")
        cyc = [_int(x, f"{loc}/vertex_ids/{j}", 0) for j, x in enumerate(cyc)]
        for j, x in enumerate(cyc):
            if x >= nv:
                raise DecodeError(f"{loc}/vertex_ids/{j}", f"unknown vertex {x}")
        if len(set(cyc)) != size:
            raise DecodeError(f"{loc}/vertex_ids", "a vertex repeats within the face")
        cycles[fid] = (cyc, layer, i)

    # interior half-edges, one per face side
    directed: dict[tuple[int, int], int] = {}
    for fid in range(len(faces)):
        cyc, layer, i = cycles[fid]
        p.fsize.append(len(cyc))
        p.flayer.append(layer)
        first = len(p.twin)
        p.fhe.append(first)
        k = len(cyc)
        for j in range(k):
            a, b = cyc[j], cyc[(j + 1) % k]
            if (a, b) in directed:
                raise DecodeError(f"/faces/{i}/vertex_ids", f"edge {a}->{b} is used twice in the same direction")
            h = len(p.twin)
            directed[(a, b)] = h
            p.twin.append(-1)
            p.origin.append(a)
            p.hface.append(fid)
            p.next.append(first + (j + 1) % k)
            p.prev.append(first + (j - 1) % k)
    # twins and the outer face
    outer_out: dict[int, int] = {}
    for (a, b), h in list(directed.items()):
        if p.twin[h] >= 0:
            continue
        g = directed.get((b, a))
        if g is not None:
            p.twin[h] = g
            p.twin[g] = h
            continue
        o = len(p.twin)
        p.twin.append(h)
        p.twin[h] = o
        p.origin.append(b)
        p.hface.append(OUTER)
        p.next.append(-1)
        p.prev.append(-1)
        if b in outer_out:
            raise DecodeError("/faces", f"boundary pinches at vertex {b}")
        outer_out[b] = o
    for v, o in outer_out.items():
        a = p.origin[p.twin[o]]  # outer half-edge runs v -> a
        nxt = outer_out.get(a)
        if nxt is None:
            raise DecodeError("/faces", f"boundary is not closed at vertex {a}")
        p.next[o] = nxt
        p.prev[nxt] = o
    for h in range(len(p.twin)):
        v = p.origin[h]
        if p.hface[h] == OUTER or p.vhe[v] < 0:
            p.vhe[v] = h
    for v in range(nv):
        p.vinterior[v] = 0 if v in outer_out else 1
        if p.vhe[v] < 0 and nv > 1:
            raise DecodeError(f"/vertices/{vinfo[v][0]}", f"vertex {v} lies on no face")
    p.boundary_len = len(outer_out)
    origin = _int(_field(doc, "origin", ""), "/origin", 0)
    if origin >= max(nv, 1):
        raise DecodeError("/origin", f"unknown vertex {origin}")
    p.origin_vertex = origin
    p.completed_layers = _int(_field(doc, "completed_layers", ""), "/completed_layers", 0)

    for vid in range(nv):
        i, word, interior, _ = vinfo[vid]
        if bool(p.vinterior[vid]) != interior:
            raise DecodeError(f"/vertices/{i}/interior", f"vertex {vid} is {'not ' if interior else ''}on the boundary")
        actual = _stored_word(p, vid)
        if tuple(actual) != word:
            raise DecodeError(f"/vertices/{i}/word", f"stored word {list(word)} differs from "
                                                     f"the faces around vertex {vid}: {actual}")
    problems = validate_patch(p)
    if problems:
        raise DecodeError("", "decoded patch violates invariants: " + "; ".join(problems[:5]))
    return p


__all__ = ["FORMAT_VERSION", "DecodeError", "encode_patch", "decode_patch", "dumps", "loads", "save", "load"]
