"""Cyclic vertex types: canonical form, exact angle-sum, classification.

A vertex type is the cyclic list of polygon sizes met around a vertex,
read up to rotation and mirror image.  Everything here is exact; the
Euclidean boundary (angle-sum exactly 2) is decided with integers.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

MAX_FACE_SIZE = 2 ** 16


class Geometry(enum.Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


def _check_sizes(entries: Sequence[int], max_size: int) -> None:
    for k in entries:
        if isinstance(k, bool) or not isinstance(k, int):
            raise TypeError(f"face sizes must be integers, got {k!r}")
        if k < 3:
            raise ValueError(f"face size {k} < 3")
        if k > max_size:
            raise ValueError(f"face size {k} exceeds cap {max_size}")


def symmetric_images(entries: Sequence[int]) -> list[tuple[int, ...]]:
    """All rotations of ``entries`` and of its reversal (2d tuples)."""
    out = []
    for seq in (tuple(entries), tuple(reversed(entries))):
        for r in range(len(seq)):
            out.append(seq[r:] + seq[:r])
    return out


def canonical_entries(entries: Sequence[int]) -> tuple[int, ...]:
    return min(symmetric_images(entries))


class CyclicType:
    """Immutable cyclic tuple of face sizes.

    Equality and hashing use the canonical form, so ``[5,3,5,4]`` and
    ``[3,5,4,5]`` compare equal.  ``entries`` keeps the order given.
    """

    def __init__(self, entries: Iterable[int], max_size: int = MAX_FACE_SIZE):
        entries = tuple(entries)
        _check_sizes(entries, max_size)
        if len(entries) < 3:
            raise ValueError(f"a vertex type needs degree >= 3, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("CyclicType is immutable")

    @classmethod
    def parse(cls, text: str) -> "CyclicType":
        return cls(parse_word(text))

    @property
    def degree(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return canonical_entries(self.entries)

    @cached_property
    def images(self) -> frozenset[tuple[int, ...]]:
        """Set of all 2d rotations/reflections, for O(1) membership tests."""
        return frozenset(symmetric_images(self.entries))

    @cached_property
    def sizes(self) -> frozenset[int]:
        return frozenset(self.entries)

    @cached_property
    def angle_sum(self) -> Fraction:
        return angle_sum(self)

    @cached_property
    def geometry(self) -> Geometry:
        return classify(self)

    def __eq__(self, other):
        if not isinstance(other, CyclicType):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"CyclicType({format_word(self.entries)})"

    def __str__(self):
        return format_word(self.entries)


def canonical_form(t: CyclicType) -> CyclicType:
    return CyclicType(t.canonical)


def angle_sum(t: CyclicType | Sequence[int]) -> Fraction:
    """Exact sum of (k - 2)/k over the entries."""
    return sum((Fraction(k - 2, k) for k in t), Fraction(0))


def classify(t: CyclicType | Sequence[int]) -> Geometry:
    s = angle_sum(t)
    if s < 2:
        return Geometry.SPHERICAL
    if s == 2:
        return Geometry.EUCLIDEAN
    return Geometry.HYPERBOLIC


def require_hyperbolic(t: CyclicType) -> None:
    if classify(t) is not Geometry.HYPERBOLIC:
        raise ValueError(f"{t} is {classify(t).value} (angle-sum {angle_sum(t)}), not hyperbolic")


def subword_matches(word: Sequence[int], t: CyclicType) -> list[tuple[int, int]]:
    """Every ``(orientation, offset)`` at which ``word`` sits in ``t``.

    Orientation ``+1`` reads ``t.entries`` forwards, ``-1`` reads the
    reversed list.  Offsets index into the list read in that orientation.
    A word as long as the type matches wherever it is a rotation.
    """
    word = tuple(word)
    if not word:
        raise ValueError("empty corner word")
    d = len(t)
    n = len(word)
    if n > d:
        return []
    out = []
    for orient, seq in ((1, t.entries), (-1, t.entries[::-1])):
        for off in range(d):
            if all(seq[(off + j) % d] == word[j] for j in range(n)):
                out.append((orient, off))
    return out


def is_extendable_subword(word: Sequence[int], t: CyclicType) -> tuple[bool, list[tuple[int, int]]]:
    matches = subword_matches(word, t)
    return bool(matches), matches


def juxtapose(t1: CyclicType | Sequence[int], t2: CyclicType | Sequence[int]) -> CyclicType:
    return CyclicType(tuple(t1) + tuple(t2))


_WORD_RE = re.compile(r"^\s*\[\s*(.*?)\s*\]\s*$")


def parse_word(text: str) -> tuple[int, ...]:
    """Parse the ASCII syntax ``[3,5,7]``."""
    m = _WORD_RE.match(text)
    if not m:
        raise ValueError(f"expected '[k1,k2,...]', got {text!r}")
    body = m.group(1)
    if not body:
        return ()
    out = []
    for part in body.split(","):
        part = part.strip()
        if not re.fullmatch(r"[+-]?\d+", part):
            raise ValueError(f"not an integer: {part!r}")
        k = int(part)
        if k < 3:
            raise ValueError(f"face size {k} < 3")
        out.append(k)
    return tuple(out)


def format_word(entries: Iterable[int]) -> str:
    return "[" + ",".join(str(k) for k in entries) + "]"
