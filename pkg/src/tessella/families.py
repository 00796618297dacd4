"""Generators for the tuple families with prescribed Heesch behaviour.

Index conventions follow the construction: ``kbar(i)`` uses the even sizes
``k[3i], k[3i+3], k[3i+4], k[3i+5]`` and the odd sizes ``2i+3, 2i+5, 2i+7``;
``kn(n)`` is a 17-entry base block followed by ``kbar(1) .. kbar(n-1)``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping

from .cyclic import CyclicType, juxtapose
from .unit_fractions import primes_up_to


class EvenSizes(Mapping[int, int]):
    """Index -> even face size, validated lazily on lookup.

    With no explicit mapping the default ``k_l = 2l + 6`` is used, which
    yields 8, 10, 12, ... (even, pairwise distinct, at least 8).
    """

    def __init__(self, sizes: Mapping[int, int] | None = None):
        self._sizes = dict(sizes) if sizes is not None else None
        if self._sizes is not None:
            seen = {}
            for l, k in self._sizes.items():
                _check_even(l, k)
                if k in seen:
                    raise ValueError(f"k_{l} = k_{seen[k]} = {k}; even sizes must be distinct")
                seen[k] = l

    def __getitem__(self, l: int) -> int:
        if self._sizes is None:
            return 2 * l + 6
        try:
            return self._sizes[l]
        except KeyError:
            raise KeyError(f"even size k_{l} not assigned") from None

    def __iter__(self):
        return iter(self._sizes or ())

    def __len__(self):
        return len(self._sizes or ())

    @classmethod
    def from_list(cls, values) -> "EvenSizes":
        """``values[0]`` is k_1, ``values[1]`` is k_2, and so on."""
        return cls({l + 1: k for l, k in enumerate(values)})


def _check_even(l: int, k: int) -> None:
    if not isinstance(k, int) or k % 2 or k < 8:
        raise ValueError(f"k_{l} = {k!r}: even sizes must be even integers >= 8")


DEFAULT_EVENS = EvenSizes()


@dataclass(frozen=True)
class FamilyInstance:
    kind: str                     # "kbar", "kn", "knp" or "ka"
    parameter: tuple
    tuple: CyclicType
    evens: dict = field(default_factory=dict, compare=False)
    odd_map: dict = field(default_factory=dict, compare=False)


def kbar_entries(i: int, k: Mapping[int, int]) -> list[int]:
    a, b, c = 2 * i + 3, 2 * i + 5, 2 * i + 7
    k0, k3, k4, k5 = k[3 * i], k[3 * i + 3], k[3 * i + 4], k[3 * i + 5]
    return ([k0, b, c, k3] + [c, b, a] + [k0, b, k4]
            + [b, c, k5] + [k3, c, k5])


def _base_entries(k: Mapping[int, int]) -> list[int]:
    return ([k[1], 5, k[2]] + [5, 7] + [k[3], 7, 5] + [k[1], 5, k[4]]
            + [5, 7, k[5]] + [k[3], 7, k[5]])


def _indices_kn(n: int) -> list[int]:
    idx = {1, 2, 3, 4, 5}
    for i in range(1, n):
        idx |= {3 * i, 3 * i + 3, 3 * i + 4, 3 * i + 5}
    return sorted(idx)


def _validate(k: Mapping[int, int], indices) -> None:
    seen = {}
    for l in indices:
        v = k[l]
        _check_even(l, v)
        if v in seen:
            raise ValueError(f"k_{l} = k_{seen[v]} = {v}; even sizes must be distinct")
        seen[v] = l


def kbar(i: int, evens: Mapping[int, int] = DEFAULT_EVENS) -> CyclicType:
    if i < 1:
        raise ValueError("kbar needs i >= 1")
    _validate(evens, (3 * i, 3 * i + 3, 3 * i + 4, 3 * i + 5))
    return CyclicType(kbar_entries(i, evens))


def kn(n: int, evens: Mapping[int, int] = DEFAULT_EVENS) -> CyclicType:
    """Tuple with Heesch number ``n``; ``kn(1)`` is the bare 17-entry base block."""
    if n < 1:
        raise ValueError("kn needs n >= 1")
    _validate(evens, _indices_kn(n))
    entries = _base_entries(evens)
    for i in range(1, n):
        entries += kbar_entries(i, evens)
    return CyclicType(entries)


def kn_instance(n: int, evens: Mapping[int, int] = DEFAULT_EVENS) -> FamilyInstance:
    used = {l: evens[l] for l in _indices_kn(n)}
    return FamilyInstance("kn", (n,), kn(n, evens), evens=used)


def kn_prime_instance(n: int) -> FamilyInstance:
    """kn(n) with odd sizes moved onto primes and even sizes onto doubled primes.

    The n+1 odd sizes 5, 7, ..., 2n+5 go order-preservingly onto the first
    n+1 primes above 3; each even index k_l (in increasing l) becomes 2q
    for the next unused prime q.
    """
    if n < 1:
        raise ValueError("kn_prime needs n >= 1")
    indices = _indices_kn(n)
    need = (n + 1) + len(indices)
    limit = 64
    while True:
        primes = [p for p in primes_up_to(limit) if p > 3]
        if len(primes) >= need:
            break
        limit *= 2
    odd_map = {2 * j + 5: primes[j] for j in range(n + 1)}
    even_primes = primes[n + 1:need]
    evens = {l: 2 * q for l, q in zip(indices, even_primes)}
    base = kn(n, EvenSizes(evens))
    entries = [odd_map.get(k, k) if k % 2 else k for k in base]
    return FamilyInstance("knp", (n,), CyclicType(entries), evens=evens, odd_map=odd_map)


def kn_prime(n: int) -> CyclicType:
    return kn_prime_instance(n).tuple


def ka(k: int, l: int, m: int, strict: bool = True) -> CyclicType:
    """The 14-entry weakly aperiodic type ``[3,5,k,5,l,5,m,5,l,5,k,5,l,5]``.

    ``strict`` requires k, l, m >= 6; otherwise 5 is tolerated with a warning.
    """
    if len({k, l, m}) != 3:
        raise ValueError(f"k, l, m must be distinct, got {k}, {l}, {m}")
    lo = min(k, l, m)
    if lo < 5 or (strict and lo < 6):
        raise ValueError(f"k, l, m must be >= {6 if strict else 5}, got {k}, {l}, {m}")
    if lo < 6:
        warnings.warn("ka with a parameter equal to 5 is outside the >= 6 range", stacklevel=2)
    return CyclicType([3, 5, k, 5, l, 5, m, 5, l, 5, k, 5, l, 5])


def ka_parameters(t: CyclicType) -> tuple[int, int, int] | None:
    """Recover (k, l, m) if ``t`` is a member of the ka family, else None."""
    if len(t) != 14:
        return None
    for img in t.images:
        if img[0] == 3 and img[1] == 5:
            k, l, m = img[2], img[4], img[6]
            if (len({k, l, m}) == 3 and min(k, l, m) >= 5
                    and img == (3, 5, k, 5, l, 5, m, 5, l, 5, k, 5, l, 5)):
                return k, l, m
    return None


__all__ = [
    "EvenSizes", "DEFAULT_EVENS", "FamilyInstance", "kbar", "kbar_entries", "kn",
    "kn_instance", "kn_prime", "kn_prime_instance", "ka", "ka_parameters", "juxtapose",
]
