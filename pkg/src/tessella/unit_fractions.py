"""Exhaustive solvers for prime unit-fraction equations.

Two questions are answered by enumeration:

* which positive combinations ``sum a_i/p_i + sum b_j/(2 q_j) = 1`` exist
  for given disjoint prime lists, and
* which multisets of corner sizes ``k_i`` satisfy ``sum 1/k_i = 1``, i.e.
  which full configurations of corners with angles ``2 pi / k_i`` close up
  around a point.

Both reduce to bounded-multiplicity searches over integer weights
``L/k`` (``L`` the lcm of the sizes).  A branch is cut as soon as the
remaining target is not divisible by the gcd of the weights still
available; the cut discards no solution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return [int(p) for p in np.flatnonzero(sieve)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def multiplicity_solutions(sizes: Iterable[int]) -> list[dict[int, int]]:
    """All maps ``k -> m_k >= 0`` (not all zero) with ``sum m_k / k == 1``.

    Returned sorted by the tuple of multiplicities over ascending sizes.
    """
    sizes = sorted(set(sizes))
    if not sizes:
        return []
    if any(k < 1 for k in sizes):
        raise ValueError("sizes must be positive")
    L = math.lcm(*sizes)
    # largest sizes first: their weights are the smallest and most divisible
    order = sorted(sizes, reverse=True)
    weights = [L // k for k in order]
    # suffix gcds: g[i] = gcd(weights[i:])
    g = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        g[i] = math.gcd(weights[i], g[i + 1])

    out: list[dict[int, int]] = []
    mult = [0] * len(order)

    def rec(i: int, remaining: int) -> None:
        if remaining == 0:
            sol = {order[j]: mult[j] for j in range(len(order)) if mult[j]}
            out.append(sol)
            return
        if i == len(order):
            return
        w = weights[i]
        rest = g[i + 1]
        for m in range(remaining // w + 1):
            r = remaining - m * w
            if r == 0 or (rest and r % rest == 0):
                mult[i] = m
                rec(i + 1, r)
        mult[i] = 0

    rec(0, L)
    out.sort(key=lambda s: tuple(s.get(k, 0) for k in sizes))
    return out


@dataclass(frozen=True)
class ReciprocalInstance:
    odd_primes: tuple[int, ...]
    doubled_primes: tuple[int, ...]

    def __post_init__(self):
        odd = tuple(self.odd_primes)
        dbl = tuple(self.doubled_primes)
        object.__setattr__(self, "odd_primes", odd)
        object.__setattr__(self, "doubled_primes", dbl)
        for p in odd + dbl:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if 2 in odd:
            raise ValueError("the undoubled list holds odd primes only (1/2 + q/2q = 1 otherwise)")
        if len(set(odd)) != len(odd) or len(set(dbl)) != len(dbl):
            raise ValueError("primes within a list must be distinct")
        if set(odd) & set(dbl):
            raise ValueError(f"lists share {sorted(set(odd) & set(dbl))}")


@dataclass(frozen=True)
class ReciprocalSolution:
    a: tuple[tuple[int, int], ...]   # (p, a_p), sorted by p
    b: tuple[tuple[int, int], ...]   # (q, b_q), sorted by q

    @property
    def value(self) -> Fraction:
        return (sum((Fraction(c, p) for p, c in self.a), Fraction(0))
                + sum((Fraction(c, 2 * q) for q, c in self.b), Fraction(0)))

    def shape(self) -> str:
        """``single-odd``, ``single-doubled``, ``doubled-pair`` or ``other``."""
        if len(self.a) == 1 and not self.b and self.a[0][1] == self.a[0][0]:
            return "single-odd"
        if not self.a and len(self.b) == 1 and self.b[0][1] == 2 * self.b[0][0]:
            return "single-doubled"
        if not self.a and len(self.b) == 2 and all(c == q for q, c in self.b):
            return "doubled-pair"
        return "other"


def solve_reciprocal(inst: ReciprocalInstance) -> list[ReciprocalSolution]:
    sizes = {p: ("a", p) for p in inst.odd_primes}
    sizes.update({2 * q: ("b", q) for q in inst.doubled_primes})
    out = []
    for sol in multiplicity_solutions(sizes):
        a = tuple(sorted((sizes[k][1], m) for k, m in sol.items() if sizes[k][0] == "a"))
        b = tuple(sorted((sizes[k][1], m) for k, m in sol.items() if sizes[k][0] == "b"))
        out.append(ReciprocalSolution(a, b))
    out.sort(key=lambda s: (s.a, s.b))
    return out


def predicted_solutions(inst: ReciprocalInstance) -> list[ReciprocalSolution]:
    """The solution set the two lemmas assert for this instance."""
    out = [ReciprocalSolution(((p, p),), ()) for p in inst.odd_primes]
    out += [ReciprocalSolution((), ((q, 2 * q),)) for q in inst.doubled_primes]
    dbl = sorted(inst.doubled_primes)
    out += [ReciprocalSolution((), ((q1, q1), (q2, q2)))
            for i, q1 in enumerate(dbl) for q2 in dbl[i + 1:]]
    out.sort(key=lambda s: (s.a, s.b))
    return out


@dataclass(frozen=True)
class CornerConfiguration:
    counts: tuple[tuple[int, int], ...]    # (size, multiplicity), ascending size

    @property
    def is_monotype(self) -> bool:
        return len(self.counts) == 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.counts)

    def total(self) -> Fraction:
        return sum((Fraction(m, k) for k, m in self.counts), Fraction(0))


def vertex_corner_solutions(allowed_sizes: Iterable[int]) -> list[CornerConfiguration]:
    allowed = set(allowed_sizes)
    if any(k < 3 for k in allowed):
        raise ValueError("corner sizes must be >= 3")
    return [CornerConfiguration(tuple(sorted(s.items()))) for s in multiplicity_solutions(allowed)]


@dataclass
class LemmaReport:
    instances: int
    solutions: int
    counterexamples: list

    @property
    def verified(self) -> bool:
        return not self.counterexamples


def verify_lemmas(max_prime: int = 97, max_list_size: int = 3) -> LemmaReport:
    """Check both lemma statements on every instance drawn from primes <= max_prime.

    An instance is a pair of disjoint prime lists with total length at most
    ``max_list_size`` (the undoubled list never contains 2).  Any disagreement
    between the enumerated and the predicted solution set is a counterexample.
    """
    from itertools import combinations

    primes = primes_up_to(max_prime)
    n_inst = n_sol = 0
    bad = []
    for total in range(1, max_list_size + 1):
        for chosen in combinations(primes, total):
            for k in range(total + 1):
                for dbl in combinations(chosen, k):
                    und = tuple(p for p in chosen if p not in dbl)
                    if 2 in und:
                        continue
                    inst = ReciprocalInstance(und, dbl)
                    got = solve_reciprocal(inst)
                    n_inst += 1
                    n_sol += len(got)
                    if got != predicted_solutions(inst):
                        bad.append((inst, got))
    return LemmaReport(n_inst, n_sol, bad)
