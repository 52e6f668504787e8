"""Reference GL_2(F_q) character table from the classical parametrization.

Completely independent of the group-enumeration / class-algebra pipeline:
classes and characters are indexed by discrete logs, and every value comes
from the textbook formulas for the four families (linear characters,
Steinberg twists, principal series, cuspidal).  Used as the second route of
the dual-route census check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from charzero.cyclotomic import CycInt, cyc_make


@dataclass(frozen=True)
class GL2Reference:
    q: int
    num_classes: int
    degrees: tuple[int, ...]
    zero_count: int
    zero_by_degree: dict[int, int]


def _theta(n1: int, j: int, a: int) -> CycInt:
    # character j of the cyclic group of order n1 evaluated at generator^a
    return cyc_make(max(n1, 1), {(j * a) % n1 if n1 else 0: 1})


def gl2_reference(q: int) -> GL2Reference:
    n1 = q - 1  # |F_q^x| with generator g = gamma^(q+1)
    n2 = q * q - 1  # |F_{q^2}^x| with generator gamma

    # class data in discrete logs: central a, non-semisimple a, split {a, b},
    # elliptic gamma^k with k not divisible by q+1, modulo k ~ qk
    split = list(itertools.combinations(range(n1), 2))
    elliptic = []
    seen: set[int] = set()
    for k in range(n2):
        if k % (q + 1) == 0 or k in seen:
            continue
        seen.add(k)
        seen.add(k * q % n2)
        elliptic.append(k)
    num_classes = 2 * n1 + len(split) + len(elliptic)

    degrees: list[int] = []
    zero_count = 0
    zero_by_degree: dict[int, int] = {}

    def record(degree: int, zeros: int):
        nonlocal zero_count
        degrees.append(degree)
        zero_count += zeros
        zero_by_degree[degree] = zero_by_degree.get(degree, 0) + zeros

    # linear characters: never zero
    for _ in range(n1):
        record(1, 0)
    # Steinberg twists: zero exactly on the non-semisimple classes
    for _ in range(n1):
        record(q, n1)
    # principal series {theta_j1, theta_j2}, j1 < j2: zero on all elliptic
    # classes plus any split class where the symmetrized value cancels
    for j1, j2 in itertools.combinations(range(n1), 2):
        zeros = len(elliptic)
        for a, b in split:
            v = _theta(n1, j1, a) * _theta(n1, j2, b) + _theta(n1, j1, b) * _theta(
                n1, j2, a
            )
            if v.is_zero():
                zeros += 1
        record(q + 1, zeros)
    # cuspidal phi_j (j not Galois-fixed, modulo j ~ qj): zero on all split
    # classes plus any elliptic class where phi(t) + phi(t^q) cancels
    seenj: set[int] = set()
    for j in range(n2):
        if (j * q) % n2 == j or j in seenj:
            continue
        seenj.add(j)
        seenj.add(j * q % n2)
        zeros = len(split)
        for k in elliptic:
            v = cyc_make(n2, {(j * k) % n2: 1}) + cyc_make(n2, {(j * k * q) % n2: 1})
            if v.is_zero():
                zeros += 1
        record(q - 1, zeros)

    assert len(degrees) == num_classes
    assert sum(d * d for d in degrees) == (q * q - 1) * (q * q - q)
    return GL2Reference(
        q=q,
        num_classes=num_classes,
        degrees=tuple(sorted(degrees)),
        zero_count=zero_count,
        zero_by_degree=zero_by_degree,
    )
