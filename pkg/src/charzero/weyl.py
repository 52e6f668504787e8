"""Conjugacy-class statistics of Weyl groups.

Classical types use cycle-type combinatorics: type A classes are partitions
of rank+1; types B/C are pairs of partitions (positive / negative cycles);
type D restricts to an even number of negative cycles, with the classes
whose cycles are all positive and even split in two.  G2, F4 and E6 are
enumerated as integer matrix groups generated by the simple reflections in
the root basis (E7/E8 are rejected: their orders exceed the desk budget).

The characteristic polynomial det(q*Id - w) attached to each class is the
order polynomial of the corresponding twisted maximal torus.  Type A
supports both the rank+1 permutation lattice (the GL convention, default)
and the rank-sized reflection lattice.

Summation helpers (sum of 1/|centralizer|^k) are available in streaming
form so conjugacy probabilities stay exact up to rank ~60 without
materializing millions of class records.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .polynomials import IntPoly

CLASSICAL_TYPES = ("A", "B", "C", "D")
EXCEPTIONAL_ORDERS = {"G2": 12, "F4": 1152, "E6": 51840}
DEFAULT_RANK_CAP = 60


def partitions(n: int, max_part: int | None = None):
    """Partitions of n as non-increasing tuples."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def cycle_centralizer_order(lam: tuple[int, ...]) -> int:
    """|C_{S_n}(w)| for w of cycle type lam: prod i^{m_i} m_i!."""
    out = 1
    for part, mult in _multiplicities(lam).items():
        out *= part**mult * factorial(mult)
    return out


def signed_cycle_factor(lam: tuple[int, ...]) -> int:
    """prod (2i)^{m_i} m_i!, the hyperoctahedral centralizer contribution
    of one sign-class of cycles."""
    out = 1
    for part, mult in _multiplicities(lam).items():
        out *= (2 * part) ** mult * factorial(mult)
    return out


def _multiplicities(lam: tuple[int, ...]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def _prod_q_minus(lam) -> IntPoly:
    out = IntPoly((1,))
    for p in lam:
        out = out * IntPoly.x_pow_minus_one(p)
    return out


def _prod_q_plus(mu) -> IntPoly:
    out = IntPoly((1,))
    for p in mu:
        out = out * IntPoly.x_pow_plus_one(p)
    return out


@dataclass(frozen=True)
class WeylClass:
    label: str
    class_size: int
    centralizer_order: int
    char_poly: IntPoly


@dataclass(frozen=True)
class WeylClassTable:
    cartan_type: str
    rank: int
    lattice_rank: int
    group_order: int
    classes: tuple[WeylClass, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_by_label(self, label: str) -> WeylClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(f"no class labelled {label!r}")

    def sum_inv_c(self) -> Fraction:
        return sum((Fraction(1, c.centralizer_order) for c in self.classes), Fraction(0))

    def sum_inv_c_sq(self) -> Fraction:
        return sum(
            (Fraction(1, c.centralizer_order**2) for c in self.classes), Fraction(0)
        )


def _check_table(t: WeylClassTable) -> WeylClassTable:
    total = sum(c.class_size for c in t.classes)
    if total != t.group_order:
        raise RuntimeError(f"class sizes sum to {total}, not |W| = {t.group_order}")
    for c in t.classes:
        if c.class_size * c.centralizer_order != t.group_order:
            raise RuntimeError(f"orbit-stabilizer failure at class {c.label}")
        if c.char_poly.degree != t.lattice_rank or not c.char_poly.is_monic():
            raise RuntimeError(f"torus polynomial of {c.label} is not monic of rank")
        if c.char_poly.evaluate(1) < 0:
            raise RuntimeError(f"torus polynomial of {c.label} negative at 1")
    if t.sum_inv_c() != 1:
        raise RuntimeError("sum of 1/centralizer over classes is not 1")
    return t


# -- classical types ---------------------------------------------------------


def _table_a(rank: int, lattice: str) -> WeylClassTable:
    n = rank + 1
    order = factorial(n)
    lattice_rank = n if lattice == "permutation" else rank
    classes = []
    for lam in partitions(n):
        c = cycle_centralizer_order(lam)
        poly = _prod_q_minus(lam)
        if lattice == "reflection":
            poly = poly // IntPoly.x_pow_minus_one(1)
        classes.append(
            WeylClass("+".join(map(str, lam)), order // c, c, poly)
        )
    return WeylClassTable("A", rank, lattice_rank, order, tuple(classes))


def _signed_pair_label(lam, mu) -> str:
    left = "+".join(map(str, lam)) if lam else "-"
    right = "+".join(map(str, mu)) if mu else "-"
    return f"[{left}|{right}]"


def _table_bc(cartan_type: str, rank: int) -> WeylClassTable:
    order = 2**rank * factorial(rank)
    classes = []
    for k in range(rank + 1):
        for lam in partitions(k):
            zl = signed_cycle_factor(lam)
            for mu in partitions(rank - k):
                c = zl * signed_cycle_factor(mu)
                poly = _prod_q_minus(lam) * _prod_q_plus(mu)
                classes.append(
                    WeylClass(_signed_pair_label(lam, mu), order // c, c, poly)
                )
    return WeylClassTable(cartan_type, rank, rank, order, tuple(classes))


def _table_d(rank: int) -> WeylClassTable:
    order = 2 ** (rank - 1) * factorial(rank)
    classes = []
    for k in range(rank + 1):
        for lam in partitions(k):
            zl = signed_cycle_factor(lam)
            for mu in partitions(rank - k):
                if len(mu) % 2 != 0:
                    continue
                c_b = zl * signed_cycle_factor(mu)
                poly = _prod_q_minus(lam) * _prod_q_plus(mu)
                label = _signed_pair_label(lam, mu)
                if not mu and all(p % 2 == 0 for p in lam):
                    # centralizer lies inside W(D): the hyperoctahedral class
                    # splits into two classes of equal size
                    for tag in ("a", "b"):
                        classes.append(
                            WeylClass(label + tag, order // c_b, c_b, poly)
                        )
                else:
                    classes.append(
                        WeylClass(label, 2 * order // c_b, c_b // 2, poly)
                    )
    return WeylClassTable("D", rank, rank, order, tuple(classes))


# -- exceptional types -------------------------------------------------------

_CARTAN = {
    "G2": [[2, -1], [-3, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
    # nodes 0-1-2-3-4 in a chain, node 5 attached to node 2
    "E6": [
        [2, -1, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0],
        [0, -1, 2, -1, 0, -1],
        [0, 0, -1, 2, -1, 0],
        [0, 0, 0, -1, 2, 0],
        [0, 0, -1, 0, 0, 2],
    ],
}


def _simple_reflections(cartan: list[list[int]]) -> list[np.ndarray]:
    r = len(cartan)
    mats = []
    for i in range(r):
        m = np.eye(r, dtype=np.int64)
        for j in range(r):
            m[i, j] = (1 if i == j else 0) - cartan[j][i]
        mats.append(m)
    return mats


def _closure(gens: list[np.ndarray]) -> tuple[list[np.ndarray], dict[bytes, int]]:
    r = gens[0].shape[0]
    ident = np.eye(r, dtype=np.int64)
    elements = [ident]
    index = {ident.tobytes(): 0}
    frontier = [ident]
    while frontier:
        stacked = np.stack(frontier)
        new_frontier = []
        for g in gens:
            prods = stacked @ g
            for row in prods:
                key = row.tobytes()
                if key not in index:
                    index[key] = len(elements)
                    elements.append(row)
                    new_frontier.append(row)
        frontier = new_frontier
    return elements, index


def _int_inverse(m: np.ndarray) -> np.ndarray:
    """Exact inverse of an integer matrix with unit determinant."""
    r = m.shape[0]
    aug = [[Fraction(int(m[i, j])) for j in range(r)] + [Fraction(int(i == j)) for j in range(r)]
           for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col]:
                g = aug[i][col]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[col])]
    out = np.array([[int(aug[i][r + j]) for j in range(r)] for i in range(r)], dtype=np.int64)
    return out


def charpoly_int(m: np.ndarray) -> IntPoly:
    """det(q*Id - m) by Leibniz expansion; exact, for dimension <= 6."""
    r = m.shape[0]
    acc = IntPoly(())
    for perm in itertools.permutations(range(r)):
        sign = 1
        seen = [False] * r
        for i in range(r):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = IntPoly((sign,))
        for i in range(r):
            j = perm[i]
            entry = IntPoly((-int(m[i, j]), 1)) if i == j else IntPoly((-int(m[i, j]),))
            term = term * entry
        acc = acc + term
    return acc


def _table_exceptional(cartan_type: str) -> WeylClassTable:
    cartan = _CARTAN[cartan_type]
    rank = len(cartan)
    gens = _simple_reflections(cartan)
    elements, index = _closure(gens)
    order = len(elements)
    if order != EXCEPTIONAL_ORDERS[cartan_type]:
        raise RuntimeError(
            f"W({cartan_type}) closure has order {order}, "
            f"expected {EXCEPTIONAL_ORDERS[cartan_type]}"
        )
    gen_pairs = [(g, _int_inverse(g)) for g in gens]
    class_of = [-1] * order
    classes = []
    for seed in range(order):
        if class_of[seed] >= 0:
            continue
        cls = len(classes)
        class_of[seed] = cls
        orbit = [seed]
        frontier = [elements[seed]]
        while frontier:
            stacked = np.stack(frontier)
            new_frontier = []
            for g, ginv in gen_pairs:
                prods = g @ stacked @ ginv
                for row in prods:
                    idx = index[row.tobytes()]
                    if class_of[idx] < 0:
                        class_of[idx] = cls
                        orbit.append(idx)
                        new_frontier.append(row)
            frontier = new_frontier
        size = len(orbit)
        poly = charpoly_int(elements[seed])
        classes.append(WeylClass(f"c{cls}", size, order // size, poly))
    return WeylClassTable(cartan_type, rank, rank, order, tuple(classes))


# -- public construction -----------------------------------------------------


@lru_cache(maxsize=64)
def weyl_classes(cartan_type: str, rank: int | None = None, lattice: str = "permutation",
                 rank_cap: int = DEFAULT_RANK_CAP) -> WeylClassTable:
    """Complete class table for W(type_rank).

    `lattice` applies to type A only: "permutation" (rank+1 lattice, the
    GL convention) or "reflection" (rank-dimensional).
    """
    cartan_type = cartan_type.upper() if len(cartan_type) == 1 else cartan_type
    if cartan_type in ("E7", "E8"):
        raise ValueError(f"{cartan_type} is out of budget (|W(E8)| ~ 7e8); not supported")
    if cartan_type in EXCEPTIONAL_ORDERS:
        implied = len(_CARTAN[cartan_type])
        if rank not in (implied, None):
            raise ValueError(f"{cartan_type} has rank {implied}")
        return _check_table(_table_exceptional(cartan_type))
    if cartan_type not in CLASSICAL_TYPES:
        raise ValueError(f"unknown Cartan type {cartan_type!r}")
    if rank is None:
        raise ValueError("classical types need an explicit rank")
    if rank > rank_cap:
        raise ValueError(f"rank {rank} exceeds cap {rank_cap}")
    if cartan_type == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        if lattice not in ("permutation", "reflection"):
            raise ValueError("lattice must be 'permutation' or 'reflection'")
        return _check_table(_table_a(rank, lattice))
    if cartan_type in ("B", "C"):
        if rank < 2:
            raise ValueError("types B/C need rank >= 2")
        return _check_table(_table_bc(cartan_type, rank))
    if rank < 4:
        raise ValueError("type D needs rank >= 4")
    return _check_table(_table_d(rank))


def conjugacy_probability(t: WeylClassTable) -> Fraction:
    """Probability two uniform elements of W are conjugate: sum 1/c_i^2."""
    return t.sum_inv_c_sq()


def torus_order_poly(t: WeylClassTable, label: str) -> IntPoly:
    """det(q*Id - w) for the class representative: the twisted torus order."""
    return t.class_by_label(label).char_poly


# -- streaming sums (no table materialization) -------------------------------


def _series_mul(a: list[Fraction], b: list[Fraction], cap: int) -> list[Fraction]:
    out = [Fraction(0)] * (cap + 1)
    for i, ca in enumerate(a):
        if ca:
            for j in range(min(len(b), cap + 1 - i)):
                if b[j]:
                    out[i + j] += ca * b[j]
    return out


def _zsum_series(n: int, power: int, base_factor: int, sign: int,
                 even_parts_only: bool) -> list[Fraction]:
    """Power series to x^n of prod_i sum_m (sign^m x^{im}) / ((base*i)^m m!)^power,
    whose x^n coefficient is a centralizer-reciprocal sum over partitions."""
    series = [Fraction(1)] + [Fraction(0)] * n
    for i in range(1, n + 1):
        if even_parts_only and i % 2:
            continue
        factor = [Fraction(0)] * (n + 1)
        m = 0
        while i * m <= n:
            factor[i * m] = Fraction(
                sign**m, ((base_factor * i) ** m * factorial(m)) ** power
            )
            m += 1
        series = _series_mul(series, factor, n)
    return series


@lru_cache(maxsize=None)
def _sym_inv_pows(n: int, power: int) -> Fraction:
    """sum over partitions of n of 1/(prod i^m_i m_i!)^power."""
    return _zsum_series(n, power, 1, 1, False)[n]


@lru_cache(maxsize=None)
def _hyp_inv_pows(n: int, power: int) -> tuple[Fraction, Fraction]:
    """(sum over all partitions of n, sum over those with evenly many parts)
    of 1/signed_cycle_factor^power."""
    total = _zsum_series(n, power, 2, 1, False)[n]
    alternating = _zsum_series(n, power, 2, -1, False)[n]
    return total, (total + alternating) / 2


@lru_cache(maxsize=None)
def _hyp_all_even_parts(n: int, power: int) -> Fraction:
    """sum over partitions of n into even parts of 1/signed_cycle_factor^power."""
    if n % 2:
        return Fraction(0)
    return _zsum_series(n, power, 2, 1, True)[n]


def sum_inv_c_sq_stream(cartan_type: str, rank: int) -> Fraction:
    """sum 1/c_i^2 over W(type_rank) without building the class table."""
    cartan_type = cartan_type.upper()
    if cartan_type == "A":
        return _sym_inv_pows(rank + 1, 2)
    if cartan_type in ("B", "C"):
        return sum(
            (_hyp_inv_pows(k, 2)[0] * _hyp_inv_pows(rank - k, 2)[0]
             for k in range(rank + 1)),
            Fraction(0),
        )
    if cartan_type == "D":
        base = sum(
            (_hyp_inv_pows(k, 2)[0] * _hyp_inv_pows(rank - k, 2)[1]
             for k in range(rank + 1)),
            Fraction(0),
        )
        # non-split classes contribute (2/c_B)^2, every split pair 2/c_B^2
        return 4 * base - 2 * _hyp_all_even_parts(rank, 2)
    raise ValueError(f"streaming sums support classical types only, not {cartan_type!r}")


def sum_inv_c_stream(cartan_type: str, rank: int) -> Fraction:
    cartan_type = cartan_type.upper()
    if cartan_type == "A":
        return _sym_inv_pows(rank + 1, 1)
    if cartan_type in ("B", "C"):
        return sum(
            (_hyp_inv_pows(k, 1)[0] * _hyp_inv_pows(rank - k, 1)[0]
             for k in range(rank + 1)),
            Fraction(0),
        )
    if cartan_type == "D":
        return 2 * sum(
            (_hyp_inv_pows(k, 1)[0] * _hyp_inv_pows(rank - k, 1)[1]
             for k in range(rank + 1)),
            Fraction(0),
        )
    raise ValueError(f"streaming sums support classical types only, not {cartan_type!r}")


@dataclass(frozen=True)
class ConjugacyBoundCheck:
    cartan_type: str
    rank: int
    probability: Fraction
    bound: Fraction
    passes: bool


def bbw_bound_check(cartan_type: str, rank: int) -> ConjugacyBoundCheck:
    """Check sum 1/c_i^2 <= 6/rank^2 (valid for simple classical types of
    rank >= 9, after Blackburn-Britnell-Wildon)."""
    cartan_type = cartan_type.upper()
    if cartan_type not in CLASSICAL_TYPES:
        raise ValueError("bound check applies to classical types")
    if rank < 9:
        raise ValueError("bound check requires rank >= 9")
    prob = sum_inv_c_sq_stream(cartan_type, rank)
    bound = Fraction(6, rank * rank)
    return ConjugacyBoundCheck(cartan_type, rank, prob, bound, prob <= bound)
