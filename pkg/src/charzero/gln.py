"""GL_n(F_q) structure theory: maximal tori by partition, regular-element
counts, regular-semisimple class counts, general-position character counts,
and the closed-form zero-density expressions for GL_2 and GL_3.

Torus enumeration is pure exponent arithmetic: T_lambda^F is realized as
prod_i F_{q^{lambda_i}}^x inside the cyclic group F_{q^L}^x (L = lcm of the
parts), so an element is a tuple of discrete logs and its n eigenvalues are
the Frobenius orbits e, e*q, e*q^2, ... of those logs.  Regularity is then
"all n eigenvalue logs distinct" - no field construction is required, and
the counts stay exact for any prime power q.

GL_n is self-dual and w, w^{-1} are conjugate in S_n, so the dual-torus
regular count equals f_lambda; the general-position census checks that
equality by explicit orbit counting on the character group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .ffield import fq_poly_is_squarefree, is_prime_power
from .matgroup import conjugacy_classes, gl_group, mat_charpoly
from .polynomials import IntPoly, RatFunc
from .weyl import cycle_centralizer_order, partitions

DEFAULT_TORUS_CAP = 10**6


@dataclass(frozen=True)
class GLDescriptor:
    n: int
    q: int
    rank: int
    semisimple_rank: int
    center_order: int
    positive_root_count: int
    class_count: int

    @staticmethod
    def make(n: int, q: int) -> "GLDescriptor":
        if n < 1:
            raise ValueError("n must be positive")
        if is_prime_power(q) is None:
            raise ValueError(f"q = {q} is not a prime power")
        return GLDescriptor(
            n=n,
            q=q,
            rank=n,
            semisimple_rank=n - 1,
            center_order=q - 1,
            positive_root_count=n * (n - 1) // 2,
            class_count=class_count_poly(n).evaluate(q),
        )


@lru_cache(maxsize=None)
def class_count_poly(n: int) -> IntPoly:
    """|[GL_n(F_q)]| as a polynomial in q, from the generating function
    prod_j (1 - x^j) / (1 - q x^j)."""
    series: list[IntPoly] = [IntPoly((1,))] + [IntPoly(())] * n
    for j in range(1, n + 1):
        # multiply by sum_k q^k x^{jk}
        out = [IntPoly(())] * (n + 1)
        for deg in range(n + 1):
            if series[deg].is_zero():
                continue
            k = 0
            while deg + j * k <= n:
                out[deg + j * k] = out[deg + j * k] + series[deg] * IntPoly(
                    (0,) * k + (1,)
                )
                k += 1
        # multiply by (1 - x^j)
        for deg in range(n, j - 1, -1):
            out[deg] = out[deg] - out[deg - j]
        series = out
    return series[n]


@dataclass(frozen=True)
class TorusRecord:
    partition: tuple[int, ...]
    torus_order_poly: IntPoly
    torus_order: int
    weyl_centralizer: int  # c_lambda, the S_n centralizer of the cycle type
    regular_count: int  # f_lambda
    regular_class_count: int  # f_lambda / c_lambda
    dual_regular_count: int  # equal to f_lambda for GL_n


def _torus_factors(partition: tuple[int, ...], q: int) -> tuple[int, list[int]]:
    """(modulus q^L - 1, per-factor subgroup index) for exponent arithmetic."""
    L = lcm(*partition)
    big = q**L - 1
    strides = [big // (q**p - 1) for p in partition]
    return big, strides


def _regular_element_count(partition: tuple[int, ...], q: int, cap: int) -> int:
    """Count tuples of prod_i F_{q^{lambda_i}}^x whose n Frobenius-orbit
    eigenvalue logs are pairwise distinct."""
    torus_size = 1
    for p in partition:
        torus_size *= q**p - 1
    if torus_size > cap:
        raise ValueError(
            f"|T^F| = {torus_size} exceeds enumeration cap {cap} "
            f"(lambda={partition}, q={q})"
        )
    big, strides = _torus_factors(partition, q)
    ranges = [range(q**p - 1) for p in partition]
    count = 0
    for logs in itertools.product(*ranges):
        eigs = set()
        n_expected = 0
        ok = True
        for part, stride, e in zip(partition, strides, logs):
            base = e * stride % big
            n_expected += part
            for _ in range(part):
                eigs.add(base)
                base = base * q % big
            if len(eigs) != n_expected:
                ok = False
                break
        if ok:
            count += 1
    return count


def torus_inventory(n: int, q: int, cap: int = DEFAULT_TORUS_CAP) -> list[TorusRecord]:
    """One record per conjugacy class of maximal tori (partition of n)."""
    if is_prime_power(q) is None:
        raise ValueError(f"q = {q} is not a prime power")
    out = []
    for lam in partitions(n):
        poly = IntPoly((1,))
        size = 1
        for p in lam:
            poly = poly * IntPoly.x_pow_minus_one(p)
            size *= q**p - 1
        c = cycle_centralizer_order(lam)
        f = _regular_element_count(lam, q, cap)
        if f % c != 0:
            raise RuntimeError(
                f"regular count {f} not divisible by centralizer {c} at {lam}"
            )
        assert poly.evaluate(q) == size
        out.append(
            TorusRecord(
                partition=lam,
                torus_order_poly=poly,
                torus_order=size,
                weyl_centralizer=c,
                regular_count=f,
                regular_class_count=f // c,
                dual_regular_count=f,
            )
        )
    return out


def regular_ss_class_count(n: int, q: int, cap: int = DEFAULT_TORUS_CAP,
                           cross_check: bool = False) -> int:
    """Number of regular semisimple conjugacy classes of GL_n(F_q), as
    sum_lambda f_lambda / c_lambda; optionally cross-checked against the
    brute-force squarefree-characteristic-polynomial census."""
    total = sum(rec.regular_class_count for rec in torus_inventory(n, q, cap))
    if cross_check:
        brute = brute_regular_ss_class_count(n, q)
        if brute != total:
            raise RuntimeError(
                f"torus census ({total}) disagrees with matrix census ({brute}) "
                f"for GL_{n}(F_{q})"
            )
    return total


def brute_regular_ss_class_count(n: int, q: int) -> int:
    """Count GL_n(F_q) classes whose representative has squarefree
    characteristic polynomial (equivalent to regular semisimple for GL_n)."""
    g = gl_group(n, q)
    cd = conjugacy_classes(g)
    F = g.field
    count = 0
    for rep in cd.class_reps:
        cp = mat_charpoly(F, n, g.elements[rep])
        if fq_poly_is_squarefree(F, cp):
            count += 1
    return count


def _weyl_centralizer_elements(partition: tuple[int, ...]):
    """All elements of C_{S_n}(w) acting on the torus factor list: pairs
    (position permutation preserving part sizes, per-factor Frobenius twist)."""
    s = len(partition)
    blocks: dict[int, list[int]] = {}
    for i, p in enumerate(partition):
        blocks.setdefault(p, []).append(i)
    block_perms = []
    for p, idxs in sorted(blocks.items()):
        block_perms.append([list(zip(idxs, perm)) for perm in itertools.permutations(idxs)])
    perms = []
    for combo in itertools.product(*block_perms):
        perm = [0] * s
        for pairs in combo:
            for src, dst in pairs:
                perm[src] = dst
        perms.append(tuple(perm))
    twists = list(itertools.product(*[range(p) for p in partition]))
    return [(perm, tw) for perm in perms for tw in twists]


def general_position_count(partition: tuple[int, ...], q: int,
                           cap: int = DEFAULT_TORUS_CAP) -> int:
    """Number of C_W(w)-orbits of characters of T_lambda^F in general
    position (trivial stabilizer); checked equal to the regular class count
    of the same torus (GL_n is self-dual)."""
    partition = tuple(sorted(partition, reverse=True))
    torus_size = 1
    for p in partition:
        torus_size *= q**p - 1
    if torus_size > cap:
        raise ValueError(f"character census beyond cap at lambda={partition}, q={q}")
    c = cycle_centralizer_order(partition)
    actions = _weyl_centralizer_elements(partition)
    if len(actions) != c:
        raise RuntimeError("wreath centralizer enumeration has the wrong order")
    moduli = [q**p - 1 for p in partition]
    free = 0
    for chars in itertools.product(*[range(m) for m in moduli]):
        stabilized = False
        for perm, tw in actions:
            if all(k == 0 for k in tw) and all(perm[i] == i for i in range(len(perm))):
                continue
            image = list(chars)
            for i, (a, k) in enumerate(zip(chars, tw)):
                image[perm[i]] = a * q**k % moduli[i]
            if tuple(image) == chars:
                stabilized = True
                break
        if not stabilized:
            free += 1
    if free % c != 0:
        raise RuntimeError("free characters not divisible by the centralizer order")
    orbits = free // c
    expected = _regular_element_count(partition, q, cap) // c
    if orbits != expected:
        raise RuntimeError(
            f"general-position orbit count {orbits} != regular class count "
            f"{expected} at lambda={partition}, q={q}"
        )
    return orbits


# -- closed-form zero-density expressions ------------------------------------


def gl2_zero_ratio_ratfunc() -> RatFunc:
    """(q^2 - 2q + 2) / (2 (q+1)^2)."""
    return RatFunc(IntPoly((2, -2, 1)), 2 * IntPoly((1, 1)) * IntPoly((1, 1)))


def gl3_zero_ratio_ratfunc() -> RatFunc:
    """(11 q^4 - 2 q^3 + 14 q^2 - 45 q - 18) / (18 q^2 (q+1)^2)."""
    num = IntPoly((-18, -45, 14, -2, 11))
    den = 18 * IntPoly((0, 0, 1)) * IntPoly((1, 1)) * IntPoly((1, 1))
    return RatFunc(num, den)


def gln_zero_ratio_formula(n: int, q: int) -> Fraction:
    """Evaluate the closed-form zero-density expression (n = 2 or 3 only)."""
    if n == 2:
        return gl2_zero_ratio_ratfunc().evaluate(q)
    if n == 3:
        return gl3_zero_ratio_ratfunc().evaluate(q)
    raise ValueError("closed-form zero ratios are available for n = 2 and 3 only")


def gln_zero_ratio_ratfunc(n: int) -> RatFunc:
    if n == 2:
        return gl2_zero_ratio_ratfunc()
    if n == 3:
        return gl3_zero_ratio_ratfunc()
    raise ValueError("closed-form zero ratios are available for n = 2 and 3 only")
