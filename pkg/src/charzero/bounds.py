"""Closed-form bounds and threshold searches for zero densities.

Everything here is exact rational arithmetic: the general lower bound on
the zero proportion, the rank-parametrized monic square polynomials that
bound the simple-group term, certified threshold searches for the two
asymptotic inequalities, the regular-semisimple proportion check for SL_n,
the class-count bound, and the trend report rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .dixon import dixon_character_table, zero_census
from .ffield import fq_poly_is_squarefree
from .gln import class_count_poly, gln_zero_ratio_formula, regular_ss_class_count
from .matgroup import MatrixGroupTable, conjugacy_classes, mat_charpoly
from .polynomials import IntPoly
from .weyl import sum_inv_c_sq_stream


@dataclass(frozen=True)
class BoundInput:
    n_rss: int
    n_rss_dual: int
    n_classes: int
    q: int
    rank: int
    semisimple_rank: int
    z_order: int
    sum_inv_c_sq: Fraction

    def __post_init__(self):
        if self.n_classes <= 0:
            raise ValueError("class count must be positive")
        if self.n_rss > self.n_classes or min(self.n_rss, self.n_rss_dual) < 0:
            raise ValueError("regular semisimple counts out of range")
        if not 0 < self.sum_inv_c_sq <= 1:
            raise ValueError("conjugacy probability must lie in (0, 1]")


@dataclass(frozen=True)
class LowerBoundResult:
    raw: Fraction
    clamped: Fraction


def lower_bound_general(b: BoundInput) -> LowerBoundResult:
    """n_rss * n_rss_dual / n_classes^2
       - (q+1)^{2r} / (q^{2l} z^2) * sum 1/c_i^2.

    The raw value may be negative at small q (the bound is then vacuous);
    both the raw value and max(0, raw) are reported."""
    first = Fraction(b.n_rss * b.n_rss_dual, b.n_classes**2)
    second = (
        Fraction((b.q + 1) ** (2 * b.rank), b.q ** (2 * b.semisimple_rank) * b.z_order**2)
        * b.sum_inv_c_sq
    )
    raw = first - second
    return LowerBoundResult(raw=raw, clamped=max(raw, Fraction(0)))


def gl_bound_input(n: int, q: int) -> BoundInput:
    """Assemble the bound input for GL_n(F_q) (self-dual, so both regular
    semisimple counts coincide)."""
    rss = regular_ss_class_count(n, q)
    return BoundInput(
        n_rss=rss,
        n_rss_dual=rss,
        n_classes=class_count_poly(n).evaluate(q),
        q=q,
        rank=n,
        semisimple_rank=n - 1,
        z_order=q - 1,
        sum_inv_c_sq=sum_inv_c_sq_stream("A", n - 1) if n >= 2 else Fraction(1),
    )


def simple_bound_polys(r: int) -> tuple[IntPoly, IntPoly]:
    """f1(x) = ((x-1)^r - 3(x-1)^{r-1} - 2(x-1)^{r-2})^2 and
    f2(x) = (x^r + 40 x^{r-1})^2, both monic of degree 2r; r >= 2."""
    if r < 2:
        raise ValueError("rank must be at least 2")
    xm1 = IntPoly((-1, 1))
    base1 = xm1**r - 3 * xm1 ** (r - 1) - 2 * xm1 ** (r - 2)
    f1 = base1 * base1
    base2 = IntPoly((0,) * r + (1,)) + 40 * IntPoly((0,) * (r - 1) + (1,))
    f2 = base2 * base2
    assert f1.degree == 2 * r and f1.is_monic()
    assert f2.degree == 2 * r and f2.is_monic()
    return f1, f2


# -- threshold searches -------------------------------------------------------


def _power_ratio_holds(q: Fraction, r: int, eps: Fraction) -> bool:
    """((q+1)/q)^{2r} < 1 + eps, exactly."""
    q = Fraction(q)
    return (q + 1) ** (2 * r) < (1 + eps) * q ** (2 * r)


def _poly_ratio_holds(q: Fraction, r: int, eps: Fraction) -> bool:
    """1 - f1(q)/f2(q) < eps, exactly."""
    f1, f2 = simple_bound_polys(r)
    v1 = f1.evaluate(Fraction(q))
    v2 = f2.evaluate(Fraction(q))
    return 1 - Fraction(v1) / v2 < eps


@dataclass(frozen=True)
class ThresholdResult:
    mode: str
    which: str
    epsilon: Fraction
    rank_cap: int
    threshold: int
    certified_window: int


def threshold_search(
    rank_cap: int,
    epsilon: Fraction,
    mode: str = "fixed-rank",
    which: str = "both",
    growth: Callable[[int], Fraction] | None = None,
    window: int = 50,
    search_bound: int = 10**6,
) -> ThresholdResult:
    """Fixed-rank mode: least q0 such that the selected inequalities hold for
    every rank 2 <= r <= rank_cap and all q >= q0.  Growing-rank mode: least
    r0 such that they hold for r in [r0, r0 + window] at q = r * growth(r).

    The result is certified by exact rational evaluation at the threshold
    (holds), just below it (fails), and across the verification window;
    the first inequality is monotone in q since 2r*log(1+1/q) decreases."""
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if rank_cap < 2:
        raise ValueError("rank cap must be at least 2 (the square bound needs r >= 2)")
    if which not in ("first", "second", "both"):
        raise ValueError("which must be 'first', 'second' or 'both'")

    def holds(q: Fraction, r: int) -> bool:
        ok = True
        if which in ("first", "both"):
            ok = ok and _power_ratio_holds(q, r, epsilon)
        if which in ("second", "both"):
            ok = ok and _poly_ratio_holds(q, r, epsilon)
        return ok

    if mode == "fixed-rank":
        ranks = range(2, rank_cap + 1)
        q0 = None
        for q in range(2, search_bound):
            if all(holds(Fraction(q), r) for r in ranks):
                q0 = q
                break
        if q0 is None:
            raise RuntimeError(f"no threshold below {search_bound}")
        if q0 > 2 and all(holds(Fraction(q0 - 1), r) for r in ranks):
            raise RuntimeError("threshold certification failed just below q0")
        for q in range(q0, q0 + window + 1):
            if not all(holds(Fraction(q), r) for r in ranks):
                raise RuntimeError(f"threshold not stable on the window at q={q}")
        return ThresholdResult("fixed-rank", which, epsilon, rank_cap, q0, window)

    if mode == "growing-rank":
        if growth is None:
            raise ValueError("growing-rank mode needs a growth function")
        for r0 in range(2, search_bound):
            if all(
                holds(r * Fraction(growth(r)), r) for r in range(r0, r0 + window + 1)
            ):
                return ThresholdResult(
                    "growing-rank", which, epsilon, rank_cap, r0, window
                )
        raise RuntimeError(f"no growing-rank threshold below {search_bound}")

    raise ValueError("mode must be 'fixed-rank' or 'growing-rank'")


# -- SL_n checks --------------------------------------------------------------


@dataclass(frozen=True)
class ProportionCheck:
    q: int
    lhs: Fraction
    rhs: Fraction
    passes: bool


def guralnick_lubeck_check(group: MatrixGroupTable, q: int) -> ProportionCheck:
    """Regular-semisimple element proportion of an enumerated SL_n(F_q)
    against 1 - 3/(q-1) - 2/(q-1)^2 (exact)."""
    F = group.field
    n = group.dim
    rss_elements = 0
    cd = conjugacy_classes(group)
    for rep, size in zip(cd.class_reps, cd.class_sizes):
        cp = mat_charpoly(F, n, group.elements[rep])
        if fq_poly_is_squarefree(F, cp):
            rss_elements += size
    lhs = Fraction(rss_elements, group.order)
    rhs = 1 - Fraction(3, q - 1) - Fraction(2, (q - 1) ** 2)
    return ProportionCheck(q=q, lhs=lhs, rhs=rhs, passes=lhs > rhs)


@dataclass(frozen=True)
class ClassCountCheck:
    q: int
    rank: int
    class_count: int
    bound: int
    passes: bool


def fulman_guralnick_check(group: MatrixGroupTable, q: int) -> ClassCountCheck:
    """Class count of an enumerated SL_n(F_q) against q^r + 40 q^{r-1} with
    r = n - 1 the rank of the simple group."""
    cd = conjugacy_classes(group)
    r = group.dim - 1
    bound = q**r + 40 * q ** (r - 1)
    return ClassCountCheck(
        q=q, rank=r, class_count=cd.num_classes, bound=bound,
        passes=cd.num_classes <= bound,
    )


# -- trend report --------------------------------------------------------------


@dataclass(frozen=True)
class TrendRow:
    n: int
    q: int | None  # None encodes the q -> infinity row
    weyl_complement: Fraction  # 1 - sum 1/c_i^2 over W(A_{n-1})
    formula_ratio: Fraction | None
    brute_ratio: Fraction | None


def trend_report(
    ns: Sequence[int],
    qs: Sequence[int | None],
    brute_cap: int = 2 * 10**4,
) -> list[TrendRow]:
    """Rows (n, q) with the Weyl-statistic column always filled, the
    closed-form column for n in {2, 3}, and the brute census column when the
    group order fits under `brute_cap`."""
    rows = []
    for n in sorted(set(ns)):
        weyl = 1 - sum_inv_c_sq_stream("A", n - 1) if n >= 2 else Fraction(0)
        for q in qs:
            formula = None
            brute = None
            if q is None:
                if n in (2, 3):
                    from .gln import gln_zero_ratio_ratfunc
                    from .polynomials import limit_at_infinity

                    formula = limit_at_infinity(gln_zero_ratio_ratfunc(n))
            else:
                if n in (2, 3):
                    formula = gln_zero_ratio_formula(n, q)
                order = 1
                for i in range(n):
                    order *= q**n - q**i
                if order <= brute_cap:
                    from .matgroup import gl_group

                    g = gl_group(n, q)
                    brute = zero_census(
                        dixon_character_table(g, conjugacy_classes(g))
                    ).ratio
            rows.append(
                TrendRow(n=n, q=q, weyl_complement=weyl, formula_ratio=formula,
                         brute_ratio=brute)
            )
    return rows
