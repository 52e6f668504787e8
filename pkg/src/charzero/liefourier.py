"""Adjoint orbits of gl_n(F_q), the trace-form Fourier transform of orbit
indicators, Green functions by fixed-flag counting, Harish-Chandra induction
from the split Cartan, and the Kazhdan-Letellier identity check.

The transform of an orbit indicator is F(1_O)(Y) = sum_{y in O} psi(tr(Y y))
with psi = zeta_p^Tr the canonical additive character; values are exact
cyclotomic integers of conductor p, accumulated as counts per trace residue.
Jordan decompositions are computed exactly (Newton iteration against the
squarefree part of the characteristic polynomial), so the induction formula
is evaluated literally, with the single division at the end checked for
exact divisibility.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycInt
from .dixon import ZeroReport
from .ffield import (
    Field,
    fq_poly_derivative,
    fq_poly_divmod,
    fq_poly_factor_cubic_or_less,
    fq_poly_is_squarefree,
    fq_poly_mul,
    fq_poly_roots,
    fq_poly_trim,
)
from .matgroup import MatrixGroupTable, gl_group, mat_charpoly, mat_identity, mat_inv, mat_mul

DEFAULT_MATRIX_SPACE_CAP = 10**7


# -- small exact linear algebra over F_q -------------------------------------


def _mat_rank(F: Field, n: int, rows: list[list[int]]) -> int:
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    m = [row[:] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        f = inv[m[rank][col]]
        m[rank] = [mul[f][x] for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                g = m[r][col]
                m[r] = [add[x][neg[mul[g][y]]] for x, y in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def _nullspace_basis(F: Field, rows: list[list[int]]) -> list[list[int]]:
    """Basis of {x : rows @ x = 0} over F_q."""
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    m = [row[:] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        f = inv[m[rank][col]]
        m[rank] = [mul[f][x] for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                g = m[r][col]
                m[r] = [add[x][neg[mul[g][y]]] for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = neg[m[r][fc]]
        basis.append(vec)
    return basis


def _min_poly(F: Field, n: int, a: tuple[int, ...]) -> list[int]:
    """Minimal polynomial via the first linear dependence among I, a, a^2..."""
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    powers = [mat_identity(n)]
    while True:
        powers.append(mat_mul(F, n, powers[-1], a))
        # solve sum c_i powers[i] = 0 with c_last = 1
        k = len(powers) - 1
        rows = [[powers[i][e] for i in range(k)] + [powers[k][e]] for e in range(n * n)]
        # gaussian solve rows[:, :k] x = -rows[:, k]
        m = [row[:] for row in rows]
        pivots = []
        rank = 0
        for col in range(k):
            piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            f = inv[m[rank][col]]
            m[rank] = [mul[f][x] for x in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col]:
                    g = m[r][col]
                    m[r] = [add[x][neg[mul[g][y]]] for x, y in zip(m[r], m[rank])]
            pivots.append(col)
            rank += 1
        consistent = all(any(m[r][c] for c in range(k)) or m[r][k] == 0 for r in range(len(m)))
        if consistent:
            sol = [0] * k
            for r, pc in enumerate(pivots):
                sol[pc] = neg[m[r][k]]
            return fq_poly_trim(sol + [1])


def _mat_from_poly(F: Field, n: int, coeffs: list[int], a: tuple[int, ...]) -> tuple[int, ...]:
    """Evaluate a polynomial at the matrix a (Horner); diagonal flat indices
    of a row-major square matrix are the multiples of n+1."""
    acc = tuple(0 for _ in range(n * n))
    for c in reversed(coeffs):
        acc = mat_mul(F, n, acc, a)
        if c:
            acc = tuple(
                F.add[x][c] if i % (n + 1) == 0 else x for i, x in enumerate(acc)
            )
    return acc


def _poly_inverse_mod(F: Field, a: list[int], mod: list[int]) -> list[int]:
    """Inverse of a modulo mod in F_q[x] by extended Euclid."""
    r0, r1 = mod[:], a[:]
    s0, s1 = [], [1]
    while r1:
        qpoly, rem = fq_poly_divmod(F, r0, r1)
        r0, r1 = r1, rem
        s2 = _poly_sub(F, s0, fq_poly_mul(F, qpoly, s1))
        s0, s1 = s1, s2
    if len(r0) != 1:
        raise ValueError("element is not invertible modulo the given polynomial")
    c = F.inv[r0[0]]
    return [F.mul[c][x] for x in s0]


def _poly_sub(F: Field, a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.add[out[i]][F.neg[c]]
    return fq_poly_trim(out)


def _poly_compose_mod(F: Field, outer: list[int], inner: list[int], mod: list[int]) -> list[int]:
    acc: list[int] = []
    for c in reversed(outer):
        acc = fq_poly_mul(F, acc, inner)
        if c:
            if not acc:
                acc = [c]
            else:
                acc[0] = F.add[acc[0]][c]
        _, acc = fq_poly_divmod(F, acc, mod)
    return acc


def jordan_decomposition(F: Field, n: int, y: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exact Y = Y_s + Y_n with Y_s semisimple, Y_n nilpotent, commuting.

    Newton iteration h <- h - g(h)/g'(h) in F_q[x]/(charpoly), where g is the
    squarefree part of the characteristic polynomial; converges because g(h)
    is nilpotent in the quotient and gcd(g, g') = 1 over a perfect field.
    """
    f = mat_charpoly(F, n, y)
    factors = fq_poly_factor_cubic_or_less(F, f)
    g = [1]
    for fac in sorted({tuple(p) for p in factors}):
        g = fq_poly_mul(F, g, list(fac))
    if len(g) == len(f):  # charpoly already squarefree: y is semisimple
        return y, tuple(0 for _ in range(n * n))
    gp = fq_poly_derivative(F, g)
    h = [0, 1]
    steps = 0
    while True:
        gh = _poly_compose_mod(F, g, h, f)
        if not gh:
            break
        gph = _poly_compose_mod(F, gp, h, f)
        inv_gph = _poly_inverse_mod(F, gph, f)
        delta = fq_poly_mul(F, gh, inv_gph)
        _, delta = fq_poly_divmod(F, delta, f)
        h = _poly_sub(F, h, delta)
        steps += 1
        if steps > n + 2:
            raise RuntimeError("Jordan decomposition Newton iteration failed to settle")
    ys = _mat_from_poly(F, n, h, y)
    yn = tuple(F.add[a][F.neg[b]] for a, b in zip(y, ys))
    assert fq_poly_is_squarefree(F, _min_poly(F, n, ys)), "semisimple part is not semisimple"
    assert _is_nilpotent(F, n, yn), "nilpotent part is not nilpotent"
    assert mat_mul(F, n, ys, yn) == mat_mul(F, n, yn, ys), "Jordan parts do not commute"
    return ys, yn


def _is_nilpotent(F: Field, n: int, a: tuple[int, ...]) -> bool:
    zero = tuple(0 for _ in range(n * n))
    power = a
    for _ in range(n):
        if power == zero:
            return True
        power = mat_mul(F, n, power, a)
    return power == zero


def _nilpotent_jordan_type(F: Field, n: int, a: tuple[int, ...]) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, from ranks of powers."""
    ranks = [n]
    cur = mat_identity(n)
    for _ in range(n):
        cur = mat_mul(F, n, cur, a)
        rows = [list(cur[i * n : (i + 1) * n]) for i in range(n)]
        ranks.append(_mat_rank(F, n, rows))
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    sizes = []
    for k in range(1, n + 1):
        count_ge_k = ranks[k - 1] - ranks[k]
        sizes.append(count_ge_k)
    jordan = []
    for size in range(n, 0, -1):
        mult = sizes[size - 1] - (sizes[size] if size < n else 0)
        jordan.extend([size] * mult)
    return tuple(jordan)


# -- orbit table --------------------------------------------------------------


@dataclass(frozen=True)
class OrbitRecord:
    rep: tuple[int, ...]
    size: int
    is_semisimple: bool
    is_regular_semisimple: bool
    cartan_partition: tuple[int, ...] | None
    semisimple_part_orbit: int
    nilpotent_jordan_type: tuple[int, ...]


@dataclass(frozen=True)
class OrbitTable:
    field: Field
    n: int
    orbits: tuple[OrbitRecord, ...]
    orbit_of: tuple[int, ...]  # indexed by matrix code
    orbit_elements: tuple[tuple[int, ...], ...]  # matrix codes per orbit

    @property
    def num_orbits(self) -> int:
        return len(self.orbits)

    def matrix_code(self, a: tuple[int, ...]) -> int:
        q = self.field.q
        code = 0
        for entry in reversed(a):
            code = code * q + entry
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        q = self.field.q
        out = []
        for _ in range(self.n * self.n):
            out.append(code % q)
            code //= q
        return tuple(out)

    def orbit_of_matrix(self, a: tuple[int, ...]) -> int:
        return self.orbit_of[self.matrix_code(a)]


def adjoint_orbits(n: int, field: Field, cap: int = DEFAULT_MATRIX_SPACE_CAP,
                   group: MatrixGroupTable | None = None) -> OrbitTable:
    """Orbits of GL_n(F_q) acting on n x n matrices by conjugation."""
    q = field.q
    space = q ** (n * n)
    if space > cap:
        raise ValueError(f"matrix space size {space} exceeds cap {cap}")
    if group is None:
        group = gl_group(n, q)
    gens = [group.elements[i] for i in group.generator_indices]
    gen_pairs = [(g, mat_inv(field, n, g)) for g in gens]

    def code_of(a: tuple[int, ...]) -> int:
        c = 0
        for entry in reversed(a):
            c = c * q + entry
        return c

    def decode(code: int) -> tuple[int, ...]:
        out = []
        for _ in range(n * n):
            out.append(code % q)
            code //= q
        return tuple(out)

    orbit_of = [-1] * space
    orbit_reps: list[tuple[int, ...]] = []
    orbit_elements: list[tuple[int, ...]] = []
    for seed in range(space):
        if orbit_of[seed] >= 0:
            continue
        oid = len(orbit_reps)
        orbit_of[seed] = oid
        members = [seed]
        frontier = [decode(seed)]
        while frontier:
            new_frontier = []
            for x in frontier:
                for g, ginv in gen_pairs:
                    y = mat_mul(field, n, mat_mul(field, n, g, x), ginv)
                    c = code_of(y)
                    if orbit_of[c] < 0:
                        orbit_of[c] = oid
                        members.append(c)
                        new_frontier.append(y)
            frontier = new_frontier
        orbit_reps.append(decode(seed))
        orbit_elements.append(tuple(sorted(members)))

    # second pass: flags need orbit_of complete (semisimple part lookup)
    records = []
    for oid, rep in enumerate(orbit_reps):
        cp = mat_charpoly(field, n, rep)
        rss = fq_poly_is_squarefree(field, cp)
        cartan = None
        if rss:
            cartan = tuple(
                sorted((len(f) - 1 for f in fq_poly_factor_cubic_or_less(field, cp)),
                       reverse=True)
            )
        ys, yn = jordan_decomposition(field, n, rep)
        ss = yn == tuple(0 for _ in range(n * n))
        records.append(
            OrbitRecord(
                rep=rep,
                size=len(orbit_elements[oid]),
                is_semisimple=ss,
                is_regular_semisimple=rss,
                cartan_partition=cartan,
                semisimple_part_orbit=orbit_of[code_of(ys)],
                nilpotent_jordan_type=_nilpotent_jordan_type(field, n, yn),
            )
        )

    table = OrbitTable(
        field=field,
        n=n,
        orbits=tuple(records),
        orbit_of=tuple(orbit_of),
        orbit_elements=tuple(orbit_elements),
    )
    if sum(r.size for r in records) != space:
        raise RuntimeError("orbit sizes do not partition the matrix space")
    ss_count = sum(1 for r in records if r.is_semisimple)
    if ss_count != q**n:
        raise RuntimeError(
            f"semisimple orbit count {ss_count} differs from q^n = {q**n}"
        )
    return table


# -- Fourier transform ---------------------------------------------------------


@dataclass(frozen=True)
class FourierTable:
    conductor: int
    values: tuple[tuple[CycInt, ...], ...]  # (source orbit, target orbit)
    orbit_sizes: tuple[int, ...]

    @property
    def num_orbits(self) -> int:
        return len(self.orbit_sizes)


def _trace_residue(F: Field, n: int, a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Tr_{F_q/F_p}(tr(a b))."""
    add, mul = F.add, F.mul
    acc = 0
    for i in range(n):
        for j in range(n):
            acc = add[acc][mul[a[i * n + j]][b[j * n + i]]]
    return F.trace_to_prime(acc)


def fourier_table(o: OrbitTable, scale: int = 1) -> FourierTable:
    """values[O, O'] = F(1_O)(rep(O')) = sum_{y in O} psi(scale * tr(rep(O') y)).

    `scale` (a nonzero field element) replaces psi by psi(scale * .), which
    permutes rows but must not change the zero census; the default is the
    canonical character.
    """
    F, n = o.field, o.n
    if not 1 <= scale < F.q:
        raise ValueError("character scale must be a nonzero field element code")
    p = F.p
    tau = o.num_orbits
    counts = [[[0] * p for _ in range(tau)] for _ in range(tau)]
    for target, rec in enumerate(o.orbits):
        rep = rec.rep
        if scale != 1:
            rep = tuple(F.mul[scale][x] for x in rep)
        for code in range(len(o.orbit_of)):
            src = o.orbit_of[code]
            t = _trace_residue(F, n, rep, o.decode(code))
            counts[src][target][t] += 1
    values = tuple(
        tuple(
            CycInt.from_exponents(p, {t: c for t, c in enumerate(counts[src][tgt]) if c})
            for tgt in range(tau)
        )
        for src in range(tau)
    )
    table = FourierTable(
        conductor=p,
        values=values,
        orbit_sizes=tuple(r.size for r in o.orbits),
    )
    zero_code = 0
    zero_orbit = o.orbit_of[zero_code]
    for src in range(tau):
        if values[src][zero_orbit] != o.orbits[src].size:
            raise RuntimeError("F(1_O)(0) != |O|; transform is inconsistent")
    _recheck_well_defined(o, table, scale)
    return table


def _recheck_well_defined(o: OrbitTable, t: FourierTable, scale: int) -> None:
    """Recompute a handful of columns at a second orbit representative; the
    choice is deterministic (first five multi-element orbits, second member)."""
    F, n = o.field, o.n
    p = F.p
    checked = 0
    for tgt, members in enumerate(o.orbit_elements):
        if len(members) < 2:
            continue
        alt = o.decode(members[1])
        if scale != 1:
            alt = tuple(F.mul[scale][x] for x in alt)
        for src in range(o.num_orbits):
            counts = [0] * p
            for code in o.orbit_elements[src]:
                counts[_trace_residue(F, n, alt, o.decode(code))] += 1
            val = CycInt.from_exponents(p, {i: c for i, c in enumerate(counts) if c})
            if val != t.values[src][tgt]:
                raise RuntimeError(
                    "transform value depends on the orbit representative"
                )
        checked += 1
        if checked >= 5:
            break


def fourier_zero_census(t: FourierTable) -> ZeroReport:
    per_row = tuple(sum(1 for v in row if v.is_zero()) for row in t.values)
    zeros = sum(per_row)
    total = t.num_orbits**2
    return ZeroReport(zeros, total, Fraction(zeros, total), per_row)


def additive_lower_bound(o: OrbitTable) -> tuple[Fraction, Fraction]:
    """(raw, clamped) lower bound for the Fourier-table zero density:
    (#rss orbits / #orbits)^2 - sum over S_n classes of 1/c^2.

    Vacuous (negative) at small q, mirroring the multiplicative bound."""
    from .weyl import sum_inv_c_sq_stream

    rss = sum(1 for r in o.orbits if r.is_regular_semisimple)
    raw = Fraction(rss, o.num_orbits) ** 2 - sum_inv_c_sq_stream("A", o.n - 1)
    return raw, max(raw, Fraction(0))


def double_fourier_check(o: OrbitTable, t: FourierTable) -> bool:
    """F(F(1_O)) must equal q^{n^2} * 1_{-O} for every orbit O."""
    F, n = o.field, o.n
    space = F.q ** (n * n)
    tau = o.num_orbits
    neg_orbit = [
        o.orbit_of_matrix(tuple(F.neg[x] for x in rec.rep)) for rec in o.orbits
    ]
    for src in range(tau):
        for tgt in range(tau):
            acc = CycInt.zero(F.p)
            for mid in range(tau):
                acc = acc + t.values[src][mid] * t.values[mid][tgt]
            expected = space if tgt == neg_orbit[src] else 0
            if acc != expected:
                return False
    return True


# -- Green functions -----------------------------------------------------------


def _projective_points(F: Field, n: int) -> list[tuple[int, ...]]:
    """Normalized representatives (first nonzero coordinate = 1)."""
    pts = []
    q = F.q

    def rec(prefix: list[int], started: bool):
        if len(prefix) == n:
            if started:
                pts.append(tuple(prefix))
            return
        if not started:
            rec(prefix + [0], False)
            rec(prefix + [1], True)
        else:
            for c in range(q):
                rec(prefix + [c], True)

    rec([], False)
    return pts


def _apply(F: Field, n: int, a: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    add, mul = F.add, F.mul
    out = []
    for i in range(n):
        acc = 0
        for j in range(n):
            acc = add[acc][mul[a[i * n + j]][v[j]]]
        out.append(acc)
    return tuple(out)


def green_function(n: int, field: Field, u: tuple[int, ...]) -> int:
    """Number of complete flags fixed by the unipotent element u: the Green
    function value attached to the split torus."""
    ident = mat_identity(n)
    shifted = tuple(field.add[x][field.neg[y]] for x, y in zip(u, ident))
    if not _is_nilpotent(field, n, shifted):
        raise ValueError("element is not unipotent")
    if n == 1:
        return 1
    pts = _projective_points(field, n)
    if n == 2:
        return sum(1 for v in pts if _apply(field, n, u, v) == v)
    if n == 3:
        # flags = (line, plane): a stable line is a fixed projective point,
        # a stable plane is a fixed point of the transpose action, and
        # incidence is phi(v) = 0
        ut = tuple(u[j * n + i] for i in range(n) for j in range(n))
        fixed_pts = [v for v in pts if _apply(field, n, u, v) == v]
        fixed_planes = [w for w in pts if _apply(field, n, ut, w) == w]
        add, mul = field.add, field.mul
        count = 0
        for v in fixed_pts:
            for w in fixed_planes:
                acc = 0
                for i in range(n):
                    acc = add[acc][mul[v[i]][w[i]]]
                if acc == 0:
                    count += 1
        return count
    raise ValueError("flag counting implemented for n <= 3")


# -- Harish-Chandra induction and the Kazhdan-Letellier check -------------------


def _diag_entries(n: int, a: tuple[int, ...]) -> list[int]:
    return [a[i * (n + 1)] for i in range(n)]


def _is_diagonal(n: int, a: tuple[int, ...]) -> bool:
    return all(a[i * n + j] == 0 for i in range(n) for j in range(n) if i != j)


def _eigen_blocks(F: Field, n: int, ys: tuple[int, ...], yn: tuple[int, ...]):
    """For split-semisimple ys: per-eigenvalue blocks of yn in an eigenbasis."""
    if _is_diagonal(n, ys):
        vals = sorted(set(_diag_entries(n, ys)))
    else:
        vals = sorted(set(fq_poly_roots(F, mat_charpoly(F, n, ys))))
    basis: list[list[int]] = []
    blocks = []
    add, mul, neg = F.add, F.mul, F.neg
    for a in vals:
        shifted_rows = [
            [F.add[ys[i * n + j]][neg[a] if i == j else 0] for j in range(n)]
            for i in range(n)
        ]
        eig = _nullspace_basis(F, shifted_rows)
        if not eig:
            continue
        blocks.append((a, eig))
        basis.extend(eig)
    if len(basis) != n:
        raise ValueError("semisimple part is not split over F_q")
    # change of basis: columns are eigenvectors
    P = tuple(basis[j][i] for i in range(n) for j in range(n))
    Pinv = mat_inv(F, n, P)
    yn_b = mat_mul(F, n, mat_mul(F, n, Pinv, yn), P)
    out = []
    offset = 0
    for a, eig in blocks:
        d = len(eig)
        block = tuple(yn_b[(offset + i) * n + (offset + j)] for i in range(d) for j in range(d))
        # commuting nilpotent part must be block diagonal
        for i in range(d):
            for j in range(n):
                if not (offset <= j < offset + d) and yn_b[(offset + i) * n + j]:
                    raise RuntimeError("nilpotent part is not block diagonal")
        out.append((a, d, block))
        offset += d
    return out


def _centralizer_green_value(F: Field, n: int, ys: tuple[int, ...],
                             yn: tuple[int, ...]) -> int:
    """Green function of the centralizer of ys at 1 + yn: product of
    per-eigenblock fixed-flag counts."""
    q_val = 1
    for _, d, block in _eigen_blocks(F, n, ys, yn):
        u = tuple(
            F.add[block[i * d + j]][1 if i == j else 0] for i in range(d) for j in range(d)
        )
        q_val *= green_function(d, F, u)
    return q_val


def hc_induction_split(n: int, field: Field, X: tuple[int, ...], Y: tuple[int, ...],
                       group: MatrixGroupTable | None = None) -> CycInt:
    """Evaluate the averaged induction of f_X = psi(tr(. X)) from the split
    Cartan at Y, literally: (1/|C(Y_s)|) * Q_{C(Y_s)}(1 + Y_n) *
    sum_{g : g Y_s g^-1 diagonal} psi(tr(g Y_s g^-1 X)).

    X must be diagonal with distinct entries.  The division at the end is
    checked for exact divisibility in Z[zeta_p].
    """
    F = field
    if not _is_diagonal(n, X) or len(set(_diag_entries(n, X))) != n:
        raise ValueError("X must be a regular element of the split Cartan")
    if group is None:
        group = gl_group(n, F.q)
    ys, yn = jordan_decomposition(F, n, Y)
    p = F.p
    counts = [0] * p
    cent = 0
    hits = 0
    for g in group.elements:
        gy = mat_mul(F, n, mat_mul(F, n, g, ys), mat_inv(F, n, g))
        if gy == ys:
            cent += 1
        if _is_diagonal(n, gy):
            hits += 1
            counts[_trace_residue(F, n, gy, X)] += 1
    if hits == 0:
        return CycInt.zero(p)
    qval = _centralizer_green_value(F, n, ys, yn)
    total = CycInt.from_exponents(p, {t: qval * c for t, c in enumerate(counts) if c})
    coeffs = total.coeffs
    if any(c % cent for c in coeffs):
        raise RuntimeError("induction sum is not divisible by the centralizer order")
    return CycInt(p, tuple(c // cent for c in coeffs))


@dataclass(frozen=True)
class KLReport:
    n: int
    q: int
    cartan_reps: int
    orbits: int
    pairs_checked: int
    violations: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def kl_verify(n: int, field: Field, orbit_tab: OrbitTable | None = None,
              four: FourierTable | None = None) -> KLReport:
    """For every regular split-Cartan class X and every orbit representative
    Y, check |C(Y_s)| * F(1_{O_X})(Y) = q^{#pos roots} * Q * S exactly.

    Requires very good characteristic (p does not divide n)."""
    F = field
    if n % F.p == 0:
        raise ValueError(
            f"characteristic {F.p} is not very good for gl_{n}; check skipped"
        )
    group = gl_group(n, F.q)
    if orbit_tab is None:
        orbit_tab = adjoint_orbits(n, F, group=group)
    if four is None:
        four = fourier_table(orbit_tab)
    p = F.p
    pos_roots = n * (n - 1) // 2
    q_pow = F.q**pos_roots

    # per-orbit data shared across all X: diagonal images of Y_s under the
    # group, the centralizer order of Y_s, and the centralizer Green value
    elements_inv = [mat_inv(F, n, g) for g in group.elements]
    per_orbit = []
    for rec in orbit_tab.orbits:
        ys, yn = jordan_decomposition(F, n, rec.rep)
        diag_images = []
        cent = 0
        for g, ginv in zip(group.elements, elements_inv):
            gy = mat_mul(F, n, mat_mul(F, n, g, ys), ginv)
            if gy == ys:
                cent += 1
            if _is_diagonal(n, gy):
                diag_images.append(tuple(_diag_entries(n, gy)))
        qval = _centralizer_green_value(F, n, ys, yn) if diag_images else 0
        per_orbit.append((diag_images, cent, qval))

    # regular split X up to the Weyl (coordinate-permutation) action
    xs = [tuple(c) for c in itertools.combinations(range(F.q), n)]
    violations = []
    pairs = 0
    for diag in xs:
        X = tuple(diag[i] if i == j else 0 for i in range(n) for j in range(n))
        ox = orbit_tab.orbit_of_matrix(X)
        for oy in range(orbit_tab.num_orbits):
            diag_images, cent, qval = per_orbit[oy]
            counts = [0] * p
            for image in diag_images:
                acc = 0
                for a, x in zip(image, diag):
                    acc = F.add[acc][F.mul[a][x]]
                counts[F.trace_to_prime(acc)] += 1
            lhs = four.values[ox][oy] * cent
            rhs = CycInt.from_exponents(
                p, {t: q_pow * qval * c for t, c in enumerate(counts) if c}
            )
            pairs += 1
            if lhs != rhs:
                violations.append((diag, oy))
    return KLReport(
        n=n,
        q=F.q,
        cartan_reps=len(xs),
        orbits=orbit_tab.num_orbits,
        pairs_checked=pairs,
        violations=tuple(violations),
    )
