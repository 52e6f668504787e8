"""Exact character tables by the Burnside-Dixon-Schneider method.

The table is computed modulo a prime l = 1 (mod m) with l > 2*sqrt(|G|)
(m the group exponent), then lifted to Z[zeta_m]: for each class the
eigenvalue multiplicities of a representative are recovered by discrete
Fourier inversion over the power map; each multiplicity is a true integer
in [0, degree] < l, so the lift is unambiguous and the resulting values
are exact cyclotomic integers.  Zero detection afterwards is the canonical
coordinate test - no tolerance appears anywhere.

Determinism: the prime l is minimal, degenerate eigenspaces are split by
class matrices in class-index order, and the finished rows are sorted
canonically (trivial character first, then by degree and coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .cyclotomic import CycInt, _power_basis, euler_phi
from .ffield import is_prime
from .matgroup import ClassData, GroupTable

MAX_CLASSES = 256
_INT64_GUARD = 1 << 60


# -- modular linear algebra (int64 numpy, entries reduced mod l) ----------


def _mod_inv(a: int, l: int) -> int:
    return pow(int(a), l - 2, l)


def _mod_rref(M: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    M = M.copy() % l
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for rr in range(r, rows):
            if M[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = (M[r] * _mod_inv(M[r, c], l)) % l
        for rr in range(rows):
            if rr != r and M[rr, c]:
                M[rr] = (M[rr] - M[rr, c] * M[r]) % l
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _mod_nullspace(M: np.ndarray, l: int) -> np.ndarray:
    """Rows spanning {x : M x = 0 (mod l)}."""
    R, pivots = _mod_rref(M, l)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(R[ri, fc])) % l
    return basis


def _mod_charpoly(M: np.ndarray, l: int) -> list[int]:
    """Characteristic polynomial mod l via Hessenberg reduction, lowest
    degree first, monic."""
    H = M.copy() % l
    n = H.shape[0]
    for c in range(n - 2):
        piv = None
        for r in range(c + 1, n):
            if H[r, c]:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            H[[c + 1, piv]] = H[[piv, c + 1]]
            H[:, [c + 1, piv]] = H[:, [piv, c + 1]]
        inv = _mod_inv(H[c + 1, c], l)
        for r in range(c + 2, n):
            if H[r, c]:
                f = (H[r, c] * inv) % l
                H[r] = (H[r] - f * H[c + 1]) % l
                H[:, c + 1] = (H[:, c + 1] + f * H[:, r]) % l
    # p_m(x) = (x - H[m-1,m-1]) p_{m-1} - sum_i H[m-1-i,m-1] (prod subdiag) p_{m-1-i}
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [0] + prev  # x * p_{m-1}
        a = int(H[m - 1, m - 1]) % l
        for j in range(len(prev)):
            cur[j] = (cur[j] - a * prev[j]) % l
        beta = 1
        for i in range(1, m):
            beta = (beta * int(H[m - i, m - i - 1])) % l
            if beta == 0:
                break
            coef = (int(H[m - 1 - i, m - 1]) * beta) % l
            if coef:
                pi = polys[m - 1 - i]
                for j in range(len(pi)):
                    cur[j] = (cur[j] - coef * pi[j]) % l
        polys.append([c % l for c in cur])
    return polys[n]


def _mod_poly_roots(coeffs: list[int], l: int) -> list[int]:
    xs = np.arange(l, dtype=np.int64)
    acc = np.zeros(l, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % l
    return sorted(int(x) for x in np.nonzero(acc == 0)[0])


def _sqrt_mod(a: int, l: int) -> int:
    """Tonelli-Shanks; l an odd prime, a a quadratic residue."""
    a %= l
    if a == 0:
        return 0
    if pow(a, (l - 1) // 2, l) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {l}")
    if l % 4 == 3:
        return pow(a, (l + 1) // 4, l)
    q, s = l - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (l - 1) // 2, l) != l - 1:
        z += 1
    m, c, t, r = s, pow(z, q, l), pow(a, q, l), pow(a, (q + 1) // 2, l)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % l
            i += 1
        b = pow(c, 1 << (m - i - 1), l)
        m, c = i, b * b % l
        t, r = t * c % l, r * b % l
    return r


def _least_primitive_root(l: int) -> int:
    factors = set()
    n, d = l - 1, 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    for w in range(2, l):
        if all(pow(w, (l - 1) // f, l) != 1 for f in factors):
            return w
    raise RuntimeError("no primitive root found")


def dixon_prime(order: int, exponent: int, search_bound: int = 10**7) -> int:
    """Least prime l = 1 (mod exponent), l > 2*sqrt(order), l coprime to
    the group order."""
    floor = 2 * isqrt(order) + 1
    l = exponent + 1
    while l <= search_bound:
        if l > floor and is_prime(l) and order % l != 0:
            return l
        l += exponent
    raise RuntimeError(f"no Dixon prime below {search_bound} for exponent {exponent}")


# -- tables ----------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    conductor: int
    degrees: tuple[int, ...]
    values: tuple[tuple[CycInt, ...], ...]  # irreducible x class
    class_sizes: tuple[int, ...]
    class_rep_orders: tuple[int, ...]
    group_order: int

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "conductor": self.conductor,
            "num_classes": self.num_classes,
            "degrees": list(self.degrees),
            "class_sizes": list(self.class_sizes),
            "class_rep_orders": list(self.class_rep_orders),
            "values": [[v.to_json() for v in row] for row in self.values],
        }

    @staticmethod
    def from_json(obj: dict) -> "CharacterTable":
        return CharacterTable(
            conductor=int(obj["conductor"]),
            degrees=tuple(int(d) for d in obj["degrees"]),
            values=tuple(
                tuple(CycInt.from_json(v) for v in row) for row in obj["values"]
            ),
            class_sizes=tuple(int(s) for s in obj["class_sizes"]),
            class_rep_orders=tuple(int(s) for s in obj["class_rep_orders"]),
            group_order=int(obj["group_order"]),
        )


@dataclass(frozen=True)
class ZeroReport:
    zero_entries: int
    total_entries: int
    ratio: Fraction
    per_character_zero_counts: tuple[int, ...]

    def to_json(self) -> dict:
        from .serial import frac_str

        return {
            "zeros": self.zero_entries,
            "entries": self.total_entries,
            "ratio": frac_str(self.ratio),
            "per_character_zero_counts": list(self.per_character_zero_counts),
        }


# -- the algorithm ----------------------------------------------------------


def _class_coefficient_tensor(group: GroupTable, cd: ClassData) -> np.ndarray:
    """A[i, j, k] = #{(u, v) in C_i x C_j : u v = rep_k}."""
    tau = cd.num_classes
    A = np.zeros((tau, tau, tau), dtype=np.int64)
    class_of = cd.class_of
    reps = cd.class_reps
    mul = group.mul_idx
    inv = group.inv_idx
    for x in range(group.order):
        i = class_of[x]
        xinv = inv(x)
        Ai = A[i]
        for k in range(tau):
            j = class_of[mul(xinv, reps[k])]
            Ai[j, k] += 1
    return A


def _common_eigenrows(A: np.ndarray, l: int) -> np.ndarray:
    """Rows u with u * A[i].T = lambda_i u for all i, normalized so the
    identity-class coordinate is 1.  Splits degenerate eigenspaces by
    adjoining class matrices in index order."""
    tau = A.shape[0]
    spaces: list[np.ndarray] = [np.eye(tau, dtype=np.int64)]
    for i in range(1, tau):
        if all(s.shape[0] == 1 for s in spaces):
            break
        Bi = A[i].T % l
        new_spaces: list[np.ndarray] = []
        for B in spaces:
            if B.shape[0] == 1:
                new_spaces.append(B)
                continue
            BB, pivots = _mod_rref(B, l)
            prod = (BB @ Bi) % l
            R = prod[:, pivots]
            roots = _mod_poly_roots(_mod_charpoly(R, l), l)
            if len(roots) == 1:
                new_spaces.append(BB)
                continue
            for lam in roots:
                shifted = (R - lam * np.eye(R.shape[0], dtype=np.int64)) % l
                C = _mod_nullspace(shifted.T, l)
                if C.shape[0] == 0:
                    continue
                sub = (C @ BB) % l
                sub, _ = _mod_rref(sub, l)
                new_spaces.append(sub)
        spaces = new_spaces
    if any(s.shape[0] != 1 for s in spaces) or len(spaces) != tau:
        raise RuntimeError(
            "class-matrix eigenspaces failed to split to dimension one; "
            "this signals a bug in the class data"
        )
    rows = np.vstack([s[0] for s in spaces]) % l
    out = np.zeros_like(rows)
    for r in range(tau):
        lead = int(rows[r, 0])
        if lead == 0:
            raise RuntimeError("eigenvector has zero identity coordinate")
        out[r] = (rows[r] * _mod_inv(lead, l)) % l
    return out


def dixon_character_table(group: GroupTable, cd: ClassData) -> CharacterTable:
    tau = cd.num_classes
    if tau > MAX_CLASSES:
        raise ValueError(f"class count {tau} exceeds supported maximum {MAX_CLASSES}")
    order = group.order
    m = cd.exponent
    l = dixon_prime(order, m)
    A = _class_coefficient_tensor(group, cd)
    omega = _common_eigenrows(A, l)  # tau x tau, omega[chi, k]

    sizes = np.array(cd.class_sizes, dtype=np.int64)
    inv_sizes = np.array([_mod_inv(int(s), l) for s in sizes], dtype=np.int64)
    inv_class = cd.inverse_class

    # degree^2 = |G| / sum_k omega_k omega_{k^-1} / |C_k|
    mod_rows = np.zeros((tau, tau), dtype=np.int64)
    degrees = []
    for r in range(tau):
        u = omega[r]
        s = 0
        for k in range(tau):
            s = (s + int(u[k]) * int(u[inv_class[k]]) % l * int(inv_sizes[k])) % l
        d_sq = order % l * _mod_inv(s, l) % l
        d = _sqrt_mod(d_sq, l)
        if d > l // 2:
            d = l - d
        degrees.append(d)  # true degree: bounded by sqrt(|G|) < l/2
        mod_rows[r] = (u * d % l) * inv_sizes % l

    # -- lift to Z[zeta_m] ------------------------------------------------
    w = _least_primitive_root(l)
    z = pow(w, (l - 1) // m, l)  # the chosen primitive m-th root in F_l
    phi = euler_phi(m)
    basis = np.array(_power_basis(m), dtype=np.int64)  # m x phi

    coeff_table = np.zeros((tau, tau, phi), dtype=np.int64)
    for k in range(tau):
        d = cd.rep_orders[k]
        zd = pow(z, m // d, l)
        zd_inv = _mod_inv(zd, l)
        d_inv = _mod_inv(d, l)
        # Vinv[t, j] = zd^(-t j) / d
        pw = np.array([pow(zd_inv, t, l) for t in range(d)], dtype=np.int64)
        Vinv = np.ones((d, d), dtype=np.int64)
        for j in range(1, d):
            Vinv[:, j] = Vinv[:, j - 1] * pw % l
        Vinv = Vinv * d_inv % l
        X = mod_rows[:, [cd.power_map[k][j] for j in range(d)]].T % l  # d x tau
        MU = (Vinv @ X) % l  # multiplicities of zeta_d^t, exact in [0, degree]
        for r in range(tau):
            col = MU[:, r]
            if int(col.sum()) != degrees[r] or int(col.max(initial=0)) > degrees[r]:
                raise RuntimeError(
                    "eigenvalue multiplicities failed the degree bound; "
                    "modular table is inconsistent"
                )
        # value = sum_t MU[t] * zeta_m^(t*m/d), already-canonical rows of `basis`
        exp_rows = basis[[t * (m // d) % m for t in range(d)]]  # d x phi
        coeff_table[:, k, :] = MU.T @ exp_rows

    # modular consistency: mapping zeta_m -> z must reproduce the mod-l table
    zpow = np.array([pow(z, i, l) for i in range(phi)], dtype=np.int64)
    recon = (coeff_table % l) @ zpow % l
    if not np.array_equal(recon, mod_rows):
        raise RuntimeError("lifted table does not reduce to the modular table")

    rows = [
        tuple(CycInt(m, tuple(int(c) for c in coeff_table[r, k])) for k in range(tau))
        for r in range(tau)
    ]
    order_check = sum(d * d for d in degrees)
    if order_check != order:
        raise RuntimeError("sum of squared degrees does not match the group order")

    # canonical presentation: trivial character first, then by degree/values
    paired = sorted(
        zip(degrees, rows),
        key=lambda dr: (
            not all(v == 1 for v in dr[1]),  # trivial row first
            dr[0],
            tuple(v.coeffs for v in dr[1]),
        ),
    )
    if not all(v == 1 for v in paired[0][1]):
        raise RuntimeError("trivial character missing from the table")
    degrees_sorted = tuple(d for d, _ in paired)
    values_sorted = tuple(r for _, r in paired)
    return CharacterTable(
        conductor=m,
        degrees=degrees_sorted,
        values=values_sorted,
        class_sizes=tuple(cd.class_sizes),
        class_rep_orders=tuple(cd.rep_orders),
        group_order=order,
    )


# -- censuses and checks ----------------------------------------------------


def zero_census(t: CharacterTable) -> ZeroReport:
    per_char = tuple(sum(1 for v in row if v.is_zero()) for row in t.values)
    zeros = sum(per_char)
    total = t.num_classes * t.num_classes
    return ZeroReport(zeros, total, Fraction(zeros, total), per_char)


def _conjugate_coeff_matrix(m: int) -> np.ndarray:
    """Matrix C with coords(conj(v)) = coords(v) @ C."""
    phi = euler_phi(m)
    basis = np.array(_power_basis(m), dtype=np.int64)
    out = np.zeros((phi, phi), dtype=np.int64)
    for i in range(phi):
        out[i] = basis[(-i) % m]
    return out


def _orthogonality_sums(t: CharacterTable) -> tuple[np.ndarray, np.ndarray]:
    """Row sums S[i,j] = sum_k |C_k| chi_i(g_k) conj(chi_j(g_k)) and column
    sums T[k,l'] = sum_i chi_i(g_k) conj(chi_i(g_l')), both as canonical
    coordinate vectors (..., phi).

    Computed by one big integer matrix product per side: polynomial
    convolution in the (u, v) coordinate pair, folded along u+v, then
    reduced modulo the cyclotomic polynomial.  int64 throughout, with a
    pre-checked magnitude bound so overflow cannot occur silently; oversize
    tables fall back to exact object-dtype arithmetic.
    """
    m = t.conductor
    tau, phi = t.num_classes, euler_phi(m)
    C = np.array([[list(v.coeffs) for v in row] for row in t.values], dtype=np.int64)
    conj_mat = _conjugate_coeff_matrix(m)
    basis = np.array(_power_basis(m), dtype=np.int64)
    red = basis[phi : 2 * phi - 1] if phi > 1 else np.zeros((0, phi), dtype=np.int64)
    max_c = int(np.abs(C).max(initial=0))
    max_conj = int(np.abs(conj_mat).max(initial=0))
    max_red = int(np.abs(red).max(initial=1))
    # worst entry after weight/convolve/fold/reduce stages
    bound = (
        max(t.class_sizes) * max_c * (phi * max_c * max_conj) * tau * phi
        * (1 + phi * max_red)
    )
    if bound > _INT64_GUARD:
        C = C.astype(object)
        conj_mat = conj_mat.astype(object)
        red = red.astype(object)

    D = C @ conj_mat  # complex-conjugated coordinates

    def pairwise(A, B):
        # out[a, b, u, v] = sum_k A[a, k, u] * B[b, k, v]
        M1 = A.transpose(0, 2, 1).reshape(tau * phi, tau)
        M2 = B.transpose(1, 0, 2).reshape(tau, tau * phi)
        P = np.dot(M1, M2).reshape(tau, phi, tau, phi)
        return P.transpose(0, 2, 1, 3)

    def fold_and_reduce(P):
        full = np.zeros(P.shape[:2] + (2 * phi - 1,), dtype=P.dtype)
        for u in range(phi):
            full[:, :, u : u + phi] += P[:, :, u, :]
        low = full[:, :, :phi].copy()
        if phi > 1:
            low += np.dot(full[:, :, phi:], red)
        return low

    sizes = np.array(t.class_sizes, dtype=np.int64)
    if C.dtype == object:
        sizes = sizes.astype(object)
    Cw = C * sizes[None, :, None]
    S = fold_and_reduce(pairwise(Cw, D))
    # columns: out[k, l, u, v] = sum_i C[i, k, u] * D[i, l, v]
    T = fold_and_reduce(pairwise(C.transpose(1, 0, 2), D.transpose(1, 0, 2)))
    return S, T


def verify_orthogonality(t: CharacterTable) -> bool:
    """Exact row and column orthogonality in cyclotomic arithmetic."""
    S, T = _orthogonality_sums(t)
    tau, phi = t.num_classes, S.shape[-1]
    order = t.group_order
    expect_rows = np.zeros_like(S)
    for i in range(tau):
        expect_rows[i, i, 0] = order
    if not (S == expect_rows).all():
        return False
    expect_cols = np.zeros_like(T)
    for k in range(tau):
        expect_cols[k, k, 0] = order // t.class_sizes[k]  # centralizer order
    return bool((T == expect_cols).all())
