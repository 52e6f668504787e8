"""Finite matrix-group engine: closure from generators, conjugacy classes,
power maps, and direct products.

Elements are flat row-major tuples of field element codes, which hash in
constant time; enumeration is breadth-first from the identity with the
generator list sorted, so two runs produce identical index maps.  Conjugacy
classes are computed by orbit expansion under generator conjugation (linear
in |G| * #generators) and are labelled by their least element index.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from .ffield import Field, field_for_order


class EnumerationCapExceeded(ValueError):
    pass


DEFAULT_GROUP_CAP = 5 * 10**6


def mat_identity(n: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def mat_mul(F: Field, n: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    add, mul = F.add, F.mul
    out = [0] * (n * n)
    for i in range(n):
        ib = i * n
        for k in range(n):
            aik = a[ib + k]
            if aik:
                kb = k * n
                row_a = mul[aik]
                for j in range(n):
                    bkj = b[kb + j]
                    if bkj:
                        out[ib + j] = add[out[ib + j]][row_a[bkj]]
    return tuple(out)


def mat_inv(F: Field, n: int, a: tuple[int, ...]) -> tuple[int, ...]:
    """Gauss-Jordan inverse; raises on singular input."""
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    m = [list(a[i * n : (i + 1) * n]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        f = inv[m[col][col]]
        m[col] = [mul[f][x] for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [add[x][neg[mul[f][y]]] for x, y in zip(m[r], m[col])]
    return tuple(m[i][n + j] for i in range(n) for j in range(n))


def mat_charpoly(F: Field, n: int, a: tuple[int, ...]) -> list[int]:
    """det(xI - a) over F_q as a dense monic coefficient list (n <= 3)."""
    if n == 1:
        return [F.neg[a[0]], 1]
    add, mul, neg = F.add, F.mul, F.neg
    if n == 2:
        tr = add[a[0]][a[3]]
        det = add[mul[a[0]][a[3]]][neg[mul[a[1]][a[2]]]]
        return [det, neg[tr], 1]
    if n == 3:
        a11, a12, a13, a21, a22, a23, a31, a32, a33 = a

        def det3():
            t1 = mul[a11][add[mul[a22][a33]][neg[mul[a23][a32]]]]
            t2 = mul[a12][add[mul[a21][a33]][neg[mul[a23][a31]]]]
            t3 = mul[a13][add[mul[a21][a32]][neg[mul[a22][a31]]]]
            return add[add[t1][neg[t2]]][t3]

        tr = add[add[a11][a22]][a33]
        # sum of principal 2x2 minors
        m1 = add[mul[a22][a33]][neg[mul[a23][a32]]]
        m2 = add[mul[a11][a33]][neg[mul[a13][a31]]]
        m3 = add[mul[a11][a22]][neg[mul[a12][a21]]]
        s2 = add[add[m1][m2]][m3]
        return [neg[det3()], s2, neg[tr], 1]
    raise ValueError("characteristic polynomial helper limited to n <= 3")


class GroupTable:
    """A finite group with a deterministic element index.

    Subclasses provide element multiplication/inversion; everything the
    character-table machinery needs (class data, power maps, exponent) is
    derived here.
    """

    # populated by subclasses:
    order: int
    generator_indices: list[int]

    def mul_idx(self, i: int, j: int) -> int:
        raise NotImplementedError

    def inv_idx(self, i: int) -> int:
        raise NotImplementedError

    @property
    def identity_idx(self) -> int:
        return 0

    def element_order(self, i: int) -> int:
        n, cur = 1, i
        while cur != self.identity_idx:
            cur = self.mul_idx(cur, i)
            n += 1
        return n


class MatrixGroupTable(GroupTable):
    def __init__(self, field: Field, dim: int, elements: list[tuple[int, ...]],
                 index: dict[tuple[int, ...], int], generator_indices: list[int]):
        self.field = field
        self.dim = dim
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.generator_indices = generator_indices
        self._inv_cache: list[int | None] = [None] * self.order

    def mul_idx(self, i: int, j: int) -> int:
        return self.index[mat_mul(self.field, self.dim, self.elements[i], self.elements[j])]

    def inv_idx(self, i: int) -> int:
        cached = self._inv_cache[i]
        if cached is None:
            cached = self.index[mat_inv(self.field, self.dim, self.elements[i])]
            self._inv_cache[i] = cached
            self._inv_cache[cached] = i
        return cached


def enumerate_group(generators: list[tuple[int, ...]], field: Field, dim: int,
                    cap: int = DEFAULT_GROUP_CAP) -> MatrixGroupTable:
    """Breadth-first closure of the generators under multiplication."""
    gens = sorted(set(generators))
    for g in gens:
        mat_inv(field, dim, g)  # raises on a singular generator
    ident = mat_identity(dim)
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gens:
                y = mat_mul(field, dim, x, g)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    new_frontier.append(y)
                    if len(elements) > cap:
                        raise EnumerationCapExceeded(
                            f"group closure exceeded cap {cap}"
                        )
        frontier = new_frontier
    # closure under inverse is implied (finite order); spot-check a sample
    for x in elements[: min(len(elements), 16)]:
        if mat_inv(field, dim, x) not in index:
            raise RuntimeError("closure is not inverse-closed; enumeration bug")
    gen_idx = [index[g] for g in gens]
    return MatrixGroupTable(field, dim, elements, index, gen_idx)


class ProductGroupTable(GroupTable):
    """Direct product; elements are pairs of factor indices (block-diagonal
    in spirit, but the factors may live over different fields)."""

    def __init__(self, a: GroupTable, b: GroupTable):
        self.a = a
        self.b = b
        self.order = a.order * b.order
        self._nb = b.order
        self.generator_indices = [self._pack(g, b.identity_idx) for g in a.generator_indices]
        self.generator_indices += [self._pack(a.identity_idx, g) for g in b.generator_indices]

    def _pack(self, i: int, j: int) -> int:
        return i * self._nb + j

    def _unpack(self, k: int) -> tuple[int, int]:
        return divmod(k, self._nb)

    def mul_idx(self, i: int, j: int) -> int:
        ia, ib = self._unpack(i)
        ja, jb = self._unpack(j)
        return self._pack(self.a.mul_idx(ia, ja), self.b.mul_idx(ib, jb))

    def inv_idx(self, i: int) -> int:
        ia, ib = self._unpack(i)
        return self._pack(self.a.inv_idx(ia), self.b.inv_idx(ib))


def direct_product(a: GroupTable, b: GroupTable, cap: int = DEFAULT_GROUP_CAP) -> ProductGroupTable:
    if a.order * b.order > cap:
        raise EnumerationCapExceeded(f"product order {a.order * b.order} exceeds cap {cap}")
    return ProductGroupTable(a, b)


class ClassData:
    """Conjugacy classes with sizes, representatives and power maps."""

    def __init__(self, group: GroupTable):
        g = group
        n = g.order
        gens = g.generator_indices
        gen_pairs = [(x, g.inv_idx(x)) for x in gens]
        class_of = [-1] * n
        reps: list[int] = []
        sizes: list[int] = []
        for seed in range(n):
            if class_of[seed] >= 0:
                continue
            cls = len(reps)
            reps.append(seed)
            class_of[seed] = cls
            orbit = [seed]
            frontier = [seed]
            while frontier:
                new_frontier = []
                for x in frontier:
                    for gi, gi_inv in gen_pairs:
                        y = g.mul_idx(g.mul_idx(gi, x), gi_inv)
                        if class_of[y] < 0:
                            class_of[y] = cls
                            orbit.append(y)
                            new_frontier.append(y)
                frontier = new_frontier
            sizes.append(len(orbit))
        self.group = group
        self.class_reps = reps
        self.class_sizes = sizes
        self.class_of = class_of
        self.num_classes = len(reps)
        orders = [group.element_order(r) for r in reps]
        self.rep_orders = orders
        self.exponent = lcm(*orders) if orders else 1
        # power_map[c][k] = class of rep_c^k for 0 <= k < order(rep_c)
        pm: list[list[int]] = []
        for rep, d in zip(reps, orders):
            row = []
            cur = group.identity_idx
            for _ in range(d):
                row.append(class_of[cur])
                cur = group.mul_idx(cur, rep)
            pm.append(row)
        self.power_map = pm
        self.inverse_class = [pm[c][(-1) % orders[c]] if orders[c] > 1 else class_of[group.identity_idx]
                              for c in range(len(reps))]

    def power_class(self, c: int, k: int) -> int:
        return self.power_map[c][k % self.rep_orders[c]]


def conjugacy_classes(group: GroupTable) -> ClassData:
    return ClassData(group)


# -- standard generating sets -------------------------------------------


def gl_generators(n: int, F: Field) -> list[tuple[int, ...]]:
    """Transvections on adjacent coordinates plus a diag(g,1,..,1) scaling:
    the transvections generate SL_n and the scaling extends to GL_n."""
    gens = []
    if n == 1:
        return [(F.generator,)]
    for i in range(n - 1):
        for a, b in ((i, i + 1), (i + 1, i)):
            m = list(mat_identity(n))
            m[a * n + b] = 1
            gens.append(tuple(m))
    m = list(mat_identity(n))
    m[0] = F.generator
    gens.append(tuple(m))
    return gens


def sl_generators(n: int, F: Field) -> list[tuple[int, ...]]:
    """All elementary transvections I + c*E_ij (i != j, c over a spanning
    set), which generate SL_n for every q."""
    gens = []
    scalars = sorted({F.pow(F.generator, k) for k in range(F.e)}) if F.q > 2 else [1]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for c in scalars:
                m = list(mat_identity(n))
                m[i * n + j] = c
                gens.append(tuple(m))
    return gens


def gl_order(n: int, q: int) -> int:
    result = 1
    for i in range(n):
        result *= q**n - q**i
    return result


@lru_cache(maxsize=8)
def gl_group(n: int, q: int, cap: int = DEFAULT_GROUP_CAP) -> MatrixGroupTable:
    F = field_for_order(q)
    g = enumerate_group(gl_generators(n, F), F, n, cap)
    assert g.order == gl_order(n, q), "GL closure has the wrong order"
    return g


@lru_cache(maxsize=8)
def sl_group(n: int, q: int, cap: int = DEFAULT_GROUP_CAP) -> MatrixGroupTable:
    F = field_for_order(q)
    g = enumerate_group(sl_generators(n, F), F, n, cap)
    assert g.order == gl_order(n, q) // (q - 1), "SL closure has the wrong order"
    return g
