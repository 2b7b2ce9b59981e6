"""Exact character tables via Dixon's modular eigenvector method.

The pipeline: build the class-multiplication matrices M_i[j][k] = a_ijk over
a prime p with p ≡ 1 (mod exponent(G)) and p > 2|G|; deterministically refine
the full space into their one-dimensional common eigenspaces; normalize each
eigenvector v at the identity class so that v_k = |C_k| chi(g_k) / chi(1)
(mod p); recover the degrees from the orthogonality relation (with p > |G|
the degree squares are literal integers, no modular square-root ambiguity);
and lift every value to an exact cyclotomic integer through the eigenvalue
multiplicities m_j = (1/o) * sum_s chi(g^s) z^(-js) of the o-th roots of
unity.  Both orthogonality relations are verified exactly in Z[zeta] before a
table is returned.

CyclotomicValue is an integer coordinate vector in the power basis of a
primitive e-th root of unity, kept reduced modulo the e-th cyclotomic
polynomial, so equality is literal; conjugation is index negation mod e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from .errors import LiftFailure, NonIntegralCount
from .groups import ConjugacyData, MatrixGroup

TABLE_DOCUMENT_VERSION = 1


# -- exact cyclotomic integers -------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the e-th cyclotomic polynomial."""
    if e == 1:
        return (-1, 1)
    num = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            num = _int_poly_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _int_poly_div(num, den):
    """Exact division of integer polynomials with monic divisor."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert all(v == 0 for v in num)
    return out


def _reduce_mod_cyclotomic(coeffs, e):
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for i in range(deg + 1):
                coeffs[k - deg + i] -= c * phi[i]
    del coeffs[deg:]
    coeffs.extend([0] * (deg - len(coeffs)))
    return tuple(coeffs)


@dataclass(frozen=True)
class CyclotomicValue:
    """Integer element of Z[zeta_e], reduced mod the cyclotomic polynomial."""

    order: int
    coords: tuple[int, ...]

    @classmethod
    def integer(cls, e: int, n: int) -> "CyclotomicValue":
        return cls(e, _reduce_mod_cyclotomic([n], e))

    @classmethod
    def zeta_power(cls, e: int, k: int) -> "CyclotomicValue":
        k %= e
        return cls(e, _reduce_mod_cyclotomic([0] * k + [1], e))

    @classmethod
    def from_root_multiplicities(cls, e: int, step: int, mults) -> "CyclotomicValue":
        """sum_j mults[j] * zeta_e^(j*step)."""
        coeffs = [0] * e
        for j, m in enumerate(mults):
            coeffs[(j * step) % e] += m
        return cls(e, _reduce_mod_cyclotomic(coeffs, e))

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicValue.integer(self.order, other)
        self._check(other)
        return CyclotomicValue(
            self.order, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return CyclotomicValue(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicValue.integer(self.order, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicValue(self.order, tuple(a * other for a in self.coords))
        self._check(other)
        a, b = self.coords, other.coords
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CyclotomicValue(self.order, _reduce_mod_cyclotomic(conv, self.order))

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicValue":
        e = self.order
        coeffs = [0] * e
        for j, a in enumerate(self.coords):
            coeffs[(-j) % e] += a
        return CyclotomicValue(e, _reduce_mod_cyclotomic(coeffs, e))

    def is_rational_integer(self) -> bool:
        return all(a == 0 for a in self.coords[1:])

    def as_int(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coords[0]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __repr__(self):
        return f"Cyc(e={self.order}, {list(self.coords)})"


# -- dense linear algebra mod p -------------------------------------------------


def _rref(rows, p):
    """Row-reduce in place over F_p; returns the pivot column list."""
    pivots = []
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return pivots


def _solve_in_basis(basis_cols, image_cols, p):
    """C with sum_u basis[u] * C[u][v] = image[v]; the basis spans the image."""
    s = len(basis_cols)
    m = len(image_cols)
    r = len(basis_cols[0])
    rows = [
        [basis_cols[u][i] for u in range(s)] + [image_cols[v][i] for v in range(m)]
        for i in range(r)
    ]
    pivots = _rref(rows, p)
    assert pivots[:s] == list(range(s)), "basis not independent"
    return [[rows[u][s + v] for v in range(m)] for u in range(s)]


def _kernel_basis(matrix, p):
    """Basis column vectors of the kernel of a square matrix over F_p."""
    s = len(matrix)
    rows = [list(row) for row in matrix]
    pivots = _rref(rows, p)
    free = [c for c in range(s) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * s
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rows[r][fc]) % p
        basis.append(vec)
    return basis


def _det_mod(matrix, p):
    rows = [list(row) for row in matrix]
    n = len(rows)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = (det * rows[col][col]) % p
        inv = pow(rows[col][col], p - 2, p)
        for r in range(col + 1, n):
            if rows[r][col]:
                f = (rows[r][col] * inv) % p
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[col])]
    return det % p


def _charpoly(matrix, p):
    """det(M - x I) as ascending coefficients, by interpolation."""
    s = len(matrix)
    xs = list(range(s + 1))
    ys = []
    for x in xs:
        shifted = [
            [(matrix[i][j] - (x if i == j else 0)) % p for j in range(s)]
            for i in range(s)
        ]
        ys.append(_det_mod(shifted, p))
    # Lagrange interpolation over F_p
    poly = [0] * (s + 1)
    for t, y in zip(xs, ys):
        if not y:
            continue
        basis = [1]
        denom = 1
        for u in xs:
            if u == t:
                continue
            denom = (denom * (t - u)) % p
            new = [0] * (len(basis) + 1)
            for i, c in enumerate(basis):
                new[i] = (new[i] - u * c) % p
                new[i + 1] = (new[i + 1] + c) % p
            basis = new
        scale = (y * pow(denom, p - 2, p)) % p
        for i, c in enumerate(basis):
            poly[i] = (poly[i] + scale * c) % p
    return poly


def _poly_roots_mod(coeffs, p):
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _primitive_root(p):
    if p == 2:
        return 1
    factors = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise AssertionError("no primitive root found")


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p ≡ 1 (mod exponent) with p > 2*order."""
    p = 2 * order + 1
    rem = (p - 1) % exponent
    if rem:
        p += exponent - rem
    while not _is_prime_(p):
        p += exponent
    return p


def _is_prime_(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- the character table --------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    """Exact irreducible characters of an enumerated matrix group.

    rows[chi][k] is the CyclotomicValue of character chi on class k of
    group.conjugacy(); degrees[chi] = rows[chi][identity class].
    """

    group: MatrixGroup
    conjugacy: ConjugacyData
    cyclotomic_order: int
    modular_prime: int
    degrees: tuple[int, ...]
    rows: tuple[tuple[CyclotomicValue, ...], ...]

    @property
    def num_classes(self) -> int:
        return len(self.conjugacy.classes)

    def to_json_document(self) -> dict:
        reps = []
        for k, rep in enumerate(self.conjugacy.representatives):
            a, b, c, d = self.group.elements[rep]
            reps.append(
                {
                    "representative": [[a, b], [c, d]],
                    "size": self.conjugacy.sizes[k],
                    "order": self.group.element_order(rep),
                }
            )
        return {
            "group": {
                "family": self.group.family,
                "q": self.group.field.p,
                "order": self.group.order,
            },
            "cyclotomic_order": self.cyclotomic_order,
            "classes": reps,
            "degrees": list(self.degrees),
            "rows": [[list(v.coords) for v in row] for row in self.rows],
            "version": TABLE_DOCUMENT_VERSION,
        }


def character_table(group: MatrixGroup) -> CharacterTable:
    """Compute the exact character table by the Burnside-Dixon method."""
    data = group.conjugacy()
    r = len(data.classes)
    sizes = data.sizes
    e = group.exponent()
    p = dixon_prime(group.order, e)
    ident = data.identity_class

    matrices = [
        [[data.a_ijk[i][j][k] % p for k in range(r)] for j in range(r)]
        for i in range(r)
    ]

    # deterministic refinement into common eigenspaces
    spaces = [[_unit_column(r, k) for k in range(r)]]
    for i in range(r):
        if i == ident:
            continue
        if all(len(s) == 1 for s in spaces):
            break
        mat = matrices[i]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            image = [_apply(mat, col, p) for col in basis]
            c_small = _solve_in_basis(basis, image, p)
            roots = _poly_roots_mod(_charpoly(c_small, p), p)
            total = 0
            for lam in roots:
                shifted = [
                    [(c_small[u][v] - (lam if u == v else 0)) % p for v in range(len(basis))]
                    for u in range(len(basis))
                ]
                eigenspace = [
                    _combine(basis, vec, p) for vec in _kernel_basis(shifted, p)
                ]
                total += len(eigenspace)
                new_spaces.append(eigenspace)
            assert total == len(basis), "class algebra failed to split"
        spaces = new_spaces
    assert all(len(s) == 1 for s in spaces) and len(spaces) == r

    omegas = []
    for basis in spaces:
        v = basis[0]
        if v[ident] == 0:
            raise LiftFailure("eigenvector vanishes at the identity class")
        scale = pow(v[ident], p - 2, p)
        omegas.append([(x * scale) % p for x in v])

    inv_class = data.inverse_class
    size_inv = [pow(s, p - 2, p) for s in sizes]
    degrees = []
    for om in omegas:
        s_chi = sum(om[k] * om[inv_class[k]] * size_inv[k] for k in range(r)) % p
        chi1_sq = (group.order * pow(s_chi, p - 2, p)) % p
        d = isqrt(chi1_sq)
        if d * d != chi1_sq:
            raise LiftFailure(f"degree^2 = {chi1_sq} is not a perfect square")
        degrees.append(d)
    if sum(d * d for d in degrees) != group.order:
        raise LiftFailure("degree squares do not sum to the group order")

    chi_mod = [
        [(om[k] * d * size_inv[k]) % p for k in range(r)]
        for om, d in zip(omegas, degrees)
    ]

    rep_orders = [group.element_order(rep) for rep in data.representatives]
    power_class = []
    mul = group.mul
    for k, rep in enumerate(data.representatives):
        row = []
        x = group.identity
        for _ in range(rep_orders[k]):
            row.append(data.class_of[x])
            x = mul[x][rep]
        power_class.append(row)

    w = pow(_primitive_root(p), (p - 1) // e, p)
    rows = []
    for chi, d in enumerate(degrees):
        row = []
        for k in range(r):
            o = rep_orders[k]
            z = pow(w, e // o, p)
            zinv = pow(z, p - 2, p)
            o_inv = pow(o, p - 2, p)
            mults = []
            for j in range(o):
                zj = pow(zinv, j, p)
                acc = 0
                zjs = 1
                for s in range(o):
                    acc += chi_mod[chi][power_class[k][s]] * zjs
                    zjs = (zjs * zj) % p
                m = (acc * o_inv) % p
                if m > d:
                    raise LiftFailure(
                        f"multiplicity {m} exceeds degree {d} on class {k}"
                    )
                mults.append(m)
            if sum(mults) != d:
                raise LiftFailure(f"multiplicities sum to {sum(mults)}, degree {d}")
            row.append(CyclotomicValue.from_root_multiplicities(e, e // o, mults))
        rows.append(row)

    order = sorted(range(r), key=lambda i: (degrees[i], _row_key(rows[i])))
    degrees = tuple(degrees[i] for i in order)
    rows = tuple(tuple(rows[i]) for i in order)

    table = CharacterTable(group, data, e, p, degrees, rows)
    verify_orthogonality(table)
    return table


def _row_key(row):
    return tuple(v.coords for v in row)


def _unit_column(r, k):
    col = [0] * r
    col[k] = 1
    return col


def _apply(matrix, col, p):
    return [sum(matrix[j][k] * col[k] for k in range(len(col))) % p for j in range(len(matrix))]


def _combine(basis, coeffs, p):
    r = len(basis[0])
    out = [0] * r
    for u, c in enumerate(coeffs):
        if c:
            bu = basis[u]
            for i in range(r):
                out[i] = (out[i] + c * bu[i]) % p
    return out


def verify_orthogonality(table: CharacterTable):
    """Both orthogonality relations, exactly in Z[zeta]."""
    sizes = table.conjugacy.sizes
    order = table.group.order
    r = table.num_classes
    e = table.cyclotomic_order
    conj_rows = [[v.conjugate() for v in row] for row in table.rows]
    for a in range(r):
        for b in range(a, r):
            total = CyclotomicValue.integer(e, 0)
            for k in range(r):
                total = total + sizes[k] * (table.rows[a][k] * conj_rows[b][k])
            want = order if a == b else 0
            if not (total - want).is_zero():
                raise LiftFailure(f"row orthogonality fails for characters {a}, {b}")
    for k in range(r):
        for l in range(k, r):
            total = CyclotomicValue.integer(e, 0)
            for a in range(r):
                total = total + table.rows[a][k] * conj_rows[a][l]
            total = total * sizes[k]
            want = order if k == l else 0
            if not (total - want).is_zero():
                raise LiftFailure(f"column orthogonality fails for classes {k}, {l}")


# -- Frobenius-type counting sums -------------------------------------------------


@dataclass(frozen=True)
class FrobeniusCounts:
    """Character-sum counts for products of g commutators hitting xi.

    tuple_prediction = |G|^(2g-1) * sum_chi chi(xi)/chi(1)^(2g-1), the
    classical Frobenius solution count; point_count = tuple_prediction / |G|,
    the character-formula value (an exact rational).
    """

    tuple_prediction: int
    point_count: Fraction


def frobenius_sums(table: CharacterTable, g: int, xi: int) -> FrobeniusCounts:
    """Evaluate the counting sums at a central element xi (an element index)."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    data = table.conjugacy
    k = data.class_of[xi]
    if data.sizes[k] != 1:
        raise ValueError("xi must be central (singleton conjugacy class)")
    e = table.cyclotomic_order
    big_l = lcm(*table.degrees)
    denom = big_l ** (2 * g - 1)
    total = CyclotomicValue.integer(e, 0)
    for row, d in zip(table.rows, table.degrees):
        total = total + ((big_l // d) ** (2 * g - 1)) * row[k]
    if not total.is_rational_integer():
        raise NonIntegralCount("character sum is not a rational integer")
    order = table.group.order
    tuples = Fraction(order ** (2 * g - 1) * total.as_int(), denom)
    if tuples.denominator != 1 or tuples < 0:
        raise NonIntegralCount(
            f"tuple prediction {tuples} is not a non-negative integer"
        )
    tuples_int = int(tuples)
    return FrobeniusCounts(tuples_int, Fraction(tuples_int, order))
