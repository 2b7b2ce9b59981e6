"""Small matrix groups over prime fields: enumeration and brute-force counts.

Groups are fully enumerated as tuples (a, b, c, d) for 2x2 matrices over F_p,
with a multiplication table built once on demand; everything downstream
(conjugacy classes, class-multiplication coefficients, commutator counts)
works with element indices into that table.  The sizes here are desk scale:
|GL(2,5)| = 480 is the stretch target and the default element bound is 500.

The brute-force side is organized as the |G|^2 commutator distribution
c(z) = #{(A,B) : A B A^-1 B^-1 = z} followed by class-algebra convolution, so
genus g counts of products of g commutators cost O(classes^3) per genus step
instead of |G|^(2g).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm

from .errors import CentralElementUnavailable, GroupTooLarge

DEFAULT_MAX_ORDER = 500
DESK_SCALE_Q = 7


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inverse(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)


def _mat_mul(a, b, p):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        (a0 * b0 + a1 * b2) % p,
        (a0 * b1 + a1 * b3) % p,
        (a2 * b0 + a3 * b2) % p,
        (a2 * b1 + a3 * b3) % p,
    )


def _mat_inv(m, p):
    a, b, c, d = m
    det = (a * d - b * c) % p
    di = pow(det, p - 2, p)
    return ((d * di) % p, (-b * di) % p, (-c * di) % p, (a * di) % p)


class MatrixGroup:
    """A fully enumerated finite matrix group with index-based tables."""

    def __init__(self, family: str, dim: int, field: PrimeField, elements):
        self.family = family
        self.dim = dim
        self.field = field
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.index = {m: i for i, m in enumerate(self.elements)}
        if len(self.index) != self.order:
            raise ValueError("duplicate elements")
        p = field.p
        ident = (1, 0, 0, 1)
        if ident not in self.index:
            raise ValueError("identity missing")
        self.identity = self.index[ident]
        self._mul = None
        self._inv = None
        self._conjugacy = None

    @property
    def mul(self):
        """Multiplication table mul[i][j] = index of elements[i] * elements[j]."""
        if self._mul is None:
            p = self.field.p
            idx = self.index
            elems = self.elements
            table = []
            for a in elems:
                row = [0] * self.order
                a0, a1, a2, a3 = a
                for j, b in enumerate(elems):
                    b0, b1, b2, b3 = b
                    key = (
                        (a0 * b0 + a1 * b2) % p,
                        (a0 * b1 + a1 * b3) % p,
                        (a2 * b0 + a3 * b2) % p,
                        (a2 * b1 + a3 * b3) % p,
                    )
                    row[j] = idx[key]
                table.append(row)
            self._mul = table
        return self._mul

    @property
    def inv(self):
        if self._inv is None:
            p = self.field.p
            self._inv = [self.index[_mat_inv(m, p)] for m in self.elements]
        return self._inv

    def element_order(self, i: int) -> int:
        mul = self.mul
        k = 1
        x = i
        while x != self.identity:
            x = mul[x][i]
            k += 1
        return k

    def exponent(self) -> int:
        data = self.conjugacy()
        return lcm(*(self.element_order(r) for r in data.representatives))

    def center(self):
        """Indices of central elements (the singleton conjugacy classes)."""
        data = self.conjugacy()
        return tuple(
            cls[0] for cls in data.classes if len(cls) == 1
        )

    def central_of_order(self, n: int) -> int:
        """Index of a central element of multiplicative order n."""
        for i in self.center():
            if self.element_order(i) == n:
                return i
        raise CentralElementUnavailable(
            f"central element of order {n} unavailable in {self.family}(2,{self.field.p})"
            f" (needs n | q-1 = {self.field.p - 1})"
        )

    def conjugacy(self) -> "ConjugacyData":
        if self._conjugacy is None:
            self._conjugacy = _conjugacy_classes(self)
        return self._conjugacy

    def __repr__(self):
        return f"MatrixGroup({self.family}, dim={self.dim}, q={self.field.p}, order={self.order})"


def build_group(family: str, dim: int = 2, q: int = 3, *, max_order: int = DEFAULT_MAX_ORDER) -> MatrixGroup:
    """Enumerate GL(2,q) or SL(2,q) for prime q at desk scale."""
    family = family.upper()
    if family not in ("GL", "SL"):
        raise ValueError(f"family must be GL or SL, got {family!r}")
    if dim != 2:
        raise ValueError("only 2x2 matrix groups are enumerated here")
    field = PrimeField(q)
    if q > DESK_SCALE_Q:
        raise GroupTooLarge(f"desk scale stops at q = {DESK_SCALE_Q}, got q = {q}")
    expected = (q * q - 1) * (q * q - q)
    if family == "SL":
        expected //= q - 1
    if expected > max_order:
        raise GroupTooLarge(
            f"|{family}(2,{q})| = {expected} exceeds the bound {max_order}"
        )
    want = 1 if family == "SL" else None
    elements = []
    for a, b, c, d in product(range(q), repeat=4):
        det = (a * d - b * c) % q
        if det == 0:
            continue
        if want is not None and det != want:
            continue
        elements.append((a, b, c, d))
    group = MatrixGroup(family, dim, field, elements)
    assert group.order == expected
    return group


def diagonal_group(q: int) -> MatrixGroup:
    """The abelian fixture: diagonal matrices in GL(2,q), order (q-1)^2."""
    field = PrimeField(q)
    elements = [(a, 0, 0, d) for a in range(1, q) for d in range(1, q)]
    return MatrixGroup("DIAG", 2, field, elements)


def matrix_group_from_elements(label: str, q: int, elements) -> MatrixGroup:
    """Wrap an explicit list of matrices (must be a subgroup) as a MatrixGroup."""
    field = PrimeField(q)
    group = MatrixGroup(label, 2, field, elements)
    for a in group.elements:
        for b in group.elements:
            if _mat_mul(a, b, q) not in group.index:
                raise ValueError(f"elements not closed under product: {a} * {b}")
    return group


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes, the element->class map, and the coefficients a_ijk.

    a_ijk = #{(x, y) in C_i x C_j : x*y = z_k} for the fixed representative
    z_k; the tensor is exact (counts divided by |C_k| verified integral).
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]
    a_ijk: tuple  # a_ijk[i][j][k]
    inverse_class: tuple[int, ...]
    identity_class: int


def _conjugacy_classes(group: MatrixGroup) -> ConjugacyData:
    mul = group.mul
    inv = group.inv
    n = group.order
    class_of = [-1] * n
    classes = []
    for i in range(n):
        if class_of[i] >= 0:
            continue
        orbit = set()
        for t in range(n):
            orbit.add(mul[mul[t][i]][inv[t]])
        k = len(classes)
        for x in orbit:
            class_of[x] = k
        classes.append(tuple(sorted(orbit)))
    r = len(classes)
    sizes = tuple(len(c) for c in classes)
    assert sum(sizes) == n
    counts = [[[0] * r for _ in range(r)] for _ in range(r)]
    for x in range(n):
        row = mul[x]
        cx = class_of[x]
        cnt_x = counts[cx]
        for y in range(n):
            cnt_x[class_of[y]][class_of[row[y]]] += 1
    a_ijk = []
    for i in range(r):
        plane = []
        for j in range(r):
            line = []
            for k in range(r):
                total = counts[i][j][k]
                q, rem = divmod(total, sizes[k])
                assert rem == 0, "class products not class-constant"
                line.append(q)
            plane.append(tuple(line))
        a_ijk.append(tuple(plane))
    reps = tuple(c[0] for c in classes)
    inverse_class = tuple(class_of[inv[rep]] for rep in reps)
    return ConjugacyData(
        classes=tuple(classes),
        class_of=tuple(class_of),
        representatives=reps,
        sizes=sizes,
        a_ijk=tuple(a_ijk),
        inverse_class=inverse_class,
        identity_class=class_of[group.identity],
    )


def conjugacy_classes(group: MatrixGroup) -> ConjugacyData:
    return group.conjugacy()


@dataclass(frozen=True)
class ClassFunction:
    """Integer class function given by one value per conjugacy class."""

    group: MatrixGroup
    values: tuple[int, ...]

    def at_element(self, i: int) -> int:
        return self.values[self.group.conjugacy().class_of[i]]


def commutator_distribution(group: MatrixGroup) -> ClassFunction:
    """c(z) = #{(A, B) in G^2 : [A, B] = z}, asserted constant on classes."""
    mul = group.mul
    inv = group.inv
    n = group.order
    counts = [0] * n
    for a in range(n):
        row_a = mul[a]
        ai = inv[a]
        for b in range(n):
            t = mul[row_a[b]][ai]
            counts[mul[t][inv[b]]] += 1
    data = group.conjugacy()
    values = []
    for cls in data.classes:
        v = counts[cls[0]]
        for x in cls[1:]:
            assert counts[x] == v, "commutator distribution not a class function"
        values.append(v)
    assert sum(v * s for v, s in zip(values, data.sizes)) == n * n
    return ClassFunction(group, tuple(values))


def convolve_class_functions(f: ClassFunction, h: ClassFunction) -> ClassFunction:
    """(f * h)(z) = sum over z1 z2 = z of f(z1) h(z2), via the a_ijk tensor."""
    if f.group is not h.group:
        raise ValueError("class functions over different groups")
    data = f.group.conjugacy()
    r = len(data.classes)
    a = data.a_ijk
    out = [0] * r
    for i in range(r):
        fi = f.values[i]
        if not fi:
            continue
        ai = a[i]
        for j in range(r):
            hj = h.values[j]
            if not hj:
                continue
            c = fi * hj
            line = ai[j]
            for k in range(r):
                if line[k]:
                    out[k] += c * line[k]
    return ClassFunction(f.group, tuple(out))


def tuple_count(group: MatrixGroup, g: int, xi: int) -> int:
    """#{(A_1,B_1,...,A_g,B_g) : [A_1,B_1]...[A_g,B_g] = xi} by convolution."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    c = commutator_distribution(group)
    acc = c
    for _ in range(g - 1):
        acc = convolve_class_functions(acc, c)
    return acc.at_element(xi)
