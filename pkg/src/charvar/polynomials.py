"""Exact sparse Laurent-polynomial arithmetic over the rationals.

A polynomial is a dictionary mapping exponent tuples (one signed integer per
variable of a fixed variable context) to nonzero rational coefficients:

    SparsePoly.terms : dict[tuple[int, ...], int | Fraction]

Coefficients are exact; integer-valued coefficients are stored as int (a fast
path — Python's numeric tower makes int and Fraction interoperable), anything
else as Fraction.  The zero polynomial has an empty term dict.  Negative
exponents are allowed everywhere (Laurent support is required by the hook
normalizations).

On top of the polynomials sits FactoredFraction: a numerator polynomial
divided by a multiset of normalized two-term factors ("binomials" such as
1 - q^3*t^4).  Every denominator produced by the generating functions in this
package is a product of such factors, so exact division by binomials replaces
general multivariate gcd computation.  Division by a binomial runs in linear
time by cumulative sums along "ladders" (monomials congruent modulo the
binomial's exponent direction).

The monomial order used for canonical output, leading terms, and division is
graded lexicographic, ascending, with the variable order of the context.
All values are immutable after construction; every operation is a pure
function, safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    ContextError,
    NegativeExponentAtZero,
    NotDivisible,
    NotPolynomial,
)


def _as_coeff(c):
    """Normalize a rational to int when integral (fast-path invariant)."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _gl_key(exps):
    """Graded-lexicographic sort key."""
    return (sum(exps), exps)


@dataclass(frozen=True)
class Flavor:
    """Variable context plus the sign twist its Adams operations carry.

    ``twisted`` lists the variables v substituted as v -> -(-v)^r; the others
    substitute plainly as v -> v^r.
    """

    name: str
    variables: tuple[str, ...]
    twisted: tuple[str, ...]


FLAVOR_E = Flavor("E", ("q",), ())
FLAVOR_QT = Flavor("qt", ("q", "t"), ("t",))
FLAVOR_XY = Flavor("xy", ("q", "x", "y"), ("x", "y"))
FLAVOR_PURE = Flavor("pure", ("t",), ())

FLAVORS = {f.name: f for f in (FLAVOR_E, FLAVOR_QT, FLAVOR_XY, FLAVOR_PURE)}


class SparsePoly:
    """Immutable sparse Laurent polynomial in a fixed variable context."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        object.__setattr__(self, "vars", tuple(variables))
        clean = {}
        if terms:
            nvars = len(self.vars)
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ContextError(
                        f"exponent tuple {exps} does not match context {self.vars}"
                    )
                c = _as_coeff(c)
                if c:
                    clean[tuple(exps)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    @classmethod
    def _raw(cls, variables, terms):
        """Internal constructor for already-clean term dicts."""
        self = object.__new__(cls)
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        c = _as_coeff(c)
        if not c:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables):
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables, name, power=1):
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls._raw(variables, {tuple(exps): 1})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        variables = tuple(variables)
        c = _as_coeff(c)
        if not c:
            return cls._raw(variables, {})
        return cls._raw(variables, {tuple(exps): c})

    # -- queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * len(self.vars): 1}

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self):
        """Terms in ascending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _gl_key(t[0]))

    def leading(self):
        """(exponents, coefficient) of the graded-lex largest monomial."""
        exps = max(self.terms, key=_gl_key)
        return exps, self.terms[exps]

    def degree_in(self, name):
        """Largest exponent of one variable (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def min_exponent_in(self, name):
        if not self.terms:
            return 0
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def min_exponents(self):
        """Componentwise minimum exponent vector over the support."""
        its = iter(self.terms)
        lo = list(next(its))
        for e in its:
            for i, v in enumerate(e):
                if v < lo[i]:
                    lo[i] = v
        return tuple(lo)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    # -- arithmetic -------------------------------------------------------

    def _check_context(self, other):
        if self.vars != other.vars:
            raise ContextError(f"context mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.vars, other)
        self._check_context(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _as_coeff(v)
            elif e in out:
                del out[e]
        return SparsePoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_context(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return SparsePoly.zero(self.vars)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = get(e, 0) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        for e, c in out.items():
            if type(c) is Fraction and c.denominator == 1:
                out[e] = c.numerator
        return SparsePoly._raw(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = _as_coeff(c)
        if not c:
            return SparsePoly.zero(self.vars)
        if c == 1:
            return self
        return SparsePoly._raw(
            self.vars, {e: _as_coeff(v * c) for e, v in self.terms.items()}
        )

    def shift(self, exps):
        """Multiply by the (Laurent) monomial with the given exponents."""
        exps = tuple(exps)
        if not any(exps):
            return self
        return SparsePoly._raw(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power wants a non-negative integer")
        if n == 0:
            return SparsePoly.one(self.vars)
        if len(self.terms) == 1:
            ((e, c),) = self.terms.items()
            return SparsePoly.monomial(self.vars, tuple(v * n for v in e), c**n)
        if len(self.terms) == 2:
            return self._binomial_power(n)
        result = SparsePoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _binomial_power(self, n):
        (ea, ca), (eb, cb) = self.terms.items()
        out = {}
        coef = 1
        for k in range(n + 1):
            e = tuple(x * (n - k) + y * k for x, y in zip(ea, eb))
            out[e] = coef * ca ** (n - k) * cb**k
            coef = coef * (n - k) // (k + 1)
        return SparsePoly(self.vars, out)

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, point):
        """Exact value at a point given as {variable: rational}."""
        total = Fraction(0)
        vals = [Fraction(point[v]) for v in self.vars]
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(vals, e):
                if k:
                    term *= x**k
            total += term
        return _as_coeff(total)

    def specialize(self, assignment):
        """Substitute some variables by rational values or other variables.

        ``assignment`` maps a subset of the context's variables either to an
        exact rational value or to a variable name (which may be an existing
        variable, a shared new one, or several sources may fuse into one).
        Returns a SparsePoly in the remaining context, or a plain rational if
        no variables remain.
        """
        for v in assignment:
            if v not in self.vars:
                raise ContextError(f"cannot specialize unknown variable {v!r}")
        kept = [v for v in self.vars if v not in assignment]
        new_vars = list(kept)
        for v in self.vars:
            if v in assignment:
                t = assignment[v]
                if isinstance(t, str) and t not in new_vars:
                    new_vars.append(t)
        out = {}
        for e, c in self.terms.items():
            coeff = c
            new_e = [0] * len(new_vars)
            for v, k in zip(self.vars, e):
                if v in assignment:
                    t = assignment[v]
                    if isinstance(t, str):
                        new_e[new_vars.index(t)] += k
                    else:
                        if k == 0:
                            continue
                        t = Fraction(t)
                        if not t:
                            if k < 0:
                                raise NegativeExponentAtZero(
                                    f"{v}^{k} evaluated at {v} = 0"
                                )
                            coeff = 0
                            break
                        coeff = coeff * t**k
                else:
                    new_e[new_vars.index(v)] = k
            if not coeff:
                continue
            key = tuple(new_e)
            v2 = out.get(key, 0) + coeff
            if v2:
                out[key] = _as_coeff(v2)
            elif key in out:
                del out[key]
        if not new_vars:
            return out.get((), 0)
        return SparsePoly._raw(tuple(new_vars), out)

    def has_negative_exponents(self):
        return any(any(k < 0 for k in e) for e in self.terms)

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def __repr__(self):
        return f"SparsePoly({'*'.join(self.vars) or '-'}: {poly_text(self)})"


def poly_text(p: SparsePoly) -> str:
    """Canonical text rendering: ascending graded-lex, ASCII exponents.

    Examples: "1 - 4*q^2 + 6*q^4", "1 + t^4 + t^8", "0".
    """
    if p.is_zero():
        return "0"
    chunks = []
    for e, c in p.sorted_terms():
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k != 0
        )
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


def adams_poly(p: SparsePoly, r: int, flavor: Flavor) -> SparsePoly:
    """Adams substitution on a bare polynomial.

    Plain variables map as v -> v^r, twisted ones as v -> -(-v)^r, which on a
    monomial multiplies the coefficient by (-1)^((r+1) * exponent) per twisted
    variable.  r = 1 is the identity.
    """
    if r < 1:
        raise ValueError("Adams operations want r >= 1")
    if p.vars != flavor.variables:
        raise ContextError(f"flavor {flavor.name} does not match context {p.vars}")
    if r == 1:
        return p
    twisted = [i for i, v in enumerate(p.vars) if v in flavor.twisted]
    sign_active = r % 2 == 0 and twisted
    out = {}
    for e, c in p.terms.items():
        if sign_active and sum(e[i] for i in twisted) % 2:
            c = -c
        out[tuple(k * r for k in e)] = c
    return SparsePoly._raw(p.vars, out)


# -- exact division ---------------------------------------------------------


def divide_exact(num: SparsePoly, div: SparsePoly) -> SparsePoly:
    """Exact quotient num / div, raising NotDivisible when none exists."""
    num._check_context(div)
    if div.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return num
    q = _try_divide(num, div)
    if q is None:
        raise NotDivisible(f"({poly_text(div)}) does not divide ({poly_text(num)})")
    return q


def _try_divide(num: SparsePoly, div: SparsePoly):
    """Exact quotient as SparsePoly, or None.  Handles Laurent inputs."""
    if num.is_zero():
        return num
    nd = len(div.terms)
    if nd == 1:
        ((e, c),) = div.terms.items()
        inv = Fraction(1, c) if c != 1 else 1
        return num.shift(tuple(-k for k in e)).scale(inv)
    # strip monomial content so graded-lex is a well-order on what remains
    shift_div = div.min_exponents()
    shift_num = num.min_exponents()
    dterms = {tuple(a - b for a, b in zip(e, shift_div)): c for e, c in div.terms.items()}
    nterms = {tuple(a - b for a, b in zip(e, shift_num)): c for e, c in num.terms.items()}
    if nd == 2:
        out = _divide_two_term(nterms, dterms, len(num.vars))
    else:
        out = _divide_general(nterms, dterms)
    if out is None:
        return None
    back = tuple(a - b for a, b in zip(shift_num, shift_div))
    return SparsePoly._raw(num.vars, out).shift(back)


def _divide_two_term(nterms, dterms, nvars):
    """Quotient of a term dict by a two-term divisor, by ladder recursion.

    Writing the divisor as c0*x^e0 + c1*x^e1 (e0 graded-lex below e1) and
    grouping numerator monomials into ladders x^(base + k*d), d = e1 - e0,
    the quotient coefficients satisfy G_k = (F_k - c1*G_{k-1}) / c0 upward
    along each ladder, and divisibility is equivalent to the recursion
    closing with G = 0 at the top of every ladder.
    """
    (e0, c0), (e1, c1) = sorted(dterms.items(), key=lambda t: _gl_key(t[0]))
    d = tuple(b - a for a, b in zip(e0, e1))
    j = next(i for i, v in enumerate(d) if v)
    dj = d[j]
    ladders = {}
    for e, c in nterms.items():
        pos = tuple(a - b for a, b in zip(e, e0))
        k = pos[j] // dj
        base = tuple(a - k * b for a, b in zip(pos, d))
        ladders.setdefault(base, []).append((k, c))
    out = {}
    c0_inv = None if c0 == 1 else Fraction(1, c0)
    for base, entries in ladders.items():
        entries.sort(key=lambda t: t[0])
        k_lo, k_hi = entries[0][0], entries[-1][0]
        idx = 0
        g = 0
        for k in range(k_lo, k_hi + 1):
            if idx < len(entries) and entries[idx][0] == k:
                f_k = entries[idx][1]
                idx += 1
            else:
                f_k = 0
            g = f_k - c1 * g if g else f_k
            if c0_inv is not None and g:
                g = _as_coeff(g * c0_inv)
            if k == k_hi:
                if g:
                    return None
            elif g:
                out[tuple(b + k * v for b, v in zip(base, d))] = _as_coeff(g)
    return out


def _divide_general(nterms, dterms):
    """Long division by an arbitrary divisor (non-negative exponents only)."""
    rem = dict(nterms)
    lead_e, lead_c = max(dterms.items(), key=lambda t: _gl_key(t[0]))
    out = {}
    while rem:
        e, c = max(rem.items(), key=lambda t: _gl_key(t[0]))
        qe = tuple(a - b for a, b in zip(e, lead_e))
        if any(k < 0 for k in qe):
            return None
        qc = _as_coeff(Fraction(c, lead_c)) if lead_c != 1 else c
        out[qe] = qc
        for de, dc in dterms.items():
            key = tuple(a + b for a, b in zip(qe, de))
            v = rem.get(key, 0) - qc * dc
            if v:
                rem[key] = _as_coeff(v)
            elif key in rem:
                del rem[key]
    return out


# -- normalized binomial factors ---------------------------------------------


@dataclass(frozen=True)
class BinomialFactor:
    """A canonical two-term denominator factor.

    Invariants: integer coefficients with gcd 1; componentwise minimum of the
    two exponent vectors is the zero vector (monomial content stripped); the
    graded-lex smaller term has positive coefficient; not a unit monomial.
    """

    variables: tuple[str, ...]
    low: tuple[int, ...]
    low_coeff: int
    high: tuple[int, ...]
    high_coeff: int

    def as_poly(self) -> SparsePoly:
        return SparsePoly._raw(
            self.variables, {self.low: self.low_coeff, self.high: self.high_coeff}
        )

    def sort_key(self):
        return (_gl_key(self.high), self.high_coeff, _gl_key(self.low), self.low_coeff)

    def evaluate(self, point):
        return self.as_poly().evaluate(point)

    def __repr__(self):
        return f"BinomialFactor({poly_text(self.as_poly())})"


def normalize_factor(p: SparsePoly):
    """Split a nonzero polynomial as scale * monomial * BinomialFactor.

    Returns (factor, shift_exponents, scale) with
    p == factor.as_poly().shift(shift_exponents).scale(scale).
    Raises ValueError when p is zero, a unit monomial, or has more than two
    terms (general denominators never arise here).
    """
    if p.is_zero():
        raise ValueError("zero polynomial cannot be a denominator factor")
    shift = p.min_exponents()
    terms = {tuple(a - b for a, b in zip(e, shift)): c for e, c in p.terms.items()}
    if len(terms) == 1:
        raise ValueError(f"unit monomial factor {poly_text(p)}")
    if len(terms) > 2:
        raise ValueError(f"factor {poly_text(p)} is not a binomial")
    denom_lcm = 1
    for c in terms.values():
        if type(c) is Fraction:
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = {e: int(c * denom_lcm) for e, c in terms.items()}
    g = gcd(*ints.values())
    (e0, c0), (e1, c1) = sorted(ints.items(), key=lambda t: _gl_key(t[0]))
    c0 //= g
    c1 //= g
    scale = Fraction(g, denom_lcm)
    if c0 < 0:
        c0, c1, scale = -c0, -c1, -scale
    factor = BinomialFactor(p.vars, e0, c0, e1, c1)
    return factor, shift, _as_coeff(scale)


# -- fractions with factored binomial denominators ----------------------------


class FactoredFraction:
    """numerator / product of binomial factors, with opportunistic cancellation.

    The denominator is a multiset {BinomialFactor: multiplicity}.  After
    construction no denominator factor exactly divides the numerator; the
    canonical zero has a zero numerator and an empty denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: SparsePoly, den=None, *, cancel=True):
        if den is None:
            den = {}
        if num.is_zero():
            den = {}
        elif cancel and den:
            num, den = _cancel(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", dict(den))

    def __setattr__(self, name, value):
        raise AttributeError("FactoredFraction is immutable")

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def from_poly(cls, p: SparsePoly):
        return cls(p, {}, cancel=False)

    @classmethod
    def one(cls, variables):
        return cls(SparsePoly.one(variables), {}, cancel=False)

    @classmethod
    def zero(cls, variables):
        return cls(SparsePoly.zero(variables), {}, cancel=False)

    def is_zero(self):
        return self.num.is_zero()

    def denominator_factors(self):
        """Denominator as a sorted ((factor, multiplicity), ...) tuple."""
        return tuple(
            sorted(self.den.items(), key=lambda fm: fm[0].sort_key())
        )

    def denominator_poly(self) -> SparsePoly:
        out = SparsePoly.one(self.vars)
        for f, m in self.denominator_factors():
            fp = f.as_poly()
            for _ in range(m):
                out = out * fp
        return out

    def _check_context(self, other):
        if self.vars != other.vars:
            raise ContextError(f"context mismatch: {self.vars} vs {other.vars}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FactoredFraction.from_poly(SparsePoly.constant(self.vars, other))
        self._check_context(other)
        return frac_sum([self, other], self.vars)

    __radd__ = __add__

    def __neg__(self):
        return FactoredFraction(-self.num, self.den, cancel=False)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FactoredFraction.from_poly(SparsePoly.constant(self.vars, other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SparsePoly):
            return FactoredFraction(self.num * other, self.den)
        self._check_context(other)
        den = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return FactoredFraction(self.num * other.num, den)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return FactoredFraction.zero(self.vars)
        return FactoredFraction(self.num.scale(c), self.den, cancel=False)

    def shift(self, exps):
        return FactoredFraction(self.num.shift(exps), self.den, cancel=False)

    def divided_by_poly(self, p: SparsePoly, power: int = 1):
        """Divide by p^power where p normalizes to a binomial factor."""
        if power == 0:
            return self
        if power < 0:
            raise ValueError("negative powers not supported here")
        factor, shift, scale = normalize_factor(p)
        den = dict(self.den)
        den[factor] = den.get(factor, 0) + power
        num = self.num.shift(tuple(-power * k for k in shift))
        if scale != 1:
            num = num.scale(Fraction(1, 1) / scale**power)
        return FactoredFraction(num, den)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("fraction power wants a non-negative integer")
        out = FactoredFraction.one(self.vars)
        for _ in range(n):
            out = out * self
        return out

    def equals(self, other) -> bool:
        """Value equality (cross-multiplied over a common denominator)."""
        if isinstance(other, (int, Fraction)):
            other = FactoredFraction.from_poly(SparsePoly.constant(self.vars, other))
        elif isinstance(other, SparsePoly):
            other = FactoredFraction.from_poly(other)
        self._check_context(other)
        common = _common_denominator([self, other])
        return _lift_numerator(self, common) == _lift_numerator(other, common)

    def __eq__(self, other):
        if isinstance(other, (FactoredFraction, SparsePoly, int, Fraction)):
            return self.equals(other)
        return NotImplemented

    def __hash__(self):
        raise TypeError("FactoredFraction is not hashable")

    # -- conversions ------------------------------------------------------

    def as_polynomial(self) -> SparsePoly:
        """Divide out the whole denominator, or raise NotPolynomial."""
        num = self.num
        for f, m in self.denominator_factors():
            fp = f.as_poly()
            for _ in range(m):
                q = _try_divide(num, fp)
                if q is None:
                    raise NotPolynomial(
                        f"denominator factor ({poly_text(fp)}) does not divide "
                        f"the numerator",
                        factor=fp,
                    )
                num = q
        return num

    def specialize(self, assignment):
        """Specialize variables; denominator factors must stay nonzero."""
        num = self.num.specialize(assignment)
        if not isinstance(num, SparsePoly):
            num = SparsePoly.constant((), num) if num else SparsePoly.zero(())
        out = FactoredFraction(num, {}, cancel=False)
        for f, m in self.denominator_factors():
            fp = f.as_poly().specialize(assignment)
            if not isinstance(fp, SparsePoly):
                if fp == 0:
                    raise ZeroDivisionError(
                        f"denominator factor {f!r} vanishes under {assignment}"
                    )
                out = out.scale(Fraction(1, 1) / Fraction(fp) ** m)
            elif fp.is_zero():
                raise ZeroDivisionError(
                    f"denominator factor {f!r} vanishes under {assignment}"
                )
            elif len(fp.terms) == 1:
                ((e, c),) = fp.terms.items()
                out = out.shift(tuple(-m * k for k in e))
                if c != 1:
                    out = out.scale(Fraction(1, 1) / Fraction(c) ** m)
            else:
                out = out.divided_by_poly(fp, m)
        return out

    def evaluate(self, point):
        val = Fraction(self.num.evaluate(point))
        for f, m in self.den.items():
            d = Fraction(f.evaluate(point))
            if not d:
                raise ZeroDivisionError(f"denominator {f!r} vanishes at {point}")
            val /= d**m
        return _as_coeff(val)

    def __repr__(self):
        den = " * ".join(
            f"({poly_text(f.as_poly())})" + (f"^{m}" if m > 1 else "")
            for f, m in self.denominator_factors()
        )
        if den:
            return f"FactoredFraction(({poly_text(self.num)}) / {den})"
        return f"FactoredFraction({poly_text(self.num)})"


def _cancel(num, den):
    """Divide out every denominator factor that exactly divides num."""
    out = {}
    for f, m in sorted(den.items(), key=lambda fm: fm[0].sort_key()):
        fp = None
        while m > 0:
            if fp is None:
                fp = f.as_poly()
            q = _try_divide(num, fp)
            if q is None:
                break
            num = q
            m -= 1
        if m:
            out[f] = m
    if num.is_zero():
        return num, {}
    return num, out


def _common_denominator(fracs):
    common = {}
    for fr in fracs:
        for f, m in fr.den.items():
            if common.get(f, 0) < m:
                common[f] = m
    return common


def _lift_numerator(fr, common):
    num = fr.num
    for f, m in sorted(common.items(), key=lambda fm: fm[0].sort_key()):
        extra = m - fr.den.get(f, 0)
        if extra and not num.is_zero():
            fp = f.as_poly()
            for _ in range(extra):
                num = num * fp
    return num


def frac_sum(fracs, variables=None) -> FactoredFraction:
    """Sum fractions over the multiset-maximum common denominator.

    Cancellation runs once on the final result, which keeps long summations
    (partition sums, series recursions) from re-cancelling at every step.
    """
    fracs = list(fracs)
    if not fracs:
        if variables is None:
            raise ValueError("empty sum needs an explicit variable context")
        return FactoredFraction.zero(variables)
    if len(fracs) == 1:
        return fracs[0]
    variables = fracs[0].vars
    for fr in fracs[1:]:
        if fr.vars != variables:
            raise ContextError(f"context mismatch: {variables} vs {fr.vars}")
    common = _common_denominator(fracs)
    total = SparsePoly.zero(variables)
    for fr in fracs:
        total = total + _lift_numerator(fr, common)
    return FactoredFraction(total, common)


def adams(fr: FactoredFraction, r: int, flavor: Flavor) -> FactoredFraction:
    """Adams substitution on a factored fraction (exact, denominator-safe).

    Substituted denominator factors are renormalized, with sign and monomial
    compensation absorbed into the numerator.
    """
    if r == 1:
        if fr.vars != flavor.variables:
            raise ContextError(f"flavor {flavor.name} does not match {fr.vars}")
        return fr
    num = adams_poly(fr.num, r, flavor)
    out = FactoredFraction(num, {}, cancel=False)
    den = {}
    for f, m in fr.den.items():
        fp = adams_poly(f.as_poly(), r, flavor)
        factor, shift, scale = normalize_factor(fp)
        den[factor] = den.get(factor, 0) + m
        if any(shift):
            out = out.shift(tuple(-m * k for k in shift))
        if scale != 1:
            out = out.scale(Fraction(1, 1) / Fraction(scale) ** m)
    merged = dict(out.den)
    for f, m in den.items():
        merged[f] = merged.get(f, 0) + m
    return FactoredFraction(out.num, merged)
