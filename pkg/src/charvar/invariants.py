"""Named invariants of the character varieties, their checks, and caching.

Four invariant kinds are computed from the rank layers of the generating
functions (see charvar.series):

  E    one-variable point-count polynomial E_n(q)
  Hqt  two-variable mixed Hodge polynomial H_n(q,t)
  Hxy  three-variable refinement H_n(q,x,y)
  PP   pure-part Poincare polynomial PP_n(t)

None of the implemented formulas depend on the coprime twisting degree, so no
degree label appears in any signature.  Each computed result carries a
CheckReport with the self-contained conjecture checks for its kind (degrees,
positivity, curious duality, Euler characteristic, ...); the cross-invariant
checks (specialization matches, closed-form matches, pure-part extraction)
are exposed as separate functions because they trigger further computations.

Results are memoized in-process and can additionally be cached on disk as
canonical JSON documents (one per (kind, n, g)); cache hits reproduce the
computed document byte for byte.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

from .errors import KindMismatch, UnsupportedGenus
from .polynomials import (
    FLAVOR_E,
    FLAVOR_PURE,
    FLAVOR_QT,
    FLAVOR_XY,
    FactoredFraction,
    SparsePoly,
    frac_sum,
    poly_text,
)
from .series import extract_layers, invariant_from_layer

DOCUMENT_VERSION = 1


class InvariantKind(Enum):
    E = "E"
    HQT = "Hqt"
    HXY = "Hxy"
    PP = "PP"

    @property
    def flavor(self):
        return _KIND_FLAVOR[self]


_KIND_FLAVOR = {
    InvariantKind.E: FLAVOR_E,
    InvariantKind.HQT: FLAVOR_QT,
    InvariantKind.HXY: FLAVOR_XY,
    InvariantKind.PP: FLAVOR_PURE,
}


def parse_kind(text) -> InvariantKind:
    if isinstance(text, InvariantKind):
        return text
    try:
        return {"e": InvariantKind.E, "hqt": InvariantKind.HQT,
                "hxy": InvariantKind.HXY, "pp": InvariantKind.PP}[text.lower()]
    except KeyError:
        raise KindMismatch(f"unknown invariant kind {text!r}") from None


@dataclass(frozen=True)
class CheckEntry:
    """One named check outcome; failures always carry a witness."""

    passed: bool
    witness: str | None = None
    detail: str = ""

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("failing check entries must carry a witness")


@dataclass
class CheckReport:
    entries: dict[str, CheckEntry] = field(default_factory=dict)

    def add(self, name: str, entry: CheckEntry):
        self.entries[name] = entry

    def merge(self, other: "CheckReport"):
        self.entries.update(other.entries)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries.values())

    def to_json(self) -> dict:
        return {
            name: {"passed": e.passed, "witness": e.witness, "detail": e.detail}
            for name, e in sorted(self.entries.items())
        }

    @classmethod
    def from_json(cls, data) -> "CheckReport":
        rep = cls()
        for name, e in data.items():
            rep.entries[name] = CheckEntry(e["passed"], e["witness"], e.get("detail", ""))
        return rep


@dataclass(frozen=True)
class InvariantResult:
    """A computed invariant plus its metadata and attached check report."""

    kind: InvariantKind
    n: int
    g: int
    polynomial: SparsePoly
    dimension: int  # 2N = (n^2-1)(2g-2); for PP the degree bound 2n(n-1)(g-1)
    checks: CheckReport


def moebius(n: int) -> int:
    """(-1)^k for squarefree n with k prime factors, 0 otherwise."""
    if n < 1:
        raise ValueError("moebius wants a positive integer")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def dimension_2n(kind: InvariantKind, n: int, g: int) -> int:
    if kind is InvariantKind.PP:
        return 2 * n * (n - 1) * (g - 1)
    return (n * n - 1) * (2 * g - 2)


# -- computation with memoization ---------------------------------------------

_memo_lock = threading.Lock()
_layer_memo: dict = {}
_result_memo: dict = {}


def _layers(flavor, g: int, nmax: int):
    key = (flavor.name, g)
    with _memo_lock:
        cached = _layer_memo.get(key)
        if cached is not None and cached[0] >= nmax:
            return cached[1][:nmax]
    layers = extract_layers(flavor, g, nmax)
    with _memo_lock:
        cached = _layer_memo.get(key)
        if cached is None or cached[0] < nmax:
            _layer_memo[key] = (nmax, layers)
    return layers


def clear_memo():
    """Drop the in-process memo (used by tests that time cold runs)."""
    with _memo_lock:
        _layer_memo.clear()
        _result_memo.clear()


def compute_invariant(kind, n: int, g: int, *, cache=None) -> InvariantResult:
    """Compute one invariant, with in-process memoization and optional disk cache.

    Polynomiality or integrality failures surface as NotPolynomial /
    NonIntegerCoefficient: those are conjecture-falsification diagnostics, not
    ordinary errors, and are never swallowed.
    """
    kind = parse_kind(kind)
    if n < 1 or g < 0:
        raise ValueError("need n >= 1 and g >= 0")
    key = (kind, n, g)
    with _memo_lock:
        hit = _result_memo.get(key)
    if hit is not None:
        if cache is not None and cache.load(kind, n, g) is None:
            cache.store(hit)
        return hit
    if cache is not None:
        stored = cache.load(kind, n, g)
        if stored is not None:
            with _memo_lock:
                _result_memo.setdefault(key, stored)
            return stored
    layer = _layers(kind.flavor, g, n)[n - 1]
    poly = invariant_from_layer(kind.flavor, n, g, layer)
    report = attached_checks(kind, n, g, poly)
    result = InvariantResult(kind, n, g, poly, dimension_2n(kind, n, g), report)
    with _memo_lock:
        _result_memo.setdefault(key, result)
    if cache is not None:
        cache.store(result)
    return result


# -- individual checks ---------------------------------------------------------


def palindrome_entry(poly: SparsePoly, two_n: int) -> CheckEntry:
    """q^{2N} * f(1/q) == f(q), coefficientwise."""
    for (a,), c in poly.terms.items():
        c2 = poly.coefficient((two_n - a,))
        if c2 != c:
            return CheckEntry(
                False,
                witness=f"coefficient {c} at q^{a} vs {c2} at q^{two_n - a}",
            )
    return CheckEntry(True, detail=f"palindromic about q^{two_n}/2")


def curious_duality_entry(poly: SparsePoly, big_n: int) -> CheckEntry:
    """Weight-shifted palindromicity of a two-variable polynomial.

    Pairs the coefficient of q^a t^b with that of q^{2N-a} t^{b+2(N-a)}:
    reflecting the q-exponent about N shifts the t-exponent by twice as much,
    which is the coefficient shadow of the hard-Lefschetz-type pairing.
    """
    for (a, b), c in poly.terms.items():
        dual = (2 * big_n - a, b + 2 * (big_n - a))
        c2 = poly.coefficient(dual)
        if c2 != c:
            return CheckEntry(
                False,
                witness=f"coefficient {c} at q^{a}*t^{b} vs {c2} at q^{dual[0]}*t^{dual[1]}",
            )
    return CheckEntry(True, detail=f"curious duality with N={big_n}")


def duality_entry(kind: InvariantKind, n: int, g: int, poly: SparsePoly) -> CheckEntry:
    if kind is InvariantKind.E:
        return palindrome_entry(poly, (n * n - 1) * (2 * g - 2))
    if kind is InvariantKind.HQT:
        return curious_duality_entry(poly, (n * n - 1) * (g - 1))
    raise KindMismatch(f"duality check undefined for kind {kind.value}")


def degrees_entry(kind: InvariantKind, n: int, g: int, poly: SparsePoly) -> CheckEntry:
    two_n = (n * n - 1) * (2 * g - 2)
    if poly.is_zero():
        return CheckEntry(True, detail="zero polynomial (degenerate genus)")
    if kind is InvariantKind.E:
        deg = poly.degree_in("q")
        top = poly.coefficient((two_n,))
        if deg != two_n or top != 1:
            return CheckEntry(
                False, witness=f"q-degree {deg}, coefficient {top} at q^{two_n}"
            )
        return CheckEntry(True, detail=f"degree {two_n}, monic top")
    if kind is InvariantKind.HQT:
        dq, dt = poly.degree_in("q"), poly.degree_in("t")
        top = poly.coefficient((two_n, two_n))
        if dq != two_n or dt != two_n or top != 1:
            return CheckEntry(
                False,
                witness=f"q-degree {dq}, t-degree {dt}, coefficient {top} at (qt)^{two_n}",
            )
        return CheckEntry(True, detail=f"q- and t-degree {two_n}, (qt)^{two_n} monic")
    raise KindMismatch(f"degrees check undefined for kind {kind.value}")


def positivity_entry(poly: SparsePoly) -> CheckEntry:
    for e, c in poly.sorted_terms():
        if c < 0:
            mono = poly_text(SparsePoly.monomial(poly.vars, e, 1))
            return CheckEntry(False, witness=f"coefficient {c} at {mono}")
    return CheckEntry(True, detail="all coefficients non-negative")


def euler_entry(n: int, g: int, poly: SparsePoly) -> CheckEntry:
    """E_n(1) == moebius(n) * n^(2g-3); meaningful for g >= 2."""
    value = poly.specialize({"q": 1})
    expected = moebius(n) * n ** (2 * g - 3)
    if value != expected:
        return CheckEntry(False, witness=f"E_{n}(1) = {value}, expected {expected}")
    return CheckEntry(True, detail=f"E_{n}(1) = {expected} = mu({n})*{n}^{2 * g - 3}")


def xy_symmetry_entry(poly: SparsePoly) -> CheckEntry:
    """H_n(1,x,y) is symmetric under swapping x and y."""
    at_q1 = poly.specialize({"q": 1})
    for (a, b), c in at_q1.terms.items():
        c2 = at_q1.coefficient((b, a))
        if c2 != c:
            return CheckEntry(
                False, witness=f"coefficient {c} at x^{a}*y^{b} vs {c2} at x^{b}*y^{a}"
            )
    return CheckEntry(True, detail="x<->y symmetric at q=1")


def pp_properties_entry(n: int, g: int, poly: SparsePoly) -> CheckEntry:
    """PP_n is a polynomial of degree 2n(n-1)(g-1), monic there, non-negative."""
    neg = positivity_entry(poly)
    if not neg.passed:
        return neg
    if poly.is_zero():
        return CheckEntry(True, detail="zero polynomial (degenerate genus)")
    deg = poly.degree_in("t")
    expected = 2 * n * (n - 1) * (g - 1)
    top = poly.coefficient((expected,))
    if deg != expected or top != 1:
        return CheckEntry(
            False, witness=f"t-degree {deg}, coefficient {top} at t^{expected}"
        )
    return CheckEntry(True, detail=f"degree {expected}, leading coefficient 1")


def attached_checks(kind: InvariantKind, n: int, g: int, poly: SparsePoly) -> CheckReport:
    """The self-contained checks recorded on every computed result."""
    report = CheckReport()
    if kind is InvariantKind.E:
        report.add("degrees", degrees_entry(kind, n, g, poly))
        report.add("duality", duality_entry(kind, n, g, poly))
        if g >= 2:
            report.add("euler", euler_entry(n, g, poly))
    elif kind is InvariantKind.HQT:
        report.add("degrees", degrees_entry(kind, n, g, poly))
        report.add("duality", duality_entry(kind, n, g, poly))
        report.add("positivity", positivity_entry(poly))
    elif kind is InvariantKind.HXY:
        report.add("positivity", positivity_entry(poly))
        report.add("xy_symmetry_at_q1", xy_symmetry_entry(poly))
    elif kind is InvariantKind.PP:
        report.add("pp_properties", pp_properties_entry(n, g, poly))
    return report


# -- specializations ------------------------------------------------------------


def specialize_invariant(result: InvariantResult, target: str) -> SparsePoly:
    """Named specializations between the invariant kinds.

    poincare (Hqt, q->1), to_E (Hqt, t->-1), pure_extract (Hqt, keep the
    monomials q^i t^{2i} as t^{2i}), xy_to_qt (Hxy, x,y->t), ygenus
    (Hxy, q->1 then x->-1, leaving a polynomial in y).
    """
    kind = result.kind
    poly = result.polynomial
    if target == "poincare":
        _require(kind, InvariantKind.HQT, target)
        out = poly.specialize({"q": 1})
    elif target == "to_E":
        _require(kind, InvariantKind.HQT, target)
        out = poly.specialize({"t": -1})
    elif target == "pure_extract":
        _require(kind, InvariantKind.HQT, target)
        terms = {(b,): c for (a, b), c in poly.terms.items() if b == 2 * a}
        return SparsePoly(("t",), terms)
    elif target == "xy_to_qt":
        _require(kind, InvariantKind.HXY, target)
        out = poly.specialize({"x": "t", "y": "t"})
    elif target == "ygenus":
        _require(kind, InvariantKind.HXY, target)
        out = poly.specialize({"q": 1, "x": -1})
    else:
        raise KindMismatch(f"unknown specialization target {target!r}")
    return _as_poly_in_context(out, _TARGET_VARS[target])


_TARGET_VARS = {
    "poincare": ("t",),
    "to_E": ("q",),
    "pure_extract": ("t",),
    "xy_to_qt": ("q", "t"),
    "ygenus": ("y",),
}


def _require(kind, wanted, target):
    if kind is not wanted:
        raise KindMismatch(f"{target} wants kind {wanted.value}, got {kind.value}")


def _as_poly_in_context(value, variables):
    """Scalars come back from full specialization; re-wrap in the target context."""
    if isinstance(value, SparsePoly):
        if value.vars == variables:
            return value
        # a specialization may collapse to fewer variables (e.g. H_1 = 1)
        mapping = dict.fromkeys(value.vars)
        out = {}
        for e, c in value.terms.items():
            new = [0] * len(variables)
            for v, k in zip(value.vars, e):
                new[variables.index(v)] = k
            out[tuple(new)] = c
        return SparsePoly(variables, out)
    return SparsePoly.constant(variables, value)


# -- printed closed forms --------------------------------------------------------

_QT = FLAVOR_QT.variables
_Q = FLAVOR_E.variables
_T = FLAVOR_PURE.variables


def closed_form(which: str, g: int, n: int | None = None) -> FactoredFraction:
    """Closed forms transcribed term by term: E2, H2, H3, PP3, ygenus(n).

    ygenus wants g >= 2, the others g >= 1 (UnsupportedGenus otherwise).
    The two trinomial denominator factors appearing in the printed H3/PP3
    (q^2 t^4 + q t^2 + 1 and its t-only shadow) are cleared against
    (1 - q^3 t^6) = (1 - q t^2)(q^2 t^4 + q t^2 + 1) so that denominators stay
    binomial; the values are unchanged.
    """
    if which == "E2":
        _want_genus(g, 1, which)
        return _closed_e2(g)
    if which == "H2":
        _want_genus(g, 1, which)
        return _closed_h2(g)
    if which == "H3":
        _want_genus(g, 1, which)
        return _closed_h3(g)
    if which == "PP3":
        _want_genus(g, 1, which)
        return _closed_pp3(g)
    if which == "ygenus":
        _want_genus(g, 2, which)
        if n is None:
            raise ValueError("ygenus closed form needs n")
        return _closed_ygenus(n, g)
    raise KindMismatch(f"unknown closed form {which!r}")


def _want_genus(g, minimum, which):
    if g < minimum:
        raise UnsupportedGenus(f"closed form {which} wants g >= {minimum}, got {g}")


def _closed_e2(g) -> FactoredFraction:
    one = SparsePoly.one(_Q)
    q = SparsePoly.variable(_Q, "q")
    q2 = (q * q - one) ** (2 * g - 2)
    qpow = SparsePoly.monomial(_Q, (2 * g - 2,))
    total = (
        q2
        + qpow * q2
        - (qpow * (q - one) ** (2 * g - 2)).scale(Fraction(1, 2))
        - (qpow * (q + one) ** (2 * g - 2)).scale(Fraction(1, 2))
    )
    return FactoredFraction.from_poly(total)


def _b2(qe, te, c=1):
    return SparsePoly(_QT, {(0, 0): 1, (qe, te): c})


def _minus(qe, te):
    # q^qe t^te - 1 (the printed denominators' sign convention)
    return SparsePoly(_QT, {(qe, te): 1, (0, 0): -1})


def _closed_h2(g) -> FactoredFraction:
    t1 = FactoredFraction.from_poly(_b2(2, 3) ** (2 * g))
    t1 = t1.divided_by_poly(_minus(2, 2)).divided_by_poly(_minus(2, 4))
    t2 = FactoredFraction.from_poly(_b2(2, 1) ** (2 * g)).shift((2 * g - 2, 4 * g - 4))
    t2 = t2.divided_by_poly(_minus(2, 0)).divided_by_poly(_minus(2, 2))
    t3 = FactoredFraction.from_poly(_b2(1, 1) ** (2 * g)).shift((2 * g - 2, 4 * g - 4))
    t3 = t3.scale(Fraction(-1, 2))
    t3 = t3.divided_by_poly(_minus(1, 2)).divided_by_poly(_minus(1, 0))
    t4 = FactoredFraction.from_poly(_b2(1, 1, -1) ** (2 * g)).shift((2 * g - 2, 4 * g - 4))
    t4 = t4.scale(Fraction(-1, 2))
    t4 = t4.divided_by_poly(_b2(1, 0)).divided_by_poly(_b2(1, 2))
    return frac_sum([t1, t2, t3, t4], _QT)


def _closed_h3(g) -> FactoredFraction:
    terms = []
    f = FactoredFraction.from_poly(_b2(3, 5) ** (2 * g) * _b2(2, 3) ** (2 * g))
    for d in ((3, 6), (3, 4), (2, 4), (2, 2)):
        f = f.divided_by_poly(_minus(*d))
    terms.append(f)
    f = FactoredFraction.from_poly(_b2(3, 1) ** (2 * g) * _b2(2, 1) ** (2 * g))
    f = f.shift((6 * g - 6, 12 * g - 12))
    for d in ((3, 2), (3, 0), (2, 2), (2, 0)):
        f = f.divided_by_poly(_minus(*d))
    terms.append(f)
    f = FactoredFraction.from_poly(_b2(3, 3) ** (2 * g) * _b2(1, 1) ** (2 * g))
    f = f.shift((4 * g - 4, 8 * g - 8))
    for d in ((3, 4), (3, 2), (1, 2), (1, 0)):
        f = f.divided_by_poly(_minus(*d))
    terms.append(f)
    f = FactoredFraction.from_poly(_b2(1, 1) ** (4 * g)).shift((6 * g - 6, 12 * g - 12))
    f = f.scale(Fraction(1, 3))
    f = f.divided_by_poly(_minus(1, 2), 2).divided_by_poly(_minus(1, 0), 2)
    terms.append(f)
    # -(1/3) q^{6g-6} t^{12g-12} (q^2t^2-qt+1)^{2g} / ((q^2t^4+qt^2+1)(q^2+q+1)),
    # trinomials cleared against (1-q^3t^6) and (1-q^3)
    num = SparsePoly(_QT, {(2, 2): 1, (1, 1): -1, (0, 0): 1}) ** (2 * g)
    num = num * _b2(1, 2, -1) * _b2(1, 0, -1)
    f = FactoredFraction.from_poly(num).shift((6 * g - 6, 12 * g - 12))
    f = f.scale(Fraction(-1, 3))
    f = f.divided_by_poly(_b2(3, 6, -1)).divided_by_poly(_b2(3, 0, -1))
    terms.append(f)
    f = FactoredFraction.from_poly(_b2(2, 3) ** (2 * g) * _b2(1, 1) ** (2 * g))
    f = f.shift((4 * g - 4, 8 * g - 8)).scale(-1)
    for d in ((2, 4), (2, 2), (1, 2), (1, 0)):
        f = f.divided_by_poly(_minus(*d))
    terms.append(f)
    f = FactoredFraction.from_poly(_b2(2, 1) ** (2 * g) * _b2(1, 1) ** (2 * g))
    f = f.shift((6 * g - 6, 12 * g - 12)).scale(-1)
    for d in ((2, 2), (2, 0), (1, 2), (1, 0)):
        f = f.divided_by_poly(_minus(*d))
    terms.append(f)
    return frac_sum(terms, _QT)


def _closed_pp3(g) -> FactoredFraction:
    def tmono(e, c=1):
        return SparsePoly.monomial(_T, (e,), c)

    def tminus(e):
        return SparsePoly(_T, {(e,): 1, (0,): -1})

    terms = [
        FactoredFraction.one(_T).divided_by_poly(tminus(6)).divided_by_poly(tminus(4)),
        FactoredFraction.from_poly(tmono(12 * g - 12)),
        FactoredFraction.from_poly(tmono(8 * g - 8, -1)).divided_by_poly(tminus(2)),
        FactoredFraction.from_poly(tmono(12 * g - 12, Fraction(1, 3))).divided_by_poly(
            tminus(2), 2
        ),
        # -(1/3) t^{12g-12} / (t^4+t^2+1), trinomial cleared against (1-t^6)
        FactoredFraction.from_poly(
            tmono(12 * g - 12, Fraction(-1, 3)) * SparsePoly(_T, {(0,): 1, (2,): -1})
        ).divided_by_poly(SparsePoly(_T, {(0,): 1, (6,): -1})),
        FactoredFraction.from_poly(tmono(8 * g - 8, -1))
        .divided_by_poly(tminus(4))
        .divided_by_poly(tminus(2)),
        FactoredFraction.from_poly(tmono(12 * g - 12)).divided_by_poly(tminus(2)),
    ]
    return frac_sum(terms, _T)


def _closed_ygenus(n: int, g: int) -> FactoredFraction:
    yvars = ("y",)
    front = SparsePoly(yvars, {(k,): (-1) ** k for k in range(n)}) ** (g - 1)
    total = SparsePoly.zero(yvars)
    for m in range(1, n + 1):
        if n % m:
            continue
        mu = moebius(m)
        if mu == 0:
            continue
        k = n // m
        inner = SparsePoly.monomial(yvars, (n * (n - k),), (-1) ** (n * (n - k)) * m)
        for i in range(1, k):
            inner = inner * SparsePoly(yvars, {(0,): 1, (m * i,): -((-1) ** (m * i))}) ** 2
        total = total + (front * inner ** (g - 1)).scale(Fraction(mu, m))
    return FactoredFraction.from_poly(total)


# -- cross-invariant checks -------------------------------------------------------


def closed_form_checks(n: int, g: int, *, cache=None) -> CheckReport:
    """Compare extracted invariants against every printed closed form for n."""
    report = CheckReport()
    if n == 2:
        e2 = compute_invariant(InvariantKind.E, 2, g, cache=cache)
        report.add("closed_form_E2", _match_entry(e2.polynomial, closed_form("E2", g)))
        h2 = compute_invariant(InvariantKind.HQT, 2, g, cache=cache)
        report.add("closed_form_H2", _match_entry(h2.polynomial, closed_form("H2", g)))
    elif n == 3:
        h3 = compute_invariant(InvariantKind.HQT, 3, g, cache=cache)
        report.add("closed_form_H3", _match_entry(h3.polynomial, closed_form("H3", g)))
        pp3 = compute_invariant(InvariantKind.PP, 3, g, cache=cache)
        report.add(
            "closed_form_PP3", _match_entry(pp3.polynomial, closed_form("PP3", g))
        )
    else:
        raise KindMismatch(f"no printed closed forms for n = {n}")
    if g >= 2 and n in (2, 3):
        hxy = compute_invariant(InvariantKind.HXY, n, g, cache=cache)
        ygen = specialize_invariant(hxy, "ygenus")
        report.add(
            "closed_form_ygenus",
            _match_entry(ygen, closed_form("ygenus", g, n=n)),
        )
    return report


def _match_entry(poly: SparsePoly, form: FactoredFraction) -> CheckEntry:
    expanded = form.as_polynomial()
    if poly == expanded:
        return CheckEntry(True, detail="extraction equals the printed closed form")
    diff = poly - expanded
    e, c = diff.sorted_terms()[0]
    mono = poly_text(SparsePoly.monomial(diff.vars, e, 1))
    return CheckEntry(False, witness=f"difference has coefficient {c} at {mono}")


def specialization_checks(n: int, g: int, *, include_xy=None, cache=None) -> CheckReport:
    """Cross-kind consistency: Hqt(t=-1)=E, Hxy(t,t)=Hqt, pure extract = PP."""
    if include_xy is None:
        include_xy = n <= 3
    report = CheckReport()
    hqt = compute_invariant(InvariantKind.HQT, n, g, cache=cache)
    e = compute_invariant(InvariantKind.E, n, g, cache=cache)
    report.add(
        "to_E_match",
        _poly_equal_entry(specialize_invariant(hqt, "to_E"), e.polynomial),
    )
    if include_xy:
        hxy = compute_invariant(InvariantKind.HXY, n, g, cache=cache)
        report.add(
            "xy_to_qt_match",
            _poly_equal_entry(specialize_invariant(hxy, "xy_to_qt"), hqt.polynomial),
        )
        pp = compute_invariant(InvariantKind.PP, n, g, cache=cache)
        report.add(
            "pure_vs_extract",
            _poly_equal_entry(
                specialize_invariant(hqt, "pure_extract"), pp.polynomial
            ),
        )
    return report


def _poly_equal_entry(a: SparsePoly, b: SparsePoly) -> CheckEntry:
    if a == b:
        return CheckEntry(True, detail="exact match")
    diff = a - b
    e, c = diff.sorted_terms()[0]
    mono = poly_text(SparsePoly.monomial(diff.vars, e, 1))
    return CheckEntry(False, witness=f"difference has coefficient {c} at {mono}")


def run_check(name: str, n: int, g: int, *, cache=None) -> CheckReport:
    """Dispatch a named check suite entry for (n, g)."""
    if name == "duality":
        r = compute_invariant(InvariantKind.HQT, n, g, cache=cache)
        report = CheckReport()
        report.add("degrees", degrees_entry(InvariantKind.HQT, n, g, r.polynomial))
        report.add("duality", duality_entry(InvariantKind.HQT, n, g, r.polynomial))
        report.add("positivity", positivity_entry(r.polynomial))
        return report
    if name == "euler":
        r = compute_invariant(InvariantKind.E, n, g, cache=cache)
        report = CheckReport()
        report.add("euler", euler_entry(n, g, r.polynomial))
        return report
    if name == "closed_form_match":
        return closed_form_checks(n, g, cache=cache)
    if name == "specialization_match":
        return specialization_checks(n, g, cache=cache)
    if name == "pp_properties":
        r = compute_invariant(InvariantKind.PP, n, g, cache=cache)
        report = CheckReport()
        report.add("pp_properties", pp_properties_entry(n, g, r.polynomial))
        hqt = compute_invariant(InvariantKind.HQT, n, g, cache=cache)
        report.add(
            "pure_vs_extract",
            _poly_equal_entry(
                specialize_invariant(hqt, "pure_extract"), r.polynomial
            ),
        )
        return report
    raise KindMismatch(f"unknown check {name!r}")


# -- canonical documents and the disk cache ----------------------------------------


def polynomial_document(result: InvariantResult) -> dict:
    """The canonical JSON document for one computed invariant."""
    terms = [
        {"e": list(e), "c": str(c)} for e, c in result.polynomial.sorted_terms()
    ]
    return {
        "kind": result.kind.value,
        "n": result.n,
        "g": result.g,
        "vars": list(result.polynomial.vars),
        "terms": terms,
        "meta": {"dim2N": result.dimension, "checks": result.checks.to_json()},
        "version": DOCUMENT_VERSION,
    }


def document_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


def result_from_document(doc: dict) -> InvariantResult:
    kind = parse_kind(doc["kind"])
    variables = tuple(doc["vars"])
    terms = {tuple(t["e"]): int(t["c"]) for t in doc["terms"]}
    poly = SparsePoly(variables, terms)
    checks = CheckReport.from_json(doc["meta"]["checks"])
    return InvariantResult(kind, doc["n"], doc["g"], poly, doc["meta"]["dim2N"], checks)


class InvariantCache:
    """One canonical JSON document per (kind, n, g) under a cache directory.

    Writes are atomic (temp file + rename), so concurrent writers of the same
    key degrade to last-writer-wins with intact documents.
    """

    def __init__(self, root):
        self.root = Path(root)

    def _path(self, kind: InvariantKind, n: int, g: int) -> Path:
        return self.root / f"{kind.value}_n{n}_g{g}.json"

    def load_bytes(self, kind, n, g):
        kind = parse_kind(kind)
        try:
            return self._path(kind, n, g).read_bytes()
        except FileNotFoundError:
            return None

    def load(self, kind, n, g) -> InvariantResult | None:
        raw = self.load_bytes(kind, n, g)
        if raw is None:
            return None
        doc = json.loads(raw)
        if doc.get("version") != DOCUMENT_VERSION:
            return None  # stale format: treat as a miss and recompute
        return result_from_document(doc)

    def store(self, result: InvariantResult) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(result.kind, result.n, result.g)
        data = document_bytes(polynomial_document(result))
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
            os.replace(tmp, path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        return path

    def entries(self):
        """Sorted (kind, n, g) keys of the cached documents."""
        if not self.root.is_dir():
            return []
        out = []
        for path in self.root.glob("*_n*_g*.json"):
            kind_text, n_text, g_text = path.stem.split("_")
            try:
                out.append((parse_kind(kind_text), int(n_text[1:]), int(g_text[1:])))
            except (KindMismatch, ValueError):
                continue
        return sorted(out, key=lambda kng: (kng[0].value, kng[1], kng[2]))

    def clear(self):
        if not self.root.is_dir():
            return
        for path in self.root.glob("*.json"):
            path.unlink()
