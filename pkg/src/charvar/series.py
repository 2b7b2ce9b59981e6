"""Truncated series over factored fractions, and rank-layer extraction.

Everything here happens in one bookkeeping variable T truncated at a fixed
order; coefficients are FactoredFraction values in the flavor's variable
context.  The partition sum

    S(T) = sum over partitions  hook_term(flavor, partition, g) * T^weight

factors as an infinite product of plethystic exponentials, one per rank n:

    S(T) = prod_n exp( sum_r adams_r[ V_n ] * T^(n*r) / r )

Taking the formal logarithm gives coefficients U_m with

    U_m = sum_{r | m} (1/r) * adams_r[ V_{m/r} ],

which the divisor recursion inverts:  V_m = U_m - sum_{r|m, r>1} (1/r) *
adams_r[V_{m/r}].  Truncation at order nmax is exact for V_1..V_nmax because
rank n only contributes to T^m for n <= m.  The named invariants then come out
of each V_n by clearing the flavor's fixed normalization factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstantTermNotOne, NonIntegerCoefficient, NotPolynomial
from .partitions import hook_term, partitions_of
from .polynomials import (
    FLAVOR_E,
    FLAVOR_PURE,
    FLAVOR_QT,
    FLAVOR_XY,
    FactoredFraction,
    Flavor,
    SparsePoly,
    adams,
    frac_sum,
    poly_text,
)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c[0..order] of a series in T, with FactoredFraction entries."""

    flavor: Flavor
    coeffs: tuple[FactoredFraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.flavor == other.flavor and len(self.coeffs) == len(
            other.coeffs
        ) and all(a.equals(b) for a, b in zip(self.coeffs, other.coeffs))


def hook_sum_series(flavor: Flavor, g: int, order: int) -> TruncatedSeries:
    """The partition sum truncated at T^order; coefficient 0 is 1."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = []
    for m in range(order + 1):
        terms = [hook_term(flavor, p, g) for p in partitions_of(m)]
        coeffs.append(frac_sum(terms, flavor.variables))
    return TruncatedSeries(flavor, tuple(coeffs))


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """Formal log via the coefficient recursion m*U_m = m*S_m - sum k*U_k*S_{m-k}."""
    if not s.coeffs[0].equals(1):
        raise ConstantTermNotOne("series_log wants constant coefficient exactly 1")
    variables = s.flavor.variables
    u = [FactoredFraction.zero(variables)]
    for m in range(1, s.order + 1):
        terms = [s.coeffs[m]]
        for k in range(1, m):
            if u[k].is_zero() or s.coeffs[m - k].is_zero():
                continue
            terms.append((u[k] * s.coeffs[m - k]).scale(Fraction(-k, m)))
        u.append(frac_sum(terms, variables))
    return TruncatedSeries(s.flavor, tuple(u))


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """Formal exp via m*E_m = sum_{k=1..m} k*L_k*E_{m-k}; wants L_0 = 0."""
    if not s.coeffs[0].is_zero():
        raise ValueError("series_exp wants constant coefficient 0")
    variables = s.flavor.variables
    e = [FactoredFraction.one(variables)]
    for m in range(1, s.order + 1):
        terms = []
        for k in range(1, m + 1):
            if s.coeffs[k].is_zero() or e[m - k].is_zero():
                continue
            terms.append((s.coeffs[k] * e[m - k]).scale(Fraction(k, m)))
        e.append(frac_sum(terms, variables))
    return TruncatedSeries(s.flavor, tuple(e))


def _divisors(m: int) -> list[int]:
    return [r for r in range(1, m + 1) if m % r == 0]


def extract_layers(flavor: Flavor, g: int, nmax: int) -> list[FactoredFraction]:
    """The rank layers [V_1, ..., V_nmax] of the partition sum at genus g.

    Entry k of the returned list is V_{k+1}.  Raising nmax never changes the
    earlier layers (the divisor recursion is triangular in m).
    """
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    u = series_log(hook_sum_series(flavor, g, nmax))
    layers: list[FactoredFraction] = []
    for m in range(1, nmax + 1):
        terms = [u.coeffs[m]]
        for r in _divisors(m):
            if r == 1:
                continue
            prev = layers[m // r - 1]
            if prev.is_zero():
                continue
            terms.append(adams(prev, r, flavor).scale(Fraction(-1, r)))
        layers.append(frac_sum(terms, flavor.variables))
    return layers


def plethystic_exp_of_layers(
    flavor: Flavor, layers, order: int
) -> TruncatedSeries:
    """Reassemble exp(sum_n sum_r adams_r[V_n] T^(nr) / r) up to T^order.

    Round-trip oracle: with layers from extract_layers this reproduces
    hook_sum_series exactly.
    """
    variables = flavor.variables
    log_coeffs = [[] for _ in range(order + 1)]
    for n, layer in enumerate(layers, start=1):
        if layer.is_zero():
            continue
        r = 1
        while n * r <= order:
            log_coeffs[n * r].append(adams(layer, r, flavor).scale(Fraction(1, r)))
            r += 1
    log_series = TruncatedSeries(
        flavor, tuple(frac_sum(t, variables) for t in log_coeffs)
    )
    return series_exp(log_series)


# -- normalization of a layer into the named invariant ------------------------


def invariant_from_layer(
    flavor: Flavor, n: int, g: int, layer: FactoredFraction
) -> SparsePoly:
    """Solve the flavor's defining relation for the invariant of rank n.

    Clears the layer's normalization factor, reduces the result to an honest
    polynomial (NotPolynomial on failure: a falsified polynomiality statement
    or a bug), and asserts integer coefficients (NonIntegerCoefficient).
    """
    shift = n * (n - 1) * (g - 1)
    variables = flavor.variables
    if flavor is FLAVOR_E:
        out = layer.shift((shift,))
        e = 2 * g - 2
        one_minus_q = SparsePoly(variables, {(0,): 1, (1,): -1})
        if e >= 0:
            out = out.divided_by_poly(one_minus_q, e) if e else out
        else:
            out = out * one_minus_q ** (-e)
    elif flavor is FLAVOR_QT:
        clear = SparsePoly(variables, {(0, 0): 1, (1, 2): -1}) * SparsePoly(
            variables, {(0, 0): 1, (1, 0): -1}
        )
        out = (layer * clear).shift((shift, 2 * shift))
        if g:
            out = out.divided_by_poly(
                SparsePoly(variables, {(0, 0): 1, (1, 1): 1}), 2 * g
            )
    elif flavor is FLAVOR_XY:
        clear = SparsePoly(variables, {(0, 0, 0): 1, (1, 1, 1): -1}) * SparsePoly(
            variables, {(0, 0, 0): 1, (1, 0, 0): -1}
        )
        out = (layer * clear).shift((shift, shift, shift))
        if g:
            out = out.divided_by_poly(
                SparsePoly(variables, {(0, 0, 0): 1, (1, 1, 0): 1}), g
            )
            out = out.divided_by_poly(
                SparsePoly(variables, {(0, 0, 0): 1, (1, 0, 1): 1}), g
            )
    elif flavor is FLAVOR_PURE:
        # (1-t^2), not (t^2-1): fixed by the n=1 layer 1/(1-t^2) giving PP_1=1
        # and by positivity/leading-coefficient of every cross-checked case.
        clear = SparsePoly(variables, {(0,): 1, (2,): -1})
        out = (layer * clear).shift((2 * shift,))
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    poly = out.as_polynomial()
    if poly.has_negative_exponents():
        lo = poly.min_exponents()
        raise NotPolynomial(
            f"normalized layer is Laurent, lowest exponents {lo}",
            factor=lo,
        )
    if not poly.is_integral():
        bad = next(
            (e, c) for e, c in poly.sorted_terms() if not isinstance(c, int)
        )
        raise NonIntegerCoefficient(
            f"coefficient {bad[1]} of exponent {bad[0]} in {poly_text(poly)[:80]}"
        )
    return poly
