"""Shared frozen expected values for the test suite.

The three printed polynomials below are transcribed term by term from the
closed-form tables for n = 2 at genus 3 and are the golden fixtures the
whole pipeline must reproduce exactly.
"""

from charvar.polynomials import SparsePoly

# E_2(q) at g = 3: keys are (q-exponent,)
E2_G3_TERMS = {
    (0,): 1, (2,): -4, (4,): 6, (6,): -14, (8,): 6, (10,): -4, (12,): 1,
}

# H_2(q,t) at g = 3: keys are (q-exponent, t-exponent), 23 terms
H2_G3_TERMS = {
    (12, 12): 1, (10, 12): 1, (10, 11): 6, (8, 12): 1, (10, 10): 1,
    (8, 11): 6, (8, 10): 16, (8, 9): 6, (6, 10): 1, (8, 8): 1,
    (6, 9): 26, (6, 8): 16, (6, 7): 6, (4, 8): 1, (6, 6): 1,
    (4, 7): 6, (4, 6): 16, (4, 5): 6, (4, 4): 1, (2, 4): 1,
    (2, 3): 6, (2, 2): 1, (0, 0): 1,
}

# Poincare polynomial of the n = 2 space at g = 3: keys are (t-exponent,)
POINCARE_2_G3_TERMS = {
    (12,): 3, (11,): 12, (10,): 18, (9,): 32, (8,): 18, (7,): 12,
    (6,): 17, (5,): 6, (4,): 2, (3,): 6, (2,): 1, (0,): 1,
}

# Pure-part polynomial of the n = 2 space at g = 3
PP2_G3_TERMS = {(0,): 1, (4,): 1, (8,): 1}


def e2_g3_poly():
    return SparsePoly(("q",), E2_G3_TERMS)


def h2_g3_poly():
    return SparsePoly(("q", "t"), H2_G3_TERMS)


def poincare2_g3_poly():
    return SparsePoly(("t",), POINCARE_2_G3_TERMS)


def pp2_g3_poly():
    return SparsePoly(("t",), PP2_G3_TERMS)
