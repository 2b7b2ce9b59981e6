"""The pure part PP_n(t), the (q,x,y) refinement, and the y-genus slice.

Inside H_n(q,t) the monomials with t-degree exactly twice the q-degree span
the "pure" part — the shadow of the subring generated by tautological
classes.  The same polynomial PP_n(t) also has its own generating function
over partitions (hooks of the cells with empty arm only), and the two routes
must agree.  The three-variable refinement H_n(q,x,y) fuses back to H_n(q,t)
at x = y = t and carries the Hirzebruch y-genus at (q,x) = (1,-1).
"""

from charvar import (
    InvariantKind,
    closed_form,
    compute_invariant,
    moebius,
    poly_text,
    specialize_invariant,
)

print("Pure part two ways, n = 2, genus 3:")
h = compute_invariant(InvariantKind.HQT, 2, 3)
extracted = specialize_invariant(h, "pure_extract")
direct = compute_invariant(InvariantKind.PP, 2, 3).polynomial
print(f"  monomials q^i t^(2i) of H_2: {poly_text(extracted)}")
print(f"  own generating function:     {poly_text(direct)}")
assert extracted == direct

print("\nPP_3(t) against the printed closed form:")
for g in (2, 3):
    pp3 = compute_invariant(InvariantKind.PP, 3, g).polynomial
    assert pp3 == closed_form("PP3", g).as_polynomial()
    print(f"  g={g}: {poly_text(pp3)}")
    print(f"        degree {pp3.degree_in('t')} = 2*3*2*(g-1), leading coefficient 1")

print("\nThe (q,x,y) refinement fuses to H_n(q,t) at x = y = t:")
for n in (2, 3):
    hxy = compute_invariant(InvariantKind.HXY, n, 2)
    hqt = compute_invariant(InvariantKind.HQT, n, 2)
    fused = specialize_invariant(hxy, "xy_to_qt")
    print(f"  n={n}: H_{n}(q,t,t) == H_{n}(q,t): {fused == hqt.polynomial}"
          f"   ({len(hxy.polynomial.terms)} terms in three variables)")

print("\ny-genus H_n(1,-1,y) against its closed form, with endpoint values:")
for n in (2, 3):
    for g in (2, 3):
        hxy = compute_invariant(InvariantKind.HXY, n, g)
        ygen = specialize_invariant(hxy, "ygenus")
        assert ygen == closed_form("ygenus", g, n=n).as_polynomial()
        at_m1 = ygen.specialize({"y": -1})
        at_p1 = ygen.specialize({"y": 1})
        assert at_m1 == moebius(n) * n ** (2 * g - 3)
        print(f"  n={n} g={g}: {poly_text(ygen)}")
        print(f"          y=-1 -> {at_m1} (Euler characteristic), y=1 -> {at_p1}")
