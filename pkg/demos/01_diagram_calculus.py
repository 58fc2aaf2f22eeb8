"""Walk through the diagram calculus: building set-partition diagrams,
composing them with delta bookkeeping, and checking tone constraints."""

from tonalg import diagram as dg

print("== identity and the basic special elements on 4 strands ==")
one = dg.identity(4)
print("1_4           :", dg.serialize(one))
print("s_2           :", dg.serialize(dg.transposition(2, 4)))
print("A(1,2)        :", dg.serialize(dg.A(1, 2, 4)))
print("pair element  :", dg.serialize(dg.e(1, 4)))
print("cut element W :", dg.serialize(dg.W(2, 4)))

print()
print("== composition counts closed middle loops as powers of delta ==")
u = dg.e(1, 2)
k, d = dg.compose(u, u)
print("u * u = delta^%d * %s" % (k, dg.serialize(d)))

print()
print("== tone: every block needs top-minus-bottom divisible by l ==")
eps = dg.epsilon(1, 3)
print("cut strand    :", dg.serialize(eps))
print("  1-tone?", dg.is_l_tone(eps, 1), "  2-tone?", dg.is_l_tone(eps, 2))
w3 = dg.W(3, 5)
print("W for l=3     :", dg.serialize(w3), " 3-tone?", dg.is_l_tone(w3, 3))

print()
print("== propagating vectors ==")
print("vector of 1_4 at l=3:", dg.prop_vector(one, 3))
am = dg.a_m((2, 1), 2, 6)
print("canonical element for (2,1), l=2, n=6:")
print("  ", dg.serialize(am))
print("  vector:", dg.prop_vector(am, 2))
k, sq = dg.compose(am, am)
print("  squares to delta^%d times itself: %s" % (k, sq == am))

bm = dg.b_m((2, 1), 2, 6)
print("absorbing version (always idempotent):")
print("  ", dg.serialize(bm))
print("  b*b == (delta^0, b):", dg.compose(bm, bm) == (0, bm))
