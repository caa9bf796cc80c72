"""Two-bridge knots, torus knot signatures and connected sums.

The determinant of a 2-bridge knot equals the numerator of its continued
fraction; torus knots T(2, 2k+1) have signature -2k; and the Alexander
polynomial multiplies while the signature adds under connected sum.
"""

from knotsurf import catalog, diagram, invariants, seifert


def invariants_of(d):
    V = seifert.seifert_matrix(d)
    return invariants.alexander(V), invariants.signature(V), invariants.determinant_invariant(V)


for a in ([2, 2], [2, 3], [4, 4], [2, 1, 1], [1, 2, 3, 4]):
    frac = catalog.continued_fraction(a)
    delta, sigma, det = invariants_of(catalog.two_bridge(a))
    print("K%-14s fraction %-6s det %-3d Alexander %s" % (a, frac, det, delta))

print()
for k in range(1, 6):
    d = catalog.torus_knot(2, 2 * k + 1)
    print("T(2,%d): signature %d" % (2 * k + 1, invariants_of(d)[1]))

print()
t, f = catalog.named("trefoil+"), catalog.named("4_1")
s = diagram.connected_sum(t, f)
print("trefoil # figure-eight:", s.crossing_count, "crossings")
print("  Alexander", invariants_of(s)[0], "=", (invariants_of(t)[0] * invariants_of(f)[0]).canonical())
print("  signature", invariants_of(s)[1], "| genus bound", seifert.genus_upper_bound(s))
