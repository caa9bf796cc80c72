"""Seifert surfaces and the invariants they carry.

Builds the Seifert surface of a few small knots, prints its discs, bands and
Euler characteristic, then the Seifert matrix, Alexander polynomial,
signature and the resulting bounds on the genus.
"""

from knotsurf import catalog, invariants, notation, seifert

knots = {
    "unknot": catalog.named("unknot"),
    "trefoil (braid 2: 1 1 1)": notation.braid_closure(notation.parse_braid("2: 1 1 1")),
    "mirror trefoil": notation.braid_closure(notation.parse_braid("2: -1 -1 -1")),
    "figure-eight": catalog.named("4_1"),
    "5_2": catalog.named("5_2"),
}

for name, d in knots.items():
    surface = seifert.build_surface(d)
    V = seifert.seifert_matrix(d)
    delta = invariants.alexander(V)
    sigma = invariants.signature(V)
    lower = invariants.genus_lower_bound(delta, sigma)
    print(name)
    print("  discs %d, bands %d, chi = d - b = %d, genus <= %d"
          % (surface.discs, len(surface.bands), surface.euler, surface.genus))
    print("  Seifert matrix", V)
    print("  Alexander", delta, "  signature", sigma,
          "  determinant", invariants.determinant_invariant(V))
    print("  genus bounds %d <= g <= %d%s"
          % (lower, surface.genus, "  (exact)" if lower == surface.genus else ""))
    print()

# The same polynomial and signature come straight from a hand-written
# Seifert matrix, without any diagram.
for V in ([[1, 1], [0, 0]], [[1, 1], [0, 1]], [[1, 1], [0, -1]], [[-1, 1], [0, -1]]):
    print(V, "->", invariants.alexander(V), "| sigma", invariants.signature(V))
