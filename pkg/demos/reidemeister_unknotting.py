"""Untangling a kinked unknot with a bounded Reidemeister search.

A round circle receives several random kinks; ``simplify`` then searches
the move graph for a crossingless diagram and returns a replayable trace.
The trefoil, by contrast, cannot be reduced within a small budget.
"""

import random

from knotsurf import catalog, diagram, notation, seifert, invariants

rng = random.Random(0)
d = diagram.Diagram((), 1)
for _ in range(6):
    kinks = [s for s in diagram.find_move_sites(d) if s.kind == diagram.R1_ADD]
    d = diagram.apply_move(d, rng.choice(kinks))
print("kinked unknot:", notation.serialize(d))
print("writhe", diagram.writhe(d), "| Seifert genus bound", seifert.build_surface(d).genus)

res = diagram.simplify(d, max_crossings=d.crossing_count)
print("verdict:", res.verdict, "after", res.states, "states")
for step in res.trace:
    d = diagram.apply_move(d, step)
    print("  %-3s -> %d crossings" % (step.kind, d.crossing_count))

trefoil = catalog.named("trefoil+")
res = diagram.simplify(trefoil, max_crossings=5)
print("\ntrefoil:", res.verdict, "after", res.states, "states")

# Every diagram in the trefoil's bounded orbit has the same invariants.
seen = set()
for e in diagram.move_orbit(trefoil, 5, 2000):
    V = seifert.seifert_matrix(e)
    seen.add((str(invariants.alexander(V)), invariants.signature(V)))
print("invariants over the orbit:", seen)
