"""Classifying closed surfaces from polygonal presentations.

Computes the Euler characteristic and orientability of a few words, then
applies random cut/paste modifications and checks the class never changes.
"""

import random

from knotsurf import surfaces

for word in ("a a'", "a b a' b'", "a a", "a b a b'", "a b a' b' e; e' c d c' d'"):
    p = surfaces.parse_word(word)
    print("%-28s %s" % (word, surfaces.classify(p).to_json()))

rng = random.Random(1)
p = surfaces.canonical_presentation(2)
start = surfaces.classify(p)
print("\nstart:", p, start.to_json())
kinds = [(m, d) for m in (surfaces.M1, surfaces.M2, surfaces.M3)
         for d in (surfaces.FORWARD, surfaces.BACKWARD)]
for _ in range(12):
    which, direction = rng.choice(kinds)
    sites = surfaces.applicable_sites(p, which, direction)
    if not sites or (direction == surfaces.FORWARD and len(p.symbols()) > 10):
        continue
    p = surfaces.apply_modification(p, which, direction, rng.choice(sites))
    assert surfaces.classify(p) == start
    print("%s %-8s -> %s" % (which, direction, p))
