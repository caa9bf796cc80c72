"""Generators for torus knots, 2-bridge knots and a registry of named examples."""

import re
from fractions import Fraction
from math import gcd

from .diagram import Diagram, make_crossing, normalized
from .errors import DomainError
from .notation import BraidWord, braid_closure


def torus_knot(p, q):
    """T(p, q) as the closure of (s_1 ... s_{|q|-1})^{|p|}; the sign of p*q sets the chirality."""
    p, q = int(p), int(q)
    if abs(q) < 2:
        raise DomainError("torus knot needs |q| >= 2")
    g = gcd(abs(p), abs(q))
    if g != 1:
        raise DomainError(
            "gcd(%d, %d) = %d: T(p,q) is a torus link with %d components, not a knot"
            % (p, q, g, g))
    sign = 1 if p * q > 0 else -1
    n = abs(q)
    letters = [sign * i for i in range(1, n)] * abs(p)
    return braid_closure(BraidWord(n, letters))


def continued_fraction(a):
    """a_1 + 1/(a_2 + 1/(... + 1/a_l)) as a reduced Fraction."""
    a = [int(x) for x in a]
    if not a:
        raise DomainError("continued fraction needs at least one term")
    value = Fraction(a[-1])
    for x in reversed(a[:-1]):
        if value == 0:
            raise DomainError("zero intermediate denominator")
        value = x + 1 / value
    return value


# ---------------------------------------------------------------------------
# rational tangles
#
# A tangle is a list of unoriented crossings plus its four endpoints.  Each
# crossing lists edge ids counterclockwise and records which pair of
# opposite legs (axis 0: legs 0/2, axis 1: legs 1/3) passes over.

class _Tangle:
    def __init__(self):
        self.crossings = []  # [legs(list of 4 edge ids), over_axis]
        self.ends = {}
        self.next_edge = 0

    def edge(self):
        self.next_edge += 1
        return self.next_edge


def _zero_tangle():
    t = _Tangle()
    top, bottom = t.edge(), t.edge()
    t.ends = {"NW": top, "NE": top, "SW": bottom, "SE": bottom}
    return t


def _twist(t, positive):
    """Add one horizontal half-twist on the right of the tangle."""
    ne, se = t.edge(), t.edge()
    # legs counterclockwise from the north-east: NE, NW, SW, SE
    legs = [ne, t.ends["NE"], t.ends["SE"], se]
    t.crossings.append([legs, 0 if positive else 1])
    t.ends = {"NW": t.ends["NW"], "SW": t.ends["SW"], "NE": ne, "SE": se}
    return t


def _invert(t):
    """Rotate a quarter turn counterclockwise and switch every crossing."""
    e = t.ends
    t.ends = {"NW": e["NE"], "SW": e["NW"], "SE": e["SW"], "NE": e["SE"]}
    for c in t.crossings:
        c[1] = 1 - c[1]
    return t


def _numerator_closure(t):
    """Join NW to NE and SW to SE; orient and label the result."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    parent[find(t.ends["NW"])] = find(t.ends["NE"])
    parent[find(t.ends["SW"])] = find(t.ends["SE"])
    legs = [[find(e) for e in c[0]] for c in t.crossings]
    where = {}
    for k, lg in enumerate(legs):
        for i, e in enumerate(lg):
            where.setdefault(e, []).append((k, i))
    all_edges = {find(e) for e in t.ends.values()} | set(where)
    free = sum(1 for e in all_edges if e not in where)
    incoming = {}
    label = {}
    n = 1
    for k0 in range(len(legs)):
        for i0 in range(4):
            if (k0, i0) in incoming:
                continue
            # walk the component entering crossing k0 through leg i0
            k, i = k0, i0
            while (k, i) not in incoming:
                incoming[(k, i)] = True
                out = (k, (i + 2) % 4)
                incoming[out] = False
                e = legs[k][out[1]]
                label[e] = n
                n += 1
                a, b = where[e]
                k, i = b if a == out else a
    crossings = []
    for k, lg in enumerate(legs):
        slots = [(label[lg[i]], incoming[(k, i)]) for i in range(4)]
        crossings.append(make_crossing(slots, t.crossings[k][1]))
    if not crossings:
        return Diagram((), free)
    return normalized(Diagram(crossings, free))


def rational_closure(a):
    """Numerator closure of the rational tangle [a_1, ..., a_l] (knot or link)."""
    a = [int(x) for x in a]
    if not a or any(x == 0 for x in a):
        raise DomainError("twist counts must be nonzero")
    t = _zero_tangle()
    for j, x in enumerate(reversed(a)):
        if j:
            _invert(t)
        for _ in range(abs(x)):
            _twist(t, x > 0)
    return _numerator_closure(t)


def two_bridge(a):
    """The 2-bridge knot K(a_1, ..., a_l); each a_i gives |a_i| twisting crossings."""
    frac = continued_fraction(a)
    if frac.numerator % 2 == 0:
        raise DomainError(
            "fraction %s has even numerator: K(%s) is a 2-component link"
            % (frac, ",".join(str(x) for x in a)))
    return rational_closure(a)


# ---------------------------------------------------------------------------
# registry

def _unknot():
    return Diagram((), 1)


_FIXED = {
    "unknot": _unknot,
    "trefoil+": lambda: torus_knot(3, 2),
    "trefoil-": lambda: torus_knot(-3, 2),
    "3_1": lambda: torus_knot(3, 2),
    "4_1": lambda: two_bridge([2, 2]),
    "5_1": lambda: torus_knot(5, 2),
    "5_2": lambda: two_bridge([2, 3]),
    "8_3": lambda: two_bridge([4, 4]),
    "hopf+": lambda: braid_closure(BraidWord(2, [1, 1])),
    "hopf-": lambda: braid_closure(BraidWord(2, [-1, -1])),
}

_PATTERNS = [
    (re.compile(r"C\((-?\d+)\)\Z"), lambda m: two_bridge([2 * int(m.group(1))] * 2)),
    (re.compile(r"T\((-?\d+),\s*(-?\d+)\)\Z"),
     lambda m: torus_knot(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"K\((-?\d+(?:,\s*-?\d+)*)\)\Z"),
     lambda m: two_bridge([int(x) for x in m.group(1).split(",")])),
]


def available_names():
    return sorted(_FIXED) + ["C(m)", "T(p,q)", "K(a1,...,al)"]


def named(name):
    """Look up a named diagram: fixed names or the families C(m), T(p,q), K(a1,...)."""
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    for pat, build in _PATTERNS:
        m = pat.match(name)
        if m:
            return build(m)
    raise DomainError("unknown knot name %r; available: %s"
                      % (name, ", ".join(available_names())))


def catalog_knots():
    """The named knots used as fixtures (name -> diagram)."""
    names = ["unknot", "trefoil+", "trefoil-", "4_1", "5_1", "5_2", "8_3", "C(3)",
             "T(2,5)", "T(3,4)", "T(2,7)"]
    return {n: named(n) for n in names}

