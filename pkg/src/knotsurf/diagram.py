"""Oriented link diagrams.

A diagram is a list of crossings plus a number of crossingless circles
("free loops").  Each crossing stores the labels of its four incident arcs
starting from the incoming under-strand and proceeding counterclockwise,
together with its sign.  Slot conventions at a crossing ``(a, b, c, d)``:

* slots 0 and 2 carry the under-strand, which runs from ``a`` to ``c``;
* slots 1 and 3 carry the over-strand; for a positive crossing it runs
  from ``d`` to ``b``, for a negative one from ``b`` to ``d``.

The cyclic slot order at every crossing is a rotation system for the
underlying 4-valent graph, so faces (and planarity) can be recovered by
face tracing.
"""

import hashlib
import heapq
import itertools
import json
from collections import namedtuple

from .errors import DomainError, MoveError, ValidationError

Crossing = namedtuple("Crossing", ["arcs", "sign"])


class Diagram:
    """An oriented link diagram: crossings plus crossingless circles."""

    __slots__ = ("crossings", "free_loops", "_cache")

    def __init__(self, crossings=(), free_loops=0):
        self.crossings = tuple(
            Crossing(tuple(int(x) for x in c[0]), int(c[1])) for c in crossings
        )
        self.free_loops = int(free_loops)
        self._cache = {}

    def __repr__(self):
        body = " ".join(
            "X%s%s" % ("+" if c.sign > 0 else "-", c.arcs) for c in self.crossings
        )
        return "Diagram(%s; free_loops=%d)" % (body, self.free_loops)

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.crossings == other.crossings
            and self.free_loops == other.free_loops
        )

    def __hash__(self):
        return hash((self.crossings, self.free_loops))

    @property
    def crossing_count(self):
        return len(self.crossings)

    def arcs(self):
        """Sorted list of arc labels."""
        return sorted({a for c in self.crossings for a in c.arcs})

    def arc_ends(self):
        """Map arc label -> (tail slot, head slot), each slot a (crossing, position) pair.

        Raises ValidationError if the diagram is not consistently oriented.
        """
        if "ends" not in self._cache:
            ends = {}
            for k, c in enumerate(self.crossings):
                for i, a in enumerate(c.arcs):
                    t, h = ends.setdefault(a, [None, None])
                    if slot_is_out(c.sign, i):
                        if t is not None:
                            raise ValidationError("arc %d leaves two crossings" % a)
                        ends[a][0] = (k, i)
                    else:
                        if h is not None:
                            raise ValidationError("arc %d enters two crossings" % a)
                        ends[a][1] = (k, i)
            for a, (t, h) in ends.items():
                if t is None or h is None:
                    raise ValidationError("arc %d is not used exactly twice" % a)
            self._cache["ends"] = {a: (t, h) for a, (t, h) in ends.items()}
        return self._cache["ends"]

    def next_arc(self, a):
        """The arc following ``a`` along its component."""
        k, i = self.arc_ends()[a][1]
        return self.crossings[k].arcs[(i + 2) % 4]

    def cycles(self):
        """Components passing through crossings, as lists of arcs in orientation order.

        Each cycle starts at its smallest label; cycles are sorted by that label.
        """
        if "cycles" not in self._cache:
            seen = set()
            out = []
            for a in self.arcs():
                if a in seen:
                    continue
                cyc = [a]
                seen.add(a)
                b = self.next_arc(a)
                while b != a:
                    cyc.append(b)
                    seen.add(b)
                    b = self.next_arc(b)
                out.append(cyc)
            self._cache["cycles"] = out
        return self._cache["cycles"]

    def component_count(self):
        return len(self.cycles()) + self.free_loops

    def component_of(self):
        """Map arc label -> component index."""
        return {a: i for i, cyc in enumerate(self.cycles()) for a in cyc}

    def strands(self, k):
        """(over_in, over_out, under_in, under_out) slots of crossing k."""
        s = self.crossings[k].sign
        return (3, 1, 0, 2) if s > 0 else (1, 3, 0, 2)

    def to_json(self):
        return {
            "crossings": [{"arcs": list(c.arcs), "sign": c.sign} for c in self.crossings],
            "free_loops": self.free_loops,
        }


def slot_is_out(sign, i):
    """Whether slot ``i`` of a crossing with the given sign is an outgoing end."""
    if i == 0:
        return False
    if i == 2:
        return True
    if i == 1:
        return sign > 0
    return sign < 0


def make_crossing(slots, over_axis):
    """Build a crossing from four ``(label, incoming)`` pairs listed counterclockwise.

    ``over_axis`` is 0 if the strand on slots 0/2 of the list is over, 1 if
    the strand on slots 1/3 is.  The tuple is rotated to start at the
    incoming under-strand and the sign is read off from the over-strand.
    """
    under = [i for i in range(4) if i % 2 != over_axis]
    start = next(i for i in under if slots[i][1])
    rot = [slots[(start + j) % 4] for j in range(4)]
    if not rot[0][1] or rot[2][1] or rot[1][1] == rot[3][1]:
        raise DomainError("inconsistent strand directions at a new crossing")
    sign = 1 if rot[3][1] else -1
    return Crossing(tuple(s[0] for s in rot), sign)


# ---------------------------------------------------------------------------
# faces and validation

class ValidationReport:
    """Outcome of ``validate``: a list of violations plus face-trace counts."""

    def __init__(self, violations, vertices, edges, faces, graph_components, euler_counts):
        self.violations = list(violations)
        self.vertices = vertices
        self.edges = edges
        self.faces = faces
        self.graph_components = graph_components
        self.euler_counts = list(euler_counts)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def kinds(self):
        return [v[0] for v in self.violations]

    def to_json(self):
        return {
            "valid": self.ok,
            "violations": [{"kind": k, "message": m} for k, m in self.violations],
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "euler_counts": self.euler_counts,
        }

    def __repr__(self):
        return "ValidationReport(ok=%s, V=%d, E=%d, F=%d, violations=%r)" % (
            self.ok, self.vertices, self.edges, self.faces, self.violations)


def _slot_partner(d):
    """Map each slot (k, i) to the other slot carrying the same label."""
    where = {}
    for k, c in enumerate(d.crossings):
        for i, a in enumerate(c.arcs):
            where.setdefault(a, []).append((k, i))
    partner = {}
    for slots in where.values():
        if len(slots) == 2:
            partner[slots[0]] = slots[1]
            partner[slots[1]] = slots[0]
    return partner


def faces(d):
    """Faces of the diagram's graph as cycles of half-edges.

    A half-edge ``(k, i)`` leaves crossing ``k`` through slot ``i``; the
    face traced through it lies on its left, i.e. it is the corner between
    slot ``i`` and slot ``i + 1`` at crossing ``k``.
    """
    if "faces" in d._cache:
        return d._cache["faces"]
    partner = _slot_partner(d)
    seen = set()
    out = []
    for k in range(len(d.crossings)):
        for i in range(4):
            if (k, i) in seen:
                continue
            face = []
            h = (k, i)
            while h not in seen:
                seen.add(h)
                face.append(h)
                k2, i2 = partner[h]
                h = (k2, (i2 - 1) % 4)
            out.append(face)
    d._cache["faces"] = out
    return out


def face_of_halfedge(d):
    """Map half-edge -> face index."""
    if "hface" not in d._cache:
        d._cache["hface"] = {h: f for f, face in enumerate(faces(d)) for h in face}
    return d._cache["hface"]


def _graph_components(d):
    parent = list(range(len(d.crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    partner = _slot_partner(d)
    for (k, _), (k2, _) in partner.items():
        parent[find(k)] = find(k2)
    groups = {}
    for k in range(len(d.crossings)):
        groups.setdefault(find(k), []).append(k)
    return sorted(groups.values())


def validate(d):
    """Check a diagram and return a ValidationReport (never raises)."""
    violations = []
    counts = {}
    for k, c in enumerate(d.crossings):
        if len(c.arcs) != 4:
            violations.append(("Syntax", "crossing %d does not have 4 arcs" % k))
        if c.sign not in (1, -1):
            violations.append(("Sign", "crossing %d has sign %r" % (k, c.sign)))
        for a in c.arcs:
            if a <= 0:
                violations.append(("ArcIncidence", "arc label %d is not positive" % a))
            counts[a] = counts.get(a, 0) + 1
    for a in sorted(counts):
        if counts[a] != 2:
            violations.append(
                ("ArcIncidence", "arc %d occurs %d times, expected 2" % (a, counts[a])))
    if d.free_loops < 0:
        violations.append(("FreeLoops", "negative free loop count"))
    if violations:
        return ValidationReport(violations, len(d.crossings), len(counts), 0, 0, [])
    try:
        d.arc_ends()
    except ValidationError as exc:
        violations.append(("OrientationConflict", str(exc)))
    fs = faces(d)
    hface = face_of_halfedge(d)
    comps = _graph_components(d)
    eulers = []
    for comp in comps:
        members = set(comp)
        v = len(comp)
        e = 2 * v
        f = len({hface[(k, i)] for k in comp for i in range(4)})
        eulers.append(v - e + f)
        if v - e + f != 2:
            violations.append((
                "Planarity",
                "crossings %s give Euler count %d, expected 2" % (sorted(members), v - e + f)))
    return ValidationReport(violations, len(d.crossings), len(counts), len(fs),
                            len(comps), eulers)


def check(d):
    """Raise ValidationError unless ``d`` is valid; return ``d``."""
    rep = validate(d)
    if not rep.ok:
        raise ValidationError(
            "invalid diagram: " + "; ".join("%s: %s" % v for v in rep.violations), rep)
    return d


# ---------------------------------------------------------------------------
# labels and hashing

def relabel(d, mapping):
    return Diagram(
        [Crossing(tuple(mapping[a] for a in c.arcs), c.sign) for c in d.crossings],
        d.free_loops,
    )


def normalized(d):
    """Relabel arcs 1..n so that each component has consecutive labels.

    Each component starts at the arc whose tail slot is lexicographically
    smallest; components are ordered by that slot.  Crossing order is kept.
    """
    ends = d.arc_ends()
    cycles = []
    for cyc in d.cycles():
        start = min(range(len(cyc)), key=lambda j: ends[cyc[j]][0])
        cyc = cyc[start:] + cyc[:start]
        cycles.append((ends[cyc[0]][0], cyc))
    cycles.sort()
    mapping = {}
    n = 1
    for _, cyc in cycles:
        for a in cyc:
            mapping[a] = n
            n += 1
    return relabel(d, mapping)


def canonical_form(d):
    """Relabel-invariant normal form: a tuple minimized over basepoints and component order."""
    if "canon" in d._cache:
        return d._cache["canon"]
    cycles = d.cycles()
    best = None
    for order in itertools.permutations(range(len(cycles))):
        for bases in itertools.product(*[range(len(cycles[c])) for c in order]):
            mapping = {}
            n = 1
            for c, b in zip(order, bases):
                cyc = cycles[c]
                for j in range(len(cyc)):
                    mapping[cyc[(b + j) % len(cyc)]] = n
                    n += 1
            form = tuple(sorted(
                (tuple(mapping[a] for a in c.arcs), c.sign) for c in d.crossings))
            if best is None or form < best:
                best = form
    result = (d.free_loops, best or ())
    d._cache["canon"] = result
    return result


def canonical_hash(d):
    """Hex digest invariant under arc relabeling and crossing reordering."""
    text = repr(canonical_form(d)).encode("utf-8")
    return hashlib.sha256(text).hexdigest()


# ---------------------------------------------------------------------------
# basic operations

def writhe(d):
    return sum(c.sign for c in d.crossings)


def mirror(d):
    """Switch every crossing; all signs are negated."""
    out = []
    for c in d.crossings:
        a, b, cc, dd = c.arcs
        if c.sign > 0:
            out.append(Crossing((dd, a, b, cc), -1))
        else:
            out.append(Crossing((b, cc, dd, a), 1))
    return Diagram(out, d.free_loops)


def reverse(d, component):
    """Reverse the orientation of one component (an index into the components)."""
    n = d.component_count()
    if not 0 <= component < n:
        raise DomainError("component %r does not exist (have %d)" % (component, n))
    cycles = d.cycles()
    if component >= len(cycles):
        return d
    rev = set(cycles[component])
    out = []
    for k, c in enumerate(d.crossings):
        oi, _, ui, _ = d.strands(k)
        under_rev = c.arcs[ui] in rev
        over_rev = c.arcs[oi] in rev
        arcs = c.arcs
        if under_rev:
            arcs = arcs[2:] + arcs[:2]
        sign = -c.sign if under_rev != over_rev else c.sign
        out.append(Crossing(arcs, sign))
    return Diagram(out, d.free_loops)


def reverse_all(d):
    """Reverse every component."""
    for i in range(len(d.cycles())):
        d = reverse(d, i)
    return d


def _offset(d, shift):
    return relabel(d, {a: a + shift for a in d.arcs()})


def connected_sum(d1, d2):
    """Connected sum of two knot diagrams, splicing their lowest-labeled arcs."""
    for name, d in (("first", d1), ("second", d2)):
        if d.component_count() != 1:
            raise DomainError("%s summand has %d components, expected a knot"
                              % (name, d.component_count()))
    if not d1.crossings:
        return d2
    if not d2.crossings:
        return d1
    shift = max(d1.arcs())
    d2 = _offset(d2, shift)
    e1, e2 = min(d1.arcs()), min(d2.arcs())
    t1, h1 = d1.arc_ends()[e1]
    t2, h2 = d2.arc_ends()[e2]
    new_a = max(d2.arcs()) + 1
    new_b = new_a + 1
    # A runs from the tail of e1 to the head of e2; B from the tail of e2 to the head of e1.
    cr = [list(c.arcs) for c in d1.crossings] + [list(c.arcs) for c in d2.crossings]
    n1 = len(d1.crossings)
    cr[t1[0]][t1[1]] = new_a
    cr[n1 + h2[0]][h2[1]] = new_a
    cr[n1 + t2[0]][t2[1]] = new_b
    cr[h1[0]][h1[1]] = new_b
    signs = [c.sign for c in d1.crossings] + [c.sign for c in d2.crossings]
    return normalized(Diagram(list(zip(cr, signs))))


def linking_number(d, c1, c2):
    """Sum of signs of crossings where component c1 passes over component c2."""
    n = d.component_count()
    for c in (c1, c2):
        if not 0 <= c < n:
            raise DomainError("component %r does not exist (have %d)" % (c, n))
    if c1 == c2:
        raise DomainError("linking number needs two distinct components")
    comp = d.component_of()
    total = 0
    for k, c in enumerate(d.crossings):
        oi, _, ui, _ = d.strands(k)
        if comp[c.arcs[oi]] == c1 and comp[c.arcs[ui]] == c2:
            total += c.sign
    return total


# ---------------------------------------------------------------------------
# Reidemeister moves

MoveSite = namedtuple("MoveSite", ["kind", "location"])

R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3 = "R1+", "R1-", "R2+", "R2-", "R3"
MOVE_KINDS = (R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3)


def _to_lists(x):
    if isinstance(x, tuple):
        return [_to_lists(y) for y in x]
    return x


def _to_tuples(x):
    if isinstance(x, list):
        return tuple(_to_tuples(y) for y in x)
    return x


def site_to_json(s):
    return {"kind": s.kind, "location": _to_lists(s.location)}


def site_from_json(obj):
    return MoveSite(obj["kind"], _to_tuples(obj["location"]))


def trace_to_json(trace):
    return json.dumps([site_to_json(s) for s in trace])


def _fresh(d, count):
    start = max(d.arcs(), default=0) + 1
    return list(range(start, start + count))


def _remove_crossings(d, ks):
    """Delete crossings, merging the arcs that ran through them."""
    ks = set(ks)
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            if rx < ry:
                parent[ry] = rx
            else:
                parent[rx] = ry

    for k in ks:
        a = d.crossings[k].arcs
        union(a[0], a[2])
        union(a[1], a[3])
    kept = [c for k, c in enumerate(d.crossings) if k not in ks]
    used = {find(a) for c in kept for a in c.arcs}
    roots = {find(a) for k in ks for a in d.crossings[k].arcs}
    loops = len(roots - used)
    new = [Crossing(tuple(find(a) for a in c.arcs), c.sign) for c in kept]
    return Diagram(new, d.free_loops + loops)


def _side_of(d, arc, hface, f):
    """'L' if face f lies to the left of arc, 'R' if to the right."""
    t, h = d.arc_ends()[arc]
    if hface[t] == f:
        return "L"
    return "R"


def _r1_remove_sites(d):
    ends = d.arc_ends()
    per_crossing = {}
    for a, (t, h) in ends.items():
        if t[0] == h[0] and (t[1] - h[1]) % 4 in (1, 3):
            per_crossing.setdefault(t[0], []).append(a)
    return [MoveSite(R1_REMOVE, (min(arcs),)) for k, arcs in sorted(per_crossing.items())]


def _apply_r1_remove(d, loc):
    (a,) = loc
    ends = d.arc_ends()
    if a not in ends:
        raise MoveError("arc %r not in diagram" % (a,))
    t, h = ends[a]
    if t[0] != h[0] or (t[1] - h[1]) % 4 not in (1, 3):
        raise MoveError("arc %r is not a kink loop" % (a,))
    return _remove_crossings(d, [t[0]])


def _r1_add_sites(d):
    out = []
    for a in d.arcs():
        for side in ("L", "R"):
            for over_first in (True, False):
                out.append(MoveSite(R1_ADD, (a, side, over_first)))
    if d.free_loops:
        for side in ("L", "R"):
            for over_first in (True, False):
                out.append(MoveSite(R1_ADD, ("loop", side, over_first)))
    return out


def _kink_slots(e1, e2, e3, side):
    # slots listed counterclockwise as S, E, N, W; the strand enters at S
    if side == "L":
        return [(e1, True), (e3, False), (e2, False), (e2, True)]
    return [(e1, True), (e2, True), (e2, False), (e3, False)]


def _apply_r1_add(d, loc):
    a, side, over_first = loc
    if side not in ("L", "R"):
        raise MoveError("side must be 'L' or 'R'")
    over_axis = 0 if over_first else 1
    if a == "loop":
        if d.free_loops < 1:
            raise MoveError("no free loop to twist")
        e1, e2 = _fresh(d, 2)
        x = make_crossing(_kink_slots(e1, e2, e1, side), over_axis)
        return Diagram(d.crossings + (x,), d.free_loops - 1)
    ends = d.arc_ends()
    if a not in ends:
        raise MoveError("arc %r not in diagram" % (a,))
    e2, e3 = _fresh(d, 2)
    h = ends[a][1]
    cr = [list(c.arcs) for c in d.crossings]
    cr[h[0]][h[1]] = e3
    x = make_crossing(_kink_slots(a, e2, e3, side), over_axis)
    signs = [c.sign for c in d.crossings]
    return Diagram(list(zip(cr, signs)) + [x], d.free_loops)


def _bigon_darts(d, face):
    """The two darts (arc, side) bounding a 2-face, with crossing/slot data."""
    hface = face_of_halfedge(d)
    f = hface[face[0]]
    return tuple(sorted(
        (d.crossings[k].arcs[i], _side_of(d, d.crossings[k].arcs[i], hface, f))
        for k, i in face))


def _r2_pattern(d, face):
    """True if a 2-face is an R2 bigon: one edge over at both ends, the other under."""
    if len(face) != 2:
        return False
    partner = _slot_partner(d)
    (k1, i1), (k2, i2) = face
    if k1 == k2:
        return False
    j1 = partner[(k1, i1)]
    j2 = partner[(k2, i2)]
    p1 = {i1 % 2, j1[1] % 2}
    p2 = {i2 % 2, j2[1] % 2}
    return len(p1) == 1 and len(p2) == 1 and p1 != p2


def _r2_remove_sites(d):
    out = []
    for face in faces(d):
        if _r2_pattern(d, face):
            out.append(MoveSite(R2_REMOVE, _bigon_darts(d, face)))
    return out


def _find_face(d, darts):
    hface = face_of_halfedge(d)
    for face in faces(d):
        if len(face) != len(darts):
            continue
        try:
            got = tuple(sorted(
                (d.crossings[k].arcs[i],
                 _side_of(d, d.crossings[k].arcs[i], hface, hface[face[0]]))
                for k, i in face))
        except KeyError:
            continue
        if got == tuple(sorted(darts)):
            return face
    return None


def _apply_r2_remove(d, loc):
    face = _find_face(d, loc)
    if face is None or not _r2_pattern(d, face):
        raise MoveError("no R2 bigon at %r" % (loc,))
    return _remove_crossings(d, [face[0][0], face[1][0]])


def _r2_add_sites(d):
    out = []
    hface = face_of_halfedge(d)
    for f, face in enumerate(faces(d)):
        darts = sorted(
            (d.crossings[k].arcs[i], _side_of(d, d.crossings[k].arcs[i], hface, f))
            for k, i in face)
        for x, y in itertools.combinations(darts, 2):
            if x[0] == y[0]:
                continue
            for e_over in (True, False):
                out.append(MoveSite(R2_ADD, (x, y, e_over)))
    return out


def _apply_r2_add(d, loc):
    (e, side_e), (f, side_f), e_over = loc
    ends = d.arc_ends()
    if e not in ends or f not in ends or e == f:
        raise MoveError("R2+ needs two distinct existing arcs")
    hface = face_of_halfedge(d)
    fe = hface[ends[e][0] if side_e == "L" else ends[e][1]]
    ff = hface[ends[f][0] if side_f == "L" else ends[f][1]]
    if fe != ff:
        raise MoveError("arcs %r and %r do not share that face" % (e, f))
    se = 1 if side_e == "L" else -1
    sf = 1 if side_f == "L" else -1
    E1, E2, E3, F1, F2, F3 = _fresh(d, 6)
    # Darts run along the face boundary with the face on their left; the
    # e-dart is pushed across the f-dart, crossing it twice.  E1,E2,E3 and
    # F1,F2,F3 are the pieces of each dart in dart order.
    fwd_e = se > 0
    fwd_f = sf > 0
    # first crossing met along the e-dart: e goes S->N, f goes E->W
    k_first = [(E1, fwd_e), (F2, fwd_f), (E2, not fwd_e), (F3, not fwd_f)]
    # second crossing: e goes N->S, f goes E->W
    k_second = [(E3, not fwd_e), (F1, fwd_f), (E2, fwd_e), (F2, not fwd_f)]
    over_axis = 0 if e_over else 1
    x1 = make_crossing(k_first, over_axis)
    x2 = make_crossing(k_second, over_axis)
    # dart start/end in terms of arc tail/head
    e_start, e_end = (ends[e][0], ends[e][1]) if fwd_e else (ends[e][1], ends[e][0])
    f_start, f_end = (ends[f][0], ends[f][1]) if fwd_f else (ends[f][1], ends[f][0])
    cr = [list(c.arcs) for c in d.crossings]
    cr[e_start[0]][e_start[1]] = E1
    cr[e_end[0]][e_end[1]] = E3
    cr[f_start[0]][f_start[1]] = F1
    cr[f_end[0]][f_end[1]] = F3
    signs = [c.sign for c in d.crossings]
    return Diagram(list(zip(cr, signs)) + [x1, x2], d.free_loops)


def _triangle(d, face):
    """Analyse a 3-face; return hexagon data or None if it is not an R3 site."""
    if len(face) != 3:
        return None
    partner = _slot_partner(d)
    ks = [h[0] for h in face]
    if len(set(ks)) != 3:
        return None
    # arrival slot at each vertex: the face leaves vertex k through a-1
    verts = []
    for k, j in face:
        verts.append((k, (j + 1) % 4))
    boundary = []
    for k, a in verts:
        boundary.append((k, (a + 1) % 4))
        boundary.append((k, (a + 2) % 4))
    chords = []
    for m in range(3):
        k, s = boundary[m]
        inner_slot = (k, (s + 2) % 4)
        nk, ns = partner[inner_slot]
        end = (nk, (ns + 2) % 4)
        if nk not in ks or end != boundary[m + 3]:
            return None
        chords.append({"verts": [k, nk], "inner": d.crossings[k].arcs[inner_slot[1]],
                       "slots": [(k, s), inner_slot, (nk, ns), end]})
    overs = []
    for ch in chords:
        overs.append(sum(1 for (k, s) in ch["slots"][::2] if s % 2 == 1))
    if sorted(overs) != [0, 1, 2]:
        return None
    return {"boundary": boundary, "chords": chords, "overs": overs}


def _face_darts(d, face):
    hface = face_of_halfedge(d)
    f = hface[face[0]]
    return tuple(sorted(
        (d.crossings[k].arcs[i], _side_of(d, d.crossings[k].arcs[i], hface, f))
        for k, i in face))


def _r3_sites(d):
    out = []
    for face in faces(d):
        if _triangle(d, face) is not None:
            out.append(MoveSite(R3, _face_darts(d, face)))
    return out


def _apply_r3(d, loc):
    face = _find_face(d, loc)
    data = None if face is None else _triangle(d, face)
    if data is None:
        raise MoveError("no R3 triangle at %r" % (loc,))
    B = data["boundary"]
    chords = data["chords"]
    labels = [d.crossings[k].arcs[s] for k, s in B]
    # orientation of chord m: forward means it runs from B[m] to B[m+3]
    forward = [not slot_is_out(d.crossings[B[m][0]].sign, B[m][1]) for m in range(3)]
    # which chord is over at each old vertex (pair of chords)
    over_at = {}
    for m in range(3):
        for k, s in chords[m]["slots"][::2]:
            if s % 2 == 1:
                over_at[k] = m
    vertex_of_pair = {}
    for m, n in ((0, 1), (0, 2), (1, 2)):
        common = set(chords[m]["verts"]) & set(chords[n]["verts"])
        if len(common) != 1:
            raise MoveError("malformed triangle")
        vertex_of_pair[(m, n)] = common.pop()
    # new order of pair-crossings along each chord (reversed)
    order = {}
    for m in range(3):
        others = [n for n in range(3) if n != m]
        seq = [tuple(sorted((m, n))) for n in others]
        old_first = vertex_of_pair[seq[0]] == chords[m]["verts"][0]
        seq = seq if old_first else seq[::-1]
        order[m] = seq[::-1]
    # label seen from pair-crossing p looking toward B[m] / B[m+3] along chord m
    toward = {}
    for m in range(3):
        p1, p2 = order[m]
        seg = [labels[m], chords[m]["inner"], labels[m + 3]]
        toward[(p1, m, 0)] = seg[0]
        toward[(p1, m, 1)] = seg[1]
        toward[(p2, m, 0)] = seg[1]
        toward[(p2, m, 1)] = seg[2]
    new = list(d.crossings)
    for pair in ((0, 1), (0, 2), (1, 2)):
        dirs = []
        for m in pair:
            # direction toward B[m] has angle 60m, toward B[m+3] angle 60m+180
            dirs.append((60 * m, m, 0))
            dirs.append((60 * m + 180, m, 1))
        dirs.sort()
        slots = []
        for _, m, end in dirs:
            lab = toward[(pair, m, end)]
            incoming = (end == 0) == forward[m]
            slots.append((lab, incoming))
        over_chord = over_at[vertex_of_pair[pair]]
        over_axis = next(i for i in range(4) if dirs[i][1] == over_chord) % 2
        new[vertex_of_pair[pair]] = make_crossing(slots, over_axis)
    return Diagram(new, d.free_loops)


def find_move_sites(d):
    """All applicable Reidemeister move sites (removals, R3, then insertions)."""
    return (_r1_remove_sites(d) + _r2_remove_sites(d) + _r3_sites(d)
            + _r1_add_sites(d) + _r2_add_sites(d))


def removal_sites(d):
    """Sites that do not increase the crossing number (R1-, R2-, R3)."""
    return _r1_remove_sites(d) + _r2_remove_sites(d) + _r3_sites(d)


_APPLY = {
    R1_ADD: _apply_r1_add,
    R1_REMOVE: _apply_r1_remove,
    R2_ADD: _apply_r2_add,
    R2_REMOVE: _apply_r2_remove,
    R3: _apply_r3,
}


def apply_move(d, site):
    """Apply a move; raises MoveError if its pattern is absent."""
    if site.kind not in _APPLY:
        raise MoveError("unknown move kind %r" % (site.kind,))
    try:
        return _APPLY[site.kind](d, _to_tuples(site.location))
    except (ValueError, TypeError, KeyError) as exc:
        raise MoveError("malformed move location %r: %s" % (site.location, exc))


def inverse_site(d, site, result=None):
    """A move site on ``apply_move(d, site)`` that undoes ``site``.

    Insertions are inverted directly; removals are inverted by searching the
    insertion sites of the result for one that restores ``d`` up to relabeling.
    """
    if result is None:
        result = apply_move(d, site)
    target = canonical_form(d)
    if site.kind == R3:
        candidates = _r3_sites(result)
    elif site.kind == R1_ADD:
        candidates = _r1_remove_sites(result)
    elif site.kind == R2_ADD:
        candidates = _r2_remove_sites(result)
    elif site.kind == R1_REMOVE:
        candidates = _r1_add_sites(result)
    else:
        candidates = _r2_add_sites(result)
    for s in candidates:
        try:
            if canonical_form(apply_move(result, s)) == target:
                return s
        except MoveError:
            continue
    return None


# ---------------------------------------------------------------------------
# simplification

REDUCED = "ReducedToUnknot"
IRREDUCIBLE = "IrreducibleWithinBudget"
EXHAUSTED = "BudgetExhausted"


class SimplifyResult(namedtuple("SimplifyResult", ["result", "trace", "verdict", "states"])):
    def to_json(self):
        return {
            "verdict": self.verdict,
            "crossings": self.result.crossing_count,
            "states": self.states,
            "trace": [site_to_json(s) for s in self.trace],
        }


def simplify(d, max_crossings, max_states=100000):
    """Search for a diagram with fewer crossings using Reidemeister moves.

    States are deduplicated by canonical form and expanded in order of
    crossing count (ties by discovery order), never exceeding
    ``max_crossings``.  Returns the smallest diagram found, a replayable
    trace of moves from ``d`` to it, and a verdict.
    """
    check(d)
    if d.component_count() != 1:
        raise DomainError("simplify expects a knot diagram")
    if d.crossing_count > max_crossings:
        raise DomainError("diagram already exceeds max_crossings")
    start = canonical_form(d)
    parents = {start: (None, None)}
    diagrams = {start: d}
    counter = itertools.count()
    heap = [(d.crossing_count, next(counter), start)]
    best = start
    verdict = IRREDUCIBLE
    while heap:
        _, _, key = heapq.heappop(heap)
        cur = diagrams[key]
        if cur.crossing_count < diagrams[best].crossing_count:
            best = key
        if cur.crossing_count == 0:
            best = key
            verdict = REDUCED
            break
        if len(parents) >= max_states:
            verdict = EXHAUSTED
            break
        for s in find_move_sites(cur):
            nxt = apply_move(cur, s)
            if nxt.crossing_count > max_crossings:
                continue
            nk = canonical_form(nxt)
            if nk in parents:
                continue
            parents[nk] = (key, s)
            diagrams[nk] = nxt
            if nxt.crossing_count == 0 and nxt.free_loops == 1:
                best = nk
                verdict = REDUCED
                heap = []
                break
            heapq.heappush(heap, (nxt.crossing_count, next(counter), nk))
            if len(parents) >= max_states:
                break
        if verdict == REDUCED:
            break
    if verdict == IRREDUCIBLE and len(parents) >= max_states:
        verdict = EXHAUSTED
    trace = []
    key = best
    while parents[key][0] is not None:
        prev, s = parents[key]
        trace.append(s)
        key = prev
    trace.reverse()
    # replay on the original labels so the trace applies to ``d`` itself
    cur = d
    for s in trace:
        cur = apply_move(cur, s)
    return SimplifyResult(cur, trace, verdict, len(parents))


def move_orbit(d, max_crossings, max_states=10000):
    """Diagrams reachable from ``d`` by moves that stay within ``max_crossings``.

    Breadth-first, deduplicated by canonical form, stopping once
    ``max_states`` distinct diagrams have been collected.
    """
    start = canonical_form(d)
    seen = {start: d}
    queue = [d]
    head = 0
    while head < len(queue) and len(seen) < max_states:
        cur = queue[head]
        head += 1
        for s in find_move_sites(cur):
            nxt = apply_move(cur, s)
            if nxt.crossing_count > max_crossings:
                continue
            key = canonical_form(nxt)
            if key in seen:
                continue
            seen[key] = nxt
            queue.append(nxt)
            if len(seen) >= max_states:
                break
    return list(seen.values())
