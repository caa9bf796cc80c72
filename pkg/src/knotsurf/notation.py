"""Text notations for diagrams: PD codes, signed Gauss codes and braid words.

PD code
    ``X(a,b,c,d) X(...) ...`` separated by whitespace and/or semicolons.
    ``a`` is the incoming under-strand and ``b, c, d`` follow
    counterclockwise.  Within each component, arc ``k`` flows into the
    next-larger label of that component, wrapping around at its maximum.
    A trailing ``O`` token stands for a crossingless circle; the empty text
    is the round unknot.
Gauss code
    Entries ``O<k><s>`` / ``U<k><s>`` with ``s`` in ``+``/``-``, e.g.
    ``O1+ U2+ O3+ U1+ O2+ U3+``.  Each crossing occurs once over, once under.
Braid word
    ``n: i1 i2 ...`` with ``n`` the strand count and each nonzero letter
    ``i`` meaning the generator sigma_|i| (inverse if negative).
"""

import re
from collections import namedtuple

from .diagram import Crossing, Diagram, normalized
from .errors import DomainError, NotationError

PD = "PD"
GAUSS = "Gauss"


class BraidWord(namedtuple("BraidWord", ["strand_count", "letters"])):
    """A braid on ``strand_count`` strands given by signed generator indices."""

    def __new__(cls, strand_count, letters=()):
        letters = tuple(int(x) for x in letters)
        if strand_count < 1:
            raise DomainError("a braid needs at least one strand")
        for x in letters:
            if x == 0 or abs(x) > strand_count - 1:
                raise DomainError("letter %d out of range for %d strands" % (x, strand_count))
        return super().__new__(cls, int(strand_count), letters)

    def __str__(self):
        return "%d: %s" % (self.strand_count, " ".join(str(x) for x in self.letters))

    def permutation(self):
        """Strand permutation: position i at the top ends at position perm[i]."""
        pos = list(range(self.strand_count))
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        perm = [0] * self.strand_count
        for p, strand in enumerate(pos):
            perm[strand] = p
        return perm


# ---------------------------------------------------------------------------
# PD codes

_PD_TOKEN = re.compile(r"\s*(?:;\s*)*")
_PD_CROSSING = re.compile(r"X\s*\(([^)]*)\)")


def _pd_tokens(text):
    """Yield (position, kind, payload) for crossings and free-loop tokens."""
    pos = 0
    n = len(text)
    while True:
        m = _PD_TOKEN.match(text, pos)
        pos = m.end()
        if pos >= n:
            return
        if text[pos] == "O" and (pos + 1 == n or text[pos + 1] in " \t\r\n;"):
            yield pos, "O", None
            pos += 1
            continue
        m = _PD_CROSSING.match(text, pos)
        if not m:
            raise NotationError("Syntax", pos, "expected X(a,b,c,d) or O")
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4:
            raise NotationError(
                "Syntax", pos, "crossing needs 4 arc labels, got %d" % len(parts))
        labels = []
        for p in parts:
            if not p.isdigit() or int(p) <= 0:
                raise NotationError("Syntax", pos, "arc label %r is not a positive integer" % p)
            labels.append(int(p))
        yield pos, "X", tuple(labels)
        pos = m.end()


def parse_pd(text):
    """Parse a PD code into a Diagram (labels as given)."""
    entries = []
    loops = 0
    for pos, kind, payload in _pd_tokens(text):
        if kind == "O":
            loops += 1
        else:
            entries.append((pos, payload))
    if not entries and loops == 0:
        return Diagram((), 1)
    where = {}
    for k, (pos, arcs) in enumerate(entries):
        for i, a in enumerate(arcs):
            where.setdefault(a, []).append((k, i))
    for a in sorted(where):
        if len(where[a]) != 2:
            k = where[a][-1][0]
            raise NotationError(
                "ArcIncidence", entries[k][0],
                "arc %d occurs %d times, expected 2" % (a, len(where[a])))

    parent = {a: a for a in where}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, (a, b, c, d) in entries:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    members = {}
    for a in where:
        members.setdefault(find(a), []).append(a)
    succ = {}
    for labels in members.values():
        labels.sort()
        for j, a in enumerate(labels):
            succ[a] = labels[(j + 1) % len(labels)]

    # A component with exactly two arcs satisfies the successor rule in
    # both directions.  Its direction is fixed by an under passage if it
    # has one (the arc leaving the under passage enters the other one);
    # otherwise the lower label leaves the earliest crossing it meets.
    leaving_over = {}
    for root, labels in members.items():
        if len(labels) != 2:
            continue
        unders = [arcs for _, arcs in entries if find(arcs[0]) == root]
        if unders:
            leaving_over[root] = ("under", unders[0][0])
        else:
            first = min(k for k, (_, arcs) in enumerate(entries) if find(arcs[1]) == root)
            leaving_over[root] = ("first", first)

    crossings = []
    for k, (pos, (a, b, c, d)) in enumerate(entries):
        if succ[a] != c:
            raise NotationError(
                "OrientationConflict", pos,
                "under-strand %d -> %d does not follow the arc order" % (a, c))
        fwd = succ[d] == b  # over-strand runs d -> b
        bwd = succ[b] == d  # over-strand runs b -> d
        if fwd and bwd and b != d:
            how, data = leaving_over[find(b)]
            if how == "under":
                out_arc = data
            else:
                lo = min(b, d)
                out_arc = lo if k == data else max(b, d)
            fwd = b == out_arc
            bwd = not fwd
        if fwd:
            sign = 1
        elif bwd:
            sign = -1
        else:
            raise NotationError(
                "OrientationConflict", pos,
                "over-strand %d/%d does not follow the arc order" % (b, d))
        crossings.append(Crossing((a, b, c, d), sign))
    return Diagram(crossings, loops)


def serialize(d, fmt=PD):
    """Serialize a diagram to PD or Gauss text (labels are normalized)."""
    if fmt == PD:
        if not d.crossings:
            return " ".join(["O"] * d.free_loops) if d.free_loops != 1 else ""
        nd = normalized(d)
        text = " ".join("X(%d,%d,%d,%d)" % c.arcs for c in nd.crossings)
        if d.free_loops:
            text += " " + " ".join(["O"] * d.free_loops)
        return text
    if fmt == GAUSS:
        if d.component_count() != 1:
            raise DomainError("Gauss code needs a knot; diagram has %d components"
                              % d.component_count())
        if not d.crossings:
            return ""
        return _gauss_text(d)
    raise DomainError("unknown format %r" % (fmt,))


def _gauss_text(d):
    cyc = d.cycles()[0]
    ends = d.arc_ends()
    # number crossings by first visit
    order = {}
    entries = []
    for a in cyc:
        k, i = ends[a][1]
        if k not in order:
            order[k] = len(order) + 1
        entries.append((k, i))
    out = []
    for k, i in entries:
        role = "U" if i == 0 else "O"
        sign = "+" if d.crossings[k].sign > 0 else "-"
        out.append("%s%d%s" % (role, order[k], sign))
    # start the code at the first entry so the first arc is the one after it
    return " ".join(out)


# ---------------------------------------------------------------------------
# Gauss codes

_GAUSS_ENTRY = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss(text):
    """Parse a signed Gauss code of a knot into a Diagram."""
    entries = []
    pos = 0
    n = len(text)
    ws = re.compile(r"[\s,;]*")
    while True:
        pos = ws.match(text, pos).end()
        if pos >= n:
            break
        m = _GAUSS_ENTRY.match(text, pos)
        if not m:
            raise NotationError("Syntax", pos, "expected O<k>+/- or U<k>+/-")
        entries.append((pos, m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1))
        pos = m.end()
    if not entries:
        return Diagram((), 1)
    seen = {}
    for j, (p, role, k, s) in enumerate(entries):
        slot = seen.setdefault(k, {})
        if role in slot:
            raise NotationError(
                "ArcIncidence", p, "crossing %d has two %s entries" % (k, role))
        slot[role] = (j, s, p)
    for k, slot in seen.items():
        if len(slot) != 2:
            p = next(iter(slot.values()))[2]
            missing = "U" if "O" in slot else "O"
            raise NotationError(
                "ArcIncidence", p, "crossing %d lacks a %s entry" % (k, missing))
        if slot["O"][1] != slot["U"][1]:
            raise NotationError(
                "OrientationConflict", slot["U"][2],
                "crossing %d has inconsistent signs" % k)
    m = len(entries)

    def arc_after(j):
        return (j % m) + 1

    crossings = []
    for k in sorted(seen, key=lambda k: min(seen[k]["O"][0], seen[k]["U"][0])):
        o, s, _ = seen[k]["O"]
        u, _, _ = seen[k]["U"]
        under_in, under_out = arc_after(u - 1), arc_after(u)
        over_in, over_out = arc_after(o - 1), arc_after(o)
        if s > 0:
            arcs = (under_in, over_out, under_out, over_in)
        else:
            arcs = (under_in, over_in, under_out, over_out)
        crossings.append(Crossing(arcs, s))
    return Diagram(crossings)


# ---------------------------------------------------------------------------
# braids

_BRAID = re.compile(r"\s*(\d+)\s*:(.*)\Z", re.S)


def parse_braid(text):
    """Parse ``n: i1 i2 ...`` into a BraidWord."""
    m = _BRAID.match(text)
    if not m:
        raise NotationError("Syntax", 0, "expected 'n: i1 i2 ...'")
    n = int(m.group(1))
    if n < 1:
        raise NotationError("OutOfRange", m.start(1), "strand count must be at least 1")
    letters = []
    body_start = m.start(2)
    for tok in re.finditer(r"\S+", m.group(2)):
        p = body_start + tok.start()
        t = tok.group(0).rstrip(",")
        if not re.fullmatch(r"[+-]?\d+", t):
            raise NotationError("Syntax", p, "letter %r is not an integer" % t)
        x = int(t)
        if x == 0:
            raise NotationError("Syntax", p, "letter 0 is not a generator")
        if abs(x) >= n:
            raise NotationError(
                "OutOfRange", p, "letter %d needs |letter| <= %d" % (x, n - 1))
        letters.append(x)
    return BraidWord(n, letters)


def braid_closure(b):
    """Closure of a braid as a Diagram; strands run downward.

    For the letter sigma_i the strands at positions i and i+1 cross; for a
    positive letter the strand coming from the left passes under.
    """
    n = b.strand_count
    label = 1
    top = list(range(1, n + 1))
    cur = list(top)
    label = n + 1
    touched = [False] * n
    crossings = []
    for x in b.letters:
        i = abs(x) - 1
        touched[i] = touched[i + 1] = True
        left_in, right_in = cur[i], cur[i + 1]
        left_out, right_out = label, label + 1
        label += 2
        if x > 0:
            arcs, sign = (left_in, right_out, left_out, right_in), 1
        else:
            arcs, sign = (right_in, left_in, right_out, left_out), -1
        crossings.append([list(arcs), sign])
        # the strand from the left moves right and vice versa
        cur[i], cur[i + 1] = right_out, left_out
    # close: the bottom end at position p is the same arc as the top at p
    merge = {}
    for p in range(n):
        if cur[p] != top[p]:
            merge[cur[p]] = top[p]

    def resolve(a):
        while a in merge:
            a = merge[a]
        return a

    out = [Crossing(tuple(resolve(a) for a in arcs), s) for arcs, s in crossings]
    free = sum(1 for p in range(n) if not touched[p])
    return normalized(Diagram(out, free)) if out else Diagram((), free)


def to_text(d, fmt=PD):
    return serialize(d, fmt)
