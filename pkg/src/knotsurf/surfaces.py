"""Closed surfaces given by polygonal presentations.

A presentation is a list of faces; each face is a word of signed edge
symbols read around a polygon.  Every symbol occurs exactly twice, and the
two occurrences are glued.  Text syntax: whitespace-separated symbols,
a trailing apostrophe (or ``^-1``) marks an inverse, faces are separated
by ``;`` -- e.g. ``a b a' b'`` is the torus.
"""

import re
from collections import Counter, namedtuple

from .errors import DomainError, NotationError

FORWARD = "forward"
BACKWARD = "backward"
M1, M2, M3 = "M1", "M2", "M3"


class SurfaceClass(namedtuple("SurfaceClass", ["orientable", "euler", "genus"])):
    """Orientability, Euler characteristic and (orientable) genus."""

    def to_json(self):
        return {"orientable": self.orientable, "euler": self.euler, "genus": self.genus}


class PolygonalPresentation:
    """Faces as tuples of (symbol, exponent) letters."""

    __slots__ = ("faces",)

    def __init__(self, faces):
        self.faces = tuple(tuple((str(s), int(e)) for s, e in f) for f in faces)
        for f in self.faces:
            for _, e in f:
                if e not in (1, -1):
                    raise DomainError("exponents must be +1 or -1")

    def __eq__(self, other):
        return isinstance(other, PolygonalPresentation) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return "PolygonalPresentation(%r)" % (str(self),)

    def __str__(self):
        return "; ".join(
            " ".join(s + ("'" if e < 0 else "") for s, e in f) for f in self.faces)

    def symbols(self):
        return sorted({s for f in self.faces for s, _ in f})

    def counts(self):
        return Counter(s for f in self.faces for s, _ in f)


_SYMBOL = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)('|\^-1|⁻¹)?\Z")


def parse_word(text):
    """Parse ``a b a' b'; c c'`` into a PolygonalPresentation."""
    faces = []
    offset = 0
    for chunk in text.split(";"):
        letters = []
        for m in re.finditer(r"\S+", chunk):
            tok = _SYMBOL.match(m.group(0))
            if not tok:
                raise NotationError("Syntax", offset + m.start(),
                                    "bad edge symbol %r" % m.group(0))
            letters.append((tok.group(1), -1 if tok.group(2) else 1))
        if not letters:
            raise NotationError("Syntax", offset, "empty face")
        faces.append(letters)
        offset += len(chunk) + 1
    return PolygonalPresentation(faces)


def _as_presentation(p):
    if isinstance(p, PolygonalPresentation):
        return p
    if isinstance(p, str):
        return parse_word(p)
    return PolygonalPresentation(p)


def check_closed(p):
    """Raise DomainError unless every symbol occurs exactly twice and no face is empty."""
    p = _as_presentation(p)
    if not p.faces:
        raise DomainError("presentation has no faces")
    for f in p.faces:
        if not f:
            raise DomainError("empty face")
    bad = {s: n for s, n in p.counts().items() if n != 2}
    if bad:
        raise DomainError("not a closed surface: symbol counts %s"
                          % ", ".join("%s=%d" % kv for kv in sorted(bad.items())))
    return p


def vertex_count(p):
    """Number of vertex classes, by identifying the corners at the ends of glued edges."""
    p = check_closed(p)
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ends = {}
    for fi, f in enumerate(p.faces):
        n = len(f)
        for i, (s, e) in enumerate(f):
            start, end = (fi, i), (fi, (i + 1) % n)
            tail, head = (start, end) if e > 0 else (end, start)
            find(start)
            find(end)
            ends.setdefault(s, []).append((tail, head))
    for (t1, h1), (t2, h2) in ends.values():
        parent[find(t1)] = find(t2)
        parent[find(h1)] = find(h2)
    return len({find(x) for x in list(parent)})


def euler_characteristic(p):
    """V - A + C with V from corner identification."""
    p = check_closed(p)
    return vertex_count(p) - len(p.symbols()) + len(p.faces)


def is_orientable(p):
    """Whether faces can be oriented so each symbol appears once with each exponent."""
    p = check_closed(p)
    occ = {}
    for fi, f in enumerate(p.faces):
        for s, e in f:
            occ.setdefault(s, []).append((fi, e))
    adj = {fi: [] for fi in range(len(p.faces))}
    for (f1, e1), (f2, e2) in occ.values():
        if f1 == f2:
            if e1 == e2:
                return False
            continue
        # orientations o1, o2 must satisfy o1*e1 == -o2*e2
        rel = -e1 * e2
        adj[f1].append((f2, rel))
        adj[f2].append((f1, rel))
    orient = {}
    for start in adj:
        if start in orient:
            continue
        orient[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for g, rel in adj[f]:
                want = orient[f] * rel
                if g not in orient:
                    orient[g] = want
                    stack.append(g)
                elif orient[g] != want:
                    return False
    return True


def is_connected(p):
    p = check_closed(p)
    where = {}
    for fi, f in enumerate(p.faces):
        for s, _ in f:
            where.setdefault(s, set()).add(fi)
    seen = {0}
    stack = [0]
    while stack:
        f = stack.pop()
        for s, _ in p.faces[f]:
            for g in where[s]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
    return len(seen) == len(p.faces)


def classify(p):
    """SurfaceClass of a closed presentation (genus only for orientable surfaces)."""
    p = check_closed(p)
    chi = euler_characteristic(p)
    orientable = is_orientable(p)
    if orientable:
        if chi % 2:
            raise RuntimeError("orientable presentation with odd Euler characteristic %d" % chi)
        if not is_connected(p):
            raise DomainError("presentation describes a disconnected surface")
        return SurfaceClass(True, chi, (2 - chi) // 2)
    return SurfaceClass(False, chi, None)


def canonical_presentation(g):
    """Sphere ``a a'`` for g = 0, otherwise the 4g-gon commutator word."""
    if int(g) != g or g < 0:
        raise DomainError("genus must be a nonnegative integer")
    if g == 0:
        return PolygonalPresentation([[("a", 1), ("a", -1)]])
    if g == 1:
        return PolygonalPresentation([[("a", 1), ("b", 1), ("a", -1), ("b", -1)]])
    word = []
    for i in range(1, g + 1):
        a, b = "a%d" % i, "b%d" % i
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return PolygonalPresentation([word])


# ---------------------------------------------------------------------------
# modifications

def _fresh_symbol(p):
    used = set(p.symbols())
    i = 1
    while "e%d" % i in used:
        i += 1
    return "e%d" % i


def _inverse_face(f):
    return [(s, -e) for s, e in reversed(f)]


def applicable_sites(p, which, direction):
    """Enumerate the sites where a modification applies."""
    p = check_closed(p)
    out = []
    if which == M1 and direction == FORWARD:
        for fi, f in enumerate(p.faces):
            n = len(f)
            if n < 3:
                continue
            for i in range(n):
                (s1, e1), (s2, e2) = f[i], f[(i + 1) % n]
                if s1 == s2 and e1 == -e2:
                    out.append((fi, i))
    elif which == M1 and direction == BACKWARD:
        for fi, f in enumerate(p.faces):
            for i in range(len(f) + 1):
                out.append((fi, i))
    elif which == M2 and direction == FORWARD:
        for fi, f in enumerate(p.faces):
            n = len(f)
            for i in range(n):
                for j in range(i + 1, n + 1):
                    if 0 < j - i < n:
                        out.append((fi, i, j))
    elif which == M2 and direction == BACKWARD:
        where = {}
        for fi, f in enumerate(p.faces):
            for s, _ in f:
                where.setdefault(s, []).append(fi)
        for s in p.symbols():
            if where[s][0] != where[s][1]:
                out.append((s,))
    elif which == M3 and direction == FORWARD:
        out = [(s,) for s in p.symbols()]
    elif which == M3 and direction == BACKWARD:
        for x in p.symbols():
            for z in p.symbols():
                if x != z and _m3_pattern(p, x, z):
                    out.append((x, z))
    else:
        raise DomainError("unknown modification %r/%r" % (which, direction))
    return out


def _m3_pattern(p, x, z):
    """Each occurrence of x reads x z (exponent +1) or z' x' (exponent -1)."""
    found = 0
    for f in p.faces:
        n = len(f)
        for i, (s, e) in enumerate(f):
            if s != x:
                continue
            if n < 2:
                return False
            if e > 0:
                if f[(i + 1) % n] != (z, 1):
                    return False
            else:
                if f[(i - 1) % n] != (z, -1):
                    return False
            found += 1
    zcount = sum(1 for f in p.faces for s, _ in f if s == z)
    return found == 2 and zcount == 2


def apply_modification(p, which, direction, site):
    """Apply modification M1, M2 or M3 forward or backward at ``site``.

    Sites:
      M1 forward  ``(face, i)``: remove the adjacent pair at positions i, i+1.
      M1 backward ``(face, i)``: insert a new pair ``y y'`` before position i.
      M2 forward  ``(face, i, j)``: cut the face between corners i < j.
      M2 backward ``(symbol,)``: glue the two faces sharing that symbol.
      M3 forward  ``(symbol,)``: subdivide the edge into two.
      M3 backward ``(x, z)``: merge the subdivided edge ``x z`` back into x.
    """
    p = check_closed(p)
    faces = [list(f) for f in p.faces]
    site = tuple(site)
    if which == M1 and direction == FORWARD:
        fi, i = site
        f = faces[fi]
        n = len(f)
        if n < 3:
            raise DomainError("face too short for M1")
        j = (i + 1) % n
        if not (f[i][0] == f[j][0] and f[i][1] == -f[j][1]):
            raise DomainError("no adjacent pair x x' at %r" % (site,))
        faces[fi] = [f[k] for k in range(n) if k not in (i, j)]
    elif which == M1 and direction == BACKWARD:
        fi, i = site
        if not 0 <= i <= len(faces[fi]):
            raise DomainError("position out of range")
        y = _fresh_symbol(p)
        faces[fi][i:i] = [(y, 1), (y, -1)]
    elif which == M2 and direction == FORWARD:
        fi, i, j = site
        f = faces[fi]
        n = len(f)
        if not (0 <= i < j <= n and 0 < j - i < n):
            raise DomainError("corners %r do not split the face" % (site,))
        y = _fresh_symbol(p)
        faces[fi:fi + 1] = [f[i:j] + [(y, 1)], f[j:] + f[:i] + [(y, -1)]]
    elif which == M2 and direction == BACKWARD:
        (y,) = site
        hits = [(fi, i) for fi, f in enumerate(faces) for i, (s, _) in enumerate(f) if s == y]
        if len(hits) != 2 or hits[0][0] == hits[1][0]:
            raise DomainError("symbol %r does not join two different faces" % (y,))
        (f1, i1), (f2, i2) = hits
        w1 = faces[f1][i1 + 1:] + faces[f1][:i1 + 1]
        w2 = faces[f2][i2 + 1:] + faces[f2][:i2 + 1]
        if w1[-1][1] == w2[-1][1]:
            w2 = _inverse_face(w2)
            w2 = w2[1:] + w2[:1]
        glued = w1[:-1] + w2[:-1]
        if not glued:
            raise DomainError("gluing would leave an empty face")
        faces = [f for k, f in enumerate(faces) if k not in (f1, f2)]
        faces.insert(min(f1, f2), glued)
    elif which == M3 and direction == FORWARD:
        (x,) = site
        if x not in p.symbols():
            raise DomainError("symbol %r not present" % (x,))
        z = _fresh_symbol(p)
        new = []
        for f in faces:
            g = []
            for s, e in f:
                if s != x:
                    g.append((s, e))
                elif e > 0:
                    g += [(x, 1), (z, 1)]
                else:
                    g += [(z, -1), (x, -1)]
            new.append(g)
        faces = new
    elif which == M3 and direction == BACKWARD:
        x, z = site
        if not _m3_pattern(p, x, z):
            raise DomainError("edge %r is not followed by %r at both occurrences" % (x, z))
        faces = [[(s, e) for s, e in f if s != z] for f in faces]
    else:
        raise DomainError("unknown modification %r/%r" % (which, direction))
    return check_closed(PolygonalPresentation(faces))
