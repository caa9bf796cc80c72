"""Seifert's algorithm and Seifert matrices.

Smoothing every crossing along the orientation gives disjoint Seifert
circles.  Each circle bounds a disc, discs nested inside others are stacked
above them, and every crossing becomes a half-twisted band joining the two
circles it touches.  The result is an orientable surface bounded by the
link with Euler characteristic ``discs - bands``.

The first homology of the surface is generated by the fundamental cycles
of a spanning tree in the Seifert graph (circles as vertices, bands as
edges).  Entry ``(i, j)`` of the Seifert matrix is the linking number of
cycle ``i`` with the push-off of cycle ``j`` along the positive normal.

Linking numbers are counted on an explicit projection model of the
curves.  On each disc a curve runs along a private lane of a thin collar
just inside the boundary circle: it enters along a radial spoke, follows
the circle's orientation at its lane depth, and leaves along another
spoke.  Lanes are indexed so that cycle ``i`` uses lane ``2i`` and its
push-off ``2i + 1``; deeper lanes have larger indices and the transverse
position of a curve inside a band grows with its lane index.  The
projected crossings between two curves are then

* one crossing inside every band both curves traverse (the half twist);
* crossings between a lane and a deeper curve's spokes on a shared disc;
* crossings between a lane and the portion of a band that folds back over
  the collar of a disc (bands running to a circle nested inside it).

The linking number is read off twice, once from the crossings where the
first curve is over and once from those where it is under.  The two
counts must agree; a mismatch raises ``RuntimeError``.
"""

from collections import deque, namedtuple

from .diagram import check, face_of_halfedge, faces
from .errors import DomainError

# outgoing slot reached from each incoming slot by the oriented smoothing
_SMOOTH = {1: {0: 1, 3: 2}, -1: {0: 3, 1: 2}}


class SeifertCircles(namedtuple("SeifertCircles", [
        "arcs", "corners", "height", "ccw", "under_circle", "over_circle", "free"])):
    """Seifert circles of a diagram.

    ``arcs[c]`` lists the arcs of circle ``c`` in orientation order and
    ``corners[c][j]`` is the crossing reached at the end of ``arcs[c][j]``.
    ``height[c]`` is the nesting height, ``ccw[c]`` tells whether the circle
    runs counterclockwise with respect to the chosen outer face.
    ``under_circle[k]`` / ``over_circle[k]`` are the circles that meet at
    crossing ``k`` on its under-in and over-in side.  ``free`` counts the
    crossingless components, which are circles of their own.
    """

    @property
    def count(self):
        return len(self.arcs) + self.free

    def heights(self):
        return list(self.height) + [0] * self.free


def _trace_circles(d):
    ends = d.arc_ends()
    seen = {}
    arcs_of = []
    corners_of = []
    for a in d.arcs():
        if a in seen:
            continue
        idx = len(arcs_of)
        arcs, corners = [], []
        b = a
        while b not in seen:
            seen[b] = idx
            arcs.append(b)
            k, i = ends[b][1]
            corners.append(k)
            b = d.crossings[k].arcs[_SMOOTH[d.crossings[k].sign][i]]
        arcs_of.append(arcs)
        corners_of.append(corners)
    under = []
    over = []
    for k, c in enumerate(d.crossings):
        oi = 3 if c.sign > 0 else 1
        under.append(seen[c.arcs[0]])
        over.append(seen[c.arcs[oi]])
    return arcs_of, corners_of, under, over, seen


def default_outer_faces(d):
    """Outer face per connected piece: the largest face, ties by lowest arc label."""
    fs = faces(d)
    hface = face_of_halfedge(d)
    ends = d.arc_ends()
    from .diagram import _graph_components
    out = []
    for comp in _graph_components(d):
        ids = sorted({hface[(k, i)] for k in comp for i in range(4)})

        def key(f):
            darts = []
            for k, i in fs[f]:
                a = d.crossings[k].arcs[i]
                darts.append((a, 0 if ends[a][0] == (k, i) else 1))
            return (-len(fs[f]), min(darts))
        out.append(min(ids, key=key))
    return out


def seifert_circles(d, outer_face=None):
    """Smooth every crossing along the orientation and nest the resulting circles.

    ``outer_face`` optionally selects the face (index into ``faces(d)``)
    placed at infinity; by default the largest face is used.  For split
    diagrams each connected piece uses its own default outer face.
    """
    check(d)
    if not d.crossings:
        return SeifertCircles([], [], [], [], [], [], d.free_loops)
    arcs_of, corners_of, under, over, circle_of = _trace_circles(d)
    fs = faces(d)
    hface = face_of_halfedge(d)
    ends = d.arc_ends()

    # regions: faces joined through the channel left by each smoothing
    parent = list(range(len(fs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, c in enumerate(d.crossings):
        if c.sign > 0:
            f1, f2 = hface[(k, 1)], hface[(k, 3)]
        else:
            f1, f2 = hface[(k, 0)], hface[(k, 2)]
        parent[find(f1)] = find(f2)

    left = []
    right = []
    for arcs in arcs_of:
        t, h = ends[arcs[0]]
        left.append(find(hface[t]))
        right.append(find(hface[h]))

    outers = default_outer_faces(d)
    if outer_face is not None:
        if not 0 <= outer_face < len(fs):
            raise DomainError("outer face %r does not exist" % (outer_face,))
        comp_faces = [set(find(hface[(k, i)]) for k in comp for i in range(4))
                      for comp in _components(d)]
        outers = [outer_face if find(outer_face) in cf else o
                  for o, cf in zip(outers, comp_faces)]

    # breadth-first search over the region/circle tree from each outer region
    n = len(arcs_of)
    region_circles = {}
    for c in range(n):
        region_circles.setdefault(left[c], []).append(c)
        region_circles.setdefault(right[c], []).append(c)
    height = [None] * n
    ccw = [None] * n
    depth = {}
    for o in outers:
        root = find(o)
        depth[root] = 0
        queue = deque([root])
        while queue:
            r = queue.popleft()
            for c in sorted(region_circles.get(r, [])):
                if height[c] is not None:
                    continue
                inner = right[c] if left[c] == r else left[c]
                height[c] = depth[r]
                ccw[c] = left[c] == inner
                depth[inner] = depth[r] + 1
                queue.append(inner)
    return SeifertCircles(arcs_of, corners_of, height, ccw, under, over, d.free_loops)


def _components(d):
    from .diagram import _graph_components
    return _graph_components(d)


class SurfaceModel(namedtuple("SurfaceModel", [
        "discs", "bands", "euler", "genus", "boundary_components", "heights"])):
    """Disc-and-band surface: ``bands`` holds (disc_i, disc_j, sign) per crossing."""

    def to_json(self):
        return {
            "discs": self.discs,
            "bands": [{"i": i, "j": j, "sign": s} for i, j, s in self.bands],
            "euler": self.euler,
            "genus": self.genus,
            "boundary_components": self.boundary_components,
            "heights": list(self.heights),
        }


def build_surface(d):
    """Seifert surface of ``d`` as discs (one per circle) joined by bands (one per crossing)."""
    sc = seifert_circles(d)
    discs = sc.count
    bands = [(sc.under_circle[k], sc.over_circle[k], c.sign)
             for k, c in enumerate(d.crossings)]
    euler = discs - len(bands)
    # connected pieces of the surface = components of the Seifert graph
    parent = list(range(discs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, _ in bands:
        parent[find(i)] = find(j)
    pieces = len({find(x) for x in range(discs)})
    boundary = d.component_count()
    twice_genus = 2 * pieces - euler - boundary
    if twice_genus < 0 or twice_genus % 2:
        raise RuntimeError("inconsistent surface: chi=%d, pieces=%d, boundary=%d"
                           % (euler, pieces, boundary))
    return SurfaceModel(discs, bands, euler, twice_genus // 2, boundary, sc.heights())


def _require_knot(d):
    check(d)
    if d.component_count() != 1:
        raise DomainError("expected a knot, diagram has %d components" % d.component_count())


def genus_upper_bound(d):
    """Genus of the surface produced by Seifert's algorithm (knots only)."""
    _require_knot(d)
    return build_surface(d).genus


class SeifertGraph(namedtuple("SeifertGraph", ["vertices", "edges", "tree", "cycles"])):
    """Seifert graph with a spanning tree and its fundamental cycles.

    ``edges[k] = (under_circle, over_circle, sign)`` for crossing ``k``;
    ``tree`` lists the tree edge indices; each cycle is a list of
    ``(edge, direction)`` with direction +1 when traversed from the
    under-circle to the over-circle.
    """

    def to_json(self):
        return {
            "vertices": self.vertices,
            "edges": [{"i": i, "j": j, "sign": s} for i, j, s in self.edges],
            "tree": list(self.tree),
            "cycles": [[{"edge": e, "direction": dr} for e, dr in cyc] for cyc in self.cycles],
        }


def _graph_from_circles(d, sc):
    n = sc.count
    edges = [(sc.under_circle[k], sc.over_circle[k], c.sign)
             for k, c in enumerate(d.crossings)]
    adj = {v: [] for v in range(n)}
    for k, (u, o, _) in enumerate(edges):
        adj[u].append((k, o))
        adj[o].append((k, u))
    # breadth-first spanning tree from circle 0, edges scanned in crossing order
    parent_edge = {0: None} if n else {}
    order = deque([0] if n else [])
    tree = []
    while order:
        v = order.popleft()
        for k, w in sorted(adj[v]):
            if w not in parent_edge:
                parent_edge[w] = (k, v)
                tree.append(k)
                order.append(w)
    tree_set = set(tree)

    def path_to_root(v):
        out = [v]
        while parent_edge[v] is not None:
            v = parent_edge[v][1]
            out.append(v)
        return out

    def step(k, frm):
        u, o, _ = edges[k]
        return (k, 1 if frm == u else -1)

    cycles = []
    for k, (u, o, _) in enumerate(edges):
        if k in tree_set:
            continue
        # band k from u to o, then back to u through the tree
        pu, po = path_to_root(u), path_to_root(o)
        common = set(pu) & set(po)
        lca = next(v for v in po if v in common)
        cyc = [(k, 1)]
        v = o
        while v != lca:
            e, p = parent_edge[v]
            cyc.append(step(e, v))
            v = p
        down = []
        v = u
        while v != lca:
            e, p = parent_edge[v]
            down.append(step(e, p))
            v = p
        cyc.extend(reversed(down))
        cycles.append(cyc)
    return SeifertGraph(n, edges, tree, cycles)


def seifert_graph(d):
    """Seifert graph of a knot diagram with its deterministic cycle basis."""
    _require_knot(d)
    return _graph_from_circles(d, seifert_circles(d))


def _in_interval(p, a, b):
    """Whether p lies strictly inside the cyclic interval running from a to b."""
    if a < b:
        return a < p < b
    return p > a or p < b


class _Curve:
    """A cycle drawn on the surface at a given lane."""

    def __init__(self, cycle, lane, edges, sc, corner_index):
        self.lane = lane
        self.bands = {}
        self.visits = {}
        steps = list(cycle)
        for idx, (k, dr) in enumerate(steps):
            self.bands[k] = dr
            u, o, _ = edges[k]
            arrive = o if dr > 0 else u
            nk, ndr = steps[(idx + 1) % len(steps)]
            pin = self._pos(k, arrive, u, corner_index)
            pout = self._pos(nk, arrive, edges[nk][0], corner_index)
            self.visits[arrive] = (pin, pout, k, nk)

    def _pos(self, k, circle, under_circle, corner_index):
        # along the under-circle the band is crossed in increasing transverse
        # order, along the over-circle in decreasing order
        off = self.lane if circle == under_circle else -self.lane
        return (corner_index[circle][k], off)


def _linking(X, Y, edges, ccw, inward):
    """lk(X, Y) where Y is a push-off; returns (from X-over crossings, from Y-over)."""
    x_over = 0
    y_over = 0
    for k, dx in X.bands.items():
        if k in Y.bands:
            s = -edges[k][2] * dx * Y.bands[k]
            if X.lane > Y.lane:
                x_over += s
            else:
                y_over += s
    for c, (xi, xo, bxi, bxo) in X.visits.items():
        if c not in Y.visits:
            continue
        yi, yo, byi, byo = Y.visits[c]
        n = 1 if ccw[c] else -1
        contrib = []  # (sign, y_is_over)
        if X.lane < Y.lane:
            if _in_interval(yi, xi, xo):
                contrib.append((-1, n > 0))
            if _in_interval(yo, xi, xo):
                contrib.append((1, n > 0))
        else:
            if _in_interval(xi, yi, yo):
                contrib.append((1, n > 0))
            if _in_interval(xo, yi, yo):
                contrib.append((-1, n > 0))
        if inward(c, byi) and _in_interval(yi, xi, xo):
            contrib.append((n, True))
        if inward(c, byo) and _in_interval(yo, xi, xo):
            contrib.append((-n, True))
        if inward(c, bxi) and _in_interval(xi, yi, yo):
            contrib.append((n, False))
        if inward(c, bxo) and _in_interval(xo, yi, yo):
            contrib.append((-n, False))
        for s, y_is_over in contrib:
            if y_is_over:
                y_over += s
            else:
                x_over += s
    return x_over, y_over


def seifert_matrix(d, outer_face=None):
    """Seifert matrix V with V[i][j] = lk(a_i, a_j^+) for a knot diagram."""
    _require_knot(d)
    if not d.crossings:
        return []
    sc = seifert_circles(d, outer_face)
    g = _graph_from_circles(d, sc)
    corner_index = []
    for corners in sc.corners:
        corner_index.append({k: j for j, k in enumerate(corners)})

    def inward(c, k):
        u, o, s = g.edges[k]
        left_side = (s > 0) if c == u else (s < 0)
        return left_side == sc.ccw[c]

    m = len(g.cycles)
    curves = [_Curve(cyc, 2 * i, g.edges, sc, corner_index) for i, cyc in enumerate(g.cycles)]
    pushed = [_Curve(cyc, 2 * i + 1, g.edges, sc, corner_index)
              for i, cyc in enumerate(g.cycles)]
    V = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            a, b = _linking(curves[i], pushed[j], g.edges, sc.ccw, inward)
            if a != b:
                raise RuntimeError(
                    "linking count mismatch for cycles %d, %d: %d vs %d" % (i, j, a, b))
            V[i][j] = a
    return V
