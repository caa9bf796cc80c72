"""Acceptance criteria 1-11, each at exact tolerance.

Every test carries ``@pytest.mark.criterion(n)``; the conftest hook prints
one PASS/FAIL line per criterion at the end of the run.
"""

import itertools
import random
from fractions import Fraction

import pytest

from conftest import descartes_signature, eigen_signature, fox_alexander, random_knot_closures
from knotsurf import catalog, diagram, invariants, notation, seifert, surfaces
from knotsurf.cli import invariant_report
from knotsurf.invariants import LaurentPoly

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def poly(*coeffs):
    return LaurentPoly.from_coefficients(coeffs)


def same_up_to_unit(p, q):
    """p == ±t^m q."""
    return p.canonical() == q.canonical()


def pipeline(d):
    V = seifert.seifert_matrix(d)
    return invariants.alexander(V), invariants.signature(V)


def braid(text):
    return notation.braid_closure(notation.parse_braid(text))


# ---------------------------------------------------------------------------
# 1. reference values for small knots through the full pipeline

@pytest.mark.criterion(1)
def test_reference_invariants_through_pipeline():
    unknot = diagram.Diagram((), 1)
    t23 = braid("2: 1 1 1")
    t2m3 = braid("2: -1 -1 -1")
    fig8 = catalog.named("4_1")
    pd_trefoil = notation.parse_pd(TREFOIL_PD)

    d_u, s_u = pipeline(unknot)
    d_t, s_t = pipeline(t23)
    d_m, s_m = pipeline(t2m3)
    d_8, s_8 = pipeline(fig8)
    d_pd, _ = pipeline(pd_trefoil)

    assert same_up_to_unit(d_u, poly(1))
    assert same_up_to_unit(d_t, poly(1, -1, 1))
    assert same_up_to_unit(d_m, poly(1, -1, 1))
    assert same_up_to_unit(d_pd, poly(1, -1, 1))
    assert same_up_to_unit(d_8, poly(-1, 3, -1))
    assert (s_u, s_m, s_8, s_t) == (0, 2, 0, -2)
    # independent oracle: Fox calculus on the knot group
    for d, delta in ((t23, d_t), (t2m3, d_m), (fig8, d_8), (pd_trefoil, d_pd)):
        assert fox_alexander(d) == delta


# ---------------------------------------------------------------------------
# 2. four reference Seifert matrices give U, T(2,-3), 4_1, T(2,3) in order

@pytest.mark.criterion(2)
def test_reference_seifert_matrices():
    mats = [[[1, 1], [0, 0]], [[1, 1], [0, 1]], [[1, 1], [0, -1]], [[-1, 1], [0, -1]]]
    expected = [  # U, T(2,-3), 4_1, T(2,3)
        (LaurentPoly.monomial(1, 1), 0),
        (poly(1, -1, 1), 2),
        (poly(-1, 3, -1), 0),
        (poly(1, -1, 1), -2),
    ]
    for V, (delta, sigma) in zip(mats, expected):
        assert same_up_to_unit(invariants.alexander(V), delta)
        assert invariants.signature(V) == sigma


# ---------------------------------------------------------------------------
# 3. genus certification

@pytest.mark.criterion(3)
def test_genus_certification():
    for name in ("trefoil+", "trefoil-", "4_1"):
        r = invariant_report(name, catalog.named(name))
        assert r["genus_lower"] == r["seifert"]["genus_upper"] == 1
        assert r["genus_exact"] == 1
    r = invariant_report("unknot", catalog.named("unknot"))
    assert r["genus_lower"] == r["seifert"]["genus_upper"] == r["genus_exact"] == 0
    zero = [n for n, d in catalog.catalog_knots().items()
            if invariant_report(n, d).get("genus_exact") == 0]
    assert zero == ["unknot"]


# ---------------------------------------------------------------------------
# 4. chi = d - b

def _kinked_unknots(n):
    """Every diagram reachable from the round unknot by n kink insertions."""
    level = {diagram.canonical_form(diagram.Diagram((), 1)): diagram.Diagram((), 1)}
    for _ in range(n):
        nxt = {}
        for d in level.values():
            for s in diagram.find_move_sites(d):
                if s.kind == diagram.R1_ADD:
                    e = diagram.apply_move(d, s)
                    nxt[diagram.canonical_form(e)] = e
        level = nxt
    return list(level.values())


@pytest.mark.criterion(4)
def test_euler_characteristic_d_minus_b():
    round_unknot = seifert.build_surface(diagram.Diagram((), 1))
    assert round_unknot.euler == 1

    # an unknot diagram whose Seifert surface has chi = -1 (genus 1):
    # the closure of s1 s1 s1^-1, two discs and three bands
    d = braid("2: 1 1 -1")
    assert d.component_count() == 1
    assert diagram.simplify(d, 3).verdict == diagram.REDUCED
    s = seifert.build_surface(d)
    assert (s.discs, len(s.bands), s.euler) == (2, 3, -1)

    # torus knots: q discs and p(q-1) bands
    for p, q in ((2, 3), (3, 2), (3, 4), (2, 5), (5, 3)):
        s = seifert.build_surface(catalog.torus_knot(p, q))
        assert s.euler == s.discs - len(s.bands) == q - p * (q - 1)


@pytest.mark.criterion(4)
def test_two_crossing_kinked_unknots_have_chi_one():
    """Every 2-crossing R1-kinked unknot gives chi = 1 (each kink adds a disc and a band)."""
    ds = _kinked_unknots(2)
    assert ds and all(d.crossing_count == 2 for d in ds)
    for d in ds:
        s = seifert.build_surface(d)
        assert s.euler == s.discs - len(s.bands) == 1


@pytest.mark.criterion(4)
@pytest.mark.xfail(strict=True, reason="impossible as stated: a 2-crossing knot diagram has "
                   "at least two Seifert circles (the Seifert graph is bipartite), so chi >= 0")
def test_literal_two_crossing_unknot_with_chi_minus_one():
    assert any(seifert.build_surface(d).euler == -1 for d in _kinked_unknots(2))


# ---------------------------------------------------------------------------
# 5. S-equivalence invariance

def _random_unimodular(rng, n):
    P = invariants.identity(n)
    for _ in range(rng.randint(0, 3 * n)):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            P = [[-x if r == 0 else x for x in row] for r, row in enumerate(P)]
            continue
        c = rng.randint(-2, 2)
        P = [row[:] for row in P]
        for row in P:
            row[j] += c * row[i]
        if rng.random() < 0.3:
            for row in P:
                row[i], row[j] = row[j], row[i]
    return P


def _seifert_pool():
    pool = [seifert.seifert_matrix(d) for d in catalog.catalog_knots().values()]
    pool += [seifert.seifert_matrix(d) for _, d in random_knot_closures(30, seed=5)]
    return [V for V in pool if V]


@pytest.mark.criterion(5)
def test_s_equivalence_invariance():
    rng = random.Random(2024)
    pool = _seifert_pool()
    for trial in range(200):
        if trial % 2:
            V = rng.choice(pool)
        else:
            n = rng.randint(1, 5)
            V = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        n = len(V)
        a = [rng.randint(-3, 3) for _ in range(n)]
        P = _random_unimodular(rng, n)
        delta, sigma = invariants.alexander(V), invariants.signature(V)
        for kind in (invariants.ROW_TYPE, invariants.COL_TYPE):
            W = invariants.enlarge(V, a, kind)
            assert invariants.alexander(W) == delta
            assert invariants.signature(W) == sigma
            R = invariants.reduce(W)
            assert R == V
            assert invariants.alexander(R) == delta and invariants.signature(R) == sigma
        C = invariants.congruent(V, P)
        assert invariants.alexander(C) == delta
        assert invariants.signature(C) == sigma


# ---------------------------------------------------------------------------
# 6. connected sums

@pytest.mark.criterion(6)
def test_connected_sum_laws():
    knots = catalog.catalog_knots()
    data = {}
    for n, d in knots.items():
        V = seifert.seifert_matrix(d)
        data[n] = (V, invariants.alexander(V), invariants.signature(V),
                   seifert.genus_upper_bound(d))
    for (n1, (V1, a1, s1, g1)), (n2, (V2, a2, s2, g2)) in itertools.product(data.items(), repeat=2):
        B = invariants.block_sum(V1, V2)
        assert invariants.alexander(B) == (a1 * a2).canonical()
        assert invariants.signature(B) == s1 + s2
        ds = diagram.connected_sum(knots[n1], knots[n2])
        assert seifert.genus_upper_bound(ds) == g1 + g2
    # the diagram-level pipeline agrees with the matrix-level laws
    for n1, n2 in (("trefoil+", "trefoil+"), ("trefoil+", "trefoil-"), ("4_1", "5_2"),
                   ("trefoil-", "4_1")):
        delta, sigma = pipeline(diagram.connected_sum(knots[n1], knots[n2]))
        assert delta == (data[n1][1] * data[n2][1]).canonical()
        assert sigma == data[n1][2] + data[n2][2]


# ---------------------------------------------------------------------------
# 7. signatures of T(2,2k+1) and of the double-twist knots

@pytest.mark.criterion(7)
def test_torus_and_double_twist_signatures():
    for k in range(1, 6):
        assert pipeline(catalog.torus_knot(2, 2 * k + 1))[1] == -2 * k
        assert pipeline(braid("2: " + " ".join(["1"] * (2 * k + 1))))[1] == -2 * k
    for m in range(1, 4):
        assert pipeline(catalog.two_bridge([2 * m, 2 * m]))[1] == 0
        assert pipeline(catalog.named("C(%d)" % m))[1] == 0


# ---------------------------------------------------------------------------
# 8. surface classifier

@pytest.mark.criterion(8)
def test_surface_euler_characteristics():
    assert surfaces.euler_characteristic(surfaces.parse_word("a a^-1")) == 2
    assert surfaces.euler_characteristic(surfaces.parse_word("a b a^-1 b^-1")) == 0
    for g in range(0, 6):
        p = surfaces.canonical_presentation(g)
        assert surfaces.euler_characteristic(p) == 2 - 2 * g
        assert surfaces.classify(p) == surfaces.SurfaceClass(True, 2 - 2 * g, g)


@pytest.mark.criterion(8)
def test_modifications_preserve_chi_and_orientability():
    rng = random.Random(7)
    starts = [surfaces.canonical_presentation(g) for g in range(3)]
    starts += [surfaces.parse_word(w) for w in ("a a", "a a b b", "a b a b'", "a b c a' b' c'")]
    moves = [(m, d) for m in (surfaces.M1, surfaces.M2, surfaces.M3)
             for d in (surfaces.FORWARD, surfaces.BACKWARD)]
    applied = 0
    p = None
    while applied < 100:
        if p is None or rng.random() < 0.1 or len(p.symbols()) > 12:
            p = rng.choice(starts)
        which, direction = rng.choice(moves)
        sites = surfaces.applicable_sites(p, which, direction)
        if not sites:
            continue
        before = (surfaces.euler_characteristic(p), surfaces.is_orientable(p))
        p = surfaces.apply_modification(p, which, direction, rng.choice(sites))
        assert (surfaces.euler_characteristic(p), surfaces.is_orientable(p)) == before
        applied += 1


# ---------------------------------------------------------------------------
# 9. Reidemeister engine

@pytest.mark.criterion(9)
def test_move_inverse_round_trips():
    samples = [catalog.named("trefoil+"), catalog.named("4_1"), braid("3: 1 -2 1 1"),
               _kinked_unknots(1)[0], braid("2: 1 1 -1")]
    checked = 0
    for d in samples:
        h = diagram.canonical_hash(d)
        for s in diagram.find_move_sites(d):
            r = diagram.apply_move(d, s)
            inv = diagram.inverse_site(d, s, r)
            assert inv is not None, s
            assert diagram.canonical_hash(diagram.apply_move(r, inv)) == h
            checked += 1
    assert checked > 100


@pytest.mark.criterion(9)
def test_simplify_kinked_unknots():
    rng = random.Random(9)
    for n in range(1, 9):
        for _ in range(3):
            d = diagram.Diagram((), 1)
            for _ in range(n):
                d = diagram.apply_move(d, rng.choice(
                    [s for s in diagram.find_move_sites(d) if s.kind == diagram.R1_ADD]))
            assert d.crossing_count == n
            res = diagram.simplify(d, n)
            assert res.verdict == diagram.REDUCED
            assert res.result.crossing_count == 0
            replay = d
            for s in res.trace:
                replay = diagram.apply_move(replay, s)
            assert diagram.canonical_hash(replay) == diagram.canonical_hash(res.result)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("name,max_crossings", [("trefoil+", 6), ("4_1", 6)])
def test_invariants_constant_on_move_orbit(name, max_crossings):
    d = catalog.named(name)
    expected = pipeline(d)
    orbit = diagram.move_orbit(d, max_crossings, 10000)
    assert 1 < len(orbit) <= 10000
    for e in orbit:
        assert pipeline(e) == expected


@pytest.mark.criterion(9)
def test_trefoil_irreducible_within_budget():
    res = diagram.simplify(catalog.named("trefoil+"), 5)
    assert res.verdict == diagram.IRREDUCIBLE
    assert res.result.crossing_count == 3


# ---------------------------------------------------------------------------
# 10. structural invariants

@pytest.mark.criterion(10)
def test_seifert_matrix_structure():
    diagrams = list(catalog.catalog_knots().values())
    diagrams += [d for _, d in random_knot_closures(100, seed=10, max_crossings=8)]
    for d in diagrams:
        V = seifert.seifert_matrix(d)
        n = len(V)
        assert invariants.int_det([[V[i][j] - V[j][i] for j in range(n)] for i in range(n)]) == 1
        assert invariants.alexander(V)(1) in (1, -1)


@pytest.mark.criterion(10)
def test_signature_matches_eigenvalue_oracle():
    rng = random.Random(11)
    for trial in range(1000):
        n = rng.randint(0, 8)
        A = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                A[i][j] = A[j][i] = rng.randint(-4, 4)
        if trial % 4 == 0 and n:
            # low-rank cases exercise the zero-pivot path
            v = [rng.randint(-2, 2) for _ in range(n)]
            A = [[v[i] * v[j] for j in range(n)] for i in range(n)]
        s = invariants.symmetric_signature(A)
        assert s == eigen_signature(A)
        if trial % 20 == 0:
            assert s == descartes_signature(A)


# ---------------------------------------------------------------------------
# 11. 2-bridge fractions

@pytest.mark.criterion(11)
def test_two_bridge_fractions():
    for m in range(1, 5):
        assert catalog.continued_fraction([2 * m, 2 * m]) == Fraction(4 * m * m + 1, 2 * m)
    for a in ([2, 3], [4, 4]):
        d = catalog.two_bridge(a)
        assert diagram.validate(d).ok and d.component_count() == 1
        V = seifert.seifert_matrix(d)
        delta, sigma = invariants.alexander(V), invariants.signature(V)
        assert delta(1) in (1, -1)
        assert abs(sigma) <= 2 * seifert.genus_upper_bound(d)
        assert fox_alexander(d) == delta
        assert invariants.determinant_invariant(V) == catalog.continued_fraction(a).numerator
    delta, sigma = pipeline(catalog.two_bridge([2, 2]))
    assert same_up_to_unit(delta, poly(-1, 3, -1)) and sigma == 0
