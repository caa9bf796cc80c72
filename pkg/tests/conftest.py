"""Shared fixtures, independent oracles and the acceptance summary hook."""

import random

import numpy as np
import pytest
import sympy

from knotsurf.diagram import Diagram
from knotsurf.invariants import LaurentPoly
from knotsurf.notation import BraidWord, braid_closure

_t = sympy.symbols("t")


def fox_alexander(d):
    """Alexander polynomial from the Wirtinger presentation via Fox calculus.

    Independent of Seifert surfaces: builds the Alexander matrix of the
    knot group (one relation per crossing, one generator per over-arc),
    deletes a row and column and takes a sympy determinant.
    """
    if not d.crossings:
        return LaurentPoly.constant(1)
    parent = {a: a for a in d.arcs()}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for k, c in enumerate(d.crossings):
        oi, oo, _, _ = d.strands(k)
        parent[find(c.arcs[oi])] = find(c.arcs[oo])
    gens = sorted({find(a) for a in d.arcs()})
    idx = {g: i for i, g in enumerate(gens)}
    m = sympy.zeros(len(d.crossings), len(gens))
    for r, c in enumerate(d.crossings):
        oi, _, _, _ = d.strands(r)
        k, i, j = idx[find(c.arcs[oi])], idx[find(c.arcs[0])], idx[find(c.arcs[2])]
        if c.sign > 0:
            entries = [(k, 1 - _t), (i, _t), (j, -1)]
        else:
            entries = [(k, _t - 1), (i, 1), (j, -_t)]
        for col, v in entries:
            m[r, col] += v
    minor = m[1:, 1:]
    if minor.shape[0] == 0:
        return LaurentPoly.constant(1)
    p = sympy.Poly(sympy.expand(minor.det()), _t)
    return LaurentPoly({e[0]: int(cf) for e, cf in zip(p.monoms(), p.coeffs())}).canonical()


def eigen_signature(S):
    """Signature from floating-point eigenvalues (numpy)."""
    if len(S) == 0:
        return 0
    w = np.linalg.eigvalsh(np.array(S, dtype=float))
    tol = 1e-7 * max(1.0, float(np.max(np.abs(w))))
    return int(np.sum(w > tol) - np.sum(w < -tol))


def descartes_signature(S):
    """Exact signature from sign changes of the characteristic polynomial.

    All roots of a real symmetric matrix's characteristic polynomial are
    real, so Descartes' rule counts positive and negative roots exactly.
    """
    n = len(S)
    if n == 0:
        return 0
    x = sympy.symbols("x")
    p = sympy.Matrix(S).charpoly(x).all_coeffs()
    while p and p[-1] == 0:
        p.pop()

    def changes(cs):
        cs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(cs, cs[1:]) if (a > 0) != (b > 0))

    pos = changes(p)
    deg = len(p) - 1
    neg = changes([c * (-1) ** (deg - i) for i, c in enumerate(p)])
    return pos - neg


def random_knot_closures(count, seed, max_crossings=8, max_strands=4):
    """Deterministic list of braid-closure knot diagrams with 1..max_crossings crossings."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_strands)
        length = rng.randint(1, max_crossings)
        word = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]
        d = braid_closure(BraidWord(n, word))
        if d.component_count() == 1 and d.crossings:
            out.append((word, d))
    return out


@pytest.fixture
def unknot():
    return Diagram((), 1)


# ---------------------------------------------------------------------------
# acceptance summary: one PASS/FAIL line per criterion

_CRITERIA = {}
_XFAILS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when not in ("setup", "call") or not hasattr(report, "criterion"):
        return
    n = report.criterion
    ok = _CRITERIA.get(n, True)
    if hasattr(report, "wasxfail"):
        # an expected failure documents a sub-claim that cannot hold as stated
        _XFAILS.setdefault(n, []).append(report.nodeid.split("::")[-1])
    elif report.failed or (report.when == "call" and report.skipped):
        ok = False
    _CRITERIA[n] = ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        line = "criterion %2d: %s" % (n, "PASS" if _CRITERIA[n] else "FAIL")
        if n in _XFAILS:
            line += "  (expected failure, impossible as literally stated: %s)" % ", ".join(_XFAILS[n])
        terminalreporter.write_line(line)
