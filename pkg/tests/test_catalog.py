from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knotsurf import catalog, diagram, invariants, seifert
from knotsurf.errors import DomainError


def report(d):
    V = seifert.seifert_matrix(d)
    return invariants.alexander(V), invariants.signature(V), invariants.determinant_invariant(V)


def test_torus_knots():
    d = catalog.torus_knot(3, 2)
    assert d.crossing_count == 3 and diagram.writhe(d) == 3
    assert seifert.genus_upper_bound(catalog.torus_knot(3, 4)) == 3
    with pytest.raises(DomainError, match="2 components"):
        catalog.torus_knot(2, 4)
    with pytest.raises(DomainError):
        catalog.torus_knot(3, 1)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (2, 7)])
def test_torus_genus_is_exact(p, q):
    d = catalog.torus_knot(p, q)
    V = seifert.seifert_matrix(d)
    lower = invariants.genus_lower_bound(invariants.alexander(V), invariants.signature(V))
    assert seifert.genus_upper_bound(d) == lower == (p - 1) * (q - 1) // 2


def test_torus_symmetry():
    assert report(catalog.torus_knot(2, 5)) == report(catalog.torus_knot(5, 2))
    assert report(catalog.torus_knot(3, 4))[:2] == report(catalog.torus_knot(4, 3))[:2]


def test_continued_fraction():
    assert catalog.continued_fraction([2, 3]) == Fraction(7, 3)
    assert catalog.continued_fraction([1, 2, 3, 4]) == Fraction(43, 30)
    with pytest.raises(DomainError):
        catalog.continued_fraction([1, -1, 1])
    with pytest.raises(DomainError):
        catalog.continued_fraction([])


def test_named_identifications():
    assert report(catalog.named("4_1"))[:2] == (invariants.alexander([[1, 1], [0, -1]]), 0)
    assert report(catalog.named("5_2"))[2] == 7
    assert report(catalog.named("8_3"))[2] == 17
    assert catalog.named("C(2)") == catalog.two_bridge([4, 4])
    assert catalog.named("unknot").crossing_count == 0
    assert diagram.writhe(catalog.named("trefoil+")) == 3
    assert report(catalog.named("trefoil+"))[1] == -2
    with pytest.raises(DomainError, match="available"):
        catalog.named("9_99")


def test_two_bridge_even_numerator_is_link():
    with pytest.raises(DomainError, match="2-component link"):
        catalog.two_bridge([2, 1, 2])
    assert catalog.rational_closure([2, 1, 2]).component_count() == 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4).filter(lambda x: x != 0), min_size=1, max_size=4))
def test_two_bridge_determinant_is_numerator(a):
    try:
        frac = catalog.continued_fraction(a)
    except DomainError:
        return
    if frac.numerator % 2 == 0:
        with pytest.raises(DomainError):
            catalog.two_bridge(a)
        return
    d = catalog.two_bridge(a)
    assert diagram.validate(d).ok and d.component_count() == 1
    assert d.crossing_count == sum(abs(x) for x in a)
    assert report(d)[2] == abs(frac.numerator)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_double_twist_amphichiral_signature(m):
    assert report(catalog.two_bridge([2 * m, 2 * m]))[1] == 0
