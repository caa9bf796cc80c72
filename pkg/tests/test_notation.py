import pytest
from hypothesis import given, settings, strategies as st

from knotsurf import diagram, notation
from knotsurf.diagram import Crossing, Diagram
from knotsurf.errors import DomainError, NotationError
from knotsurf.notation import BraidWord, GAUSS, PD

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_parse_pd_trefoil():
    d = notation.parse_pd(TREFOIL_PD)
    assert d.crossing_count == 3
    assert diagram.writhe(d) == -3
    rep = diagram.validate(d)
    assert rep.ok and (rep.vertices, rep.edges, rep.faces) == (3, 6, 5)


def test_parse_pd_separators_and_free_loops():
    d = notation.parse_pd("X(1,4,2,5); X(3,6,4,1);X(5,2,6,3) O O")
    assert d.crossing_count == 3 and d.free_loops == 2
    empty = notation.parse_pd("")
    assert empty.crossing_count == 0 and empty.free_loops == 1
    assert notation.parse_pd("O O").free_loops == 2


@pytest.mark.parametrize("text,kind", [
    ("X(1,2,3)", "Syntax"),
    ("X(1,4,2,5) Y", "Syntax"),
    ("X(1,a,2,5)", "Syntax"),
    ("X(1,4,2,5) X(3,6,4,1)", "ArcIncidence"),
    ("X(1,1,1,2)", "ArcIncidence"),
    ("X(2,4,1,5) X(3,6,4,1) X(5,2,6,3)", "OrientationConflict"),
])
def test_parse_pd_errors(text, kind):
    with pytest.raises(NotationError) as exc:
        notation.parse_pd(text)
    assert exc.value.kind == kind
    assert exc.value.as_dict()["kind"] == kind


def test_parse_pd_over_strand_conflict():
    # the over-strand 4/6 is not a consecutive pair of its component
    with pytest.raises(NotationError) as exc:
        notation.parse_pd("X(1,6,2,4) X(3,6,4,1) X(5,2,6,3)")
    assert exc.value.kind in ("OrientationConflict", "ArcIncidence")


def test_error_position_points_at_token():
    with pytest.raises(NotationError) as exc:
        notation.parse_pd("X(1,4,2,5) junk")
    assert exc.value.position == 11


def test_gauss_trefoil():
    d = notation.parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    assert d.crossing_count == 3 and diagram.writhe(d) == 3
    assert diagram.validate(d).ok


def test_gauss_single_kink():
    d = notation.parse_gauss("O1+ U1+")
    assert d.crossings == (Crossing((1, 1, 2, 2), 1),)
    assert diagram.validate(d).faces == 3


@pytest.mark.parametrize("text,kind", [
    ("O1+ U1+ O1+", "ArcIncidence"),
    ("O1+ U2+", "ArcIncidence"),
    ("O1+ U1-", "OrientationConflict"),
    ("O1+ X1+", "Syntax"),
])
def test_gauss_errors(text, kind):
    with pytest.raises(NotationError) as exc:
        notation.parse_gauss(text)
    assert exc.value.kind == kind


def test_gauss_rejects_links():
    hopf = notation.braid_closure(BraidWord(2, [1, 1]))
    with pytest.raises(DomainError):
        notation.serialize(hopf, GAUSS)


def test_braid_parse_and_errors():
    b = notation.parse_braid("3: 1 -2 1")
    assert b == BraidWord(3, (1, -2, 1))
    assert str(b) == "3: 1 -2 1"
    for text, kind in (("3 1 2", "Syntax"), ("2: 1 x", "Syntax"), ("2: 2", "OutOfRange"),
                       ("2: 0", "Syntax"), ("0:", "OutOfRange")):
        with pytest.raises(NotationError) as exc:
            notation.parse_braid(text)
        assert exc.value.kind == kind


def test_braid_closures():
    d = notation.braid_closure(BraidWord(2, [1, 1, 1]))
    assert diagram.writhe(d) == 3 and d.component_count() == 1
    d = notation.braid_closure(BraidWord(3, [1, -2, 1, -2]))
    assert d.crossing_count == 4 and d.component_count() == 1
    d = notation.braid_closure(BraidWord(2, []))
    assert d.crossing_count == 0 and d.free_loops == 2
    d = notation.braid_closure(BraidWord(3, [1, 1]))
    assert d.component_count() == 3 and d.free_loops == 1


def test_braid_permutation_matches_components():
    b = BraidWord(4, [1, 2, 3])
    assert sorted(b.permutation()) == [0, 1, 2, 3]
    assert notation.braid_closure(b).component_count() == 1


braid_words = st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])),
             min_size=1, max_size=8)))


@settings(max_examples=80, deadline=None)
@given(braid_words)
def test_closures_are_valid_and_round_trip(nw):
    n, w = nw
    d = notation.braid_closure(BraidWord(n, w))
    assert diagram.validate(d).ok
    again = notation.parse_pd(notation.serialize(d, PD))
    assert diagram.canonical_hash(again) == diagram.canonical_hash(d)
    if d.component_count() == 1:
        g = notation.parse_gauss(notation.serialize(d, GAUSS))
        assert diagram.canonical_hash(g) == diagram.canonical_hash(d)


def test_serialize_unknots():
    assert notation.serialize(Diagram((), 1)) == ""
    assert notation.serialize(Diagram((), 2)) == "O O"
    assert notation.serialize(Diagram((), 1), GAUSS) == ""
