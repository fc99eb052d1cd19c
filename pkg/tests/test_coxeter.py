"""Diagram DSL parsing and the diagram <-> Gram compilers."""

from fractions import Fraction

import pytest

from packinglab.coxeter import (
    Angle,
    BadMultiplicity,
    Disjoint,
    DuplicateEdge,
    GramMatrix,
    ParseError,
    Tangent,
    UnclassifiableEntry,
    UnrepresentableAngle,
    classify_entry,
    diagram_from_gram,
    gram_from_diagram,
    parse_diagram,
    print_diagram,
)
from packinglab.exactnum import QuadExt
from packinglab.fixtures import COX6_DIAGRAM, EISENSTEIN_DIAGRAM, hexpyr_expected_gram


def test_six_wall_diagram_edges():
    d = parse_diagram(COX6_DIAGRAM)
    assert d.vertex_count == 6
    assert d.edges == {
        (0, 1): Tangent(),
        (2, 3): Tangent(),
        (1, 4): Angle(3),
        (1, 5): Angle(4),
        (2, 5): Disjoint(),
        (3, 4): Disjoint(),
    }


def test_no_edges_means_orthogonal():
    d = parse_diagram("vertices 2\n")
    assert d.vertex_count == 2 and d.edges == {}
    g = gram_from_diagram(d)
    assert g.entries[0][1] == QuadExt(0)


def test_right_angle_multiplicity_rejected():
    with pytest.raises(BadMultiplicity):
        parse_diagram("vertices 2\n1 2 angle 2\n")


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdge):
        parse_diagram("vertices 3\n1 2 tangent\n2 1 disjoint\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_diagram("vertices 3\n1 9 tangent\n")
    assert exc.value.line == 2


def test_six_wall_gram_entries():
    g = gram_from_diagram(parse_diagram(COX6_DIAGRAM))
    e = g.entries
    assert e[0][1] == QuadExt(1)
    assert e[2][3] == QuadExt(1)
    assert e[1][4] == QuadExt(Fraction(1, 2))
    assert e[1][5] == QuadExt(0, Fraction(1, 2), 2)
    assert g.placeholders == frozenset({(2, 5), (3, 4)})
    for i in range(6):
        assert e[i][i] == QuadExt(-1)
        for j in range(6):
            assert e[i][j] == e[j][i]
    zeros = [(i, j) for i in range(6) for j in range(i + 1, 6)
             if (i, j) not in {(0, 1), (2, 3), (1, 4), (1, 5), (2, 5), (3, 4)}]
    for i, j in zeros:
        assert e[i][j] == QuadExt(0)


def test_eisenstein_subgroup_gram_pattern():
    g = gram_from_diagram(parse_diagram(EISENSTEIN_DIAGRAM))
    e = g.entries
    assert e[0][1] == QuadExt(1)
    assert e[2][3] == QuadExt(1)
    assert e[1][4] == QuadExt(Fraction(1, 2))
    assert e[3][4] == QuadExt(0, Fraction(1, 2), 2)


def test_angle_values():
    for m, expected in ((3, QuadExt(Fraction(1, 2))),
                        (4, QuadExt(0, Fraction(1, 2), 2)),
                        (6, QuadExt(0, Fraction(1, 2), 3))):
        d = parse_diagram(f"vertices 2\n1 2 angle {m}\n")
        assert gram_from_diagram(d).entries[0][1] == expected


def test_pentagon_angle_in_golden_field():
    d = parse_diagram("vertices 2\n1 2 angle 5\n")
    assert gram_from_diagram(d).entries[0][1] == QuadExt(Fraction(1, 4), Fraction(1, 4), 5)


def test_mixed_angle_fields_rejected():
    d = parse_diagram("vertices 3\n1 2 angle 5\n2 3 angle 4\n")
    with pytest.raises(UnrepresentableAngle):
        gram_from_diagram(d)


def test_print_parse_round_trip():
    for text in (COX6_DIAGRAM, EISENSTEIN_DIAGRAM, "vertices 2\n", "vertices 4\n1 2 disjoint=3/2\n3 4 angle 6\n"):
        d = parse_diagram(text)
        assert parse_diagram(print_diagram(d)) == d


def test_gram_diagram_round_trip():
    d = parse_diagram(COX6_DIAGRAM)
    g = gram_from_diagram(d)
    assert diagram_from_gram(g) == d


def test_hexpyr_gram_classifies_with_disjoint_surd():
    d = diagram_from_gram(hexpyr_expected_gram())
    kind = d.edges[(0, 13)]
    assert isinstance(kind, Disjoint)
    assert kind.value == QuadExt(0, Fraction(2, 3), 3)  # 2/sqrt(3)


def test_unclassifiable_entry_reported():
    bad = QuadExt(Fraction(3, 10))
    entries = ((QuadExt(-1), bad), (bad, QuadExt(-1)))
    with pytest.raises(UnclassifiableEntry) as exc:
        diagram_from_gram(GramMatrix(entries))
    assert (exc.value.i, exc.value.j) == (0, 1)


def test_classify_entry():
    assert classify_entry(QuadExt(0)) is None  # orthogonal, no edge
    assert classify_entry(QuadExt(1)) == Tangent()
    assert classify_entry(QuadExt(Fraction(1, 2))) == Angle(3)
    assert classify_entry(QuadExt(2)) == Disjoint(QuadExt(2))


def test_explicit_disjoint_value_survives():
    d = parse_diagram("vertices 2\n1 2 disjoint=5/3\n")
    g = gram_from_diagram(d)
    assert g.entries[0][1] == QuadExt(Fraction(5, 3))
    assert g.placeholders == frozenset()


def test_comments_and_blank_lines_ignored():
    text = "# heading\n\nvertices 2\n  # indented comment\n1 2 tangent\n"
    assert parse_diagram(text).edges == {(0, 1): Tangent()}
