"""Shipped fixtures must satisfy their own stated invariants."""

from packinglab import (
    gram_from_diagram,
    gram_matrix,
    parse_diagram,
    target_from_gram,
    verify_realization,
)
from packinglab.fixtures import (
    COX6_DIAGRAM,
    EISENSTEIN_DIAGRAM,
    REGISTRY,
    apollonian_system,
    cuboctahedron_target,
    hexpyr_expected_gram,
    hexpyr_system,
    tetrahedron_target,
)


def test_registry_names_and_kinds():
    kinds = {name: f.kind for name, f in REGISTRY.items()}
    assert kinds == {
        "apollonian": "system",
        "hexpyr": "system",
        "hexpyr-gram": "gram",
        "cox6": "diagram",
        "eisenstein-subgroup": "diagram",
        "tetrahedron": "target",
        "cuboctahedron": "target",
    }
    for f in REGISTRY.values():
        assert f.build() is not None


def test_diagram_fixtures_parse():
    assert len(parse_diagram(COX6_DIAGRAM).edges) == 6
    assert len(parse_diagram(EISENSTEIN_DIAGRAM).edges) == 4


def test_apollonian_system_is_a_tetrahedron_realization():
    system = apollonian_system()
    report = verify_realization(list(system.walls), tetrahedron_target())
    assert report.ok, report.mismatches


def test_hexpyr_system_matches_reference_gram():
    assert gram_matrix(list(hexpyr_system().walls)) == hexpyr_expected_gram()


def test_hexpyr_system_verifies_against_gram_target():
    system = hexpyr_system()
    spec = target_from_gram(hexpyr_expected_gram())
    report = verify_realization(list(system.walls), spec)
    assert report.ok, report.mismatches


def test_targets_are_consistent():
    tetra = tetrahedron_target()
    assert tetra.wall_count == 8
    cubo = cuboctahedron_target()
    assert cubo.wall_count == 26
    # every wall appears in at least one constraint
    for spec in (tetra, cubo):
        touched = {i for i, _, _ in spec.exact_pairs()} | {
            j for _, j, _ in spec.exact_pairs()
        }
        assert touched == set(range(spec.wall_count))


def test_diagram_tangencies_land_as_unit_entries():
    gram = gram_from_diagram(parse_diagram(COX6_DIAGRAM))
    assert str(gram.entries[0][1]) == "1"
    assert str(gram.entries[2][3]) == "1"
