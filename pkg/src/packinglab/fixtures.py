"""Built-in wall systems, diagrams, and targets used by tests and the CLI.

Everything here is exact data: coordinates are entered as rationals or
quadratic surds and validated on construction, never floated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coxeter import GramMatrix
from .exactnum import QuadExt
from .geometrize import TargetSpec, polyhedron_target, target_from_gram
from .inversive import (
    InversiveVector,
    plane_from_normal_offset,
    sphere_from_center_radius,
)
from .orbit import WallSystem

_SQRT3 = QuadExt.sqrt(3)


def apollonian_system() -> WallSystem:
    """Strip-gasket generator set: root quadruple (-1, 2, 2, 3) as the
    cluster, its four dual circles as the cocluster.  Everything rational."""
    f = Fraction
    cluster = [
        sphere_from_center_radius((0, 0), -1),
        sphere_from_center_radius((f(1, 2), 0), f(1, 2)),
        sphere_from_center_radius((f(-1, 2), 0), f(1, 2)),
        sphere_from_center_radius((0, f(2, 3)), f(1, 3)),
    ]
    cocluster = [
        sphere_from_center_radius((0, f(1, 4)), f(1, 4)),
        sphere_from_center_radius((-1, 1), 1),
        sphere_from_center_radius((1, 1), 1),
        plane_from_normal_offset((0, -1), 0),
    ]
    return WallSystem(
        walls=tuple(cluster + cocluster),
        cluster_idx=frozenset(range(4)),
        cocluster_idx=frozenset(range(4, 8)),
    )


def hexpyr_system() -> WallSystem:
    """Hexagonal-pyramid wall system over Q(sqrt(3)): a central circle ringed
    by six, six triangle-gap circles, and an outward-oriented boundary.

    The flower is scaled so the central bend is 3, which makes every
    reflection orbit of the cluster integral.
    """
    third = Fraction(1, 3)
    s3 = _SQRT3
    apex = sphere_from_center_radius((0, 0), third)
    ring_centers = [
        (Fraction(2, 3), QuadExt(0)),
        (QuadExt(third), s3 / 3),
        (QuadExt(-third), s3 / 3),
        (Fraction(-2, 3), QuadExt(0)),
        (QuadExt(-third), -s3 / 3),
        (QuadExt(third), -s3 / 3),
    ]
    ring = [sphere_from_center_radius(c, third) for c in ring_centers]
    gap_centers = [
        (QuadExt(third), s3 / 9),
        (QuadExt(0), s3 * Fraction(2, 9)),
        (QuadExt(-third), s3 / 9),
        (QuadExt(-third), -s3 / 9),
        (QuadExt(0), -s3 * Fraction(2, 9)),
        (QuadExt(third), -s3 / 9),
    ]
    gaps = [sphere_from_center_radius(c, s3 / 9) for c in gap_centers]
    boundary = sphere_from_center_radius((0, 0), -s3 / 3)
    walls = [apex] + ring + gaps + [boundary]
    return WallSystem(
        walls=tuple(walls),
        cluster_idx=frozenset(range(7)),
        cocluster_idx=frozenset(range(7, 14)),
    )


_S2 = "2*sqrt(3)"
_S4 = "4*sqrt(3)"
_T = "2/3*sqrt(3)"

_HEXPYR_GRAM_ROWS = [
    ["-1", "1", "1", "1", "1", "1", "1", "0", "0", "0", "0", "0", "0", _T],
    ["1", "-1", "1", "5", "7", "5", "1", "0", _S2, _S4, _S4, _S2, "0", "0"],
    ["1", "1", "-1", "1", "5", "7", "5", "0", "0", _S2, _S4, _S4, _S2, "0"],
    ["1", "5", "1", "-1", "1", "5", "7", _S2, "0", "0", _S2, _S4, _S4, "0"],
    ["1", "7", "5", "1", "-1", "1", "5", _S4, _S2, "0", "0", _S2, _S4, "0"],
    ["1", "5", "7", "5", "1", "-1", "1", _S4, _S4, _S2, "0", "0", _S2, "0"],
    ["1", "1", "5", "7", "5", "1", "-1", _S2, _S4, _S4, _S2, "0", "0", "0"],
    ["0", "0", "0", _S2, _S4, _S4, _S2, "-1", "1", "5", "7", "5", "1", "1"],
    ["0", _S2, "0", "0", _S2, _S4, _S4, "1", "-1", "1", "5", "7", "5", "1"],
    ["0", _S4, _S2, "0", "0", _S2, _S4, "5", "1", "-1", "1", "5", "7", "1"],
    ["0", _S4, _S4, _S2, "0", "0", _S2, "7", "5", "1", "-1", "1", "5", "1"],
    ["0", _S2, _S4, _S4, _S2, "0", "0", "5", "7", "5", "1", "-1", "1", "1"],
    ["0", "0", _S2, _S4, _S4, _S2, "0", "1", "5", "7", "5", "1", "-1", "1"],
    [_T, "0", "0", "0", "0", "0", "0", "1", "1", "1", "1", "1", "1", "-1"],
]


def hexpyr_expected_gram() -> GramMatrix:
    """Reference Gram matrix for hexpyr_system, entered as literal data."""
    rows = [[QuadExt.parse(s) for s in row] for row in _HEXPYR_GRAM_ROWS]
    return GramMatrix.from_rows(rows)


COX6_DIAGRAM = """\
# six walls: two tangent pairs, two crossing angles, two free separations
vertices 6
1 2 tangent
3 4 tangent
2 5 angle 3
2 6 angle 4
3 6 disjoint
4 5 disjoint
"""

EISENSTEIN_DIAGRAM = """\
# five-wall subgroup diagram with a pi/3 crossing
vertices 5
1 2 tangent
2 5 angle 3
4 5 angle 4
3 4 tangent
"""


def tetrahedron_target() -> TargetSpec:
    faces = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)]
    coords = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return polyhedron_target(4, faces, coords=coords)


def _cuboctahedron_combinatorics() -> tuple[list[tuple[int, int, int]], list[tuple[int, ...]]]:
    verts = sorted(
        {
            coords
            for a in (-1, 1)
            for b in (-1, 1)
            for coords in [(a, b, 0), (a, 0, b), (0, a, b)]
        }
    )
    index = {v: i for i, v in enumerate(verts)}
    faces = []
    for axis in range(3):
        for sign in (-1, 1):
            faces.append(tuple(sorted(index[v] for v in verts if v[axis] == sign)))
    for sx in (-1, 1):
        for sy in (-1, 1):
            for sz in (-1, 1):
                tri = [index[v] for v in verts if sx * v[0] + sy * v[1] + sz * v[2] == 2]
                faces.append(tuple(sorted(tri)))
    return verts, sorted(faces)


def cuboctahedron_target() -> TargetSpec:
    verts, faces = _cuboctahedron_combinatorics()
    return polyhedron_target(len(verts), faces, coords=verts)


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # system | gram | diagram | target
    description: str
    build: Callable


REGISTRY: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture(
            "apollonian",
            "system",
            "strip gasket root quadruple with its dual circles",
            apollonian_system,
        ),
        Fixture(
            "hexpyr",
            "system",
            "14-wall hexagonal-pyramid system over Q(sqrt(3))",
            hexpyr_system,
        ),
        Fixture(
            "hexpyr-gram",
            "gram",
            "reference 14x14 Gram matrix of the hexpyr system",
            hexpyr_expected_gram,
        ),
        Fixture(
            "cox6",
            "diagram",
            "six-wall diagram with decomposable tangent pairs",
            lambda: COX6_DIAGRAM,
        ),
        Fixture(
            "eisenstein-subgroup",
            "diagram",
            "five-wall diagram whose singleton clusters sit at walls 1 and 3",
            lambda: EISENSTEIN_DIAGRAM,
        ),
        Fixture(
            "tetrahedron",
            "target",
            "tangency/orthogonality targets for the tetrahedron and its dual",
            tetrahedron_target,
        ),
        Fixture(
            "cuboctahedron",
            "target",
            "tangency/orthogonality targets for the cuboctahedron and its dual",
            cuboctahedron_target,
        ),
    ]
}
