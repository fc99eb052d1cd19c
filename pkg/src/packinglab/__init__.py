"""Exact-arithmetic toolkit for crystallographic circle and sphere packings."""

from .arithmetic import (
    VinbergVerdict,
    bends_conjugate,
    bends_vector,
    dual_form,
    gram_matrix,
    vinberg_test,
)
from .coxeter import (
    Angle,
    CoxeterDiagram,
    Disjoint,
    GramMatrix,
    Tangent,
    classify_entry,
    diagram_from_gram,
    gram_from_diagram,
    parse_diagram,
    print_diagram,
)
from .errors import PackingLabError
from .exactnum import DiscMismatch, QuadExt, compare, is_rational_integer
from .geometrize import (
    Ambiguous,
    DisjointFree,
    Exact,
    FloatWallSystem,
    GaugeDeficient,
    NoCandidate,
    NoConvergence,
    TargetSpec,
    VerificationReport,
    algebraic_guess,
    cluster_split,
    guess_walls,
    polyhedron_target,
    realize,
    target_from_gram,
    verify_realization,
)
from .inversive import (
    InversiveVector,
    ReflectionMatrix,
    inversive_product,
    plane_from_normal_offset,
    q_matrix,
    reflection_matrix,
    sphere_from_center_radius,
)
from .localglobal import ResidueOrbit, missing_bends, residue_orbit
from .orbit import (
    Packing,
    SphereRecord,
    WallSystem,
    certify_integral,
    generate_packing,
    generate_superpacking,
)
from .render import Viewport, render_svg
from .structure import (
    Decomposition,
    check_decomposition,
    enumerate_decompositions,
)

__version__ = "0.1.0"

__all__ = [
    "Ambiguous",
    "Angle",
    "CoxeterDiagram",
    "Decomposition",
    "DiscMismatch",
    "Disjoint",
    "DisjointFree",
    "Exact",
    "FloatWallSystem",
    "GaugeDeficient",
    "GramMatrix",
    "InversiveVector",
    "NoCandidate",
    "NoConvergence",
    "Packing",
    "PackingLabError",
    "QuadExt",
    "ReflectionMatrix",
    "ResidueOrbit",
    "SphereRecord",
    "Tangent",
    "TargetSpec",
    "VerificationReport",
    "VinbergVerdict",
    "Viewport",
    "WallSystem",
    "algebraic_guess",
    "bends_conjugate",
    "bends_vector",
    "certify_integral",
    "check_decomposition",
    "classify_entry",
    "cluster_split",
    "compare",
    "diagram_from_gram",
    "dual_form",
    "enumerate_decompositions",
    "generate_packing",
    "generate_superpacking",
    "gram_from_diagram",
    "gram_matrix",
    "guess_walls",
    "inversive_product",
    "is_rational_integer",
    "missing_bends",
    "parse_diagram",
    "plane_from_normal_offset",
    "polyhedron_target",
    "print_diagram",
    "q_matrix",
    "realize",
    "reflection_matrix",
    "render_svg",
    "residue_orbit",
    "sphere_from_center_radius",
    "target_from_gram",
    "verify_realization",
    "vinberg_test",
]
