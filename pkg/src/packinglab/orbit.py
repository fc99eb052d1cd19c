"""Orbit enumeration: packings and superpackings by dual-limit breadth-first
search with a bend bound plus a word-length cap.

The run is saturated when no retained sphere was left unexpanded by the word
cap, i.e. every frontier child either appeared already or exceeded the bend
bound.  Saturation is the completeness certificate; a run that needed the
word cap is reported unsaturated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import PackingLabError
from .exactnum import QuadExt
from .inversive import InversiveVector
from .linalg import as_quad


class FrontierOverflow(PackingLabError):
    pass


@dataclass(frozen=True)
class WallSystem:
    walls: tuple[InversiveVector, ...]
    cluster_idx: tuple[int, ...]
    cocluster_idx: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "walls", tuple(self.walls))
        object.__setattr__(self, "cluster_idx", tuple(sorted(self.cluster_idx)))
        object.__setattr__(self, "cocluster_idx", tuple(sorted(self.cocluster_idx)))
        seen = set(self.cluster_idx) | set(self.cocluster_idx)
        if (
            len(self.cluster_idx) + len(self.cocluster_idx) != len(self.walls)
            or seen != set(range(len(self.walls)))
        ):
            raise ValueError("cluster and cocluster must partition the walls")
        if not self.cluster_idx:
            raise ValueError("cluster must be nonempty")

    @property
    def dim(self) -> int:
        return self.walls[0].dim

    def cluster_walls(self) -> list[InversiveVector]:
        return [self.walls[i] for i in self.cluster_idx]

    def cocluster_walls(self) -> list[InversiveVector]:
        return [self.walls[i] for i in self.cocluster_idx]


@dataclass(frozen=True)
class SphereRecord:
    vector: InversiveVector
    word_length: int
    parent_generator: int | None  # index into WallSystem.walls, None for seeds


@dataclass
class Packing:
    spheres: list[SphereRecord]
    saturated: bool
    bend_bound: QuadExt
    max_word: int
    generator_idx: tuple[int, ...]
    dim: int
    boundary_walls: int = 0  # spheres kept only because they are planes

    def vectors(self) -> list[InversiveVector]:
        return [rec.vector for rec in self.spheres]

    def bends_list(self) -> list[QuadExt]:
        """Sorted multiset of bends, one entry per retained sphere."""
        return sorted(rec.vector.bend for rec in self.spheres)


def _closure(
    walls: Sequence[InversiveVector],
    generator_idx: Sequence[int],
    seed_idx: Sequence[int],
    bend_bound: QuadExt,
    max_word: int,
    frontier_cap: int,
) -> Packing:
    generators = [(g, walls[g]) for g in generator_idx]
    kept: dict[tuple, SphereRecord] = {}
    seen_over_bound: set[tuple] = set()
    queue: deque[SphereRecord] = deque()
    for i in seed_idx:
        rec = SphereRecord(walls[i], 0, None)
        key = rec.vector.coords()
        if key not in kept:
            kept[key] = rec
            queue.append(rec)
    plane_count = 0
    capped = False
    while queue:
        rec = queue.popleft()
        if rec.word_length >= max_word:
            capped = True
            continue
        for g, wall in generators:
            child = rec.vector.reflect(wall)
            key = child.coords()
            if key in kept or key in seen_over_bound:
                continue
            is_plane = not child.bend
            if is_plane or abs(child.bend) <= bend_bound:
                new = SphereRecord(child, rec.word_length + 1, g)
                plane_count += is_plane
                kept[key] = new
                queue.append(new)
                if len(queue) > frontier_cap:
                    raise FrontierOverflow(f"frontier exceeded {frontier_cap} spheres")
            else:
                seen_over_bound.add(key)
    ordered = sorted(kept.values(), key=lambda r: (r.vector.bend,) + r.vector.coords())
    return Packing(
        spheres=ordered,
        saturated=not capped,
        bend_bound=bend_bound,
        max_word=max_word,
        generator_idx=tuple(generator_idx),
        dim=walls[0].dim,
        boundary_walls=plane_count,
    )


def generate_packing(
    system: WallSystem,
    bend_bound,
    max_word: int,
    frontier_cap: int = 1_000_000,
) -> Packing:
    """Orbit of the cluster under reflections through the cocluster walls.

    Cluster seeds are always retained; generated spheres are kept while
    |bend| <= bend_bound, and planes (bend 0) are kept regardless.
    """
    return _closure(
        system.walls,
        system.cocluster_idx,
        system.cluster_idx,
        as_quad(bend_bound),
        max_word,
        frontier_cap,
    )


def generate_superpacking(
    system: WallSystem,
    bend_bound,
    max_word: int,
    frontier_cap: int = 1_000_000,
) -> Packing:
    """Closure of the cluster under reflections in every wall of the system."""
    return _closure(
        system.walls,
        tuple(range(len(system.walls))),
        system.cluster_idx,
        as_quad(bend_bound),
        max_word,
        frontier_cap,
    )


@dataclass
class IntegralityReport:
    integral: bool
    witnesses: list[SphereRecord] = field(default_factory=list)


def certify_integral(packing: Packing, max_witnesses: int = 10) -> IntegralityReport:
    witnesses = []
    for rec in packing.spheres:
        if not rec.vector.bend.is_rational_integer():
            witnesses.append(rec)
            if len(witnesses) >= max_witnesses:
                break
    return IntegralityReport(integral=not witnesses, witnesses=witnesses)
