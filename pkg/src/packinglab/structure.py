"""Cluster/cocluster decompositions of a wall collection.

A split C | C-hat of the walls is admissible when every pair inside C is
tangent or disjoint and every pair across the split is orthogonal, tangent
or disjoint.  Dihedral angle pairs must therefore sit entirely inside C-hat.
Pairs inside C-hat are unconstrained.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .coxeter import Angle, Disjoint, GramMatrix, Tangent, classify_entry, UnclassifiableEntry
from .errors import PackingLabError


class InvalidDecomposition(PackingLabError):
    pass


class TooManyWalls(PackingLabError):
    pass


@dataclass(frozen=True)
class Decomposition:
    cluster: frozenset[int]
    cocluster: frozenset[int]

    def labels(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """1-based labels, for presentation."""
        return (
            tuple(i + 1 for i in sorted(self.cluster)),
            tuple(i + 1 for i in sorted(self.cocluster)),
        )

    def __str__(self):
        c, ch = self.labels()
        fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
        return f"C={fmt(c)} C^={fmt(ch)}"


@dataclass
class DecompositionReport:
    valid: bool
    violations: list[tuple[int, int, str]] = field(default_factory=list)


def _classified(gram: GramMatrix):
    """Edge kinds of every off-diagonal pair; raises UnclassifiableEntry."""
    k = gram.size
    kinds = {}
    for i in range(k):
        for j in range(i + 1, k):
            if gram.is_placeholder(i, j):
                kinds[(i, j)] = Disjoint(None)
                continue
            try:
                kinds[(i, j)] = classify_entry(gram.entries[i][j])
            except UnclassifiableEntry:
                raise UnclassifiableEntry(i, j, gram.entries[i][j]) from None
    return kinds


def check_decomposition(gram: GramMatrix, decomposition: Decomposition) -> DecompositionReport:
    k = gram.size
    cluster, cocluster = decomposition.cluster, decomposition.cocluster
    if not cluster:
        raise InvalidDecomposition("cluster must be nonempty")
    if cluster & cocluster or (cluster | cocluster) != frozenset(range(k)):
        raise InvalidDecomposition("cluster and cocluster must partition the walls")
    kinds = _classified(gram)
    violations = []
    for (i, j), kind in kinds.items():
        in_c = (i in cluster) + (j in cluster)
        if in_c == 2 and not isinstance(kind, (Tangent, Disjoint)):
            what = "orthogonal" if kind is None else f"angle pi/{kind.m}"
            violations.append((i, j, f"cluster pair is {what}"))
        elif in_c == 1 and isinstance(kind, Angle):
            violations.append((i, j, f"cross pair meets at angle pi/{kind.m}"))
    return DecompositionReport(valid=not violations, violations=violations)


def iter_decompositions(gram: GramMatrix, wall_cap: int = 30) -> Iterator[Decomposition]:
    """Yield admissible decompositions, clusters in lexicographic order."""
    k = gram.size
    if k > wall_cap:
        raise TooManyWalls(f"{k} walls exceeds cap {wall_cap}")
    kinds = _classified(gram)

    # Any wall on an angle edge is forced into the cocluster; inside the
    # remaining candidates only orthogonal pairs are forbidden.
    blocked = set()
    for (i, j), kind in kinds.items():
        if isinstance(kind, Angle):
            blocked.update((i, j))
    candidates = [i for i in range(k) if i not in blocked]
    compatible = {
        (i, j): isinstance(kinds[(i, j)], (Tangent, Disjoint))
        for (i, j) in kinds
    }

    all_walls = frozenset(range(k))

    def extend(chosen: list[int], start: int) -> Iterator[Decomposition]:
        for idx in range(start, len(candidates)):
            w = candidates[idx]
            if all(compatible[(min(c, w), max(c, w))] for c in chosen):
                chosen.append(w)
                cluster = frozenset(chosen)
                yield Decomposition(cluster, all_walls - cluster)
                yield from extend(chosen, idx + 1)
                chosen.pop()

    yield from extend([], 0)


def enumerate_decompositions(gram: GramMatrix, wall_cap: int = 30) -> list[Decomposition]:
    return list(iter_decompositions(gram, wall_cap))
