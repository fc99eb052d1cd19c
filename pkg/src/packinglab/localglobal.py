"""Residue classes hit by the bend orbit and the bends missing from them.

Works on the linear action on bend vectors reduced mod m: the admissible
residues are those reachable from the starting bend vector, and any bend in
an admissible class that never shows up in the actual packing is reported as
missing up to the bound scanned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PackingLabError
from .exactnum import QuadExt, is_rational_integer


class NonIntegralInput(PackingLabError):
    pass


@dataclass(frozen=True)
class ResidueOrbit:
    modulus: int
    residues: frozenset[int]
    vector_count: int

    def admits(self, bend: int) -> bool:
        return bend % self.modulus in self.residues


def _as_int(x, what: str) -> int:
    if isinstance(x, int):
        return x
    q = QuadExt(x) if not isinstance(x, QuadExt) else x
    if not is_rational_integer(q):
        raise NonIntegralInput(f"{what} {q} is not a rational integer")
    return int(q.rat)


def residue_orbit(
    generators: Sequence[Sequence[Sequence]],
    start: Sequence,
    modulus: int,
) -> ResidueOrbit:
    """Breadth-first closure of the start bend vector under the generator
    matrices, everything reduced mod modulus."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    k = len(start)
    mats = []
    for g, mat in enumerate(generators):
        rows = [[_as_int(e, f"generator {g + 1} entry") % modulus for e in row] for row in mat]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"generator {g + 1} is not {k}x{k}")
        mats.append(rows)
    start_vec = tuple(_as_int(b, "bend") % modulus for b in start)

    seen = {start_vec}
    residues = set(start_vec)
    queue = deque([start_vec])
    while queue:
        vec = queue.popleft()
        for mat in mats:
            img = tuple(
                sum(mat[r][c] * vec[c] for c in range(k)) % modulus for r in range(k)
            )
            if img not in seen:
                seen.add(img)
                residues.update(img)
                queue.append(img)
    return ResidueOrbit(modulus=modulus, residues=frozenset(residues), vector_count=len(seen))


def missing_bends(
    bends: Iterable, orbit: ResidueOrbit, bound: int | None = None
) -> list[int]:
    """Admissible integers up to bound that the given bend multiset skips.

    Only positive bends are scanned; the bound defaults to the largest bend
    present.
    """
    present = {_as_int(b, "bend") for b in bends}
    if bound is None:
        if not present:
            raise ValueError("empty bend list needs an explicit bound")
        bound = max(present)
    return [
        n for n in range(1, bound + 1) if orbit.admits(n) and n not in present
    ]
