"""Numeric realization of product targets and recovery of exact coordinates.

The pipeline is: realize (damped Gauss-Newton on the wall coordinates, float64
first, then refined with extended-precision residuals), algebraic_guess
(per-value snap to (a + b*sqrt(d))/q with a bounded denominator), and
verify_realization (exact re-check of every target against the guessed walls).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .errors import PackingLabError
from .exactnum import QuadExt
from .inversive import InversiveVector, inversive_product

_REFINE_DPS = 60


class NoConvergence(PackingLabError):
    def __init__(self, iterations: int, residual: float):
        super().__init__(f"no convergence after {iterations} iterations, residual {residual:.3e}")
        self.iterations = iterations
        self.residual = residual


class GaugeDeficient(PackingLabError):
    pass


class Ambiguous(PackingLabError):
    def __init__(self, value: float, candidates: list[QuadExt]):
        shown = ", ".join(str(c) for c in candidates[:4])
        super().__init__(f"{value!r} matches several exact values within tolerance: {shown}")
        self.candidates = candidates


class NoCandidate(PackingLabError):
    pass


@dataclass(frozen=True)
class Exact:
    value: QuadExt


@dataclass(frozen=True)
class DisjointFree:
    """Pair required disjoint (product > 1) but with free separation."""


Target = Exact | DisjointFree


@dataclass
class TargetSpec:
    wall_count: int
    targets: dict[tuple[int, int], Target]
    dim: int = 2
    init_hint: tuple[tuple[float, ...], ...] | None = None  # starting walls for realize

    def __post_init__(self):
        norm = {}
        for (i, j), t in self.targets.items():
            if not (0 <= i < self.wall_count and 0 <= j < self.wall_count) or i == j:
                raise ValueError(f"bad target pair ({i},{j})")
            norm[(min(i, j), max(i, j))] = t
        self.targets = norm
        if self.init_hint is not None:
            self.init_hint = tuple(tuple(float(v) for v in row) for row in self.init_hint)

    def exact_pairs(self) -> list[tuple[int, int, QuadExt]]:
        return sorted(
            (i, j, t.value) for (i, j), t in self.targets.items() if isinstance(t, Exact)
        )

    def free_pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for (i, j), t in self.targets.items() if isinstance(t, DisjointFree))


@dataclass
class FloatWallSystem:
    """Realized walls in extended-precision floats, row per wall."""

    walls: list[list[mpmath.mpf]]
    residual: float
    iterations: int
    dim: int = 2

    def as_float_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.walls])


def target_from_gram(gram) -> TargetSpec:
    """Every off-diagonal entry becomes an exact target; placeholders stay free."""
    k = gram.size
    targets: dict[tuple[int, int], Target] = {}
    for i in range(k):
        for j in range(i + 1, k):
            if gram.is_placeholder(i, j):
                targets[(i, j)] = DisjointFree()
            else:
                targets[(i, j)] = Exact(gram.entries[i][j])
    return TargetSpec(k, targets)


def _midsphere_walls(coords, faces) -> np.ndarray:
    """Approximate wall vectors for a polyhedron given by 3D vertex
    coordinates: rescale so edges touch the unit sphere, take vertex polar
    planes and face planes, and read the stereographic images of the circles
    they cut.  A plane p.x = c with |p| = 1 projects to the wall
    (-(p3+c), p3-c, -p1, -p2)/sqrt(1-c^2)."""
    pts = np.array(coords, dtype=float)
    face_sets = [frozenset(f) for f in faces]
    edge_d = []
    for u in range(len(pts)):
        for v in range(u + 1, len(pts)):
            if sum(1 for f in face_sets if u in f and v in f) == 2:
                a, d = pts[u], pts[u] - pts[v]
                t = np.clip((a @ d) / (d @ d), 0.0, 1.0)
                edge_d.append(np.linalg.norm(a - t * d))
    pts = pts / np.median(edge_d)
    planes = []
    for v in pts:
        nv = np.linalg.norm(v)
        planes.append((v / nv, 1.0 / nv))
    for f in faces:
        fp = pts[list(f)]
        centroid = fp.mean(axis=0)
        _, _, vt = np.linalg.svd(fp - centroid)
        n = vt[-1]
        c = float(n @ centroid)
        if c < 0:
            n, c = -n, -c
        planes.append((n, c))
    walls = []
    for p, c in planes:
        s = np.sqrt(max(1.0 - c * c, 1e-12))
        walls.append(np.array([-(p[2] + c), p[2] - c, -p[0], -p[1]]) / s)
    return np.vstack(walls)


def polyhedron_target(
    vertex_count: int,
    faces: Sequence[Sequence[int]],
    coords: Sequence[Sequence[float]] | None = None,
) -> TargetSpec:
    """Vertex walls then face walls: tangency along edges of the skeleton and
    of the dual skeleton, orthogonality at incidences, everything else a free
    disjoint pair.  With 3D vertex coordinates the midsphere construction
    seeds the numeric solver."""
    face_sets = [frozenset(f) for f in faces]
    k = vertex_count + len(face_sets)
    targets: dict[tuple[int, int], Target] = {}
    for u in range(vertex_count):
        for v in range(u + 1, vertex_count):
            shared = sum(1 for f in face_sets if u in f and v in f)
            targets[(u, v)] = Exact(QuadExt(1)) if shared == 2 else DisjointFree()
    for a in range(len(face_sets)):
        for b in range(a + 1, len(face_sets)):
            shared = len(face_sets[a] & face_sets[b])
            key = (vertex_count + a, vertex_count + b)
            targets[key] = Exact(QuadExt(1)) if shared == 2 else DisjointFree()
    for u in range(vertex_count):
        for a, f in enumerate(face_sets):
            key = (u, vertex_count + a)
            targets[key] = Exact(QuadExt(0)) if u in f else DisjointFree()
    hint = None
    if coords is not None:
        if len(coords) != vertex_count:
            raise ValueError("coords must give one 3D point per vertex")
        hint = tuple(map(tuple, _midsphere_walls(coords, faces)))
    return TargetSpec(k, targets, init_hint=hint)


def cluster_split(spec: TargetSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the walls into the two connected components of the tangency
    graph; the component containing wall 0 comes first."""
    comps = _tangency_components(spec)
    if len(comps) != 2:
        raise PackingLabError(
            f"tangency graph has {len(comps)} components, expected 2; pass the cluster explicitly"
        )
    first, second = comps if 0 in comps[0] else (comps[1], comps[0])
    return tuple(first), tuple(second)


# -- initial guess ---------------------------------------------------------


def _tangency_components(spec: TargetSpec) -> list[list[int]]:
    adj = {i: set() for i in range(spec.wall_count)}
    for i, j, value in spec.exact_pairs():
        if value == 1:
            adj[i].add(j)
            adj[j].add(i)
    seen, comps = set(), []
    for start in range(spec.wall_count):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _tutte_positions(nodes: list[int], edges: list[tuple[int, int]]) -> dict[int, np.ndarray] | None:
    """Pin the first 3-clique to a triangle and relax everything else to the
    barycenter of its neighbours."""
    node_set = set(nodes)
    adj = {v: set() for v in nodes}
    for u, v in edges:
        if u in node_set and v in node_set:
            adj[u].add(v)
            adj[v].add(u)
    clique = None
    for u in nodes:
        for v in sorted(adj[u]):
            if v <= u:
                continue
            common = sorted(adj[u] & adj[v])
            if common:
                w = common[0]
                clique = (u, v, w)
                break
        if clique:
            break
    if clique is None or len(nodes) < 4:
        return None
    pinned = {
        clique[0]: np.array([0.0, 3.0]),
        clique[1]: np.array([3.0 * np.cos(np.pi * 7 / 6), 3.0 * np.sin(np.pi * 7 / 6)]),
        clique[2]: np.array([3.0 * np.cos(-np.pi / 6), 3.0 * np.sin(-np.pi / 6)]),
    }
    interior = [v for v in nodes if v not in pinned]
    if not interior:
        return pinned
    index = {v: r for r, v in enumerate(interior)}
    lap = np.zeros((len(interior), len(interior)))
    rhs = np.zeros((len(interior), 2))
    for v in interior:
        deg = max(len(adj[v]), 1)
        lap[index[v], index[v]] = deg
        for w in adj[v]:
            if w in index:
                lap[index[v], index[w]] -= 1.0
            else:
                rhs[index[v]] += pinned[w]
    try:
        sol = np.linalg.solve(lap, rhs)
    except np.linalg.LinAlgError:
        return None
    out = dict(pinned)
    for v in interior:
        out[v] = sol[index[v]]
    return out


def _initial_walls(spec: TargetSpec, rng: np.random.Generator) -> np.ndarray:
    k = spec.wall_count
    centers = np.zeros((k, 2))
    radii = np.ones(k)
    placed = np.zeros(k, dtype=bool)

    tangent_edges = [(i, j) for i, j, v in spec.exact_pairs() if v == 1]
    comps = [c for c in _tangency_components(spec) if len(c) > 1]
    primary = min(comps, key=len) if comps else []

    positions = _tutte_positions(primary, tangent_edges) if primary else None
    if positions:
        for v, p in positions.items():
            centers[v] = p
            placed[v] = True
        edges_in = [(u, v) for u, v in tangent_edges if u in positions and v in positions]
        if edges_in:
            rows = np.zeros((len(edges_in), k))
            dist = np.zeros(len(edges_in))
            for r, (u, v) in enumerate(edges_in):
                rows[r, u] = rows[r, v] = 1.0
                dist[r] = np.linalg.norm(centers[u] - centers[v])
            active = sorted({w for e in edges_in for w in e})
            sol = np.linalg.lstsq(rows[:, active], dist, rcond=None)[0]
            for w, r in zip(active, sol):
                radii[w] = max(r, 0.05 * np.median(np.abs(sol)) + 1e-3)

    # place remaining walls from their orthogonality links, if any
    ortho = {i: [] for i in range(k)}
    for i, j, value in spec.exact_pairs():
        if value == 0:
            ortho[i].append(j)
            ortho[j].append(i)
    ring = 0
    for w in range(k):
        if placed[w]:
            continue
        links = [u for u in ortho[w] if placed[u]]
        if len(links) >= 3:
            rows = np.array([[2 * centers[u][0], 2 * centers[u][1], -1.0] for u in links])
            rhs = np.array([centers[u] @ centers[u] - radii[u] ** 2 for u in links])
            cx, cy, t = np.linalg.lstsq(rows, rhs, rcond=None)[0]
            centers[w] = (cx, cy)
            rr = cx * cx + cy * cy - t
            radii[w] = np.sqrt(rr) if rr > 1e-4 else np.median(radii[placed])
        else:
            angle = 2 * np.pi * ring / max(1, k)
            centers[w] = 6.0 * np.array([np.cos(angle), np.sin(angle)])
            ring += 1
        placed[w] = True

    centers += rng.normal(0.0, 0.01, size=centers.shape)
    radii *= 1.0 + rng.normal(0.0, 0.01, size=radii.shape)
    radii = np.maximum(radii, 1e-2)

    bends = 1.0 / radii
    walls = np.zeros((k, 4))
    walls[:, 0] = bends * (centers ** 2).sum(axis=1) - radii
    walls[:, 1] = bends
    walls[:, 2] = bends * centers[:, 0]
    walls[:, 3] = bends * centers[:, 1]
    return walls


# -- solver ----------------------------------------------------------------


def _residual_np(x: np.ndarray, pairs, values, pins=()) -> np.ndarray:
    diag = x[:, 0] * x[:, 1] - (x[:, 2:] ** 2).sum(axis=1) + 1.0
    parts = [diag]
    if len(pairs):
        ii = pairs[:, 0]
        jj = pairs[:, 1]
        u, v = x[ii], x[jj]
        prod = 0.5 * (u[:, 0] * v[:, 1] + u[:, 1] * v[:, 0]) - (u[:, 2:] * v[:, 2:]).sum(axis=1)
        parts.append(prod - values)
    if pins:
        parts.append(np.array([x[i, c] - t for i, c, t in pins]))
    return np.concatenate(parts)


def _jacobian_np(x: np.ndarray, pairs, pins=()) -> np.ndarray:
    k, width = x.shape
    rows = k + len(pairs) + len(pins)
    jac = np.zeros((rows, k * width))
    for i in range(k):
        jac[i, i * width + 0] = x[i, 1]
        jac[i, i * width + 1] = x[i, 0]
        jac[i, i * width + 2:i * width + width] = -2.0 * x[i, 2:]
    for r, (i, j) in enumerate(pairs, start=k):
        u, v = x[i], x[j]
        jac[r, i * width + 0] = 0.5 * v[1]
        jac[r, i * width + 1] = 0.5 * v[0]
        jac[r, i * width + 2:i * width + width] = -v[2:]
        jac[r, j * width + 0] = 0.5 * u[1]
        jac[r, j * width + 1] = 0.5 * u[0]
        jac[r, j * width + 2:j * width + width] = -u[2:]
    for r, (i, c, _) in enumerate(pins, start=k + len(pairs)):
        jac[r, i * width + c] = 1.0
    return jac


def _gauss_newton(x, pairs, values, pins, max_iter, floor=1e-13):
    norm = np.linalg.norm(_residual_np(x, pairs, values, pins))
    iterations = 0
    for _ in range(max_iter):
        if norm < floor:
            break
        iterations += 1
        jac = _jacobian_np(x, pairs, pins)
        res = _residual_np(x, pairs, values, pins)
        step = np.linalg.lstsq(jac, -res, rcond=None)[0].reshape(x.shape)
        alpha, improved = 1.0, False
        for _ in range(25):
            trial = x + alpha * step
            trial_norm = np.linalg.norm(_residual_np(trial, pairs, values, pins))
            if trial_norm < norm:
                x, norm, improved = trial, trial_norm, True
                break
            alpha *= 0.5
        if not improved:
            break
    return x, norm, iterations


# -- frame normalization: move a solved configuration so that one wall of
# the first tangent pair is the line y=0 and the other the unit circle
# resting on it at the origin


def _float_reflection_matrix(s: np.ndarray) -> np.ndarray:
    qs = np.empty_like(s)
    qs[0] = s[1] / 2.0
    qs[1] = s[0] / 2.0
    qs[2:] = -s[2:]
    return np.eye(len(s)) + 2.0 * np.outer(qs, s)


def _circle_vec(cx: float, cy: float, r: float) -> np.ndarray:
    b = 1.0 / r
    return np.array([b * (cx * cx + cy * cy) - r, b, b * cx, b * cy])


def _rotation_matrix(cos_t: float, sin_t: float) -> np.ndarray:
    m = np.eye(4)
    m[2, 2] = cos_t
    m[2, 3] = sin_t
    m[3, 2] = -sin_t
    m[3, 3] = cos_t
    return m


def _translation_matrix(tx: float, ty: float) -> np.ndarray:
    m = np.eye(4)
    m[1, 0] = tx * tx + ty * ty
    m[1, 2] = tx
    m[1, 3] = ty
    m[2, 0] = 2.0 * tx
    m[3, 0] = 2.0 * ty
    return m


def _scale_matrix(lam: float) -> np.ndarray:
    return np.diag([lam, 1.0 / lam, 1.0, 1.0])


_E_LINE = np.array([0.0, 0.0, 0.0, -1.0])
_E_CIRCLE = np.array([0.0, 1.0, 0.0, 1.0])
_E_THIRD = np.array([4.0, 1.0, 2.0, 1.0])  # unit circle resting at (2,0)


def _parabolic_matrix(a: float) -> np.ndarray:
    """O(Q) matrix of z -> z/(1+az), which fixes the line y=0 and the unit
    circle above the origin; the parameter slides everything else around."""
    inv = _float_reflection_matrix(np.array([-1.0, 1.0, 0.0, 0.0]))
    conj = np.diag([1.0, 1.0, 1.0, -1.0])
    recip = conj @ inv
    return recip @ _translation_matrix(a, 0.0) @ recip


def _normalize_frame(x: np.ndarray, ia: int, ic: int) -> np.ndarray:
    y = x.copy()
    q = y[ia] + y[ic]  # isotropic: the tangency point of the pinned pair
    if q[1] < 0 or (abs(q[1]) < 1e-8 and q[0] < 0):
        y, q = -y, -q
    if abs(q[1]) < 1e-8:
        # pair touches at infinity; one fixed inversion brings it down
        y = y @ _float_reflection_matrix(_circle_vec(0.37, 1.29, 1.0))
        q = y[ia] + y[ic]
        if q[1] < 0:
            y, q = -y, -q
    p = q[2:] / q[1]

    a = y[ia]
    if abs(a[1]) < 0.05:
        # wall a is a line or a huge circle; one inversion centered a unit
        # step off it makes it round before we read its center
        ndir = a[2:] - a[1] * p
        ndir = ndir / np.linalg.norm(ndir)
        z0 = p + ndir
        y = y @ _float_reflection_matrix(_circle_vec(z0[0], z0[1], 1.0))
        q = y[ia] + y[ic]
        p = q[2:] / q[1]
        a = y[ia]
    za = a[2:] / a[1]
    w = 2.0 * za - p  # antipode of the tangency point on wall a
    y = y @ _float_reflection_matrix(_circle_vec(w[0], w[1], 1.0))

    a = y[ia]  # now a line up to float noise
    n = a[2:] / np.linalg.norm(a[2:])
    y = y @ _rotation_matrix(-n[1], -n[0])  # rotate normal onto (0,-1)
    a = y[ia]
    offset = a[0] / (2.0 * np.linalg.norm(a[2:]))  # line sits at y = -offset
    y = y @ _translation_matrix(0.0, offset)
    c = y[ic]
    if c[3] / c[1] < 0:  # circle below the line: mirror it up
        y = y @ np.diag([1.0, 1.0, 1.0, -1.0])
    c = y[ic]
    y = y @ _scale_matrix(abs(c[1]))
    c = y[ic]
    y = y @ _translation_matrix(-c[2] / c[1], 0.0)
    if np.linalg.norm(y[ia] + _E_LINE) < np.linalg.norm(y[ia] - _E_LINE):
        y = -y
    return y


def _fix_parabolic(y: np.ndarray, ib: int) -> np.ndarray:
    """Slide wall ib (tangent to the pinned line and circle) so it touches
    the line at x=2, killing the last continuous gauge freedom."""
    d = y[ib]
    if abs(d[1]) < 1e-8:
        a = 0.5  # wall is the parallel line y=2: z/(1+z/2) brings it down
    else:
        t = d[2] / d[1]
        if abs(t) < 1e-12:
            raise NoConvergence(0, float(abs(t)))
        a = 0.5 - 1.0 / t
    return y @ _parabolic_matrix(a)


def _gauge_pins(spec: TargetSpec) -> tuple[int, int, int, list[tuple[int, int, float]]]:
    """First mutually tangent triple becomes the frame: the line y=0, the
    unit circle resting on it at the origin, and the unit circle resting at
    (2,0).  A tangent pair alone leaves a parabolic gauge freedom sliding
    along the pair, so three walls are needed for rigidity."""
    tangent: dict[tuple[int, int], bool] = {}
    for i, j, v in spec.exact_pairs():
        if v == 1:
            tangent[(i, j)] = True
    for (i, j) in sorted(tangent):
        for k in range(spec.wall_count):
            if k in (i, j):
                continue
            if tangent.get((min(i, k), max(i, k))) and tangent.get((min(j, k), max(j, k))):
                pins = [(i, c, float(t)) for c, t in enumerate(_E_LINE)]
                pins += [(j, c, float(t)) for c, t in enumerate(_E_CIRCLE)]
                pins += [(k, c, float(t)) for c, t in enumerate(_E_THIRD)]
                return i, j, k, pins
    raise GaugeDeficient("no mutually tangent triple available to pin the frame")


def realize(
    spec: TargetSpec,
    seed: int = 0,
    tol: float = 1e-24,
    max_iter: int = 400,
    init: Sequence[Sequence[float]] | None = None,
) -> FloatWallSystem:
    """Solve for wall coordinates meeting every exact target.

    Damped Gauss-Newton with a minimum-norm least-squares step; accepted
    steps decrease the residual monotonically.  Without an explicit init the
    Moebius gauge is fixed by pinning the first tangent pair to the line y=0
    and the unit circle tangent to it at the origin, which is what makes the
    solved coordinates land on small algebraic numbers.  An explicit init is
    polished in its own frame, unpinned.  Free pairs are not constrained
    here; verify them after guessing exact coordinates.
    """
    if spec.dim != 2:
        raise GaugeDeficient("only planar targets are supported")
    exact = spec.exact_pairs()
    pairs = np.array([(i, j) for i, j, _ in exact], dtype=int).reshape(-1, 2)
    values = np.array([float(v) for _, _, v in exact])

    iterations = 0
    if init is not None:
        x = np.array(init, dtype=float)
        if x.shape != (spec.wall_count, spec.dim + 2):
            raise ValueError(f"init must be {spec.wall_count} x {spec.dim + 2}")
        pins: list[tuple[int, int, float]] = []
    else:
        ia, ic, ib, pins = _gauge_pins(spec)
        rng = np.random.default_rng(seed)
        if spec.init_hint is not None:
            x = np.array(spec.init_hint) + rng.normal(0.0, 1e-4, (spec.wall_count, 4))
        else:
            x = _initial_walls(spec, rng)
        x, norm, its = _gauss_newton(x, pairs, values, (), max_iter)
        iterations += its
        if norm >= 1e-10:
            raise NoConvergence(iterations, float(norm))
        x = _fix_parabolic(_normalize_frame(x, ia, ic), ib)
        drift = max(
            np.linalg.norm(x[ic] - _E_CIRCLE), np.linalg.norm(x[ib] - _E_THIRD)
        )
        if drift > 0.75:
            raise NoConvergence(iterations, float(drift))

    x, norm, its = _gauss_newton(x, pairs, values, pins, max_iter)
    iterations += its
    if norm >= 1e-10:
        raise NoConvergence(iterations, float(norm))

    # extended-precision polish: residuals in mpmath, steps from the float64
    # Jacobian, quadratic-to-linear convergence far past double precision
    with mpmath.workdps(_REFINE_DPS):
        xm = [[mpmath.mpf(v) for v in row] for row in x]

        def mp_value(val: QuadExt):
            out = mpmath.mpf(val.rat.numerator) / val.rat.denominator
            if val.surd:
                out += mpmath.mpf(val.surd.numerator) / val.surd.denominator * mpmath.sqrt(val.disc)
            return out

        mp_targets = [mp_value(v) for _, _, v in exact]

        def residual_mp(rows):
            out = []
            for row in rows:
                out.append(row[0] * row[1] - sum(c * c for c in row[2:]) + 1)
            for (i, j), val in zip(pairs, mp_targets):
                u, w = rows[i], rows[j]
                prod = (u[0] * w[1] + u[1] * w[0]) / 2 - sum(a * b for a, b in zip(u[2:], w[2:]))
                out.append(prod - val)
            for i, c, t in pins:
                out.append(rows[i][c] - t)
            return out

        best = residual_mp(xm)
        best_norm = max(abs(r) for r in best)
        for _ in range(20):
            if best_norm <= tol:
                break
            iterations += 1
            xf = np.array([[float(v) for v in row] for row in xm])
            jac = _jacobian_np(xf, pairs, pins)
            res = np.array([float(r) for r in best])
            step = np.linalg.lstsq(jac, -res, rcond=None)[0].reshape(xf.shape)
            trial = [
                [v + mpmath.mpf(step[i][c]) for c, v in enumerate(row)]
                for i, row in enumerate(xm)
            ]
            trial_res = residual_mp(trial)
            trial_norm = max(abs(r) for r in trial_res)
            if trial_norm >= best_norm:
                break
            xm, best, best_norm = trial, trial_res, trial_norm
        if best_norm > tol:
            raise NoConvergence(iterations, float(best_norm))
        return FloatWallSystem(walls=xm, residual=float(best_norm), iterations=iterations)


# -- exact recovery --------------------------------------------------------


def algebraic_guess(value, d: int, denom_bound: int, tol: float) -> QuadExt:
    """Snap a float to (a + b*sqrt(d))/q with q <= denom_bound.

    Raises Ambiguous when several distinct exact values fit within tol and
    NoCandidate when none does.
    """
    if denom_bound < 1:
        raise ValueError("denom_bound must be positive")
    with mpmath.workdps(_REFINE_DPS):
        xm = mpmath.mpf(value) if not isinstance(value, mpmath.mpf) else value
        xf = float(xm)
        sqrt_d = mpmath.sqrt(d) if d else mpmath.mpf(0)
        sqrt_f = float(sqrt_d)
        found: dict[tuple[Fraction, Fraction], QuadExt] = {}
        for q in range(1, denom_bound + 1):
            xq = xf * q
            slack = q * tol * 1.125 + 1e-9
            if d == 0:
                bs = np.array([0])
            else:
                b_max = int(np.floor((abs(xq) + slack + 1.0) / sqrt_f)) + 1
                bs = np.arange(-b_max, b_max + 1)
            approx = xq - bs * sqrt_f
            a_round = np.round(approx)
            keep = np.abs(approx - a_round) <= slack
            for b, a in zip(bs[keep], a_round[keep]):
                a = int(a)
                b = int(b)
                err = abs(xm * q - a - b * sqrt_d)
                if err <= q * tol:
                    key = (Fraction(a, q), Fraction(b, q))
                    if key not in found:
                        found[key] = QuadExt(key[0], key[1], d if b else 0)
                        if len(found) > 1:
                            raise Ambiguous(xf, sorted(found.values(), key=float))
        if not found:
            raise NoCandidate(f"{xf!r} has no exact match with denominator <= {denom_bound}")
        return next(iter(found.values()))


def guess_walls(
    system: FloatWallSystem, d: int, denom_bound: int, tol: float
) -> list[InversiveVector]:
    """Entrywise algebraic_guess over a realized float system."""
    out = []
    for row in system.walls:
        coords = [algebraic_guess(v, d, denom_bound, tol) for v in row]
        out.append(InversiveVector.from_coords(coords))
    return out


@dataclass
class VerificationReport:
    ok: bool
    mismatches: list[str] = field(default_factory=list)


def verify_realization(walls, spec: TargetSpec) -> VerificationReport:
    """Exact check: unit diagonal, every exact target met, free pairs disjoint.

    Accepts a WallSystem or any sequence of exact wall vectors.
    """
    walls = list(getattr(walls, "walls", walls))
    mismatches = []
    if len(walls) != spec.wall_count:
        return VerificationReport(False, [f"expected {spec.wall_count} walls, got {len(walls)}"])
    for i, w in enumerate(walls):
        if not w.validate():
            mismatches.append(f"wall {i + 1}: Q(v) = {w.q_norm()} != -1")
    for (i, j), t in sorted(spec.targets.items()):
        prod = inversive_product(walls[i], walls[j])
        if isinstance(t, Exact):
            if prod != t.value:
                mismatches.append(f"pair ({i + 1},{j + 1}): {prod} != {t.value}")
        else:
            if not prod > 1:
                mismatches.append(f"pair ({i + 1},{j + 1}): {prod} is not > 1")
    return VerificationReport(not mismatches, mismatches)
